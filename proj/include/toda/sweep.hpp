#pragma once

#include <cstddef>
#include <exception>
#include <string>
#include <vector>

namespace toda::sweep {

/// Outcome of one independent trial in a batch verification sweep.
struct Outcome {
  bool pass = false;
  std::string note;  // failure detail, empty on pass
};

enum class Execution { serial, parallel };

/// Runs `fn(i)` for i in [0, count) and collects the outcomes.  Trials
/// must be independent and pure, which the whole library guarantees
/// (immutable values, no shared caches); the parallel path is a plain
/// OpenMP loop over trial indices and must produce the same outcome
/// vector as the serial reference.  Exceptions are captured per trial as
/// failures; they must not cross the parallel region.
template <class Fn>
std::vector<Outcome> run(std::size_t count, Fn&& fn,
                         Execution how = Execution::parallel) {
  std::vector<Outcome> out(count);
  auto one = [&](std::size_t i) {
    try {
      out[i] = fn(i);
    } catch (const std::exception& e) {
      out[i] = {false, std::string("exception: ") + e.what()};
    }
  };
  if (how == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) one(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      one(static_cast<std::size_t>(i));
  }
  return out;
}

inline bool all_pass(const std::vector<Outcome>& outcomes) {
  for (const auto& o : outcomes)
    if (!o.pass) return false;
  return true;
}

inline std::string first_failure(const std::vector<Outcome>& outcomes) {
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    if (!outcomes[i].pass)
      return "trial " + std::to_string(i) + ": " + outcomes[i].note;
  return "";
}

}  // namespace toda::sweep
