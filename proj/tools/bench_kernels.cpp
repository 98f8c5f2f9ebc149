// Compares the serial reference sweep against the OpenMP sweep on the
// three heavy verification kernels and reports timings.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "toda/harness.hpp"
#include "toda/mumford.hpp"
#include "toda/sweep.hpp"

using namespace toda;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

struct Kernel {
  std::string name;
  std::size_t trials;
  sweep::Outcome (*fn)(std::size_t);
};

sweep::Outcome lemma_suite_trial(std::size_t i) {
  Rng rng(0x500 + i);
  auto s = harness::random_rational_state(rng, 5, 16, 1);
  EigenvectorData<BigRational> e = uvw(s);
  const CurveModel<BigRational>& c = *e.curve;
  bool ok = divides(e.u, membership_norm(e.w, c)) &&
            divides(e.u_next, membership_norm(e.w_next, c));
  const BigRational in = s.at_I(s.n);
  ok = ok && (-in) * e.u + e.v == (-in) * e.u_next + e.w_next;
  return {ok, ok ? "" : "lemma identities failed"};
}

sweep::Outcome bbs_diagram_trial(std::size_t i) {
  // all 12-cell states below critical density, indexed by bit pattern
  const int n = 12;
  std::vector<uint8_t> bits(n);
  for (int b = 0; b < n; ++b) bits[b] = (i >> b) & 1;
  bbs::BoxBallState s(bits);
  if (2 * s.ball_count() >= n || s.ball_count() == 0) return {true, ""};
  bbs::BoxBallState next = bbs::bbs_step(s);
  bool ok = next == bbs::bbs_step_sequential(s);
  ok = ok && bbs::eta(next) ==
                 bbs::cyclic_canonicalize(bbs::tropical_step(bbs::eta(s).representative));
  return {ok, ok ? "" : "box-ball diagram failed at state " + s.str()};
}

sweep::Outcome theorem1_trial(std::size_t i) {
  Rng rng(0x700 + i);
  auto s = harness::random_rational_state(rng, 4, 9, 3);
  harness::TraceRecord tr = harness::verify_theorem1(s, 3);
  return {tr.all_pass(), tr.all_pass() ? "" : "theorem-1 pipeline failed"};
}

}  // namespace

int main() {
  const Kernel kernels[] = {
      {"lemma-identity suite (n=5, Q)", 64, lemma_suite_trial},
      {"box-ball diagram (exhaustive N=12)", std::size_t(1) << 12, bbs_diagram_trial},
      {"theorem-1 pipeline (n=4, 3 steps)", 16, theorem1_trial},
  };

  std::printf("threads available: %d\n\n", omp_get_max_threads());
  std::printf("%-38s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "speedup");
  for (const auto& k : kernels) {
    double t0 = now_seconds();
    auto serial = sweep::run(k.trials, k.fn, sweep::Execution::serial);
    double t1 = now_seconds();
    auto parallel = sweep::run(k.trials, k.fn, sweep::Execution::parallel);
    double t2 = now_seconds();
    const bool agree = serial.size() == parallel.size();
    bool pass = sweep::all_pass(serial) && sweep::all_pass(parallel) && agree;
    for (std::size_t i = 0; agree && i < serial.size(); ++i)
      pass = pass && serial[i].pass == parallel[i].pass;
    std::printf("%-38s %10.3f %10.3f %7.2fx %s\n", k.name.c_str(), t1 - t0,
                t2 - t1, (t1 - t0) / (t2 - t1 > 0 ? t2 - t1 : 1e-9),
                pass ? "" : "[MISMATCH]");
    if (!pass) return 1;
  }
  return 0;
}
