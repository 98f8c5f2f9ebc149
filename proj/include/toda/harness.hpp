#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toda/json_codec.hpp"
#include "toda/rng.hpp"

namespace toda::harness {

enum class Mode {
  toda_run,
  bbs_run,
  jac_add,
  verify_theorem1,
  verify_torsion,
  verify_bbs_diagram,
  gen_random,
};

Mode parse_mode(const std::string& name);
std::string mode_name(Mode m);

enum class InstanceKind { toda, boxball };

/// Everything that determines a run.  The seed fully determines random
/// instance generation, so identical configs replay to identical traces.
struct ExperimentConfig {
  Mode mode = Mode::toda_run;
  int steps = 1;
  std::uint64_t seed = 0;
  FieldTag field = FieldTag::Q;
  int n = 3;        // lattice size for generated Toda states
  int cells = 14;   // N for generated box-ball states
  int height = 16;  // coefficient height bound for rational entries
  InstanceKind kind = InstanceKind::toda;  // what gen-random produces

  Json to_json() const;
};

struct CheckVerdict {
  std::string id;  // stable identifier of the identity checked
  bool pass = false;
  std::string note;
};

struct TraceRecord {
  std::string mode;
  Json config = Json::object();
  std::vector<Json> snapshots;
  std::vector<CheckVerdict> checks;
  std::string result;  // "pass" | "domain-exit" | "violation"

  void check(const std::string& id, bool pass, const std::string& note = "");
  bool all_pass() const;
  void finalize();  // sets result from the verdicts unless already set
  Json to_json() const;
};

/// CLI exit codes: 0 all checks pass, 1 flow left its domain,
/// 2 an identity was violated.  (Bad input maps to 3 in the CLI itself.)
int exit_code(const TraceRecord& trace);

// -- seeded instance generation ---------------------------------------------

/// Random Toda state over Q with nonzero entries of bounded height that
/// survives `horizon` flow steps; rejection-resamples on domain exit.
TodaState<BigRational> random_rational_state(Rng& rng, int n, int height,
                                             int horizon,
                                             bool require_generic = false);

/// Random box-ball state below critical density with at least
/// `min_solitons` solitons.
bbs::BoxBallState random_boxball_state(Rng& rng, int cells, int min_solitons);

/// Random nonnegative tropical state with entries <= height.
bbs::TropicalState random_tropical_state(Rng& rng, int n, int height);

// -- verification drivers ----------------------------------------------------

template <class F>
TraceRecord verify_theorem1(const TodaState<F>& s, int steps);

template <class F>
TraceRecord verify_torsion(const TodaState<F>& s);

TraceRecord verify_bbs_diagram(const bbs::BoxBallState& s, int steps);

template <class F>
TraceRecord toda_run(const TodaState<F>& s, int steps);

TraceRecord bbs_run(const bbs::BoxBallState& s, int steps);

TraceRecord jac_add(const Json& input);

/// Mode dispatch used by the CLI: `input` is the parsed --in file when
/// one was given, otherwise instances are generated from the config.
TraceRecord run_mode(const ExperimentConfig& cfg,
                     const std::optional<Json>& input);

}  // namespace toda::harness

#include "toda/harness_impl.hpp"
