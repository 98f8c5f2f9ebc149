#include "toda/harness.hpp"

#include "toda/sweep.hpp"

namespace toda::harness {

Mode parse_mode(const std::string& name) {
  if (name == "toda-run") return Mode::toda_run;
  if (name == "bbs-run") return Mode::bbs_run;
  if (name == "jac-add") return Mode::jac_add;
  if (name == "verify-theorem1") return Mode::verify_theorem1;
  if (name == "verify-torsion") return Mode::verify_torsion;
  if (name == "verify-bbs-diagram") return Mode::verify_bbs_diagram;
  if (name == "gen-random") return Mode::gen_random;
  throw BadInput("unknown mode: " + name);
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::toda_run: return "toda-run";
    case Mode::bbs_run: return "bbs-run";
    case Mode::jac_add: return "jac-add";
    case Mode::verify_theorem1: return "verify-theorem1";
    case Mode::verify_torsion: return "verify-torsion";
    case Mode::verify_bbs_diagram: return "verify-bbs-diagram";
    case Mode::gen_random: return "gen-random";
  }
  throw BadInput("unknown mode");
}

Json ExperimentConfig::to_json() const {
  return Json{{"mode", mode_name(mode)}, {"steps", steps},
              {"seed", seed},           {"field", field_name(field)},
              {"n", n},                 {"cells", cells},
              {"height", height},
              {"kind", kind == InstanceKind::toda ? "toda" : "bbs"}};
}

void TraceRecord::check(const std::string& id, bool pass, const std::string& note) {
  checks.push_back({id, pass, note});
}

bool TraceRecord::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void TraceRecord::finalize() {
  if (result.empty()) result = all_pass() ? "pass" : "violation";
}

Json TraceRecord::to_json() const {
  Json checks_json = Json::array();
  for (const auto& c : checks)
    checks_json.push_back(Json{{"id", c.id}, {"pass", c.pass}, {"note", c.note}});
  return Json{{"schema", "toda-gauss/1"},
              {"mode", mode},
              {"config", config},
              {"snapshots", snapshots},
              {"checks", std::move(checks_json)},
              {"result", result}};
}

int exit_code(const TraceRecord& trace) {
  if (trace.result == "pass") return 0;
  if (trace.result == "domain-exit") return 1;
  return 2;
}

TodaState<BigRational> random_rational_state(Rng& rng, int n, int height,
                                             int horizon, bool require_generic) {
  if (n < 2 || height < 1) throw BadInput("bad bounds for random state");
  auto pick = [&]() {
    std::int64_t num = 0;
    while (num == 0) num = rng.range(-height, height);
    std::int64_t den = rng.range(1, height);
    return BigRational(static_cast<long>(num), static_cast<long>(den));
  };
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<BigRational> I, V;
    for (int i = 0; i < n; ++i) I.push_back(pick());
    for (int i = 0; i < n; ++i) V.push_back(pick());
    TodaState<BigRational> s(std::move(I), std::move(V));
    try {
      TodaState<BigRational> cur = s;
      for (int t = 0; t < horizon; ++t) cur = toda_step(cur);
      if (require_generic && n >= 3) {
        EigenvectorData<BigRational> e = uvw(s);
        if (e.u.coeff(0).is_zero()) continue;
        if (e.v.degree() != s.n - 2) continue;
      }
      return s;
    } catch (const DomainExit&) {
      continue;
    }
  }
  throw BadInput("exhausted the resample budget for random Toda states");
}

bbs::BoxBallState random_boxball_state(Rng& rng, int cells, int min_solitons) {
  if (cells < 2 * min_solitons + 1)
    throw BadInput("too few cells for the requested soliton count");
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::vector<uint8_t> bits(static_cast<size_t>(cells), 0);
    // density target just under 1/2 keeps the soliton search fast
    int balls = static_cast<int>(rng.range(min_solitons, (cells - 1) / 2));
    int placed = 0;
    while (placed < balls) {
      auto i = static_cast<size_t>(rng.range(0, cells - 1));
      if (!bits[i]) {
        bits[i] = 1;
        ++placed;
      }
    }
    bbs::BoxBallState s(std::move(bits));
    if (s.ball_count() * 2 < cells && s.soliton_count() >= min_solitons) return s;
  }
  throw BadInput("exhausted the resample budget for box-ball states");
}

bbs::TropicalState random_tropical_state(Rng& rng, int n, int height) {
  // Subcritical regime sum(Q) <= sum(W), the tropical image of the
  // density bound #balls < N/2.  Above it the monomial lift develops
  // leading-term cancellations and valuations stop being min-plus.
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::vector<std::int64_t> Q, W;
    std::int64_t sq = 0, sw = 0;
    for (int i = 0; i < n; ++i) {
      Q.push_back(rng.range(0, height));
      sq += Q.back();
    }
    for (int i = 0; i < n; ++i) {
      W.push_back(rng.range(0, height));
      sw += W.back();
    }
    if (sq <= sw) return bbs::TropicalState(std::move(Q), std::move(W));
  }
  throw BadInput("exhausted the resample budget for tropical states");
}

TraceRecord verify_bbs_diagram(const bbs::BoxBallState& s, int steps) {
  TraceRecord tr;
  tr.mode = "verify-bbs-diagram";
  if (2 * s.ball_count() >= s.size())
    throw BadInput("box-ball state at or above critical density");
  if (s.soliton_count() < 3)
    throw BadInput("the Jacobian layer needs at least 3 solitons");

  bbs::CyclicClass eta0 = bbs::eta(s);
  tr.snapshots.push_back(
      Json{{"t", 0}, {"bbs", encode(s)}, {"eta", encode(eta0.representative)}});

  // square (i): eta intertwines the box-ball flow with the tropical flow,
  // as cyclic classes
  {
    bbs::BoxBallState cur = s;
    bbs::TropicalState trop = eta0.representative;
    for (int t = 1; t <= steps; ++t) {
      cur = bbs::bbs_step(cur);
      trop = bbs::tropical_step(trop);
      tr.check("thm2.eta.step" + std::to_string(t),
               bbs::eta(cur) == bbs::cyclic_canonicalize(trop));
      tr.check("thm2.balls.step" + std::to_string(t),
               cur.ball_count() == s.ball_count() &&
                   cur.soliton_count() == s.soliton_count());
      tr.snapshots.push_back(Json{{"t", t}, {"bbs", encode(cur)}});
    }
  }

  // square (ii): the monomial lift followed by the exact flow followed by
  // T-adic valuations reproduces the tropical flow
  {
    bbs::TropicalState x = eta0.representative;
    for (int t = 1; t <= steps; ++t) {
      TodaState<RationalFunction> lifted = bbs::t_lift(x);
      tr.check("thm2.lift.step" + std::to_string(t), bbs::tropicalize(lifted) == x);
      TodaState<RationalFunction> evolved = toda_step(lifted);
      bbs::TropicalState next = bbs::tropical_step(x);
      tr.check("thm2.val.step" + std::to_string(t),
               bbs::tropicalize(evolved) == next);
      x = next;
    }
  }

  // square (iii): over Q(T), the box-ball flow becomes addition of D
  // modulo the cyclic torsion subgroup.  The Q(T) column is the
  // Toda orbit of the initial lift (its curve is flow- and
  // shift-invariant); the box-ball side enters through the rotation that
  // aligns the orbit's valuations with eta of the evolved state, and
  // that rotation is what the Cn witness absorbs.
  {
    TodaState<RationalFunction> s_T = bbs::t_lift(eta0.representative);
    CurvePtr<RationalFunction> curve = spectral_curve(s_T);
    MumfordDivisor<RationalFunction> psi0 = eigenvector_map(s_T);
    MumfordDivisor<RationalFunction> big_d = divisor_D(s_T);
    tr.snapshots.push_back(Json{{"curve", encode(*curve)}, {"psi", encode(psi0)}});

    bbs::BoxBallState cur = s;
    TodaState<RationalFunction> cur_T = s_T;
    MumfordDivisor<RationalFunction> rhs = psi0;
    for (int t = 1; t <= steps; ++t) {
      cur = bbs::bbs_step(cur);
      cur_T = toda_step(cur_T);
      rhs = add(rhs, big_d);
      tr.check("thm2.curve.step" + std::to_string(t),
               *spectral_curve(cur_T) == *curve);
      auto [aligned, rot] = bbs::equal_mod_sigma(bbs::tropicalize(cur_T),
                                                 bbs::eta(cur).representative);
      tr.check("thm2.sigma.step" + std::to_string(t), aligned,
               "rotation j=" + std::to_string(rot));
      if (!aligned) continue;
      MumfordDivisor<RationalFunction> lhs =
          eigenvector_map(cyclic_shift(cur_T, rot));
      auto [ok, witness] = equal_mod_torsion(lhs, rhs);
      tr.check("thm2.jac.step" + std::to_string(t), ok,
               "witness k=" + std::to_string(witness));
    }
  }
  tr.finalize();
  return tr;
}

TraceRecord bbs_run(const bbs::BoxBallState& s, int steps) {
  TraceRecord tr;
  tr.mode = "bbs-run";
  tr.snapshots.push_back(Json{{"t", 0}, {"state", encode(s)}});
  bbs::BoxBallState cur = s;
  for (int t = 1; t <= steps; ++t) {
    bbs::BoxBallState next = bbs::bbs_step(cur);
    const std::string suffix = ".step" + std::to_string(t);
    tr.check("bbs.oracle" + suffix, next == bbs::bbs_step_sequential(cur));
    tr.check("bbs.balls" + suffix, next.ball_count() == cur.ball_count());
    tr.check("bbs.solitons" + suffix,
             next.soliton_count() == cur.soliton_count());
    cur = std::move(next);
    tr.snapshots.push_back(Json{{"t", t}, {"state", encode(cur)}});
  }
  tr.finalize();
  return tr;
}

namespace {

template <class F>
TraceRecord jac_add_typed(const Json& input) {
  CurvePtr<F> curve = decode_curve<F>(input.at("curve"));
  MumfordDivisor<F> a = decode_divisor<F>(input.at("a"), curve);
  MumfordDivisor<F> b = decode_divisor<F>(input.at("b"), curve);
  TraceRecord tr;
  tr.mode = "jac-add";
  Membership ma = validate_membership(a), mb = validate_membership(b);
  tr.check("jac.membership.a", ma.ok, ma.reason);
  tr.check("jac.membership.b", mb.ok, mb.reason);
  if (ma.ok && mb.ok) {
    MumfordDivisor<F> sum = add(a, b);
    Membership ms = validate_membership(sum);
    tr.check("jac.membership.sum", ms.ok, ms.reason);
    tr.snapshots.push_back(Json{{"curve", encode(*curve)},
                                {"a", encode(a)},
                                {"b", encode(b)},
                                {"sum", encode(sum)}});
  }
  tr.finalize();
  return tr;
}

// Accept bare instance files as well as the traces gen-random writes.
Json unwrap_instance(const Json& j) {
  if (j.is_object()) {
    if (j.contains("instance")) return j.at("instance");
    if (j.contains("snapshots") && j.at("snapshots").is_array() &&
        !j.at("snapshots").empty() && j.at("snapshots")[0].is_object() &&
        j.at("snapshots")[0].contains("instance"))
      return j.at("snapshots")[0].at("instance");
  }
  return j;
}

TodaState<RationalFunction> random_qt_state(Rng& rng, int n, int height) {
  // monomial states: the Q(T) phase space the tropical layer lives in
  return bbs::t_lift(random_tropical_state(rng, n, height));
}

}  // namespace

TraceRecord jac_add(const Json& input) {
  const Json payload = unwrap_instance(input);
  const std::string field =
      payload.contains("field") ? payload.at("field").get<std::string>() : "Q";
  if (field == "Q") return jac_add_typed<BigRational>(payload);
  return jac_add_typed<RationalFunction>(payload);
}

TraceRecord run_mode(const ExperimentConfig& cfg, const std::optional<Json>& input) {
  Rng rng(cfg.seed);
  auto state_input = [&]() -> AnyTodaState {
    if (input) return decode_state(unwrap_instance(*input));
    if (cfg.field == FieldTag::Q)
      return random_rational_state(rng, cfg.n, cfg.height, cfg.steps);
    return random_qt_state(rng, cfg.n, cfg.height);
  };
  auto bbs_input = [&]() -> bbs::BoxBallState {
    if (input) {
      const Json payload = unwrap_instance(*input);
      return bbs::BoxBallState::parse(payload.is_string()
                                          ? payload.get<std::string>()
                                          : payload.at("state").get<std::string>());
    }
    return random_boxball_state(rng, cfg.cells, 3);
  };

  TraceRecord tr;
  switch (cfg.mode) {
    case Mode::toda_run:
      tr = std::visit([&](const auto& s) { return toda_run(s, cfg.steps); },
                      state_input());
      break;
    case Mode::bbs_run:
      tr = bbs_run(bbs_input(), cfg.steps);
      break;
    case Mode::jac_add:
      if (!input) throw BadInput("jac-add needs an --in file");
      tr = jac_add(*input);
      break;
    case Mode::verify_theorem1:
      tr = std::visit(
          [&](const auto& s) { return verify_theorem1(s, cfg.steps); },
          state_input());
      break;
    case Mode::verify_torsion:
      tr = std::visit([&](const auto& s) { return verify_torsion(s); },
                      state_input());
      break;
    case Mode::verify_bbs_diagram:
      tr = verify_bbs_diagram(bbs_input(), cfg.steps);
      break;
    case Mode::gen_random: {
      tr.mode = "gen-random";
      if (cfg.kind == InstanceKind::boxball) {
        tr.snapshots.push_back(
            Json{{"instance", encode(random_boxball_state(rng, cfg.cells, 1))}});
      } else if (cfg.field == FieldTag::Q) {
        tr.snapshots.push_back(
            Json{{"instance",
                  encode(random_rational_state(rng, cfg.n, cfg.height,
                                               std::max(cfg.steps, 1)))}});
      } else {
        tr.snapshots.push_back(
            Json{{"instance", encode(random_qt_state(rng, cfg.n, cfg.height))}});
      }
      tr.check("gen.ok", true);
      tr.finalize();
      break;
    }
  }
  tr.config = cfg.to_json();
  return tr;
}

}  // namespace toda::harness
