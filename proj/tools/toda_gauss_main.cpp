// toda-gauss: exact discrete periodic Toda / Jacobian / box-ball toolbox.
//
//   toda-gauss <mode> [--in state.json] [--steps K] [--seed S]
//              [--field Q|QT] [--out trace.json] [--n N] [--cells N] [--height H]
//
// Modes: toda-run, bbs-run, jac-add, verify-theorem1, verify-torsion,
// verify-bbs-diagram, gen-random.  Exit codes: 0 = all checks pass,
// 1 = flow left its domain, 2 = identity violation, 3 = bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "toda/harness.hpp"

namespace {

toda::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw toda::BadInput("cannot open input file: " + path);
  toda::Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw toda::BadInput(std::string("invalid JSON: ") + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw toda::BadInput("cannot open output file: " + path);
  out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact periodic Toda flow, Mumford Jacobians and box-ball verification"};
  app.name("toda-gauss");

  std::string mode_name;
  std::string in_path, out_path;
  std::string field = "Q";
  std::string kind = "toda";
  toda::harness::ExperimentConfig cfg;

  app.add_option("mode", mode_name,
                 "toda-run | bbs-run | jac-add | verify-theorem1 | "
                 "verify-torsion | verify-bbs-diagram | gen-random")
      ->required();
  app.add_option("--in", in_path, "input state/divisor JSON file");
  app.add_option("--steps", cfg.steps, "number of flow steps");
  app.add_option("--seed", cfg.seed, "seed for generated instances");
  app.add_option("--field", field, "base field: Q or QT");
  app.add_option("--out", out_path, "trace JSON output file");
  app.add_option("--n", cfg.n, "lattice size for generated Toda states");
  app.add_option("--cells", cfg.cells, "ring size for generated box-ball states");
  app.add_option("--height", cfg.height, "coefficient height bound");
  app.add_option("--kind", kind, "gen-random instance kind: toda or bbs");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.mode = toda::harness::parse_mode(mode_name);
    if (field == "Q") {
      cfg.field = toda::FieldTag::Q;
    } else if (field == "QT" || field == "Q(T)") {
      cfg.field = toda::FieldTag::QT;
    } else {
      throw toda::BadInput("--field must be Q or QT");
    }
    if (cfg.steps < 0) throw toda::BadInput("--steps must be >= 0");
    if (kind == "toda") {
      cfg.kind = toda::harness::InstanceKind::toda;
    } else if (kind == "bbs") {
      cfg.kind = toda::harness::InstanceKind::boxball;
    } else {
      throw toda::BadInput("--kind must be toda or bbs");
    }

    std::optional<toda::Json> input;
    if (!in_path.empty()) input = read_json_file(in_path);

    toda::harness::TraceRecord trace = toda::harness::run_mode(cfg, input);
    const std::string text = trace.to_json().dump(2);
    if (!out_path.empty())
      write_text_file(out_path, text);
    else
      std::cout << text << "\n";

    for (const auto& c : trace.checks)
      if (!c.pass)
        std::cerr << "[check failed] " << c.id
                  << (c.note.empty() ? "" : ": " + c.note) << "\n";
    return toda::harness::exit_code(trace);
  } catch (const toda::DomainExit& e) {
    std::cerr << "domain exit: " << e.what() << "\n";
    return 1;
  } catch (const toda::IdentityViolation& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return 2;
  } catch (const toda::BadInput& e) {
    std::cerr << "bad input: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
