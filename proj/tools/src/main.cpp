#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fidlab/error.hpp"
#include "fidlab_cli/commands.hpp"
#include "fidlab_cli/matrix_io.hpp"
#include "fidlab_cli/suites.hpp"

namespace {

using namespace fidlab;
using namespace fidlab::cli;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitInput;
  }
  out << text;
  return 0;
}

std::string render(const Report& r, const std::string& format, bool reproducible) {
  if (format == "text") return to_text(r);
  if (format == "csv") return to_csv(r);
  return to_json(r, reproducible).dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum fidelities, their polars and duality certificates"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  std::uint64_t seed = 0;
  bool reproducible = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to a file instead of stdout");
  app.add_option("--seed", seed, "Base seed")->capture_default_str();
  app.add_flag("--reproducible", reproducible, "Omit the timestamp from JSON reports");

  auto* compute = app.add_subcommand("compute", "Evaluate a pair of operators");
  std::vector<std::string> inputs;
  bool as_dual = false;
  compute->add_option("inputs", inputs, "One file with two matrices, or two files")
      ->required()
      ->expected(1, 2);
  compute->add_flag("--as-dual", as_dual, "Read the pair as dual operators (L0, L1)");

  auto* verify = app.add_subcommand("verify", "Run a seeded invariant suite");
  std::string suite;
  std::vector<int> dims{2, 3, 4};
  int trials = 100;
  verify->add_option("suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--dims", dims, "Comma-separated dimensions")->delimiter(',')->capture_default_str();
  verify->add_option("--trials", trials, "Trials per dimension")->check(CLI::PositiveNumber)->capture_default_str();

  auto* boundary = app.add_subcommand("boundary", "Sample extreme points of the qubit body M_0");
  double l = 1.0, m = 0.0;
  int samples = 100;
  boundary->add_option("--l", l, "Frame parameter l (nonzero)")->capture_default_str();
  boundary->add_option("--m", m, "Frame parameter m")->capture_default_str();
  boundary->add_option("--samples", samples, "Number of rows")->capture_default_str();

  for (auto* sub : {compute, verify, boundary}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*compute) {
      const auto [a, b] = inputs.size() == 2 ? load_pair(inputs[0], inputs[1]) : load_pair(inputs[0]);
      const ComputeResult res = compute_pair(a, b, as_dual, seed);
      std::string text;
      if (format == "text") {
        text = compute_to_text(res.values);
      } else if (format == "csv") {
        text = compute_to_csv(res.values);
      } else {
        nlohmann::json j = res.values;
        j["report"] = to_json(res.report, reproducible);
        text = j.dump(2) + "\n";
      }
      if (const int rc = emit(text, out_path)) return rc;
      return res.report.passed() ? kExitPass : kExitFail;
    }
    if (*verify) {
      const SuiteOptions opt{dims, trials, seed, default_threads()};
      const Report r = run_suite(suite, opt);
      if (const int rc = emit(render(r, format, reproducible), out_path)) return rc;
      return r.passed() ? kExitPass : kExitFail;
    }
    if (*boundary) {
      return emit(boundary_csv(l, m, samples), out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
