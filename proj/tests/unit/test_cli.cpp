#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fidlab/error.hpp"
#include "fidlab/qubit_geom.hpp"
#include "fidlab_cli/commands.hpp"
#include "fidlab_cli/matrix_io.hpp"
#include "fidlab_cli/suites.hpp"

using namespace fidlab;
using namespace fidlab::cli;
using nlohmann::json;

namespace {

const double kDiagValue = std::sqrt(0.125) + std::sqrt(0.375);

json diag_json(double a, double b) {
  return {{"dim", 2}, {"entries", {{{a, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {b, 0.0}}}}};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "fidlab_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(const std::string& args) {
  const int status = std::system((std::string(FIDLAB_EXE) + " " + args + " > /dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(MatrixIo, RoundTrip) {
  Matrix m(2, 2);
  m << 1.0, Complex(0.2, -0.3), Complex(0.2, 0.3), 2.0;
  const HermitianMatrix h(m);
  const HermitianMatrix back = matrix_from_json(matrix_to_json(h));
  EXPECT_EQ((back.matrix() - h.matrix()).norm(), 0.0);
}

TEST(MatrixIo, SymmetrizesSmallAsymmetryAndRejectsLarge) {
  json j = diag_json(1.0, 1.0);
  j["entries"][0][1] = {1e-8, 0.0};
  EXPECT_NEAR(matrix_from_json(j)(0, 1).real(), 5e-9, 1e-20);
  j["entries"][0][1] = {1e-3, 0.0};
  EXPECT_EQ(code_of([&] { matrix_from_json(j); }), ErrorCode::ParseError);
}

TEST(MatrixIo, RejectsMalformed) {
  EXPECT_EQ(code_of([] { matrix_from_json(json::array()); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { matrix_from_json({{"dim", 2}, {"entries", {{{1, 0}}}}}); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { matrix_from_json({{"dim", 1}, {"entries", {{{1, "x"}}}}}); }), ErrorCode::ParseError);
  const auto p = scratch("bad.json");
  write(p, "{not json");
  EXPECT_EQ(code_of([&] { load_pair(p.string()); }), ErrorCode::ParseError);
}

TEST(Compute, HalfIdentityPair) {
  const HermitianMatrix h = HermitianMatrix::identity(2) * 0.5;
  const ComputeResult r = compute_pair(h, h, false, 0);
  for (const char* k : {"max", "min", "half"}) {
    EXPECT_NEAR(r.values["fidelity"][k].get<double>(), 1.0, 1e-12) << k;
    EXPECT_NEAR(r.values["polar"][k].get<double>(), 1.0, 1e-9) << k;
  }
  EXPECT_TRUE(r.report.passed());
}

TEST(Compute, DiagonalPairReducesToClassical) {
  const ComputeResult r =
      compute_pair(matrix_from_json(diag_json(0.5, 0.5)), matrix_from_json(diag_json(0.25, 0.75)), false, 0);
  for (const char* k : {"max", "min", "half"}) {
    EXPECT_NEAR(r.values["fidelity"][k].get<double>(), kDiagValue, 1e-12) << k;
    EXPECT_NEAR(r.values["fidelity"][k].get<double>(), 0.9659258, 1e-7) << k;
    EXPECT_TRUE(r.values["certificates"][k]["valid"].get<bool>()) << k;
  }
}

TEST(Compute, DualModeSkipsFidelities) {
  const HermitianMatrix id = HermitianMatrix::identity(2);
  const ComputeResult r = compute_pair(id, id, true, 0);
  EXPECT_FALSE(r.values.contains("fidelity"));
  EXPECT_NEAR(r.values["polar"]["max"].get<double>(), 2.0, 1e-12);
  EXPECT_TRUE(r.values["membership"]["min"].get<bool>());
}

TEST(Compute, RejectsNonPsd) {
  const HermitianMatrix bad = HermitianMatrix::diagonal({1.0, -0.5});
  EXPECT_EQ(code_of([&] { compute_pair(bad, bad, false, 0); }), ErrorCode::NotPsd);
}

TEST(Boundary, HeaderRowsEndpointsAndMembership) {
  const std::string csv = boundary_csv(1.0, 0.0, 100);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "s,alpha,x,y,z,w,w_min");
  const M0Frame frame = M0Frame::canonical(1.0, 0.0);
  int rows = 0;
  double smin = 1e9, smax = -1e9;
  while (std::getline(in, line)) {
    double v[7];
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%lf", v, v + 1, v + 2, v + 3, v + 4, v + 5, v + 6), 7);
    smin = std::min(smin, v[0]);
    smax = std::max(smax, v[0]);
    EXPECT_TRUE(m0_membership(frame, {v[2], v[3], v[4], v[5]}));
    EXPECT_NEAR(v[5], v[6], 1e-9);
    ++rows;
  }
  EXPECT_EQ(rows, 100);
  EXPECT_EQ(smin, -2.0);
  EXPECT_EQ(smax, 2.0);
  EXPECT_EQ(code_of([] { boundary_csv(0.0, 1.0, 10); }), ErrorCode::DegenerateFrame);
}

TEST(Suites, UnknownSuite) {
  EXPECT_EQ(code_of([] { run_suite("nope", {}); }), ErrorCode::UnknownSuite);
}

TEST(Suites, SandwichExample) {
  const Report r = run_suite("sandwich", {{2, 3, 4}, 200, 42, 1});
  EXPECT_EQ(r.trials, 600);
  EXPECT_TRUE(r.passed());
}

TEST(Suites, ErrataExample) {
  const Report r = run_suite("errata", {{2, 3}, 20, 1, 1});
  EXPECT_TRUE(r.passed());
}

TEST(Suites, ParallelMatchesSerial) {
  const SuiteOptions serial{{2, 3}, 30, 5, 1}, parallel{{2, 3}, 30, 5, 4};
  EXPECT_EQ(to_json(run_suite("fidelity-props", serial), true),
            to_json(run_suite("fidelity-props", parallel), true));
}

TEST(Executable, ExitCodes) {
  const auto pair = scratch("pair.json"), bad = scratch("bad.json"), neg = scratch("neg.json");
  write(pair, json::array({diag_json(0.5, 0.5), diag_json(0.25, 0.75)}).dump());
  write(bad, "{not json");
  write(neg, json::array({diag_json(1.0, -1.0), diag_json(1.0, 1.0)}).dump());
  EXPECT_EQ(run("compute " + pair.string()), 0);
  EXPECT_EQ(run("compute " + bad.string()), 2);
  EXPECT_EQ(run("compute " + neg.string()), 2);
  EXPECT_EQ(run("verify nope"), 2);
  EXPECT_EQ(run("verify errata --seed 1 --dims 2"), 0);
  EXPECT_EQ(run("boundary --l 0"), 2);
}

TEST(Executable, ReproducibleReportsAreByteIdentical) {
  const auto a = scratch("a.json"), b = scratch("b.json");
  const std::string args = "verify sandwich --dims 2,3 --trials 20 --seed 9 --reproducible --out ";
  ASSERT_EQ(run(args + a.string()), 0);
  ASSERT_EQ(run("--format json " + args + b.string()), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(json::parse(slurp(a)).contains("timestamp"));
}

TEST(Executable, BoundaryWritesFile) {
  const auto out = scratch("boundary.csv");
  ASSERT_EQ(run("boundary --l 1 --m 0 --samples 100 --out " + out.string()), 0);
  const std::string csv = slurp(out);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "s,alpha,x,y,z,w,w_min");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 101);
}
