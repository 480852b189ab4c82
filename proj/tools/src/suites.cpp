#include "fidlab_cli/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <thread>

#include "fidlab/fidlab.hpp"

namespace fidlab::cli {

namespace {

constexpr Kind kKinds[] = {Kind::Max, Kind::Min, Kind::Half};

// Collects failed comparisons for one trial.
class Checks {
 public:
  explicit Checks(std::string id) : id_(std::move(id)) {}

  void near(const std::string& q, double expected, double actual, double tol) {
    if (!(std::abs(expected - actual) <= tol)) fail(q, expected, actual, tol);
  }
  // actual ≤ bound + tol
  void at_most(const std::string& q, double actual, double bound, double tol) {
    if (!(actual <= bound + tol)) fail(q, bound, actual, tol);
  }
  void at_least(const std::string& q, double actual, double bound, double tol) {
    if (!(actual >= bound - tol)) fail(q, bound, actual, tol);
  }
  void truth(const std::string& q, bool ok) {
    if (!ok) fail(q, 1.0, 0.0, 0.0);
  }
  void fail(const std::string& q, double expected, double actual, double tol) {
    failures_.push_back({id_, q, expected, actual, tol});
  }

  std::vector<Failure>& failures() { return failures_; }

 private:
  std::string id_;
  std::vector<Failure> failures_;
};

std::string kind_label(const std::string& prefix, Kind k) {
  return prefix + "_" + std::string(to_string(k));
}

HermitianMatrix random_operator(int d, Rng& rng) {
  const int rank = 1 + static_cast<int>(rng.uniform(0, d - 1e-9));
  return random_density(d, rng, rank) * std::exp(0.5 * rng.normal());
}

HermitianMatrix random_pd(int d, Rng& rng, double floor = 0.05) {
  return random_psd(d, rng) * std::exp(0.5 * rng.normal()) + HermitianMatrix::identity(d) * floor;
}

std::vector<double> random_weights(int d, Rng& rng, double lo = 0.0) {
  std::vector<double> w(d);
  for (double& v : w) v = rng.uniform(lo, 1.0);
  return w;
}

struct TrialSpec {
  int dim;
  int index;
};

using TrialFn = std::function<void(Checks&, Rng&, int dim)>;

// Runs fn once per (dim, trial) with a seed derived from (seed, dim, trial), in
// parallel when threads > 1. Failures are merged in case-id order.
Report run_trials(const std::string& suite, const SuiteOptions& opt, const std::vector<int>& dims,
                  const TrialFn& fn) {
  std::vector<TrialSpec> specs;
  for (int d : dims)
    for (int t = 0; t < opt.trials; ++t) specs.push_back({d, t});

  std::vector<std::vector<Failure>> results(specs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < specs.size(); i = next++) {
      const TrialSpec& s = specs[i];
      char id[64];
      std::snprintf(id, sizeof id, "d%d/t%05d", s.dim, s.index);
      Checks c(id);
      Rng rng(derive_seed(derive_seed(opt.seed, static_cast<std::uint64_t>(s.dim)),
                          static_cast<std::uint64_t>(s.index)));
      try {
        fn(c, rng, s.dim);
      } catch (const std::exception& e) {
        c.fail(std::string("exception: ") + e.what(), 0.0, 1.0, 0.0);
      }
      results[i] = std::move(c.failures());
    }
  };
  const int n_threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(specs.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Report r{suite, static_cast<int>(specs.size()), {}, opt.seed};
  for (auto& v : results) r.failures.insert(r.failures.end(), v.begin(), v.end());
  r.sort();
  return r;
}

void fidelity_props(Checks& c, Rng& rng, int d) {
  const HermitianMatrix x = random_operator(d, rng), y = random_operator(d, rng);
  const Matrix u = haar_unitary(d, rng);
  const HermitianMatrix x2 = random_pd_density(2, rng), y2 = random_pd_density(2, rng);
  const HermitianMatrix x1 = random_pd_density(d, rng), y1 = random_pd_density(d, rng);
  const double lam = rng.uniform();
  const std::vector<double> p = random_weights(d, rng), q = random_weights(d, rng);

  for (Kind k : kKinds) {
    const double f = fidelity(k, x, y);
    c.near(kind_label("symmetry", k), f, fidelity(k, y, x), 1e-9);
    c.near(kind_label("homogeneity", k), std::sqrt(2.7 * 0.3) * f, fidelity(k, x * 2.7, y * 0.3),
           1e-9 * (1 + f));
    c.near(kind_label("unitary_invariance", k), f,
           fidelity(k, congruence(u, x), congruence(u, y)), 1e-9 * (1 + f));
    c.near(kind_label("self", k), x.trace(), fidelity(k, x, x), 1e-9 * (1 + x.trace()));
    c.near(kind_label("direct_sum", k), f + fidelity(k, x2, y2),
           fidelity(k, direct_sum(x, x2), direct_sum(y, y2)), 1e-9);
    c.at_least(kind_label("joint_concavity", k),
               fidelity(k, x1 * lam + x * (1 - lam), y1 * lam + y * (1 - lam)),
               lam * fidelity(k, x1, y1) + (1 - lam) * f, 1e-8);
    c.near(kind_label("classical_reduction", k), classical_fidelity(p, q),
           fidelity(k, HermitianMatrix::diagonal(p), HermitianMatrix::diagonal(q)), 1e-9);
  }
}

void sandwich(Checks& c, Rng& rng, int d) {
  const HermitianMatrix x = random_operator(d, rng), y = random_operator(d, rng);
  const double fmax = fidelity_max(x, y), fmin = fidelity_min(x, y), fhalf = fidelity_half(x, y);
  c.at_most("min<=half", fmin, fhalf, 1e-8);
  c.at_most("half<=max", fhalf, fmax, 1e-8);
}

void monotonicity(Checks& c, Rng& rng, int d) {
  const int dout = 2 + static_cast<int>(rng.uniform(0, d - 1e-9));
  const int env = (d + dout - 1) / dout + static_cast<int>(rng.uniform(0, 2 - 1e-9));
  const KrausChannel ch = random_cptp(d, dout, env, rng.engine()());

  const HermitianMatrix x = random_operator(d, rng), y = random_operator(d, rng);
  const HermitianMatrix cx = apply(ch, x), cy = apply(ch, y);
  for (Kind k : kKinds) c.at_least(kind_label("channel", k), fidelity(k, cx, cy), fidelity(k, x, y), 1e-8);

  const HermitianMatrix l0 = random_pd(dout, rng, 0.1), l1 = random_pd(dout, rng, 0.1);
  const KrausChannel adj = adjoint(ch);
  const HermitianMatrix m0 = apply(adj, l0), m1 = apply(adj, l1);
  for (Kind k : kKinds) c.at_least(kind_label("unital_adjoint", k), polar(k, m0, m1), polar(k, l0, l1), 1e-8);
}

void polar_props(Checks& c, Rng& rng, int d) {
  const HermitianMatrix l0 = random_pd(d, rng, 0.02), l1 = random_pd(d, rng, 0.02);
  const HermitianMatrix x = random_operator(d, rng), y = random_operator(d, rng);
  const double pmax = polar_max(l0, l1), pmin = polar_min(l0, l1), phalf = polar_half(l0, l1);
  const double values[] = {pmax, pmin, phalf};

  for (int i = 0; i < 3; ++i) {
    const Kind k = kKinds[i];
    const double rhs = trace_product(l0, x) + trace_product(l1, y);
    c.at_most(kind_label("holder", k), values[i] * fidelity(k, x, y), rhs, 1e-8 * (1 + rhs));
    c.near(kind_label("homogeneity", k), std::sqrt(0.5 * 2.0) * values[i],
           polar(k, l0 * 0.5, l1 * 2.0), 1e-8 * (1 + values[i]));
  }
  c.at_most("max<=half", pmax, phalf, 1e-6);
  c.at_most("half<=min", phalf, pmin, 1e-6);

  const std::vector<double> a = random_weights(d, rng, 0.05), b = random_weights(d, rng, 0.05);
  const double ref = polar_classical(a, b);
  for (Kind k : kKinds)
    c.near(kind_label("normalization", k), ref,
           polar(k, HermitianMatrix::diagonal(a), HermitianMatrix::diagonal(b)), 1e-7);

  const HermitianMatrix rx = random_pd_density(d, rng), ry = random_pd_density(d, rng);
  for (Kind k : kKinds) {
    const OperatorPair opt = dual_optimizers(k, rx, ry);
    c.near(kind_label("optimizer_on_boundary", k), 1.0, polar(k, opt.first, opt.second), 1e-6);
  }

  if (is_irreducible_pair(l0, l1)) {
    const FixedPoint fp = positive_fixed_point(l0, l1, 200000, 1e-13);
    c.near("half_fixed_point", 1.0 / (phalf * phalf), fp.eigenvalue, 1e-7);
  }
}

void duality(Checks& c, Rng& rng, int d) {
  const HermitianMatrix x = random_pd_density(d, rng), y = random_pd_density(d, rng);
  const std::uint64_t cert_seed = rng.engine()();
  for (Kind k : kKinds) {
    const Certificate cert = duality_certificate(k, x, y, cert_seed);
    c.truth(kind_label("primal_feasible", k), cert.primal_feasible);
    c.truth(kind_label("dual_feasible", k), cert.dual_feasible);
    c.at_most(kind_label("gap", k), cert.gap, 0.0, 1e-7);

    const OperatorPair l = dual_optimizers(k, x, y);
    c.near(kind_label("optimizer_value", k), fidelity(k, x, y),
           trace_product(l.first, x) + trace_product(l.second, y), 1e-8);
    if (k == Kind::Max) {
      const Matrix prod = 4.0 * l.first.matrix() * l.second.matrix();
      c.at_most("max_optimizer_product", (prod - Matrix::Identity(d, d)).norm(), 0.0, 1e-8);
    }
    if (k == Kind::Half) {
      const Matrix diff = psd_sqrt(x).matrix() - lyapunov_solve(l.first, psd_sqrt(y)).matrix();
      c.at_most("half_optimizer_lyapunov", diff.norm(), 0.0, 1e-8);
    }
  }
}

void operational(Checks& c, Rng& rng, int d) {
  const HermitianMatrix x = random_pd_density(d, rng), y = random_pd_density(d, rng);
  const double fmax = fidelity_max(x, y), fmin = fidelity_min(x, y);

  const Povm m = optimal_measurement(x, y);
  c.near("optimal_measurement", fmax, classical_fidelity(m.probabilities(x), m.probabilities(y)), 1e-7);
  for (int i = 0; i < 5; ++i) {
    const Povm r = random_povm(d, 2 + static_cast<int>(rng.uniform(0, 6)), rng.engine()());
    c.at_least("random_measurement", classical_fidelity(r.probabilities(x), r.probabilities(y)), fmax,
               1e-8);
  }

  const ReverseTest rt = optimal_reverse_test(x, y);
  c.near("optimal_reverse_test", fmin, classical_fidelity(rt.p, rt.q), 1e-7);
  const KrausChannel prep = preparation_channel(rt.states);
  const HermitianMatrix px = apply(prep, HermitianMatrix::diagonal(rt.p.entries()));
  const HermitianMatrix py = apply(prep, HermitianMatrix::diagonal(rt.q.entries()));
  c.at_most("reverse_test_reconstructs_x", (px.matrix() - x.matrix()).norm(), 0.0, 1e-8);
  c.at_most("reverse_test_reconstructs_y", (py.matrix() - y.matrix()).norm(), 0.0, 1e-8);
}

// Boundary w̲ for normalized coordinates (x′, z).
double boundary_w(double xp, double z) {
  return std::abs(z) <= 1e-12 ? f1(xp) : unique_root_w(xp, z);
}

void qubit_geometry(Checks& c, Rng& rng, int) {
  // Membership against the grid oracle.
  const M0Frame frame = M0Frame::canonical(1.0, 0.0);
  const QubitDualPoint p{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-1, 6)};
  const double oracle = w2_min_oracle(p.x_prime(), p.z);
  // Points inside the oracle's own error band are not decidable by it.
  if (std::abs(p.w - oracle) > 1e-6) c.truth("m0_membership_vs_oracle", m0_membership(frame, p) == (p.w >= oracle));

  const double xr = rng.uniform(-3, 3), zr = rng.uniform(0.05, 3);
  c.near("unique_root_vs_oracle", w2_min_oracle(xr, zr), unique_root_w(xr, zr), 1e-6);

  const HermitianMatrix l0 = random_pd(2, rng, 0.05);
  const HermitianMatrix l1 = random_pd(2, rng, 0.05);
  const double pmin = polar_min(l0, l1);
  // Rescale L1 so the pair lands near the boundary of the body half the time.
  const double scale = std::pow(rng.uniform(0.8, 1.25) / pmin, 2);
  const HermitianMatrix l1s = l1 * scale;
  const double pm = std::sqrt(scale) * pmin;
  if (std::abs(pm - 1.0) > 1e-6) c.truth("mfmin_membership_vs_polar", mfmin_qubit_membership(l0, l1s) == (pm >= 1.0));

  c.near("polar_max_qubit", polar_max(l0, l1), polar_max_qubit(l0, l1), 1e-6);
  c.near("polar_min_qubit", polar_min_search(l0, l1), polar_min_qubit(l0, l1), 1e-6);

  // Extreme points sit on the f1 boundary.
  const double s = rng.uniform(-2, 2), alpha = rng.uniform(0, 2 * std::numbers::pi);
  const QubitDualPoint e = m0_extreme_points(frame, s, alpha);
  c.near("extreme_point_boundary", boundary_w(e.x_prime(), e.z), e.w, 1e-9);
}

void errata(Checks& c, Rng& rng, int d) {
  if (d == 0) {
    const HermitianMatrix i1 = HermitianMatrix::identity(1), i2 = HermitianMatrix::identity(2);
    c.near("polar_half(I1,I1)", 2.0, polar_half(i1, i1), 1e-12);
    c.near("polar_max_qubit(I,I)", 2.0, polar_max_qubit(i2, i2), 1e-12);
    c.near("polar_max(I,I)", 2.0, polar_max(i2, i2), 1e-12);
    // The alternative factors contradict the ordering and the classical normalization.
    c.truth("factor_4_breaks_half<=min", 4.0 > polar_min(i1, i1) + 1e-9);
    c.truth("factor_1_breaks_normalization", std::abs(1.0 - polar_classical({1, 1}, {1, 1})) > 1e-6);
    return;
  }
  const HermitianMatrix l0 = random_pd(d, rng, 0.02), l1 = random_pd(d, rng, 0.02);
  const double pmax = polar_max(l0, l1), phalf = polar_half(l0, l1), pmin = polar_min(l0, l1);
  c.at_most("max<=half", pmax, phalf, 1e-6);
  c.at_most("half<=min", phalf, pmin, 1e-6);
  if (d == 2) c.near("polar_max_qubit_vs_general", pmax, polar_max_qubit(l0, l1), 1e-10);
  const std::vector<double> a = random_weights(d, rng, 0.05), b = random_weights(d, rng, 0.05);
  const HermitianMatrix da = HermitianMatrix::diagonal(a), db = HermitianMatrix::diagonal(b);
  c.near("half_normalization", polar_classical(a, b), polar_half(da, db), 1e-7);
  if (d == 2) c.near("qubit_max_normalization", polar_classical(a, b), polar_max_qubit(da, db), 1e-7);
  // Hölder at the tight pair (ρ, ρ) against (I/2, I/2)·scale.
  const HermitianMatrix rho = random_pd_density(d, rng);
  const HermitianMatrix half_id = HermitianMatrix::identity(d) * 0.5;
  c.at_most("half_holder", polar_half(half_id, half_id) * fidelity_half(rho, rho), 1.0, 1e-9);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"fidelity-props", "sandwich",       "monotonicity",
                                              "polar-props",    "duality",        "operational",
                                              "qubit-geometry", "errata"};
  return names;
}

int default_threads() {
  if (const char* env = std::getenv("FIDLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "all") {
    Report all{"all", 0, {}, opt.seed};
    for (const std::string& s : suite_names()) all.merge(run_suite(s, opt));
    all.sort();
    return all;
  }
  if (name == "fidelity-props") return run_trials(name, opt, opt.dims, fidelity_props);
  if (name == "sandwich") return run_trials(name, opt, opt.dims, sandwich);
  if (name == "monotonicity") return run_trials(name, opt, opt.dims, monotonicity);
  if (name == "polar-props") return run_trials(name, opt, opt.dims, polar_props);
  if (name == "duality") return run_trials(name, opt, opt.dims, duality);
  if (name == "operational") return run_trials(name, opt, opt.dims, operational);
  if (name == "qubit-geometry") return run_trials(name, opt, {2}, qubit_geometry);
  if (name == "errata") {
    // dim 0 carries the fixed identities; the rest are random consistency checks.
    SuiteOptions fixed = opt;
    fixed.trials = 1;
    Report r = run_trials(name, fixed, {0}, errata);
    Report random = run_trials(name, opt, opt.dims, errata);
    r.trials += random.trials;
    r.failures.insert(r.failures.end(), random.failures.begin(), random.failures.end());
    r.sort();
    return r;
  }
  throw Error(ErrorCode::UnknownSuite, name);
}

}  // namespace fidlab::cli
