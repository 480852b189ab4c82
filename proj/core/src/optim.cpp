#include "fidlab/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_min.h>
#include <gsl/gsl_multimin.h>

namespace fidlab::optim {

namespace {

struct GslHandlerGuard {
  gsl_error_handler_t* old;
  GslHandlerGuard() : old(gsl_set_error_handler_off()) {}
  ~GslHandlerGuard() { gsl_set_error_handler(old); }
};

double multimin_trampoline(const gsl_vector* v, void* params) {
  const auto& f = *static_cast<const Objective*>(params);
  std::vector<double> x(v->size);
  for (size_t i = 0; i < v->size; ++i) x[i] = gsl_vector_get(v, i);
  const double r = f(x);
  return std::isfinite(r) ? r : std::numeric_limits<double>::max();
}

double scalar_trampoline(double x, void* params) {
  const auto& f = *static_cast<const std::function<double(double)>*>(params);
  return f(x);
}

}  // namespace

MinResult nelder_mead(const Objective& f, std::vector<double> x0, double step, int max_iter,
                      double size_tol) {
  const size_t n = x0.size();
  if (n == 0) return {x0, f(x0)};
  GslHandlerGuard guard;

  gsl_multimin_function fn{&multimin_trampoline, n, const_cast<Objective*>(&f)};
  gsl_vector* x = gsl_vector_alloc(n);
  gsl_vector* ss = gsl_vector_alloc(n);
  for (size_t i = 0; i < n; ++i) gsl_vector_set(x, i, x0[i]);
  gsl_vector_set_all(ss, step);

  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
  gsl_multimin_fminimizer_set(s, &fn, x, ss);
  for (int it = 0; it < max_iter; ++it) {
    if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), size_tol) == GSL_SUCCESS) break;
  }
  MinResult out;
  out.x.resize(n);
  for (size_t i = 0; i < n; ++i) out.x[i] = gsl_vector_get(s->x, i);
  out.value = s->fval;

  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(ss);
  gsl_vector_free(x);
  return out;
}

ScalarMin minimize_on_interval(const std::function<double(double)>& f, double a, double b, int grid,
                               double tol) {
  grid = std::max(grid, 3);
  const double h = (b - a) / (grid - 1);
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  std::vector<double> vals(grid);
  for (int i = 0; i < grid; ++i) {
    vals[i] = f(a + i * h);
    if (vals[i] < best_val) {
      best_val = vals[i];
      best = i;
    }
  }
  ScalarMin out{a + best * h, best_val};
  if (best == 0 || best == grid - 1) return out;
  const double lo = a + (best - 1) * h, hi = a + (best + 1) * h;
  if (!(vals[best] < vals[best - 1] && vals[best] < vals[best + 1])) return out;

  GslHandlerGuard guard;
  gsl_function fn{&scalar_trampoline, const_cast<std::function<double(double)>*>(&f)};
  gsl_min_fminimizer* s = gsl_min_fminimizer_alloc(gsl_min_fminimizer_brent);
  if (gsl_min_fminimizer_set_with_values(s, &fn, out.x, vals[best], lo, vals[best - 1], hi,
                                         vals[best + 1]) == GSL_SUCCESS) {
    for (int it = 0; it < 200; ++it) {
      if (gsl_min_fminimizer_iterate(s) != GSL_SUCCESS) break;
      const double l = gsl_min_fminimizer_x_lower(s), u = gsl_min_fminimizer_x_upper(s);
      if (gsl_min_test_interval(l, u, tol, 0.0) == GSL_SUCCESS) break;
    }
    const double xm = gsl_min_fminimizer_x_minimum(s);
    const double fm = f(xm);
    if (fm < out.value) out = {xm, fm};
  }
  gsl_min_fminimizer_free(s);
  return out;
}

NnlsResult nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, int max_iter) {
  const int n = static_cast<int>(a.cols());
  if (max_iter <= 0) max_iter = 30 * std::max(n, 1);
  const double eps = 1e-14 * (1.0 + a.cwiseAbs().maxCoeff());

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  std::vector<bool> passive(n, false);

  auto solve_passive = [&](Eigen::VectorXd& z) {
    std::vector<int> idx;
    for (int j = 0; j < n; ++j)
      if (passive[j]) idx.push_back(j);
    z.setZero(n);
    if (idx.empty()) return;
    Eigen::MatrixXd ap(a.rows(), idx.size());
    for (size_t k = 0; k < idx.size(); ++k) ap.col(k) = a.col(idx[k]);
    const Eigen::VectorXd zp = ap.colPivHouseholderQr().solve(b);
    for (size_t k = 0; k < idx.size(); ++k) z(idx[k]) = zp(k);
  };

  for (int outer = 0; outer < max_iter; ++outer) {
    const Eigen::VectorXd w = a.transpose() * (b - a * x);
    int t = -1;
    double wmax = eps;
    for (int j = 0; j < n; ++j)
      if (!passive[j] && w(j) > wmax) {
        wmax = w(j);
        t = j;
      }
    if (t < 0) break;
    passive[t] = true;

    Eigen::VectorXd z;
    for (int inner = 0; inner < max_iter; ++inner) {
      solve_passive(z);
      bool feasible = true;
      for (int j = 0; j < n; ++j)
        if (passive[j] && z(j) <= 0) feasible = false;
      if (feasible) break;
      double alpha = 1.0;
      for (int j = 0; j < n; ++j)
        if (passive[j] && z(j) <= 0) alpha = std::min(alpha, x(j) / (x(j) - z(j)));
      x += alpha * (z - x);
      for (int j = 0; j < n; ++j)
        if (passive[j] && std::abs(x(j)) <= eps) {
          passive[j] = false;
          x(j) = 0.0;
        }
    }
    x = z.cwiseMax(0.0);
  }
  return {x, (a * x - b).norm()};
}

}  // namespace fidlab::optim
