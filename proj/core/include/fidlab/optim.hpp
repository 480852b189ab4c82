#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace fidlab::optim {

using Objective = std::function<double(const std::vector<double>&)>;

struct MinResult {
  std::vector<double> x;
  double value;
};

/// Derivative-free simplex minimization (GSL nmsimplex2).
MinResult nelder_mead(const Objective& f, std::vector<double> x0, double step, int max_iter = 2000,
                      double size_tol = 1e-9);

struct ScalarMin {
  double x;
  double value;
};

/// Global-ish scalar minimization on [a, b]: uniform grid of `grid` points,
/// then Brent refinement inside the bracket around the best grid point.
ScalarMin minimize_on_interval(const std::function<double(double)>& f, double a, double b,
                               int grid = 200, double tol = 1e-12);

struct NnlsResult {
  Eigen::VectorXd x;
  double residual;  // ‖A x − b‖₂
};

/// Lawson–Hanson nonnegative least squares: min ‖A x − b‖ subject to x ≥ 0.
NnlsResult nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, int max_iter = 0);

}  // namespace fidlab::optim
