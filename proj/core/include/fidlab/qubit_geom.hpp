#pragma once

#include "fidlab/linalg.hpp"

namespace fidlab {

/// Coefficients of x σx + y σy + z σz + w I.
struct QubitDualPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double w = 0.0;

  double x_prime() const;
};

/// Frame with rotation† · M · rotation = l σz + m I.
struct M0Frame {
  double l;
  double m;
  Matrix rotation;

  /// Frame of an already diagonal M = l σz + m I. Throws DegenerateFrame if |l| ≤ 1e-10.
  static M0Frame canonical(double l, double m);
  /// Diagonalizes a qubit Hermitian M with l ≥ 0. Throws DegenerateFrame if |l| ≤ 1e-10.
  static M0Frame from_operator(const HermitianMatrix& m);

  /// Pauli coefficients of rotation† · h · rotation.
  QubitDualPoint coordinates(const HermitianMatrix& h) const;
  /// Inverse of coordinates().
  HermitianMatrix operator_of(const QubitDualPoint& p) const;
  /// l σz + m I expressed back in the original basis.
  HermitianMatrix reference() const;
};

QubitDualPoint pauli_coordinates(const HermitianMatrix& h);
HermitianMatrix from_pauli(const QubitDualPoint& p);

double f1(double x);
double f2(double x, double z);
double discriminant_D(double x, double z, double w);

/// The root of D(x, z, ·) on [f2(x, z), ∞).
double unique_root_w(double x, double z);

/// min over real s of s²/4 + √((x′ − s)² + z²), by grid then ternary refinement.
double w2_min_oracle(double x_prime, double z);

/// Membership of the operator with frame coordinates p in M_0(M). Coordinates
/// are divided by l² before the boundary test.
bool m0_membership(const M0Frame& frame, const QubitDualPoint& p);

/// l² (s (cos α σx + sin α σy) + s²/4 I) in frame coordinates, |s| ≤ 2.
QubitDualPoint m0_extreme_points(const M0Frame& frame, double s, double alpha);

/// Frame coordinates of i[B, M] + B².
QubitDualPoint m0_point_from_b(const M0Frame& frame, const HermitianMatrix& b);

bool mfmin_qubit_membership(const HermitianMatrix& l0, const HermitianMatrix& l1);

double polar_max_qubit(const HermitianMatrix& l0, const HermitianMatrix& l1);
double polar_min_qubit(const HermitianMatrix& l0, const HermitianMatrix& l1);

/// Necessary conditions for a unital CP map sending (L0, L1) to (L0p, L1p).
bool convertibility_necessary(const HermitianMatrix& l0, const HermitianMatrix& l1,
                              const HermitianMatrix& l0p, const HermitianMatrix& l1p);

}  // namespace fidlab
