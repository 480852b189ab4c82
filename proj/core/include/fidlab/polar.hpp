#pragma once

#include <cstdint>

#include "fidlab/fidelity.hpp"
#include "fidlab/linalg.hpp"

namespace fidlab {

double polar_classical(const WeightVector& l0, const WeightVector& l1);

/// 2 √λ_min(√L1 L0 √L1); zero when either operator is singular.
double polar_max(const HermitianMatrix& l0, const HermitianMatrix& l1);

/// min over unit ψ of 2 √(⟨ψ|L0|ψ⟩⟨ψ|L1|ψ⟩). Qubits use the closed form.
double polar_min(const HermitianMatrix& l0, const HermitianMatrix& l1, int restarts = 20,
                 std::uint64_t seed = 0);

/// The general-dimension search behind polar_min, without the qubit shortcut.
/// Every value it returns is attained by some unit vector.
double polar_min_search(const HermitianMatrix& l0, const HermitianMatrix& l1, int restarts = 20,
                        std::uint64_t seed = 0);

/// (largest eigenvalue of S_{L0} ∘ S_{L1})^{-1/2}; zero when either operator is singular.
double polar_half(const HermitianMatrix& l0, const HermitianMatrix& l1);

double polar(Kind kind, const HermitianMatrix& l0, const HermitianMatrix& l1);

/// polar(kind) ≥ 1 − 1e-9.
bool polar_membership(Kind kind, const HermitianMatrix& l0, const HermitianMatrix& l1);

/// Best classical polar over sampled decompositions L_θ = Σ l_θ,i M_i with
/// {M_i} a POVM of n_outcomes elements and l_θ ≥ 0. Always ≤ polar_max.
double povm_lower_bound(const HermitianMatrix& l0, const HermitianMatrix& l1, int n_outcomes,
                        int trials, std::uint64_t seed = 0);

}  // namespace fidlab
