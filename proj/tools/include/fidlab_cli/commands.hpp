#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "fidlab/linalg.hpp"
#include "fidlab_cli/report.hpp"

namespace fidlab::cli {

struct ComputeResult {
  nlohmann::json values;
  Report report;
};

// Everything computable for one pair. With as_dual the inputs are (L0, L1) and
// fidelities are skipped; otherwise they are states (X, Y) and the polar values
// are those of the same matrices read as dual operators.
ComputeResult compute_pair(const HermitianMatrix& a, const HermitianMatrix& b, bool as_dual,
                           std::uint64_t seed);

std::string compute_to_text(const nlohmann::json& values);
std::string compute_to_csv(const nlohmann::json& values);

// CSV of n_samples extreme points of M_0(lσz + mI), s swept over [−2, 2].
std::string boundary_csv(double l, double m, int n_samples);

}  // namespace fidlab::cli
