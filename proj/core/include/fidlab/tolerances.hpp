#pragma once

// Shared numerical tolerances. Each scales with the magnitude of the operator
// it is applied to, so `scale` is normally an operator norm or max-abs entry.

namespace fidlab::tol {

inline constexpr double kHerm = 1e-12;
inline constexpr double kPsd = 1e-10;
inline constexpr double kRank = 1e-10;

inline double herm(double max_abs_entry) { return kHerm * (1.0 + max_abs_entry); }
inline double psd(double op_norm) { return kPsd * (1.0 + op_norm); }
inline double rank(double op_norm) { return kRank * (1.0 + op_norm); }

}  // namespace fidlab::tol
