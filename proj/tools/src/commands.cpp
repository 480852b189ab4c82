#include "fidlab_cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include "fidlab/fidlab.hpp"

namespace fidlab::cli {

using nlohmann::json;

namespace {

constexpr Kind kKinds[] = {Kind::Max, Kind::Min, Kind::Half};
constexpr double kGapTol = 1e-7;

// Runs f, storing either its value or the error text under key.
void guarded(json& out, const std::string& key, const std::function<json()>& f) {
  try {
    out[key] = f();
  } catch (const Error& e) {
    out[key] = {{"error", e.what()}};
  }
}

json certificate_json(const Certificate& c) {
  return {{"primal", c.primal_value},  {"dual", c.dual_value},
          {"gap", c.gap},              {"primal_feasible", c.primal_feasible},
          {"dual_feasible", c.dual_feasible}, {"valid", c.valid()}};
}

json qubit_section(const HermitianMatrix& l0, const HermitianMatrix& l1) {
  json q;
  guarded(q, "polar_max_qubit", [&] { return json(polar_max_qubit(l0, l1)); });
  guarded(q, "polar_min_qubit", [&] { return json(polar_min_qubit(l0, l1)); });
  guarded(q, "mfmin_membership", [&] { return json(mfmin_qubit_membership(l0, l1)); });
  guarded(q, "mfmax_membership", [&] { return json(mfmax_membership(l0, l1)); });
  guarded(q, "m0_coordinates", [&] {
    const HermitianMatrix inv = pinv(l0);
    const M0Frame frame = M0Frame::from_operator(inv);
    const HermitianMatrix is = psd_inv_sqrt(l0);
    const HermitianMatrix k = congruence(is.matrix(), l1) * 4.0 - congruence(inv.matrix(), HermitianMatrix::identity(2));
    const QubitDualPoint p = frame.coordinates(k);
    return json{{"l", frame.l}, {"m", frame.m}, {"x", p.x}, {"y", p.y}, {"z", p.z}, {"w", p.w}};
  });
  return q;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", j.get<double>());
    out.emplace_back(prefix, buf);
  } else {
    out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

}  // namespace

ComputeResult compute_pair(const HermitianMatrix& a, const HermitianMatrix& b, bool as_dual,
                           std::uint64_t seed) {
  OperatorPair pair(a, b);
  json v;
  v["mode"] = as_dual ? "dual" : "states";
  v["dim"] = a.dim();
  Report report{"compute", 1, {}, seed};

  if (!as_dual) {
    json f;
    for (Kind k : kKinds) f[std::string(to_string(k))] = fidelity(k, a, b);
    v["fidelity"] = f;

    json certs;
    for (Kind k : kKinds) {
      const std::string name(to_string(k));
      if (!is_positive_definite(a) || !is_positive_definite(b)) {
        certs[name] = {{"skipped", "certificates need positive definite inputs"}};
        continue;
      }
      const Certificate c = duality_certificate(k, a, b, seed);
      certs[name] = certificate_json(c);
      if (!c.valid() || !(c.gap < kGapTol)) {
        report.failures.push_back({"input", "certificate_" + name, 0.0, c.gap, kGapTol});
      }
    }
    v["certificates"] = certs;
  }

  json p;
  for (Kind k : kKinds) p[std::string(to_string(k))] = polar(k, a, b);
  v["polar"] = p;

  json m;
  for (Kind k : kKinds) m[std::string(to_string(k))] = polar_membership(k, a, b);
  v["membership"] = m;

  if (a.dim() == 2 && is_positive_definite(a)) v["qubit"] = qubit_section(a, b);
  return {v, report};
}

std::string compute_to_text(const json& values) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(values, "", rows);
  size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream out;
  for (const auto& [k, val] : rows) out << k << std::string(width + 2 - k.size(), ' ') << val << "\n";
  return out.str();
}

std::string compute_to_csv(const json& values) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(values, "", rows);
  std::ostringstream out;
  out << "quantity,value\n";
  for (const auto& [k, val] : rows) out << k << "," << val << "\n";
  return out.str();
}

std::string boundary_csv(double l, double m, int n_samples) {
  if (n_samples < 2) throw Error(ErrorCode::InvalidArgument, "boundary needs at least 2 samples");
  const M0Frame frame = M0Frame::canonical(l, m);
  const double l2 = l * l;
  // Golden-angle sweep in α so any sample count covers the circle evenly.
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::ostringstream out;
  out.precision(17);
  out << "s,alpha,x,y,z,w,w_min\n";
  for (int i = 0; i < n_samples; ++i) {
    const double s = -2.0 + 4.0 * i / (n_samples - 1);
    const double alpha = std::fmod(golden * i, 2.0 * std::numbers::pi);
    const QubitDualPoint p = m0_extreme_points(frame, s, alpha);
    const double xp = p.x_prime() / l2, z = p.z / l2;
    const double w_min = l2 * (std::abs(z) <= 1e-12 ? f1(xp) : unique_root_w(xp, z));
    // Adding +0.0 turns a signed zero into a plain zero.
    out << s + 0.0 << "," << alpha << "," << p.x + 0.0 << "," << p.y + 0.0 << "," << p.z + 0.0 << ","
        << p.w + 0.0 << "," << w_min << "\n";
  }
  return out.str();
}

}  // namespace fidlab::cli
