#include "fidlab_cli/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <tuple>

namespace fidlab::cli {

void Report::sort() {
  std::stable_sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) {
    return std::tie(a.case_id, a.quantity) < std::tie(b.case_id, b.quantity);
  });
}

void Report::merge(const Report& other) {
  trials += other.trials;
  for (Failure f : other.failures) {
    f.case_id = other.suite + "/" + f.case_id;
    failures.push_back(std::move(f));
  }
}

nlohmann::json to_json(const Report& r, bool reproducible) {
  nlohmann::json fails = nlohmann::json::array();
  for (const Failure& f : r.failures) {
    fails.push_back({{"case_id", f.case_id},
                     {"quantity", f.quantity},
                     {"expected", f.expected},
                     {"actual", f.actual},
                     {"tolerance", f.tolerance}});
  }
  nlohmann::json j = {{"suite", r.suite},
                      {"trials", r.trials},
                      {"seed", r.seed},
                      {"passed", r.passed()},
                      {"failures", fails}};
  if (!reproducible) {
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
  }
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "suite     " << r.suite << "\n"
      << "seed      " << r.seed << "\n"
      << "trials    " << r.trials << "\n"
      << "failures  " << r.failures.size() << "\n";
  char line[512];
  for (const Failure& f : r.failures) {
    std::snprintf(line, sizeof line, "  %-32s %-28s expected %.12g actual %.12g tol %.1e\n",
                  f.case_id.c_str(), f.quantity.c_str(), f.expected, f.actual, f.tolerance);
    out << line;
  }
  out << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string to_csv(const Report& r) {
  std::ostringstream out;
  out.precision(17);
  out << "case_id,quantity,expected,actual,tolerance\n";
  for (const Failure& f : r.failures) {
    out << f.case_id << "," << f.quantity << "," << f.expected << "," << f.actual << ","
        << f.tolerance << "\n";
  }
  return out.str();
}

}  // namespace fidlab::cli
