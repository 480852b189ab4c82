#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace fidlab::cli {

struct Failure {
  std::string case_id;
  std::string quantity;
  double expected;
  double actual;
  double tolerance;
};

struct Report {
  std::string suite;
  int trials = 0;
  std::vector<Failure> failures;
  std::uint64_t seed = 0;

  bool passed() const { return failures.empty(); }
  // Orders failures by case id, then quantity.
  void sort();
  void merge(const Report& other);
};

nlohmann::json to_json(const Report& r, bool reproducible);
std::string to_text(const Report& r);
std::string to_csv(const Report& r);

}  // namespace fidlab::cli
