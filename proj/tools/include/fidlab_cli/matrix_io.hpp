#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "fidlab/linalg.hpp"

namespace fidlab::cli {

// {"dim": k, "entries": [[[re, im], ...], ...]}
HermitianMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const HermitianMatrix& h);

nlohmann::json read_json_file(const std::string& path);

// One file holding two matrices (a JSON array of two, or an object with a
// "pair" array), or two files holding one matrix each.
std::pair<HermitianMatrix, HermitianMatrix> load_pair(const std::string& first,
                                                      const std::string& second = "");

}  // namespace fidlab::cli
