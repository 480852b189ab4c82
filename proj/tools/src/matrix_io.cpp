#include "fidlab_cli/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "fidlab/error.hpp"

namespace fidlab::cli {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number(const json& j, const char* what) {
  if (!j.is_number()) parse_error(std::string(what) + " is not a number");
  return j.get<double>();
}

}  // namespace

HermitianMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    parse_error("matrix needs \"dim\" and \"entries\"");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1) parse_error("\"dim\" must be a positive integer");
  const int dim = j["dim"].get<int>();
  const json& rows = j["entries"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) parse_error("\"entries\" must have dim rows");

  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) parse_error("row " + std::to_string(r) + " must have dim entries");
    for (int c = 0; c < dim; ++c) {
      const json& z = row[c];
      if (!z.is_array() || z.size() != 2) parse_error("entries must be [re, im] pairs");
      m(r, c) = Complex(number(z[0], "real part"), number(z[1], "imaginary part"));
    }
  }
  const double scale = m.cwiseAbs().maxCoeff();
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-6 * scale) {
    parse_error("matrix is not Hermitian (asymmetry " + std::to_string(asym) + ")");
  }
  return HermitianMatrix(m);
}

json matrix_to_json(const HermitianMatrix& h) {
  json rows = json::array();
  for (int r = 0; r < h.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < h.dim(); ++c) row.push_back({h(r, c).real(), h(r, c).imag()});
    rows.push_back(row);
  }
  return {{"dim", h.dim()}, {"entries", rows}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  json j = json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) parse_error(path + " is not valid JSON");
  return j;
}

std::pair<HermitianMatrix, HermitianMatrix> load_pair(const std::string& first,
                                                      const std::string& second) {
  if (!second.empty()) {
    return {matrix_from_json(read_json_file(first)), matrix_from_json(read_json_file(second))};
  }
  json j = read_json_file(first);
  if (j.is_object() && j.contains("pair")) j = j["pair"];
  if (!j.is_array() || j.size() != 2) parse_error(first + " must hold two matrices");
  return {matrix_from_json(j[0]), matrix_from_json(j[1])};
}

}  // namespace fidlab::cli
