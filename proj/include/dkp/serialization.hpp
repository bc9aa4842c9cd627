#pragma once

// Representation JSON:
//   {"D": int, "dim": int, "metric": [1,-1,...],
//    "betas": [ beta^0, beta^1, ... ]}  with beta = rows of [re, im] strings.
// Strings are canonical rationals ("0", "1", "-3/2").

#include <cstddef>
#include <istream>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dkp/errors.hpp"
#include "dkp/representation.hpp"

namespace dkp {

using json = nlohmann::json;

inline json to_json(const GaussianRational& z) { return json::array({to_string(z.re), to_string(z.im)}); }

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const Representation& rep) {
  json betas = json::array();
  for (const auto& b : rep.betas()) betas.push_back(to_json(b));
  return json{{"D", rep.D()}, {"dim", rep.dim()}, {"metric", rep.metric().signature()}, {"betas", std::move(betas)}};
}

/// Two-space indented JSON with a trailing newline; this is the on-disk form.
inline std::string dump_representation(const Representation& rep) { return to_json(rep).dump(2) + "\n"; }

namespace detail {

inline GaussianRational entry_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw ParseError(path + ": expected [re, im] with rational strings");
  try {
    return {parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline Matrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ParseError(path + ": expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw ParseError(path + "[0]: expected a non-empty row");
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols)
      throw ParseError(row_path + ": expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry_from_json(j[r][c], row_path + "[" + std::to_string(c) + "]");
  }
  return m;
}

}  // namespace detail

inline Matrix matrix_from_json(const json& j) { return detail::matrix_from_json(j, "matrix"); }

inline Representation representation_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("$: expected an object");
  for (const char* key : {"D", "dim", "metric", "betas"})
    if (!j.contains(key)) throw ParseError(std::string("$.") + key + ": missing");
  if (!j["D"].is_number_integer() || j["D"].get<long long>() < 2) throw ParseError("$.D: expected an integer >= 2");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) throw ParseError("$.dim: expected a positive integer");
  const auto d = j["D"].get<std::size_t>();
  const auto dim = j["dim"].get<std::size_t>();

  const json& jm = j["metric"];
  if (!jm.is_array() || jm.size() != d) throw ParseError("$.metric: expected an array of D entries");
  std::vector<int> signature;
  for (std::size_t k = 0; k < d; ++k) {
    if (!jm[k].is_number_integer()) throw ParseError("$.metric[" + std::to_string(k) + "]: expected +1 or -1");
    signature.push_back(jm[k].get<int>());
  }
  std::optional<Metric> metric;
  try {
    metric.emplace(std::move(signature));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("$.metric: ") + e.what());
  }

  const json& jb = j["betas"];
  if (!jb.is_array() || jb.size() != d) throw ParseError("$.betas: expected an array of D matrices");
  std::vector<Matrix> betas;
  for (std::size_t mu = 0; mu < d; ++mu) {
    const std::string path = "$.betas[" + std::to_string(mu) + "]";
    Matrix b = detail::matrix_from_json(jb[mu], path);
    if (b.rows() != dim || b.cols() != dim)
      throw ParseError(path + ": shape " + b.shape_string() + " does not match dim " + std::to_string(dim));
    betas.push_back(std::move(b));
  }
  return Representation(std::move(*metric), std::move(betas));
}

inline Representation parse_representation(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return representation_from_json(j);
}

inline Representation read_representation(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_representation(text);
}

}  // namespace dkp
