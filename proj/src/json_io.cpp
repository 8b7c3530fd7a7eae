// Copyright 2026 The hadamax authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hadamax/json_io.hpp"

#include <fstream>

namespace hadamax {

namespace {

using nlohmann::json;

std::string at(const std::string& base, const std::string& field) { return base + "." + field; }
std::string idx(const std::string& base, int i) { return base + "[" + std::to_string(i) + "]"; }

int require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<int>();
}

}  // namespace

json symbolic_to_json(const SymbolicMatrix& m) {
  json grid = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int j = 0; j < m.n; ++j) {
      const auto& e = m.at(i, j);
      if (!e) {
        row.push_back(nullptr);
        continue;
      }
      json coeffs = json::object();
      for (const auto& [name, c] : e->coeffs) coeffs[name] = c;
      row.push_back(json{{"coeffs", coeffs}, {"quarter", e->quarter}});
    }
    grid.push_back(row);
  }
  return json{{"n", m.n}, {"params", m.params}, {"scaleHalfLog", m.scaleHalfLog}, {"grid", grid}};
}

SymbolicMatrix symbolic_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("$", "expected an object");
  for (const char* field : {"n", "params", "scaleHalfLog", "grid"})
    if (!j.contains(field)) throw SchemaError(at("$", field), "missing field");
  int n = require_int(j["n"], "$.n");
  if (n <= 0) throw SchemaError("$.n", "dimension must be positive");
  if (!j["params"].is_array()) throw SchemaError("$.params", "expected an array");
  std::vector<std::string> params;
  for (int k = 0; k < static_cast<int>(j["params"].size()); ++k) {
    if (!j["params"][k].is_string()) throw SchemaError(idx("$.params", k), "expected a string");
    params.push_back(j["params"][k].get<std::string>());
  }
  SymbolicMatrix m(n, params, require_int(j["scaleHalfLog"], "$.scaleHalfLog"));
  const json& grid = j["grid"];
  if (!grid.is_array() || static_cast<int>(grid.size()) != n)
    throw SchemaError("$.grid", "expected an array of " + std::to_string(n) + " rows");
  for (int i = 0; i < n; ++i) {
    const json& row = grid[i];
    const std::string rowPath = idx("$.grid", i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw SchemaError(rowPath, "expected an array of " + std::to_string(n) + " entries");
    for (int k = 0; k < n; ++k) {
      const json& cell = row[k];
      const std::string cellPath = idx(rowPath, k);
      if (cell.is_null()) continue;
      if (!cell.is_object()) throw SchemaError(cellPath, "expected an object or null");
      if (!cell.contains("coeffs") || !cell.contains("quarter"))
        throw SchemaError(cellPath, "entry needs coeffs and quarter");
      int quarter = require_int(cell["quarter"], at(cellPath, "quarter"));
      if (quarter < 0 || quarter > 3)
        throw SchemaError(at(cellPath, "quarter"), "quarter must be in 0..3");
      if (!cell["coeffs"].is_object()) throw SchemaError(at(cellPath, "coeffs"), "expected an object");
      PhaseLinearForm f;
      f.quarter = quarter;
      for (const auto& [name, value] : cell["coeffs"].items()) {
        int c = require_int(value, at(at(cellPath, "coeffs"), name));
        if (c == 0) throw SchemaError(at(at(cellPath, "coeffs"), name), "zero coefficient");
        if (!m.has_param(name))
          throw SchemaError(at(at(cellPath, "coeffs"), name), "parameter not declared in params");
        f.coeffs[name] = c;
      }
      m.at(i, k) = f;
    }
  }
  return m;
}

json numeric_to_json(const NumericMatrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    entries.push_back(row);
  }
  return json{{"n", static_cast<int>(m.rows())}, {"entries", entries}};
}

NumericMatrix numeric_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("$", "expected an object");
  if (!j.contains("n") || !j.contains("entries")) throw SchemaError("$", "needs n and entries");
  int n = require_int(j["n"], "$.n");
  if (n <= 0) throw SchemaError("$.n", "dimension must be positive");
  const json& entries = j["entries"];
  if (!entries.is_array() || static_cast<int>(entries.size()) != n)
    throw SchemaError("$.entries", "expected " + std::to_string(n) + " rows");
  NumericMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const std::string rowPath = idx("$.entries", i);
    if (!entries[i].is_array() || static_cast<int>(entries[i].size()) != n)
      throw SchemaError(rowPath, "expected " + std::to_string(n) + " entries");
    for (int k = 0; k < n; ++k) {
      const json& cell = entries[i][k];
      const std::string cellPath = idx(rowPath, k);
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
        throw SchemaError(cellPath, "expected [re, im]");
      m(i, k) = std::complex<double>(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return m;
}

ImportedMatrix import_matrix_json(const json& j) {
  if (j.is_object() && j.contains("grid")) return symbolic_from_json(j);
  if (j.is_object() && j.contains("entries")) return numeric_from_json(j);
  throw SchemaError("$", "neither a symbolic ('grid') nor a numeric ('entries') matrix");
}

ImportedMatrix import_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("parse error: ") + e.what());
  }
  return import_matrix_json(j);
}

}  // namespace hadamax
