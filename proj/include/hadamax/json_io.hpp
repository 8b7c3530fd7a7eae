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

#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "hadamax/symbolic.hpp"

namespace hadamax {

/// Schema violation with the offending field path.
struct SchemaError : std::runtime_error {
  std::string path;
  SchemaError(std::string p, const std::string& what)
      : std::runtime_error("schema error at " + p + ": " + what), path(std::move(p)) {}
};

// Symbolic schema (bit-exact round trip):
//   {"n": int, "params": [names], "scaleHalfLog": int,
//    "grid": [[entry|null, ...], ...]},
//   entry = {"coeffs": {name: int}, "quarter": 0..3}
nlohmann::json symbolic_to_json(const SymbolicMatrix& m);
SymbolicMatrix symbolic_from_json(const nlohmann::json& j);

// Numeric schema: {"n": int, "entries": [[[re, im], ...], ...]}
nlohmann::json numeric_to_json(const NumericMatrix& m);
NumericMatrix numeric_from_json(const nlohmann::json& j);

using ImportedMatrix = std::variant<SymbolicMatrix, NumericMatrix>;

/// Reads either schema from a file, distinguishing by the "grid"/"entries"
/// key. Throws SchemaError on malformed input.
ImportedMatrix import_matrix(const std::string& path);
ImportedMatrix import_matrix_json(const nlohmann::json& j);

}  // namespace hadamax
