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

#include <map>
#include <string>
#include <vector>

#include "hadamax/symbolic.hpp"

namespace hadamax {

/// One catalogued matrix. All eight-dimensional entries are stored with
/// unimodular entries and scaleHalfLog -3 (the physical factor 1/(2 sqrt 2));
/// the four-dimensional ones carry -2 (factor 1/2).
struct CatalogEntry {
  std::string name;
  SymbolicMatrix matrix;
  std::string notes;
  /// True when the family is Hadamard identically in its parameters. C6BF is
  /// the exception: it is Hadamard only at canonicalBinding.
  bool identicallyHadamard = true;
  Binding canonicalBinding;
};

/// Looks up a matrix by name; the error message of an unknown name lists all
/// available names.
const CatalogEntry& catalog_get(const std::string& name);

struct CatalogInfo {
  std::string name;
  int dimension;
  int paramCount;
  bool operator==(const CatalogInfo&) const = default;
};

/// Complete listing in stable order.
std::vector<CatalogInfo> catalog_list();

/// Decomposition D = core o EXP(i R): a (-1,1) core and a grid of phase
/// forms (zero where the core entry carries no phase).
struct StandardForm {
  std::string name;
  SymbolicMatrix core;
  std::vector<PhaseLinearForm> phases;  // row-major n*n, quarter always 0
  std::vector<std::string> params;
  int n = 0;
};

/// Available for the eight family representatives D8A5, D8B5, D8C5, D8E5,
/// D8F5, D8I5, D8K5, D8L5 (cores h1, h2, h3, h1, h1, h4, h4, h4). The phase
/// grid is regenerated from the catalogued matrix.
StandardForm standard_form(const std::string& name);

/// Entrywise core * exp(i * phase); equals eval_unscaled of the catalogued
/// matrix at the same binding.
NumericMatrix assemble_standard(const StandardForm& sf, const Binding& b);

/// Result of enumerating a family over quarter-turn parameter shifts. Two
/// shift vectors give the same member when they agree modulo pi (a pi shift
/// is absorbed by the parameter), so members are counted as decorated
/// symbolic forms with each shift reduced to {0, pi/2}.
struct QuantizationCensus {
  int distinctCount = 0;
  std::map<int, int> multiplicityByEighth;  // key n: members with exactly 8n entries in {i,-i}
};

QuantizationCensus quantization_census(const std::string& name);

}  // namespace hadamax
