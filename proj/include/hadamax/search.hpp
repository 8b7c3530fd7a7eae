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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hadamax/symbolic.hpp"

namespace hadamax {

/// Left/right diagonal phase dressings applied to a base triple before the
/// nonlinear doubling. Dressing parameter names must be disjoint from the
/// base parameters; empty name lists mean no dressing on that side.
struct DressingTemplate {
  SymbolicMatrix a, b, c;
  std::array<std::vector<std::string>, 3> left;   // per factor A, B, C
  std::array<std::vector<std::string>, 3> right;

  /// Factor with its dressings folded into the entry phases.
  SymbolicMatrix dressed_factor(int which) const;
  /// All free parameters in binding order: base params, then dressings.
  std::vector<std::string> free_params() const;
};

/// The 2x2 base triple (each factor dressed on both sides): the doubled
/// matrix is 4x4 and its Hadamard solutions recover the one-phase family.
DressingTemplate d2_template();

/// The 4x4 triplet template: A = E1(x), B = E2(y,z) left-dressed, C = E3(w,z)
/// right-dressed, which carries the full sixteen-term product entries.
DressingTemplate zauner_template();

struct SearchOptions {
  int maxIters = 400;
  double stepInit = 0.5;
  int restarts = 1;
  double tol = 1e-10;
  /// When set, the first restart begins here instead of at a random point.
  std::optional<Binding> start;
};

struct SearchResult {
  Binding binding;
  double defect = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;  // defect after each accepted step (best restart)
};

/// Gradient descent with central-difference gradients and a monotone
/// backtracking line search on hadamard_defect of the doubled matrix.
/// Deterministic for fixed (seed, opts); restarts are independent.
SearchResult defect_minimize(const DressingTemplate& t, std::uint64_t seed,
                             const SearchOptions& opts = {});

/// Objective evaluated at one binding (unscaled doubled matrix).
double template_defect(const DressingTemplate& t, const Binding& b);

using Constraint = std::pair<std::string, PhaseLinearForm>;

/// Applies the substitutions to a product matrix and reports whether every
/// entry collapses to a single unimodular term times the tracked scale.
bool collapse_check(const SumMatrix& product, const std::vector<Constraint>& constraints);

/// Number of parameter directions of a catalog family along which the
/// Hadamard defect has vanishing first and second differences at the given
/// binding (the full parameter count for an identically Hadamard family).
int tangent_dimension(const std::string& familyName, const Binding& b, double tol = 1e-6);

/// Whether a unitary 4x4 with entries of modulus 1/2 is, after dephasing and
/// row/column permutation, a member of the one-phase family H4(a). On
/// success, *fittedPhase receives the fitted a.
bool matches_h4_family(const NumericMatrix& doubled, double tol, double* fittedPhase = nullptr);

}  // namespace hadamax
