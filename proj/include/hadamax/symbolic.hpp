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

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hadamax/phase.hpp"

namespace hadamax {

/// Dense complex matrix used as the evaluation target of symbolic objects.
using NumericMatrix = Eigen::MatrixXcd;

/// A matrix entry: either exactly zero or a unimodular value given by its
/// exact phase form.
using SymbolicEntry = std::optional<PhaseLinearForm>;

/// Grid of unimodular (or zero) entries whose phases are integer combinations
/// of named parameters. A global factor 2^(scaleHalfLog/2) is tracked
/// separately and never folded into the entries.
struct SymbolicMatrix {
  int n = 0;
  std::vector<std::string> params;  // ordering fixes binding/serialization order
  std::vector<SymbolicEntry> grid;  // row-major, n*n
  int scaleHalfLog = 0;

  SymbolicMatrix() = default;
  SymbolicMatrix(int dim, std::vector<std::string> p, int scale = 0)
      : n(dim), params(std::move(p)), grid(dim * dim), scaleHalfLog(scale) {}

  SymbolicEntry& at(int i, int j) { return grid[i * n + j]; }
  const SymbolicEntry& at(int i, int j) const { return grid[i * n + j]; }

  bool has_param(const std::string& name) const;
  /// Copy with scaleHalfLog = 0.
  SymbolicMatrix unscaled() const {
    SymbolicMatrix m = *this;
    m.scaleHalfLog = 0;
    return m;
  }
};

/// Formal integer combination of unimodular terms. Canonical form keeps keys
/// with quarter in {0,1} and signed multiplicities, so a term and its
/// pi-shifted partner always fold into one signed entry; the zero sum is the
/// empty map.
struct PhaseSum {
  std::map<PhaseLinearForm, long long> terms;

  void add_term(PhaseLinearForm f, long long mult);
  void add(const PhaseSum& o);
  PhaseSum negated() const;
  /// Sum multiplied by a single unimodular term.
  PhaseSum times(const PhaseLinearForm& f) const;

  bool is_zero() const { return terms.empty(); }
  /// Number of unimodular terms counted with multiplicity.
  long long term_count() const;
  /// If the sum is m * e^{i form} for a single form, returns (form, m) with
  /// m > 0 (sign folded into the quarter).
  std::optional<std::pair<PhaseLinearForm, long long>> single_term() const;

  bool operator==(const PhaseSum& o) const { return terms == o.terms; }
};

/// Re-canonicalizes a sum; idempotent by construction.
PhaseSum sum_canonicalize(const PhaseSum& s);

/// Matrix of phase sums, the result of symbolic matrix products.
struct SumMatrix {
  int n = 0;
  std::vector<std::string> params;
  std::vector<PhaseSum> grid;
  int scaleHalfLog = 0;

  SumMatrix() = default;
  SumMatrix(int dim, std::vector<std::string> p, int scale = 0)
      : n(dim), params(std::move(p)), grid(dim * dim), scaleHalfLog(scale) {}

  PhaseSum& at(int i, int j) { return grid[i * n + j]; }
  const PhaseSum& at(int i, int j) const { return grid[i * n + j]; }

  /// Divides all multiplicities by the largest common power of two and folds
  /// it into scaleHalfLog (each factor 2 is worth two halves of log).
  SumMatrix factored() const;
  /// If every entry is a single unimodular term after factoring, the matrix
  /// as a SymbolicMatrix; otherwise nullopt.
  std::optional<SymbolicMatrix> as_symbolic() const;
};

// Entry algebra ------------------------------------------------------------

/// Product of two entries: zero absorbs, forms add (quarters mod 4).
SymbolicEntry entry_mul(const SymbolicEntry& e1, const SymbolicEntry& e2);

// Matrix operations ---------------------------------------------------------

/// Hermitian conjugate: transpose with every form negated.
SymbolicMatrix sym_adjoint(const SymbolicMatrix& m);

SumMatrix to_sum(const SymbolicMatrix& m);
SumMatrix sum_adjoint(const SumMatrix& m);

/// Exact product; each output entry is the canonical sum of n term products.
SumMatrix sym_mat_mul(const SymbolicMatrix& m1, const SymbolicMatrix& m2);
SumMatrix sum_mat_mul(const SumMatrix& m1, const SumMatrix& m2);

/// Replaces every occurrence of `param` by the given linear form, exactly.
/// Throws if the matrix does not know the parameter.
SymbolicMatrix substitute(const SymbolicMatrix& m, const std::string& param,
                          const PhaseLinearForm& replacement);
SumMatrix substitute(const SumMatrix& m, const std::string& param,
                     const PhaseLinearForm& replacement);

// Evaluation ----------------------------------------------------------------

/// Entrywise complex-exponential evaluation including the tracked scale
/// factor. Throws on a missing parameter.
NumericMatrix eval(const SymbolicMatrix& m, const Binding& b);
NumericMatrix eval(const SumMatrix& m, const Binding& b);
/// Evaluation of the bare grid, ignoring scaleHalfLog. This is the
/// convention used by all Hadamard predicates (unimodular entries,
/// Gram = n*I).
NumericMatrix eval_unscaled(const SymbolicMatrix& m, const Binding& b);

// Construction helpers -------------------------------------------------------

/// Parses one entry token: "0", "1", "-1", "i", "-i", "e(a)", "-e(b+d-a)",
/// "i e(c)", "-i e(2a-c)". Whitespace inside tokens is ignored.
SymbolicEntry parse_entry(const std::string& token);

/// Builds a matrix from row token lists; every parameter used must appear in
/// `params`.
SymbolicMatrix make_symbolic(int n, std::vector<std::string> params,
                             const std::vector<std::vector<std::string>>& rows,
                             int scaleHalfLog = 0);

/// First row and column reduced to +1 by exact diagonal phase factors.
/// Requires all entries unimodular.
SymbolicMatrix dephase_symbolic(const SymbolicMatrix& m);

}  // namespace hadamax
