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

#include "hadamax/symbolic.hpp"

namespace hadamax {

// Convention throughout: a complex Hadamard matrix has unimodular entries and
// Gram matrix H H* = n I. The 1/sqrt(n) normalization is applied only where
// spectra are computed.

struct DefectReport {
  double maxEntryModulusError = 0.0;  // max | |h_ij| - 1 |
  double maxGramError = 0.0;          // max |(H H* - n I)_ij|
};

DefectReport hadamard_report(const NumericMatrix& m);

/// True iff both defects in the report stay below tol. Throws on non-square
/// input.
bool is_hadamard_numeric(const NumericMatrix& m, double tol = 1e-10,
                         DefectReport* report = nullptr);

/// True iff every pairwise row inner product cancels to the exact zero sum,
/// i.e. the matrix is Hadamard identically in all parameters. Throws if a
/// zero entry is present.
bool is_hadamard_symbolic(const SymbolicMatrix& m);

/// Equivalent matrix with first row and column all 1 (Sylvester form).
/// D1 is read off column 1, D2 off row 1 after D1; idempotent. Throws if an
/// entry of the first row or column vanishes.
NumericMatrix dephase(const NumericMatrix& m);

/// max over column pairs of | |<a_i, b_j>| * sqrt(d) - 1 | using
/// unit-normalized columns; zero iff the two bases are mutually unbiased.
double unbiasedness_defect(const NumericMatrix& a, const NumericMatrix& b);

/// Smooth objective: sum over entries of (|h_ij|-1)^2 plus the squared Gram
/// residuals |(H H* - n I)_ij|^2 summed over i <= j (the Gram matrix is
/// Hermitian, so the upper triangle carries all of it). Zero iff Hadamard.
double hadamard_defect(const NumericMatrix& m);

}  // namespace hadamax
