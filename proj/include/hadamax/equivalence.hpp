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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hadamax/symbolic.hpp"

namespace hadamax {

// Haagerup invariant -----------------------------------------------------------

/// Multiset { H_ij H_kl conj(H_il) conj(H_kj) } over all index quadruples,
/// stored as sorted angles. Invariant under diagonal-and-permutation
/// equivalence.
struct HaagerupSet {
  std::vector<double> angles;  // sorted, in [-eps, 2 pi - eps)
};

/// Throws on non-Hadamard input (checked at `hadamardTol`).
HaagerupSet haagerup_set(const NumericMatrix& m, double hadamardTol = 1e-8);

bool haagerup_close(const HaagerupSet& a, const HaagerupSet& b, double tol);

/// Distinct angles of the multiset, merged within tol.
std::vector<double> haagerup_support(const HaagerupSet& s, double tol = 1e-9);

// Entry census --------------------------------------------------------------------

struct CensusCounts {
  int plusOne = 0, minusOne = 0, plusI = 0, minusI = 0, other = 0;
};

CensusCounts entry_census(const NumericMatrix& m, double tol = 1e-9);

// Orthogonality-polygon fingerprint ------------------------------------------------

/// For each unordered pair of columns and each unordered pair of rows the
/// n orthogonality legs give a multiset of unit directions; a leg list is
/// canonicalized by rotating one leg to angle zero (lexicographically
/// smallest sorted choice). The fingerprint is the sorted multiset of all
/// canonical leg lists.
struct Fingerprint {
  std::vector<std::vector<double>> legLists;
};

Fingerprint fingerprint(const NumericMatrix& m, double hadamardTol = 1e-8);

/// Multiset comparison; two leg lists match when some rotation aligns them
/// elementwise within tol (circular distance).
bool fingerprint_equal(const Fingerprint& a, const Fingerprint& b, double tol);

/// True if some canonical leg list of f matches `legs` (given as angles).
bool fingerprint_contains(const Fingerprint& f, const std::vector<double>& legs, double tol);

// Exact characteristic polynomial ----------------------------------------------------

struct GaussInt {
  long long re = 0, im = 0;
  friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  bool operator==(const GaussInt&) const = default;
};

/// Coefficients of det(y I - M), ascending in y, exact over the Gaussian
/// integers. The unnormalized variable y relates to the normalized spectrum
/// by y = sqrt(n) * lambda.
using GaussPoly = std::vector<GaussInt>;

/// Exact characteristic polynomial of a parameter-free matrix with entries
/// in {0, 1, -1, i, -i}. Uses the Faddeev-LeVerrier recurrence, whose
/// divisions by the step index are exact over the Gaussian integers.
GaussPoly char_poly_exact(const SymbolicMatrix& m);
/// Same, for a numeric matrix whose entries round to {0, +-1, +-i} within
/// 1e-9; throws otherwise.
GaussPoly char_poly_exact(const NumericMatrix& m);

/// Expansion of (y^2 - c)^k.
GaussPoly quadratic_power_poly(long long c, int k);
std::string poly_to_string(const GaussPoly& p);

// Numeric characteristic polynomial ---------------------------------------------------

struct CharPolySignature {
  int degree = 0;
  std::vector<std::complex<double>> coeffs;  // ascending, coeffs[degree] == 1
};

/// Monic coefficients of det(lambda I - M) for a numeric matrix (complex
/// Faddeev-LeVerrier; fine at desk scale n <= 12).
std::vector<std::complex<double>> charpoly_coeffs(const NumericMatrix& m);

/// Monic characteristic polynomial of the 1/sqrt(n)-normalized matrix,
/// evaluated from the unimodular (unscaled) entries.
CharPolySignature char_poly_numeric(const SymbolicMatrix& m, const Binding& b);

enum class ClassVerdict { SameClass, Distinct, Undetermined };
std::string to_string(ClassVerdict v);

/// Tests whether two parametrized catalog families of equal parameter count
/// have identical characteristic polynomials under some quarter-turn shift
/// of each parameter (searched exhaustively; optionally also under a
/// renaming of parameters). SameClass needs agreement at all sampled
/// bindings within 1e-8; Distinct needs a separating sample for every
/// candidate shift.
ClassVerdict charpoly_class_compare(const std::string& name1, const std::string& name2,
                                    int samples, bool allowRenaming = false,
                                    std::uint64_t seed = 20260810);

// Spectra ---------------------------------------------------------------------------

/// Eigenvalues (of M / sqrt(n) when normalize), canonically sorted by real
/// part then imaginary part.
std::vector<std::complex<double>> spectrum(const NumericMatrix& m, bool normalize);

/// Greedy multiset comparison of complex values within tol.
bool complex_multisets_close(std::vector<std::complex<double>> a,
                             std::vector<std::complex<double>> b, double tol);

// Equivalence moves -------------------------------------------------------------------

/// Random D1 P1 M P2 D2 with unit diagonal phases and permutations.
NumericMatrix random_equivalent(const NumericMatrix& m, std::mt19937_64& rng);

}  // namespace hadamax
