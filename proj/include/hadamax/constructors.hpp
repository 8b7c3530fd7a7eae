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
#include <complex>
#include <vector>

#include "hadamax/symbolic.hpp"

namespace hadamax {

// Nonlinear doubling: [[A, B], [C, -C A* B]] / sqrt(2). Unitary whenever
// A, B, C are unitary of equal size.

/// Exact symbolic form. Inputs must share dimension and scaleHalfLog; the
/// sqrt(2) lands in the output's scaleHalfLog.
SumMatrix dita_double(const SymbolicMatrix& a, const SymbolicMatrix& b, const SymbolicMatrix& c);
NumericMatrix dita_double(const NumericMatrix& a, const NumericMatrix& b, const NumericMatrix& c);

enum class Side { Left, Right };

/// Elementary blocks [[A,B],[A,-B]] (Left) or [[A,A],[B,-B]] (Right),
/// unscaled.
SymbolicMatrix elementary_double(const SymbolicMatrix& a, const SymbolicMatrix& b, Side side);

/// Four-block analogue with rows (A,B,C,D), (A,-B,C,-D), (A,B,-C,-D),
/// (A,-B,-C,D).
SymbolicMatrix quad_double(const SymbolicMatrix& a, const SymbolicMatrix& b,
                           const SymbolicMatrix& c, const SymbolicMatrix& d);

enum class HybridKind { D2, D3 };

/// Merged block layouts:
///   D2 rows: (A,B,C,D), (A,-B,C,-D), (C,D,-A,-B), (C,-D,-A,B)
///   D3 rows: (A,B,A,B), (B,-A,B,-A), (C,D,-C,-D), (C,-D,-C,D)
/// Validity (all cross products X Y* self-adjoint) is a numeric check at
/// evaluation time; see the two defect helpers below.
SymbolicMatrix hybrid_double(HybridKind kind, const SymbolicMatrix& a, const SymbolicMatrix& b,
                             const SymbolicMatrix& c, const SymbolicMatrix& d);

/// max over pairs X,Y of the blocks of max |(X Y* - (X Y*)*)_ij|.
double cross_selfadjoint_defect(const std::array<NumericMatrix, 4>& blocks);

/// Orthogonality defect of an evaluated hybrid: D2 has pairwise-orthogonal
/// columns and D3 pairwise-orthogonal rows when the block condition holds,
/// so this is the max off-diagonal modulus of H*H (D2) or HH* (D3).
double hybrid_orthogonality_defect(HybridKind kind, const NumericMatrix& h);

/// Williamson sign pattern from four (-1,1) blocks of order m:
///   rows (a,b,c,d), (b,-a,d,-c), (c,-d,-a,b), (d,c,-b,-a).
/// Preconditions (checked exactly in integer arithmetic, errors name the
/// failing pair or sum): every X Y^t symmetric, and
/// a a^t + b b^t + c c^t + d d^t = 4m I. The result is Hadamard of order 4m.
SymbolicMatrix williamson(const SymbolicMatrix& a, const SymbolicMatrix& b,
                          const SymbolicMatrix& c, const SymbolicMatrix& d);

/// The order-8 sign pattern in eight real parameters; S S^t is
/// (sum of squares) * I_8.
NumericMatrix sylvester8(const std::array<double, 8>& v);

/// Standard circulant: each row is the previous one rotated right.
NumericMatrix circulant(const std::vector<std::complex<double>>& row);

struct ZaunerTriplet {
  SymbolicMatrix e1;  // E1(x)
  SymbolicMatrix e2;  // E2(y,z)
  SymbolicMatrix e3;  // E3(w,z); E1* E2 = E3 under w = y - x
};

/// The parametrized 4x4 triplet of mutually unbiased bases (scaleHalfLog -2,
/// i.e. the physical factor 1/2).
ZaunerTriplet zauner_triplet();

/// F_jk = exp(2 pi i j k / n), unscaled.
NumericMatrix fourier(int n);

/// p+1 pairwise mutually unbiased orthonormal bases of C^p (columns are
/// basis vectors, unit norm). p must be prime and at most 31. Uses the
/// standard quadratic-exponent construction for odd p (basis k has entries
/// omega^(k j^2 + j l)/sqrt(p)) and the Pauli eigenbases for p = 2.
std::vector<NumericMatrix> prime_mub_set(int p);

}  // namespace hadamax
