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

#include "hadamax/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hadamax/catalog.hpp"
#include "hadamax/props.hpp"

namespace hadamax {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kWrapMargin = 1e-12;

// Canonical angle in [-margin, 2 pi - margin); values within the margin of a
// full turn land at ~0 instead of ~2 pi, keeping sorted comparisons stable.
double canonical_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < -kWrapMargin) a += kTwoPi;
  if (a >= kTwoPi - kWrapMargin) a -= kTwoPi;
  return a;
}

double circular_diff(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

}  // namespace

HaagerupSet haagerup_set(const NumericMatrix& m, double hadamardTol) {
  if (!is_hadamard_numeric(m, hadamardTol))
    throw std::invalid_argument("haagerup_set: input is not Hadamard within tolerance");
  const int n = static_cast<int>(m.rows());
  HaagerupSet s;
  s.angles.reserve(static_cast<size_t>(n) * n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          std::complex<double> v = m(i, j) * m(k, l) * std::conj(m(i, l)) * std::conj(m(k, j));
          s.angles.push_back(canonical_angle(std::arg(v)));
        }
  std::sort(s.angles.begin(), s.angles.end());
  return s;
}

bool haagerup_close(const HaagerupSet& a, const HaagerupSet& b, double tol) {
  if (a.angles.size() != b.angles.size()) return false;
  for (size_t k = 0; k < a.angles.size(); ++k)
    if (circular_diff(a.angles[k], b.angles[k]) > tol) return false;
  return true;
}

std::vector<double> haagerup_support(const HaagerupSet& s, double tol) {
  std::vector<double> out;
  for (double a : s.angles)
    if (out.empty() || circular_diff(out.back(), a) > tol) out.push_back(a);
  if (out.size() > 1 && circular_diff(out.front(), out.back()) <= tol) out.pop_back();
  return out;
}

CensusCounts entry_census(const NumericMatrix& m, double tol) {
  CensusCounts c;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      std::complex<double> v = m(i, j);
      if (std::abs(v - std::complex<double>(1, 0)) < tol)
        ++c.plusOne;
      else if (std::abs(v - std::complex<double>(-1, 0)) < tol)
        ++c.minusOne;
      else if (std::abs(v - std::complex<double>(0, 1)) < tol)
        ++c.plusI;
      else if (std::abs(v - std::complex<double>(0, -1)) < tol)
        ++c.minusI;
      else
        ++c.other;
    }
  return c;
}

// Fingerprint ---------------------------------------------------------------------

namespace {

std::vector<double> canonical_leg_list(std::vector<double> angles) {
  const size_t n = angles.size();
  std::vector<double> best;
  for (size_t r = 0; r < n; ++r) {
    std::vector<double> cand(n);
    for (size_t k = 0; k < n; ++k) cand[k] = canonical_angle(angles[k] - angles[r]);
    std::sort(cand.begin(), cand.end());
    if (best.empty() || std::lexicographical_compare(cand.begin(), cand.end(), best.begin(),
                                                     best.end()))
      best = std::move(cand);
  }
  return best;
}

bool leg_lists_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  const size_t n = a.size();
  for (size_t r = 0; r < n; ++r) {
    std::vector<double> cand(n);
    for (size_t k = 0; k < n; ++k) cand[k] = canonical_angle(b[k] - b[r]);
    std::sort(cand.begin(), cand.end());
    bool ok = true;
    for (size_t k = 0; k < n && ok; ++k)
      if (circular_diff(a[k], cand[k]) > tol) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace

Fingerprint fingerprint(const NumericMatrix& m, double hadamardTol) {
  if (!is_hadamard_numeric(m, hadamardTol))
    throw std::invalid_argument("fingerprint: input is not Hadamard within tolerance");
  const int n = static_cast<int>(m.rows());
  Fingerprint f;
  for (int j = 0; j < n; ++j)
    for (int l = j + 1; l < n; ++l) {
      std::vector<double> col_legs(n), row_legs(n);
      for (int i = 0; i < n; ++i) {
        col_legs[i] = std::arg(m(i, j) * std::conj(m(i, l)));
        row_legs[i] = std::arg(m(j, i) * std::conj(m(l, i)));
      }
      f.legLists.push_back(canonical_leg_list(std::move(col_legs)));
      f.legLists.push_back(canonical_leg_list(std::move(row_legs)));
    }
  std::sort(f.legLists.begin(), f.legLists.end());
  return f;
}

bool fingerprint_equal(const Fingerprint& a, const Fingerprint& b, double tol) {
  if (a.legLists.size() != b.legLists.size()) return false;
  const size_t n = a.legLists.size();
  // Canonical order usually aligns the two multisets already.
  bool aligned = true;
  for (size_t k = 0; k < n && aligned; ++k)
    if (!leg_lists_close(a.legLists[k], b.legLists[k], tol)) aligned = false;
  if (aligned) return true;
  // Fall back to bipartite matching (augmenting paths).
  std::vector<std::vector<int>> adj(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (leg_lists_close(a.legLists[i], b.legLists[j], tol)) adj[i].push_back(static_cast<int>(j));
  std::vector<int> match(n, -1);
  std::vector<char> used;
  std::function<bool(int)> augment = [&](int u) -> bool {
    for (int v : adj[u]) {
      if (used[v]) continue;
      used[v] = 1;
      if (match[v] < 0 || augment(match[v])) {
        match[v] = u;
        return true;
      }
    }
    return false;
  };
  for (size_t u = 0; u < n; ++u) {
    used.assign(n, 0);
    if (!augment(static_cast<int>(u))) return false;
  }
  return true;
}

bool fingerprint_contains(const Fingerprint& f, const std::vector<double>& legs, double tol) {
  std::vector<double> canon = canonical_leg_list(legs);
  for (const auto& l : f.legLists)
    if (leg_lists_close(l, canon, tol)) return true;
  return false;
}

// Exact characteristic polynomial ---------------------------------------------------

namespace {

GaussInt div_exact(GaussInt a, long long k, const char* what) {
  if (a.re % k != 0 || a.im % k != 0)
    throw std::logic_error(std::string("inexact division in ") + what);
  return {a.re / k, a.im / k};
}

using GaussMatrix = std::vector<GaussInt>;  // row-major n*n

GaussPoly char_poly_exact_impl(const GaussMatrix& m, int n) {
  // Faddeev-LeVerrier: B_0 = I, c_n = 1; for k = 1..n,
  //   c_{n-k} = -tr(M B_{k-1}) / k,  B_k = M B_{k-1} + c_{n-k} I.
  // Every division by k is exact for integer input, so the recurrence stays
  // in the Gaussian integers.
  GaussPoly coeffs(n + 1);
  coeffs[n] = {1, 0};
  GaussMatrix b(n * n);
  for (int i = 0; i < n; ++i) b[i * n + i] = {1, 0};
  for (int k = 1; k <= n; ++k) {
    GaussMatrix mb(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        GaussInt acc;
        for (int t = 0; t < n; ++t) acc = acc + m[i * n + t] * b[t * n + j];
        mb[i * n + j] = acc;
      }
    GaussInt trace;
    for (int i = 0; i < n; ++i) trace = trace + mb[i * n + i];
    GaussInt c = div_exact({-trace.re, -trace.im}, k, "char_poly_exact");
    coeffs[n - k] = c;
    b = std::move(mb);
    for (int i = 0; i < n; ++i) b[i * n + i] = b[i * n + i] + c;
  }
  return coeffs;
}

}  // namespace

GaussPoly char_poly_exact(const SymbolicMatrix& m) {
  GaussMatrix g(m.n * m.n);
  for (int k = 0; k < m.n * m.n; ++k) {
    if (!m.grid[k]) continue;
    if (!m.grid[k]->is_constant())
      throw std::invalid_argument("char_poly_exact: matrix has free parameters");
    switch (m.grid[k]->quarter) {
      case 0: g[k] = {1, 0}; break;
      case 1: g[k] = {0, 1}; break;
      case 2: g[k] = {-1, 0}; break;
      default: g[k] = {0, -1}; break;
    }
  }
  return char_poly_exact_impl(g, m.n);
}

GaussPoly char_poly_exact(const NumericMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("non-square input");
  const int n = static_cast<int>(m.rows());
  GaussMatrix g(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double re = m(i, j).real(), im = m(i, j).imag();
      long long r = std::llround(re), q = std::llround(im);
      if (std::abs(re - r) > 1e-9 || std::abs(im - q) > 1e-9 || std::llabs(r) > 1 ||
          std::llabs(q) > 1 || (r != 0 && q != 0))
        throw std::invalid_argument("char_poly_exact: entry outside {0, +-1, +-i}");
      g[i * n + j] = {r, q};
    }
  return char_poly_exact_impl(g, n);
}

GaussPoly quadratic_power_poly(long long c, int k) {
  GaussPoly p = {{1, 0}};  // 1
  for (int t = 0; t < k; ++t) {
    GaussPoly q(p.size() + 2);
    for (size_t d = 0; d < p.size(); ++d) {
      q[d + 2] = q[d + 2] + p[d];
      q[d] = q[d] - GaussInt{c, 0} * p[d];
    }
    p = std::move(q);
  }
  return p;
}

std::string poly_to_string(const GaussPoly& p) {
  const int degree = static_cast<int>(p.size()) - 1;
  // Compact power form for the self-adjoint-like case (y^2 - c)^(deg/2).
  if (degree >= 2 && degree % 2 == 0 && p[degree - 2].im == 0) {
    long long c = -p[degree - 2].re * 2 / degree;
    if (c > 0 && quadratic_power_poly(c, degree / 2) == p) {
      std::ostringstream os;
      os << "(y^2-" << c << ")^" << degree / 2;
      return os.str();
    }
  }
  std::ostringstream os;
  bool first = true;
  for (int d = degree; d >= 0; --d) {
    const GaussInt& c = p[d];
    if (c.re == 0 && c.im == 0) continue;
    bool negative = false;
    std::string mag;
    if (c.im == 0) {
      negative = c.re < 0;
      mag = std::to_string(std::llabs(c.re));
    } else if (c.re == 0) {
      negative = c.im < 0;
      long long v = std::llabs(c.im);
      mag = (v == 1 ? "i" : std::to_string(v) + "i");
    } else {
      mag = "(" + std::to_string(c.re) + (c.im > 0 ? "+" : "") + std::to_string(c.im) + "i)";
    }
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    if (d == 0) {
      os << mag;
    } else {
      if (mag != "1") os << mag;
      os << "y";
      if (d > 1) os << "^" << d;
    }
  }
  if (first) os << "0";
  return os.str();
}

// Numeric characteristic polynomial ----------------------------------------------------

std::vector<std::complex<double>> charpoly_coeffs(const NumericMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("non-square input");
  const int n = static_cast<int>(m.rows());
  std::vector<std::complex<double>> coeffs(n + 1);
  coeffs[n] = 1.0;
  NumericMatrix b = NumericMatrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    NumericMatrix mb = m * b;
    std::complex<double> c = -mb.trace() / double(k);
    coeffs[n - k] = c;
    b = mb + c * NumericMatrix::Identity(n, n);
  }
  return coeffs;
}

CharPolySignature char_poly_numeric(const SymbolicMatrix& m, const Binding& b) {
  NumericMatrix num = eval_unscaled(m, b) / std::sqrt(double(m.n));
  CharPolySignature sig;
  sig.degree = m.n;
  sig.coeffs = charpoly_coeffs(num);
  return sig;
}

std::string to_string(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::SameClass: return "same-class";
    case ClassVerdict::Distinct: return "distinct";
    default: return "undetermined";
  }
}

ClassVerdict charpoly_class_compare(const std::string& name1, const std::string& name2,
                                    int samples, bool allowRenaming, std::uint64_t seed) {
  const CatalogEntry& e1 = catalog_get(name1);
  const CatalogEntry& e2 = catalog_get(name2);
  const int p = static_cast<int>(e1.matrix.params.size());
  if (p == 0 || p != static_cast<int>(e2.matrix.params.size()) || e1.matrix.n != e2.matrix.n)
    throw std::invalid_argument("charpoly_class_compare: incompatible entries");
  if (samples <= 0) return ClassVerdict::Undetermined;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, kTwoPi);
  std::vector<std::vector<double>> sampleValues(samples, std::vector<double>(p));
  for (auto& v : sampleValues)
    for (double& x : v) x = uni(rng);

  std::vector<std::vector<std::complex<double>>> sig1(samples);
  for (int t = 0; t < samples; ++t) {
    Binding b;
    for (int k = 0; k < p; ++k) b[e1.matrix.params[k]] = sampleValues[t][k];
    sig1[t] = char_poly_numeric(e1.matrix, b).coeffs;
  }

  const double tol = 1e-8;
  auto coeffs_match = [&](const std::vector<std::complex<double>>& a,
                          const std::vector<std::complex<double>>& b2) {
    for (size_t k = 0; k < a.size(); ++k)
      if (std::abs(a[k] - b2[k]) > tol) return false;
    return true;
  };

  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  const long long shiftCount = 1LL << (2 * p);  // 4^p
  do {
    for (long long code = 0; code < shiftCount; ++code) {
      bool allMatch = true;
      for (int t = 0; t < samples && allMatch; ++t) {
        Binding b;
        long long c = code;
        for (int k = 0; k < p; ++k) {
          int shift = static_cast<int>(c & 3);
          c >>= 2;
          b[e2.matrix.params[k]] =
              sampleValues[t][perm[k]] + shift * (std::numbers::pi / 2.0);
        }
        if (!coeffs_match(sig1[t], char_poly_numeric(e2.matrix, b).coeffs)) allMatch = false;
      }
      if (allMatch) return ClassVerdict::SameClass;
    }
    if (!allowRenaming) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return ClassVerdict::Distinct;
}

// Spectra ------------------------------------------------------------------------------

std::vector<std::complex<double>> spectrum(const NumericMatrix& m, bool normalize) {
  if (m.rows() != m.cols()) throw std::invalid_argument("non-square input");
  NumericMatrix work = m;
  if (normalize) work /= std::sqrt(double(m.rows()));
  Eigen::ComplexEigenSolver<NumericMatrix> solver(work, false);
  std::vector<std::complex<double>> eig(solver.eigenvalues().data(),
                                        solver.eigenvalues().data() + m.rows());
  std::sort(eig.begin(), eig.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return eig;
}

bool complex_multisets_close(std::vector<std::complex<double>> a,
                             std::vector<std::complex<double>> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    double bestDist = tol;
    size_t best = b.size();
    for (size_t k = 0; k < b.size(); ++k) {
      double d = std::abs(x - b[k]);
      if (d <= bestDist) {
        bestDist = d;
        best = k;
      }
    }
    if (best == b.size()) return false;
    b.erase(b.begin() + best);
  }
  return true;
}

NumericMatrix random_equivalent(const NumericMatrix& m, std::mt19937_64& rng) {
  const int n = static_cast<int>(m.rows());
  std::uniform_real_distribution<double> uni(0.0, kTwoPi);
  NumericMatrix out = m;
  for (int i = 0; i < n; ++i) out.row(i) *= std::polar(1.0, uni(rng));
  for (int j = 0; j < n; ++j) out.col(j) *= std::polar(1.0, uni(rng));
  std::vector<int> rp(n), cp(n);
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  std::shuffle(rp.begin(), rp.end(), rng);
  std::shuffle(cp.begin(), cp.end(), rng);
  NumericMatrix permuted(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) permuted(i, j) = out(rp[i], cp[j]);
  return permuted;
}

}  // namespace hadamax
