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

#include "hadamax/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hadamax {

namespace {

std::vector<std::string> merge_params(std::initializer_list<const SymbolicMatrix*> ms) {
  std::vector<std::string> out;
  for (const auto* m : ms)
    for (const auto& name : m->params)
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  return out;
}

void require_equal_blocks(std::initializer_list<const SymbolicMatrix*> ms) {
  const SymbolicMatrix* first = *ms.begin();
  for (const auto* m : ms) {
    if (m->n != first->n) throw std::invalid_argument("dimension mismatch");
    if (m->scaleHalfLog != first->scaleHalfLog)
      throw std::invalid_argument("scale mismatch between blocks");
  }
}

// Places block src into dst at block position (bi, bj), each entry shifted by
// `quarter` extra quarter turns (2 = sign flip).
void place_block(SymbolicMatrix& dst, const SymbolicMatrix& src, int bi, int bj, int quarter) {
  const int m = src.n;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (const auto& e = src.at(i, j)) dst.at(bi * m + i, bj * m + j) = e->shifted(quarter);
}

SymbolicMatrix block_matrix(std::initializer_list<const SymbolicMatrix*> blocks,
                            const std::vector<std::vector<std::pair<int, int>>>& layout) {
  // layout[bi][bj] = (block index, quarter shift)
  require_equal_blocks(blocks);
  const SymbolicMatrix* first = *blocks.begin();
  const int k = static_cast<int>(layout.size());
  SymbolicMatrix out(first->n * k, merge_params(blocks), first->scaleHalfLog);
  std::vector<const SymbolicMatrix*> bs(blocks);
  for (int bi = 0; bi < k; ++bi)
    for (int bj = 0; bj < k; ++bj)
      place_block(out, *bs[layout[bi][bj].first], bi, bj, layout[bi][bj].second);
  return out;
}

}  // namespace

SumMatrix dita_double(const SymbolicMatrix& a, const SymbolicMatrix& b, const SymbolicMatrix& c) {
  require_equal_blocks({&a, &b, &c});
  const int d = a.n;
  const int s = a.scaleHalfLog;
  SumMatrix product = sum_mat_mul(sum_mat_mul(to_sum(c), to_sum(sym_adjoint(a))), to_sum(b));
  // One global scale for all blocks: plain blocks carry 2^(s/2) per entry and
  // the product block 2^(3s/2), so whichever is smaller sets the output scale
  // and the other side picks up an integer multiplicity.
  const int outScale = std::min(s, 3 * s) - 1;
  const long long multPlain = 1LL << ((s - 1 - outScale) / 2);
  const long long multProduct = 1LL << ((3 * s - 1 - outScale) / 2);
  SumMatrix out(2 * d, merge_params({&a, &b, &c}), outScale);
  auto place_plain = [&](const SymbolicMatrix& src, int bi, int bj) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (const auto& e = src.at(i, j)) out.at(bi * d + i, bj * d + j).add_term(*e, multPlain);
  };
  place_plain(a, 0, 0);
  place_plain(b, 0, 1);
  place_plain(c, 1, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [f, m] : product.at(i, j).terms)
        out.at(d + i, d + j).add_term(f, -m * multProduct);
  return out;
}

NumericMatrix dita_double(const NumericMatrix& a, const NumericMatrix& b, const NumericMatrix& c) {
  if (a.rows() != b.rows() || a.rows() != c.rows() || a.rows() != a.cols() ||
      b.rows() != b.cols() || c.rows() != c.cols())
    throw std::invalid_argument("dimension mismatch");
  const int d = static_cast<int>(a.rows());
  NumericMatrix out(2 * d, 2 * d);
  out.topLeftCorner(d, d) = a;
  out.topRightCorner(d, d) = b;
  out.bottomLeftCorner(d, d) = c;
  out.bottomRightCorner(d, d) = -c * a.adjoint() * b;
  return out / std::sqrt(2.0);
}

SymbolicMatrix elementary_double(const SymbolicMatrix& a, const SymbolicMatrix& b, Side side) {
  if (side == Side::Left) return block_matrix({&a, &b}, {{{0, 0}, {1, 0}}, {{0, 0}, {1, 2}}});
  return block_matrix({&a, &b}, {{{0, 0}, {0, 0}}, {{1, 0}, {1, 2}}});
}

SymbolicMatrix quad_double(const SymbolicMatrix& a, const SymbolicMatrix& b,
                           const SymbolicMatrix& c, const SymbolicMatrix& d) {
  return block_matrix({&a, &b, &c, &d}, {{{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                                         {{0, 0}, {1, 2}, {2, 0}, {3, 2}},
                                         {{0, 0}, {1, 0}, {2, 2}, {3, 2}},
                                         {{0, 0}, {1, 2}, {2, 2}, {3, 0}}});
}

SymbolicMatrix hybrid_double(HybridKind kind, const SymbolicMatrix& a, const SymbolicMatrix& b,
                             const SymbolicMatrix& c, const SymbolicMatrix& d) {
  if (kind == HybridKind::D2)
    return block_matrix({&a, &b, &c, &d}, {{{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                                           {{0, 0}, {1, 2}, {2, 0}, {3, 2}},
                                           {{2, 0}, {3, 0}, {0, 2}, {1, 2}},
                                           {{2, 0}, {3, 2}, {0, 2}, {1, 0}}});
  return block_matrix({&a, &b, &c, &d}, {{{0, 0}, {1, 0}, {0, 0}, {1, 0}},
                                         {{1, 0}, {0, 2}, {1, 0}, {0, 2}},
                                         {{2, 0}, {3, 0}, {2, 2}, {3, 2}},
                                         {{2, 0}, {3, 2}, {2, 2}, {3, 0}}});
}

double cross_selfadjoint_defect(const std::array<NumericMatrix, 4>& blocks) {
  double defect = 0.0;
  for (const auto& x : blocks)
    for (const auto& y : blocks) {
      NumericMatrix p = x * y.adjoint();
      defect = std::max(defect, (p - p.adjoint()).cwiseAbs().maxCoeff());
    }
  return defect;
}

double hybrid_orthogonality_defect(HybridKind kind, const NumericMatrix& h) {
  if (h.rows() % 4 != 0) throw std::invalid_argument("hybrid matrix order must be 4m");
  const int m = static_cast<int>(h.rows()) / 4;
  NumericMatrix gram = kind == HybridKind::D2 ? NumericMatrix(h.adjoint() * h)
                                              : NumericMatrix(h * h.adjoint());
  // Distinct block columns (D2) / block rows (D3) are the orthogonal units;
  // the Gram is block diagonal when the cross-product condition holds.
  double defect = 0.0;
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = 0; j < gram.cols(); ++j)
      if (i / m != j / m) defect = std::max(defect, std::abs(gram(i, j)));
  return defect;
}

namespace {

// Integer view of a (-1,1) block; throws if an entry is anything else.
Eigen::MatrixXi sign_block(const SymbolicMatrix& m, const char* label) {
  Eigen::MatrixXi out(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      const auto& e = m.at(i, j);
      if (!e || !e->is_constant() || e->quarter % 2 != 0)
        throw std::invalid_argument(std::string("williamson: block ") + label +
                                    " has an entry outside {-1, 1}");
      out(i, j) = e->quarter == 0 ? 1 : -1;
    }
  return out;
}

}  // namespace

SymbolicMatrix williamson(const SymbolicMatrix& a, const SymbolicMatrix& b,
                          const SymbolicMatrix& c, const SymbolicMatrix& d) {
  require_equal_blocks({&a, &b, &c, &d});
  const int m = a.n;
  const char* names = "abcd";
  std::array<Eigen::MatrixXi, 4> blocks = {sign_block(a, "a"), sign_block(b, "b"),
                                           sign_block(c, "c"), sign_block(d, "d")};
  for (int x = 0; x < 4; ++x)
    for (int y = x; y < 4; ++y) {
      Eigen::MatrixXi p = blocks[x] * blocks[y].transpose();
      if (p != p.transpose().eval())
        throw std::invalid_argument(std::string("williamson: pair (") + names[x] + "," + names[y] +
                                    ") has non-symmetric X Y^t");
    }
  Eigen::MatrixXi gram = Eigen::MatrixXi::Zero(m, m);
  for (const auto& x : blocks) gram += x * x.transpose();
  if (gram != (4 * m * Eigen::MatrixXi::Identity(m, m)).eval())
    throw std::invalid_argument(
        "williamson: a a^t + b b^t + c c^t + d d^t differs from 4m I");
  return block_matrix({&a, &b, &c, &d}, {{{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                                         {{1, 0}, {0, 2}, {3, 0}, {2, 2}},
                                         {{2, 0}, {3, 2}, {0, 2}, {1, 0}},
                                         {{3, 0}, {2, 0}, {1, 2}, {0, 2}}});
}

NumericMatrix sylvester8(const std::array<double, 8>& v) {
  const auto [a, b, c, d, l, m, n, p] = v;
  NumericMatrix s(8, 8);
  s << a, b, c, d, l, m, n, p,        //
      b, -a, -d, c, m, -l, p, -n,     //
      c, d, -a, -b, n, -p, -l, m,     //
      d, -c, b, -a, p, n, -m, -l,     //
      l, -m, -n, -p, -a, b, c, d,     //
      m, l, p, -n, -b, -a, d, -c,     //
      n, -p, l, m, -c, -d, -a, b,     //
      p, n, -m, l, -d, c, -b, -a;
  return s;
}

NumericMatrix circulant(const std::vector<std::complex<double>>& row) {
  if (row.empty()) throw std::invalid_argument("circulant: empty row");
  const int n = static_cast<int>(row.size());
  NumericMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = row[((j - i) % n + n) % n];
  return out;
}

ZaunerTriplet zauner_triplet() {
  ZaunerTriplet t;
  t.e1 = make_symbolic(4, {"x"},
                       {{"1", "1", "1", "1"},
                        {"1", "-1", "e(x)", "-e(x)"},
                        {"1", "1", "-1", "-1"},
                        {"1", "-1", "-e(x)", "e(x)"}},
                       -2);
  t.e2 = make_symbolic(4, {"y", "z"},
                       {{"1", "1", "1", "1"},
                        {"e(y)", "-e(y)", "e(z)", "-e(z)"},
                        {"1", "1", "-1", "-1"},
                        {"-e(y)", "e(y)", "e(z)", "-e(z)"}},
                       -2);
  t.e3 = make_symbolic(4, {"w", "z"},
                       {{"1", "1", "e(z)", "-e(z)"},
                        {"1", "1", "-e(z)", "e(z)"},
                        {"e(w)", "-e(w)", "1", "1"},
                        {"-e(w)", "e(w)", "1", "1"}},
                       -2);
  return t;
}

NumericMatrix fourier(int n) {
  if (n < 1) throw std::invalid_argument("fourier: n must be positive");
  NumericMatrix f(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      f(j, k) = std::polar(1.0, 2.0 * std::numbers::pi * double(j) * double(k) / double(n));
  return f;
}

std::vector<NumericMatrix> prime_mub_set(int p) {
  auto is_prime = [](int q) {
    if (q < 2) return false;
    for (int k = 2; k * k <= q; ++k)
      if (q % k == 0) return false;
    return true;
  };
  if (!is_prime(p)) throw std::invalid_argument("prime_mub_set: p must be prime");
  if (p > 31) throw std::invalid_argument("prime_mub_set: p must be at most 31");

  std::vector<NumericMatrix> bases;
  bases.push_back(NumericMatrix::Identity(p, p));
  if (p == 2) {
    NumericMatrix x(2, 2), y(2, 2);
    const std::complex<double> i(0.0, 1.0);
    x << 1, 1, 1, -1;
    y << 1, 1, i, -i;
    bases.push_back(x / std::sqrt(2.0));
    bases.push_back(y / std::sqrt(2.0));
    return bases;
  }
  for (int k = 0; k < p; ++k) {
    NumericMatrix bk(p, p);
    for (int j = 0; j < p; ++j)
      for (int l = 0; l < p; ++l) {
        long long expo = (1LL * k * j * j + 1LL * j * l) % p;
        bk(j, l) = std::polar(1.0 / std::sqrt(double(p)),
                              2.0 * std::numbers::pi * double(expo) / double(p));
      }
    bases.push_back(bk);
  }
  return bases;
}

}  // namespace hadamax
