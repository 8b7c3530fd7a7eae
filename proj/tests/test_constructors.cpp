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

#include <doctest.h>

#include <numbers>

#include "hadamax/catalog.hpp"
#include "hadamax/constructors.hpp"
#include "hadamax/equivalence.hpp"
#include "hadamax/props.hpp"
#include "test_util.hpp"

using namespace hadamax;
using hadamax::testutil::max_abs_diff;
using hadamax::testutil::random_binding;
using hadamax::testutil::random_unitary;

namespace {

NumericMatrix circulant2(double p, double q) {
  NumericMatrix m(2, 2);
  m << p, q, q, p;
  return m;
}

}  // namespace

TEST_CASE("dita doubling is unitary for unitary inputs") {
  std::mt19937_64 rng(7);
  for (int d : {2, 3, 4}) {
    for (int t = 0; t < 10; ++t) {
      NumericMatrix a = random_unitary(d, rng), b = random_unitary(d, rng),
                    c = random_unitary(d, rng);
      NumericMatrix dd = dita_double(a, b, c);
      CHECK(max_abs_diff(dd * dd.adjoint(), NumericMatrix::Identity(2 * d, 2 * d)) < 1e-12);
    }
  }
}

TEST_CASE("symbolic dita doubling agrees with the numeric route") {
  ZaunerTriplet z = zauner_triplet();
  SumMatrix sym = dita_double(z.e1, z.e2, z.e3);
  std::mt19937_64 rng(8);
  Binding b = random_binding({"x", "y", "z", "w"}, rng);
  NumericMatrix viaSym = eval(sym, b);
  NumericMatrix viaNum = dita_double(eval(z.e1, b), eval(z.e2, b), eval(z.e3, b));
  CHECK(max_abs_diff(viaSym, viaNum) < 1e-12);

  SymbolicMatrix f2 = make_symbolic(2, {}, {{"1", "1"}, {"1", "-1"}});
  CHECK_THROWS_AS(dita_double(z.e1, z.e2, f2), std::invalid_argument);
  CHECK_THROWS_AS(dita_double(z.e1, z.e2, z.e3.unscaled()), std::invalid_argument);
}

TEST_CASE("elementary doubles") {
  SymbolicMatrix one = make_symbolic(1, {}, {{"1"}});
  SymbolicMatrix left = elementary_double(one, one, Side::Left);
  CHECK(left.at(0, 0) == parse_entry("1"));
  CHECK(left.at(1, 1) == parse_entry("-1"));

  const auto& h4 = catalog_get("H4").matrix;
  SymbolicMatrix a = substitute(h4, "a", PhaseLinearForm::variable("p"));
  SymbolicMatrix b = substitute(h4, "a", PhaseLinearForm::variable("q"));
  std::mt19937_64 rng(9);
  Binding bind = random_binding({"p", "q"}, rng);
  for (Side side : {Side::Left, Side::Right}) {
    NumericMatrix m = eval_unscaled(elementary_double(a, b, side), bind);
    CHECK(is_hadamard_numeric(m, 1e-10));
  }
  // H4 is symmetric, so the two variants are transposes of each other.
  NumericMatrix l = eval_unscaled(elementary_double(a, b, Side::Left), bind);
  NumericMatrix r = eval_unscaled(elementary_double(a, b, Side::Right), bind);
  CHECK(max_abs_diff(l.transpose(), r) < 1e-12);
}

TEST_CASE("quad double") {
  SymbolicMatrix one = make_symbolic(1, {}, {{"1"}});
  SymbolicMatrix q = quad_double(one, one, one, one);
  NumericMatrix n = eval_unscaled(q, {});
  NumericMatrix expected(4, 4);
  expected << 1, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, 1, -1, -1, 1;
  CHECK(max_abs_diff(n, expected) == 0.0);

  // four scalar phases give an identically Hadamard family
  auto phase = [](const char* name) {
    return make_symbolic(1, {name}, {{std::string("e(") + name + ")"}});
  };
  SymbolicMatrix family = quad_double(phase("a"), phase("b"), phase("c"), phase("d"));
  CHECK(is_hadamard_symbolic(family));

  SymbolicMatrix f2 = make_symbolic(2, {}, {{"1", "1"}, {"1", "-1"}});
  CHECK_THROWS_AS(quad_double(one, one, one, f2), std::invalid_argument);
}

TEST_CASE("hybrid doubles and their validity checks") {
  SymbolicMatrix one = make_symbolic(1, {}, {{"1"}});
  for (HybridKind kind : {HybridKind::D2, HybridKind::D3}) {
    NumericMatrix h = eval_unscaled(hybrid_double(kind, one, one, one, one), {});
    CHECK(max_abs_diff(h * h.transpose(), 4.0 * NumericMatrix::Identity(4, 4)) == 0.0);
  }

  // real circulant blocks: cross products are self-adjoint
  std::array<NumericMatrix, 4> blocks = {circulant2(1, 2), circulant2(3, 4), circulant2(5, 6),
                                         circulant2(7, 8)};
  CHECK(cross_selfadjoint_defect(blocks) < 1e-12);

  auto numeric_hybrid = [&](HybridKind kind, const std::array<NumericMatrix, 4>& blk) {
    NumericMatrix h(8, 8);
    auto put = [&](int bi, int bj, const NumericMatrix& m, double s) {
      h.block(bi * 2, bj * 2, 2, 2) = s * m;
    };
    const auto& [A, B, C, D] = blk;
    if (kind == HybridKind::D2) {
      put(0, 0, A, 1); put(0, 1, B, 1); put(0, 2, C, 1); put(0, 3, D, 1);
      put(1, 0, A, 1); put(1, 1, B, -1); put(1, 2, C, 1); put(1, 3, D, -1);
      put(2, 0, C, 1); put(2, 1, D, 1); put(2, 2, A, -1); put(2, 3, B, -1);
      put(3, 0, C, 1); put(3, 1, D, -1); put(3, 2, A, -1); put(3, 3, B, 1);
    } else {
      put(0, 0, A, 1); put(0, 1, B, 1); put(0, 2, A, 1); put(0, 3, B, 1);
      put(1, 0, B, 1); put(1, 1, A, -1); put(1, 2, B, 1); put(1, 3, A, -1);
      put(2, 0, C, 1); put(2, 1, D, 1); put(2, 2, C, -1); put(2, 3, D, -1);
      put(3, 0, C, 1); put(3, 1, D, -1); put(3, 2, C, -1); put(3, 3, D, 1);
    }
    return h;
  };

  CHECK(hybrid_orthogonality_defect(HybridKind::D2, numeric_hybrid(HybridKind::D2, blocks)) <
        1e-10);
  // block rows of the second kind need norm-matched pairs
  std::array<NumericMatrix, 4> matched = {circulant2(1, 2), circulant2(2, 1), circulant2(5, 6),
                                          circulant2(6, 5)};
  CHECK(hybrid_orthogonality_defect(HybridKind::D3, numeric_hybrid(HybridKind::D3, matched)) <
        1e-10);

  std::array<NumericMatrix, 4> bad = blocks;
  bad[1](0, 1) = std::complex<double>(0, 2.0);  // breaks X Y* self-adjointness
  CHECK(cross_selfadjoint_defect(bad) > 0.1);
  CHECK(hybrid_orthogonality_defect(HybridKind::D2, numeric_hybrid(HybridKind::D2, bad)) > 0.1);

  // the symbolic block layout matches the numeric one
  SymbolicMatrix ph = make_symbolic(1, {"a"}, {{"e(a)"}});
  SymbolicMatrix d2 = hybrid_double(HybridKind::D2, one, ph, one, ph);
  CHECK(d2.at(2, 2) == parse_entry("-1"));
  CHECK(d2.at(3, 1) == parse_entry("-e(a)"));
}

TEST_CASE("williamson construction") {
  auto scalar = [](const char* tok) { return make_symbolic(1, {}, {{tok}}); };
  SymbolicMatrix w = williamson(scalar("1"), scalar("1"), scalar("1"), scalar("1"));
  CHECK(is_hadamard_symbolic(w));
  SymbolicMatrix w2 = williamson(scalar("1"), scalar("1"), scalar("1"), scalar("-1"));
  CHECK(is_hadamard_symbolic(w2));

  // order-12: circulant blocks of size 3
  SymbolicMatrix j3 = make_symbolic(3, {}, {{"1", "1", "1"}, {"1", "1", "1"}, {"1", "1", "1"}});
  SymbolicMatrix b3 = make_symbolic(
      3, {}, {{"1", "-1", "-1"}, {"-1", "1", "-1"}, {"-1", "-1", "1"}});
  SymbolicMatrix w12 = williamson(j3, b3, b3, b3);
  CHECK(w12.n == 12);
  CHECK(is_hadamard_symbolic(w12));

  // asymmetric cross product is rejected with the pair named
  SymbolicMatrix asym = make_symbolic(
      3, {}, {{"1", "1", "-1"}, {"-1", "1", "1"}, {"1", "-1", "1"}});
  CHECK_THROWS_WITH_AS(williamson(j3, asym, b3, b3), doctest::Contains("pair"),
                       std::invalid_argument);
  // wrong Gram sum
  SymbolicMatrix j3neg = make_symbolic(
      3, {}, {{"-1", "1", "1"}, {"1", "-1", "1"}, {"1", "1", "-1"}});
  CHECK_THROWS_WITH_AS(williamson(j3, j3neg, b3, b3), doctest::Contains("4m"),
                       std::invalid_argument);
  // non-sign entry
  SymbolicMatrix phase = make_symbolic(1, {"a"}, {{"e(a)"}});
  CHECK_THROWS_AS(williamson(phase, phase, phase, phase), std::invalid_argument);
}

TEST_CASE("sylvester order-8 pattern") {
  NumericMatrix s1 = sylvester8({1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(max_abs_diff(s1 * s1.transpose(), 8.0 * NumericMatrix::Identity(8, 8)) < 1e-12);

  NumericMatrix s2 = sylvester8({1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(max_abs_diff(s2 * s2.transpose(), NumericMatrix::Identity(8, 8)) < 1e-14);

  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (int t = 0; t < 20; ++t) {
    std::array<double, 8> v;
    double ss = 0;
    for (double& x : v) {
      x = uni(rng);
      ss += x * x;
    }
    NumericMatrix s = sylvester8(v);
    CHECK(max_abs_diff(s * s.transpose(), ss * NumericMatrix::Identity(8, 8)) < 1e-10);
  }
}

TEST_CASE("circulant layout") {
  NumericMatrix ones = circulant({1.0, 1.0});
  CHECK(max_abs_diff(ones, NumericMatrix::Constant(2, 2, 1.0)) == 0.0);

  NumericMatrix ab = circulant({std::complex<double>(2, 0), std::complex<double>(0, 3)});
  CHECK(ab(0, 0) == std::complex<double>(2, 0));
  CHECK(ab(0, 1) == std::complex<double>(0, 3));
  CHECK(ab(1, 0) == std::complex<double>(0, 3));
  CHECK(ab(1, 1) == std::complex<double>(2, 0));

  CHECK_THROWS_AS(circulant({}), std::invalid_argument);

  // the six-dimensional example: Hadamard for both roots, with the
  // (+1,-1)^3 spectrum reached in Sylvester form
  for (int sign : {+1, -1}) {
    double t = sign * std::acos((1.0 - std::sqrt(3.0)) / 2.0);
    std::complex<double> d = std::polar(1.0, t), i(0, 1);
    NumericMatrix c = circulant({1.0, i * d, -d, -i, -1.0 / d, i / d});
    CHECK(is_hadamard_numeric(c, 1e-9));
    auto spec = spectrum(dephase(c), true);
    std::vector<std::complex<double>> expected = {-1, -1, -1, 1, 1, 1};
    CHECK(complex_multisets_close(spec, expected, 1e-9));
  }
}

TEST_CASE("zauner triplet") {
  ZaunerTriplet z = zauner_triplet();
  // E1(0) is the real 4x4 tensor square of the order-2 pattern
  NumericMatrix e10 = eval_unscaled(z.e1, {{"x", 0.0}});
  NumericMatrix f2 = fourier(2);
  NumericMatrix kron(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) kron.block(2 * i, 2 * j, 2, 2) = f2(i, j) * f2;
  CHECK(max_abs_diff(e10, kron) < 1e-14);

  // E3 = E1* E2 under w = y - x, exactly including the scale
  SumMatrix prod = sym_mat_mul(sym_adjoint(z.e1), z.e2);
  auto collapsed = prod.as_symbolic();
  REQUIRE(collapsed.has_value());
  SymbolicMatrix e3sub = substitute(z.e3, "w", PhaseLinearForm{{{"y", 1}, {"x", -1}}, 0});
  CHECK(collapsed->scaleHalfLog == e3sub.scaleHalfLog);
  CHECK(collapsed->grid == e3sub.grid);

  std::mt19937_64 rng(11);
  Binding b = random_binding({"x", "y", "z", "w"}, rng);
  CHECK(unbiasedness_defect(eval(z.e1, b), eval(z.e2, b)) < 1e-12);
  NumericMatrix id = NumericMatrix::Identity(4, 4);
  CHECK(unbiasedness_defect(id, eval(z.e1, b)) < 1e-12);
  CHECK(unbiasedness_defect(id, eval(z.e2, b)) < 1e-12);
  CHECK(unbiasedness_defect(id, eval(z.e3, b)) < 1e-12);
}

TEST_CASE("fourier matrices") {
  NumericMatrix f2 = fourier(2);
  CHECK(max_abs_diff(f2, (NumericMatrix(2, 2) << 1, 1, 1, -1).finished()) < 1e-15);
  NumericMatrix f4 = fourier(4);
  CHECK(std::abs(f4(1, 0) - 1.0) < 1e-15);
  CHECK(std::abs(f4(1, 1) - std::complex<double>(0, 1)) < 1e-15);
  CHECK(std::abs(f4(1, 2) + 1.0) < 1e-15);
  CHECK(std::abs(f4(1, 3) + std::complex<double>(0, 1)) < 1e-15);
  CHECK(hadamard_defect(fourier(8)) < 1e-24);
  CHECK_THROWS_AS(fourier(0), std::invalid_argument);
}

TEST_CASE("prime mub sets") {
  auto all_pairwise = [](const std::vector<NumericMatrix>& bases, double tol) {
    for (size_t i = 0; i < bases.size(); ++i)
      for (size_t j = i + 1; j < bases.size(); ++j)
        if (unbiasedness_defect(bases[i], bases[j]) > tol) return false;
    return true;
  };
  auto mub2 = prime_mub_set(2);
  CHECK(mub2.size() == 3);
  CHECK(max_abs_diff(mub2[0], NumericMatrix::Identity(2, 2)) == 0.0);
  CHECK(all_pairwise(mub2, 1e-12));

  auto mub3 = prime_mub_set(3);
  CHECK(mub3.size() == 4);
  CHECK(all_pairwise(mub3, 1e-12));

  auto mub5 = prime_mub_set(5);
  CHECK(mub5.size() == 6);
  CHECK(all_pairwise(mub5, 1e-12));

  CHECK_THROWS_AS(prime_mub_set(4), std::invalid_argument);
  CHECK_THROWS_AS(prime_mub_set(37), std::invalid_argument);
}
