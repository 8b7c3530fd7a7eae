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
#include "printed_polys.hpp"
#include "test_util.hpp"

using namespace hadamax;
using hadamax::testutil::max_abs_diff;
using hadamax::testutil::random_binding;
using hadamax::testpolys::monic;
using hadamax::testpolys::printed_poly;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("haagerup set agrees with a brute-force oracle on F2") {
  NumericMatrix f2 = fourier(2);
  // independent oracle: loop the sixteen quadruples directly
  std::vector<double> oracle;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          std::complex<double> v =
              f2(i, j) * f2(k, l) * std::conj(f2(i, l)) * std::conj(f2(k, j));
          double ang = std::arg(v);
          if (ang < 0) ang += 2 * kPi;
          oracle.push_back(ang);
        }
  std::sort(oracle.begin(), oracle.end());
  HaagerupSet s = haagerup_set(f2);
  REQUIRE(s.angles.size() == oracle.size());
  for (size_t t = 0; t < oracle.size(); ++t)
    CHECK(std::abs(s.angles[t] - oracle[t]) < 1e-12);

  auto support = haagerup_support(s, 1e-9);
  REQUIRE(support.size() == 2);
  CHECK(std::abs(support[0] - 0.0) < 1e-12);
  CHECK(std::abs(support[1] - kPi) < 1e-12);

  CHECK_THROWS_AS(haagerup_set(NumericMatrix::Identity(4, 4)), std::invalid_argument);
}

TEST_CASE("the six-dimensional pair shares its haagerup support") {
  auto sa = haagerup_support(haagerup_set(eval_unscaled(catalog_get("D6A").matrix, {})), 1e-9);
  auto sb = haagerup_support(haagerup_set(eval_unscaled(catalog_get("D6B").matrix, {})), 1e-9);
  std::vector<double> quarters = {0.0, kPi / 2, kPi, 3 * kPi / 2};
  REQUIRE(sa.size() == 4);
  REQUIRE(sb.size() == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(sa[k] - quarters[k]) < 1e-9);
    CHECK(std::abs(sb[k] - quarters[k]) < 1e-9);
  }
}

TEST_CASE("haagerup set is invariant under equivalence moves") {
  std::mt19937_64 rng(20);
  NumericMatrix h = eval_unscaled(catalog_get("H4").matrix, {{"a", 0.0}});
  HaagerupSet ref = haagerup_set(h);
  for (int t = 0; t < 50; ++t)
    CHECK(haagerup_close(ref, haagerup_set(random_equivalent(h, rng)), 1e-9));
}

TEST_CASE("entry census") {
  CensusCounts a = entry_census(eval_unscaled(catalog_get("D6A").matrix, {}));
  CHECK(a.minusOne == 9);
  CHECK(a.plusI + a.minusI == 12);
  CHECK(a.other == 0);
  CensusCounts b = entry_census(eval_unscaled(catalog_get("D6B").matrix, {}));
  CHECK(b.minusOne == 9);
  CHECK(b.plusI + b.minusI == 12);
  CensusCounts h4 = entry_census(eval_unscaled(catalog_get("h4").matrix, {}));
  CHECK(h4.plusOne + h4.minusOne == 64);
  CHECK(h4.plusI + h4.minusI == 0);
}

TEST_CASE("the six-dimensional pair: symmetric versus self-adjoint, exactly") {
  const SymbolicMatrix& a = catalog_get("D6A").matrix;
  const SymbolicMatrix& b = catalog_get("D6B").matrix;
  // conjugation of a constant unimodular entry is form negation
  bool aSymmetric = true, bSymmetric = true, aSelfAdjoint = true, bSelfAdjoint = true;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      aSymmetric &= a.at(i, j) == a.at(j, i);
      bSymmetric &= b.at(i, j) == b.at(j, i);
      aSelfAdjoint &= a.at(i, j) == SymbolicEntry(-*a.at(j, i));
      bSelfAdjoint &= b.at(i, j) == SymbolicEntry(-*b.at(j, i));
    }
  CHECK(aSymmetric);
  CHECK(bSelfAdjoint);
  CHECK_FALSE(bSymmetric);
  CHECK_FALSE(aSelfAdjoint);
}

TEST_CASE("fingerprint of the one-phase family at zero") {
  NumericMatrix h = eval_unscaled(catalog_get("H4").matrix, {{"a", 0.0}});
  Fingerprint f = fingerprint(h);
  CHECK(f.legLists.size() == 12);  // 2 * C(4,2)
  CHECK(fingerprint_contains(f, {0, kPi / 2, kPi, 3 * kPi / 2}, 1e-9));
  CHECK(fingerprint_contains(f, {0, 0, kPi, kPi}, 1e-9));
  CHECK_FALSE(fingerprint_contains(f, {0, 2.0, 4.0, 5.0}, 1e-9));
}

TEST_CASE("fingerprint is invariant under equivalence moves") {
  std::mt19937_64 rng(21);
  NumericMatrix m = eval_unscaled(catalog_get("D6B").matrix, {});
  Fingerprint ref = fingerprint(m);
  for (int t = 0; t < 50; ++t)
    CHECK(fingerprint_equal(ref, fingerprint(random_equivalent(m, rng)), 1e-9));

  NumericMatrix other = eval_unscaled(catalog_get("D6A").matrix, {});
  // the pair is separated by some leg list even though the supports agree
  CHECK_FALSE(fingerprint_equal(ref, fingerprint(other), 1e-9));
}

TEST_CASE("exact characteristic polynomials") {
  GaussPoly d6b = char_poly_exact(catalog_get("D6B").matrix);
  CHECK(d6b == quadratic_power_poly(6, 3));
  CHECK(poly_to_string(d6b) == "(y^2-6)^3");

  GaussPoly h4 = char_poly_exact(catalog_get("h4").matrix);
  CHECK(h4 == quadratic_power_poly(8, 4));
  CHECK(poly_to_string(h4) == "(y^2-8)^4");

  SymbolicMatrix i2 = make_symbolic(2, {}, {{"1", "0"}, {"0", "1"}});
  GaussPoly p = char_poly_exact(i2);
  CHECK(p == GaussPoly{{1, 0}, {-2, 0}, {1, 0}});

  // exact and numeric routes agree on a sign matrix
  GaussPoly h1 = char_poly_exact(catalog_get("h1").matrix);
  auto numeric = charpoly_coeffs(eval_unscaled(catalog_get("h1").matrix, {}));
  for (int k = 0; k <= 8; ++k) {
    CHECK(std::abs(numeric[k].real() - double(h1[k].re)) < 1e-9);
    CHECK(std::abs(numeric[k].imag() - double(h1[k].im)) < 1e-9);
  }

  CHECK(char_poly_exact(catalog_get("h1").matrix) == char_poly_exact(catalog_get("h3").matrix));
  CHECK(char_poly_exact(catalog_get("h1").matrix) != char_poly_exact(catalog_get("h2").matrix));
  CHECK(char_poly_exact(catalog_get("h2").matrix) != char_poly_exact(catalog_get("h4").matrix));

  CHECK_THROWS_AS(char_poly_exact(catalog_get("D8A5").matrix), std::invalid_argument);
  NumericMatrix half = NumericMatrix::Constant(2, 2, 0.5);
  CHECK_THROWS_AS(char_poly_exact(half), std::invalid_argument);
}

TEST_CASE("numeric characteristic polynomial at pinned bindings") {
  // zero binding of the first family: monic form of
  // (1-x^2)^2 (2x^4 - sqrt2 x^3 + sqrt2 x - 2) / 2
  Binding zero = {{"a", 0.0}, {"b", 0.0}, {"c", 0.0}, {"d", 0.0}, {"f", 0.0}};
  CharPolySignature sig = char_poly_numeric(catalog_get("D8A5").matrix, zero);
  auto expected = monic(printed_poly("8A", zero));
  REQUIRE(sig.coeffs.size() == expected.size());
  for (size_t k = 0; k < expected.size(); ++k)
    CHECK(std::abs(sig.coeffs[k] - expected[k]) < 1e-12);
  CHECK(std::abs(sig.coeffs.back() - 1.0) < 1e-15);
  CHECK(std::abs(std::abs(sig.coeffs.front()) - 1.0) < 1e-12);

  // D6A spectrum display
  auto spec = spectrum(eval_unscaled(catalog_get("D6A").matrix, {}), true);
  double s6 = std::sqrt(6.0), s30 = std::sqrt(30.0);
  std::complex<double> i(0, 1);
  std::vector<std::complex<double>> printed = {-1.0,
                                               1.0,
                                               i / 6.0 * (-s6 + i * s30),
                                               i / 6.0 * (-s6 - i * s30),
                                               (-s6 + i * s30) / 6.0,
                                               (-s6 - i * s30) / 6.0};
  CHECK(complex_multisets_close(spec, printed, 1e-9));

  // h1 spectrum display
  auto h1spec = spectrum(eval_unscaled(catalog_get("h1").matrix, {}), true);
  double s2 = std::sqrt(2.0), s14 = std::sqrt(14.0);
  std::vector<std::complex<double>> h1printed = {-1.0, -1.0, -1.0, 1.0, 1.0, 1.0,
                                                 (s2 + i * s14) / 4.0, (s2 - i * s14) / 4.0};
  CHECK(complex_multisets_close(h1spec, h1printed, 1e-9));
}

TEST_CASE("printed polynomial displays match the families") {
  std::mt19937_64 rng(22);
  for (const auto& pc : hadamax::testpolys::poly_cases()) {
    CAPTURE(pc.label);
    const auto& family = catalog_get(pc.family).matrix;
    for (int t = 0; t < 5; ++t) {
      Binding b = random_binding(family.params, rng);
      Binding shifted = b;
      if (!pc.shiftParam.empty()) shifted[pc.shiftParam] += kPi;
      auto lhs = char_poly_numeric(family, shifted).coeffs;
      auto rhs = monic(printed_poly(pc.label, b));
      double worst = 0;
      for (size_t k = 0; k < rhs.size(); ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
      CHECK(worst < 1e-8);
    }
  }
}

TEST_CASE("class comparison by characteristic polynomial") {
  CHECK(charpoly_class_compare("D8A5", "D8G5", 5) == ClassVerdict::SameClass);
  CHECK(charpoly_class_compare("D8H5", "D8I5", 5) == ClassVerdict::SameClass);
  CHECK(charpoly_class_compare("D8B5", "D8C5", 5) == ClassVerdict::Distinct);
  CHECK(charpoly_class_compare("D8A5", "D8G5", 0) == ClassVerdict::Undetermined);
  CHECK_THROWS_AS(charpoly_class_compare("D8A5", "D8A4", 5), std::invalid_argument);
  CHECK_THROWS_AS(charpoly_class_compare("K4i", "D6A", 5), std::invalid_argument);
}

TEST_CASE("spectrum conventions") {
  auto f2spec = spectrum(fourier(2), true);
  CHECK(std::abs(f2spec[0] - std::complex<double>(-1, 0)) < 1e-12);
  CHECK(std::abs(f2spec[1] - std::complex<double>(1, 0)) < 1e-12);

  std::mt19937_64 rng(23);
  for (const char* name : {"D8A5", "D6A", "H4"}) {
    const auto& m = catalog_get(name).matrix;
    NumericMatrix n = eval_unscaled(m, random_binding(m.params, rng));
    auto spec = spectrum(n, true);
    auto specT = spectrum(NumericMatrix(n.transpose()), true);
    CHECK(complex_multisets_close(spec, specT, 1e-10));
    auto specConj = spectrum(NumericMatrix(n.conjugate()), true);
    std::vector<std::complex<double>> conjSpec;
    for (auto z : spec) conjSpec.push_back(std::conj(z));
    CHECK(complex_multisets_close(specConj, conjSpec, 1e-10));
    for (auto z : spec) CHECK(std::abs(std::abs(z) - 1.0) < 1e-10);
  }
}

TEST_CASE("polynomial rendering") {
  CHECK(poly_to_string(GaussPoly{{-2, 0}, {0, 1}, {1, 0}}) == "y^2 + iy - 2");
  CHECK(poly_to_string(GaussPoly{{0, 0}, {0, 0}, {1, 0}}) == "y^2");
  CHECK(poly_to_string(quadratic_power_poly(6, 3)) == "(y^2-6)^3");
}
