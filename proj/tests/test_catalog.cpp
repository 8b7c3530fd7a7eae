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

#include <set>

#include "hadamax/catalog.hpp"
#include "hadamax/props.hpp"
#include "test_util.hpp"

using namespace hadamax;
using hadamax::testutil::max_abs_diff;
using hadamax::testutil::random_binding;

TEST_CASE("catalog lookup") {
  const auto& a5 = catalog_get("D8A5");
  CHECK(a5.matrix.n == 8);
  CHECK(a5.matrix.params == std::vector<std::string>{"a", "b", "c", "d", "f"});
  CHECK(a5.matrix.scaleHalfLog == -3);
  CHECK(a5.matrix.at(1, 1) == parse_entry("e(a)"));
  CHECK(a5.matrix.at(1, 7) == parse_entry("-1"));
  CHECK(a5.matrix.at(2, 3) == parse_entry("-e(b+d-a)"));

  const auto& k4 = catalog_get("K4i");
  CHECK(k4.matrix.params.empty());
  CHECK(k4.matrix.at(1, 2) == parse_entry("i"));
  CHECK(k4.matrix.at(5, 0) == parse_entry("1"));
  CHECK(k4.matrix.at(6, 2) == parse_entry("-i"));

  CHECK_THROWS_WITH_AS(catalog_get("X9Z"), doctest::Contains("available"),
                       std::invalid_argument);
}

TEST_CASE("catalog listing is complete and stable") {
  auto list = catalog_list();
  CHECK(list == catalog_list());

  std::set<std::string> fiveParam;
  for (const auto& info : list)
    if (info.dimension == 8 && info.paramCount == 5) fiveParam.insert(info.name);
  CHECK(fiveParam == std::set<std::string>{"D8A5", "D8B5", "D8C5", "D8D5", "D8E5", "D8F5",
                                           "D8G5", "D8H5", "D8I5", "D8J5", "D8K5", "D8L5"});

  std::set<std::string> names;
  for (const auto& info : list) names.insert(info.name);
  for (const char* required : {"H4", "P8", "K4i", "D6A", "D6B", "h1", "h2", "h3", "h4", "C6BF",
                               "D8A4", "D8B4", "D8C4", "D8D4", "D8A3"})
    CHECK(names.count(required) == 1);
}

TEST_CASE("every parametrized family in the catalog is identically Hadamard") {
  std::mt19937_64 rng(12);
  for (const auto& info : catalog_list()) {
    const auto& e = catalog_get(info.name);
    if (!e.identicallyHadamard) continue;
    CAPTURE(info.name);
    CHECK(is_hadamard_symbolic(e.matrix));
    Binding b = random_binding(e.matrix.params, rng);
    CHECK(is_hadamard_numeric(eval_unscaled(e.matrix, b), 1e-10));
  }
}

TEST_CASE("sign cores multiply to 8I in integer arithmetic") {
  for (const char* name : {"h1", "h2", "h3", "h4"}) {
    const auto& h = catalog_get(name).matrix;
    SumMatrix gram = sym_mat_mul(h, sym_adjoint(h));
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        if (i == j) {
          auto st = gram.at(i, j).single_term();
          REQUIRE(st.has_value());
          CHECK(st->second == 8);
          CHECK(st->first == PhaseLinearForm{});
        } else {
          CHECK(gram.at(i, j).is_zero());
        }
      }
  }
}

TEST_CASE("standard forms decompose the family representatives") {
  const std::map<std::string, std::string> expected = {
      {"D8A5", "h1"}, {"D8B5", "h2"}, {"D8C5", "h3"}, {"D8E5", "h1"},
      {"D8F5", "h1"}, {"D8I5", "h4"}, {"D8K5", "h4"}, {"D8L5", "h4"}};
  std::mt19937_64 rng(13);
  for (const auto& [name, coreName] : expected) {
    CAPTURE(name);
    StandardForm sf = standard_form(name);
    CHECK(sf.core.grid == catalog_get(coreName).matrix.grid);

    Binding zero;
    for (const auto& p : sf.params) zero[p] = 0.0;
    CHECK(max_abs_diff(assemble_standard(sf, zero),
                       eval_unscaled(catalog_get(coreName).matrix, {})) < 1e-15);

    Binding b = random_binding(sf.params, rng);
    CHECK(max_abs_diff(assemble_standard(sf, b),
                       eval_unscaled(catalog_get(name).matrix, b)) < 1e-12);
  }
  // the regenerated phase grid: row 6, column 2 of the first family carries b
  StandardForm sf = standard_form("D8A5");
  CHECK(sf.phases[5 * 8 + 1] == PhaseLinearForm::variable("b"));
  CHECK(sf.phases[0 * 8 + 0] == PhaseLinearForm{});

  CHECK_THROWS_WITH_AS(standard_form("D8D5"), doctest::Contains("available"),
                       std::invalid_argument);
  CHECK_THROWS_AS(standard_form("X"), std::invalid_argument);
}

TEST_CASE("specialization identities") {
  std::mt19937_64 rng(14);

  // transpose of D8I5 at f=a, d=0 is P8 (with the same parameter names)
  SymbolicMatrix i5 = catalog_get("D8I5").matrix;
  i5 = substitute(i5, "f", PhaseLinearForm::variable("a"));
  i5 = substitute(i5, "d", PhaseLinearForm{});
  const SymbolicMatrix& p8 = catalog_get("P8").matrix;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(i5.at(j, i) == p8.at(i, j));

  // D8J5 at the zero binding is K4i
  Binding zero = {{"a", 0.0}, {"b", 0.0}, {"c", 0.0}, {"d", 0.0}, {"f", 0.0}};
  CHECK(max_abs_diff(eval_unscaled(catalog_get("D8J5").matrix, zero),
                     eval_unscaled(catalog_get("K4i").matrix, {})) < 1e-12);

  // D8G5 under (c,d) -> (c - pi/2, d - pi/2) equals D8A5; also at 100 samples
  SymbolicMatrix g5 = catalog_get("D8G5").matrix;
  g5 = substitute(g5, "c", PhaseLinearForm::variable("c", 1, 3));
  g5 = substitute(g5, "d", PhaseLinearForm::variable("d", 1, 3));
  CHECK(g5.grid == catalog_get("D8A5").matrix.grid);
  for (int t = 0; t < 100; ++t) {
    Binding b = random_binding({"a", "b", "c", "d", "f"}, rng);
    CHECK(max_abs_diff(eval_unscaled(g5, b),
                       eval_unscaled(catalog_get("D8A5").matrix, b)) < 1e-12);
  }
}

TEST_CASE("quantization census of the first five-phase family") {
  QuantizationCensus census = quantization_census("D8A5");
  CHECK(census.distinctCount == 32);
  CHECK(census.multiplicityByEighth ==
        std::map<int, int>{{0, 1}, {1, 8}, {2, 14}, {3, 8}, {4, 1}});
  CHECK_THROWS_AS(quantization_census("K4i"), std::invalid_argument);
}

TEST_CASE("the circulant family is catalogued with its Hadamard binding") {
  const auto& e = catalog_get("C6BF");
  CHECK_FALSE(e.identicallyHadamard);
  CHECK_FALSE(is_hadamard_symbolic(e.matrix));
  CHECK(is_hadamard_numeric(eval_unscaled(e.matrix, e.canonicalBinding), 1e-9));
}
