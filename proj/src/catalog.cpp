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

#include "hadamax/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hadamax {

namespace {

using Rows = std::vector<std::vector<std::string>>;

CatalogEntry entry(std::string name, std::vector<std::string> params, const Rows& rows,
                   int scale, std::string notes) {
  CatalogEntry e;
  e.name = std::move(name);
  e.matrix = make_symbolic(static_cast<int>(rows.size()), std::move(params), rows, scale);
  e.notes = std::move(notes);
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  const std::vector<std::string> abcdf = {"a", "b", "c", "d", "f"};
  const std::vector<std::string> abcd = {"a", "b", "c", "d"};
  const std::vector<std::string> abc = {"a", "b", "c"};

  cat.push_back(entry("H4", {"a"},
                      {{"1", "1", "1", "1"},
                       {"1", "i e(a)", "-i e(a)", "-1"},
                       {"1", "-i e(a)", "i e(a)", "-1"},
                       {"1", "-1", "-1", "1"}},
                      -2, "one-phase 4x4 family"));

  cat.push_back(entry("D8A5", abcdf,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "e(f)", "e(d)", "-e(d)", "-e(f)", "-e(a)", "-1"},
                       {"1", "e(b)", "-e(f)", "-e(b+d-a)", "e(b+d-a)", "e(f)", "-e(b)", "-1"},
                       {"1", "e(c)", "-e(c)", "-1", "-1", "-e(c)", "e(c)", "1"},
                       {"1", "-e(c)", "e(c)", "-1", "-1", "e(c)", "-e(c)", "1"},
                       {"1", "-e(b)", "-e(f)", "e(b+d-a)", "-e(b+d-a)", "e(f)", "e(b)", "-1"},
                       {"1", "-e(a)", "e(f)", "-e(d)", "e(d)", "-e(f)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "five-phase 8x8 family, core h1"));

  cat.push_back(entry("D8B5", abcdf,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "-e(a)", "e(d)", "-e(d)", "-e(a)", "e(a)", "-1"},
                       {"1", "e(b)", "e(b-c+f)", "-e(d)", "e(d)", "-e(b-c+f)", "-e(b)", "-1"},
                       {"1", "e(c)", "-e(f)", "-1", "-1", "e(f)", "-e(c)", "1"},
                       {"1", "-e(c)", "e(f)", "-1", "-1", "-e(f)", "e(c)", "1"},
                       {"1", "-e(b)", "-e(b-c+f)", "-e(d)", "e(d)", "e(b-c+f)", "e(b)", "-1"},
                       {"1", "-e(a)", "e(a)", "e(d)", "-e(d)", "e(a)", "-e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "five-phase 8x8 family, core h2"));

  cat.push_back(entry("D8C5", abcdf,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "e(a-c+f)", "e(d)", "-e(d)", "-e(a-c+f)", "-e(a)", "-1"},
                       {"1", "e(b)", "-e(b)", "-e(d)", "e(d)", "-e(b)", "e(b)", "-1"},
                       {"1", "e(c)", "-e(f)", "-1", "-1", "e(f)", "-e(c)", "1"},
                       {"1", "-e(c)", "e(f)", "-1", "-1", "-e(f)", "e(c)", "1"},
                       {"1", "-e(b)", "e(b)", "-e(d)", "e(d)", "e(b)", "-e(b)", "-1"},
                       {"1", "-e(a)", "-e(a-c+f)", "e(d)", "-e(d)", "e(a-c+f)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "five-phase 8x8 family, core h3"));

  cat.push_back(entry("D8D5", abcdf,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "e(f)", "e(d)", "-e(d)", "-e(f)", "-e(a)", "-1"},
                       {"1", "e(b)", "-e(b)", "-e(d)", "e(d)", "-e(b)", "e(b)", "-1"},
                       {"1", "e(c)", "-e(c+f-a)", "-1", "-1", "e(c+f-a)", "-e(c)", "1"},
                       {"1", "-e(c)", "e(c+f-a)", "-1", "-1", "-e(c+f-a)", "e(c)", "1"},
                       {"1", "-e(b)", "e(b)", "-e(d)", "e(d)", "e(b)", "-e(b)", "-1"},
                       {"1", "-e(a)", "-e(f)", "e(d)", "-e(d)", "e(f)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "five-phase 8x8 family"));

  cat.push_back(entry("D8E5", abcdf,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "e(f)", "e(a-b+d)", "-e(a-b+d)", "-e(f)", "-e(a)", "-1"},
                       {"1", "e(b)", "-e(f)", "-e(d)", "e(d)", "e(f)", "-e(b)", "-1"},
                       {"1", "e(c)", "-e(c)", "-1", "-1", "-e(c)", "e(c)", "1"},
                       {"1", "-e(c)", "e(c)", "-1", "-1", "e(c)", "-e(c)", "1"},
                       {"1", "-e(b)", "-e(f)", "e(d)", "-e(d)", "e(f)", "e(b)", "-1"},
                       {"1", "-e(a)", "e(f)", "-e(a-b+d)", "e(a-b+d)", "-e(f)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "five-phase 8x8 family, core h1"));

  cat.push_back(entry("D8F5", abcdf,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "e(f)", "e(d)", "-e(d)", "-e(f)", "-e(a)", "-1"},
                       {"1", "e(a)", "-e(f)", "-e(d)", "e(d)", "e(f)", "-e(a)", "-1"},
                       {"1", "e(c)", "-e(c)", "-1", "-1", "-e(c)", "e(c)", "1"},
                       {"1", "-e(c)", "e(c)", "-1", "-1", "e(c)", "-e(c)", "1"},
                       {"1", "-e(a)", "-e(b-d+f)", "e(b)", "-e(b)", "e(b-d+f)", "e(a)", "-1"},
                       {"1", "-e(a)", "e(b-d+f)", "-e(b)", "e(b)", "-e(b-d+f)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "five-phase 8x8 family, core h1"));

  cat.push_back(entry("D8G5", abcdf,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "e(f)", "i e(d)", "-i e(d)", "-e(f)", "-e(a)", "-1"},
                       {"1", "e(b)", "-e(f)", "-i e(b+d-a)", "i e(b+d-a)", "e(f)", "-e(b)", "-1"},
                       {"1", "i e(c)", "-i e(c)", "-1", "-1", "-i e(c)", "i e(c)", "1"},
                       {"1", "-i e(c)", "i e(c)", "-1", "-1", "i e(c)", "-i e(c)", "1"},
                       {"1", "-e(b)", "-e(f)", "i e(b+d-a)", "-i e(b+d-a)", "e(f)", "e(b)", "-1"},
                       {"1", "-e(a)", "e(f)", "-i e(d)", "i e(d)", "-e(f)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "five-phase 8x8 family; quarter-shift relative of D8A5"));

  cat.push_back(entry("D8H5", abcdf,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "i e(f)", "e(d)", "-e(d)", "-i e(f)", "-e(a)", "-1"},
                       {"1", "e(b)", "-i e(b+f-a)", "-e(d)", "e(d)", "i e(b+f-a)", "-e(b)", "-1"},
                       {"1", "e(c)", "-e(c)", "-1", "-1", "-e(c)", "e(c)", "1"},
                       {"1", "-e(c)", "e(c)", "-1", "-1", "e(c)", "-e(c)", "1"},
                       {"1", "-e(b)", "i e(b+f-a)", "-e(d)", "e(d)", "-i e(b+f-a)", "e(b)", "-1"},
                       {"1", "-e(a)", "-i e(f)", "e(d)", "-e(d)", "i e(f)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "five-phase 8x8 family; quarter-shift relative of D8I5"));

  cat.push_back(entry("P8", abc,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "e(b)", "e(c)", "-e(c)", "-e(b)", "-e(a)", "-1"},
                       {"1", "e(a)", "-e(b)", "-e(c)", "e(c)", "e(b)", "-e(a)", "-1"},
                       {"1", "1", "-1", "-1", "-1", "-1", "1", "1"},
                       {"1", "-1", "1", "-1", "-1", "1", "-1", "1"},
                       {"1", "-e(a)", "e(b)", "-e(c)", "e(c)", "-e(b)", "e(a)", "-1"},
                       {"1", "-e(a)", "-e(b)", "e(c)", "-e(c)", "e(b)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "three-phase 8x8 matrix; transpose of D8I5 at f=a, d=0"));

  cat.push_back(entry("D8I5", abcdf,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "e(f)", "e(d)", "-e(d)", "-e(f)", "-e(a)", "-1"},
                       {"1", "e(b)", "-e(b+f-a)", "-e(d)", "e(d)", "e(b+f-a)", "-e(b)", "-1"},
                       {"1", "e(c)", "-e(c)", "-1", "-1", "-e(c)", "e(c)", "1"},
                       {"1", "-e(c)", "e(c)", "-1", "-1", "e(c)", "-e(c)", "1"},
                       {"1", "-e(b)", "e(b+f-a)", "-e(d)", "e(d)", "-e(b+f-a)", "e(b)", "-1"},
                       {"1", "-e(a)", "-e(f)", "e(d)", "-e(d)", "e(f)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "five-phase 8x8 family, core h4"));

  cat.push_back(entry("K4i", {},
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "1", "i", "i", "-i", "-i", "-1", "-1"},
                       {"1", "i", "1", "-i", "i", "-1", "-i", "-1"},
                       {"1", "i", "-i", "-1", "-1", "-i", "i", "1"},
                       {"1", "-i", "i", "-1", "-1", "i", "-i", "1"},
                       {"1", "-i", "-1", "-i", "i", "1", "i", "-1"},
                       {"1", "-1", "-i", "i", "-i", "i", "1", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "constant quadriphase 8x8 matrix; D8J5 at the zero binding"));

  cat.push_back(entry("D8J5", abcdf,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "i e(d)", "i e(f)", "-i e(f)", "-i e(d)", "-e(a)", "-1"},
                       {"1", "i e(b)", "e(b+d-a)", "-i e(f)", "i e(f)", "-e(b+d-a)", "-i e(b)", "-1"},
                       {"1", "i e(c)", "-i e(c)", "-1", "-1", "-i e(c)", "i e(c)", "1"},
                       {"1", "-i e(c)", "i e(c)", "-1", "-1", "i e(c)", "-i e(c)", "1"},
                       {"1", "-i e(b)", "-e(b+d-a)", "-i e(f)", "i e(f)", "e(b+d-a)", "i e(b)", "-1"},
                       {"1", "-e(a)", "-i e(d)", "i e(f)", "-i e(f)", "i e(d)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "five-phase 8x8 family; quarter-shift relative of D8K5"));

  cat.push_back(entry("D8K5", abcdf,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "e(d)", "e(f)", "-e(f)", "-e(d)", "-e(a)", "-1"},
                       {"1", "e(b)", "-e(b+d-a)", "-e(f)", "e(f)", "e(b+d-a)", "-e(b)", "-1"},
                       {"1", "e(c)", "-e(c)", "-1", "-1", "-e(c)", "e(c)", "1"},
                       {"1", "-e(c)", "e(c)", "-1", "-1", "e(c)", "-e(c)", "1"},
                       {"1", "-e(b)", "e(b+d-a)", "-e(f)", "e(f)", "-e(b+d-a)", "e(b)", "-1"},
                       {"1", "-e(a)", "-e(d)", "e(f)", "-e(f)", "e(d)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "five-phase 8x8 family, core h4"));

  cat.push_back(entry("D8L5", abcdf,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "e(b+d-f)", "e(d)", "-e(d)", "-e(b+d-f)", "-e(a)", "-1"},
                       {"1", "e(a)", "-e(b+d-f)", "-e(d)", "e(d)", "e(b+d-f)", "-e(a)", "-1"},
                       {"1", "e(c)", "-e(c)", "-1", "-1", "-e(c)", "e(c)", "1"},
                       {"1", "-e(c)", "e(c)", "-1", "-1", "e(c)", "-e(c)", "1"},
                       {"1", "-e(a)", "e(b)", "-e(f)", "e(f)", "-e(b)", "e(a)", "-1"},
                       {"1", "-e(a)", "-e(b)", "e(f)", "-e(f)", "e(b)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "five-phase 8x8 family, core h4"));

  cat.push_back(entry("D8A4", abcd,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "-e(a)", "e(d)", "-e(d)", "-e(a)", "e(a)", "-1"},
                       {"1", "e(b)", "e(a)", "-e(d)", "e(d)", "-e(a)", "-e(b)", "-1"},
                       {"1", "e(c)", "-e(a-b+c)", "-1", "-1", "e(a-b+c)", "-e(c)", "1"},
                       {"1", "-e(c)", "e(a-b+c)", "-1", "-1", "-e(a-b+c)", "e(c)", "1"},
                       {"1", "-e(b)", "-e(a)", "-e(d)", "e(d)", "e(a)", "e(b)", "-1"},
                       {"1", "-e(a)", "e(a)", "e(d)", "-e(d)", "e(a)", "-e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "four-phase 8x8 family"));

  cat.push_back(entry("D8B4", abcd,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "-e(a)", "e(d)", "-e(d)", "-e(a)", "e(a)", "-1"},
                       {"1", "e(b)", "e(b-a)", "-e(d)", "e(d)", "-e(b-a)", "-e(b)", "-1"},
                       {"1", "e(c)", "-e(c-a)", "-1", "-1", "e(c-a)", "-e(c)", "1"},
                       {"1", "-e(c)", "e(c-a)", "-1", "-1", "-e(c-a)", "e(c)", "1"},
                       {"1", "-e(b)", "-e(b-a)", "-e(d)", "e(d)", "e(b-a)", "e(b)", "-1"},
                       {"1", "-e(a)", "e(a)", "e(d)", "-e(d)", "e(a)", "-e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "four-phase 8x8 family"));

  cat.push_back(entry("D8C4", abcd,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "e(d)", "i e(a-c+d)", "-i e(a-c+d)", "-e(d)", "-e(a)", "-1"},
                       {"1", "e(b)", "-e(d)", "-i e(b-c+d)", "i e(b-c+d)", "e(d)", "-e(b)", "-1"},
                       {"1", "e(c)", "-e(c)", "-1", "-1", "-e(c)", "e(c)", "1"},
                       {"1", "-e(c)", "e(c)", "-1", "-1", "e(c)", "-e(c)", "1"},
                       {"1", "-e(b)", "-e(d)", "i e(b-c+d)", "-i e(b-c+d)", "e(d)", "e(b)", "-1"},
                       {"1", "-e(a)", "e(d)", "-i e(a-c+d)", "i e(a-c+d)", "-e(d)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "four-phase 8x8 family with explicit quarter turns"));

  cat.push_back(entry("D8D4", abcd,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "i e(c+d-a)", "e(d)", "-e(d)", "-i e(c+d-a)", "-e(a)", "-1"},
                       {"1", "e(b)", "-i e(c+d-a)", "-e(b+d-a)", "e(b+d-a)", "i e(c+d-a)", "-e(b)", "-1"},
                       {"1", "e(c)", "-e(c)", "-1", "-1", "-e(c)", "e(c)", "1"},
                       {"1", "-e(c)", "e(c)", "-1", "-1", "e(c)", "-e(c)", "1"},
                       {"1", "-e(b)", "-i e(c+d-a)", "e(b+d-a)", "-e(b+d-a)", "i e(c+d-a)", "e(b)", "-1"},
                       {"1", "-e(a)", "i e(c+d-a)", "-e(d)", "e(d)", "-i e(c+d-a)", "e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "four-phase 8x8 family with explicit quarter turns"));

  cat.push_back(entry("D8A3", abc,
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "e(a)", "e(a)", "i e(c)", "-i e(c)", "-e(a)", "-e(a)", "-1"},
                       {"1", "e(a)", "-e(a)", "-i e(c)", "i e(c)", "-e(a)", "e(a)", "-1"},
                       {"1", "e(b)", "-e(b)", "-1", "-1", "e(b)", "-e(b)", "1"},
                       {"1", "-e(b)", "e(b)", "-1", "-1", "-e(b)", "e(b)", "1"},
                       {"1", "-e(a)", "-i e(a)", "-e(c)", "e(c)", "e(a)", "i e(a)", "-1"},
                       {"1", "-e(a)", "i e(a)", "e(c)", "-e(c)", "e(a)", "-i e(a)", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "three-phase 8x8 family"));

  cat.push_back(entry("D6A", {},
                      {{"1", "1", "1", "1", "1", "1"},
                       {"1", "-1", "-1", "1", "i", "-i"},
                       {"1", "-1", "-i", "-1", "1", "i"},
                       {"1", "1", "-1", "-i", "-1", "i"},
                       {"1", "i", "1", "-1", "-1", "-i"},
                       {"1", "-i", "i", "i", "-i", "-1"}},
                      0, "symmetric 6x6 matrix"));

  cat.push_back(entry("D6B", {},
                      {{"1", "1", "1", "1", "1", "1"},
                       {"1", "-1", "i", "i", "-i", "-i"},
                       {"1", "-i", "-1", "1", "-1", "i"},
                       {"1", "-i", "1", "-1", "i", "-1"},
                       {"1", "i", "-1", "-i", "1", "-1"},
                       {"1", "i", "-i", "-1", "-1", "1"}},
                      0, "self-adjoint 6x6 matrix"));

  cat.push_back(entry("h1", {},
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "1", "1", "1", "-1", "-1", "-1", "-1"},
                       {"1", "1", "-1", "-1", "1", "1", "-1", "-1"},
                       {"1", "1", "-1", "-1", "-1", "-1", "1", "1"},
                       {"1", "-1", "1", "-1", "-1", "1", "-1", "1"},
                       {"1", "-1", "-1", "1", "-1", "1", "1", "-1"},
                       {"1", "-1", "1", "-1", "1", "-1", "1", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "real core of D8A5, D8E5, D8F5"));

  cat.push_back(entry("h2", {},
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "1", "-1", "1", "-1", "-1", "1", "-1"},
                       {"1", "1", "1", "-1", "1", "-1", "-1", "-1"},
                       {"1", "1", "-1", "-1", "-1", "1", "-1", "1"},
                       {"1", "-1", "1", "-1", "-1", "-1", "1", "1"},
                       {"1", "-1", "-1", "-1", "1", "1", "1", "-1"},
                       {"1", "-1", "1", "1", "-1", "1", "-1", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "real core of D8B5"));

  cat.push_back(entry("h3", {},
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "1", "1", "1", "-1", "-1", "-1", "-1"},
                       {"1", "1", "-1", "-1", "1", "-1", "1", "-1"},
                       {"1", "1", "-1", "-1", "-1", "1", "-1", "1"},
                       {"1", "-1", "1", "-1", "-1", "-1", "1", "1"},
                       {"1", "-1", "1", "-1", "1", "1", "-1", "-1"},
                       {"1", "-1", "-1", "1", "-1", "1", "1", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "real core of D8C5"));

  cat.push_back(entry("h4", {},
                      {{"1", "1", "1", "1", "1", "1", "1", "1"},
                       {"1", "1", "1", "1", "-1", "-1", "-1", "-1"},
                       {"1", "1", "-1", "-1", "1", "1", "-1", "-1"},
                       {"1", "1", "-1", "-1", "-1", "-1", "1", "1"},
                       {"1", "-1", "1", "-1", "-1", "1", "-1", "1"},
                       {"1", "-1", "1", "-1", "1", "-1", "1", "-1"},
                       {"1", "-1", "-1", "1", "-1", "1", "1", "-1"},
                       {"1", "-1", "-1", "1", "1", "-1", "-1", "1"}},
                      -3, "real core of D8I5, D8K5, D8L5"));

  {
    CatalogEntry c6bf = entry("C6BF", {"t"},
                              {{"1", "i e(t)", "-e(t)", "-i", "-e(-t)", "i e(-t)"},
                               {"i e(-t)", "1", "i e(t)", "-e(t)", "-i", "-e(-t)"},
                               {"-e(-t)", "i e(-t)", "1", "i e(t)", "-e(t)", "-i"},
                               {"-i", "-e(-t)", "i e(-t)", "1", "i e(t)", "-e(t)"},
                               {"-e(t)", "-i", "-e(-t)", "i e(-t)", "1", "i e(t)"},
                               {"i e(t)", "-e(t)", "-i", "-e(-t)", "i e(-t)", "1"}},
                              0, "circulant 6x6 family; Hadamard when cos t = (1-sqrt 3)/2");
    c6bf.identicallyHadamard = false;
    c6bf.canonicalBinding = {{"t", std::acos((1.0 - std::sqrt(3.0)) / 2.0)}};
    cat.push_back(std::move(c6bf));
  }

  return cat;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

}  // namespace

const CatalogEntry& catalog_get(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  std::ostringstream msg;
  msg << "unknown catalog name '" << name << "'; available:";
  for (const auto& e : catalog()) msg << ' ' << e.name;
  throw std::invalid_argument(msg.str());
}

std::vector<CatalogInfo> catalog_list() {
  std::vector<CatalogInfo> out;
  for (const auto& e : catalog())
    out.push_back({e.name, e.matrix.n, static_cast<int>(e.matrix.params.size())});
  return out;
}

StandardForm standard_form(const std::string& name) {
  static const std::map<std::string, std::string> cores = {
      {"D8A5", "h1"}, {"D8B5", "h2"}, {"D8C5", "h3"}, {"D8E5", "h1"},
      {"D8F5", "h1"}, {"D8I5", "h4"}, {"D8K5", "h4"}, {"D8L5", "h4"}};
  auto it = cores.find(name);
  if (it == cores.end())
    throw std::invalid_argument("no standard form for '" + name +
                                "'; available for: D8A5 D8B5 D8C5 D8E5 D8F5 D8I5 D8K5 D8L5");
  const CatalogEntry& e = catalog_get(name);
  StandardForm sf;
  sf.name = name;
  sf.n = e.matrix.n;
  sf.params = e.matrix.params;
  sf.core = catalog_get(it->second).matrix;
  sf.phases.resize(sf.n * sf.n);
  for (int k = 0; k < sf.n * sf.n; ++k) {
    const auto& entry = e.matrix.grid[k];
    if (!entry || entry->quarter % 2 != 0)
      throw std::logic_error("standard form requires sign-times-phase entries");
    PhaseLinearForm phase = *entry;
    phase.quarter = 0;
    sf.phases[k] = phase;
    // Cross-check: the sign carried by the entry must match the core.
    int sign = entry->quarter == 0 ? 0 : 2;
    if (sf.core.grid[k]->quarter != sign)
      throw std::logic_error("standard-form core mismatch at entry " + std::to_string(k));
  }
  return sf;
}

NumericMatrix assemble_standard(const StandardForm& sf, const Binding& b) {
  NumericMatrix out(sf.n, sf.n);
  for (int i = 0; i < sf.n; ++i)
    for (int j = 0; j < sf.n; ++j) {
      double sign = sf.core.at(i, j)->quarter == 0 ? 1.0 : -1.0;
      out(i, j) = sign * std::polar(1.0, sf.phases[i * sf.n + j].angle(b));
    }
  return out;
}

QuantizationCensus quantization_census(const std::string& name) {
  const CatalogEntry& e = catalog_get(name);
  const auto& params = e.matrix.params;
  const int p = static_cast<int>(params.size());
  if (p == 0 || p > 10) throw std::invalid_argument("census needs a parametrized family");

  // A pi shift of any parameter maps the family onto itself, so members are
  // distinguished by their shift vector modulo 2; the enumeration still runs
  // over all quarter-turn vectors and canonicalizes.
  auto decorate = [&](const std::vector<int>& shifts) {
    SymbolicMatrix m = e.matrix;
    for (int k = 0; k < p; ++k)
      if (shifts[k] != 0)
        m = substitute(m, params[k], PhaseLinearForm::variable(params[k], 1, shifts[k]));
    return m;
  };
  auto serialize = [](const SymbolicMatrix& m) {
    std::ostringstream os;
    for (const auto& g : m.grid) {
      if (!g) {
        os << "z;";
        continue;
      }
      os << g->quarter << ':';
      for (const auto& [n, c] : g->coeffs) os << n << '=' << c << ',';
      os << ';';
    }
    return os.str();
  };

  std::map<std::string, int> imagCountBySerialized;
  const long long total = 1LL << (2 * p);  // 4^p shift vectors
  std::vector<int> shifts(p);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int k = 0; k < p; ++k) {
      shifts[k] = static_cast<int>((c & 3) % 2);  // canonical: mod pi
      c >>= 2;
    }
    SymbolicMatrix m = decorate(shifts);
    int imag = 0;
    for (const auto& g : m.grid)
      if (g && g->quarter % 2 == 1) ++imag;
    imagCountBySerialized[serialize(m)] = imag;
  }

  QuantizationCensus census;
  census.distinctCount = static_cast<int>(imagCountBySerialized.size());
  for (const auto& [key, imag] : imagCountBySerialized) {
    if (imag % 8 != 0) throw std::logic_error("census: imaginary-entry count not a multiple of 8");
    census.multiplicityByEighth[imag / 8] += 1;
  }
  return census;
}

}  // namespace hadamax
