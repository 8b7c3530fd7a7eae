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

#include "hadamax/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace hadamax {

namespace {

std::vector<std::string> merge_params(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& name : b)
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  return out;
}

void check_same_dim(int n1, int n2) {
  if (n1 != n2) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

bool SymbolicMatrix::has_param(const std::string& name) const {
  return std::find(params.begin(), params.end(), name) != params.end();
}

// PhaseSum -------------------------------------------------------------------

void PhaseSum::add_term(PhaseLinearForm f, long long mult) {
  if (mult == 0) return;
  f.normalize();
  if (f.quarter >= 2) {
    f.quarter -= 2;
    mult = -mult;
  }
  auto [it, inserted] = terms.try_emplace(f, 0);
  it->second += mult;
  if (it->second == 0) terms.erase(it);
}

void PhaseSum::add(const PhaseSum& o) {
  for (const auto& [f, m] : o.terms) add_term(f, m);
}

PhaseSum PhaseSum::negated() const {
  PhaseSum r;
  for (const auto& [f, m] : terms) r.add_term(f, -m);
  return r;
}

PhaseSum PhaseSum::times(const PhaseLinearForm& f) const {
  PhaseSum r;
  for (const auto& [g, m] : terms) r.add_term(g + f, m);
  return r;
}

long long PhaseSum::term_count() const {
  long long c = 0;
  for (const auto& [f, m] : terms) c += std::llabs(m);
  return c;
}

std::optional<std::pair<PhaseLinearForm, long long>> PhaseSum::single_term() const {
  if (terms.size() != 1) return std::nullopt;
  PhaseLinearForm f = terms.begin()->first;
  long long m = terms.begin()->second;
  if (m < 0) {
    f.quarter += 2;
    f.normalize();
    m = -m;
  }
  return std::make_pair(f, m);
}

PhaseSum sum_canonicalize(const PhaseSum& s) {
  PhaseSum r;
  for (const auto& [f, m] : s.terms) r.add_term(f, m);
  return r;
}

SumMatrix SumMatrix::factored() const {
  long long common = 0;
  for (const auto& s : grid)
    for (const auto& [f, m] : s.terms) common = std::gcd(common, std::llabs(m));
  int twos = 0;
  while (common > 1 && common % 2 == 0) {
    common /= 2;
    ++twos;
  }
  if (twos == 0) return *this;
  SumMatrix r(n, params, scaleHalfLog + 2 * twos);
  long long div = 1LL << twos;
  for (size_t k = 0; k < grid.size(); ++k)
    for (const auto& [f, m] : grid[k].terms) r.grid[k].add_term(f, m / div);
  return r;
}

std::optional<SymbolicMatrix> SumMatrix::as_symbolic() const {
  SumMatrix f = factored();
  SymbolicMatrix out(f.n, f.params, f.scaleHalfLog);
  for (int k = 0; k < f.n * f.n; ++k) {
    if (f.grid[k].is_zero()) continue;
    auto st = f.grid[k].single_term();
    if (!st || st->second != 1) return std::nullopt;
    out.grid[k] = st->first;
  }
  return out;
}

// Entry algebra ---------------------------------------------------------------

SymbolicEntry entry_mul(const SymbolicEntry& e1, const SymbolicEntry& e2) {
  if (!e1 || !e2) return std::nullopt;
  return *e1 + *e2;
}

// Matrix operations -------------------------------------------------------------

SymbolicMatrix sym_adjoint(const SymbolicMatrix& m) {
  SymbolicMatrix r(m.n, m.params, m.scaleHalfLog);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (const auto& e = m.at(j, i)) r.at(i, j) = -*e;
  return r;
}

SumMatrix to_sum(const SymbolicMatrix& m) {
  SumMatrix r(m.n, m.params, m.scaleHalfLog);
  for (int k = 0; k < m.n * m.n; ++k)
    if (m.grid[k]) r.grid[k].add_term(*m.grid[k], 1);
  return r;
}

SumMatrix sum_adjoint(const SumMatrix& m) {
  SumMatrix r(m.n, m.params, m.scaleHalfLog);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      for (const auto& [f, mult] : m.at(j, i).terms) r.at(i, j).add_term(-f, mult);
  return r;
}

SumMatrix sum_mat_mul(const SumMatrix& m1, const SumMatrix& m2) {
  check_same_dim(m1.n, m2.n);
  SumMatrix r(m1.n, merge_params(m1.params, m2.params), m1.scaleHalfLog + m2.scaleHalfLog);
  for (int i = 0; i < m1.n; ++i)
    for (int j = 0; j < m1.n; ++j) {
      PhaseSum& s = r.at(i, j);
      for (int k = 0; k < m1.n; ++k)
        for (const auto& [f1, c1] : m1.at(i, k).terms)
          for (const auto& [f2, c2] : m2.at(k, j).terms) s.add_term(f1 + f2, c1 * c2);
    }
  return r;
}

SumMatrix sym_mat_mul(const SymbolicMatrix& m1, const SymbolicMatrix& m2) {
  return sum_mat_mul(to_sum(m1), to_sum(m2));
}

namespace {

PhaseLinearForm substitute_form(const PhaseLinearForm& f, const std::string& param,
                                const PhaseLinearForm& replacement) {
  auto it = f.coeffs.find(param);
  if (it == f.coeffs.end()) return f;
  int k = it->second;
  PhaseLinearForm r = f;
  r.coeffs.erase(param);
  r.normalize();
  return r + replacement.scaled(k);
}

std::vector<std::string> substituted_params(const std::vector<std::string>& params,
                                            const std::string& param,
                                            const PhaseLinearForm& replacement) {
  std::vector<std::string> out;
  bool replacement_uses_param = replacement.coeffs.count(param) > 0;
  for (const auto& name : params)
    if (name != param || replacement_uses_param) out.push_back(name);
  for (const auto& [name, c] : replacement.coeffs)
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  return out;
}

}  // namespace

SymbolicMatrix substitute(const SymbolicMatrix& m, const std::string& param,
                          const PhaseLinearForm& replacement) {
  if (!m.has_param(param)) throw std::invalid_argument("unknown parameter: " + param);
  SymbolicMatrix r(m.n, substituted_params(m.params, param, replacement), m.scaleHalfLog);
  for (int k = 0; k < m.n * m.n; ++k)
    if (m.grid[k]) r.grid[k] = substitute_form(*m.grid[k], param, replacement);
  return r;
}

SumMatrix substitute(const SumMatrix& m, const std::string& param,
                     const PhaseLinearForm& replacement) {
  if (std::find(m.params.begin(), m.params.end(), param) == m.params.end())
    throw std::invalid_argument("unknown parameter: " + param);
  SumMatrix r(m.n, substituted_params(m.params, param, replacement), m.scaleHalfLog);
  for (int k = 0; k < m.n * m.n; ++k)
    for (const auto& [f, mult] : m.grid[k].terms)
      r.grid[k].add_term(substitute_form(f, param, replacement), mult);
  return r;
}

// Evaluation -------------------------------------------------------------------

namespace {

double scale_value(int halfLog) { return std::pow(2.0, 0.5 * halfLog); }

}  // namespace

NumericMatrix eval_unscaled(const SymbolicMatrix& m, const Binding& b) {
  NumericMatrix out = NumericMatrix::Zero(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (const auto& e = m.at(i, j))
        out(i, j) = std::polar(1.0, e->angle(b));
  return out;
}

NumericMatrix eval(const SymbolicMatrix& m, const Binding& b) {
  return scale_value(m.scaleHalfLog) * eval_unscaled(m, b);
}

NumericMatrix eval(const SumMatrix& m, const Binding& b) {
  NumericMatrix out = NumericMatrix::Zero(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      std::complex<double> v = 0.0;
      for (const auto& [f, mult] : m.at(i, j).terms)
        v += double(mult) * std::polar(1.0, f.angle(b));
      out(i, j) = v;
    }
  return scale_value(m.scaleHalfLog) * out;
}

// Construction helpers -----------------------------------------------------------

namespace {

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

// expr := term (('+'|'-') term)*, term := [int] name
PhaseLinearForm parse_expr(const std::string& s, size_t& pos) {
  PhaseLinearForm form;
  int sign = 1;
  skip_ws(s, pos);
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    sign = s[pos] == '-' ? -1 : 1;
    ++pos;
  }
  while (true) {
    skip_ws(s, pos);
    int mag = 0;
    bool has_digits = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      mag = mag * 10 + (s[pos] - '0');
      has_digits = true;
      ++pos;
    }
    skip_ws(s, pos);
    std::string name;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      name.push_back(s[pos]);
      ++pos;
    }
    if (name.empty()) throw std::invalid_argument("bad entry expression: " + s);
    form.coeffs[name] += sign * (has_digits ? mag : 1);
    skip_ws(s, pos);
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      continue;
    }
    break;
  }
  form.normalize();
  return form;
}

}  // namespace

SymbolicEntry parse_entry(const std::string& token) {
  size_t pos = 0;
  skip_ws(token, pos);
  int quarter = 0;
  if (pos < token.size() && token[pos] == '-') {
    quarter += 2;
    ++pos;
    skip_ws(token, pos);
  }
  if (pos < token.size() && token[pos] == 'i' &&
      (pos + 1 == token.size() || !std::isalnum(static_cast<unsigned char>(token[pos + 1])))) {
    quarter += 1;
    ++pos;
    skip_ws(token, pos);
    if (pos < token.size() && token[pos] == '*') {
      ++pos;
      skip_ws(token, pos);
    }
  }
  if (pos == token.size()) {
    if (quarter == 0) throw std::invalid_argument("empty entry token");
    return PhaseLinearForm::constant(quarter);  // "i", "-1", "-i"
  }
  if (token[pos] == '0') {
    if (quarter != 0) throw std::invalid_argument("signed zero entry: " + token);
    return std::nullopt;
  }
  if (token[pos] == '1') {
    ++pos;
    skip_ws(token, pos);
    if (pos != token.size()) throw std::invalid_argument("bad entry token: " + token);
    return PhaseLinearForm::constant(quarter);
  }
  if (token[pos] != 'e') throw std::invalid_argument("bad entry token: " + token);
  ++pos;
  skip_ws(token, pos);
  if (pos == token.size() || token[pos] != '(')
    throw std::invalid_argument("bad entry token: " + token);
  ++pos;
  PhaseLinearForm form = parse_expr(token, pos);
  skip_ws(token, pos);
  if (pos == token.size() || token[pos] != ')')
    throw std::invalid_argument("bad entry token: " + token);
  ++pos;
  skip_ws(token, pos);
  if (pos != token.size()) throw std::invalid_argument("bad entry token: " + token);
  form.quarter += quarter;
  form.normalize();
  return form;
}

SymbolicMatrix make_symbolic(int n, std::vector<std::string> params,
                             const std::vector<std::vector<std::string>>& rows,
                             int scaleHalfLog) {
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("row count mismatch");
  SymbolicMatrix m(n, std::move(params), scaleHalfLog);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("column count mismatch in row " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      SymbolicEntry e = parse_entry(rows[i][j]);
      if (e)
        for (const auto& [name, c] : e->coeffs)
          if (!m.has_param(name))
            throw std::invalid_argument("entry uses undeclared parameter: " + name);
      m.at(i, j) = e;
    }
  }
  return m;
}

SymbolicMatrix dephase_symbolic(const SymbolicMatrix& m) {
  for (int k = 0; k < m.n * m.n; ++k)
    if (!m.grid[k]) throw std::invalid_argument("dephase_symbolic: zero entry");
  SymbolicMatrix r(m.n, m.params, m.scaleHalfLog);
  // Left diagonal clears column 0, right diagonal then clears row 0.
  for (int i = 0; i < m.n; ++i) {
    PhaseLinearForm row_fix = -*m.at(i, 0);
    for (int j = 0; j < m.n; ++j) r.at(i, j) = *m.at(i, j) + row_fix;
  }
  for (int j = 0; j < m.n; ++j) {
    PhaseLinearForm col_fix = -*r.at(0, j);
    for (int i = 0; i < m.n; ++i) r.at(i, j) = *r.at(i, j) + col_fix;
  }
  return r;
}

}  // namespace hadamax
