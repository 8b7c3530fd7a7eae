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

#include "hadamax/props.hpp"

#include <cmath>
#include <stdexcept>

namespace hadamax {

DefectReport hadamard_report(const NumericMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("non-square input");
  const int n = static_cast<int>(m.rows());
  DefectReport r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.maxEntryModulusError = std::max(r.maxEntryModulusError, std::abs(std::abs(m(i, j)) - 1.0));
  NumericMatrix gram = m * m.adjoint() - double(n) * NumericMatrix::Identity(n, n);
  r.maxGramError = gram.cwiseAbs().maxCoeff();
  return r;
}

bool is_hadamard_numeric(const NumericMatrix& m, double tol, DefectReport* report) {
  DefectReport r = hadamard_report(m);
  if (report) *report = r;
  return r.maxEntryModulusError < tol && r.maxGramError < tol;
}

bool is_hadamard_symbolic(const SymbolicMatrix& m) {
  for (int k = 0; k < m.n * m.n; ++k)
    if (!m.grid[k]) throw std::invalid_argument("is_hadamard_symbolic: zero entry present");
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      PhaseSum inner;
      for (int k = 0; k < m.n; ++k) inner.add_term(*m.at(i, k) - *m.at(j, k), 1);
      if (!inner.is_zero()) return false;
    }
  return true;
}

NumericMatrix dephase(const NumericMatrix& m) {
  const int n = static_cast<int>(m.rows());
  NumericMatrix out = m;
  for (int i = 0; i < n; ++i) {
    std::complex<double> v = out(i, 0);
    if (std::abs(v) < 1e-14) throw std::invalid_argument("dephase: zero entry in first column");
    out.row(i) *= std::conj(v) / std::abs(v);
  }
  for (int j = 0; j < n; ++j) {
    std::complex<double> v = out(0, j);
    if (std::abs(v) < 1e-14) throw std::invalid_argument("dephase: zero entry in first row");
    out.col(j) *= std::conj(v) / std::abs(v);
  }
  return out;
}

double unbiasedness_defect(const NumericMatrix& a, const NumericMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("dimension mismatch");
  const int d = static_cast<int>(a.rows());
  NumericMatrix an = a, bn = b;
  for (int j = 0; j < d; ++j) {
    an.col(j).normalize();
    bn.col(j).normalize();
  }
  NumericMatrix overlaps = an.adjoint() * bn;
  double defect = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      defect = std::max(defect, std::abs(std::abs(overlaps(i, j)) * std::sqrt(double(d)) - 1.0));
  return defect;
}

double hadamard_defect(const NumericMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("non-square input");
  const int n = static_cast<int>(m.rows());
  double defect = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double e = std::abs(m(i, j)) - 1.0;
      defect += e * e;
    }
  NumericMatrix gram = m * m.adjoint();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::complex<double> g = gram(i, j) - (i == j ? double(n) : 0.0);
      defect += std::norm(g);
    }
  return defect;
}

}  // namespace hadamax
