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

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hadamax {

/// Real-valued assignment of phase parameters, in radians.
using Binding = std::map<std::string, double>;

/// Exact exponent of a unimodular value: i^quarter * exp(i * sum_k c_k * p_k).
///
/// `quarter` is an offset in units of pi/2, normalized to {0,1,2,3}, so
/// quarter=2 encodes a factor -1 and quarter=1 a factor i. `coeffs` maps
/// parameter names to integer coefficients and never stores zeros.
struct PhaseLinearForm {
  std::map<std::string, int> coeffs;
  int quarter = 0;

  PhaseLinearForm() = default;
  PhaseLinearForm(std::map<std::string, int> c, int q) : coeffs(std::move(c)), quarter(q) {
    normalize();
  }

  static PhaseLinearForm constant(int quarter) { return PhaseLinearForm({}, quarter); }
  static PhaseLinearForm variable(const std::string& name, int coeff = 1, int quarter = 0) {
    return PhaseLinearForm({{name, coeff}}, quarter);
  }

  void normalize() {
    for (auto it = coeffs.begin(); it != coeffs.end();) {
      if (it->second == 0)
        it = coeffs.erase(it);
      else
        ++it;
    }
    quarter = ((quarter % 4) + 4) % 4;
  }

  bool is_constant() const { return coeffs.empty(); }

  PhaseLinearForm operator+(const PhaseLinearForm& o) const {
    PhaseLinearForm r = *this;
    for (const auto& [name, c] : o.coeffs) r.coeffs[name] += c;
    r.quarter += o.quarter;
    r.normalize();
    return r;
  }

  PhaseLinearForm operator-() const {
    PhaseLinearForm r;
    for (const auto& [name, c] : coeffs) r.coeffs[name] = -c;
    r.quarter = -quarter;
    r.normalize();
    return r;
  }

  PhaseLinearForm operator-(const PhaseLinearForm& o) const { return *this + (-o); }

  /// Integer multiple k*form (k may be negative or zero).
  PhaseLinearForm scaled(int k) const {
    PhaseLinearForm r;
    for (const auto& [name, c] : coeffs) r.coeffs[name] = k * c;
    r.quarter = k * quarter;
    r.normalize();
    return r;
  }

  /// Same form with an extra quarter-turn offset.
  PhaseLinearForm shifted(int dq) const {
    PhaseLinearForm r = *this;
    r.quarter += dq;
    r.normalize();
    return r;
  }

  /// The angle in radians at a given binding. Throws on a missing parameter.
  double angle(const Binding& b) const {
    double a = quarter * (std::numbers::pi / 2.0);
    for (const auto& [name, c] : coeffs) {
      auto it = b.find(name);
      if (it == b.end()) throw std::invalid_argument("missing parameter in binding: " + name);
      a += c * it->second;
    }
    return a;
  }

  bool operator==(const PhaseLinearForm& o) const {
    return quarter == o.quarter && coeffs == o.coeffs;
  }
  bool operator<(const PhaseLinearForm& o) const {
    if (quarter != o.quarter) return quarter < o.quarter;
    return coeffs < o.coeffs;
  }
};

}  // namespace hadamax
