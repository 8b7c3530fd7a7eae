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

#include "hadamax/render.hpp"

#include <algorithm>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <vector>

namespace hadamax {

std::string render_form(const PhaseLinearForm& f) {
  if (f.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, c] : f.coeffs) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? '-' : '+');
    }
    if (std::abs(c) != 1) os << std::abs(c);
    os << name;
    first = false;
  }
  return os.str();
}

namespace {

std::string render_unimodular(const PhaseLinearForm& f, bool latex) {
  std::string sign = f.quarter >= 2 ? "-" : "";
  bool imag = f.quarter % 2 == 1;
  if (f.coeffs.empty()) return sign + (imag ? "i" : "1");
  std::string body = render_form(f);
  if (latex) {
    std::string prefix = sign + (imag ? "i\\," : "");
    return prefix + "e^{i(" + body + ")}";
  }
  return sign + (imag ? "i " : "") + "e(" + body + ")";
}

std::string render_cell(const SymbolicEntry& e, bool latex) {
  if (!e) return latex ? "0" : ".";
  return render_unimodular(*e, latex);
}

std::string render_table(const SymbolicMatrix& m, bool latex) {
  std::vector<std::string> cells(m.n * m.n);
  std::vector<size_t> width(m.n, 0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      cells[i * m.n + j] = render_cell(m.at(i, j), latex);
      width[j] = std::max(width[j], cells[i * m.n + j].size());
    }
  std::ostringstream os;
  if (latex) {
    os << "\\left[\\begin{array}{" << std::string(m.n, 'c') << "}\n";
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) os << cells[i * m.n + j] << (j + 1 < m.n ? " & " : "");
      os << (i + 1 < m.n ? " \\\\\n" : "\n");
    }
    os << "\\end{array}\\right]\n";
  } else {
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) {
        os << std::setw(static_cast<int>(width[j])) << cells[i * m.n + j];
        if (j + 1 < m.n) os << "  ";
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace

std::string render_entry(const SymbolicEntry& e) { return render_cell(e, false); }

std::string render_grid(const SymbolicMatrix& m) { return render_table(m, false); }

std::string render_latex(const SymbolicMatrix& m) { return render_table(m, true); }

std::string render_standard_form(const StandardForm& sf) {
  std::ostringstream os;
  os << "core:\n" << render_grid(sf.core) << "phases (R, '.' = 0):\n";
  std::vector<std::string> cells(sf.n * sf.n);
  std::vector<size_t> width(sf.n, 0);
  for (int i = 0; i < sf.n; ++i)
    for (int j = 0; j < sf.n; ++j) {
      const PhaseLinearForm& f = sf.phases[i * sf.n + j];
      cells[i * sf.n + j] = f.coeffs.empty() ? "." : render_form(f);
      width[j] = std::max(width[j], cells[i * sf.n + j].size());
    }
  for (int i = 0; i < sf.n; ++i) {
    for (int j = 0; j < sf.n; ++j) {
      os << std::setw(static_cast<int>(width[j])) << cells[i * sf.n + j];
      if (j + 1 < sf.n) os << "  ";
    }
    os << '\n';
  }
  return os.str();
}

std::string format_angle_pi(double radians) {
  std::ostringstream os;
  double units = radians / std::numbers::pi;
  if (units == 0.0) units = 0.0;  // normalize -0
  os << std::setprecision(12) << units << "pi";
  return os.str();
}

std::string format_complex(const std::complex<double>& z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? "-" : "+")
     << std::setprecision(12) << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace hadamax
