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

#include <string>

#include "hadamax/catalog.hpp"
#include "hadamax/symbolic.hpp"

namespace hadamax {

/// "a", "b+d-a", "2a-c"; empty form renders as "0".
std::string render_form(const PhaseLinearForm& f);

/// Entry token: "1", "-1", "i", "-i", "e(a)", "-i e(b+d-a)", "." for zero.
std::string render_entry(const SymbolicEntry& e);

/// Column-aligned token grid.
std::string render_grid(const SymbolicMatrix& m);

/// LaTeX array of the entries.
std::string render_latex(const SymbolicMatrix& m);

/// Core and phase grid of a standard form, phases rendered as forms with "."
/// for zero.
std::string render_standard_form(const StandardForm& sf);

/// Angle in units of pi with 12 significant digits.
std::string format_angle_pi(double radians);

std::string format_complex(const std::complex<double>& z);

}  // namespace hadamax
