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

#include "hadamax/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "hadamax/catalog.hpp"
#include "hadamax/constructors.hpp"
#include "hadamax/props.hpp"

namespace hadamax {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<std::string> numbered(const std::string& stem, int count) {
  std::vector<std::string> out;
  for (int k = 1; k <= count; ++k) out.push_back(stem + std::to_string(k));
  return out;
}

}  // namespace

SymbolicMatrix DressingTemplate::dressed_factor(int which) const {
  const SymbolicMatrix& base = which == 0 ? a : which == 1 ? b : c;
  const auto& l = left[which];
  const auto& r = right[which];
  if (!l.empty() && static_cast<int>(l.size()) != base.n)
    throw std::invalid_argument("left dressing size mismatch");
  if (!r.empty() && static_cast<int>(r.size()) != base.n)
    throw std::invalid_argument("right dressing size mismatch");
  SymbolicMatrix out = base;
  for (const auto& name : l)
    if (!out.has_param(name)) out.params.push_back(name);
  for (const auto& name : r)
    if (!out.has_param(name)) out.params.push_back(name);
  for (int i = 0; i < base.n; ++i)
    for (int j = 0; j < base.n; ++j) {
      if (!out.at(i, j)) continue;
      PhaseLinearForm f = *out.at(i, j);
      if (!l.empty()) f = f + PhaseLinearForm::variable(l[i]);
      if (!r.empty()) f = f + PhaseLinearForm::variable(r[j]);
      out.at(i, j) = f;
    }
  return out;
}

std::vector<std::string> DressingTemplate::free_params() const {
  std::vector<std::string> out;
  auto push = [&out](const std::vector<std::string>& names) {
    for (const auto& n : names)
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  };
  push(a.params);
  push(b.params);
  push(c.params);
  for (int k = 0; k < 3; ++k) {
    push(left[k]);
    push(right[k]);
  }
  return out;
}

DressingTemplate d2_template() {
  DressingTemplate t;
  t.a = make_symbolic(2, {}, {{"1", "1"}, {"1", "-1"}}, -1);
  t.b = make_symbolic(2, {}, {{"1", "1"}, {"i", "-i"}}, -1);
  t.c = make_symbolic(2, {}, {{"1", "i"}, {"1", "-i"}}, -1);
  for (int k = 0; k < 3; ++k) {
    const char* stems[3] = {"al", "bl", "cl"};
    const char* stemsR[3] = {"ar", "br", "cr"};
    t.left[k] = numbered(stems[k], 2);
    t.right[k] = numbered(stemsR[k], 2);
  }
  return t;
}

DressingTemplate zauner_template() {
  ZaunerTriplet z = zauner_triplet();
  DressingTemplate t;
  t.a = z.e1;
  t.b = z.e2;
  t.c = z.e3;
  t.left[1] = numbered("v", 4);   // between A* and B in the product C A* B
  t.right[2] = numbered("u", 4);  // between C and A*
  return t;
}

double template_defect(const DressingTemplate& t, const Binding& b) {
  NumericMatrix a = eval(t.dressed_factor(0), b);
  NumericMatrix bb = eval(t.dressed_factor(1), b);
  NumericMatrix c = eval(t.dressed_factor(2), b);
  NumericMatrix d = dita_double(a, bb, c);
  // Entries of the doubled matrix have modulus 1/sqrt(2 d) when the blocks
  // are Hadamard; rescale so the defect sees unimodular entries.
  return hadamard_defect(std::sqrt(2.0 * a.rows()) * d);
}

SearchResult defect_minimize(const DressingTemplate& t, std::uint64_t seed,
                             const SearchOptions& opts) {
  const std::vector<std::string> params = t.free_params();
  const int dim = static_cast<int>(params.size());
  const double gradStep = 1e-6;

  // Dressed factors are fixed across the run; only bindings change.
  const SymbolicMatrix fa = t.dressed_factor(0);
  const SymbolicMatrix fb = t.dressed_factor(1);
  const SymbolicMatrix fc = t.dressed_factor(2);
  auto objective = [&](const std::vector<double>& x) {
    Binding b;
    for (int k = 0; k < dim; ++k) b[params[k]] = x[k];
    NumericMatrix d = dita_double(eval(fa, b), eval(fb, b), eval(fc, b));
    return hadamard_defect(std::sqrt(2.0 * fa.n) * d);
  };

  SearchResult best;
  best.defect = std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * restart);
    std::uniform_real_distribution<double> uni(0.0, kTwoPi);
    std::vector<double> x(dim);
    if (restart == 0 && opts.start) {
      for (int k = 0; k < dim; ++k) {
        auto it = opts.start->find(params[k]);
        x[k] = it != opts.start->end() ? it->second : 0.0;
      }
    } else {
      for (double& v : x) v = uni(rng);
    }

    SearchResult run;
    double f = objective(x);
    run.trace.push_back(f);
    double step = opts.stepInit;
    int iter = 0;
    for (; iter < opts.maxIters && f > opts.tol; ++iter) {
      std::vector<double> grad(dim);
      double gnorm = 0.0;
      for (int k = 0; k < dim; ++k) {
        std::vector<double> xp = x, xm = x;
        xp[k] += gradStep;
        xm[k] -= gradStep;
        grad[k] = (objective(xp) - objective(xm)) / (2.0 * gradStep);
        gnorm += grad[k] * grad[k];
      }
      gnorm = std::sqrt(gnorm);
      if (gnorm < 1e-14) break;  // stationary
      // Backtracking line search; accepted steps never increase the defect.
      bool accepted = false;
      for (int half = 0; half < 40; ++half) {
        std::vector<double> cand(dim);
        for (int k = 0; k < dim; ++k) cand[k] = x[k] - step * grad[k] / gnorm;
        double fc2 = objective(cand);
        if (fc2 < f) {
          x = std::move(cand);
          f = fc2;
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      run.trace.push_back(f);
      if (!accepted) break;
      step *= 1.5;
    }
    run.defect = f;
    run.iterations = iter;
    run.converged = f < opts.tol;
    for (int k = 0; k < dim; ++k) run.binding[params[k]] = x[k];
    if (run.defect < best.defect) best = std::move(run);
    if (best.converged) break;
  }
  return best;
}

bool collapse_check(const SumMatrix& product, const std::vector<Constraint>& constraints) {
  SumMatrix m = product;
  for (const auto& [param, replacement] : constraints) {
    if (std::find(m.params.begin(), m.params.end(), param) == m.params.end())
      throw std::invalid_argument("collapse_check: constraint on unknown parameter " + param);
    m = substitute(m, param, replacement);
  }
  return m.as_symbolic().has_value();
}

bool matches_h4_family(const NumericMatrix& doubled, double tol, double* fittedPhase) {
  if (doubled.rows() != 4 || doubled.cols() != 4)
    throw std::invalid_argument("matches_h4_family: expected a 4x4 matrix");
  NumericMatrix deph = dephase(2.0 * doubled);
  static const int perm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const SymbolicMatrix& h4 = catalog_get("H4").matrix;
  for (const auto& pr : perm3)
    for (const auto& pc : perm3) {
      NumericMatrix m(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          m(i, j) = deph(i == 0 ? 0 : 1 + pr[i - 1], j == 0 ? 0 : 1 + pc[j - 1]);
      double astar = std::arg(m(1, 1)) - std::numbers::pi / 2.0;
      NumericMatrix ref = eval_unscaled(h4, {{"a", astar}});
      if ((m - ref).cwiseAbs().maxCoeff() < tol) {
        if (fittedPhase) *fittedPhase = astar;
        return true;
      }
    }
  return false;
}

int tangent_dimension(const std::string& familyName, const Binding& b, double tol) {
  const SymbolicMatrix& m = catalog_get(familyName).matrix;
  const double h = 1e-4;
  auto defect_at = [&](const Binding& binding) {
    return hadamard_defect(eval_unscaled(m, binding));
  };
  int flat = 0;
  for (const auto& param : m.params) {
    Binding bp = b, bm = b;
    bp[param] += h;
    bm[param] -= h;
    double f0 = defect_at(b), fp = defect_at(bp), fm = defect_at(bm);
    double firstDiff = (fp - fm) / (2.0 * h);
    double secondDiff = (fp + fm - 2.0 * f0) / (h * h);
    if (std::abs(firstDiff) < tol && std::abs(secondDiff) < tol) ++flat;
  }
  return flat;
}

}  // namespace hadamax
