// Copyright 2026 The iprev Authors
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

#include "iprev/extension.hpp"

#include <utility>

#include "iprev/error.hpp"

namespace iprev {

namespace {

void require_lower_and_same_space(const Assessment& a, const Gamble& z) {
  if (a.orientation() != Orientation::lower) {
    throw Error("extension expects a lower assessment; conjugate first");
  }
  if (z.space() != a.space()) throw Error("target gamble lives on a different space");
}

// Primal gain program. Variables: one coefficient per entry, then the
// margin alpha. Rows: per atom w,
//   sum_i s_i (X_i(w) - mu_i) + alpha <= z(w),
// plus (convex kind only) sum_i s_i = 1. Objective: maximize alpha.
LinearProgram primal_program(const Assessment& a, const Gamble& z, ExtensionKind kind) {
  const std::size_t n = a.size();
  const std::size_t m = a.space().size();
  LinearProgram lp;
  lp.sense = Sense::maximize;
  lp.objective.assign(n + 1, Rat(0));
  lp.objective[n] = 1;
  lp.bounds.assign(n, Bound::nonneg());
  lp.bounds.push_back(Bound::free());
  for (std::size_t w = 0; w < m; ++w) {
    Constraint c;
    c.coeffs.reserve(n + 1);
    for (const auto& e : a.entries()) c.coeffs.push_back(e.gamble[w] - e.value);
    c.coeffs.push_back(Rat(1));
    c.rel = Rel::le;
    c.rhs = z[w];
    lp.constraints.push_back(std::move(c));
  }
  if (kind == ExtensionKind::convex_natural) {
    Constraint sum_row;
    sum_row.coeffs.assign(n + 1, Rat(1));
    sum_row.coeffs[n] = 0;
    sum_row.rel = Rel::eq;
    sum_row.rhs = 1;
    lp.constraints.push_back(std::move(sum_row));
  }
  return lp;
}

// Dual envelope program. Variables: one mass per atom, plus (convex kind)
// a free translation r. Rows: per entry i,
//   sum_w p(w) X_i(w) [+ r] >= mu_i,
// plus sum_w p(w) = 1. Objective: minimize sum_w p(w) z(w) [+ r].
LinearProgram dual_program(const Assessment& a, const Gamble& z, ExtensionKind kind) {
  const std::size_t n = a.size();
  const std::size_t m = a.space().size();
  const bool convex = kind == ExtensionKind::convex_natural;
  const std::size_t nvars = convex ? m + 1 : m;
  LinearProgram lp;
  lp.sense = Sense::minimize;
  lp.objective.assign(nvars, Rat(0));
  for (std::size_t w = 0; w < m; ++w) lp.objective[w] = z[w];
  if (convex) lp.objective[m] = 1;
  lp.bounds.assign(m, Bound::nonneg());
  if (convex) lp.bounds.push_back(Bound::free());
  for (std::size_t i = 0; i < n; ++i) {
    Constraint c;
    c.coeffs.assign(nvars, Rat(0));
    for (std::size_t w = 0; w < m; ++w) c.coeffs[w] = a.entries()[i].gamble[w];
    if (convex) c.coeffs[m] = 1;
    c.rel = Rel::ge;
    c.rhs = a.entries()[i].value;
    lp.constraints.push_back(std::move(c));
  }
  Constraint mass;
  mass.coeffs.assign(nvars, Rat(1));
  if (convex) mass.coeffs[m] = 0;
  mass.rel = Rel::eq;
  mass.rhs = 1;
  lp.constraints.push_back(std::move(mass));
  return lp;
}

ExtensionResult extend(const Assessment& a, const Gamble& z, ExtensionKind kind) {
  require_lower_and_same_space(a, z);
  const std::size_t n = a.size();
  const std::size_t m = a.space().size();

  ExtensionResult res{kind, z, true, Rat(0), {}, std::nullopt, std::nullopt, {}, {}, {}, {}, {}};
  res.primal_lp = primal_program(a, z, kind);
  res.primal_sol = solve(res.primal_lp);
  res.dual_lp = dual_program(a, z, kind);
  res.dual_sol = solve(res.dual_lp);

  if (res.primal_sol.status == LPStatus::unbounded) {
    if (kind == ExtensionKind::convex_natural) {
      throw InternalError("convex natural extension cannot be unbounded on a finite domain");
    }
    if (res.dual_sol.status != LPStatus::infeasible) {
      throw InternalError("unbounded gain program but dominating previsions exist");
    }
    res.finite = false;
    // The improving ray restricted to the coefficients is a combination
    // whose gain has a strictly negative supremum; normalize it.
    Rat total = 0;
    for (std::size_t i = 0; i < n; ++i) total += res.primal_sol.ray[i];
    if (total <= 0) throw InternalError("unbounded margin ray with no bet coefficients");
    res.sure_loss_coefficients.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      res.sure_loss_coefficients[i] = res.primal_sol.ray[i] / total;
    }
    return res;
  }

  if (res.primal_sol.status != LPStatus::optimal || res.dual_sol.status != LPStatus::optimal) {
    throw InternalError("extension programs must both be solvable");
  }
  if (res.primal_sol.value != res.dual_sol.value) {
    throw InternalError("extension value mismatch: gain program gives " +
                        rat_to_string(res.primal_sol.value) + ", envelope program gives " +
                        rat_to_string(res.dual_sol.value));
  }

  res.value = res.primal_sol.value;
  res.coefficients.assign(res.primal_sol.primal.begin(), res.primal_sol.primal.begin() + n);
  std::vector<Rat> masses(res.dual_sol.primal.begin(), res.dual_sol.primal.begin() + m);
  res.q = PrecisePrevision(a.space(), std::move(masses));
  if (kind == ExtensionKind::convex_natural) res.r = res.dual_sol.primal[m];
  return res;
}

}  // namespace

ExtensionResult convex_natural_extension(const Assessment& lower, const Gamble& z) {
  return extend(lower, z, ExtensionKind::convex_natural);
}

ExtensionResult natural_extension(const Assessment& lower, const Gamble& z) {
  return extend(lower, z, ExtensionKind::natural);
}

Rat ec_at_zero(const Assessment& lower) {
  return convex_natural_extension(lower, Gamble::zero(lower.space())).value;
}

std::vector<ExtensionResult> extend_batch(const Assessment& lower,
                                          const std::vector<Gamble>& targets, ExtensionKind kind,
                                          Execution mode) {
  std::vector<ExtensionResult> out(targets.size(),
                                   ExtensionResult{kind, Gamble::zero(lower.space()), true, Rat(0),
                                                   {}, std::nullopt, std::nullopt, {}, {}, {}, {},
                                                   {}});
  for_each_index(targets.size(), mode, [&](std::size_t i) {
    out[i] = kind == ExtensionKind::convex_natural
                 ? convex_natural_extension(lower, targets[i])
                 : natural_extension(lower, targets[i]);
  });
  return out;
}

}  // namespace iprev
