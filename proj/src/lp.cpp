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

#include "iprev/lp.hpp"

#include <cstddef>
#include <utility>

#include "iprev/error.hpp"

namespace iprev {

namespace {

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.objective.size();
  if (n == 0) throw Error("lp: no variables");
  if (lp.bounds.size() != n) throw Error("lp: bounds/objective length mismatch");
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != n) throw Error("lp: constraint/objective length mismatch");
  }
  for (const auto& b : lp.bounds) {
    if (b.lower && b.upper && *b.lower > *b.upper) {
      throw Error("lp: lower bound above upper bound");
    }
  }
}

// How an original variable maps onto internal nonnegative column(s).
struct VarMap {
  enum class Kind { shifted, neg_shifted, split } kind;
  Rat offset;        // l for shifted (x = offset + y), u for neg_shifted (x = offset - y)
  std::size_t col;   // first internal column; split uses col and col+1
};

// Extended row in original variable coordinates.
struct Row {
  std::vector<Rat> a;
  Rel rel;
  Rat b;
};

// Dense exact simplex tableau. Columns: structural, then slack, then one
// artificial per row; the artificial block doubles as B^-1 bookkeeping for
// reading duals off the reduced-cost row.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rat>> body, std::vector<Rat> rhs, std::size_t art_begin)
      : t_(std::move(body)), rhs_(std::move(rhs)), art_begin_(art_begin) {
    basis_.resize(rows());
    for (std::size_t r = 0; r < rows(); ++r) basis_[r] = art_begin_ + r;
  }

  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return t_.empty() ? 0 : t_[0].size(); }
  std::size_t art_begin() const { return art_begin_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rat& at(std::size_t r, std::size_t c) const { return t_[r][c]; }
  const Rat& rhs(std::size_t r) const { return rhs_[r]; }
  const Rat& reduced_cost(std::size_t c) const { return z_[c]; }
  const Rat& objective_value() const { return zval_; }

  void load_objective(const std::vector<Rat>& c) {
    z_.assign(cols(), Rat(0));
    zval_ = 0;
    for (std::size_t j = 0; j < cols(); ++j) z_[j] = -c[j];
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rat& cb = c[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols(); ++j) z_[j] += cb * t_[r][j];
      zval_ += cb * rhs_[r];
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rat p = t_[pr][pc];
    for (auto& v : t_[pr]) v /= p;
    rhs_[pr] /= p;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r == pr || t_[r][pc] == 0) continue;
      const Rat f = t_[r][pc];
      for (std::size_t j = 0; j < cols(); ++j) t_[r][j] -= f * t_[pr][j];
      rhs_[r] -= f * rhs_[pr];
    }
    if (z_[pc] != 0) {
      const Rat f = z_[pc];
      for (std::size_t j = 0; j < cols(); ++j) z_[j] -= f * t_[pr][j];
      zval_ -= f * rhs_[pr];
    }
    basis_[pr] = pc;
  }

  // Bland's rule: entering = least-index column with negative reduced cost
  // (artificial columns never re-enter); leaving = least basic-variable
  // index among the minimum-ratio rows. Returns optimal/unbounded.
  enum class StepResult { optimal, unbounded };
  StepResult run(std::size_t* unbounded_col) {
    for (;;) {
      std::size_t enter = art_begin_;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (z_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == art_begin_) return StepResult::optimal;

      bool found = false;
      std::size_t leave = 0;
      Rat best_ratio;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (t_[r][enter] <= 0) continue;
        Rat ratio = rhs_[r] / t_[r][enter];
        if (!found || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          found = true;
          leave = r;
          best_ratio = ratio;
        }
      }
      if (!found) {
        if (unbounded_col) *unbounded_col = enter;
        return StepResult::unbounded;
      }
      pivot(leave, enter);
    }
  }

  // After phase 1, pivot basic artificials out wherever their row has a
  // nonzero non-artificial entry; rows that stay artificial are redundant
  // and inert from then on.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < rows(); ++r) {
      if (basis_[r] < art_begin_) continue;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (t_[r][j] != 0) {
          pivot(r, j);
          break;
        }
      }
    }
  }

  std::vector<Rat> basic_solution() const {
    std::vector<Rat> x(cols(), Rat(0));
    for (std::size_t r = 0; r < rows(); ++r) x[basis_[r]] = rhs_[r];
    return x;
  }

 private:
  std::vector<std::vector<Rat>> t_;
  std::vector<Rat> rhs_;
  std::vector<Rat> z_;
  Rat zval_;
  std::vector<std::size_t> basis_;
  std::size_t art_begin_;
};

// Optimum of an LP with no constraints: each variable sits at whichever
// bound its (maximize-normalized) objective coefficient points to.
LPSolution solve_box_only(const LinearProgram& lp, const std::vector<Rat>& obj) {
  const std::size_t n = obj.size();
  std::vector<Rat> x(n, Rat(0));
  for (std::size_t k = 0; k < n; ++k) {
    const Bound& b = lp.bounds[k];
    if (b.lower) x[k] = *b.lower;
    else if (b.upper) x[k] = *b.upper;
  }
  LPSolution sol;
  for (std::size_t j = 0; j < n; ++j) {
    const Bound& b = lp.bounds[j];
    if ((obj[j] > 0 && !b.upper) || (obj[j] < 0 && !b.lower)) {
      sol.status = LPStatus::unbounded;
      sol.primal = x;
      sol.ray.assign(n, Rat(0));
      sol.ray[j] = obj[j] > 0 ? 1 : -1;
      return sol;
    }
    if (obj[j] > 0) x[j] = *b.upper;
    else if (obj[j] < 0) x[j] = *b.lower;
  }
  sol.status = LPStatus::optimal;
  sol.primal = x;
  sol.value = dot(lp.objective, sol.primal);
  return sol;
}

}  // namespace

LPSolution solve(const LinearProgram& lp) {
  validate(lp);
  const std::size_t n = lp.objective.size();

  // Normalize to maximization.
  std::vector<Rat> obj = lp.objective;
  if (lp.sense == Sense::minimize) {
    for (auto& c : obj) c = -c;
  }

  if (lp.constraints.empty()) return solve_box_only(lp, obj);

  // Rows in original coordinates; two-sided variable bounds become an
  // internal extra row so every variable keeps a single lower bound.
  std::vector<Row> rows;
  rows.reserve(lp.constraints.size() + n);
  for (const auto& c : lp.constraints) rows.push_back({c.coeffs, c.rel, c.rhs});
  const std::size_t n_orig_rows = lp.constraints.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.bounds[j].lower && lp.bounds[j].upper) {
      std::vector<Rat> a(n, Rat(0));
      a[j] = 1;
      rows.push_back({std::move(a), Rel::le, *lp.bounds[j].upper});
    }
  }
  const std::size_t m = rows.size();

  // Internal columns for the variables.
  std::vector<VarMap> vmap(n);
  std::size_t n_struct = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Bound& b = lp.bounds[j];
    if (b.lower) {
      vmap[j] = {VarMap::Kind::shifted, *b.lower, n_struct};
      n_struct += 1;
    } else if (b.upper) {
      vmap[j] = {VarMap::Kind::neg_shifted, *b.upper, n_struct};
      n_struct += 1;
    } else {
      vmap[j] = {VarMap::Kind::split, Rat(0), n_struct};
      n_struct += 2;
    }
  }

  std::size_t n_slack = 0;
  for (const auto& r : rows) {
    if (r.rel != Rel::eq) ++n_slack;
  }
  const std::size_t art_begin = n_struct + n_slack;
  const std::size_t total = art_begin + m;

  std::vector<std::vector<Rat>> body(m, std::vector<Rat>(total, Rat(0)));
  std::vector<Rat> rhs(m);
  std::vector<int> flip(m, 1);

  std::size_t slack_at = n_struct;
  for (std::size_t r = 0; r < m; ++r) {
    Rat b = rows[r].b;
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& a = rows[r].a[j];
      if (a == 0) continue;
      switch (vmap[j].kind) {
        case VarMap::Kind::shifted:
          body[r][vmap[j].col] = a;
          b -= a * vmap[j].offset;
          break;
        case VarMap::Kind::neg_shifted:
          body[r][vmap[j].col] = -a;
          b -= a * vmap[j].offset;
          break;
        case VarMap::Kind::split:
          body[r][vmap[j].col] = a;
          body[r][vmap[j].col + 1] = -a;
          break;
      }
    }
    if (rows[r].rel == Rel::le) {
      body[r][slack_at++] = 1;
    } else if (rows[r].rel == Rel::ge) {
      body[r][slack_at++] = -1;
    }
    if (b < 0) {
      flip[r] = -1;
      b = -b;
      for (auto& v : body[r]) v = -v;
    }
    rhs[r] = b;
    body[r][art_begin + r] = 1;
  }

  // Internal objective over structural columns.
  std::vector<Rat> c2(total, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    switch (vmap[j].kind) {
      case VarMap::Kind::shifted:
        c2[vmap[j].col] = obj[j];
        break;
      case VarMap::Kind::neg_shifted:
        c2[vmap[j].col] = -obj[j];
        break;
      case VarMap::Kind::split:
        c2[vmap[j].col] = obj[j];
        c2[vmap[j].col + 1] = -obj[j];
        break;
    }
  }

  Tableau tab(std::move(body), std::move(rhs), art_begin);

  // Phase 1: maximize minus the sum of artificials.
  std::vector<Rat> c1(total, Rat(0));
  for (std::size_t r = 0; r < m; ++r) c1[art_begin + r] = -1;
  tab.load_objective(c1);
  if (tab.run(nullptr) != Tableau::StepResult::optimal) {
    throw InternalError("phase-1 objective cannot be unbounded");
  }

  auto map_primal = [&](const std::vector<Rat>& internal) {
    std::vector<Rat> x(n);
    for (std::size_t j = 0; j < n; ++j) {
      switch (vmap[j].kind) {
        case VarMap::Kind::shifted:
          x[j] = vmap[j].offset + internal[vmap[j].col];
          break;
        case VarMap::Kind::neg_shifted:
          x[j] = vmap[j].offset - internal[vmap[j].col];
          break;
        case VarMap::Kind::split:
          x[j] = internal[vmap[j].col] - internal[vmap[j].col + 1];
          break;
      }
    }
    return x;
  };
  auto map_direction = [&](const std::vector<Rat>& internal) {
    std::vector<Rat> d(n);
    for (std::size_t j = 0; j < n; ++j) {
      switch (vmap[j].kind) {
        case VarMap::Kind::shifted:
          d[j] = internal[vmap[j].col];
          break;
        case VarMap::Kind::neg_shifted:
          d[j] = -internal[vmap[j].col];
          break;
        case VarMap::Kind::split:
          d[j] = internal[vmap[j].col] - internal[vmap[j].col + 1];
          break;
      }
    }
    return d;
  };

  LPSolution sol;
  if (tab.objective_value() < 0) {
    // Infeasible. The phase-1 duals give the Farkas multipliers.
    sol.status = LPStatus::infeasible;
    sol.ray.resize(n_orig_rows);
    for (std::size_t i = 0; i < n_orig_rows; ++i) {
      Rat y = tab.reduced_cost(art_begin + i) - 1;
      sol.ray[i] = flip[i] == 1 ? y : -y;
    }
    return sol;
  }

  // Phase 2.
  tab.drive_out_artificials();
  tab.load_objective(c2);
  std::size_t unbounded_col = 0;
  const auto outcome = tab.run(&unbounded_col);

  if (outcome == Tableau::StepResult::unbounded) {
    sol.status = LPStatus::unbounded;
    sol.primal = map_primal(tab.basic_solution());
    std::vector<Rat> dir(total, Rat(0));
    dir[unbounded_col] = 1;
    for (std::size_t r = 0; r < tab.rows(); ++r) {
      dir[tab.basis()[r]] = -tab.at(r, unbounded_col);
    }
    sol.ray = map_direction(dir);
    return sol;
  }

  sol.status = LPStatus::optimal;
  sol.primal = map_primal(tab.basic_solution());
  sol.value = dot(lp.objective, sol.primal);
  sol.dual.resize(n_orig_rows);
  for (std::size_t i = 0; i < n_orig_rows; ++i) {
    Rat y = tab.reduced_cost(art_begin + i);
    if (flip[i] == -1) y = -y;
    if (lp.sense == Sense::minimize) y = -y;
    sol.dual[i] = y;
  }
  return sol;
}

namespace {

bool primal_feasible(const LinearProgram& lp, const std::vector<Rat>& x) {
  if (x.size() != lp.objective.size()) return false;
  for (const auto& c : lp.constraints) {
    Rat lhs = dot(c.coeffs, x);
    if (c.rel == Rel::le && lhs > c.rhs) return false;
    if (c.rel == Rel::ge && lhs < c.rhs) return false;
    if (c.rel == Rel::eq && lhs != c.rhs) return false;
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lp.bounds[j].lower && x[j] < *lp.bounds[j].lower) return false;
    if (lp.bounds[j].upper && x[j] > *lp.bounds[j].upper) return false;
  }
  return true;
}

// Sign conditions that make sum_i y_i (b_i - a_i.x) one-signed over the
// feasible set: for an upper bound (maximize) y >= 0 on "le" rows and
// y <= 0 on "ge" rows; mirrored for a lower bound (minimize).
bool dual_signs_ok(const LinearProgram& lp, const std::vector<Rat>& y, bool upper_bounding) {
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    switch (lp.constraints[i].rel) {
      case Rel::le:
        if (upper_bounding ? y[i] < 0 : y[i] > 0) return false;
        break;
      case Rel::ge:
        if (upper_bounding ? y[i] > 0 : y[i] < 0) return false;
        break;
      case Rel::eq:
        break;
    }
  }
  return true;
}

// Reduced costs z = c - y^T A.
std::vector<Rat> reduced_costs(const LinearProgram& lp, const std::vector<Rat>& y) {
  std::vector<Rat> z = lp.objective;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    if (y[i] == 0) continue;
    for (std::size_t j = 0; j < z.size(); ++j) {
      z[j] -= y[i] * lp.constraints[i].coeffs[j];
    }
  }
  return z;
}

}  // namespace

bool verify_certificate(const LinearProgram& lp, const LPSolution& sol) {
  const std::size_t n = lp.objective.size();
  if (n == 0 || lp.bounds.size() != n) return false;
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != n) return false;
  }
  const bool maximize = lp.sense == Sense::maximize;

  switch (sol.status) {
    case LPStatus::optimal: {
      if (!primal_feasible(lp, sol.primal)) return false;
      if (dot(lp.objective, sol.primal) != sol.value) return false;
      if (sol.dual.size() != lp.constraints.size()) return false;
      if (!dual_signs_ok(lp, sol.dual, maximize)) return false;
      // Lagrangian bound: value == y.b + sum_j extreme(z_j x_j over box).
      std::vector<Rat> z = reduced_costs(lp, sol.dual);
      Rat bound = 0;
      for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        bound += sol.dual[i] * lp.constraints[i].rhs;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (z[j] == 0) continue;
        const bool want_upper = maximize ? z[j] > 0 : z[j] < 0;
        if (want_upper) {
          if (!lp.bounds[j].upper) return false;
          bound += z[j] * *lp.bounds[j].upper;
        } else {
          if (!lp.bounds[j].lower) return false;
          bound += z[j] * *lp.bounds[j].lower;
        }
      }
      return bound == sol.value;
    }
    case LPStatus::unbounded: {
      if (!primal_feasible(lp, sol.primal)) return false;
      if (sol.ray.size() != n) return false;
      for (const auto& c : lp.constraints) {
        Rat ad = dot(c.coeffs, sol.ray);
        if (c.rel == Rel::le && ad > 0) return false;
        if (c.rel == Rel::ge && ad < 0) return false;
        if (c.rel == Rel::eq && ad != 0) return false;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (lp.bounds[j].lower && sol.ray[j] < 0) return false;
        if (lp.bounds[j].upper && sol.ray[j] > 0) return false;
      }
      Rat gain = dot(lp.objective, sol.ray);
      return maximize ? gain > 0 : gain < 0;
    }
    case LPStatus::infeasible: {
      if (sol.ray.size() != lp.constraints.size()) return false;
      if (!dual_signs_ok(lp, sol.ray, /*upper_bounding=*/true)) return false;
      // Every point satisfying the rows obeys (y^T A) x <= y.b; show that
      // no point inside the variable box can.
      std::vector<Rat> t(n, Rat(0));
      for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        if (sol.ray[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          t[j] += sol.ray[i] * lp.constraints[i].coeffs[j];
        }
      }
      Rat yb = 0;
      for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
        yb += sol.ray[i] * lp.constraints[i].rhs;
      }
      Rat box_min = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (t[j] > 0) {
          if (!lp.bounds[j].lower) return false;
          box_min += t[j] * *lp.bounds[j].lower;
        } else if (t[j] < 0) {
          if (!lp.bounds[j].upper) return false;
          box_min += t[j] * *lp.bounds[j].upper;
        }
      }
      return box_min > yb;
    }
  }
  return false;
}

std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal:
      return "optimal";
    case LPStatus::infeasible:
      return "infeasible";
    case LPStatus::unbounded:
      return "unbounded";
  }
  return "?";
}

}  // namespace iprev
