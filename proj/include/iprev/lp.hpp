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

#ifndef IPREV_LP_HPP
#define IPREV_LP_HPP

#include <optional>
#include <string>
#include <vector>

#include "iprev/rational.hpp"

namespace iprev {

enum class Sense { maximize, minimize };
enum class Rel { le, eq, ge };

/// Per-variable bound. Absent optional = unbounded on that side.
struct Bound {
  std::optional<Rat> lower;
  std::optional<Rat> upper;

  static Bound free() { return {}; }
  static Bound nonneg() { return {Rat(0), std::nullopt}; }
  static Bound at_least(const Rat& l) { return {l, std::nullopt}; }
  static Bound at_most(const Rat& u) { return {std::nullopt, u}; }
  static Bound between(const Rat& l, const Rat& u) { return {l, u}; }
};

struct Constraint {
  std::vector<Rat> coeffs;
  Rel rel = Rel::le;
  Rat rhs;
};

/// A dense linear program in exact rational arithmetic.
struct LinearProgram {
  Sense sense = Sense::maximize;
  std::vector<Rat> objective;
  std::vector<Constraint> constraints;
  std::vector<Bound> bounds;  // one per variable
};

enum class LPStatus { optimal, infeasible, unbounded };

/// An exact optimum (or non-existence proof) with verifiable witnesses.
///
/// optimal:    `primal` is a feasible point attaining `value`; `dual` holds
///             one multiplier per constraint and certifies the same value
///             through the Lagrangian bound (strong duality, exact).
/// unbounded:  `primal` is a feasible point and `ray` an improving
///             recession direction.
/// infeasible: `ray` holds constraint multipliers whose combination no
///             point within the variable bounds can satisfy (Farkas).
struct LPSolution {
  LPStatus status = LPStatus::optimal;
  Rat value;
  std::vector<Rat> primal;
  std::vector<Rat> dual;
  std::vector<Rat> ray;
};

/// Solves the program with an exact-arithmetic two-phase simplex using
/// Bland's rule, so the result is deterministic and the iteration always
/// terminates. Throws Error on malformed input (dimension mismatches,
/// empty bounds vector, lower bound above upper bound).
LPSolution solve(const LinearProgram& lp);

/// Re-checks a solution from scratch: primal feasibility, dual/Farkas
/// multiplier signs, and exact equality of the certified objective values.
/// Independent of the simplex path; returns false on any discrepancy.
bool verify_certificate(const LinearProgram& lp, const LPSolution& sol);

std::string to_string(LPStatus s);

}  // namespace iprev

#endif  // IPREV_LP_HPP
