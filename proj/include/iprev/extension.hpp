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

#ifndef IPREV_EXTENSION_HPP
#define IPREV_EXTENSION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "iprev/batch.hpp"
#include "iprev/core.hpp"
#include "iprev/lp.hpp"

namespace iprev {

enum class ExtensionKind { natural, convex_natural };

/// Value of an extension at one target gamble, with both LP witnesses.
///
/// The primal program maximizes the guaranteed margin alpha over gain
/// combinations of the assessed gambles; the dual program minimizes over
/// dominating precise previsions (a translated one for the convex kind).
/// Both are solved on every call and must agree exactly; their solutions
/// are kept for certificate re-checking.
struct ExtensionResult {
  ExtensionKind kind;
  Gamble target;

  /// False only for the natural extension of an assessment incurring sure
  /// loss, where the primal is unbounded.
  bool finite = true;
  Rat value;

  /// Primal witness: one coefficient per assessment entry, attaining
  /// `value` as the margin of the combined gain.
  std::vector<Rat> coefficients;

  /// Dual witness: a dominating precise prevision, translated by `r` for
  /// the convex kind (r is disengaged for the natural kind).
  std::optional<PrecisePrevision> q;
  std::optional<Rat> r;

  /// When not finite: normalized combination whose gain stays below zero
  /// everywhere (a sure-loss witness).
  std::vector<Rat> sure_loss_coefficients;

  LinearProgram primal_lp;
  LPSolution primal_sol;
  LinearProgram dual_lp;
  LPSolution dual_sol;
};

/// Convex natural extension of a lower assessment at z. Always finite on a
/// finite domain. Throws Error on space mismatch or upper orientation;
/// throws InternalError if the two LP values disagree.
ExtensionResult convex_natural_extension(const Assessment& lower, const Gamble& z);

/// Natural extension of a lower assessment at z: same gain program without
/// the normalization row. Unbounded (finite == false) exactly when the
/// assessment incurs sure loss.
ExtensionResult natural_extension(const Assessment& lower, const Gamble& z);

/// Convex natural extension at the zero gamble. Its negative is the
/// largest uniform upward shift of the assessment that still avoids sure
/// loss.
Rat ec_at_zero(const Assessment& lower);

/// Evaluates one extension on many targets; independent solves, so the
/// parallel policy fans them out across threads.
std::vector<ExtensionResult> extend_batch(const Assessment& lower,
                                          const std::vector<Gamble>& targets, ExtensionKind kind,
                                          Execution mode = Execution::serial);

}  // namespace iprev

#endif  // IPREV_EXTENSION_HPP
