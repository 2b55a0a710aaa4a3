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

#ifndef IPREV_CONSISTENCY_HPP
#define IPREV_CONSISTENCY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iprev/batch.hpp"
#include "iprev/core.hpp"
#include "iprev/rational.hpp"

namespace iprev {

/// Three-valued verdict for checks whose precondition may not apply.
enum class Tri { yes, no, not_applicable };

std::string to_string(Tri t);

/// A normalized bet combination whose gain stays below zero everywhere.
struct GainWitness {
  std::vector<std::string> ids;
  std::vector<Rat> coefficients;
  Rat sup_gain;  // < 0
};

/// A domain entry whose extension value differs from the assessed value.
struct EntryWitness {
  std::string id;
  Rat assessed;
  Rat extension_value;
};

/// Where an assessment sits on the consistency ladder, with numeric
/// witnesses for every failed property. Verdicts and values are reported
/// in the assessment's own orientation.
struct ConsistencyReport {
  Orientation orientation = Orientation::lower;
  bool avoids_sure_loss = false;
  /// Always true on a finite domain; recorded together with k_bar, the
  /// largest uniform shift toward caution that still avoids sure loss.
  bool avoids_unbounded_sure_loss = true;
  Rat k_bar;
  bool convex = false;
  Tri centered_convex = Tri::not_applicable;
  bool coherent = false;

  std::optional<GainWitness> sure_loss_witness;
  std::optional<EntryWitness> coherence_witness;
  std::optional<EntryWitness> convexity_witness;
  std::optional<EntryWitness> centering_witness;
};

/// Full ladder classification. Upper assessments are conjugated, checked,
/// and reported back in upper terms. The per-entry fixed-point programs
/// are independent, so `mode` may fan them out.
ConsistencyReport classify(const Assessment& a, Execution mode = Execution::serial);

/// True iff no normalized nonnegative bet combination has a gain with
/// strictly negative supremum; the witness is the violating combination.
std::pair<bool, std::optional<GainWitness>> check_avoids_sure_loss(const Assessment& a);

/// True iff the assessment avoids sure loss and the natural extension
/// fixes every assessed value.
std::pair<bool, std::optional<EntryWitness>> check_coherence(const Assessment& a,
                                                             Execution mode = Execution::serial);

/// True iff the convex natural extension fixes every assessed value.
std::pair<bool, std::optional<EntryWitness>> check_convexity(const Assessment& a,
                                                             Execution mode = Execution::serial);

/// not_applicable when the zero gamble is not assessed; otherwise requires
/// convexity plus assessed value exactly 0 at the zero gamble.
std::pair<Tri, std::optional<EntryWitness>> check_centered_convexity(
    const Assessment& a, Execution mode = Execution::serial);

/// The largest k such that shifting every assessed value up by k still
/// avoids sure loss; nonnegative exactly when the assessment avoids sure
/// loss already.
Rat check_k_bar(const Assessment& a);

/// Falsification-only sampling of the relaxed gain condition, where the
/// combined bet coefficients may sum to less than the coefficient of the
/// bet against: samples `trials` combinations and checks sup gain >= 0 for
/// each. Requires an assessment that passed check_centered_convexity.
bool check_relaxed_centered(const Assessment& a, int trials, std::uint64_t seed = 1);

}  // namespace iprev

#endif  // IPREV_CONSISTENCY_HPP
