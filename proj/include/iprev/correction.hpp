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

#ifndef IPREV_CORRECTION_HPP
#define IPREV_CORRECTION_HPP

#include <string>

#include "iprev/consistency.hpp"
#include "iprev/core.hpp"

namespace iprev {

/// Canonical repairs of an inconsistent assessment.
///
/// convex:   replace each assessed value by its convex natural extension;
///           the result is the least convex assessment dominating the
///           original on its domain.
/// centered: additionally recenter by the extension's value at zero and
///           adjoin the zero gamble with value 0; the result is centered
///           convex.
/// shift:    subtract the extension's value at zero from every assessed
///           value; the smallest uniform shift that restores avoiding
///           sure loss.
enum class CorrectionMode { convex, centered, shift };

std::string to_string(CorrectionMode m);

struct CorrectionResult {
  CorrectionMode mode;
  bool changed = true;  // false when only_if_consistent skipped the repair
  Assessment original;
  Assessment corrected;
  Rat ec_zero;
  ConsistencyReport before;
  ConsistencyReport after;
};

/// Applies one correction mode. Upper assessments are conjugated through
/// and reported back in upper terms. With `only_if_inconsistent`, inputs
/// already passing the mode's target check are returned unchanged (the
/// unconditional formulas can otherwise raise values of an assessment
/// that was already safe).
CorrectionResult correct(const Assessment& a, CorrectionMode mode,
                         bool only_if_inconsistent = false,
                         Execution mode_exec = Execution::serial);

}  // namespace iprev

#endif  // IPREV_CORRECTION_HPP
