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

#include "iprev/consistency.hpp"

#include <random>

#include "iprev/error.hpp"
#include "iprev/extension.hpp"

namespace iprev {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes:
      return "yes";
    case Tri::no:
      return "no";
    case Tri::not_applicable:
      return "not_applicable";
  }
  return "?";
}

namespace {

std::vector<std::string> entry_ids(const Assessment& a) {
  std::vector<std::string> ids;
  ids.reserve(a.size());
  for (const auto& e : a.entries()) ids.push_back(e.id);
  return ids;
}

// Gain of a bet combination at one atom: sum_i s_i (X_i(w) - mu_i). The
// conjugate lower form has the same gain as the original upper form, so
// witnesses carry over between orientations unchanged.
Rat gain_at(const Assessment& lower, const std::vector<Rat>& s, std::size_t w) {
  Rat g = 0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (s[i] == 0) continue;
    g += s[i] * (lower.entries()[i].gamble[w] - lower.entries()[i].value);
  }
  return g;
}

Rat sup_gain(const Assessment& lower, const std::vector<Rat>& s) {
  Rat best = gain_at(lower, s, 0);
  for (std::size_t w = 1; w < lower.space().size(); ++w) {
    Rat g = gain_at(lower, s, w);
    if (g > best) best = g;
  }
  return best;
}

// Maps a fixed-point witness computed on the conjugated lower assessment
// back into the original orientation.
EntryWitness oriented_witness(const Assessment& original, const std::string& id, const Rat& lower_value,
                              const Rat& lower_extension) {
  if (original.orientation() == Orientation::lower) {
    return {id, lower_value, lower_extension};
  }
  return {id, -lower_value, -lower_extension};
}

}  // namespace

std::pair<bool, std::optional<GainWitness>> check_avoids_sure_loss(const Assessment& a) {
  const Assessment low = as_lower(a);
  ExtensionResult at_zero = convex_natural_extension(low, Gamble::zero(low.space()));
  const Rat k_bar = -at_zero.value;
  if (k_bar >= 0) return {true, std::nullopt};
  GainWitness w{entry_ids(low), at_zero.coefficients, sup_gain(low, at_zero.coefficients)};
  return {false, std::move(w)};
}

std::pair<bool, std::optional<EntryWitness>> check_coherence(const Assessment& a, Execution mode) {
  const Assessment low = as_lower(a);
  auto [asl, asl_witness] = check_avoids_sure_loss(low);
  if (!asl) return {false, std::nullopt};

  std::vector<Gamble> targets;
  targets.reserve(low.size());
  for (const auto& e : low.entries()) targets.push_back(e.gamble);
  auto results = extend_batch(low, targets, ExtensionKind::natural, mode);
  for (std::size_t i = 0; i < low.size(); ++i) {
    if (results[i].value != low.entries()[i].value) {
      return {false, oriented_witness(a, low.entries()[i].id, low.entries()[i].value,
                                      results[i].value)};
    }
  }
  return {true, std::nullopt};
}

std::pair<bool, std::optional<EntryWitness>> check_convexity(const Assessment& a, Execution mode) {
  const Assessment low = as_lower(a);
  std::vector<Gamble> targets;
  targets.reserve(low.size());
  for (const auto& e : low.entries()) targets.push_back(e.gamble);
  auto results = extend_batch(low, targets, ExtensionKind::convex_natural, mode);
  for (std::size_t i = 0; i < low.size(); ++i) {
    if (results[i].value != low.entries()[i].value) {
      return {false, oriented_witness(a, low.entries()[i].id, low.entries()[i].value,
                                      results[i].value)};
    }
  }
  return {true, std::nullopt};
}

std::pair<Tri, std::optional<EntryWitness>> check_centered_convexity(const Assessment& a,
                                                                     Execution mode) {
  const AssessmentEntry* zero = a.zero_entry();
  if (zero == nullptr) return {Tri::not_applicable, std::nullopt};
  if (zero->value != 0) {
    return {Tri::no, EntryWitness{zero->id, zero->value, Rat(0)}};
  }
  auto [convex, witness] = check_convexity(a, mode);
  if (!convex) return {Tri::no, std::move(witness)};
  return {Tri::yes, std::nullopt};
}

Rat check_k_bar(const Assessment& a) { return -ec_at_zero(as_lower(a)); }

ConsistencyReport classify(const Assessment& a, Execution mode) {
  const Assessment low = as_lower(a);
  ConsistencyReport report;
  report.orientation = a.orientation();

  ExtensionResult at_zero = convex_natural_extension(low, Gamble::zero(low.space()));
  report.k_bar = -at_zero.value;
  report.avoids_unbounded_sure_loss = true;  // finite domain
  report.avoids_sure_loss = report.k_bar >= 0;
  if (!report.avoids_sure_loss) {
    report.sure_loss_witness =
        GainWitness{entry_ids(low), at_zero.coefficients, sup_gain(low, at_zero.coefficients)};
  }

  std::vector<Gamble> targets;
  targets.reserve(low.size());
  for (const auto& e : low.entries()) targets.push_back(e.gamble);

  auto convex_values = extend_batch(low, targets, ExtensionKind::convex_natural, mode);
  report.convex = true;
  for (std::size_t i = 0; i < low.size() && report.convex; ++i) {
    if (convex_values[i].value != low.entries()[i].value) {
      report.convex = false;
      report.convexity_witness = oriented_witness(a, low.entries()[i].id,
                                                  low.entries()[i].value, convex_values[i].value);
    }
  }

  const AssessmentEntry* zero = low.zero_entry();
  if (zero == nullptr) {
    report.centered_convex = Tri::not_applicable;
  } else if (zero->value != 0) {
    report.centered_convex = Tri::no;
    report.centering_witness =
        oriented_witness(a, zero->id, zero->value, Rat(0));
  } else {
    report.centered_convex = report.convex ? Tri::yes : Tri::no;
    if (!report.convex) report.centering_witness = report.convexity_witness;
  }

  report.coherent = false;
  if (report.avoids_sure_loss) {
    auto natural_values = extend_batch(low, targets, ExtensionKind::natural, mode);
    report.coherent = true;
    for (std::size_t i = 0; i < low.size() && report.coherent; ++i) {
      if (natural_values[i].value != low.entries()[i].value) {
        report.coherent = false;
        report.coherence_witness = oriented_witness(
            a, low.entries()[i].id, low.entries()[i].value, natural_values[i].value);
      }
    }
  }
  return report;
}

bool check_relaxed_centered(const Assessment& a, int trials, std::uint64_t seed) {
  auto [verdict, witness] = check_centered_convexity(a);
  if (verdict != Tri::yes) {
    throw Error("relaxed-gain sampling requires a centered convex assessment");
  }
  const Assessment low = as_lower(a);
  const std::size_t n = low.size();

  std::mt19937_64 eng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); };

  for (int t = 0; t < trials; ++t) {
    // Bet coefficients with sum <= 1, against one entry with coefficient 1.
    std::vector<Rat> s(n, Rat(0));
    Rat total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = make_rat(pick(0, 6), pick(1, 6));
      total += s[i];
    }
    if (total > 0) {
      Rat shrink = make_rat(pick(0, 8), 8) / total;  // scales sum into [0, 1]
      for (auto& v : s) v *= shrink;
    }
    const std::size_t against = static_cast<std::size_t>(pick(0, static_cast<int>(n) - 1));

    Rat best;
    bool first = true;
    for (std::size_t w = 0; w < low.space().size(); ++w) {
      Rat g = gain_at(low, s, w) -
              (low.entries()[against].gamble[w] - low.entries()[against].value);
      if (first || g > best) {
        best = g;
        first = false;
      }
    }
    if (best < 0) return false;
  }
  return true;
}

}  // namespace iprev
