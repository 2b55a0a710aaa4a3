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

#ifndef IPREV_CORE_HPP
#define IPREV_CORE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "iprev/rational.hpp"

namespace iprev {

/// A finite possibility space: an ordered list of distinct atom labels.
class Space {
 public:
  explicit Space(std::vector<std::string> atoms);

  std::size_t size() const { return atoms_.size(); }
  const std::string& atom(std::size_t i) const { return atoms_.at(i); }
  const std::vector<std::string>& atoms() const { return atoms_; }

  /// Index of an atom label; throws Error if absent.
  std::size_t index_of(const std::string& label) const;

  bool operator==(const Space& other) const { return atoms_ == other.atoms_; }
  bool operator!=(const Space& other) const { return !(*this == other); }

 private:
  std::vector<std::string> atoms_;
};

/// A bounded random variable on a finite space: one exact payoff per atom.
class Gamble {
 public:
  Gamble(Space space, std::vector<Rat> values);

  static Gamble zero(const Space& space);
  static Gamble constant(const Space& space, const Rat& c);
  /// Indicator of the event given by atom indices.
  static Gamble indicator(const Space& space, const std::vector<std::size_t>& event);

  const Space& space() const { return space_; }
  const std::vector<Rat>& values() const { return values_; }
  const Rat& operator[](std::size_t i) const { return values_.at(i); }
  std::size_t size() const { return values_.size(); }

  bool is_zero() const;

  bool operator==(const Gamble& other) const {
    return space_ == other.space_ && values_ == other.values_;
  }

  Gamble operator-() const;
  friend Gamble operator+(const Gamble& a, const Gamble& b);
  friend Gamble operator-(const Gamble& a, const Gamble& b);
  friend Gamble operator*(const Rat& c, const Gamble& g);
  /// Pointwise shift by a constant.
  friend Gamble operator+(const Gamble& g, const Rat& c);
  friend Gamble operator-(const Gamble& g, const Rat& c);

  /// Pointwise comparison: true iff a(w) <= b(w) for every atom w.
  friend bool dominated_by(const Gamble& a, const Gamble& b);

 private:
  Space space_;
  std::vector<Rat> values_;
};

/// (min, max) of the gamble's payoffs over the atoms.
std::pair<Rat, Rat> inf_sup(const Gamble& g);

enum class Orientation { lower, upper };

std::string to_string(Orientation o);

struct AssessmentEntry {
  std::string id;
  Gamble gamble;
  Rat value;
};

/// A finite prevision assessment: identified gambles with assessed values
/// and a lower/upper orientation. Immutable after construction.
class Assessment {
 public:
  Assessment(Space space, Orientation orientation, std::vector<AssessmentEntry> entries);

  const Space& space() const { return space_; }
  Orientation orientation() const { return orientation_; }
  const std::vector<AssessmentEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Entry by identifier, or nullptr.
  const AssessmentEntry* find(const std::string& id) const;

  /// Entry whose gamble is the zero vector (looked up by value, not by
  /// name), or nullptr. Centeredness conditions on this entry.
  const AssessmentEntry* zero_entry() const;

 private:
  Space space_;
  Orientation orientation_;
  std::vector<AssessmentEntry> entries_;
};

/// Conjugate assessment: flips orientation and replaces (X, v) by (-X, -v).
/// Applying it twice is the identity.
Assessment conjugate(const Assessment& a);

/// Returns `a` if already lower, otherwise its conjugate.
Assessment as_lower(const Assessment& a);

/// A coherent precise prevision on a finite space: a probability mass
/// vector; evaluation is the mass-weighted sum of a gamble's payoffs.
class PrecisePrevision {
 public:
  PrecisePrevision(Space space, std::vector<Rat> masses);

  static PrecisePrevision dirac(const Space& space, std::size_t atom);
  static PrecisePrevision uniform(const Space& space);

  const Space& space() const { return space_; }
  const std::vector<Rat>& masses() const { return masses_; }

  /// Expectation of g; throws Error on space mismatch.
  Rat operator()(const Gamble& g) const;

  bool operator==(const PrecisePrevision& other) const {
    return space_ == other.space_ && masses_ == other.masses_;
  }

 private:
  Space space_;
  std::vector<Rat> masses_;
};

}  // namespace iprev

#endif  // IPREV_CORE_HPP
