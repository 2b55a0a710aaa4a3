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

#include "iprev/core.hpp"

#include <algorithm>
#include <set>

#include "iprev/error.hpp"

namespace iprev {

Space::Space(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw Error("space needs at least one atom");
  std::set<std::string> seen;
  for (const auto& a : atoms_) {
    if (a.empty()) throw Error("empty atom label");
    if (!seen.insert(a).second) throw Error("duplicate atom label '" + a + "'");
  }
}

std::size_t Space::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == label) return i;
  }
  throw Error("unknown atom '" + label + "'");
}

Gamble::Gamble(Space space, std::vector<Rat> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size()) {
    throw Error("gamble has " + std::to_string(values_.size()) + " values on a space of " +
                std::to_string(space_.size()) + " atoms");
  }
}

Gamble Gamble::zero(const Space& space) {
  return Gamble(space, std::vector<Rat>(space.size(), Rat(0)));
}

Gamble Gamble::constant(const Space& space, const Rat& c) {
  return Gamble(space, std::vector<Rat>(space.size(), c));
}

Gamble Gamble::indicator(const Space& space, const std::vector<std::size_t>& event) {
  std::vector<Rat> v(space.size(), Rat(0));
  for (std::size_t i : event) {
    if (i >= space.size()) throw Error("event atom index out of range");
    v[i] = 1;
  }
  return Gamble(space, std::move(v));
}

bool Gamble::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rat& v) { return v == 0; });
}

namespace {
void require_same_space(const Gamble& a, const Gamble& b) {
  if (a.space() != b.space()) throw Error("gambles live on different spaces");
}
}  // namespace

Gamble Gamble::operator-() const {
  std::vector<Rat> v(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v[i] = -values_[i];
  return Gamble(space_, std::move(v));
}

Gamble operator+(const Gamble& a, const Gamble& b) {
  require_same_space(a, b);
  std::vector<Rat> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
  return Gamble(a.space(), std::move(v));
}

Gamble operator-(const Gamble& a, const Gamble& b) { return a + (-b); }

Gamble operator*(const Rat& c, const Gamble& g) {
  std::vector<Rat> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = c * g[i];
  return Gamble(g.space(), std::move(v));
}

Gamble operator+(const Gamble& g, const Rat& c) {
  std::vector<Rat> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = g[i] + c;
  return Gamble(g.space(), std::move(v));
}

Gamble operator-(const Gamble& g, const Rat& c) { return g + Rat(-c); }

bool dominated_by(const Gamble& a, const Gamble& b) {
  require_same_space(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::pair<Rat, Rat> inf_sup(const Gamble& g) {
  Rat lo = g[0], hi = g[0];
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (g[i] < lo) lo = g[i];
    if (g[i] > hi) hi = g[i];
  }
  return {lo, hi};
}

std::string to_string(Orientation o) { return o == Orientation::lower ? "lower" : "upper"; }

Assessment::Assessment(Space space, Orientation orientation, std::vector<AssessmentEntry> entries)
    : space_(std::move(space)), orientation_(orientation), entries_(std::move(entries)) {
  if (entries_.empty()) throw Error("assessment needs at least one entry");
  std::set<std::string> ids;
  for (const auto& e : entries_) {
    if (e.id.empty()) throw Error("empty gamble identifier");
    if (!ids.insert(e.id).second) throw Error("duplicate gamble identifier '" + e.id + "'");
    if (e.gamble.space() != space_) {
      throw Error("entry '" + e.id + "' lives on a different space");
    }
  }
}

const AssessmentEntry* Assessment::find(const std::string& id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const AssessmentEntry* Assessment::zero_entry() const {
  for (const auto& e : entries_) {
    if (e.gamble.is_zero()) return &e;
  }
  return nullptr;
}

Assessment conjugate(const Assessment& a) {
  std::vector<AssessmentEntry> entries;
  entries.reserve(a.size());
  for (const auto& e : a.entries()) {
    entries.push_back({e.id, -e.gamble, -e.value});
  }
  Orientation o =
      a.orientation() == Orientation::lower ? Orientation::upper : Orientation::lower;
  return Assessment(a.space(), o, std::move(entries));
}

Assessment as_lower(const Assessment& a) {
  return a.orientation() == Orientation::lower ? a : conjugate(a);
}

PrecisePrevision::PrecisePrevision(Space space, std::vector<Rat> masses)
    : space_(std::move(space)), masses_(std::move(masses)) {
  if (masses_.size() != space_.size()) throw Error("mass vector length mismatch");
  Rat total = 0;
  for (const auto& m : masses_) {
    if (m < 0) throw Error("negative probability mass");
    total += m;
  }
  if (total != 1) throw Error("probability masses sum to " + rat_to_string(total) + ", not 1");
}

PrecisePrevision PrecisePrevision::dirac(const Space& space, std::size_t atom) {
  if (atom >= space.size()) throw Error("dirac atom index out of range");
  std::vector<Rat> m(space.size(), Rat(0));
  m[atom] = 1;
  return PrecisePrevision(space, std::move(m));
}

PrecisePrevision PrecisePrevision::uniform(const Space& space) {
  std::vector<Rat> m(space.size(), Rat(1, static_cast<long>(space.size())));
  return PrecisePrevision(space, std::move(m));
}

Rat PrecisePrevision::operator()(const Gamble& g) const {
  if (g.space() != space_) throw Error("prevision and gamble live on different spaces");
  return dot(masses_, g.values());
}

}  // namespace iprev
