// Copyright 2026 The Datadiff Authors. All rights reserved.
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

#include "datadiff/operation.hpp"

#include <stdexcept>
#include <utility>

namespace datadiff {

Clause Clause::eq(std::string attr, Rat v) {
  Clause c;
  c.kind = ClauseKind::Eq;
  c.attr = std::move(attr);
  c.value = v;
  return c;
}

Clause Clause::at_most(std::string attr, Rat v) {
  Clause c;
  c.kind = ClauseKind::AtMost;
  c.attr = std::move(attr);
  c.value = v;
  return c;
}

Clause Clause::at_least(std::string attr, Rat v) {
  Clause c;
  c.kind = ClauseKind::AtLeast;
  c.attr = std::move(attr);
  c.value = v;
  return c;
}

Clause Clause::range(std::string attr, Rat lo, Rat hi) {
  if (hi < lo) throw std::invalid_argument("range with lo > hi");
  Clause c;
  c.kind = ClauseKind::Range;
  c.attr = std::move(attr);
  c.lo = lo;
  c.hi = hi;
  return c;
}

Clause Clause::range_union(std::string attr, std::vector<Interval> intervals) {
  if (intervals.empty()) throw std::invalid_argument("empty range union");
  for (size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].hi < intervals[i].lo) throw std::invalid_argument("interval with lo > hi");
    if (i > 0 && !(intervals[i - 1].hi < intervals[i].lo)) {
      throw std::invalid_argument("range union intervals must be disjoint and sorted");
    }
  }
  Clause c;
  c.kind = ClauseKind::RangeUnion;
  c.attr = std::move(attr);
  c.intervals = std::move(intervals);
  return c;
}

bool Clause::matches(const Rat& x) const {
  switch (kind) {
    case ClauseKind::Eq:
      return x == value;
    case ClauseKind::AtMost:
      return x <= value;
    case ClauseKind::AtLeast:
      return x >= value;
    case ClauseKind::Range:
      return lo <= x && x <= hi;
    case ClauseKind::RangeUnion:
      for (const auto& iv : intervals) {
        if (iv.lo <= x && x <= iv.hi) return true;
      }
      return false;
  }
  return false;
}

int Clause::range_count() const {
  return kind == ClauseKind::RangeUnion ? static_cast<int>(intervals.size()) : 1;
}

Modifier Modifier::assign(std::string attr, Rat b) {
  Modifier m;
  m.kind = ModKind::Assign;
  m.attr = std::move(attr);
  m.value = b;
  return m;
}

Modifier Modifier::increment(std::string attr, Rat b) {
  Modifier m;
  m.kind = ModKind::Increment;
  m.attr = std::move(attr);
  m.value = b;
  return m;
}

Modifier Modifier::affine(std::string attr, Rat slope, Rat intercept) {
  Modifier m;
  m.kind = ModKind::Affine;
  m.attr = std::move(attr);
  m.slope = slope;
  m.intercept = intercept;
  return m;
}

Rat Modifier::apply(const Rat& old) const {
  switch (kind) {
    case ModKind::Assign:
      return value;
    case ModKind::Increment:
      return old + value;
    case ModKind::Affine:
      return slope * old + intercept;
  }
  return old;
}

std::string to_string(ConditionType t) {
  switch (t) {
    case ConditionType::Eq: return "eq";
    case ConditionType::AtMost: return "leq";
    case ConditionType::AtMostAtLeast: return "leqgeq";
    case ConditionType::Range: return "range";
    case ConditionType::RangeUnion: return "union";
  }
  return "?";
}

std::string to_string(ModifierType t) {
  switch (t) {
    case ModifierType::Assign: return "assign";
    case ModifierType::Increment: return "inc";
    case ModifierType::AssignIncrement: return "assigninc";
    case ModifierType::Affine: return "affine";
  }
  return "?";
}

bool clause_kind_allowed(ConditionType type, ClauseKind kind) {
  switch (type) {
    case ConditionType::Eq:
      return kind == ClauseKind::Eq;
    case ConditionType::AtMost:
      return kind == ClauseKind::AtMost;
    case ConditionType::AtMostAtLeast:
      return kind == ClauseKind::AtMost || kind == ClauseKind::AtLeast;
    case ConditionType::Range:
      return kind == ClauseKind::Range;
    case ConditionType::RangeUnion:
      return kind == ClauseKind::RangeUnion || kind == ClauseKind::Range;
  }
  return false;
}

bool mod_kind_allowed(ModifierType type, ModKind kind) {
  switch (type) {
    case ModifierType::Assign:
      return kind == ModKind::Assign;
    case ModifierType::Increment:
      return kind == ModKind::Increment;
    case ModifierType::AssignIncrement:
      return kind == ModKind::Assign || kind == ModKind::Increment;
    case ModifierType::Affine:
      return kind == ModKind::Affine;
  }
  return false;
}

}  // namespace datadiff
