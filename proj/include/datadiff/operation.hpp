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

#ifndef DATADIFF_OPERATION_HPP
#define DATADIFF_OPERATION_HPP

#include <string>
#include <vector>

#include "datadiff/rat.hpp"

namespace datadiff {

enum class ClauseKind { Eq, AtMost, AtLeast, Range, RangeUnion };

struct Interval {
  Rat lo;
  Rat hi;
  bool operator==(const Interval&) const = default;
};

// Single-attribute clause of a WHERE condition.
struct Clause {
  ClauseKind kind = ClauseKind::Eq;
  std::string attr;
  Rat value;                        // Eq / AtMost / AtLeast
  Rat lo, hi;                       // Range
  std::vector<Interval> intervals;  // RangeUnion: disjoint, sorted by lo

  static Clause eq(std::string attr, Rat v);
  static Clause at_most(std::string attr, Rat v);
  static Clause at_least(std::string attr, Rat v);
  static Clause range(std::string attr, Rat lo, Rat hi);
  static Clause range_union(std::string attr, std::vector<Interval> intervals);

  bool matches(const Rat& x) const;
  // Number of ranges this clause contributes to the union cost formula.
  int range_count() const;

  bool operator==(const Clause&) const = default;
};

// Conjunction of clauses of the same kind on pairwise distinct attributes.
struct Condition {
  std::vector<Clause> clauses;
  bool operator==(const Condition&) const = default;
};

enum class ModKind { Assign, Increment, Affine };

struct Modifier {
  ModKind kind = ModKind::Assign;
  std::string attr;
  Rat value;             // Assign: b; Increment: b
  Rat slope, intercept;  // Affine: B <- slope*B + intercept

  static Modifier assign(std::string attr, Rat b);
  static Modifier increment(std::string attr, Rat b);
  static Modifier affine(std::string attr, Rat slope, Rat intercept);

  Rat apply(const Rat& old) const;

  bool operator==(const Modifier&) const = default;
};

// One UPDATE statement: SET <modifier> WHERE <condition>.
struct Operation {
  Condition condition;
  Modifier modifier;
  bool operator==(const Operation&) const = default;
};

// Ordered operation sequence; empty is a valid diff of cost 0.
struct Diff {
  std::vector<Operation> ops;
  bool operator==(const Diff&) const = default;
};

enum class ConditionType { Eq, AtMost, AtMostAtLeast, Range, RangeUnion };
enum class ModifierType { Assign, Increment, AssignIncrement, Affine };

struct FamilySpec {
  ConditionType condition_type = ConditionType::Eq;
  ModifierType modifier_type = ModifierType::Assign;
  // Union-of-ranges pricing; ignored for the other condition types.
  long long kappa0 = 0;
  long long kappa1 = 0;
  bool operator==(const FamilySpec&) const = default;
};

std::string to_string(ConditionType t);
std::string to_string(ModifierType t);

// True when the clause kind is allowed under the condition type.
bool clause_kind_allowed(ConditionType type, ClauseKind kind);
// True when the modifier kind is allowed under the modifier type
// (AssignIncrement permits Assign and Increment; Affine permits Affine only).
bool mod_kind_allowed(ModifierType type, ModKind kind);

}  // namespace datadiff

#endif  // DATADIFF_OPERATION_HPP
