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

#ifndef DATADIFF_SEMANTICS_HPP
#define DATADIFF_SEMANTICS_HPP

#include <string>

#include "datadiff/boundary.hpp"
#include "datadiff/operation.hpp"
#include "datadiff/relation.hpp"

namespace datadiff {

// WHERE-clause evaluation for one row. Throws std::invalid_argument when a
// clause attribute is missing from the schema.
bool matches(const Condition& cond, const Relation& rel, long long key);

struct Applied {
  Relation relation;
  // Set when some rewritten cell is not an integer. Solver-emitted operations
  // never trigger this; hand-written scripts in verify mode can.
  bool non_integral = false;
};

// UPDATE semantics: simultaneously rewrites the modifier attribute of every
// matched row; conditions are evaluated against the input snapshot.
Applied apply_operation(const Relation& rel, const Operation& op);

// Left fold of apply_operation in sequence order.
Applied apply_diff(const Relation& rel, const Diff& diff);

// Operation cost under a family: 1 per operation, except union families where
// an operation costs kappa0 + kappa1 * (sum of range counts over clauses).
long long operation_cost(const Operation& op, const FamilySpec& family);
long long diff_cost(const Diff& diff, const FamilySpec& family);

// Sum over union-condition operations of their interval counts.
long long total_range_count(const Diff& diff);

// Length of an at-most / at-least / range condition against the boundary;
// used only for deterministic tie-breaking. Throws std::invalid_argument for
// Eq and RangeUnion clauses (not applicable).
Rat operation_length(const Operation& op, const Boundary& boundary);
Rat diff_total_length(const Diff& diff, const Boundary& boundary);

}  // namespace datadiff

#endif  // DATADIFF_SEMANTICS_HPP
