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

#include "datadiff/semantics.hpp"

#include <stdexcept>

namespace datadiff {

bool matches(const Condition& cond, const Relation& rel, long long key) {
  const auto& cells = rel.rows.at(key);
  for (const auto& clause : cond.clauses) {
    int idx = rel.attr_index(clause.attr);
    if (idx < 0) throw std::invalid_argument("condition attribute not in schema: " + clause.attr);
    if (!clause.matches(cells[idx])) return false;
  }
  return true;
}

Applied apply_operation(const Relation& rel, const Operation& op) {
  int widx = rel.attr_index(op.modifier.attr);
  if (widx < 0) throw std::invalid_argument("modifier attribute not in schema: " + op.modifier.attr);

  Applied out;
  out.relation = rel;
  for (const auto& [key, cells] : rel.rows) {
    if (!matches(op.condition, rel, key)) continue;
    Rat next = op.modifier.apply(cells[widx]);
    if (!next.is_integer()) out.non_integral = true;
    out.relation.rows[key][widx] = next;
  }
  return out;
}

Applied apply_diff(const Relation& rel, const Diff& diff) {
  Applied out;
  out.relation = rel;
  for (const auto& op : diff.ops) {
    Applied step = apply_operation(out.relation, op);
    out.relation = std::move(step.relation);
    out.non_integral = out.non_integral || step.non_integral;
  }
  return out;
}

long long operation_cost(const Operation& op, const FamilySpec& family) {
  if (family.condition_type != ConditionType::RangeUnion) return 1;
  long long ranges = 0;
  for (const auto& clause : op.condition.clauses) ranges += clause.range_count();
  return family.kappa0 + family.kappa1 * ranges;
}

long long diff_cost(const Diff& diff, const FamilySpec& family) {
  long long total = 0;
  for (const auto& op : diff.ops) total += operation_cost(op, family);
  return total;
}

long long total_range_count(const Diff& diff) {
  long long total = 0;
  for (const auto& op : diff.ops) {
    for (const auto& clause : op.condition.clauses) {
      if (clause.kind == ClauseKind::RangeUnion || clause.kind == ClauseKind::Range) {
        total += clause.range_count();
      }
    }
  }
  return total;
}

namespace {

Rat clause_length(const Clause& clause, const Boundary& boundary) {
  auto it = boundary.axes.find(clause.attr);
  if (it == boundary.axes.end()) {
    throw std::invalid_argument("no boundary for attribute " + clause.attr);
  }
  const AxisBoundary& axis = it->second;
  switch (clause.kind) {
    case ClauseKind::AtMost:
      return clause.value - axis.vmin;
    case ClauseKind::AtLeast:
      return axis.vmax - clause.value;
    case ClauseKind::Range:
      return clause.hi - clause.lo + Rat(1);
    default:
      throw std::invalid_argument("length not applicable to this clause kind");
  }
}

}  // namespace

Rat operation_length(const Operation& op, const Boundary& boundary) {
  Rat total(0);
  for (const auto& clause : op.condition.clauses) total += clause_length(clause, boundary);
  return total;
}

Rat diff_total_length(const Diff& diff, const Boundary& boundary) {
  Rat total(0);
  for (const auto& op : diff.ops) total += operation_length(op, boundary);
  return total;
}

}  // namespace datadiff
