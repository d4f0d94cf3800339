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

#ifndef DATADIFF_INSTANCE_HPP
#define DATADIFF_INSTANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "datadiff/boundary.hpp"
#include "datadiff/operation.hpp"
#include "datadiff/relation.hpp"

namespace datadiff {

enum class AttributeRole { ReadOnly, WriteOnly, ReadWrite, Inaccessible };

// One solve request: key attribute, read set, single write attribute, the two
// snapshots, and the operation family.
struct ProblemInstance {
  std::string key_attr;
  std::vector<std::string> read_attrs;
  std::string write_attr;
  Relation source;
  Relation target;
  FamilySpec family;

  bool read_write() const;  // write attribute also appears in the read set
  AttributeRole role(const std::string& attr) const;
};

struct SimilarityReport {
  bool ok = true;
  std::string detail;  // names the first failing key/attribute
};

// Schemas must equal {key} ∪ reads ∪ {write}, key sets must be identical, and
// read-only attributes must agree per key across the snapshots.
SimilarityReport check_similarity(const std::string& key_attr,
                                  const std::vector<std::string>& read_attrs,
                                  const std::string& write_attr,
                                  const Relation& source, const Relation& target);

Boundary compute_boundary(const ProblemInstance& inst);

struct SolveOutcome {
  enum class Kind { BestDiff, Infeasible, Bound };
  Kind kind = Kind::Infeasible;
  Diff diff;            // BestDiff always; Bound when has_diff
  long long cost = 0;   // BestDiff; for Bound: cost of the best found diff
  bool has_diff = false;
  std::string witness;  // Infeasible
  long long lower = 0;  // Bound
  long long upper = 0;  // Bound

  static SolveOutcome best(Diff d, long long cost);
  static SolveOutcome infeasible(std::string witness);
  static SolveOutcome bound(long long lower, long long upper, std::optional<Diff> best_found,
                            long long best_cost);
};

// All rows sharing one read-attribute vector, with the per-group composed-map
// candidates each modifier family could use.
struct AffineFit {
  enum class Kind { Empty, Line, Point };
  Kind kind = Kind::Empty;
  // Line: every (slope, t) with slope*b0 + t == c0.
  Rat b0, c0;
  // Point: the unique (slope, intercept).
  Rat slope, intercept;

  bool const_fittable() const;            // contains a slope-0 map
  std::optional<Rat> const_value() const; // intercept of the slope-0 map, if any
  bool nonzero_slope_available() const;
};

struct GroupSummary {
  std::vector<Rat> read_values;            // group key, ascending order overall
  std::vector<long long> keys;             // row keys in the group, ascending
  std::vector<std::pair<Rat, Rat>> pairs;  // (b_source, b_target) per row
  bool unchanged = false;
  std::optional<Rat> const_target;  // all targets equal
  std::optional<Rat> shift_delta;   // all (target - source) equal
  AffineFit affine;
};

// Groups rows by their full read-attribute vector, ascending.
std::vector<GroupSummary> group_rows(const ProblemInstance& inst);

struct ConsistencyReport {
  bool ok = true;
  std::string witness;
};

// Necessary condition for any diff to exist: every group must admit one
// composed map in the family's closure class (Assign: identity or constant;
// Increment: common shift; AssignIncrement: either; Affine: one affine map).
ConsistencyReport group_consistency_check(const ProblemInstance& inst);

}  // namespace datadiff

#endif  // DATADIFF_INSTANCE_HPP
