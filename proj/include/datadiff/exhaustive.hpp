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

#ifndef DATADIFF_EXHAUSTIVE_HPP
#define DATADIFF_EXHAUSTIVE_HPP

#include <vector>

#include "datadiff/instance.hpp"

namespace datadiff {

struct SearchBudget {
  // Maximum operations per diff; -1 derives a cap from the constructive upper
  // bound (falling back to row count + 1).
  long long depth_cap = -1;
  long long node_cap = 10'000'000;
};

// The finite condition set with endpoints at observed attribute values that
// suffices for optimal search. Deduplicated by matched row set; conditions
// matching no row are dropped. Multi-attribute instances enumerate
// per-attribute clause choices.
std::vector<Condition> canonical_conditions(const ProblemInstance& inst);

// Exact search for increment modifiers under any condition type: operations
// commute, so for growing sizes m it enumerates condition subsets and solves
// the per-group linear system for the deltas in exact rationals.
SolveOutcome solve_increment_commutative(const ProblemInstance& inst,
                                         const SearchBudget& budget = {});

// Iterative-deepening search over ordered operation sequences for assign,
// assign/increment, and affine modifiers (any condition type, multi-attribute
// conjunctions, best-effort read-write). Returns Infeasible only when the
// necessary group predicate fails; when the search space is exhausted without
// a solution it returns Bound with lower == upper == cap + 1 and no diff
// (meaning: no diff of cost at most cap exists); when the node budget runs
// out it returns Bound with the best-known bounds.
SolveOutcome solve_sequential_search(const ProblemInstance& inst,
                                     const SearchBudget& budget = {});

// Count of adjacent sorted groups whose required shifts differ (at least 1
// when any shift is nonzero); a lower bound on increment-family diff length.
long long lower_bound_gap(const ProblemInstance& inst);

// Number of ascents in the required-shift profile over ascending groups; a
// lower bound for range/increment diffs.
long long lower_bound_jump(const ProblemInstance& inst);

// One operation per changed group through the family's tightest condition
// (equality point, point range, or the telescoping threshold construction for
// increment-class modifiers). Returns BestDiff with the constructed diff,
// Infeasible when the group predicate fails, or Bound(0, 0, none) when the
// family admits no generic construction (mixed at-most/assign cases).
SolveOutcome constructive_upper_bound(const ProblemInstance& inst);

// Dispatch: increment modifiers to the commutative solver, everything else to
// the sequential search.
SolveOutcome solve_exhaustive(const ProblemInstance& inst, const SearchBudget& budget = {});

}  // namespace datadiff

#endif  // DATADIFF_EXHAUSTIVE_HPP
