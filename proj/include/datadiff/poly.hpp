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

#ifndef DATADIFF_POLY_HPP
#define DATADIFF_POLY_HPP

#include "datadiff/instance.hpp"

namespace datadiff {

// Exact polynomial solvers for the tractable one-read-attribute cells.
// Conditions go on the single read attribute; every returned diff satisfies
// apply_diff(source) == target and uses thresholds/endpoints drawn from the
// observed attribute values.

// Equality conditions, any modifier type. One operation per changed group.
SolveOutcome solve_eq(const ProblemInstance& inst);

// At-most conditions. Outputs are in strictly decreasing threshold order.
SolveOutcome solve_leq_assign(const ProblemInstance& inst);
SolveOutcome solve_leq_increment(const ProblemInstance& inst);
SolveOutcome solve_leq_assign_increment(const ProblemInstance& inst);
SolveOutcome solve_leq_affine(const ProblemInstance& inst);

// At-most/at-least with assignment: best breakpoint between a <= side and a
// mirrored >= side; the two sides never overlap.
SolveOutcome solve_leqgeq_assign(const ProblemInstance& inst);

// Range with assignment: interval dynamic programming; emitted ranges are
// pairwise nested or disjoint, outermost first.
SolveOutcome solve_range_assign(const ProblemInstance& inst);

// Additive-1 approximation for at-most/at-least with increments: solve the
// at-most-only instance exactly; its cost is at most optimal + 1.
SolveOutcome approx_leqgeq_increment(const ProblemInstance& inst);

// Multiplicative-2 approximation for range with increments: solve the
// at-most-only instance exactly and re-express thresholds as ranges
// [vmin, a]; cost is at most twice optimal.
SolveOutcome approx_range_increment(const ProblemInstance& inst);

// True when (family, number of read attributes, no read-write) is a cell the
// exact polynomial solvers cover.
bool poly_exact_cell(const FamilySpec& family, size_t num_read_attrs, bool read_write);

// Dispatch to the matching exact solver; requires poly_exact_cell.
SolveOutcome solve_exact_poly(const ProblemInstance& inst);

}  // namespace datadiff

#endif  // DATADIFF_POLY_HPP
