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

#ifndef DATADIFF_REDUCTIONS_HPP
#define DATADIFF_REDUCTIONS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "datadiff/instance.hpp"

namespace datadiff {

struct SubsetSumInstance {
  std::vector<long long> elements;  // positive
  long long target = 0;             // positive
};

// Strings of exactly two symbols; symbols are positive integers. The distinct
// variant additionally requires the two symbols of each string to differ.
struct Scs2Instance {
  std::vector<std::array<long long, 2>> strings;
  long long max_length = 0;  // the decision threshold t
  bool distinct = false;
};

// Orthogonal polygon, vertices in order (closed implicitly), rank-space
// coordinates in [l].
struct RectCoverInstance {
  std::vector<std::pair<long long, long long>> vertices;
  long long cover_size = 0;  // the decision threshold t
};

struct ReducedInstance {
  ProblemInstance instance;
  long long threshold = 0;  // expected cost (or cost bound) in the decision predicate
  std::string predicate;    // human-readable statement of the equivalence
};

// Rows k = 0..n with A = k, B 0 -> prefix sums of (-t, s1, ..., sn); family
// at-most/at-least with increments. Positive instance iff best cost == n.
ReducedInstance reduce_subsetsum_to_leqgeq_increment(const SubsetSumInstance& ss);

// Same layout with a block of `block_size` identical rows per element; family
// at-most/at-least with affine modifiers. Positive iff best cost == n.
ReducedInstance reduce_subsetsum_to_affine_blocks(const SubsetSumInstance& ss,
                                                  long long block_size = 99);

// Splits each doubled string cc into fresh symbols c1 c2; preserves the
// shortest-common-supersequence length.
Scs2Instance reduce_2scs_to_2distinct(const Scs2Instance& s2);

// The 5n+2-row barrier/partition construction with kappa0 = 1,
// kappa1 = t + 99; supersequence of length <= t exists iff best cost
// <= t + 2n(t+99).
ReducedInstance reduce_2distinctscs_to_union_assign(const Scs2Instance& s2);

// Attribute-split reductions of a one-attribute range/increment instance;
// both preserve the best-diff cost.
ReducedInstance reduce_bd1_range_to_multi_eq(const ProblemInstance& inst);
ReducedInstance reduce_bd1_range_to_multi_atmost(const ProblemInstance& inst);

// Grid cells with `cell_multiplicity` rows each; inside cells flip to 0.
// Cover of size t exists iff a diff of cost t does.
ReducedInstance reduce_rectcover_to_multi_range_assign(const RectCoverInstance& rc,
                                                       long long cell_multiplicity = 99);

// Desk-scale decision oracles; they refuse (throw) beyond their size caps.
bool solve_subsetsum_bruteforce(const SubsetSumInstance& ss);        // n <= 12
long long solve_scs2_bruteforce(const Scs2Instance& s2);             // alphabet <= 6, n <= 4
long long solve_rectcover_bruteforce(const RectCoverInstance& rc);   // grid <= 4x4 cells

}  // namespace datadiff

#endif  // DATADIFF_REDUCTIONS_HPP
