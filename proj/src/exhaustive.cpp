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

#include "datadiff/exhaustive.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "datadiff/semantics.hpp"

namespace datadiff {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// ---------------------------------------------------------------------------
// Row table: rows in key order, write cells split out for fast state copies.

struct RowTable {
  std::vector<long long> keys;
  std::vector<Rat> source_write;
  std::vector<Rat> target_write;
  std::vector<std::vector<Rat>> read_cells;  // per row, in read-attr order
  std::vector<std::vector<int>> groups;      // row indices per read vector, ascending
  std::vector<int> group_of;                 // row -> group index
};

RowTable build_rows(const ProblemInstance& inst) {
  RowTable t;
  std::vector<int> read_idx;
  for (const auto& a : inst.read_attrs) {
    int idx = inst.source.attr_index(a);
    if (idx < 0) throw std::invalid_argument("read attribute not in schema: " + a);
    read_idx.push_back(idx);
  }
  int ws = inst.source.attr_index(inst.write_attr);
  int wt = inst.target.attr_index(inst.write_attr);
  if (ws < 0 || wt < 0) throw std::invalid_argument("write attribute not in schema");

  std::map<std::vector<Rat>, std::vector<int>> by_read;
  for (const auto& [key, cells] : inst.source.rows) {
    int r = static_cast<int>(t.keys.size());
    t.keys.push_back(key);
    t.source_write.push_back(cells[ws]);
    t.target_write.push_back(inst.target.rows.at(key)[wt]);
    std::vector<Rat> rv;
    for (int idx : read_idx) rv.push_back(cells[idx]);
    by_read[rv].push_back(r);
    t.read_cells.push_back(std::move(rv));
  }
  t.group_of.assign(t.keys.size(), -1);
  for (auto& [rv, rows] : by_read) {
    for (int r : rows) t.group_of[r] = static_cast<int>(t.groups.size());
    t.groups.push_back(rows);
  }
  return t;
}

uint64_t condition_mask(const Condition& cond, const RowTable& t,
                        const std::vector<std::string>& read_attrs) {
  uint64_t mask = 0;
  for (size_t r = 0; r < t.keys.size(); ++r) {
    bool ok = true;
    for (const auto& clause : cond.clauses) {
      size_t ai = std::find(read_attrs.begin(), read_attrs.end(), clause.attr) - read_attrs.begin();
      if (!clause.matches(t.read_cells[r][ai])) {
        ok = false;
        break;
      }
    }
    if (ok) mask |= uint64_t{1} << r;
  }
  return mask;
}

// ---------------------------------------------------------------------------
// Canonical conditions.

std::vector<Clause> bd1_clauses(const std::string& attr, const std::vector<Rat>& values,
                                ConditionType type) {
  std::vector<Clause> out;
  switch (type) {
    case ConditionType::Eq:
      for (const auto& v : values) out.push_back(Clause::eq(attr, v));
      break;
    case ConditionType::AtMost:
      for (const auto& v : values) out.push_back(Clause::at_most(attr, v));
      break;
    case ConditionType::AtMostAtLeast:
      for (const auto& v : values) out.push_back(Clause::at_most(attr, v));
      for (const auto& v : values) out.push_back(Clause::at_least(attr, v));
      break;
    case ConditionType::Range:
      for (size_t i = 0; i < values.size(); ++i) {
        for (size_t j = i; j < values.size(); ++j) {
          out.push_back(Clause::range(attr, values[i], values[j]));
        }
      }
      break;
    case ConditionType::RangeUnion: {
      size_t k = values.size();
      if (k > 16) throw std::invalid_argument("union enumeration limited to 16 distinct values");
      for (uint32_t mask = 1; mask < (uint32_t{1} << k); ++mask) {
        std::vector<Interval> intervals;
        for (size_t i = 0; i < k; ++i) {
          if (!(mask & (uint32_t{1} << i))) continue;
          size_t j = i;
          while (j + 1 < k && (mask & (uint32_t{1} << (j + 1)))) ++j;
          intervals.push_back({values[i], values[j]});
          i = j;
        }
        out.push_back(Clause::range_union(attr, std::move(intervals)));
      }
      break;
    }
  }
  return out;
}

struct CanonicalSet {
  std::vector<Condition> conds;
  std::vector<uint64_t> masks;  // empty when the instance is read-write
};

CanonicalSet canonical_set(const ProblemInstance& inst) {
  Boundary boundary = compute_boundary(inst);
  CanonicalSet out;

  if (inst.read_write()) {
    // Matched sets depend on the evolving state; enumerate thresholds from the
    // observed values of both snapshots and leave matching to the search.
    if (inst.read_attrs.size() != 1) {
      throw std::invalid_argument("read-write search supports a single read attribute");
    }
    const std::string& attr = inst.read_attrs[0];
    for (auto& clause : bd1_clauses(attr, boundary.axes.at(attr).values, inst.family.condition_type)) {
      out.conds.push_back(Condition{{clause}});
    }
    return out;
  }

  RowTable t = build_rows(inst);
  if (t.keys.size() > 64) throw std::invalid_argument("canonical search limited to 64 rows");
  uint64_t all = t.keys.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << t.keys.size()) - 1;

  // Enumerate per-attribute clause choices (an attribute may be left out, but
  // at least one clause is required), folding attributes left to right and
  // deduplicating by matched row set at each stage.
  struct Partial {
    Condition cond;
    uint64_t mask;
  };
  std::vector<Partial> acc{{Condition{}, all}};
  for (const auto& attr : inst.read_attrs) {
    std::vector<Clause> clauses =
        bd1_clauses(attr, boundary.axes.at(attr).values, inst.family.condition_type);
    std::vector<std::pair<Clause, uint64_t>> with_masks;
    for (auto& cl : clauses) {
      Condition single{{cl}};
      with_masks.emplace_back(cl, condition_mask(single, t, inst.read_attrs));
    }
    std::vector<Partial> next;
    // Deduplicate by matched set, keeping the clauseless partial distinct so
    // an all-matching clause is not collapsed into it.
    std::set<std::pair<uint64_t, bool>> seen;
    auto push = [&](Partial p) {
      if (p.mask == 0 && !p.cond.clauses.empty()) return;
      if (!seen.insert({p.mask, p.cond.clauses.empty()}).second) return;
      next.push_back(std::move(p));
    };
    for (const auto& p : acc) {
      push(p);
      for (const auto& [cl, cmask] : with_masks) {
        Partial q;
        q.cond = p.cond;
        q.cond.clauses.push_back(cl);
        q.mask = p.mask & cmask;
        push(std::move(q));
      }
      if (next.size() > 200000) throw std::invalid_argument("canonical condition set too large");
    }
    acc = std::move(next);
  }

  std::set<uint64_t> seen;
  for (auto& p : acc) {
    if (p.cond.clauses.empty() || p.mask == 0) continue;
    if (!seen.insert(p.mask).second) continue;
    out.conds.push_back(std::move(p.cond));
    out.masks.push_back(p.mask);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact rational linear systems (Gauss-Jordan, free variables pinned to 0).

std::optional<std::vector<Rat>> solve_rational_system(std::vector<std::vector<Rat>> aug,
                                                      size_t vars) {
  size_t rows = aug.size();
  std::vector<int> pivot_of_col(vars, -1);
  size_t row = 0;
  for (size_t col = 0; col < vars && row < rows; ++col) {
    size_t pr = row;
    while (pr < rows && aug[pr][col] == Rat(0)) ++pr;
    if (pr == rows) continue;
    std::swap(aug[row], aug[pr]);
    Rat inv = Rat(1) / aug[row][col];
    for (size_t c = col; c <= vars; ++c) aug[row][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || aug[r][col] == Rat(0)) continue;
      Rat f = aug[r][col];
      for (size_t c = col; c <= vars; ++c) aug[r][c] -= f * aug[row][c];
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  for (size_t r = row; r < rows; ++r) {
    if (aug[r][vars] != Rat(0)) return std::nullopt;
  }
  std::vector<Rat> x(vars, Rat(0));
  for (size_t col = 0; col < vars; ++col) {
    if (pivot_of_col[col] >= 0) x[col] = aug[pivot_of_col[col]][vars];
  }
  return x;
}

// ---------------------------------------------------------------------------
// Shift profile helpers (ascending groups of a one-attribute instance).

std::vector<Rat> shift_profile(const ProblemInstance& inst) {
  if (inst.read_attrs.size() != 1 || inst.read_write()) {
    throw std::logic_error("shift profile requires one read-only attribute");
  }
  std::vector<Rat> deltas;
  for (const auto& g : group_rows(inst)) {
    if (!g.shift_delta) {
      throw std::logic_error("shift profile requires group-consistent increments");
    }
    deltas.push_back(*g.shift_delta);
  }
  return deltas;
}

}  // namespace

std::vector<Condition> canonical_conditions(const ProblemInstance& inst) {
  return canonical_set(inst).conds;
}

long long lower_bound_gap(const ProblemInstance& inst) {
  std::vector<Rat> deltas = shift_profile(inst);
  long long changes = 0;
  bool any_nonzero = false;
  for (size_t i = 0; i < deltas.size(); ++i) {
    if (deltas[i] != Rat(0)) any_nonzero = true;
    if (i + 1 < deltas.size() && deltas[i] != deltas[i + 1]) ++changes;
  }
  return std::max(changes, any_nonzero ? 1LL : 0LL);
}

long long lower_bound_jump(const ProblemInstance& inst) {
  std::vector<Rat> deltas = shift_profile(inst);
  long long ascents = 0;
  for (size_t i = 0; i + 1 < deltas.size(); ++i) {
    if (deltas[i] < deltas[i + 1]) ++ascents;
  }
  return ascents;
}

SolveOutcome constructive_upper_bound(const ProblemInstance& inst) {
  ConsistencyReport consistent = group_consistency_check(inst);
  if (!consistent.ok) return SolveOutcome::infeasible(consistent.witness);
  auto groups = group_rows(inst);

  bool any_change = false;
  for (const auto& g : groups) any_change = any_change || !g.unchanged;
  if (!any_change) return SolveOutcome::best(Diff{}, 0);

  auto modifier_for = [&](const GroupSummary& g) -> Modifier {
    switch (inst.family.modifier_type) {
      case ModifierType::Assign:
        return Modifier::assign(inst.write_attr, *g.const_target);
      case ModifierType::Increment:
        return Modifier::increment(inst.write_attr, *g.shift_delta);
      case ModifierType::AssignIncrement:
        if (g.const_target) return Modifier::assign(inst.write_attr, *g.const_target);
        return Modifier::increment(inst.write_attr, *g.shift_delta);
      case ModifierType::Affine:
        if (auto w = g.affine.const_value()) return Modifier::affine(inst.write_attr, Rat(0), *w);
        if (g.shift_delta) return Modifier::affine(inst.write_attr, Rat(1), *g.shift_delta);
        return Modifier::affine(inst.write_attr, g.affine.slope, g.affine.intercept);
    }
    throw std::logic_error("unreachable");
  };

  Diff diff;
  switch (inst.family.condition_type) {
    case ConditionType::Eq: {
      // Equality conjunction over the full read vector isolates the group.
      for (const auto& g : groups) {
        if (g.unchanged) continue;
        Condition cond;
        for (size_t i = 0; i < inst.read_attrs.size(); ++i) {
          cond.clauses.push_back(Clause::eq(inst.read_attrs[i], g.read_values[i]));
        }
        diff.ops.push_back(Operation{cond, modifier_for(g)});
      }
      break;
    }
    case ConditionType::Range:
    case ConditionType::RangeUnion: {
      if (inst.read_attrs.size() != 1) return SolveOutcome::bound(0, 0, std::nullopt, 0);
      const std::string& attr = inst.read_attrs[0];
      for (const auto& g : groups) {
        if (g.unchanged) continue;
        const Rat& a = g.read_values[0];
        Clause cl = inst.family.condition_type == ConditionType::Range
                        ? Clause::range(attr, a, a)
                        : Clause::range_union(attr, {Interval{a, a}});
        diff.ops.push_back(Operation{Condition{{cl}}, modifier_for(g)});
      }
      break;
    }
    case ConditionType::AtMost:
    case ConditionType::AtMostAtLeast: {
      if (inst.read_attrs.size() != 1) return SolveOutcome::bound(0, 0, std::nullopt, 0);
      const std::string& attr = inst.read_attrs[0];

      bool all_shift = true;
      for (const auto& g : groups) all_shift = all_shift && g.shift_delta.has_value();
      if (all_shift && inst.family.modifier_type != ModifierType::Assign) {
        // Telescoping threshold construction: one op per group boundary where
        // the required shift changes.
        for (size_t i = groups.size(); i-- > 0;) {
          Rat next = (i + 1 < groups.size()) ? *groups[i + 1].shift_delta : Rat(0);
          Rat x = *groups[i].shift_delta - next;
          if (x == Rat(0)) continue;
          Condition cond{{Clause::at_most(attr, groups[i].read_values[0])}};
          Modifier mod = inst.family.modifier_type == ModifierType::Affine
                             ? Modifier::affine(inst.write_attr, Rat(1), x)
                             : Modifier::increment(inst.write_attr, x);
          diff.ops.push_back(Operation{cond, mod});
        }
        break;
      }

      // Descending assign ladder; each group's last writer sets its constant.
      int last_changed = -1;
      for (size_t i = 0; i < groups.size(); ++i) {
        if (!groups[i].unchanged) last_changed = static_cast<int>(i);
      }
      bool ladder_ok = true;
      for (int i = 0; i <= last_changed; ++i) ladder_ok = ladder_ok && groups[i].const_target;
      if (ladder_ok && inst.family.modifier_type != ModifierType::Increment) {
        for (int i = last_changed; i >= 0; --i) {
          Condition cond{{Clause::at_most(attr, groups[i].read_values[0])}};
          Rat w = *groups[i].const_target;
          Modifier mod = inst.family.modifier_type == ModifierType::Affine
                             ? Modifier::affine(inst.write_attr, Rat(0), w)
                             : Modifier::assign(inst.write_attr, w);
          diff.ops.push_back(Operation{cond, mod});
        }
        break;
      }
      if (inst.family.condition_type == ConditionType::AtMostAtLeast) {
        // Mirrored ascending ladder.
        int first_changed = -1;
        for (size_t i = groups.size(); i-- > 0;) {
          if (!groups[i].unchanged) first_changed = static_cast<int>(i);
        }
        bool mirror_ok = first_changed >= 0;
        for (size_t i = first_changed; i < groups.size(); ++i) {
          mirror_ok = mirror_ok && groups[i].const_target;
        }
        if (mirror_ok && inst.family.modifier_type != ModifierType::Increment) {
          for (size_t i = first_changed; i < groups.size(); ++i) {
            Condition cond{{Clause::at_least(attr, groups[i].read_values[0])}};
            Rat w = *groups[i].const_target;
            Modifier mod = inst.family.modifier_type == ModifierType::Affine
                               ? Modifier::affine(inst.write_attr, Rat(0), w)
                               : Modifier::assign(inst.write_attr, w);
            diff.ops.push_back(Operation{cond, mod});
          }
          break;
        }
      }
      return SolveOutcome::bound(0, 0, std::nullopt, 0);  // no generic construction
    }
  }
  long long cost = diff_cost(diff, inst.family);
  return SolveOutcome::best(std::move(diff), cost);
}

SolveOutcome solve_increment_commutative(const ProblemInstance& inst, const SearchBudget& budget) {
  if (inst.family.modifier_type != ModifierType::Increment) {
    throw std::logic_error("commutative solver requires increment modifiers");
  }
  ConsistencyReport consistent = group_consistency_check(inst);
  if (!consistent.ok) return SolveOutcome::infeasible(consistent.witness);

  auto groups = group_rows(inst);
  std::vector<Rat> deltas;
  bool any_change = false;
  for (const auto& g : groups) {
    deltas.push_back(*g.shift_delta);
    any_change = any_change || *g.shift_delta != Rat(0);
  }
  if (!any_change) return SolveOutcome::best(Diff{}, 0);

  CanonicalSet canon = canonical_set(inst);
  RowTable table = build_rows(inst);
  size_t num_groups = groups.size();
  size_t K = canon.conds.size();

  // covers[c] bit g set when condition c matches group g (conditions read the
  // full grouping vector, so they match groups wholly or not at all).
  std::vector<uint64_t> covers(K, 0);
  for (size_t c = 0; c < K; ++c) {
    for (size_t g = 0; g < num_groups; ++g) {
      uint64_t gmask = 0;
      for (int r : table.groups[g]) gmask |= uint64_t{1} << r;
      if ((canon.masks[c] & gmask) == gmask) covers[c] |= uint64_t{1} << g;
    }
  }

  long long m0 = 1;
  if (inst.read_attrs.size() == 1 && !inst.read_write()) {
    switch (inst.family.condition_type) {
      case ConditionType::AtMost:
      case ConditionType::AtMostAtLeast:
        m0 = std::max(m0, lower_bound_gap(inst));
        break;
      case ConditionType::Range:
        m0 = std::max(m0, lower_bound_jump(inst));
        break;
      default:
        break;
    }
  }
  // Any solvable condition multiset restricts to a column basis, so some
  // optimal solution uses at most one condition per group.
  long long cap = budget.depth_cap >= 0 ? budget.depth_cap : static_cast<long long>(num_groups);
  long long per_op_floor =
      inst.family.condition_type == ConditionType::RangeUnion
          ? inst.family.kappa0 + inst.family.kappa1
          : 1;

  SolveOutcome upper = constructive_upper_bound(inst);
  std::optional<Diff> best;
  long long best_cost = kInf;
  long long nodes = 0;
  for (long long m = m0; m <= cap; ++m) {
    if (best && m * per_op_floor >= best_cost) break;
    if (m > static_cast<long long>(K)) break;
    // Lexicographic combinations of condition indices.
    std::vector<size_t> idx(m);
    for (long long i = 0; i < m; ++i) idx[i] = i;
    while (true) {
      if (++nodes > budget.node_cap) {
        if (best) return SolveOutcome::best(std::move(*best), best_cost);
        std::optional<Diff> found;
        long long found_cost = 0;
        if (upper.kind == SolveOutcome::Kind::BestDiff) {
          found = upper.diff;
          found_cost = upper.cost;
        }
        long long lower = m * per_op_floor;
        return SolveOutcome::bound(lower, found ? found_cost : lower, found, found_cost);
      }
      std::vector<std::vector<Rat>> aug(num_groups, std::vector<Rat>(m + 1, Rat(0)));
      for (size_t g = 0; g < num_groups; ++g) {
        for (long long j = 0; j < m; ++j) {
          if (covers[idx[j]] & (uint64_t{1} << g)) aug[g][j] = Rat(1);
        }
        aug[g][m] = deltas[g];
      }
      if (auto sol = solve_rational_system(std::move(aug), m)) {
        bool proper = true;
        for (const auto& d : *sol) proper = proper && d != Rat(0);
        if (proper) {
          Diff diff;
          for (long long j = 0; j < m; ++j) {
            diff.ops.push_back(Operation{canon.conds[idx[j]],
                                         Modifier::increment(inst.write_attr, (*sol)[j])});
          }
          long long cost = diff_cost(diff, inst.family);
          if (cost < best_cost) {
            best_cost = cost;
            best = std::move(diff);
          }
          // Outside union pricing every size-m diff costs m; the first hit
          // at this level is already minimal.
          if (inst.family.condition_type != ConditionType::RangeUnion) break;
        }
      }
      // next combination
      long long i = m - 1;
      while (i >= 0 && idx[i] == K - m + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (long long j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (best && inst.family.condition_type != ConditionType::RangeUnion) break;
  }
  if (best) return SolveOutcome::best(std::move(*best), best_cost);
  if (budget.depth_cap >= 0) {
    long long lo = (cap + 1) * per_op_floor;
    return SolveOutcome::bound(lo, lo, std::nullopt, 0);
  }
  // Complete sweep: any solvable condition multiset restricts to a column
  // basis of at most one condition per group, so no diff exists at all.
  return SolveOutcome::infeasible(
      "no delta assignment over the canonical condition set transforms source into target");
}

// ---------------------------------------------------------------------------
// Sequential search.

namespace {

struct SeqContext {
  const ProblemInstance* inst;
  RowTable table;
  std::vector<Condition> conds;
  std::vector<uint64_t> masks;  // empty in read-write mode
  std::vector<long long> op_costs;
  bool read_write = false;
  bool union_family = false;
  std::vector<Rat> target;
  std::vector<Rat> assign_values;  // read-write candidate constants
  // Zone split for the union heuristic: zone id per row in A-order, -1 for
  // rows of untouchable groups.
  std::vector<int> row_zone;

  long long node_cap = 0;
  long long nodes = 0;
  bool aborted = false;
  long long length_cap = 0;
  long long cost_cap = kInf;
  // True when exhausting the search space proves no diff exists: the length
  // cap is provably sufficient for the family (last-writer bound for assigns,
  // the decreasing-threshold normal form for at-most/equality sequences).
  bool exhaustion_definitive = false;

  std::map<std::vector<Rat>, long long> visited;
  std::vector<Operation> path;
  long long next_limit = kInf;
};

bool state_dead(const SeqContext& ctx, const std::vector<Rat>& state) {
  if (ctx.read_write) return false;
  for (const auto& rows : ctx.table.groups) {
    bool correct = true;
    bool targets_uniform = true;
    bool deficits_uniform = true;
    for (size_t i = 0; i < rows.size(); ++i) {
      int r = rows[i];
      if (state[r] != ctx.target[r]) correct = false;
      if (ctx.target[r] != ctx.target[rows[0]]) targets_uniform = false;
      if (ctx.target[r] - state[r] != ctx.target[rows[0]] - state[rows[0]]) {
        deficits_uniform = false;
      }
    }
    switch (ctx.inst->family.modifier_type) {
      case ModifierType::Assign:
        if (!correct && !targets_uniform) return true;
        break;
      case ModifierType::AssignIncrement:
        if (!deficits_uniform && !targets_uniform) return true;
        break;
      case ModifierType::Affine: {
        AffineFit fit;
        bool first = true;
        for (int r : rows) {
          if (first) {
            fit.kind = AffineFit::Kind::Line;
            fit.b0 = state[r];
            fit.c0 = ctx.target[r];
            first = false;
            continue;
          }
          if (fit.kind == AffineFit::Kind::Line) {
            if (state[r] == fit.b0) {
              if (ctx.target[r] != fit.c0) fit.kind = AffineFit::Kind::Empty;
            } else {
              fit.slope = (ctx.target[r] - fit.c0) / (state[r] - fit.b0);
              fit.intercept = fit.c0 - fit.slope * fit.b0;
              fit.kind = AffineFit::Kind::Point;
            }
          } else if (fit.kind == AffineFit::Kind::Point) {
            if (fit.slope * state[r] + fit.intercept != ctx.target[r]) {
              fit.kind = AffineFit::Kind::Empty;
            }
          }
          if (fit.kind == AffineFit::Kind::Empty) return true;
        }
        break;
      }
      case ModifierType::Increment:
        if (!deficits_uniform) return true;
        break;
    }
  }
  return false;
}

long long heuristic(const SeqContext& ctx, const std::vector<Rat>& state) {
  bool any_wrong = false;
  for (size_t r = 0; r < state.size(); ++r) {
    if (state[r] != ctx.target[r]) {
      any_wrong = true;
      break;
    }
  }
  if (!any_wrong) return 0;
  const FamilySpec& fam = ctx.inst->family;
  if (ctx.union_family) {
    if (ctx.row_zone.empty()) return fam.kappa0 + fam.kappa1;
    // Every zone (wrong rows fenced in by untouchable groups) needs one range
    // per distinct target value among its wrong rows.
    std::map<int, std::set<Rat>> zone_targets;
    for (size_t r = 0; r < state.size(); ++r) {
      if (state[r] == ctx.target[r]) continue;
      if (ctx.row_zone[r] < 0) continue;
      zone_targets[ctx.row_zone[r]].insert(ctx.target[r]);
    }
    long long ranges = 0;
    for (const auto& [zone, targets] : zone_targets) ranges += static_cast<long long>(targets.size());
    return fam.kappa0 + fam.kappa1 * std::max(ranges, 1LL);
  }
  if (fam.modifier_type == ModifierType::Assign && !ctx.read_write) {
    std::set<Rat> values;
    for (size_t r = 0; r < state.size(); ++r) {
      if (state[r] != ctx.target[r]) values.insert(ctx.target[r]);
    }
    return static_cast<long long>(values.size());
  }
  return 1;
}

// Candidate modifiers for one condition against the current state.
std::vector<Modifier> candidate_modifiers(const SeqContext& ctx, const std::vector<Rat>& state,
                                          const std::vector<int>& covered) {
  const std::string& wattr = ctx.inst->write_attr;
  std::vector<Modifier> out;
  switch (ctx.inst->family.modifier_type) {
    case ModifierType::Assign: {
      std::set<Rat> values;
      if (ctx.read_write) {
        for (const auto& v : ctx.assign_values) values.insert(v);
      } else {
        // Some covered row's target; anything else is nobody's last write.
        for (int r : covered) values.insert(ctx.target[r]);
      }
      for (const auto& v : values) out.push_back(Modifier::assign(wattr, v));
      break;
    }
    case ModifierType::AssignIncrement: {
      std::set<Rat> values;
      std::set<Rat> deltas;
      if (ctx.read_write) {
        for (const auto& v : ctx.assign_values) values.insert(v);
      }
      for (int r : covered) {
        if (!ctx.read_write) values.insert(ctx.target[r]);
        Rat d = ctx.target[r] - state[r];
        if (d != Rat(0)) deltas.insert(d);
      }
      for (const auto& v : values) out.push_back(Modifier::assign(wattr, v));
      for (const auto& d : deltas) out.push_back(Modifier::increment(wattr, d));
      break;
    }
    case ModifierType::Affine: {
      std::set<std::pair<Rat, Rat>> maps;
      for (int r : covered) {
        maps.insert({Rat(0), ctx.target[r]});
        Rat d = ctx.target[r] - state[r];
        if (d != Rat(0)) maps.insert({Rat(1), d});
      }
      for (size_t i = 0; i < covered.size(); ++i) {
        for (size_t j = i + 1; j < covered.size(); ++j) {
          int r1 = covered[i], r2 = covered[j];
          if (state[r1] == state[r2]) continue;
          Rat s = (ctx.target[r1] - ctx.target[r2]) / (state[r1] - state[r2]);
          Rat t = ctx.target[r1] - s * state[r1];
          maps.insert({s, t});
        }
      }
      maps.erase({Rat(1), Rat(0)});
      for (const auto& [s, t] : maps) out.push_back(Modifier::affine(wattr, s, t));
      break;
    }
    case ModifierType::Increment:
      throw std::logic_error("increment families use the commutative solver");
  }
  return out;
}

bool seq_dfs(SeqContext& ctx, std::vector<Rat>& state, long long g, long long limit) {
  if (++ctx.nodes > ctx.node_cap) {
    ctx.aborted = true;
    return false;
  }
  if (state == ctx.target) {
    // Union operation costs can overshoot the heuristic, so a goal reached
    // above the limit waits for a later iteration to stay optimal.
    if (g <= limit) return true;
    ctx.next_limit = std::min(ctx.next_limit, g);
    return false;
  }
  long long f = g + heuristic(ctx, state);
  if (f > limit) {
    ctx.next_limit = std::min(ctx.next_limit, f);
    return false;
  }
  if (static_cast<long long>(ctx.path.size()) >= ctx.length_cap) return false;
  auto it = ctx.visited.find(state);
  if (it != ctx.visited.end() && it->second <= g) return false;
  ctx.visited[state] = g;

  std::vector<int> covered;
  for (size_t c = 0; c < ctx.conds.size(); ++c) {
    covered.clear();
    if (ctx.read_write) {
      for (size_t r = 0; r < state.size(); ++r) {
        if (ctx.conds[c].clauses[0].matches(state[r])) covered.push_back(static_cast<int>(r));
      }
    } else {
      uint64_t m = ctx.masks[c];
      if (ctx.inst->family.modifier_type == ModifierType::Assign) {
        // An operation matching no currently-wrong row is removable.
        bool touches_wrong = false;
        for (size_t r = 0; r < state.size() && !touches_wrong; ++r) {
          touches_wrong = (m & (uint64_t{1} << r)) && state[r] != ctx.target[r];
        }
        if (!touches_wrong) continue;
      }
      for (size_t r = 0; r < state.size(); ++r) {
        if (m & (uint64_t{1} << r)) covered.push_back(static_cast<int>(r));
      }
    }
    if (covered.empty()) continue;

    for (const auto& mod : candidate_modifiers(ctx, state, covered)) {
      std::vector<Rat> next = state;
      bool effect = false;
      for (int r : covered) {
        next[r] = mod.apply(state[r]);
        effect = effect || next[r] != state[r];
      }
      if (!effect) continue;
      if (state_dead(ctx, next)) continue;
      ctx.path.push_back(Operation{ctx.conds[c], mod});
      if (seq_dfs(ctx, next, g + ctx.op_costs[c], limit)) return true;
      ctx.path.pop_back();
      if (ctx.aborted) return false;
    }
  }
  return false;
}

// Structural search for assign/increment sequences: enumerate (condition,
// kind) sequences, then solve the per-row linear system "final value equals
// last assign plus subsequent covering increments" exactly.
SolveOutcome solve_assign_increment_structural(const ProblemInstance& inst, SeqContext& ctx,
                                               long long lb, const SolveOutcome& upper) {
  size_t N = ctx.target.size();
  size_t K = ctx.conds.size();
  std::vector<std::vector<int>> rows_of(K);
  for (size_t c = 0; c < K; ++c) {
    for (size_t r = 0; r < N; ++r) {
      if (ctx.masks[c] & (uint64_t{1} << r)) rows_of[c].push_back(static_cast<int>(r));
    }
  }

  // kind 0 = assign, 1 = increment.
  std::vector<std::pair<size_t, int>> seq;
  std::optional<Diff> best;
  long long best_cost = kInf;
  long long per_op_floor = ctx.union_family
                               ? inst.family.kappa0 + inst.family.kappa1
                               : 1;

  auto try_sequence = [&]() -> bool {
    size_t m = seq.size();
    // final_r = x_{last assign covering r} + sum of later covering increments,
    // or source_r + all covering increments when never assigned.
    std::vector<std::vector<Rat>> aug(N, std::vector<Rat>(m + 1, Rat(0)));
    for (size_t r = 0; r < N; ++r) {
      int last_assign = -1;
      for (size_t j = 0; j < m; ++j) {
        if (seq[j].second == 0 && (ctx.masks[seq[j].first] & (uint64_t{1} << r))) {
          last_assign = static_cast<int>(j);
        }
      }
      Rat rhs = ctx.target[r];
      if (last_assign < 0) rhs -= ctx.table.source_write[r];
      for (size_t j = (last_assign < 0 ? 0 : last_assign); j < m; ++j) {
        if (static_cast<int>(j) == last_assign) {
          aug[r][j] = Rat(1);
          continue;
        }
        if (seq[j].second == 1 && (ctx.masks[seq[j].first] & (uint64_t{1} << r))) {
          aug[r][j] = Rat(1);
        }
      }
      aug[r][m] = rhs;
    }
    auto sol = solve_rational_system(std::move(aug), m);
    if (!sol) return false;
    // A zero increment or an assignment nobody reads marks a removable op, so
    // a shorter sequence would already have been found.
    for (size_t j = 0; j < m; ++j) {
      if (seq[j].second == 1 && (*sol)[j] == Rat(0)) return false;
    }
    Diff diff;
    for (size_t j = 0; j < m; ++j) {
      Modifier mod = seq[j].second == 0 ? Modifier::assign(inst.write_attr, (*sol)[j])
                                        : Modifier::increment(inst.write_attr, (*sol)[j]);
      diff.ops.push_back(Operation{ctx.conds[seq[j].first], mod});
    }
    if (apply_diff(inst.source, diff).relation != inst.target) return false;
    long long cost = diff_cost(diff, inst.family);
    if (cost < best_cost) {
      best_cost = cost;
      best = std::move(diff);
    }
    // Union pricing can prefer a same-length sequence with fewer ranges, so
    // keep scanning the level; a fixed-length diff has a fixed cost otherwise.
    return !ctx.union_family;
  };

  std::optional<SolveOutcome> bailed;
  auto enumerate = [&](auto&& self, size_t remaining) -> bool {
    if (remaining == 0) return try_sequence();
    for (size_t c = 0; c < K; ++c) {
      for (int kind = 0; kind < 2; ++kind) {
        if (!seq.empty()) {
          auto [pc, pk] = seq.back();
          // Adjacent commuting increments in canonical order, merged dupes,
          // and ops wholly overwritten by the next assign are pruned.
          if (pk == 1 && kind == 1 && c <= pc) continue;
          if (pk == 0 && kind == 0 && pc == c) continue;
          if (kind == 0 && (ctx.masks[pc] & ~ctx.masks[c]) == 0) continue;
        }
        if (++ctx.nodes > ctx.node_cap) {
          long long m = static_cast<long long>(seq.size()) + 1;
          std::optional<Diff> found;
          long long found_cost = 0;
          if (upper.kind == SolveOutcome::Kind::BestDiff) {
            found = upper.diff;
            found_cost = upper.cost;
          }
          bailed = SolveOutcome::bound(std::max(lb, m), found ? found_cost : m, found, found_cost);
          return false;
        }
        seq.emplace_back(c, kind);
        if (self(self, remaining - 1)) return true;
        seq.pop_back();
        if (bailed) return false;
      }
    }
    return false;
  };

  for (long long m = std::max(1LL, lb); m <= ctx.length_cap; ++m) {
    if (best && m * per_op_floor >= best_cost) break;
    seq.clear();
    bool hit = enumerate(enumerate, m);
    if (bailed) return *bailed;
    if (hit || (best && !ctx.union_family)) {
      return SolveOutcome::best(std::move(*best), best_cost);
    }
  }
  if (best) return SolveOutcome::best(std::move(*best), best_cost);
  if (ctx.exhaustion_definitive) {
    return SolveOutcome::infeasible(
        "no operation sequence over the canonical condition set transforms source into target");
  }
  return SolveOutcome::bound(ctx.length_cap + 1, ctx.length_cap + 1, std::nullopt, 0);
}

}  // namespace

SolveOutcome solve_sequential_search(const ProblemInstance& inst, const SearchBudget& budget) {
  if (inst.family.modifier_type == ModifierType::Increment) {
    return solve_increment_commutative(inst, budget);
  }

  SeqContext ctx;
  ctx.inst = &inst;
  ctx.read_write = inst.read_write();
  ctx.union_family = inst.family.condition_type == ConditionType::RangeUnion;

  if (!ctx.read_write) {
    ConsistencyReport consistent = group_consistency_check(inst);
    if (!consistent.ok) return SolveOutcome::infeasible(consistent.witness);
  }

  ctx.table = build_rows(inst);
  size_t N = ctx.table.keys.size();
  ctx.target = ctx.table.target_write;
  if (ctx.table.source_write == ctx.target) return SolveOutcome::best(Diff{}, 0);

  CanonicalSet canon = canonical_set(inst);
  ctx.conds = std::move(canon.conds);
  ctx.masks = std::move(canon.masks);
  for (const auto& cond : ctx.conds) {
    ctx.op_costs.push_back(operation_cost(Operation{cond, Modifier{}}, inst.family));
  }

  if (ctx.read_write) {
    std::set<Rat> values;
    for (const Relation* rel : {&inst.source, &inst.target}) {
      int w = rel->attr_index(inst.write_attr);
      for (const auto& [key, cells] : rel->rows) values.insert(cells[w]);
    }
    ctx.assign_values.assign(values.begin(), values.end());
  }

  SolveOutcome upper = ctx.read_write ? SolveOutcome::bound(0, 0, std::nullopt, 0)
                                      : constructive_upper_bound(inst);
  bool have_upper = upper.kind == SolveOutcome::Kind::BestDiff;

  ctx.node_cap = budget.node_cap;
  if (budget.depth_cap >= 0) {
    ctx.length_cap = budget.depth_cap;
  } else if (have_upper && !ctx.union_family) {
    ctx.length_cap = std::max<long long>(upper.diff.ops.size(), 1);
  } else {
    ctx.length_cap = static_cast<long long>(N) + 1;
  }
  ctx.cost_cap = have_upper ? upper.cost : kInf;
  if (!ctx.union_family) ctx.cost_cap = std::min(ctx.cost_cap, ctx.length_cap);
  if (budget.depth_cap < 0 && !ctx.read_write) {
    ctx.exhaustion_definitive =
        inst.family.modifier_type == ModifierType::Assign ||
        inst.family.condition_type == ConditionType::Eq ||
        inst.family.condition_type == ConditionType::AtMost;
  }

  if (inst.family.modifier_type == ModifierType::AssignIncrement && !ctx.read_write) {
    return solve_assign_increment_structural(inst, ctx, 1, upper);
  }

  // Union heuristic zones: rows in ascending A order, fenced by groups that
  // can never be matched (assign family, non-uniform targets, currently
  // correct).
  if (ctx.union_family && !ctx.read_write && inst.read_attrs.size() == 1 &&
      inst.family.modifier_type == ModifierType::Assign) {
    std::vector<int> order(N);
    for (size_t r = 0; r < N; ++r) order[r] = static_cast<int>(r);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (ctx.table.read_cells[a][0] != ctx.table.read_cells[b][0]) {
        return ctx.table.read_cells[a][0] < ctx.table.read_cells[b][0];
      }
      return ctx.table.keys[a] < ctx.table.keys[b];
    });
    std::vector<bool> fragile_group(ctx.table.groups.size(), false);
    for (size_t g = 0; g < ctx.table.groups.size(); ++g) {
      const auto& rows = ctx.table.groups[g];
      for (int r : rows) {
        if (ctx.target[r] != ctx.target[rows[0]]) fragile_group[g] = true;
      }
    }
    ctx.row_zone.assign(N, -1);
    int zone = 0;
    bool in_zone = false;
    for (int r : order) {
      if (fragile_group[ctx.table.group_of[r]]) {
        if (in_zone) ++zone;
        in_zone = false;
        continue;
      }
      ctx.row_zone[r] = zone;
      in_zone = true;
    }
    // Operations matching a fragile group die immediately; drop them up front.
    uint64_t fragile_mask = 0;
    for (size_t g = 0; g < ctx.table.groups.size(); ++g) {
      if (!fragile_group[g]) continue;
      for (int r : ctx.table.groups[g]) fragile_mask |= uint64_t{1} << r;
    }
    if (fragile_mask) {
      std::vector<Condition> conds;
      std::vector<uint64_t> masks;
      std::vector<long long> costs;
      for (size_t c = 0; c < ctx.conds.size(); ++c) {
        if (ctx.masks[c] & fragile_mask) continue;
        conds.push_back(std::move(ctx.conds[c]));
        masks.push_back(ctx.masks[c]);
        costs.push_back(ctx.op_costs[c]);
      }
      ctx.conds = std::move(conds);
      ctx.masks = std::move(masks);
      ctx.op_costs = std::move(costs);
    }
  }

  std::vector<Rat> state = ctx.table.source_write;
  long long limit = heuristic(ctx, state);
  while (true) {
    ctx.visited.clear();
    ctx.next_limit = kInf;
    ctx.path.clear();
    bool found = seq_dfs(ctx, state, 0, limit);
    if (ctx.aborted) {
      std::optional<Diff> best_found;
      long long best_cost = 0;
      if (have_upper) {
        best_found = upper.diff;
        best_cost = upper.cost;
      }
      return SolveOutcome::bound(limit, have_upper ? best_cost : limit, best_found, best_cost);
    }
    if (found) {
      Diff diff{ctx.path};
      long long cost = diff_cost(diff, inst.family);
      return SolveOutcome::best(std::move(diff), cost);
    }
    if (ctx.next_limit >= kInf || ctx.next_limit > ctx.cost_cap) {
      if (ctx.exhaustion_definitive) {
        return SolveOutcome::infeasible(
            "no operation sequence over the canonical condition set transforms source into "
            "target");
      }
      long long lo = ctx.next_limit >= kInf ? ctx.cost_cap + 1 : ctx.next_limit;
      std::optional<Diff> best_found;
      long long best_cost = 0;
      if (have_upper) {
        best_found = upper.diff;
        best_cost = upper.cost;
      }
      return SolveOutcome::bound(lo, have_upper ? best_cost : lo, best_found, best_cost);
    }
    limit = ctx.next_limit;
  }
}

SolveOutcome solve_exhaustive(const ProblemInstance& inst, const SearchBudget& budget) {
  if (inst.family.modifier_type == ModifierType::Increment) {
    return solve_increment_commutative(inst, budget);
  }
  return solve_sequential_search(inst, budget);
}

}  // namespace datadiff
