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

#include "datadiff/poly.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "datadiff/semantics.hpp"

namespace datadiff {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

const std::string& read_attr(const ProblemInstance& inst) {
  if (inst.read_attrs.size() != 1) {
    throw std::logic_error("poly solver requires exactly one read attribute");
  }
  if (inst.read_write()) throw std::logic_error("poly solver requires a write-only attribute");
  return inst.read_attrs[0];
}

const Rat& group_a(const GroupSummary& g) { return g.read_values[0]; }

std::string group_label(const std::string& attr, const GroupSummary& g) {
  return "group " + attr + "=" + group_a(g).to_string();
}

// At-most/assign over groups[lo..hi) ascending; ops come out in strictly
// decreasing threshold order.
struct SideResult {
  bool feasible = true;
  std::string witness;
  std::vector<Operation> ops;
};

SideResult leq_assign_over(const std::vector<GroupSummary>& groups, size_t lo, size_t hi,
                           const std::string& attr, const std::string& write_attr) {
  SideResult out;
  int last_changed = -1;
  for (size_t i = lo; i < hi; ++i) {
    if (!groups[i].unchanged) last_changed = static_cast<int>(i);
  }
  if (last_changed < 0) return out;

  // Every group at or below the coverage frontier is overwritten and must
  // take a single constant.
  for (size_t i = lo; i <= static_cast<size_t>(last_changed); ++i) {
    if (!groups[i].const_target) {
      out.feasible = false;
      out.witness = group_label(attr, groups[i]) + " needs two distinct values under a forced overwrite";
      return out;
    }
  }

  // Maximal runs of equal target, ascending; one op per run, threshold at the
  // run's top value, emitted top run first.
  std::vector<std::pair<size_t, Rat>> runs;  // (last index, target)
  for (size_t i = lo; i <= static_cast<size_t>(last_changed); ++i) {
    Rat w = *groups[i].const_target;
    if (runs.empty() || runs.back().second != w) {
      runs.emplace_back(i, w);
    } else {
      runs.back().first = i;
    }
  }
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    Condition cond{{Clause::at_most(attr, group_a(groups[it->first]))}};
    out.ops.push_back(Operation{cond, Modifier::assign(write_attr, it->second)});
  }
  return out;
}

// Mirrored at-least/assign over groups[lo..hi): negate the axis, reuse the
// at-most solver, and flip the emitted thresholds back. Ops come out in
// increasing threshold order (widest coverage first).
SideResult geq_assign_over(const std::vector<GroupSummary>& groups, size_t lo, size_t hi,
                           const std::string& attr, const std::string& write_attr) {
  std::vector<GroupSummary> mirrored(groups.begin() + lo, groups.begin() + hi);
  std::reverse(mirrored.begin(), mirrored.end());
  for (auto& g : mirrored) g.read_values[0] = -g.read_values[0];
  SideResult out = leq_assign_over(mirrored, 0, mirrored.size(), attr, write_attr);
  for (auto& op : out.ops) {
    Clause& clause = op.condition.clauses[0];
    clause = Clause::at_least(attr, -clause.value);
  }
  return out;
}

// Telescoping at-most/increment construction.
struct IncResult {
  bool feasible = true;
  std::string witness;
  std::vector<Operation> ops;  // decreasing thresholds
};

IncResult leq_increment_ops(const std::vector<GroupSummary>& groups, const std::string& attr,
                            const std::string& write_attr) {
  IncResult out;
  std::vector<Rat> deltas;
  for (const auto& g : groups) {
    if (!g.shift_delta) {
      out.feasible = false;
      out.witness = group_label(attr, g) + " has no common shift";
      return out;
    }
    deltas.push_back(*g.shift_delta);
  }
  for (size_t i = groups.size(); i-- > 0;) {
    Rat next = (i + 1 < groups.size()) ? deltas[i + 1] : Rat(0);
    Rat x = deltas[i] - next;
    if (x == Rat(0)) continue;
    Condition cond{{Clause::at_most(attr, group_a(groups[i]))}};
    out.ops.push_back(Operation{cond, Modifier::increment(write_attr, x)});
  }
  return out;
}

}  // namespace

SolveOutcome solve_eq(const ProblemInstance& inst) {
  const std::string& attr = read_attr(inst);
  Diff diff;
  for (const auto& g : group_rows(inst)) {
    if (g.unchanged) continue;
    Condition cond{{Clause::eq(attr, group_a(g))}};
    std::optional<Modifier> mod;
    switch (inst.family.modifier_type) {
      case ModifierType::Assign:
        if (g.const_target) mod = Modifier::assign(inst.write_attr, *g.const_target);
        break;
      case ModifierType::Increment:
        if (g.shift_delta) mod = Modifier::increment(inst.write_attr, *g.shift_delta);
        break;
      case ModifierType::AssignIncrement:
        if (g.const_target) {
          mod = Modifier::assign(inst.write_attr, *g.const_target);
        } else if (g.shift_delta) {
          mod = Modifier::increment(inst.write_attr, *g.shift_delta);
        }
        break;
      case ModifierType::Affine:
        if (auto w = g.affine.const_value()) {
          mod = Modifier::affine(inst.write_attr, Rat(0), *w);
        } else if (g.shift_delta && g.affine.kind != AffineFit::Kind::Empty) {
          mod = Modifier::affine(inst.write_attr, Rat(1), *g.shift_delta);
        } else if (g.affine.kind == AffineFit::Kind::Point) {
          mod = Modifier::affine(inst.write_attr, g.affine.slope, g.affine.intercept);
        }
        break;
    }
    if (!mod) {
      return SolveOutcome::infeasible(group_label(attr, g) +
                                      " admits no single modifier in the family");
    }
    diff.ops.push_back(Operation{cond, *mod});
  }
  long long cost = diff_cost(diff, inst.family);
  return SolveOutcome::best(std::move(diff), cost);
}

SolveOutcome solve_leq_assign(const ProblemInstance& inst) {
  const std::string& attr = read_attr(inst);
  auto groups = group_rows(inst);
  SideResult side = leq_assign_over(groups, 0, groups.size(), attr, inst.write_attr);
  if (!side.feasible) return SolveOutcome::infeasible(side.witness);
  Diff diff{std::move(side.ops)};
  long long cost = diff_cost(diff, inst.family);
  return SolveOutcome::best(std::move(diff), cost);
}

SolveOutcome solve_leq_increment(const ProblemInstance& inst) {
  const std::string& attr = read_attr(inst);
  auto groups = group_rows(inst);
  IncResult inc = leq_increment_ops(groups, attr, inst.write_attr);
  if (!inc.feasible) return SolveOutcome::infeasible(inc.witness);
  Diff diff{std::move(inc.ops)};
  long long cost = diff_cost(diff, inst.family);
  return SolveOutcome::best(std::move(diff), cost);
}

SolveOutcome solve_leq_assign_increment(const ProblemInstance& inst) {
  const std::string& attr = read_attr(inst);
  auto groups = group_rows(inst);
  size_t n = groups.size();
  if (n == 0) return SolveOutcome::best(Diff{}, 0);

  // Scan distinct values in decreasing order; the composed transform at each
  // group is either a running increment or an absorbed constant, and the
  // group's map pins the at most two viable states.
  struct State {
    bool is_const;
    Rat v;  // shift delta or constant target
    bool operator==(const State& o) const { return is_const == o.is_const && v == o.v; }
  };
  struct Cell {
    State state;
    long long cost = kInf;
    int parent = -1;  // state index at previous (larger-A) position
  };

  std::vector<std::vector<Cell>> dp(n);
  auto candidates = [&](const GroupSummary& g) {
    std::vector<State> states;
    if (g.shift_delta) states.push_back({false, *g.shift_delta});
    if (g.const_target) states.push_back({true, *g.const_target});
    return states;
  };

  // Transition cost from state s (above) to t (below); -1 when impossible.
  auto step = [](const State& s, const State& t) -> int {
    if (s == t) return 0;
    if (s.is_const && !t.is_const) return -1;  // Const is absorbing
    return 1;
  };

  State start{false, Rat(0)};
  for (size_t pos = 0; pos < n; ++pos) {
    const GroupSummary& g = groups[n - 1 - pos];
    auto states = candidates(g);
    if (states.empty()) {
      return SolveOutcome::infeasible(group_label(attr, g) +
                                      " admits neither a shift nor a constant state");
    }
    for (const auto& st : states) {
      Cell cell;
      cell.state = st;
      if (pos == 0) {
        int c = step(start, st);
        if (c >= 0) cell.cost = c;
      } else {
        for (size_t p = 0; p < dp[pos - 1].size(); ++p) {
          if (dp[pos - 1][p].cost >= kInf) continue;
          int c = step(dp[pos - 1][p].state, st);
          if (c < 0) continue;
          long long total = dp[pos - 1][p].cost + c;
          // Prefer the increment-flavored predecessor on ties.
          if (total < cell.cost ||
              (total == cell.cost && cell.parent >= 0 &&
               dp[pos - 1][cell.parent].state.is_const && !dp[pos - 1][p].state.is_const)) {
            cell.cost = total;
            cell.parent = static_cast<int>(p);
          }
        }
      }
      dp[pos].push_back(cell);
    }
  }

  int best = -1;
  for (size_t i = 0; i < dp[n - 1].size(); ++i) {
    if (dp[n - 1][i].cost >= kInf) continue;
    if (best < 0 || dp[n - 1][i].cost < dp[n - 1][best].cost ||
        (dp[n - 1][i].cost == dp[n - 1][best].cost && !dp[n - 1][i].state.is_const &&
         dp[n - 1][best].state.is_const)) {
      best = static_cast<int>(i);
    }
  }
  if (best < 0) {
    return SolveOutcome::infeasible(
        "no state sequence respects the absorbing-constant rule (Const cannot return to Inc)");
  }

  // Walk back collecting chosen states, then emit one op per state change in
  // decreasing threshold order.
  std::vector<State> chosen(n);
  int cur = best;
  for (size_t pos = n; pos-- > 0;) {
    chosen[pos] = dp[pos][cur].state;
    cur = dp[pos][cur].parent;
  }
  Diff diff;
  State prev = start;
  for (size_t pos = 0; pos < n; ++pos) {
    const State& st = chosen[pos];
    if (!(st == prev)) {
      const GroupSummary& g = groups[n - 1 - pos];
      Condition cond{{Clause::at_most(attr, group_a(g))}};
      Modifier mod = st.is_const ? Modifier::assign(inst.write_attr, st.v)
                                 : Modifier::increment(inst.write_attr, st.v - prev.v);
      diff.ops.push_back(Operation{cond, mod});
    }
    prev = st;
  }
  long long cost = diff_cost(diff, inst.family);
  return SolveOutcome::best(std::move(diff), cost);
}

SolveOutcome solve_leq_affine(const ProblemInstance& inst) {
  const std::string& attr = read_attr(inst);
  auto groups = group_rows(inst);
  int n = static_cast<int>(groups.size());
  if (n == 0) return SolveOutcome::best(Diff{}, 0);

  for (const auto& g : groups) {
    if (g.affine.kind == AffineFit::Kind::Empty) {
      return SolveOutcome::infeasible(group_label(attr, g) + " admits no affine map");
    }
  }

  // Segment fits: fit[i][k] is the affine solution set for groups k..i. Once
  // a composed map has slope zero every later (smaller-A) map must too, so the
  // DP tracks a free/trapped flag; the untouched prefix is only free while no
  // operation has been emitted (virgin).
  std::vector<std::vector<AffineFit>> fit(n, std::vector<AffineFit>(n));
  for (int i = 0; i < n; ++i) {
    AffineFit acc;
    bool first = true;
    for (int k = i; k >= 0; --k) {
      for (const auto& [bs, bt] : groups[k].pairs) {
        if (first) {
          acc.kind = AffineFit::Kind::Line;
          acc.b0 = bs;
          acc.c0 = bt;
          first = false;
        } else {
          AffineFit one;
          one.kind = AffineFit::Kind::Line;
          one.b0 = bs;
          one.c0 = bt;
          // Intersect "slope*bs + t == bt" into acc.
          if (acc.kind == AffineFit::Kind::Line) {
            if (bs == acc.b0) {
              if (bt != acc.c0) acc.kind = AffineFit::Kind::Empty;
            } else {
              acc.slope = (bt - acc.c0) / (bs - acc.b0);
              acc.intercept = acc.c0 - acc.slope * acc.b0;
              acc.kind = AffineFit::Kind::Point;
            }
          } else if (acc.kind == AffineFit::Kind::Point) {
            if (acc.slope * bs + acc.intercept != bt) acc.kind = AffineFit::Kind::Empty;
          }
        }
      }
      fit[i][k] = acc;
    }
  }

  auto has_identity = [&](int i, int k) {
    const AffineFit& f = fit[i][k];
    if (f.kind == AffineFit::Kind::Line) return f.b0 == f.c0;
    if (f.kind == AffineFit::Kind::Point) return f.slope == Rat(1) && f.intercept == Rat(0);
    return false;
  };

  // State: 0 = virgin (identity, nothing emitted), 1 = free (nonzero slope),
  // 2 = trapped (slope zero).
  struct Choice {
    long long cost = kInf;
    int next_top = -1;  // k-1 of the chosen segment
    int next_state = -1;
    int kind = -1;  // 0 identity, 1 nonzero-slope, 2 constant
  };
  // memo[i][s]: cover groups 0..i entering with state s.
  std::vector<std::array<Choice, 3>> memo(n + 1);
  std::vector<std::array<bool, 3>> done(n + 1, {false, false, false});

  // Fits only shrink as a segment grows downward, so for each top position i
  // the viable segment starts form a suffix [first_viable[i] .. i].
  std::vector<int> first_viable(n);
  for (int i = 0; i < n; ++i) {
    int k = i;
    while (k > 0 && fit[i][k - 1].kind != AffineFit::Kind::Empty) --k;
    first_viable[i] = k;
  }

  auto solve = [&](auto&& self, int i, int s) -> long long {
    if (i < 0) return 0;
    if (done[i][s]) return memo[i][s].cost;
    done[i][s] = true;
    Choice best;
    // Longest segments first so ties keep the longer block; within a segment
    // prefer the identity, then a non-constant map.
    for (int k = first_viable[i]; k <= i; ++k) {
      const AffineFit& f = fit[i][k];
      // Identity segment: only while virgin, costs nothing.
      if (s == 0 && has_identity(i, k)) {
        long long rest = self(self, k - 1, 0);
        if (rest < kInf && rest < best.cost) best = {rest, k - 1, 0, 0};
      }
      // Nonzero-slope map: needs a free (or virgin) composed state.
      if (s != 2 && f.nonzero_slope_available()) {
        long long rest = self(self, k - 1, 1);
        if (rest < kInf && rest + 1 < best.cost) best = {rest + 1, k - 1, 1, 1};
      }
      // Constant map: always reachable, traps the suffix.
      if (f.const_fittable()) {
        long long rest = self(self, k - 1, 2);
        if (rest < kInf && rest + 1 < best.cost) best = {rest + 1, k - 1, 2, 2};
      }
    }
    memo[i][s] = best;
    return best.cost;
  };

  long long total = solve(solve, n - 1, 0);
  if (total >= kInf) {
    return SolveOutcome::infeasible(
        "slope-zero trap: a constant block precedes a group that only a non-constant map fits");
  }

  // Reconstruct maps and emit one affine op per non-identity segment.
  Diff diff;
  Rat ms(1), mt(0);  // composed map in force above the current segment
  int i = n - 1, s = 0;
  while (i >= 0) {
    const Choice& c = memo[i][s];
    int k = c.next_top + 1;
    const AffineFit& f = fit[i][k];
    if (c.kind != 0) {
      Rat seg_s, seg_t;
      if (c.kind == 2) {
        seg_s = Rat(0);
        seg_t = *f.const_value();
      } else if (f.kind == AffineFit::Kind::Point) {
        seg_s = f.slope;
        seg_t = f.intercept;
      } else {
        seg_s = Rat(1);  // canonical nonzero pick on a line of solutions
        seg_t = f.c0 - f.b0;
      }
      // Operation modifier g with g ∘ (ms, mt) == (seg_s, seg_t).
      Rat op_s = ms == Rat(0) ? Rat(0) : seg_s / ms;
      Rat op_t = seg_t - op_s * mt;
      Condition cond{{Clause::at_most(attr, group_a(groups[i]))}};
      diff.ops.push_back(Operation{cond, Modifier::affine(inst.write_attr, op_s, op_t)});
      ms = seg_s;
      mt = seg_t;
    }
    i = c.next_top;
    s = c.next_state;
  }
  long long cost = diff_cost(diff, inst.family);
  return SolveOutcome::best(std::move(diff), cost);
}

SolveOutcome solve_leqgeq_assign(const ProblemInstance& inst) {
  const std::string& attr = read_attr(inst);
  auto groups = group_rows(inst);
  size_t n = groups.size();
  Boundary boundary = compute_boundary(inst);

  std::optional<Diff> best;
  Rat best_len(0);
  std::string witness;
  for (size_t p = 0; p <= n; ++p) {
    SideResult left = leq_assign_over(groups, 0, p, attr, inst.write_attr);
    SideResult right = geq_assign_over(groups, p, n, attr, inst.write_attr);
    if (!left.feasible || !right.feasible) {
      if (witness.empty()) witness = left.feasible ? right.witness : left.witness;
      continue;
    }
    Diff diff;
    diff.ops = std::move(left.ops);
    diff.ops.insert(diff.ops.end(), right.ops.begin(), right.ops.end());
    Rat len = diff_total_length(diff, boundary);
    if (!best || diff.ops.size() < best->ops.size() ||
        (diff.ops.size() == best->ops.size() && len < best_len)) {
      best = std::move(diff);
      best_len = len;
    }
  }
  if (!best) {
    return SolveOutcome::infeasible("every breakpoint leaves an infeasible side: " + witness);
  }
  long long cost = diff_cost(*best, inst.family);
  return SolveOutcome::best(std::move(*best), cost);
}

SolveOutcome solve_range_assign(const ProblemInstance& inst) {
  const std::string& attr = read_attr(inst);
  auto groups = group_rows(inst);
  int n = static_cast<int>(groups.size());
  for (const auto& g : groups) {
    if (!g.unchanged && !g.const_target) {
      return SolveOutcome::infeasible(group_label(attr, g) +
                                      " has two distinct targets; a range cannot split a group");
    }
  }
  if (n == 0) return SolveOutcome::best(Diff{}, 0);

  // Paint values: Null plus the distinct constant targets.
  std::vector<Rat> paints;
  for (const auto& g : groups) {
    if (g.const_target &&
        std::find(paints.begin(), paints.end(), *g.const_target) == paints.end()) {
      paints.push_back(*g.const_target);
    }
  }
  std::sort(paints.begin(), paints.end());
  const int kNull = -1;
  int P = static_cast<int>(paints.size());

  auto matches_paint = [&](int i, int paint) {
    if (paint == kNull) return groups[i].unchanged;
    return groups[i].const_target && *groups[i].const_target == paints[paint];
  };

  struct Val {
    long long cost = kInf;
    Rat len = Rat(0);
    int k = -1;  // split choice; -1 means "group i already matches"
  };
  // memo[i][j+1][paint+1]: positions i..j all currently holding `paint`.
  std::vector<std::vector<std::vector<Val>>> memo(
      n + 1, std::vector<std::vector<Val>>(n + 2, std::vector<Val>(P + 1)));
  std::vector<std::vector<std::vector<bool>>> seen(
      n + 1, std::vector<std::vector<bool>>(n + 2, std::vector<bool>(P + 1, false)));

  auto better = [](long long c1, const Rat& l1, long long c2, const Rat& l2) {
    return c1 < c2 || (c1 == c2 && l1 < l2);
  };

  auto solve = [&](auto&& self, int i, int j, int paint) -> Val {
    if (i > j) return Val{0, Rat(0), -1};
    Val& slot = memo[i][j + 1][paint + 1];
    if (seen[i][j + 1][paint + 1]) return slot;
    seen[i][j + 1][paint + 1] = true;
    slot = Val{};
    if (matches_paint(i, paint)) {
      Val rest = self(self, i + 1, j, paint);
      if (rest.cost < kInf) slot = Val{rest.cost, rest.len, -1};
      return slot;
    }
    if (!groups[i].const_target) return slot;  // covered but unfixable
    int v = static_cast<int>(
        std::find(paints.begin(), paints.end(), *groups[i].const_target) - paints.begin());
    for (int k = i; k <= j; ++k) {
      Val inner = self(self, i + 1, k, v);
      if (inner.cost >= kInf) continue;
      Val outer = self(self, k + 1, j, paint);
      if (outer.cost >= kInf) continue;
      long long cost = 1 + inner.cost + outer.cost;
      Rat len = group_a(groups[k]) - group_a(groups[i]) + Rat(1) + inner.len + outer.len;
      if (better(cost, len, slot.cost, slot.len)) slot = Val{cost, len, k};
    }
    return slot;
  };

  Val root = solve(solve, 0, n - 1, kNull);
  if (root.cost >= kInf) {
    return SolveOutcome::infeasible("a group that must stay untouched blocks every range split");
  }

  // Emit outermost-first (pre-order over the nesting structure).
  Diff diff;
  auto emit = [&](auto&& self, int i, int j, int paint) -> void {
    if (i > j) return;
    const Val& v = memo[i][j + 1][paint + 1];
    if (v.k < 0) {
      self(self, i + 1, j, paint);
      return;
    }
    Rat target = *groups[i].const_target;
    int vi = static_cast<int>(std::find(paints.begin(), paints.end(), target) - paints.begin());
    Condition cond{{Clause::range(attr, group_a(groups[i]), group_a(groups[v.k]))}};
    diff.ops.push_back(Operation{cond, Modifier::assign(inst.write_attr, target)});
    self(self, i + 1, v.k, vi);
    self(self, v.k + 1, j, paint);
  };
  emit(emit, 0, n - 1, kNull);

  long long cost = diff_cost(diff, inst.family);
  return SolveOutcome::best(std::move(diff), cost);
}

SolveOutcome approx_leqgeq_increment(const ProblemInstance& inst) {
  const std::string& attr = read_attr(inst);
  auto groups = group_rows(inst);
  IncResult inc = leq_increment_ops(groups, attr, inst.write_attr);
  if (!inc.feasible) return SolveOutcome::infeasible(inc.witness);
  Diff diff{std::move(inc.ops)};
  long long cost = diff_cost(diff, inst.family);
  return SolveOutcome::best(std::move(diff), cost);
}

SolveOutcome approx_range_increment(const ProblemInstance& inst) {
  const std::string& attr = read_attr(inst);
  auto groups = group_rows(inst);
  IncResult inc = leq_increment_ops(groups, attr, inst.write_attr);
  if (!inc.feasible) return SolveOutcome::infeasible(inc.witness);
  Boundary boundary = compute_boundary(inst);
  Rat vmin = boundary.axes.at(attr).vmin;
  Diff diff;
  for (auto& op : inc.ops) {
    Condition cond{{Clause::range(attr, vmin, op.condition.clauses[0].value)}};
    diff.ops.push_back(Operation{cond, op.modifier});
  }
  long long cost = diff_cost(diff, inst.family);
  return SolveOutcome::best(std::move(diff), cost);
}

bool poly_exact_cell(const FamilySpec& family, size_t num_read_attrs, bool read_write) {
  if (num_read_attrs != 1 || read_write) return false;
  switch (family.condition_type) {
    case ConditionType::Eq:
    case ConditionType::AtMost:
      return true;
    case ConditionType::AtMostAtLeast:
    case ConditionType::Range:
      return family.modifier_type == ModifierType::Assign;
    case ConditionType::RangeUnion:
      return false;
  }
  return false;
}

SolveOutcome solve_exact_poly(const ProblemInstance& inst) {
  if (!poly_exact_cell(inst.family, inst.read_attrs.size(), inst.read_write())) {
    throw std::logic_error("no exact polynomial solver for this cell");
  }
  switch (inst.family.condition_type) {
    case ConditionType::Eq:
      return solve_eq(inst);
    case ConditionType::AtMost:
      switch (inst.family.modifier_type) {
        case ModifierType::Assign: return solve_leq_assign(inst);
        case ModifierType::Increment: return solve_leq_increment(inst);
        case ModifierType::AssignIncrement: return solve_leq_assign_increment(inst);
        case ModifierType::Affine: return solve_leq_affine(inst);
      }
      break;
    case ConditionType::AtMostAtLeast:
      return solve_leqgeq_assign(inst);
    case ConditionType::Range:
      return solve_range_assign(inst);
    case ConditionType::RangeUnion:
      break;
  }
  throw std::logic_error("unreachable");
}

}  // namespace datadiff
