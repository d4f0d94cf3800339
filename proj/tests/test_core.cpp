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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "datadiff/csv.hpp"
#include "datadiff/instance.hpp"
#include "datadiff/render.hpp"
#include "datadiff/semantics.hpp"
#include "fixtures.hpp"

using namespace datadiff;
using fixtures::table;

namespace {

Operation op_u1() {
  return {Condition{{Clause::at_most("A", Rat(2))}}, Modifier::assign("B", Rat(1))};
}
Operation op_u2() {
  return {Condition{{Clause::at_least("A", Rat(3))}}, Modifier::assign("B", Rat(2))};
}
Operation op_u3() {
  return {Condition{{Clause::eq("A", Rat(5))}}, Modifier::assign("B", Rat(3))};
}
Operation op_u4() {
  return {Condition{{Clause::at_most("A", Rat(2))}}, Modifier::assign("A", Rat(7))};
}
Operation op_u5() {
  return {Condition{{Clause::at_most("A", Rat(5))}}, Modifier::assign("A", Rat(8))};
}

}  // namespace

TEST_CASE("rationals reduce and compare exactly") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) * Rat(3) == Rat(1));
  CHECK(Rat(7, 2) / Rat(7) == Rat(1, 2));
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-5) < Rat(-1, 2));
  CHECK(Rat(5).is_integer());
  CHECK_FALSE(Rat(5, 3).is_integer());
  CHECK(Rat(5, 3).to_string() == "5/3");
  CHECK(Rat(-6, 3).to_string() == "-2");
  CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("rational arithmetic round trips") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> d(-50, 50);
  for (int i = 0; i < 500; ++i) {
    long long dn = d(rng);
    Rat a(d(rng), dn == 0 ? 1 : dn);
    long long dn2 = d(rng);
    Rat b(d(rng), dn2 == 0 ? 1 : dn2);
    CHECK((a + b) - b == a);
    if (b != Rat(0)) CHECK((a * b) / b == a);
  }
}

TEST_CASE("check_similarity accepts the walkthrough pair and itself") {
  auto r1 = fixtures::fig1_r1();
  auto r2 = fixtures::fig1_r2();
  CHECK(check_similarity("K", {"A"}, "B", r1, r2).ok);
  CHECK(check_similarity("K", {"A"}, "B", r1, r1).ok);
}

TEST_CASE("check_similarity reports a dropped key") {
  auto r1 = fixtures::fig1_r1();
  auto r2 = fixtures::fig1_r2();
  r2.rows.erase(1);
  auto report = check_similarity("K", {"A"}, "B", r1, r2);
  CHECK_FALSE(report.ok);
  CHECK(report.detail.find("key-set mismatch") != std::string::npos);
}

TEST_CASE("check_similarity rejects modified read-only attributes") {
  auto r1 = fixtures::fig1_r1();
  auto r2 = fixtures::fig1_r1();
  r2.rows.at(3)[0] = Rat(9);
  auto report = check_similarity("K", {"A"}, "B", r1, r2);
  CHECK_FALSE(report.ok);
  CHECK(report.detail.find("read-only attribute A") != std::string::npos);
}

TEST_CASE("matches evaluates clause kinds exactly") {
  auto r1 = fixtures::fig1_r1();
  CHECK(matches(Condition{{Clause::at_most("A", Rat(2))}}, r1, 0));   // A=1
  CHECK_FALSE(matches(Condition{{Clause::at_most("A", Rat(2))}}, r1, 2));  // A=3

  auto point = table("K", {"A", "B"}, {{0, {5, 0}}});
  CHECK(matches(Condition{{Clause::range("A", Rat(5), Rat(5))}}, point, 0));

  auto multi = table("K", {"A", "A2", "B"}, {{0, {1, -2, 0}}});
  Condition conj{{Clause::at_most("A", Rat(1)), Clause::at_most("A2", Rat(-3))}};
  CHECK_FALSE(matches(conj, multi, 0));
  CHECK_THROWS(matches(Condition{{Clause::eq("Z", Rat(0))}}, multi, 0));
}

TEST_CASE("applying the two read-write assignments reproduces version three") {
  auto r2 = fixtures::fig1_r2_rw();
  auto step1 = apply_operation(r2, op_u4());
  auto step2 = apply_operation(step1.relation, op_u5());
  CHECK(step2.relation == fixtures::fig1_r3_rw());
  CHECK_FALSE(step2.non_integral);

  // Reversed order collapses everything to 7 or leaves values above 5.
  auto swapped = apply_operation(apply_operation(r2, op_u5()).relation, op_u4());
  CHECK_FALSE(swapped.relation == fixtures::fig1_r3_rw());
}

TEST_CASE("zero increment leaves the relation unchanged") {
  auto r1 = fixtures::fig1_r1();
  Operation op{Condition{{Clause::at_most("A", Rat(5))}}, Modifier::increment("B", Rat(0))};
  CHECK(apply_operation(r1, op).relation == r1);
}

TEST_CASE("apply_diff is order sensitive") {
  auto r1 = fixtures::fig1_r1();
  Diff good{{op_u1(), op_u2(), op_u3()}};
  CHECK(apply_diff(r1, good).relation == fixtures::fig1_r2());

  Diff reordered{{op_u1(), op_u3(), op_u2()}};
  CHECK_FALSE(apply_diff(r1, reordered).relation == fixtures::fig1_r2());

  CHECK(apply_diff(r1, Diff{}).relation == r1);
}

TEST_CASE("diff_cost prices union operations with the kappa formula") {
  FamilySpec plain{ConditionType::AtMostAtLeast, ModifierType::Assign, 0, 0};
  Diff three{{op_u1(), op_u2(), op_u3()}};
  CHECK(diff_cost(three, plain) == 3);
  CHECK(diff_cost(Diff{}, plain) == 0);

  FamilySpec unions{ConditionType::RangeUnion, ModifierType::Assign, 1, 103};
  Clause cl = Clause::range_union("A", {{Rat(1), Rat(3)}, {Rat(5), Rat(7)}});
  Diff one{{Operation{Condition{{cl}}, Modifier::assign("B", Rat(1))}}};
  CHECK(diff_cost(one, unions) == 1 + 103 * 2);
}

TEST_CASE("operation_length follows the boundary definition") {
  FamilySpec fam{ConditionType::AtMostAtLeast, ModifierType::Assign, 0, 0};
  auto inst = fixtures::instance(fixtures::fig1_r1(), fixtures::fig1_r2(), fam);
  Boundary boundary = compute_boundary(inst);  // V_A = {0..5}, vmin -1, vmax 6
  CHECK(boundary.axes.at("A").vmin == Rat(-1));
  CHECK(boundary.axes.at("A").vmax == Rat(6));

  CHECK(operation_length(op_u1(), boundary) == Rat(3));  // 2 - (-1)
  Operation geq{Condition{{Clause::at_least("A", Rat(3))}}, Modifier::assign("B", Rat(0))};
  CHECK(operation_length(geq, boundary) == Rat(3));  // 6 - 3
  Operation range{Condition{{Clause::range("A", Rat(1), Rat(4))}}, Modifier::assign("B", Rat(0))};
  CHECK(operation_length(range, boundary) == Rat(4));  // 4 - 1 + 1
  CHECK_THROWS(operation_length(op_u3(), boundary));   // equality has no length
}

TEST_CASE("group consistency distinguishes the modifier closure classes") {
  FamilySpec assign{ConditionType::Eq, ModifierType::Assign, 0, 0};
  auto conflicted = fixtures::instance(
      table("K", {"A", "B"}, {{0, {1, 0}}, {1, {1, 0}}}),
      table("K", {"A", "B"}, {{0, {1, 5}}, {1, {1, 6}}}), assign);
  CHECK_FALSE(group_consistency_check(conflicted).ok);

  FamilySpec inc{ConditionType::Eq, ModifierType::Increment, 0, 0};
  auto shifted = fixtures::instance(
      table("K", {"A", "B"}, {{0, {1, 0}}, {1, {1, 2}}}),
      table("K", {"A", "B"}, {{0, {1, 5}}, {1, {1, 7}}}), inc);
  CHECK(group_consistency_check(shifted).ok);

  FamilySpec aff{ConditionType::Eq, ModifierType::Affine, 0, 0};
  auto affine = fixtures::instance(
      table("K", {"A", "B"}, {{0, {1, 0}}, {1, {1, 2}}}),
      table("K", {"A", "B"}, {{0, {1, 1}}, {1, {1, 5}}}), aff);
  CHECK(group_consistency_check(affine).ok);  // B <- 2B + 1

  auto groups = group_rows(affine);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].affine.kind == AffineFit::Kind::Point);
  CHECK(groups[0].affine.slope == Rat(2));
  CHECK(groups[0].affine.intercept == Rat(1));
}

TEST_CASE("render_sql formats the walkthrough statements") {
  CHECK(render_operation(op_u1(), "R") == "UPDATE R SET B = 1 WHERE A <= 2;");
  CHECK(render_sql(Diff{}, "R") == "");

  Clause cl = Clause::range_union("A", {{Rat(1), Rat(3)}, {Rat(5), Rat(7)}});
  Operation u{Condition{{cl}}, Modifier::assign("B", Rat(1))};
  CHECK(render_operation(u, "R") ==
        "UPDATE R SET B = 1 WHERE (A BETWEEN 1 AND 3 OR A BETWEEN 5 AND 7);");

  Operation aff{Condition{{Clause::eq("A", Rat(1))}},
                Modifier::affine("B", Rat(1, 2), Rat(-3))};
  CHECK(render_operation(aff, "R") == "UPDATE R SET B = (1/2) * B - 3 WHERE A = 1;");
}

TEST_CASE("scripts round trip through the parser") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, 4), val(-9, 9), den(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    Diff diff;
    int ops = pick(rng) % 3 + 1;
    for (int i = 0; i < ops; ++i) {
      Clause cl;
      switch (pick(rng)) {
        case 0: cl = Clause::eq("A", Rat(val(rng))); break;
        case 1: cl = Clause::at_most("A", Rat(val(rng), den(rng))); break;
        case 2: cl = Clause::at_least("A", Rat(val(rng))); break;
        case 3: {
          Rat lo(val(rng));
          cl = Clause::range("A", lo, lo + Rat(pick(rng)));
          break;
        }
        default: {
          Rat lo(val(rng));
          Rat hi = lo + Rat(pick(rng));
          cl = Clause::range_union("A", {{lo, hi}, {hi + Rat(2), hi + Rat(3)}});
          break;
        }
      }
      Modifier mod;
      switch (pick(rng) % 3) {
        case 0: mod = Modifier::assign("B", Rat(val(rng), den(rng))); break;
        case 1: mod = Modifier::increment("B", Rat(val(rng))); break;
        default: mod = Modifier::affine("B", Rat(val(rng), den(rng)), Rat(val(rng))); break;
      }
      diff.ops.push_back(Operation{Condition{{cl}}, mod});
    }
    std::string script = render_sql(diff, "R");
    Diff parsed = parse_script(script);
    CHECK(parsed == diff);
    CHECK(render_sql(parsed, "R") == script);
  }
}

TEST_CASE("conjunctions render and parse across attributes") {
  Operation op{Condition{{Clause::at_most("A1", Rat(2)), Clause::at_most("A2", Rat(-1))}},
               Modifier::increment("B", Rat(3))};
  std::string line = render_operation(op, "R");
  CHECK(line == "UPDATE R SET B = B + 3 WHERE A1 <= 2 AND A2 <= -1;");
  Diff parsed = parse_script(line + "\n");
  REQUIRE(parsed.ops.size() == 1);
  CHECK(parsed.ops[0] == op);

  Operation mixed{Condition{{Clause::range_union("A1", {{Rat(0), Rat(1)}, {Rat(3), Rat(4)}}),
                             Clause::range("A2", Rat(-2), Rat(2))}},
                  Modifier::assign("B", Rat(0))};
  Diff round = parse_script(render_sql(Diff{{mixed}}, "R"));
  CHECK(round.ops[0] == mixed);
}

TEST_CASE("parser reports malformed statements with line numbers") {
  CHECK_THROWS_AS(parse_script("UPDATE R SET B = WHERE A <= 2;\n"), ParseError);
  CHECK_THROWS_AS(parse_script("UPDATE R SET B = 1 WHERE A < 2;\n"), ParseError);
  try {
    parse_script("UPDATE R SET B = 1 WHERE A <= 2;\nUPDATE R SET;\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("operations never modify read-only attributes and preserve similarity") {
  std::mt19937 rng(13);
  FamilySpec fam{ConditionType::AtMostAtLeast, ModifierType::Assign, 0, 0};
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = fixtures::random_bd1(rng, fam);
    std::uniform_int_distribution<int> val(-4, 4);
    Operation op{Condition{{Clause::at_most("A", Rat(val(rng)))}},
                 Modifier::assign("B", Rat(val(rng)))};
    auto applied = apply_operation(inst.source, op);
    int aidx = inst.source.attr_index("A");
    for (const auto& [key, cells] : inst.source.rows) {
      CHECK(applied.relation.rows.at(key)[aidx] == cells[aidx]);
    }
    CHECK(check_similarity("K", {"A"}, "B", inst.source, applied.relation).ok);
  }
}

TEST_CASE("increment operations commute on write-only attributes") {
  std::mt19937 rng(17);
  FamilySpec fam{ConditionType::AtMostAtLeast, ModifierType::Increment, 0, 0};
  std::uniform_int_distribution<int> val(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = fixtures::random_bd1(rng, fam);
    Operation f{Condition{{Clause::at_most("A", Rat(val(rng)))}},
                Modifier::increment("B", Rat(val(rng)))};
    Operation g{Condition{{Clause::at_least("A", Rat(val(rng)))}},
                Modifier::increment("B", Rat(val(rng)))};
    auto fg = apply_operation(apply_operation(inst.source, f).relation, g).relation;
    auto gf = apply_operation(apply_operation(inst.source, g).relation, f).relation;
    CHECK(fg == gf);
  }
}

TEST_CASE("non-integral results are flagged but computed exactly") {
  auto r = table("K", {"A", "B"}, {{0, {1, 3}}});
  Operation op{Condition{{Clause::eq("A", Rat(1))}},
               Modifier::affine("B", Rat(1, 2), Rat(0))};
  auto applied = apply_operation(r, op);
  CHECK(applied.non_integral);
  CHECK(applied.relation.rows.at(0)[1] == Rat(3, 2));
}

TEST_CASE("csv round trips and rejects malformed input") {
  auto r1 = fixtures::fig1_r1();
  CHECK(parse_relation_csv(relation_to_csv(r1), "K") == r1);

  CHECK_THROWS(parse_relation_csv("K,A\n1,x\n", "K"));
  CHECK_THROWS(parse_relation_csv("K,A\n1,2\n1,3\n", "K"));
  CHECK_THROWS(parse_relation_csv("A,B\n1,2\n", "K"));
  CHECK_THROWS(parse_relation_csv("", "K"));

  auto empty = table("K", {"A", "B"}, {});
  CHECK(relation_to_csv(empty) == "K,A,B\n");
  CHECK(parse_relation_csv("K,A,B\n", "K") == empty);
}
