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

#ifndef DATADIFF_TESTS_FIXTURES_HPP
#define DATADIFF_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "datadiff/instance.hpp"

namespace datadiff::fixtures {

inline Relation table(const std::string& key_attr, std::vector<std::string> attrs,
                      std::vector<std::pair<long long, std::vector<long long>>> rows) {
  Relation rel;
  rel.key_attr = key_attr;
  rel.attrs = std::move(attrs);
  for (auto& [key, cells] : rows) {
    rel.rows.emplace(key, std::vector<Rat>(cells.begin(), cells.end()));
  }
  return rel;
}

// The three-version walkthrough relation: keys stand in for the original
// hex-string identifiers in their printed order.
inline Relation fig1_r1() {
  return table("K", {"A", "B"},
               {{0, {1, 0}}, {1, {5, 0}}, {2, {3, 0}}, {3, {0, 0}}, {4, {4, 0}}, {5, {2, 0}}});
}

inline Relation fig1_r2() {
  return table("K", {"A", "B"},
               {{0, {1, 1}}, {1, {5, 3}}, {2, {3, 2}}, {3, {0, 1}}, {4, {4, 2}}, {5, {2, 1}}});
}

// Versions two and three restricted to the read-write column.
inline Relation fig1_r2_rw() {
  return table("K", {"A"}, {{0, {1}}, {1, {5}}, {2, {3}}, {3, {0}}, {4, {4}}, {5, {2}}});
}

inline Relation fig1_r3_rw() {
  return table("K", {"A"}, {{0, {7}}, {1, {8}}, {2, {8}}, {3, {7}}, {4, {8}}, {5, {7}}});
}

inline ProblemInstance instance(Relation source, Relation target, FamilySpec family,
                                std::vector<std::string> reads = {"A"}, std::string write = "B") {
  ProblemInstance inst;
  inst.key_attr = source.key_attr;
  inst.read_attrs = std::move(reads);
  inst.write_attr = std::move(write);
  inst.source = std::move(source);
  inst.target = std::move(target);
  inst.family = family;
  return inst;
}

inline ProblemInstance fig1_r1_to_r2(FamilySpec family) {
  return instance(fig1_r1(), fig1_r2(), family);
}

inline ProblemInstance fig1_r2_to_r3(FamilySpec family) {
  return instance(fig1_r2_rw(), fig1_r3_rw(), family, {"A"}, "A");
}

// Seeded one-read-attribute instance with <= max_rows rows, <= max_values
// distinct A values, and cells in [-4, 4]. Not necessarily feasible.
inline ProblemInstance random_bd1(std::mt19937& rng, FamilySpec family, int max_rows = 6,
                                  int max_values = 4) {
  std::uniform_int_distribution<int> rows_dist(1, max_rows);
  std::uniform_int_distribution<int> cell(-4, 4);
  int n = rows_dist(rng);
  std::uniform_int_distribution<int> a_dist(0, max_values - 1);
  std::vector<std::pair<long long, std::vector<long long>>> src, tgt;
  for (int k = 0; k < n; ++k) {
    long long a = a_dist(rng);
    src.push_back({k, {a, cell(rng)}});
    tgt.push_back({k, {a, cell(rng)}});
  }
  return instance(table("K", {"A", "B"}, src), table("K", {"A", "B"}, tgt), family);
}

// Group-consistent variant: target = source + a per-group shift.
inline ProblemInstance random_bd1_shifted(std::mt19937& rng, FamilySpec family, int max_rows = 6,
                                          int max_values = 4) {
  std::uniform_int_distribution<int> rows_dist(1, max_rows);
  std::uniform_int_distribution<int> cell(-4, 4);
  int n = rows_dist(rng);
  std::uniform_int_distribution<int> a_dist(0, max_values - 1);
  std::vector<long long> shift(max_values);
  for (auto& s : shift) s = cell(rng);
  std::vector<std::pair<long long, std::vector<long long>>> src, tgt;
  for (int k = 0; k < n; ++k) {
    long long a = a_dist(rng);
    long long b = cell(rng);
    src.push_back({k, {a, b}});
    tgt.push_back({k, {a, b + shift[a]}});
  }
  return instance(table("K", {"A", "B"}, src), table("K", {"A", "B"}, tgt), family);
}

}  // namespace datadiff::fixtures

#endif  // DATADIFF_TESTS_FIXTURES_HPP
