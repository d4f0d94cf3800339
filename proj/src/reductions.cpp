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

#include "datadiff/reductions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace datadiff {

namespace {

Relation make_relation(const std::string& key_attr, std::vector<std::string> attrs,
                       const std::vector<std::pair<long long, std::vector<long long>>>& rows) {
  Relation rel;
  rel.key_attr = key_attr;
  rel.attrs = std::move(attrs);
  for (const auto& [key, cells] : rows) {
    std::vector<Rat> rats(cells.begin(), cells.end());
    if (!rel.rows.emplace(key, std::move(rats)).second) {
      throw std::logic_error("duplicate key in construction");
    }
  }
  return rel;
}

void require_positive(const SubsetSumInstance& ss) {
  if (ss.target <= 0) throw std::invalid_argument("subset-sum target must be positive");
  for (long long s : ss.elements) {
    if (s <= 0) throw std::invalid_argument("subset-sum elements must be positive");
  }
}

}  // namespace

ReducedInstance reduce_subsetsum_to_leqgeq_increment(const SubsetSumInstance& ss) {
  require_positive(ss);
  long long n = static_cast<long long>(ss.elements.size());
  std::vector<std::pair<long long, std::vector<long long>>> src, tgt;
  long long prefix = 0;
  for (long long k = 0; k <= n; ++k) {
    prefix += (k == 0) ? -ss.target : ss.elements[k - 1];
    src.push_back({k, {k, 0}});
    tgt.push_back({k, {k, prefix}});
  }
  ReducedInstance out;
  out.instance.key_attr = "K";
  out.instance.read_attrs = {"A"};
  out.instance.write_attr = "B";
  out.instance.source = make_relation("K", {"A", "B"}, src);
  out.instance.target = make_relation("K", {"A", "B"}, tgt);
  out.instance.family = {ConditionType::AtMostAtLeast, ModifierType::Increment, 0, 0};
  out.threshold = n;
  out.predicate = "subset summing to t exists iff best diff cost == " + std::to_string(n);
  return out;
}

ReducedInstance reduce_subsetsum_to_affine_blocks(const SubsetSumInstance& ss,
                                                  long long block_size) {
  require_positive(ss);
  if (block_size < 1) throw std::invalid_argument("block size must be at least 1");
  long long n = static_cast<long long>(ss.elements.size());
  std::vector<std::pair<long long, std::vector<long long>>> src, tgt;
  long long prefix = 0;
  for (long long k = 0; k <= n; ++k) {
    prefix += (k == 0) ? -ss.target : ss.elements[k - 1];
    for (long long i = 1; i <= block_size; ++i) {
      long long id = block_size * k + i;
      src.push_back({id, {id, 0}});
      tgt.push_back({id, {id, prefix}});
    }
  }
  ReducedInstance out;
  out.instance.key_attr = "K";
  out.instance.read_attrs = {"A"};
  out.instance.write_attr = "B";
  out.instance.source = make_relation("K", {"A", "B"}, src);
  out.instance.target = make_relation("K", {"A", "B"}, tgt);
  out.instance.family = {ConditionType::AtMostAtLeast, ModifierType::Affine, 0, 0};
  out.threshold = n;
  out.predicate = "subset summing to t exists iff best diff cost == " + std::to_string(n);
  return out;
}

Scs2Instance reduce_2scs_to_2distinct(const Scs2Instance& s2) {
  std::set<long long> doubled;
  long long max_symbol = 0;
  for (const auto& s : s2.strings) {
    if (s[0] == s[1]) doubled.insert(s[0]);
    max_symbol = std::max({max_symbol, s[0], s[1]});
  }
  std::map<long long, std::pair<long long, long long>> fresh;
  long long next = max_symbol + 1;
  for (long long c : doubled) {
    fresh[c] = {next, next + 1};
    next += 2;
  }
  auto f = [&](long long c, bool second) {
    auto it = fresh.find(c);
    if (it == fresh.end()) return c;
    return second ? it->second.second : it->second.first;
  };
  Scs2Instance out;
  out.max_length = s2.max_length;
  out.distinct = true;
  for (const auto& s : s2.strings) {
    out.strings.push_back({f(s[0], false), f(s[1], true)});
  }
  return out;
}

ReducedInstance reduce_2distinctscs_to_union_assign(const Scs2Instance& s2) {
  for (const auto& s : s2.strings) {
    if (s[0] <= 0 || s[1] <= 0) throw std::invalid_argument("symbols must be positive integers");
    if (s[0] == s[1]) {
      throw std::invalid_argument("the union reduction requires the distinct variant");
    }
  }
  long long n = static_cast<long long>(s2.strings.size());
  long long t = s2.max_length;
  std::vector<std::pair<long long, std::vector<long long>>> src, tgt;
  for (long long k = 1; k <= n; ++k) {
    long long u = s2.strings[k - 1][0];
    long long v = s2.strings[k - 1][1];
    src.push_back({5 * k - 3, {4 * k - 3, 0}});
    src.push_back({5 * k - 2, {4 * k - 2, 0}});
    src.push_back({5 * k - 1, {4 * k - 1, 0}});
    tgt.push_back({5 * k - 3, {4 * k - 3, u}});
    tgt.push_back({5 * k - 2, {4 * k - 2, v}});
    tgt.push_back({5 * k - 1, {4 * k - 1, u}});
  }
  for (long long k = 0; k <= n; ++k) {
    src.push_back({5 * k, {4 * k, -1}});
    src.push_back({5 * k + 1, {4 * k, -2}});
    tgt.push_back({5 * k, {4 * k, -1}});
    tgt.push_back({5 * k + 1, {4 * k, -2}});
  }
  ReducedInstance out;
  out.instance.key_attr = "K";
  out.instance.read_attrs = {"A"};
  out.instance.write_attr = "B";
  out.instance.source = make_relation("K", {"A", "B"}, src);
  out.instance.target = make_relation("K", {"A", "B"}, tgt);
  out.instance.family = {ConditionType::RangeUnion, ModifierType::Assign, 1, t + 99};
  out.threshold = t + 2 * n * (t + 99);
  out.predicate = "supersequence of length <= t exists iff best diff cost <= " +
                  std::to_string(out.threshold);
  return out;
}

namespace {

ReducedInstance split_read_attribute(const ProblemInstance& inst,
                                     const std::vector<std::string>& new_attrs,
                                     const std::vector<std::vector<Rat>>& per_row_values,
                                     ConditionType new_type) {
  ReducedInstance out;
  out.instance.key_attr = inst.key_attr;
  out.instance.read_attrs = new_attrs;
  out.instance.write_attr = inst.write_attr;
  out.instance.family = inst.family;
  out.instance.family.condition_type = new_type;

  int widx_s = inst.source.attr_index(inst.write_attr);
  int widx_t = inst.target.attr_index(inst.write_attr);
  Relation src, tgt;
  src.key_attr = tgt.key_attr = inst.key_attr;
  std::vector<std::string> attrs = new_attrs;
  attrs.push_back(inst.write_attr);
  src.attrs = tgt.attrs = attrs;
  size_t r = 0;
  for (const auto& [key, cells] : inst.source.rows) {
    std::vector<Rat> scells = per_row_values[r];
    std::vector<Rat> tcells = per_row_values[r];
    scells.push_back(cells[widx_s]);
    tcells.push_back(inst.target.rows.at(key)[widx_t]);
    src.rows.emplace(key, std::move(scells));
    tgt.rows.emplace(key, std::move(tcells));
    ++r;
  }
  out.instance.source = std::move(src);
  out.instance.target = std::move(tgt);
  out.threshold = 0;
  out.predicate = "best diff cost equals the one-attribute instance's best diff cost";
  return out;
}

}  // namespace

ReducedInstance reduce_bd1_range_to_multi_eq(const ProblemInstance& inst) {
  if (inst.read_attrs.size() != 1 || inst.read_write()) {
    throw std::invalid_argument("reduction expects one read-only attribute");
  }
  Boundary boundary = compute_boundary(inst);
  const std::vector<Rat>& values = boundary.axes.at(inst.read_attrs[0]).values;
  size_t l = values.size();
  Rat sentinel = values.back() + Rat(1);

  std::vector<std::string> attrs;
  for (size_t i = 1; i <= 2 * l; ++i) attrs.push_back(inst.read_attrs[0] + std::to_string(i));

  int aidx = inst.source.attr_index(inst.read_attrs[0]);
  std::vector<std::vector<Rat>> per_row;
  for (const auto& [key, cells] : inst.source.rows) {
    const Rat& a = cells[aidx];
    std::vector<Rat> row;
    // rho_i = [a_i, a_l] for the first l attributes, [a_1, a_i] for the rest;
    // membership maps to the sentinel.
    for (size_t i = 0; i < l; ++i) row.push_back(values[i] <= a ? sentinel : a);
    for (size_t i = 0; i < l; ++i) row.push_back(a <= values[i] ? sentinel : a);
    per_row.push_back(std::move(row));
  }
  return split_read_attribute(inst, attrs, per_row, ConditionType::Eq);
}

ReducedInstance reduce_bd1_range_to_multi_atmost(const ProblemInstance& inst) {
  if (inst.read_attrs.size() != 1 || inst.read_write()) {
    throw std::invalid_argument("reduction expects one read-only attribute");
  }
  int aidx = inst.source.attr_index(inst.read_attrs[0]);
  std::vector<std::string> attrs = {inst.read_attrs[0] + "1", inst.read_attrs[0] + "2"};
  std::vector<std::vector<Rat>> per_row;
  for (const auto& [key, cells] : inst.source.rows) {
    per_row.push_back({cells[aidx], -cells[aidx]});
  }
  return split_read_attribute(inst, attrs, per_row, ConditionType::AtMost);
}

namespace {

struct Polygon {
  std::vector<std::pair<long long, long long>> v;  // closed implicitly
  long long max_coord = 0;

  // Even-odd test for the half-integer point (x + 1/2, y + 1/2).
  bool cell_inside(long long x, long long y) const {
    int crossings = 0;
    size_t n = v.size();
    for (size_t i = 0; i < n; ++i) {
      auto [x1, y1] = v[i];
      auto [x2, y2] = v[(i + 1) % n];
      if (x1 != x2) continue;  // horizontal edges never cross the +x ray
      if (x1 <= x) continue;   // edge at or left of the center
      long long ylo = std::min(y1, y2), yhi = std::max(y1, y2);
      if (ylo <= y && y < yhi) ++crossings;  // center y + 1/2 in (ylo, yhi)
    }
    return crossings % 2 == 1;
  }
};

Polygon validate_polygon(const RectCoverInstance& rc) {
  Polygon p;
  p.v = rc.vertices;
  if (p.v.size() >= 2 && p.v.front() == p.v.back()) p.v.pop_back();
  if (p.v.size() < 4) throw std::invalid_argument("degenerate polygon");
  for (size_t i = 0; i < p.v.size(); ++i) {
    auto [x1, y1] = p.v[i];
    auto [x2, y2] = p.v[(i + 1) % p.v.size()];
    if ((x1 == x2) == (y1 == y2)) {
      throw std::invalid_argument("polygon edges must be axis-aligned and nonzero");
    }
    if (x1 < 1 || y1 < 1) throw std::invalid_argument("coordinates must be rank-space in [l]");
    p.max_coord = std::max({p.max_coord, x1, y1});
  }
  return p;
}

}  // namespace

ReducedInstance reduce_rectcover_to_multi_range_assign(const RectCoverInstance& rc,
                                                       long long cell_multiplicity) {
  if (cell_multiplicity < 1) throw std::invalid_argument("cell multiplicity must be at least 1");
  Polygon poly = validate_polygon(rc);
  long long l = poly.max_coord;

  std::vector<std::pair<long long, std::vector<long long>>> src, tgt;
  long long next_key = 0;
  long long next_value = 1;  // distinct positive source values, row-major
  for (long long x = 1; x <= l; ++x) {
    for (long long y = 1; y <= l; ++y) {
      bool inside = poly.cell_inside(x, y);
      for (long long i = 0; i < cell_multiplicity; ++i) {
        long long value = next_value++;
        src.push_back({next_key, {x, y, value}});
        tgt.push_back({next_key, {x, y, inside ? 0 : value}});
        ++next_key;
      }
    }
  }
  ReducedInstance out;
  out.instance.key_attr = "K";
  out.instance.read_attrs = {"A1", "A2"};
  out.instance.write_attr = "B";
  out.instance.source = make_relation("K", {"A1", "A2", "B"}, src);
  out.instance.target = make_relation("K", {"A1", "A2", "B"}, tgt);
  out.instance.family = {ConditionType::Range, ModifierType::Assign, 0, 0};
  out.threshold = rc.cover_size;
  out.predicate = "rectangle cover of size t exists iff a diff of cost t does";
  return out;
}

bool solve_subsetsum_bruteforce(const SubsetSumInstance& ss) {
  require_positive(ss);
  size_t n = ss.elements.size();
  if (n > 12) throw std::invalid_argument("brute-force subset sum capped at 12 elements");
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    long long sum = 0;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (uint32_t{1} << i)) sum += ss.elements[i];
    }
    if (sum == ss.target) return true;
  }
  return false;
}

long long solve_scs2_bruteforce(const Scs2Instance& s2) {
  size_t n = s2.strings.size();
  if (n > 4) throw std::invalid_argument("brute-force SCS capped at 4 strings");
  std::set<long long> alphabet;
  for (const auto& s : s2.strings) {
    alphabet.insert(s[0]);
    alphabet.insert(s[1]);
  }
  if (alphabet.size() > 6) throw std::invalid_argument("brute-force SCS capped at 6 symbols");
  if (n == 0) return 0;

  // Breadth-first over per-string progress (0, 1, or 2 matched symbols);
  // advancing greedily on each appended symbol is safe for subsequences.
  std::vector<int> start(n, 0);
  std::set<std::vector<int>> seen{start};
  std::queue<std::pair<std::vector<int>, long long>> q;
  q.push({start, 0});
  while (!q.empty()) {
    auto [state, len] = q.front();
    q.pop();
    if (std::all_of(state.begin(), state.end(), [](int p) { return p == 2; })) return len;
    for (long long c : alphabet) {
      std::vector<int> next = state;
      for (size_t i = 0; i < n; ++i) {
        if (next[i] < 2 && s2.strings[i][next[i]] == c) ++next[i];
      }
      if (seen.insert(next).second) q.push({next, len + 1});
    }
  }
  throw std::logic_error("supersequence search cannot fail");
}

long long solve_rectcover_bruteforce(const RectCoverInstance& rc) {
  Polygon poly = validate_polygon(rc);
  long long l = poly.max_coord;
  if (l - 1 > 4) throw std::invalid_argument("brute-force cover capped at a 4x4 cell grid");

  std::vector<std::pair<long long, long long>> inside;
  for (long long x = 1; x < l; ++x) {
    for (long long y = 1; y < l; ++y) {
      if (poly.cell_inside(x, y)) inside.push_back({x, y});
    }
  }
  if (inside.empty()) return 0;

  // Candidate rectangles fully inside the polygon, as cell sets.
  auto cell_index = [&](long long x, long long y) { return (x - 1) * (l - 1) + (y - 1); };
  uint64_t goal = 0;
  for (auto [x, y] : inside) goal |= uint64_t{1} << cell_index(x, y);
  std::vector<uint64_t> rects;
  for (long long x1 = 1; x1 <= l; ++x1) {
    for (long long x2 = x1 + 1; x2 <= l; ++x2) {
      for (long long y1 = 1; y1 <= l; ++y1) {
        for (long long y2 = y1 + 1; y2 <= l; ++y2) {
          uint64_t mask = 0;
          bool ok = true;
          for (long long x = x1; x < x2 && ok; ++x) {
            for (long long y = y1; y < y2 && ok; ++y) {
              if (!poly.cell_inside(x, y)) ok = false;
              mask |= uint64_t{1} << cell_index(x, y);
            }
          }
          if (ok) rects.push_back(mask);
        }
      }
    }
  }
  // Keep maximal rectangles only.
  std::vector<uint64_t> maximal;
  for (uint64_t r : rects) {
    bool dominated = false;
    for (uint64_t o : rects) {
      if (o != r && (r & ~o) == 0) dominated = true;
    }
    if (!dominated) maximal.push_back(r);
  }
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());

  for (long long t = 1; t <= static_cast<long long>(maximal.size()); ++t) {
    std::vector<size_t> idx(t);
    for (long long i = 0; i < t; ++i) idx[i] = i;
    while (true) {
      uint64_t acc = 0;
      for (long long i = 0; i < t; ++i) acc |= maximal[idx[i]];
      if (acc == goal) return t;
      long long i = t - 1;
      while (i >= 0 && idx[i] == maximal.size() - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (long long j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw std::logic_error("rectangle cover search cannot fail");
}

}  // namespace datadiff
