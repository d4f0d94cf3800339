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

#include "datadiff/instance.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace datadiff {

bool ProblemInstance::read_write() const {
  return std::find(read_attrs.begin(), read_attrs.end(), write_attr) != read_attrs.end();
}

AttributeRole ProblemInstance::role(const std::string& attr) const {
  bool reads = std::find(read_attrs.begin(), read_attrs.end(), attr) != read_attrs.end();
  bool writes = attr == write_attr;
  if (reads && writes) return AttributeRole::ReadWrite;
  if (reads) return AttributeRole::ReadOnly;
  if (writes) return AttributeRole::WriteOnly;
  return AttributeRole::Inaccessible;
}

SimilarityReport check_similarity(const std::string& key_attr,
                                  const std::vector<std::string>& read_attrs,
                                  const std::string& write_attr,
                                  const Relation& source, const Relation& target) {
  SimilarityReport report;
  auto fail = [&](const std::string& detail) {
    report.ok = false;
    report.detail = detail;
    return report;
  };

  std::set<std::string> expected(read_attrs.begin(), read_attrs.end());
  expected.insert(write_attr);
  if (expected.count(key_attr)) return fail("key attribute " + key_attr + " in read/write sets");

  for (const Relation* rel : {&source, &target}) {
    if (rel->key_attr != key_attr) {
      return fail("key attribute mismatch: expected " + key_attr + ", got " + rel->key_attr);
    }
    std::set<std::string> actual(rel->attrs.begin(), rel->attrs.end());
    if (actual != expected) {
      for (const auto& a : expected) {
        if (!actual.count(a)) return fail("schema missing attribute " + a);
      }
      for (const auto& a : actual) {
        if (!expected.count(a)) return fail("schema has extra attribute " + a);
      }
    }
  }

  for (const auto& [key, cells] : source.rows) {
    if (!target.rows.count(key)) {
      return fail("key-set mismatch: key " + std::to_string(key) + " missing from target");
    }
  }
  for (const auto& [key, cells] : target.rows) {
    if (!source.rows.count(key)) {
      return fail("key-set mismatch: key " + std::to_string(key) + " missing from source");
    }
  }

  // Read-only attributes cannot be modified by any operation.
  for (const auto& attr : read_attrs) {
    if (attr == write_attr) continue;
    int si = source.attr_index(attr);
    int ti = target.attr_index(attr);
    for (const auto& [key, cells] : source.rows) {
      if (cells[si] != target.rows.at(key)[ti]) {
        return fail("read-only attribute " + attr + " differs at key " + std::to_string(key));
      }
    }
  }
  return report;
}

Boundary compute_boundary(const ProblemInstance& inst) {
  Boundary boundary;
  for (const auto& attr : inst.read_attrs) {
    std::set<Rat> values;
    for (const Relation* rel : {&inst.source, &inst.target}) {
      int idx = rel->attr_index(attr);
      if (idx < 0) throw std::invalid_argument("read attribute not in schema: " + attr);
      for (const auto& [key, cells] : rel->rows) values.insert(cells[idx]);
    }
    AxisBoundary axis;
    axis.values.assign(values.begin(), values.end());
    if (!axis.values.empty()) {
      axis.vmin = axis.values.front() - Rat(1);
      axis.vmax = axis.values.back() + Rat(1);
    } else {
      axis.vmin = Rat(-1);
      axis.vmax = Rat(1);
    }
    boundary.axes[attr] = axis;
  }
  return boundary;
}

SolveOutcome SolveOutcome::best(Diff d, long long cost) {
  SolveOutcome o;
  o.kind = Kind::BestDiff;
  o.diff = std::move(d);
  o.cost = cost;
  o.has_diff = true;
  return o;
}

SolveOutcome SolveOutcome::infeasible(std::string witness) {
  SolveOutcome o;
  o.kind = Kind::Infeasible;
  o.witness = std::move(witness);
  return o;
}

SolveOutcome SolveOutcome::bound(long long lower, long long upper, std::optional<Diff> best_found,
                                 long long best_cost) {
  SolveOutcome o;
  o.kind = Kind::Bound;
  o.lower = lower;
  o.upper = upper;
  if (best_found) {
    o.diff = std::move(*best_found);
    o.cost = best_cost;
    o.has_diff = true;
  }
  return o;
}

bool AffineFit::const_fittable() const {
  if (kind == Kind::Line) return true;
  return kind == Kind::Point && slope == Rat(0);
}

std::optional<Rat> AffineFit::const_value() const {
  if (kind == Kind::Line) return c0;
  if (kind == Kind::Point && slope == Rat(0)) return intercept;
  return std::nullopt;
}

bool AffineFit::nonzero_slope_available() const {
  if (kind == Kind::Line) return true;
  return kind == Kind::Point && slope != Rat(0);
}

namespace {

// Intersects the constraint "slope*b + t == c" into the fit.
AffineFit fit_add(AffineFit fit, const Rat& b, const Rat& c, bool first) {
  if (first) {
    fit.kind = AffineFit::Kind::Line;
    fit.b0 = b;
    fit.c0 = c;
    return fit;
  }
  switch (fit.kind) {
    case AffineFit::Kind::Empty:
      return fit;
    case AffineFit::Kind::Line:
      if (b == fit.b0) {
        if (c != fit.c0) fit.kind = AffineFit::Kind::Empty;
        return fit;
      }
      fit.slope = (c - fit.c0) / (b - fit.b0);
      fit.intercept = fit.c0 - fit.slope * fit.b0;
      fit.kind = AffineFit::Kind::Point;
      return fit;
    case AffineFit::Kind::Point:
      if (fit.slope * b + fit.intercept != c) fit.kind = AffineFit::Kind::Empty;
      return fit;
  }
  return fit;
}

std::string group_name(const GroupSummary& g, const std::vector<std::string>& attrs) {
  std::ostringstream os;
  os << "group (";
  for (size_t i = 0; i < g.read_values.size(); ++i) {
    if (i) os << ", ";
    os << attrs[i] << "=" << g.read_values[i].to_string();
  }
  os << ")";
  return os.str();
}

}  // namespace

std::vector<GroupSummary> group_rows(const ProblemInstance& inst) {
  std::vector<int> read_idx;
  for (const auto& attr : inst.read_attrs) {
    int idx = inst.source.attr_index(attr);
    if (idx < 0) throw std::invalid_argument("read attribute not in schema: " + attr);
    read_idx.push_back(idx);
  }
  int widx_s = inst.source.attr_index(inst.write_attr);
  int widx_t = inst.target.attr_index(inst.write_attr);
  if (widx_s < 0 || widx_t < 0) {
    throw std::invalid_argument("write attribute not in schema: " + inst.write_attr);
  }

  std::map<std::vector<Rat>, GroupSummary> groups;
  for (const auto& [key, cells] : inst.source.rows) {
    std::vector<Rat> rv;
    rv.reserve(read_idx.size());
    for (int idx : read_idx) rv.push_back(cells[idx]);
    GroupSummary& g = groups[rv];
    if (g.keys.empty()) g.read_values = rv;
    g.keys.push_back(key);
    g.pairs.emplace_back(cells[widx_s], inst.target.rows.at(key)[widx_t]);
  }

  std::vector<GroupSummary> out;
  out.reserve(groups.size());
  for (auto& [rv, g] : groups) {
    g.unchanged = true;
    g.const_target = g.pairs.front().second;
    g.shift_delta = g.pairs.front().second - g.pairs.front().first;
    bool first = true;
    for (const auto& [bs, bt] : g.pairs) {
      if (bs != bt) g.unchanged = false;
      if (g.const_target && *g.const_target != bt) g.const_target.reset();
      if (g.shift_delta && *g.shift_delta != bt - bs) g.shift_delta.reset();
      g.affine = fit_add(g.affine, bs, bt, first);
      first = false;
    }
    out.push_back(std::move(g));
  }
  return out;
}

ConsistencyReport group_consistency_check(const ProblemInstance& inst) {
  ConsistencyReport report;
  for (const auto& g : group_rows(inst)) {
    bool ok = false;
    switch (inst.family.modifier_type) {
      case ModifierType::Assign:
        ok = g.unchanged || g.const_target.has_value();
        break;
      case ModifierType::Increment:
        ok = g.shift_delta.has_value();
        break;
      case ModifierType::AssignIncrement:
        ok = g.shift_delta.has_value() || g.const_target.has_value();
        break;
      case ModifierType::Affine:
        ok = g.affine.kind != AffineFit::Kind::Empty;
        break;
    }
    if (!ok) {
      report.ok = false;
      report.witness = group_name(g, inst.read_attrs) +
                       " admits no composed map in the family's closure class";
      return report;
    }
  }
  return report;
}

}  // namespace datadiff
