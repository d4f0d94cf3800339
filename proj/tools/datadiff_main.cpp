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

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "datadiff/csv.hpp"
#include "datadiff/exhaustive.hpp"
#include "datadiff/instance.hpp"
#include "datadiff/poly.hpp"
#include "datadiff/reductions.hpp"
#include "datadiff/render.hpp"
#include "datadiff/semantics.hpp"

namespace {

using nlohmann::json;
using namespace datadiff;

// Exit codes: 0 ok/match, 1 usage or input error, 2 infeasible (diff) or
// mismatch (verify), 3 similarity violation, 4 budget exhausted, 5 compare
// violation.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitSimilarity = 3;
constexpr int kExitBudget = 4;
constexpr int kExitCompare = 5;

std::vector<std::string> split_csv_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct FamilyFlags {
  std::string cond = "leqgeq";
  std::string mod = "assign";
  long long kappa0 = -1;
  long long kappa1 = -1;

  FamilySpec parse() const {
    FamilySpec fam;
    if (cond == "eq") fam.condition_type = ConditionType::Eq;
    else if (cond == "leq") fam.condition_type = ConditionType::AtMost;
    else if (cond == "leqgeq") fam.condition_type = ConditionType::AtMostAtLeast;
    else if (cond == "range") fam.condition_type = ConditionType::Range;
    else if (cond == "union") fam.condition_type = ConditionType::RangeUnion;
    else throw CLI::ValidationError("--cond must be one of eq,leq,leqgeq,range,union");

    if (mod == "assign") fam.modifier_type = ModifierType::Assign;
    else if (mod == "inc") fam.modifier_type = ModifierType::Increment;
    else if (mod == "assigninc") fam.modifier_type = ModifierType::AssignIncrement;
    else if (mod == "affine") fam.modifier_type = ModifierType::Affine;
    else throw CLI::ValidationError("--mod must be one of assign,inc,assigninc,affine");

    if (fam.condition_type == ConditionType::RangeUnion) {
      if (kappa0 < 0 || kappa1 < 0) {
        throw CLI::ValidationError("union conditions require --kappa0 and --kappa1");
      }
      fam.kappa0 = kappa0;
      fam.kappa1 = kappa1;
    } else if (kappa0 >= 0 || kappa1 >= 0) {
      throw CLI::ValidationError("--kappa0/--kappa1 apply only to union conditions");
    }
    return fam;
  }
};

struct IoFlags {
  std::string source;
  std::string target;
  std::string key = "K";
  std::string read_list = "A";
  std::string write = "B";
};

ProblemInstance load_instance(const IoFlags& io, const FamilySpec& fam) {
  ProblemInstance inst;
  inst.key_attr = io.key;
  inst.read_attrs = split_csv_list(io.read_list);
  inst.write_attr = io.write;
  inst.family = fam;
  inst.source = load_relation_csv(io.source, io.key);
  inst.target = load_relation_csv(io.target, io.key);
  return inst;
}

struct Dispatched {
  SolveOutcome outcome;
  std::string solver;
};

// The affine candidate-map search is exhaustive over a finite state-derived
// family whose completeness is unproven; its minima are labeled accordingly.
std::string optimality_label(const std::string& solver, const FamilySpec& fam,
                             const std::string& mode) {
  if (mode == "approx") return "approximate";
  if (solver == "exhaustive-sequential" && fam.modifier_type == ModifierType::Affine) {
    return "candidate-optimal";
  }
  return "exact";
}

Dispatched dispatch_solve(const ProblemInstance& inst, const std::string& mode,
                          const SearchBudget& budget) {
  bool rw = inst.read_write();
  if (mode == "approx") {
    if (inst.read_attrs.size() == 1 && !rw &&
        inst.family.condition_type == ConditionType::AtMostAtLeast &&
        inst.family.modifier_type == ModifierType::Increment) {
      return {approx_leqgeq_increment(inst), "approx-leqgeq-increment"};
    }
    if (inst.read_attrs.size() == 1 && !rw &&
        inst.family.condition_type == ConditionType::Range &&
        inst.family.modifier_type == ModifierType::Increment) {
      return {approx_range_increment(inst), "approx-range-increment"};
    }
    throw std::runtime_error("no approximation algorithm exists for this family");
  }
  if (mode == "exact" && poly_exact_cell(inst.family, inst.read_attrs.size(), rw)) {
    return {solve_exact_poly(inst), "poly"};
  }
  if (inst.family.modifier_type == ModifierType::Increment) {
    return {solve_increment_commutative(inst, budget), "exhaustive-commutative"};
  }
  return {solve_sequential_search(inst, budget), "exhaustive-sequential"};
}

json outcome_report(const SolveOutcome& out, long long millis, const std::string& solver) {
  json report;
  report["solver"] = solver;
  report["millis"] = millis;
  report["cost"] = 0;
  report["ops"] = 0;
  report["totalRangeCount"] = 0;
  report["lower"] = 0;
  report["upper"] = 0;
  switch (out.kind) {
    case SolveOutcome::Kind::BestDiff:
      report["outcome"] = "best";
      report["cost"] = out.cost;
      report["ops"] = out.diff.ops.size();
      report["totalRangeCount"] = total_range_count(out.diff);
      break;
    case SolveOutcome::Kind::Infeasible:
      report["outcome"] = "infeasible";
      report["witness"] = out.witness;
      break;
    case SolveOutcome::Kind::Bound:
      report["outcome"] = "bound";
      report["lower"] = out.lower;
      report["upper"] = out.upper;
      if (out.has_diff) {
        report["cost"] = out.cost;
        report["ops"] = out.diff.ops.size();
        report["totalRangeCount"] = total_range_count(out.diff);
      }
      break;
  }
  return report;
}

void write_report(const json& report, const std::string& path) {
  if (path.empty()) return;
  write_text_file(report.dump(2) + "\n", path);
}

int cmd_diff(const IoFlags& io, const FamilyFlags& fflags, const std::string& mode,
             const SearchBudget& budget, const std::string& out_path,
             const std::string& report_path) {
  FamilySpec fam = fflags.parse();
  ProblemInstance inst = load_instance(io, fam);

  SimilarityReport sim =
      check_similarity(inst.key_attr, inst.read_attrs, inst.write_attr, inst.source, inst.target);
  if (!sim.ok) {
    json report;
    report["outcome"] = "similarity-violation";
    report["detail"] = sim.detail;
    write_report(report, report_path);
    std::cerr << "similarity violation: " << sim.detail << "\n";
    return kExitSimilarity;
  }

  auto start = std::chrono::steady_clock::now();
  Dispatched solved = dispatch_solve(inst, mode, budget);
  auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();

  json report = outcome_report(solved.outcome, millis, solved.solver);
  if (solved.outcome.kind == SolveOutcome::Kind::BestDiff) {
    report["optimality"] = optimality_label(solved.solver, fam, mode);
  }
  if (solved.outcome.kind == SolveOutcome::Kind::Infeasible) {
    write_report(report, report_path);
    std::cerr << "infeasible: " << solved.outcome.witness << "\n";
    return kExitInfeasible;
  }

  std::string header;
  if (solved.outcome.kind == SolveOutcome::Kind::Bound) header = "-- UPPER BOUND ONLY\n";
  if (solved.outcome.has_diff) {
    Applied applied = apply_diff(inst.source, solved.outcome.diff);
    bool match = applied.relation == inst.target;
    if (solved.outcome.kind == SolveOutcome::Kind::BestDiff && !match) {
      std::cerr << "internal error: emitted diff does not verify\n";
      return kExitError;
    }
    report["verification"] = match ? "match" : "upper-bound-only";
    std::string script = header + render_sql(solved.outcome.diff, "R");
    if (!out_path.empty()) write_text_file(script, out_path);
    std::cout << script;
  }
  write_report(report, report_path);
  if (solved.outcome.kind == SolveOutcome::Kind::Bound) {
    std::cerr << "budget exhausted: lower " << solved.outcome.lower << ", upper "
              << solved.outcome.upper << "\n";
    return kExitBudget;
  }
  std::cout << "cost " << solved.outcome.cost << "\n";
  return kExitOk;
}

int cmd_verify(const IoFlags& io, const FamilyFlags& fflags, const std::string& script_path,
               const std::string& report_path) {
  FamilySpec fam = fflags.parse();
  ProblemInstance inst = load_instance(io, fam);

  std::ifstream in(script_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + script_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Diff diff = parse_script(buf.str());

  Applied applied = apply_diff(inst.source, diff);
  json report;
  report["cost"] = diff_cost(diff, fam);
  report["ops"] = diff.ops.size();
  report["totalRangeCount"] = total_range_count(diff);
  report["nonIntegral"] = applied.non_integral;
  if (applied.relation == inst.target) {
    report["outcome"] = "match";
    write_report(report, report_path);
    std::cout << "match (cost " << report["cost"] << ")\n";
    return kExitOk;
  }
  report["outcome"] = "mismatch";
  for (const auto& [key, cells] : applied.relation.rows) {
    if (cells != inst.target.rows.at(key)) {
      report["firstMismatchKey"] = key;
      break;
    }
  }
  if (applied.non_integral) report["detail"] = "a rewritten cell is not an integer";
  write_report(report, report_path);
  std::cout << "mismatch at key " << report["firstMismatchKey"] << "\n";
  return kExitInfeasible;
}

int cmd_compare(const IoFlags& io, const FamilyFlags& fflags, const std::string& mode,
                const SearchBudget& budget, const std::string& report_path) {
  FamilySpec fam = fflags.parse();
  ProblemInstance inst = load_instance(io, fam);
  if (inst.source.rows.size() > 24) throw std::runtime_error("compare capped at 24 rows");
  Boundary boundary = compute_boundary(inst);
  for (const auto& [attr, axis] : boundary.axes) {
    if (axis.values.size() > 10) {
      throw std::runtime_error("compare capped at 10 distinct values per read attribute");
    }
  }

  auto start = std::chrono::steady_clock::now();
  Dispatched solved = dispatch_solve(inst, mode, budget);
  SolveOutcome oracle = solve_exhaustive(inst, budget);
  auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();

  json report = outcome_report(solved.outcome, millis, solved.solver);
  if (solved.outcome.kind == SolveOutcome::Kind::BestDiff) {
    report["optimality"] = optimality_label(solved.solver, fam, mode);
  }
  report["oracleOutcome"] = oracle.kind == SolveOutcome::Kind::BestDiff ? "best"
                            : oracle.kind == SolveOutcome::Kind::Infeasible ? "infeasible"
                                                                            : "bound";
  if (oracle.kind == SolveOutcome::Kind::BestDiff) report["oracleCost"] = oracle.cost;

  bool ok = true;
  if (solved.outcome.kind == SolveOutcome::Kind::BestDiff &&
      oracle.kind == SolveOutcome::Kind::BestDiff) {
    if (mode == "approx") {
      bool additive = fam.condition_type == ConditionType::AtMostAtLeast;
      ok = additive ? solved.outcome.cost <= oracle.cost + 1
                    : solved.outcome.cost <= 2 * oracle.cost;
    } else {
      ok = solved.outcome.cost == oracle.cost;
    }
  } else {
    ok = (solved.outcome.kind == SolveOutcome::Kind::BestDiff) ==
         (oracle.kind == SolveOutcome::Kind::BestDiff);
  }
  report["agreement"] = ok;
  write_report(report, report_path);
  std::cout << report.dump(2) << "\n";
  return ok ? kExitOk : kExitCompare;
}

int cmd_generate(const std::string& kind, const std::string& elements, long long t,
                 long long block_size, long long multiplicity, const std::string& polygon,
                 long long rows, unsigned seed, const IoFlags& io,
                 const std::string& report_path) {
  ReducedInstance red;
  json meta;
  meta["kind"] = kind;

  auto parse_elements = [&]() {
    SubsetSumInstance ss;
    for (const auto& tok : split_csv_list(elements)) ss.elements.push_back(std::stoll(tok));
    ss.target = t;
    return ss;
  };
  auto parse_strings = [&]() {
    Scs2Instance s2;
    for (const auto& tok : split_csv_list(elements)) {
      if (tok.size() != 2 || !isdigit(tok[0]) || !isdigit(tok[1])) {
        throw std::runtime_error("scs strings must be two digits each (symbols 1..9)");
      }
      s2.strings.push_back({tok[0] - '0', tok[1] - '0'});
    }
    s2.max_length = t;
    s2.distinct = true;
    return s2;
  };
  auto random_bd1 = [&](ConditionType cond, ModifierType mod) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long long> a_dist(0, 3), b_dist(-4, 4);
    std::vector<std::pair<long long, std::vector<long long>>> src, tgt;
    std::map<long long, long long> group_shift;
    for (long long k = 0; k < rows; ++k) {
      long long a = a_dist(rng);
      long long b = b_dist(rng);
      if (!group_shift.count(a)) group_shift[a] = b_dist(rng);
      src.push_back({k, {a, b}});
      tgt.push_back({k, {a, b + group_shift[a]}});
    }
    ProblemInstance inst;
    inst.key_attr = "K";
    inst.read_attrs = {"A"};
    inst.write_attr = "B";
    inst.family = {cond, mod, 0, 0};
    Relation s, g;
    s.key_attr = g.key_attr = "K";
    s.attrs = g.attrs = {"A", "B"};
    for (auto& [k, cells] : src) s.rows[k] = {Rat(cells[0]), Rat(cells[1])};
    for (auto& [k, cells] : tgt) g.rows[k] = {Rat(cells[0]), Rat(cells[1])};
    inst.source = std::move(s);
    inst.target = std::move(g);
    return inst;
  };

  if (kind == "subsetsum-lgeq") {
    red = reduce_subsetsum_to_leqgeq_increment(parse_elements());
  } else if (kind == "subsetsum-affine") {
    red = reduce_subsetsum_to_affine_blocks(parse_elements(), block_size);
  } else if (kind == "scs-union") {
    red = reduce_2distinctscs_to_union_assign(parse_strings());
  } else if (kind == "multi-eq") {
    red = reduce_bd1_range_to_multi_eq(random_bd1(ConditionType::Range, ModifierType::Increment));
  } else if (kind == "multi-leq") {
    red = reduce_bd1_range_to_multi_atmost(
        random_bd1(ConditionType::Range, ModifierType::Increment));
  } else if (kind == "rectcover") {
    RectCoverInstance rc;
    for (const auto& vtx : split_csv_list(polygon)) {
      auto sep = vtx.find(':');
      if (sep == std::string::npos) throw std::runtime_error("polygon format: x:y,x:y,...");
      rc.vertices.push_back({std::stoll(vtx.substr(0, sep)), std::stoll(vtx.substr(sep + 1))});
    }
    rc.cover_size = t;
    red = reduce_rectcover_to_multi_range_assign(rc, multiplicity);
  } else if (kind == "random") {
    red.instance = random_bd1(ConditionType::AtMostAtLeast, ModifierType::Assign);
    red.predicate = "none (random instance)";
  } else {
    throw std::runtime_error("unknown generator kind: " + kind);
  }

  write_relation_csv(red.instance.source, io.source);
  write_relation_csv(red.instance.target, io.target);
  meta["key"] = red.instance.key_attr;
  meta["read"] = red.instance.read_attrs;
  meta["write"] = red.instance.write_attr;
  meta["cond"] = to_string(red.instance.family.condition_type);
  meta["mod"] = to_string(red.instance.family.modifier_type);
  meta["kappa0"] = red.instance.family.kappa0;
  meta["kappa1"] = red.instance.family.kappa1;
  meta["threshold"] = red.threshold;
  meta["predicate"] = red.predicate;
  write_report(meta, report_path.empty() ? io.source + ".meta.json" : report_path);
  std::cout << "wrote " << io.source << " and " << io.target << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"datadiff: synthesize minimum-cost SQL UPDATE scripts between table versions"};
  app.require_subcommand(1);

  IoFlags io;
  FamilyFlags fam;
  std::string mode = "exact";
  std::string out_path, report_path, script_path;
  SearchBudget budget;
  std::string gen_kind, gen_elements, gen_polygon;
  long long gen_t = 1, gen_block = 99, gen_mult = 99, gen_rows = 6;
  unsigned gen_seed = 1;

  auto add_common = [&](CLI::App* cmd, bool need_files) {
    auto* s = cmd->add_option("--source", io.source, "source CSV");
    auto* t = cmd->add_option("--target", io.target, "target CSV");
    if (need_files) {
      s->required();
      t->required();
    }
    cmd->add_option("--key", io.key, "key column name");
    cmd->add_option("--read", io.read_list, "read columns, comma separated");
    cmd->add_option("--write", io.write, "write column");
    cmd->add_option("--cond", fam.cond, "condition type: eq,leq,leqgeq,range,union");
    cmd->add_option("--mod", fam.mod, "modifier type: assign,inc,assigninc,affine");
    cmd->add_option("--kappa0", fam.kappa0, "union per-operation cost");
    cmd->add_option("--kappa1", fam.kappa1, "union per-range cost");
    cmd->add_option("--depth-cap", budget.depth_cap, "search depth cap");
    cmd->add_option("--node-cap", budget.node_cap, "search node cap");
    cmd->add_option("--report", report_path, "JSON report path");
  };

  auto* diff = app.add_subcommand("diff", "synthesize a best diff and emit SQL");
  add_common(diff, true);
  diff->add_option("--mode", mode, "exact, approx, or oracle");
  diff->add_option("--out", out_path, "script output path");

  auto* verify = app.add_subcommand("verify", "apply a script to source and compare to target");
  add_common(verify, true);
  verify->add_option("--script", script_path, "SQL script to verify")->required();

  auto* compare = app.add_subcommand("compare", "run solver and exhaustive oracle, check agreement");
  add_common(compare, true);
  compare->add_option("--mode", mode, "exact or approx");

  auto* generate = app.add_subcommand("generate", "emit reduction or random instances");
  add_common(generate, true);
  generate->add_option("--kind", gen_kind,
                       "subsetsum-lgeq, subsetsum-affine, scs-union, multi-eq, multi-leq, "
                       "rectcover, random")
      ->required();
  generate->add_option("--S", gen_elements, "comma-separated elements or two-digit strings");
  generate->add_option("--t", gen_t, "decision threshold");
  generate->add_option("--block-size", gen_block, "affine reduction block size");
  generate->add_option("--multiplicity", gen_mult, "rectangle cover rows per cell");
  generate->add_option("--polygon", gen_polygon, "vertices as x:y,x:y,...");
  generate->add_option("--rows", gen_rows, "random instance row count");
  generate->add_option("--seed", gen_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    if (app.got_subcommand(diff)) {
      if (mode != "exact" && mode != "approx" && mode != "oracle") {
        throw std::runtime_error("--mode must be exact, approx, or oracle");
      }
      std::string effective = mode == "oracle" ? "oracle" : mode;
      return cmd_diff(io, fam, effective, budget, out_path, report_path);
    }
    if (app.got_subcommand(verify)) return cmd_verify(io, fam, script_path, report_path);
    if (app.got_subcommand(compare)) return cmd_compare(io, fam, mode, budget, report_path);
    if (app.got_subcommand(generate)) {
      return cmd_generate(gen_kind, gen_elements, gen_t, gen_block, gen_mult, gen_polygon,
                          gen_rows, gen_seed, io, report_path);
    }
  } catch (const ParseError& e) {
    std::cerr << "script parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
