// Copyright 2026 The splitlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// splitlab command-line front end.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitlab/field.hpp"
#include "splitlab/linalg.hpp"
#include "splitlab/poly.hpp"
#include "splitlab/sigma_lfsr.hpp"
#include "splitlab/splitting.hpp"
#include "splitlab/tower.hpp"
#include "splitlab/verify.hpp"

namespace {

using namespace splitlab;
using json = nlohmann::ordered_json;

constexpr int kErrorExit = 3;

FieldPtr field_from(const std::string& spec) {
  const auto [p, e] = parse_field_spec(spec);
  return build_field(p, e);
}

json big_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(~std::uint64_t{0})) return static_cast<std::uint64_t>(v);
  return v.str();
}

const char* verdict_word(bool ok) { return ok ? "match" : "mismatch"; }

struct CoprimeArgs {
  std::string q = "2";
  unsigned n1 = 1, n2 = 1;
  std::string method = "both";
};

int run_coprime(const CoprimeArgs& a) {
  const auto ctx = field_from(a.q);
  std::optional<BigInt> closed, brute;
  if (a.method != "brute") closed = coprime_pair_count(a.n1, a.n2, ctx, CountMethod::closed);
  if (a.method != "closed") brute = coprime_pair_count(a.n1, a.n2, ctx, CountMethod::brute);
  if (closed) std::cout << "closed: " << closed->str() << "\n";
  if (brute) std::cout << "brute: " << brute->str() << "\n";
  if (closed && brute) {
    std::cout << "verdict: " << verdict_word(*closed == *brute) << "\n";
    return *closed == *brute ? 0 : 1;
  }
  return 0;
}

struct NilpotentArgs {
  unsigned m = 2;
  std::uint64_t q = 2;
  std::string method = "both";
};

int run_nilpotent(const NilpotentArgs& a) {
  std::optional<BigInt> closed, brute;
  if (a.method != "brute") closed = count_nilpotent(a.m, a.q, CountMethod::closed);
  if (a.method != "closed") brute = count_nilpotent(a.m, a.q, CountMethod::brute);
  if (closed) std::cout << "closed: " << closed->str() << "\n";
  if (brute) std::cout << "brute: " << brute->str() << "\n";
  if (closed && brute) {
    std::cout << "verdict: " << verdict_word(*closed == *brute) << "\n";
    return *closed == *brute ? 0 : 1;
  }
  return 0;
}

struct SplitArgs {
  std::string q = "2";
  unsigned m = 2, n = 2;
  std::string poly, alpha, pointed;
  bool formula_only = false;
  bool prefer_primitive = false;
  bool timing = false;
  std::size_t witnesses = 0;
};

int run_count_splitting(const SplitArgs& a) {
  const auto base = field_from(a.q);
  std::optional<Poly> f;
  if (!a.poly.empty()) f = parse_poly_literal(base, a.poly);
  const auto tower = build_extension(base, a.m * a.n, f, a.prefer_primitive);
  std::optional<FieldElement> alpha;
  if (!a.alpha.empty()) alpha = tower->from_coords(parse_code_list(a.alpha));
  const SplitInstance inst(tower, a.m, a.n, alpha);

  const BigInt formula = ssc_formula(base->order(), a.m, a.n);
  json out;
  out["q"] = base->order();
  out["m"] = a.m;
  out["n"] = a.n;
  out["defining_poly"] = tower->defining_poly().literal();
  out["alpha"] = format_code_list(inst.alpha().coords);
  int status = 0;
  if (a.formula_only) {
    out["brute"] = nullptr;
    out["formula"] = big_json(formula);
    out["status"] = to_string(ssc_status(a.m, a.n));
    out["verdict"] = nullptr;
    out["seconds"] = nullptr;
  } else {
    const auto report = count_splitting(inst);
    out["brute"] = big_json(report.brute_count);
    out["formula"] = big_json(formula);
    out["status"] = to_string(report.status);
    out["verdict"] = to_string(report.verdict);
    out["seconds"] = a.timing ? json(report.elapsed) : json(nullptr);
    if (!report.notes.empty()) out["notes"] = report.notes;
    if (report.verdict == Match::mismatch) status = report.status == FormulaStatus::proved ? 1 : 2;
  }
  if (!a.pointed.empty()) {
    const auto x = tower->from_coords(parse_code_list(a.pointed));
    json p;
    p["x"] = a.pointed;
    p["brute"] = a.formula_only ? json(nullptr) : big_json(count_pointed(inst, x));
    p["formula"] = big_json(big_pow(base->order(), std::uint64_t{a.m} * (a.m - 1) * (a.n - 1)));
    out["pointed"] = std::move(p);
  }
  if (a.witnesses > 0) {
    json list = json::array();
    for (const auto& W : splitting_witnesses(inst, a.witnesses)) list.push_back(W.basis().literal());
    out["witnesses"] = std::move(list);
  }
  std::cout << out.dump(2) << "\n";
  return status;
}

struct VerifyArgs {
  std::string statement = "SSC";
  std::string grid;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 0;
  bool timing = false;
};

int run_verify(const VerifyArgs& a) {
  VerificationJob job;
  job.statement = parse_statement(a.statement);
  job.grid = a.grid.empty() ? default_grid(job.statement) : parse_grid(job.statement, a.grid);
  job.seed = a.seed;
  job.timing = a.timing;
  const auto verdict = verify(job);
  emit(verdict, parse_format(a.format), a.out);
  return verdict.exit_status();
}

struct LfsrArgs {
  std::string q = "2";
  unsigned m = 1, n = 2;
  std::string C, init;
  std::uint64_t steps = 10;
};

BlockRecurrence recurrence_from(const LfsrArgs& a) {
  const auto ctx = field_from(a.q);
  return make_recurrence(ctx, a.m, a.n, parse_block_list(ctx, a.m, a.C));
}

int run_simulate(const LfsrArgs& a) {
  const auto rec = recurrence_from(a);
  for (const auto& w : simulate(rec, parse_state(rec, a.init), a.steps)) std::cout << format_code_list(w) << "\n";
  return 0;
}

int run_period(const LfsrArgs& a) {
  const auto rec = recurrence_from(a);
  const auto r = period_preperiod(rec, parse_state(rec, a.init));
  std::cout << "preperiod: " << r.preperiod << "\nperiod: " << r.period
            << "\nperiodic: " << (r.periodic ? "true" : "false") << "\n";
  return 0;
}

struct CensusArgs {
  std::string q = "2";
  unsigned m = 2, n = 2;
  std::string method = "both";
  std::string mode = "order";
};

int run_singer(const CensusArgs& a) {
  const auto ctx = field_from(a.q);
  const auto mode = a.mode == "definitional" ? PrimitivityMode::definitional : PrimitivityMode::order;
  std::optional<BigInt> scan, formula;
  if (a.method != "formula") scan = census_singer(a.m, a.n, ctx->order(), CensusMethod::scan, mode);
  if (a.method != "scan") formula = census_singer(a.m, a.n, ctx->order(), CensusMethod::formula, mode);
  if (scan) std::cout << "scan: " << scan->str() << "\n";
  if (formula) {
    std::cout << "formula: " << formula->str() << " [" << to_string(census_status(a.m, a.n)) << "]\n";
  }
  if (scan && formula) {
    std::cout << "verdict: " << verdict_word(*scan == *formula) << "\n";
    if (*scan != *formula) return census_status(a.m, a.n) == FormulaStatus::proved ? 1 : 2;
  }
  return 0;
}

struct FiberArgs {
  std::string q = "2";
  unsigned m = 2, n = 2;
  std::string poly;
  bool all_irreducible = false;
  bool all_primitive = false;
};

int run_fiber(const FiberArgs& a) {
  const auto ctx = field_from(a.q);
  const unsigned d = a.m * a.n;
  const auto census = fiber_census(ctx, a.m, a.n);
  auto scan_of = [&](const Poly& f) {
    const auto it = census.find(*f.rank_code());
    return it == census.end() ? BigInt(0) : it->second;
  };

  std::vector<Poly> polys;
  if (!a.poly.empty()) {
    polys.push_back(parse_poly_literal(ctx, a.poly));
  } else if (a.all_primitive) {
    polys = find_irreducibles(ctx, d, IrreducibleFilter::primitive_only);
  } else if (a.all_irreducible) {
    polys = find_irreducibles(ctx, d, IrreducibleFilter::all);
  }

  int status = 0;
  if (polys.empty() && a.poly.empty() && !a.all_primitive && !a.all_irreducible) {
    BigInt total = 0;
    for (const auto& [rank, count] : census) {
      std::cout << "f=" << Poly::from_rank(ctx, rank).literal() << " scan=" << count.str() << "\n";
      total += count;
    }
    std::cout << "total=" << total.str() << "\n";
    return 0;
  }
  for (const auto& f : polys) {
    const BigInt scan = scan_of(f);
    std::cout << "f=" << f.literal() << " scan=" << scan.str();
    if (is_irreducible(f)) {
      const BigInt formula = fiber_count(f, a.m, a.n, FiberMethod::formula);
      const BigInt bridge = fiber_count(f, a.m, a.n, FiberMethod::bridge);
      const bool ok = scan == formula && scan == bridge;
      std::cout << " formula=" << formula.str() << " bridge=" << bridge.str() << " ["
                << to_string(census_status(a.m, a.n)) << "] " << verdict_word(ok);
      if (!ok) status = std::max(status, census_status(a.m, a.n) == FormulaStatus::proved ? 1 : 2);
    }
    std::cout << "\n";
  }
  return status;
}

void add_lfsr_options(CLI::App* cmd, LfsrArgs& a) {
  cmd->add_option("--q", a.q, "field order or p^e")->default_val("2");
  cmd->add_option("--m", a.m, "word width")->required();
  cmd->add_option("--n", a.n, "recurrence order")->required();
  cmd->add_option("--C", a.C, "coefficient matrices \"M0|M1|...\"")->required();
  cmd->add_option("--init", a.init, "initial state \"w0|w1|...\"")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitlab: splitting subspaces and block recurrences over finite fields"};
  app.require_subcommand(1);
  int status = 0;

  CoprimeArgs coprime;
  auto* cmd = app.add_subcommand("coprime-census", "count coprime polynomial pairs");
  cmd->add_option("--q", coprime.q)->required();
  cmd->add_option("--n1", coprime.n1)->required();
  cmd->add_option("--n2", coprime.n2)->required();
  cmd->add_option("--method", coprime.method)->check(CLI::IsMember({"closed", "brute", "both"}));
  cmd->callback([&] { status = run_coprime(coprime); });

  long qa = 0, qb = 0;
  std::uint64_t qq = 2;
  cmd = app.add_subcommand("qbinom", "Gaussian binomial [a b]_q");
  cmd->add_option("a", qa)->required();
  cmd->add_option("b", qb)->required();
  cmd->add_option("q", qq)->required();
  cmd->callback([&] { std::cout << gaussian_binomial(qa, qb, qq).str() << "\n"; });

  NilpotentArgs nil;
  cmd = app.add_subcommand("nilpotent-census", "count nilpotent m x m matrices");
  cmd->add_option("m", nil.m)->required();
  cmd->add_option("q", nil.q)->required();
  cmd->add_option("--method", nil.method)->check(CLI::IsMember({"closed", "brute", "both"}));
  cmd->callback([&] { status = run_nilpotent(nil); });

  SplitArgs split;
  cmd = app.add_subcommand("count-splitting", "count alpha-splitting subspaces");
  cmd->add_option("--q", split.q)->required();
  cmd->add_option("--m", split.m)->required();
  cmd->add_option("--n", split.n)->required();
  cmd->add_option("--poly", split.poly, "defining polynomial literal");
  cmd->add_option("--alpha", split.alpha, "generator coordinates");
  cmd->add_option("--pointed", split.pointed, "base point coordinates");
  cmd->add_option("--witnesses", split.witnesses, "list this many splitting subspaces");
  cmd->add_flag("--formula-only", split.formula_only);
  cmd->add_flag("--prefer-primitive", split.prefer_primitive);
  cmd->add_flag("--timing", split.timing);
  cmd->callback([&] { status = run_count_splitting(split); });

  VerifyArgs vssc;
  cmd = app.add_subcommand("verify-ssc", "brute counts against the closed form over a grid");
  cmd->add_option("--grid", vssc.grid, "\"q,m,n;...\"");
  cmd->add_option("--format", vssc.format)->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", vssc.out);
  cmd->add_flag("--timing", vssc.timing);
  cmd->callback([&] { status = run_verify(vssc); });

  VerifyArgs ver;
  cmd = app.add_subcommand("verify", "run a named statement over a grid");
  cmd->add_option("--statement", ver.statement)->required();
  cmd->add_option("--grid", ver.grid);
  cmd->add_option("--format", ver.format)->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", ver.out);
  cmd->add_option("--seed", ver.seed);
  cmd->add_flag("--timing", ver.timing);
  cmd->callback([&] { status = run_verify(ver); });

  auto* lfsr = app.add_subcommand("lfsr", "block recurrences");
  lfsr->require_subcommand(1);
  LfsrArgs sim;
  cmd = lfsr->add_subcommand("simulate", "print output words");
  add_lfsr_options(cmd, sim);
  cmd->add_option("--steps", sim.steps);
  cmd->callback([&] { status = run_simulate(sim); });
  LfsrArgs per;
  cmd = lfsr->add_subcommand("period", "preperiod and period of one orbit");
  add_lfsr_options(cmd, per);
  cmd->callback([&] { status = run_period(per); });

  CensusArgs singer;
  cmd = app.add_subcommand("singer-census", "count block companion Singer cycles");
  cmd->add_option("--q", singer.q)->required();
  cmd->add_option("--m", singer.m)->required();
  cmd->add_option("--n", singer.n)->required();
  cmd->add_option("--method", singer.method)->check(CLI::IsMember({"scan", "formula", "both"}));
  cmd->add_option("--mode", singer.mode)->check(CLI::IsMember({"order", "definitional"}));
  cmd->callback([&] { status = run_singer(singer); });

  FiberArgs fiber;
  cmd = app.add_subcommand("fiber-census", "block companion matrices per characteristic polynomial");
  cmd->add_option("--q", fiber.q)->required();
  cmd->add_option("--m", fiber.m)->required();
  cmd->add_option("--n", fiber.n)->required();
  auto* poly = cmd->add_option("--poly", fiber.poly);
  auto* irr = cmd->add_flag("--all-irreducible", fiber.all_irreducible);
  auto* prim = cmd->add_flag("--all-primitive", fiber.all_primitive);
  poly->excludes(irr, prim);
  irr->excludes(prim);
  cmd->callback([&] { status = run_fiber(fiber); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kErrorExit;
  }
  return status;
}
