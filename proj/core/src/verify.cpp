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

#include "splitlab/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "splitlab/linalg.hpp"
#include "splitlab/poly.hpp"
#include "splitlab/sigma_lfsr.hpp"
#include "splitlab/splitting.hpp"
#include "splitlab/tower.hpp"

namespace splitlab {
namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

struct StatementInfo {
  Statement id;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<StatementInfo, 16> kStatements{{
    {Statement::SSC, "SSC", 3},
    {Statement::PSSC, "PSSC", 3},
    {Statement::LOWER_BOUND, "LOWER_BOUND", 3},
    {Statement::M2_THEOREM, "M2_THEOREM", 3},
    {Statement::SPLITANDBASES, "SPLITANDBASES", 3},
    {Statement::NOBASES, "NOBASES", 3},
    {Statement::GENBB, "GENBB", 3},
    {Statement::ELEMSPLIT, "ELEMSPLIT", 3},
    {Statement::WEAK_SSC, "WEAK_SSC", 3},
    {Statement::ENDO_SSC, "ENDO_SSC", 2},
    {Statement::NILPOTENT, "NILPOTENT", 2},
    {Statement::PVRC, "PVRC", 3},
    {Statement::BCSCC, "BCSCC", 3},
    {Statement::PFC, "PFC", 3},
    {Statement::IFC, "IFC", 3},
    {Statement::CHAIN, "CHAIN", 3},
}};

const StatementInfo& info(Statement s) {
  return *std::find_if(kStatements.begin(), kStatements.end(), [s](const auto& i) { return i.id == s; });
}

std::string qmn(const GridPoint& p) {
  return "q=" + std::to_string(p[0]) + ",m=" + std::to_string(p[1]) + ",n=" + std::to_string(p[2]);
}

unsigned narrow(std::uint64_t v) {
  if (v == 0 || v > 64) throw Error(Errc::BadArgs, "grid parameter " + std::to_string(v) + " out of range");
  return static_cast<unsigned>(v);
}

VerdictRow make_row(Statement s, const GridPoint& p, std::string params, BigInt brute, BigInt formula,
                    FormulaStatus status) {
  VerdictRow row;
  row.statement = s;
  row.point = p;
  row.params = std::move(params);
  row.verdict = brute == formula ? RowVerdict::match : RowVerdict::mismatch;
  row.brute = std::move(brute);
  row.formula = std::move(formula);
  row.status = status;
  return row;
}

VerdictRow skipped_row(Statement s, const GridPoint& p, std::string params, std::string note) {
  VerdictRow row;
  row.statement = s;
  row.point = p;
  row.params = std::move(params);
  row.verdict = RowVerdict::skipped;
  row.note = std::move(note);
  return row;
}

std::string point_params(Statement s, const GridPoint& p) {
  switch (s) {
    case Statement::GENBB:
      return "q=" + std::to_string(p[0]) + ",N1=" + std::to_string(p[1]) + ",N2=" + std::to_string(p[2]);
    case Statement::NILPOTENT: return "q=" + std::to_string(p[0]) + ",m=" + std::to_string(p[1]);
    case Statement::ENDO_SSC: return "q=" + std::to_string(p[0]) + ",n=" + std::to_string(p[1]);
    default: return qmn(p);
  }
}

using Rows = std::vector<VerdictRow>;

Rows run_point(Statement s, const GridPoint& p, const VerificationJob& job) {
  const auto& bounds = job.bounds;
  const std::string params = point_params(s, p);
  const std::uint64_t q = p[0];

  if (s == Statement::GENBB) {
    const auto ctx = field_of_order(q);
    const unsigned n1 = narrow(p[1]), n2 = narrow(p[2]);
    return {make_row(s, p, params, coprime_pair_count(n1, n2, ctx, CountMethod::brute, bounds),
                     coprime_pair_count(n1, n2, ctx, CountMethod::closed, bounds), FormulaStatus::proved)};
  }
  if (s == Statement::NILPOTENT) {
    const unsigned m = narrow(p[1]);
    return {make_row(s, p, params, count_nilpotent(m, q, CountMethod::brute, bounds),
                     count_nilpotent(m, q, CountMethod::closed, bounds), FormulaStatus::proved)};
  }
  if (s == Statement::ENDO_SSC) {
    const unsigned n = narrow(p[1]);
    const auto ctx = field_of_order(q);
    BigInt brute = 0, formula = 0;
    std::size_t polys = 0, bad = 0;
    for_each_monic(
        ctx, n,
        [&](const Poly& f) {
          const BigInt b = count_T_splitting(companion_matrix(f), 1, n, bounds);
          const BigInt e = endo_formula(f, bounds);
          brute += b;
          formula += e;
          ++polys;
          if (b != e) ++bad;
        },
        bounds);
    auto row = make_row(s, p, params, brute, formula, FormulaStatus::proved);
    row.note = "summed over " + std::to_string(polys) + " monic polynomials";
    if (bad != 0) {
      row.verdict = RowVerdict::mismatch;
      row.note += ", " + std::to_string(bad) + " differ";
    }
    return {row};
  }

  const unsigned m = narrow(p[1]), n = narrow(p[2]);
  const FormulaStatus status = ssc_status(m, n);

  switch (s) {
    case Statement::SSC: {
      const auto report = count_splitting(make_instance(q, m, n), bounds);
      auto row = make_row(s, p, params, report.brute_count, *report.formula_count, report.status);
      if (!report.notes.empty()) row.note = report.notes.front();
      return {row};
    }
    case Statement::PSSC: {
      const auto inst = make_instance(q, m, n);
      return {make_row(s, p, params + ",x=1", count_pointed(inst, inst.tower().one(), bounds),
                       big_pow(q, std::uint64_t{m} * (m - 1) * (n - 1)), status)};
    }
    case Statement::LOWER_BOUND: {
      const BigInt S = count_splitting(make_instance(q, m, n), bounds).brute_count;
      const BigInt bound = splitting_lower_bound(q, m, n);
      auto row = make_row(s, p, params, S, bound, FormulaStatus::proved);
      row.verdict = S >= bound ? RowVerdict::match : RowVerdict::mismatch;
      row.note = "brute >= formula";
      return {row};
    }
    case Statement::M2_THEOREM: {
      if (m != 2) return {skipped_row(s, p, params, "statement fixes m = 2")};
      const BigInt S = count_splitting(make_instance(q, m, n), bounds).brute_count;
      auto row = make_row(s, p, params, S, ssc_formula(q, m, n), FormulaStatus::proved);
      if (n == 2) {
        const BigInt alt = two_by_two_count(q);
        row.note = "[4 2]_q - [4 1]_q = " + alt.str();
        if (alt != S) row.verdict = RowVerdict::mismatch;
      }
      return {row};
    }
    case Statement::SPLITANDBASES: {
      const auto report = count_splitting_bases(make_instance(q, m, n), bounds);
      if (!report.direct) return {skipped_row(s, p, params, "ordered tuple scan exceeds scan bound")};
      auto row = make_row(s, p, params, *report.direct, report.product, FormulaStatus::proved);
      row.note = "formula = S * |GL_m|";
      return {row};
    }
    case Statement::NOBASES: {
      if (m != 2) return {skipped_row(s, p, params, "statement fixes m = 2")};
      const auto report = count_splitting_bases(make_instance(q, m, n), bounds);
      auto row = make_row(s, p, params, report.value(), nobases_formula(q, n), FormulaStatus::proved);
      if (!report.consistent()) {
        row.verdict = RowVerdict::mismatch;
        row.note = "direct scan and S * |GL_2| disagree";
      }
      return {row};
    }
    case Statement::ELEMSPLIT: {
      const auto inst = make_instance(q, m, n);
      const auto report = pointed_consistency(inst, job.seed, bounds);
      const BigInt pointed = report.per_point.front().second;
      auto row = make_row(s, p, params, report.splitting * (big_pow(q, m) - 1),
                          pointed * (BigInt(inst.tower().order()) - 1), FormulaStatus::proved);
      row.note = std::to_string(report.per_point.size()) + (report.exhaustive ? " points (all)" : " sampled points");
      if (!report.uniform) {
        row.verdict = RowVerdict::mismatch;
        row.note += ", pointed counts not uniform";
      }
      return {row};
    }
    case Statement::WEAK_SSC: {
      struct Moebius {
        std::string label;
        Code a, b, c, d;
        unsigned r;
      };
      const auto inst = make_instance(q, m, n);
      const Code top = inst.tower().base().order() - 1;
      const std::vector<Moebius> maps{
          {"alpha+1", 1, 1, 0, 1, 0},
          {std::to_string(top) + "*alpha", top, 0, 0, 1, 0},
          {"1/alpha", 0, 1, 1, 0, 0},
          {"alpha^q", 1, 0, 0, 1, 1},
          {"(alpha^q+1)/alpha^q", 1, 1, 1, 0, 1},
      };
      Rows rows;
      for (const auto& mb : maps) {
        const auto r = weak_ssc_check(inst, mb.a, mb.b, mb.c, mb.d, mb.r, bounds);
        rows.push_back(make_row(s, p, params + ",beta=" + mb.label, r.count_alpha, r.count_beta,
                                FormulaStatus::proved));
      }
      return rows;
    }
    case Statement::PVRC:
    case Statement::BCSCC: {
      const auto mode = s == Statement::PVRC ? PrimitivityMode::definitional : PrimitivityMode::order;
      return {make_row(s, p, params, census_singer(m, n, q, CensusMethod::scan, mode, bounds),
                       census_singer(m, n, q, CensusMethod::formula, mode, bounds), census_status(m, n))};
    }
    case Statement::PFC:
    case Statement::IFC: {
      const auto ctx = field_of_order(q);
      const auto census = fiber_census(ctx, m, n, bounds);
      const auto filter = s == Statement::PFC ? IrreducibleFilter::primitive_only : IrreducibleFilter::all;
      const BigInt expected = nofiber_formula(m, n, q);
      Rows rows;
      for (const auto& f : find_irreducibles(ctx, m * n, filter, bounds)) {
        const auto it = census.find(*f.rank_code());
        rows.push_back(make_row(s, p, params + ",f=" + f.literal(), it == census.end() ? BigInt(0) : it->second,
                                expected, census_status(m, n)));
      }
      return rows;
    }
    case Statement::CHAIN: {
      const auto ctx = field_of_order(q);
      const auto inst = make_instance(q, m, n);
      const BigInt S = count_splitting(inst, bounds).brute_count;
      const BigInt units = BigInt(inst.tower().order()) - 1;
      const BigInt bridge = S * gl_order(m, q) / units;
      const auto census = fiber_census(ctx, m, n, bounds);
      auto fiber_of = [&](const Poly& f) {
        const auto it = census.find(*f.rank_code());
        return it == census.end() ? BigInt(0) : it->second;
      };
      const BigInt f0 = fiber_of(inst.tower().defining_poly());
      const auto irreducible = find_irreducibles(ctx, m * n, IrreducibleFilter::all, bounds);
      const auto primitive = find_irreducibles(ctx, m * n, IrreducibleFilter::primitive_only, bounds);
      const BigInt singer = census_singer(m, n, q, CensusMethod::scan, PrimitivityMode::order, bounds);

      std::vector<std::string> failed;
      if (S * gl_order(m, q) % units != 0 || f0 != bridge) failed.push_back("S*|GL_m|/(q^mn-1) != fiber");
      if (!std::all_of(irreducible.begin(), irreducible.end(), [&](const Poly& f) { return fiber_of(f) == f0; })) {
        failed.push_back("irreducible fibers differ");
      }
      if (singer != f0 * primitive.size()) failed.push_back("census != fiber * #primitive");

      auto row = make_row(s, p, params, singer, bridge * primitive.size(), census_status(m, n));
      row.verdict = failed.empty() ? RowVerdict::match : RowVerdict::mismatch;
      row.note = "S=" + S.str() + " fiber=" + f0.str() + " primitive=" + std::to_string(primitive.size());
      for (const auto& msg : failed) row.note += "; " + msg;
      return {row};
    }
    default: break;
  }
  throw Error(Errc::UnknownStatement, std::string(statement_name(s)));
}

std::string big_text(const std::optional<BigInt>& v) { return v ? v->str() : std::string(); }

json big_json(const std::optional<BigInt>& v) {
  if (!v) return nullptr;
  if (*v >= 0 && *v <= BigInt(~std::uint64_t{0})) return static_cast<std::uint64_t>(*v);
  return v->str();
}

std::string seconds_text(const std::optional<double>& s) {
  if (!s) return {};
  std::ostringstream out;
  out.precision(6);
  out << std::fixed << *s;
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string_view statement_name(Statement s) noexcept { return info(s).name; }

Statement parse_statement(std::string_view id) {
  for (const auto& i : kStatements) {
    if (i.name == id) return i.id;
  }
  throw Error(Errc::UnknownStatement, "unknown statement '" + std::string(id) + "'");
}

const std::vector<Statement>& all_statements() {
  static const std::vector<Statement> all = [] {
    std::vector<Statement> v;
    for (const auto& i : kStatements) v.push_back(i.id);
    return v;
  }();
  return all;
}

std::size_t grid_arity(Statement s) noexcept { return info(s).arity; }

std::vector<GridPoint> parse_grid(Statement s, std::string_view spec) {
  std::vector<GridPoint> grid;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto end = spec.find(';', start);
    if (end == std::string_view::npos) end = spec.size();
    const auto part = spec.substr(start, end - start);
    if (part.find_first_not_of(" \t") != std::string_view::npos) {
      GridPoint p;
      try {
        p = parse_code_list(part);
      } catch (const Error&) {
        throw Error(Errc::ParseError, "bad grid point '" + std::string(part) + "'");
      }
      if (p.size() != grid_arity(s)) {
        throw Error(Errc::ParseError, "grid point '" + std::string(part) + "' needs " +
                                          std::to_string(grid_arity(s)) + " values");
      }
      grid.push_back(std::move(p));
    }
    start = end + 1;
  }
  return grid;
}

std::vector<GridPoint> default_grid(Statement s) {
  switch (s) {
    case Statement::SSC:
      return {{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {2, 2, 1}, {2, 2, 2}, {3, 2, 2}, {2, 2, 3}, {3, 2, 3}, {2, 3, 2}};
    case Statement::PSSC: return {{2, 1, 2}, {2, 2, 1}, {2, 2, 2}, {3, 2, 2}, {2, 2, 3}, {2, 3, 2}};
    case Statement::LOWER_BOUND: return {{2, 1, 3}, {2, 2, 2}, {3, 2, 2}, {2, 2, 3}, {2, 3, 2}};
    case Statement::M2_THEOREM: return {{2, 2, 2}, {3, 2, 2}, {2, 2, 3}};
    case Statement::SPLITANDBASES: return {{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {2, 2, 1}, {2, 2, 2}, {3, 2, 2}};
    case Statement::NOBASES: return {{2, 2, 1}, {3, 2, 1}, {2, 2, 2}, {3, 2, 2}};
    case Statement::GENBB: {
      std::vector<GridPoint> g;
      for (std::uint64_t q : {2, 3}) {
        for (std::uint64_t a = 1; a <= 4; ++a) {
          for (std::uint64_t b = 1; b <= a; ++b) g.push_back({q, a, b});
        }
      }
      return g;
    }
    case Statement::ELEMSPLIT: return {{2, 1, 2}, {2, 2, 1}, {2, 2, 2}, {3, 2, 2}, {2, 2, 3}, {2, 2, 4}, {2, 3, 2}};
    case Statement::WEAK_SSC: return {{2, 2, 2}, {3, 2, 2}, {2, 2, 3}};
    case Statement::ENDO_SSC: return {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
    case Statement::NILPOTENT: return {{2, 2}, {3, 2}, {2, 3}};
    case Statement::PVRC: return {{2, 1, 2}, {2, 1, 4}, {3, 1, 2}, {2, 2, 1}, {3, 2, 1}, {2, 2, 2}, {2, 2, 3}};
    case Statement::BCSCC:
      return {{2, 1, 2}, {2, 1, 4}, {3, 1, 2}, {2, 2, 1}, {3, 2, 1}, {2, 2, 2}, {2, 2, 3}, {2, 3, 1}, {2, 3, 2}};
    case Statement::PFC:
    case Statement::IFC: return {{2, 1, 4}, {2, 2, 1}, {3, 2, 1}, {2, 2, 2}, {2, 2, 3}, {2, 3, 2}};
    case Statement::CHAIN: return {{2, 1, 2}, {2, 1, 3}, {2, 2, 1}, {2, 2, 2}, {3, 2, 2}, {2, 2, 3}, {2, 3, 2}};
  }
  return {};
}

std::string_view to_string(RowVerdict v) noexcept {
  switch (v) {
    case RowVerdict::match: return "match";
    case RowVerdict::mismatch: return "mismatch";
    case RowVerdict::skipped: return "skipped";
  }
  return "skipped";
}

int Verdict::exit_status() const noexcept {
  if (summary.proved_mismatch != 0) return 1;
  if (summary.conjectural_mismatch != 0) return 2;
  return 0;
}

Verdict verify(const VerificationJob& job) {
  const auto wall_start = Clock::now();
  Verdict verdict;
  verdict.job = job;
  for (const auto& p : job.grid) {
    if (p.size() != grid_arity(job.statement)) throw Error(Errc::BadArgs, "grid point has wrong arity");
    const auto start = Clock::now();
    Rows rows;
    try {
      rows = run_point(job.statement, p, job);
    } catch (const Error& e) {
      rows = {skipped_row(job.statement, p, point_params(job.statement, p), e.what())};
    }
    if (job.timing) {
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      for (auto& r : rows) r.seconds = secs / static_cast<double>(rows.size());
    }
    for (auto& r : rows) verdict.rows.push_back(std::move(r));
  }
  std::stable_sort(verdict.rows.begin(), verdict.rows.end(), [](const VerdictRow& a, const VerdictRow& b) {
    return std::tie(a.point, a.params) < std::tie(b.point, b.params);
  });

  auto& s = verdict.summary;
  for (const auto& r : verdict.rows) {
    ++s.rows;
    switch (r.verdict) {
      case RowVerdict::match: ++s.match; break;
      case RowVerdict::skipped: ++s.skipped; break;
      case RowVerdict::mismatch:
        ++s.mismatch;
        ++(r.status == FormulaStatus::proved ? s.proved_mismatch : s.conjectural_mismatch);
        break;
    }
  }
  if (job.timing) verdict.wall_seconds = std::chrono::duration<double>(Clock::now() - wall_start).count();
  return verdict;
}

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw Error(Errc::BadArgs, "unknown format '" + std::string(name) + "'");
}

std::string render(const Verdict& verdict, ReportFormat format) {
  const auto& job = verdict.job;
  switch (format) {
    case ReportFormat::json: {
      json doc;
      doc["schema"] = "splitlab/1";
      doc["statement"] = statement_name(job.statement);
      doc["seed"] = job.seed;
      doc["bounds"] = {{"scan", job.bounds.scan}, {"factor", job.bounds.factor}, {"iteration", job.bounds.iteration}};
      doc["grid"] = job.grid;
      json rows = json::array();
      for (const auto& r : verdict.rows) {
        json row;
        row["statement"] = statement_name(r.statement);
        row["params"] = r.params;
        row["brute"] = big_json(r.brute);
        row["formula"] = big_json(r.formula);
        row["status"] = to_string(r.status);
        row["verdict"] = to_string(r.verdict);
        row["seconds"] = r.seconds ? json(*r.seconds) : json(nullptr);
        row["note"] = r.note;
        rows.push_back(std::move(row));
      }
      doc["rows"] = std::move(rows);
      const auto& s = verdict.summary;
      doc["summary"] = {{"rows", s.rows},
                        {"match", s.match},
                        {"mismatch", s.mismatch},
                        {"skipped", s.skipped},
                        {"proved_mismatch", s.proved_mismatch},
                        {"conjectural_mismatch", s.conjectural_mismatch}};
      doc["exit_status"] = verdict.exit_status();
      doc["wall_seconds"] = verdict.wall_seconds ? json(*verdict.wall_seconds) : json(nullptr);
      return doc.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::string out = "statement,params,brute,formula,status,verdict,seconds\n";
      for (const auto& r : verdict.rows) {
        out += std::string(statement_name(r.statement)) + "," + csv_field(r.params) + "," + big_text(r.brute) + "," +
               big_text(r.formula) + "," + std::string(to_string(r.status)) + "," +
               std::string(to_string(r.verdict)) + "," + seconds_text(r.seconds) + "\n";
      }
      return out;
    }
    case ReportFormat::text: {
      std::ostringstream out;
      for (const auto& r : verdict.rows) {
        out << statement_name(r.statement) << "  " << r.params << "  brute=" << (r.brute ? r.brute->str() : "-")
            << "  formula=" << (r.formula ? r.formula->str() : "-") << "  [" << to_string(r.status) << "]  "
            << to_string(r.verdict);
        if (r.seconds) out << "  " << seconds_text(r.seconds) << "s";
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << "\n";
      }
      const auto& s = verdict.summary;
      out << "rows=" << s.rows << " match=" << s.match << " mismatch=" << s.mismatch << " skipped=" << s.skipped
          << " exit=" << verdict.exit_status() << "\n";
      return out.str();
    }
  }
  return {};
}

void emit(const Verdict& verdict, ReportFormat format, const std::string& path) {
  const std::string text = render(verdict, format);
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(Errc::IoError, "cannot write to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open " + path);
  out << text;
  out.close();
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
}

}  // namespace splitlab
