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

#include "splitlab/splitting.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

namespace splitlab {
namespace {

BigInt pow_big(std::uint64_t q, std::uint64_t k) { return big_pow(q, k); }

std::uint64_t u64_or_throw(const BigInt& v, const Bounds& bounds, const std::string& what) {
  if (v > BigInt(bounds.scan)) {
    throw Error(Errc::ScanBoundExceeded, what + " has " + v.str() + " candidates, bound is " +
                                             std::to_string(bounds.scan));
  }
  return static_cast<std::uint64_t>(v);
}

void require_shape(const SubspaceBasis& W, const FieldCtx& F, unsigned m, unsigned n) {
  if (W.dim() != m || W.ambient_dim() != std::size_t{m} * n || !W.ctx() || !W.ctx()->same_as(F)) {
    throw Error(Errc::DimensionMismatch, "subspace must have dimension " + std::to_string(m) + " in F_q^" +
                                             std::to_string(std::size_t{m} * n));
  }
}

}  // namespace

SplitInstance::SplitInstance(TowerPtr tower, unsigned m, unsigned n, std::optional<FieldElement> alpha)
    : tower_(std::move(tower)), m_(m), n_(n) {
  if (!tower_) throw Error(Errc::BadArgs, "instance without tower");
  if (m == 0 || n == 0 || tower_->degree() != std::size_t{m} * n) {
    throw Error(Errc::DimensionMismatch, "tower degree " + std::to_string(tower_->degree()) + " is not m*n");
  }
  alpha_ = alpha ? *alpha : tower_->alpha();
  tower_->coords_of(alpha_);
  if (!generates(*tower_, alpha_)) {
    throw Error(Errc::NotGenerator, "alpha does not generate " + tower_->describe());
  }
  mult_ = multiplication_matrix(*tower_, alpha_);
}

std::string SplitInstance::describe() const {
  return "q=" + std::to_string(q()) + " m=" + std::to_string(m_) + " n=" + std::to_string(n_) +
         " f=" + tower_->defining_poly().literal() + " alpha=" + format_code_list(alpha_.coords);
}

SplitInstance make_instance(std::uint64_t q, unsigned m, unsigned n, std::optional<std::string> poly_literal,
                            bool prefer_primitive) {
  auto base = field_of_order(q);
  std::optional<Poly> f;
  if (poly_literal) f = parse_poly_literal(base, *poly_literal);
  return SplitInstance(build_extension(base, m * n, std::move(f), prefer_primitive), m, n);
}

SplittingTester::SplittingTester(const MatrixFq& T, unsigned m, unsigned n) : ctx_(T.ctx()), m_(m), n_(n) {
  if (!T.is_square() || T.rows() != std::size_t{m} * n) {
    throw Error(Errc::DimensionMismatch, "endomorphism must be square of size m*n");
  }
  powers_.push_back(MatrixFq::identity(ctx_, T.rows()));
  for (unsigned j = 1; j < n; ++j) powers_.push_back(powers_.back() * T);
}

bool SplittingTester::test_rows(std::span<const RowVec> rows) const {
  const std::size_t d = std::size_t{m_} * n_;
  std::vector<Code> entries;
  entries.reserve(d * d);
  for (const auto& P : powers_) {
    for (const auto& w : rows) {
      const auto r = row_times(w, P);
      entries.insert(entries.end(), r.begin(), r.end());
    }
  }
  return rank(MatrixFq(ctx_, d, d, std::move(entries))) == d;
}

bool SplittingTester::test(const SubspaceBasis& W) const {
  require_shape(W, *ctx_, m_, n_);
  std::vector<RowVec> rows;
  rows.reserve(m_);
  for (std::size_t i = 0; i < W.dim(); ++i) {
    const auto r = W.basis().row(i);
    rows.emplace_back(r.begin(), r.end());
  }
  return test_rows(rows);
}

bool is_alpha_splitting(const SplitInstance& inst, const SubspaceBasis& W) {
  return SplittingTester(inst.alpha_matrix(), inst.m(), inst.n()).test(W);
}

bool is_T_splitting(const MatrixFq& T, const SubspaceBasis& W, unsigned m, unsigned n) {
  return SplittingTester(T, m, n).test(W);
}

BigInt count_splitting_range(const SplitInstance& inst, std::uint64_t begin, std::uint64_t end,
                             const Bounds& bounds) {
  SubspaceStream stream(inst.base(), std::size_t{inst.m()} * inst.n(), inst.m(), bounds);
  end = std::min(end, stream.size());
  if (begin >= end) return 0;
  const SplittingTester tester(inst.alpha_matrix(), inst.m(), inst.n());
  stream.seek(begin);
  std::uint64_t count = 0;
  SubspaceBasis W;
  for (std::uint64_t i = begin; i < end && stream.next(W); ++i) {
    if (tester.test(W)) ++count;
  }
  return count;
}

SplitCountReport count_splitting(const SplitInstance& inst, const Bounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  SplitCountReport report;
  report.instance = inst.describe();
  report.q = inst.q();
  report.m = inst.m();
  report.n = inst.n();
  report.brute_count = count_splitting_range(inst, 0, ~std::uint64_t{0}, bounds);
  report.formula_count = ssc_formula(report.q, report.m, report.n);
  report.status = ssc_status(report.m, report.n);
  report.verdict = report.brute_count == *report.formula_count ? Match::match : Match::mismatch;
  if (report.m == 2 && report.n == 2) {
    report.notes.push_back("closed form [4 2]_q - [4 1]_q = " + two_by_two_count(report.q).str());
  }
  report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

BigInt ssc_formula(std::uint64_t q, unsigned m, unsigned n) {
  const std::uint64_t mm = m;
  return (pow_big(q, mm * n) - 1) / (pow_big(q, mm) - 1) * pow_big(q, mm * (mm - 1) * (n - 1));
}

FormulaStatus ssc_status(unsigned m, unsigned n) {
  return m <= 2 || n == 1 ? FormulaStatus::proved : FormulaStatus::conjectural;
}

BigInt splitting_lower_bound(std::uint64_t q, unsigned m, unsigned n) {
  return (pow_big(q, std::uint64_t{m} * n) - 1) / (pow_big(q, m) - 1);
}

BigInt two_by_two_count(std::uint64_t q) { return gaussian_binomial(4, 2, q) - gaussian_binomial(4, 1, q); }

SubspaceBasis power_subspace(const SplitInstance& inst) {
  const auto& T = inst.tower();
  const FieldElement step = T.pow(inst.alpha(), inst.n());
  std::vector<RowVec> rows;
  FieldElement cur = T.one();
  for (unsigned i = 0; i < inst.m(); ++i) {
    rows.push_back(cur.coords);
    cur = T.mul(cur, step);
  }
  return SubspaceBasis::from_rows(inst.base(), T.degree(), rows);
}

BigInt count_pointed(const SplitInstance& inst, const FieldElement& x, const Bounds& bounds) {
  const auto& coords = inst.tower().coords_of(x);
  if (inst.tower().is_zero(x)) throw Error(Errc::ZeroBasePoint, "base point must be nonzero");
  const SplittingTester tester(inst.alpha_matrix(), inst.m(), inst.n());
  std::uint64_t count = 0;
  for_each_subspace(
      inst.base(), inst.tower().degree(), inst.m(),
      [&](const SubspaceBasis& W) {
        if (W.contains(coords) && tester.test(W)) ++count;
      },
      bounds);
  return count;
}

std::vector<SubspaceBasis> splitting_witnesses(const SplitInstance& inst, std::size_t limit, const Bounds& bounds) {
  std::vector<SubspaceBasis> out;
  if (limit == 0) return out;
  const SplittingTester tester(inst.alpha_matrix(), inst.m(), inst.n());
  SubspaceStream stream(inst.base(), inst.tower().degree(), inst.m(), bounds);
  SubspaceBasis W;
  while (out.size() < limit && stream.next(W)) {
    if (tester.test(W)) out.push_back(W);
  }
  return out;
}

PointedReport pointed_consistency(const SplitInstance& inst, std::uint64_t seed, const Bounds& bounds) {
  const auto& T = inst.tower();
  const auto& F = T.base();
  const std::uint64_t q = F.order();
  const std::uint64_t size = T.order();
  const auto all = splitting_witnesses(inst, ~std::size_t{0}, bounds);

  PointedReport report;
  report.splitting = all.size();
  report.exhaustive = size <= 4096;
  if (report.exhaustive) {
    std::vector<std::uint64_t> hits(size, 0);
    const std::uint64_t combos = *checked_pow(q, inst.m());
    std::vector<Code> v(T.degree());
    for (const auto& W : all) {
      for (std::uint64_t c = 1; c < combos; ++c) {
        std::fill(v.begin(), v.end(), 0);
        std::uint64_t rest = c;
        for (std::size_t i = 0; i < W.dim(); ++i, rest /= q) {
          const Code coef = rest % q;
          if (coef == 0) continue;
          const auto row = W.basis().row(i);
          for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.add(v[j], F.mul(coef, row[j]));
        }
        ++hits[T.code_of(T.from_coords(v))];
      }
    }
    for (std::uint64_t x = 1; x < size; ++x) report.per_point.emplace_back(x, hits[x]);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(1, size - 1);
    std::set<std::uint64_t> sample;
    while (sample.size() < 64) sample.insert(pick(rng));
    for (std::uint64_t x : sample) {
      const auto& coords = T.from_code(x).coords;
      std::uint64_t hits = 0;
      for (const auto& W : all) {
        if (W.contains(coords)) ++hits;
      }
      report.per_point.emplace_back(x, hits);
    }
  }
  report.uniform = std::all_of(report.per_point.begin(), report.per_point.end(),
                               [&](const auto& p) { return p.second == report.per_point.front().second; });
  const BigInt pointed = report.per_point.front().second;
  report.identity_holds =
      report.uniform && report.splitting * (pow_big(q, inst.m()) - 1) == pointed * (BigInt(size) - 1);
  return report;
}

BasesReport count_splitting_bases(const SplitInstance& inst, const Bounds& bounds) {
  const std::uint64_t q = inst.q();
  const unsigned m = inst.m();
  BasesReport report;
  report.product = count_splitting(inst, bounds).brute_count * gl_order(m, q);

  const BigInt tuples = pow_big(inst.tower().order(), m);
  if (tuples > BigInt(bounds.scan)) return report;
  const std::uint64_t vectors = inst.tower().order();
  std::vector<RowVec> table;
  table.reserve(vectors);
  for (std::uint64_t c = 0; c < vectors; ++c) table.push_back(inst.tower().from_code(c).coords);

  const SplittingTester tester(inst.alpha_matrix(), m, inst.n());
  std::vector<std::uint64_t> idx(m, 0);
  std::vector<RowVec> rows(m);
  std::uint64_t count = 0;
  const auto total = static_cast<std::uint64_t>(tuples);
  for (std::uint64_t t = 0; t < total; ++t) {
    for (unsigned i = 0; i < m; ++i) rows[i] = table[idx[i]];
    if (tester.test_rows(rows)) ++count;
    for (unsigned i = m; i-- > 0;) {
      if (++idx[i] < vectors) break;
      idx[i] = 0;
    }
  }
  report.direct = count;
  return report;
}

BigInt nobases_formula(std::uint64_t q, unsigned n) {
  const BigInt top = pow_big(q, 2 * std::uint64_t{n});
  return (top - pow_big(q, 2 * std::uint64_t{n} - 1)) * (top - 1);
}

BigInt count_T_splitting(const MatrixFq& T, unsigned m, unsigned n, const Bounds& bounds) {
  const SplittingTester tester(T, m, n);
  std::uint64_t count = 0;
  for_each_subspace(
      T.ctx(), T.rows(), m,
      [&](const SubspaceBasis& W) {
        if (tester.test(W)) ++count;
      },
      bounds);
  return count;
}

BigInt endo_formula(const Poly& p_T, const Bounds& bounds) {
  const auto deg = p_T.degree();
  if (!deg || *deg == 0) throw Error(Errc::DegreeZero, "characteristic polynomial must have degree >= 1");
  if (!p_T.is_monic()) throw Error(Errc::NotMonic, p_T.pretty() + " is not monic");
  const BigInt phi = q_totient(p_T, CountMethod::closed, bounds);
  const BigInt unit = p_T.field().order() - 1;
  if (phi % unit != 0) throw std::logic_error("q-totient not divisible by q - 1");
  return phi / unit;
}

WeakSscReport weak_ssc_check(const SplitInstance& inst, Code a, Code b, Code c, Code d, unsigned r,
                             const Bounds& bounds) {
  const auto& T = inst.tower();
  const auto& F = T.base();
  for (Code v : {a, b, c, d}) {
    if (!F.contains(v)) throw Error(Errc::BadArgs, "matrix entry out of range");
  }
  if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) throw Error(Errc::SingularMoebius, "ad - bc = 0");
  const FieldElement gamma = T.frobenius(inst.alpha(), std::uint64_t{F.degree()} * r);
  const FieldElement den = T.add(T.mul(T.from_base(c), gamma), T.from_base(d));
  if (T.is_zero(den)) throw Error(Errc::ZeroDenominator, "c alpha^(q^r) + d = 0");
  const FieldElement num = T.add(T.mul(T.from_base(a), gamma), T.from_base(b));

  WeakSscReport report;
  report.beta = T.div(num, den);
  const SplitInstance other(inst.tower_ptr(), inst.m(), inst.n(), report.beta);
  report.count_alpha = count_splitting(inst, bounds).brute_count;
  report.count_beta = count_splitting(other, bounds).brute_count;
  report.verdict = report.count_alpha == report.count_beta ? Match::match : Match::mismatch;
  return report;
}

std::vector<std::pair<std::uint64_t, BigInt>> generator_sweep(const TowerPtr& tower, unsigned m, unsigned n,
                                                              const Bounds& bounds) {
  const BigInt work = BigInt(tower->order()) * gaussian_binomial(std::int64_t{m} * n, m, tower->base().order());
  u64_or_throw(work, bounds, "generator sweep");
  std::vector<std::pair<std::uint64_t, BigInt>> out;
  for (std::uint64_t code = 1; code < tower->order(); ++code) {
    const FieldElement beta = tower->from_code(code);
    if (!generates(*tower, beta)) continue;
    out.emplace_back(code, count_splitting(SplitInstance(tower, m, n, beta), bounds).brute_count);
  }
  return out;
}

}  // namespace splitlab
