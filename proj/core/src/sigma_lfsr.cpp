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

#include "splitlab/sigma_lfsr.hpp"

#include <stdexcept>
#include <unordered_map>

#include "splitlab/splitting.hpp"
#include "splitlab/tower.hpp"

namespace splitlab {
namespace {

struct RowHash {
  std::size_t operator()(const RowVec& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Code c : v) h = (h ^ c) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

constexpr std::uint64_t kHashLimit = std::uint64_t{1} << 20;

void check_state(const BlockRecurrence& rec, const RecurrenceState& st) {
  if (st.words.size() != rec.n) throw Error(Errc::ShapeMismatch, "state must hold n words");
  for (const auto& w : st.words) {
    if (w.size() != rec.m) throw Error(Errc::ShapeMismatch, "state words must have width m");
    for (Code c : w) {
      if (!rec.ctx->contains(c)) throw Error(Errc::ShapeMismatch, "state entry out of range");
    }
  }
}

std::uint64_t state_space(const BlockRecurrence& rec) {
  auto size = checked_pow(rec.ctx->order(), std::uint64_t{rec.m} * rec.n);
  if (!size) throw Error(Errc::SizeExceeded, "q^{mn} does not fit below 2^63");
  return *size;
}

std::vector<std::string_view> split_bar(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto bar = text.find('|', start);
    parts.push_back(text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return parts;
}

}  // namespace

void BlockRecurrence::validate() const {
  if (!ctx) throw Error(Errc::ShapeMismatch, "recurrence without field");
  if (m == 0 || n == 0) throw Error(Errc::ShapeMismatch, "m and n must be positive");
  if (C.size() != n) throw Error(Errc::ShapeMismatch, "expected " + std::to_string(n) + " coefficient matrices");
  for (const auto& c : C) {
    if (c.rows() != m || c.cols() != m || !c.ctx() || !c.field().same_as(*ctx)) {
      throw Error(Errc::ShapeMismatch, "coefficient matrices must be m x m over the same field");
    }
  }
}

BlockRecurrence make_recurrence(FieldPtr ctx, unsigned m, unsigned n, std::vector<MatrixFq> C) {
  BlockRecurrence rec{std::move(ctx), m, n, std::move(C)};
  rec.validate();
  return rec;
}

RecurrenceState step(const BlockRecurrence& rec, const RecurrenceState& st) {
  check_state(rec, st);
  const auto& F = *rec.ctx;
  RowVec next(rec.m, 0);
  for (unsigned j = 0; j < rec.n; ++j) {
    const auto term = row_times(st.words[j], rec.C[j]);
    for (unsigned k = 0; k < rec.m; ++k) next[k] = F.add(next[k], term[k]);
  }
  RecurrenceState out;
  out.words.assign(st.words.begin() + 1, st.words.end());
  out.words.push_back(std::move(next));
  return out;
}

std::vector<RowVec> simulate(const BlockRecurrence& rec, const RecurrenceState& init, std::uint64_t count) {
  check_state(rec, init);
  std::vector<RowVec> out;
  RecurrenceState st = init;
  while (out.size() < count) {
    out.push_back(st.words.front());
    if (out.size() < count) st = step(rec, st);
  }
  return out;
}

MatrixFq block_companion(const BlockRecurrence& rec) {
  rec.validate();
  const std::size_t m = rec.m, d = std::size_t{rec.m} * rec.n;
  MatrixFq T(rec.ctx, d, d);
  for (std::size_t b = 0; b + 1 < rec.n; ++b) {
    for (std::size_t i = 0; i < m; ++i) T.set((b + 1) * m + i, b * m + i, 1);
  }
  for (std::size_t b = 0; b < rec.n; ++b) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) T.set(b * m + i, d - m + j, rec.C[b].at(i, j));
    }
  }
  return T;
}

RowVec state_row(const RecurrenceState& st) {
  RowVec row;
  for (const auto& w : st.words) row.insert(row.end(), w.begin(), w.end());
  return row;
}

RecurrenceState state_from_row(const BlockRecurrence& rec, std::span<const Code> row) {
  if (row.size() != std::size_t{rec.m} * rec.n) throw Error(Errc::ShapeMismatch, "state row has wrong length");
  RecurrenceState st;
  for (unsigned b = 0; b < rec.n; ++b) st.words.emplace_back(row.begin() + b * rec.m, row.begin() + (b + 1) * rec.m);
  check_state(rec, st);
  return st;
}

PeriodReport period_preperiod(const BlockRecurrence& rec, const RecurrenceState& init, const Bounds& bounds) {
  check_state(rec, init);
  const MatrixFq T = block_companion(rec);
  auto f = [&](const RowVec& v) { return row_times(v, T); };
  std::uint64_t steps = 0;
  auto tick = [&] {
    if (++steps > bounds.iteration) {
      throw Error(Errc::IterationBoundExceeded, "orbit longer than " + std::to_string(bounds.iteration));
    }
  };

  PeriodReport report;
  bool found = false;
  {
    std::unordered_map<RowVec, std::uint64_t, RowHash> seen;
    RowVec x = state_row(init);
    for (std::uint64_t i = 0; i < kHashLimit; ++i) {
      auto [it, fresh] = seen.emplace(x, i);
      if (!fresh) {
        report.preperiod = it->second;
        report.period = i - it->second;
        found = true;
        break;
      }
      x = f(x);
      tick();
    }
  }
  if (!found) {
    // Brent: first the cycle length, then the tail.
    const RowVec x0 = state_row(init);
    std::uint64_t power = 1, lam = 1;
    RowVec tortoise = x0, hare = f(x0);
    tick();
    while (tortoise != hare) {
      if (power == lam) {
        tortoise = hare;
        power *= 2;
        lam = 0;
      }
      hare = f(hare);
      tick();
      ++lam;
    }
    tortoise = hare = x0;
    for (std::uint64_t i = 0; i < lam; ++i) {
      hare = f(hare);
      tick();
    }
    std::uint64_t mu = 0;
    while (tortoise != hare) {
      tortoise = f(tortoise);
      hare = f(hare);
      tick();
      ++mu;
    }
    report.preperiod = mu;
    report.period = lam;
  }
  report.periodic = report.preperiod == 0;
  if (!report.periodic && rank(rec.C.front()) == rec.m) {
    throw std::logic_error("invertible block companion produced a preperiod");
  }
  return report;
}

bool is_primitive_recurrence(const BlockRecurrence& rec, PrimitivityMode mode, const Bounds& bounds) {
  rec.validate();
  const std::uint64_t size = state_space(rec);
  if (rank(rec.C.front()) < rec.m) return false;
  if (mode == PrimitivityMode::order) {
    const MatrixFq T = block_companion(rec);
    if (!is_irreducible(char_poly(T))) return false;
    return matrix_order(T, bounds) == size - 1;
  }
  const std::size_t d = std::size_t{rec.m} * rec.n;
  const std::uint64_t q = rec.ctx->order();
  RowVec row(d);
  for (std::uint64_t code = 1; code < size; ++code) {
    std::uint64_t rest = code;
    for (auto& c : row) {
      c = rest % q;
      rest /= q;
    }
    const auto r = period_preperiod(rec, state_from_row(rec, row), bounds);
    if (!r.periodic || r.period != size - 1) return false;
  }
  return true;
}

void for_each_recurrence(const FieldPtr& ctx, unsigned m, unsigned n,
                         const std::function<void(const BlockRecurrence&)>& fn, const Bounds& bounds) {
  BlockRecurrence rec{ctx, m, n, {}};
  for_each_matrix(
      ctx, std::size_t{m} * n, m,
      [&](const MatrixFq& stacked) {
        rec.C.clear();
        for (unsigned b = 0; b < n; ++b) {
          const auto first = stacked.entries().begin() + std::size_t{b} * m * m;
          rec.C.emplace_back(ctx, m, m, std::vector<Code>(first, first + std::size_t{m} * m));
        }
        fn(rec);
      },
      bounds);
}

BigInt census_singer(unsigned m, unsigned n, std::uint64_t q, CensusMethod method, PrimitivityMode mode,
                     const Bounds& bounds) {
  if (method == CensusMethod::formula) return pvrc_formula(m, n, q, bounds);
  const auto ctx = field_of_order(q);
  std::uint64_t count = 0;
  for_each_recurrence(
      ctx, m, n,
      [&](const BlockRecurrence& rec) {
        if (rank(rec.C.front()) < m) return;
        if (is_primitive_recurrence(rec, mode, bounds)) ++count;
      },
      bounds);
  return count;
}

FormulaStatus census_status(unsigned m, unsigned n) {
  return m <= 2 || n == 1 ? FormulaStatus::proved : FormulaStatus::conjectural;
}

BigInt fiber_count(const Poly& f, unsigned m, unsigned n, FiberMethod method, const Bounds& bounds) {
  if (!f.is_monic()) throw Error(Errc::NotMonic, f.pretty() + " is not monic");
  if (f.degree() != std::optional<std::size_t>(std::size_t{m} * n)) {
    throw Error(Errc::BadArgs, "characteristic polynomial must have degree m*n");
  }
  const std::uint64_t q = f.field().order();
  switch (method) {
    case FiberMethod::scan: {
      std::uint64_t count = 0;
      for_each_recurrence(
          f.ctx(), m, n,
          [&](const BlockRecurrence& rec) {
            if (char_poly(block_companion(rec)) == f) ++count;
          },
          bounds);
      return count;
    }
    case FiberMethod::formula:
      if (!is_irreducible(f)) throw Error(Errc::NotIrreducible, f.pretty() + " is reducible");
      return nofiber_formula(m, n, q);
    case FiberMethod::bridge: {
      if (!is_irreducible(f)) throw Error(Errc::NotIrreducible, f.pretty() + " is reducible");
      const SplitInstance inst(build_extension(f.ctx(), m * n, f), m, n);
      const BigInt bases = count_splitting_bases(inst, bounds).value();
      const BigInt units = BigInt(inst.tower().order()) - 1;
      if (bases % units != 0) throw std::logic_error("ordered-basis count not divisible by q^{mn} - 1");
      return bases / units;
    }
  }
  throw Error(Errc::BadArgs, "unknown fiber method");
}

std::map<std::uint64_t, BigInt> fiber_census(const FieldPtr& ctx, unsigned m, unsigned n, const Bounds& bounds) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for_each_recurrence(
      ctx, m, n, [&](const BlockRecurrence& rec) { ++counts[*char_poly(block_companion(rec)).rank_code()]; },
      bounds);
  std::map<std::uint64_t, BigInt> out;
  for (auto [k, v] : counts) out.emplace(k, v);
  return out;
}

BigInt nofiber_formula(unsigned m, unsigned n, std::uint64_t q) {
  const std::uint64_t mm = m;
  BigInt value = big_pow(q, mm * (mm - 1) * (n - 1));
  for (std::uint64_t i = 1; i < mm; ++i) value *= big_pow(q, mm) - big_pow(q, i);
  return value;
}

BigInt pvrc_formula(unsigned m, unsigned n, std::uint64_t q, const Bounds& bounds) {
  const std::uint64_t d = std::uint64_t{m} * n;
  auto size = checked_pow(q, d);
  if (!size) throw Error(Errc::SizeExceeded, "q^{mn} does not fit below 2^63");
  const std::uint64_t phi = euler_phi(*size - 1, bounds.factor);
  if (phi % d != 0) throw std::logic_error("phi(q^d - 1) not divisible by d");
  return BigInt(phi / d) * nofiber_formula(m, n, q);
}

std::vector<MatrixFq> parse_block_list(const FieldPtr& ctx, unsigned m, std::string_view text) {
  std::vector<MatrixFq> out;
  for (auto part : split_bar(text)) {
    auto M = parse_matrix_literal(ctx, part);
    if (M.rows() != m || M.cols() != m) {
      throw Error(Errc::ShapeMismatch, "block '" + std::string(part) + "' is not " + std::to_string(m) + "x" +
                                           std::to_string(m));
    }
    out.push_back(std::move(M));
  }
  return out;
}

RecurrenceState parse_state(const BlockRecurrence& rec, std::string_view text) {
  RecurrenceState st;
  for (auto part : split_bar(text)) st.words.push_back(parse_code_list(part));
  check_state(rec, st);
  return st;
}

}  // namespace splitlab
