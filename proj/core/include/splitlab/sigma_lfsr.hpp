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

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "splitlab/linalg.hpp"
#include "splitlab/number_theory.hpp"
#include "splitlab/poly.hpp"

namespace splitlab {

/// s_{i+n} = s_i C_0 + s_{i+1} C_1 + ... + s_{i+n-1} C_{n-1} over words of
/// width m.
struct BlockRecurrence {
  FieldPtr ctx;
  unsigned m = 0;
  unsigned n = 0;
  std::vector<MatrixFq> C;

  /// Throws ShapeMismatch unless there are n square m x m matrices over ctx.
  void validate() const;
};

BlockRecurrence make_recurrence(FieldPtr ctx, unsigned m, unsigned n, std::vector<MatrixFq> C);

/// (s_i, ..., s_{i+n-1}).
struct RecurrenceState {
  std::vector<RowVec> words;
  friend bool operator==(const RecurrenceState&, const RecurrenceState&) = default;
};

struct PeriodReport {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;
  bool periodic = true;
};

RecurrenceState step(const BlockRecurrence& rec, const RecurrenceState& st);
/// The first `count` output words s_0, s_1, ...
std::vector<RowVec> simulate(const BlockRecurrence& rec, const RecurrenceState& init, std::uint64_t count);
PeriodReport period_preperiod(const BlockRecurrence& rec, const RecurrenceState& init,
                              const Bounds& bounds = default_bounds());

/// The mn x mn matrix with identity blocks on the block subdiagonal and
/// C_0, ..., C_{n-1} down the last block column, so that S_{i+1} = S_i T.
MatrixFq block_companion(const BlockRecurrence& rec);

/// Concatenated state row and back.
RowVec state_row(const RecurrenceState& st);
RecurrenceState state_from_row(const BlockRecurrence& rec, std::span<const Code> row);

enum class PrimitivityMode { order, definitional };

/// order: the block companion has multiplicative order q^{mn} - 1.
/// definitional: every nonzero initial state is purely periodic with period
/// q^{mn} - 1.
bool is_primitive_recurrence(const BlockRecurrence& rec, PrimitivityMode mode = PrimitivityMode::order,
                             const Bounds& bounds = default_bounds());

/// Visits every C-tuple in ascending order of the concatenated codes of
/// C_0, ..., C_{n-1} (last entry least significant).
void for_each_recurrence(const FieldPtr& ctx, unsigned m, unsigned n,
                         const std::function<void(const BlockRecurrence&)>& fn,
                         const Bounds& bounds = default_bounds());

enum class CensusMethod { scan, formula };

/// Number of (m,n)-block companion Singer cycles. The scan only runs the
/// order test on tuples with C_0 invertible.
BigInt census_singer(unsigned m, unsigned n, std::uint64_t q, CensusMethod method,
                     PrimitivityMode mode = PrimitivityMode::order, const Bounds& bounds = default_bounds());
/// Proved for m <= 2 or n = 1.
FormulaStatus census_status(unsigned m, unsigned n);

enum class FiberMethod { scan, formula, bridge };

/// Block companion matrices with characteristic polynomial f. formula and
/// bridge need f irreducible (NotIrreducible otherwise).
BigInt fiber_count(const Poly& f, unsigned m, unsigned n, FiberMethod method,
                   const Bounds& bounds = default_bounds());

/// One scan over all C-tuples, keyed by the rank code of the characteristic
/// polynomial. Every tuple lands in exactly one fiber.
std::map<std::uint64_t, BigInt> fiber_census(const FieldPtr& ctx, unsigned m, unsigned n,
                                             const Bounds& bounds = default_bounds());

/// phi(q^{mn} - 1)/(mn) * nofiber_formula(m, n, q).
BigInt pvrc_formula(unsigned m, unsigned n, std::uint64_t q, const Bounds& bounds = default_bounds());
/// q^{m(m-1)(n-1)} * prod_{i=1}^{m-1} (q^m - q^i).
BigInt nofiber_formula(unsigned m, unsigned n, std::uint64_t q);

/// Parses "M0|M1|..." into n matrices of size m x m.
std::vector<MatrixFq> parse_block_list(const FieldPtr& ctx, unsigned m, std::string_view text);
/// Parses "w0|w1|..." (words as comma lists) into a state of n words of width m.
RecurrenceState parse_state(const BlockRecurrence& rec, std::string_view text);

}  // namespace splitlab
