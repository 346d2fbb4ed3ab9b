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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "splitlab/linalg.hpp"
#include "splitlab/number_theory.hpp"
#include "splitlab/tower.hpp"

namespace splitlab {

/// F_{q^{mn}} viewed as an mn-dimensional space over F_q, together with a
/// generator alpha of the extension.
class SplitInstance {
 public:
  /// Throws DimensionMismatch unless the tower has degree m*n, NotGenerator
  /// unless alpha generates it. alpha defaults to the class of x.
  SplitInstance(TowerPtr tower, unsigned m, unsigned n, std::optional<FieldElement> alpha = std::nullopt);

  const TowerCtx& tower() const noexcept { return *tower_; }
  const TowerPtr& tower_ptr() const noexcept { return tower_; }
  const FieldPtr& base() const noexcept { return tower_->base_ptr(); }
  unsigned m() const noexcept { return m_; }
  unsigned n() const noexcept { return n_; }
  std::uint64_t q() const noexcept { return tower_->base().order(); }
  const FieldElement& alpha() const noexcept { return alpha_; }
  /// Multiplication by alpha acting on coordinate rows.
  const MatrixFq& alpha_matrix() const noexcept { return mult_; }
  std::string describe() const;

 private:
  TowerPtr tower_;
  unsigned m_;
  unsigned n_;
  FieldElement alpha_;
  MatrixFq mult_;
};

/// Convenience: F_q^{mn} over the canonical F_q, with an optional defining
/// polynomial literal.
SplitInstance make_instance(std::uint64_t q, unsigned m, unsigned n, std::optional<std::string> poly_literal = {},
                            bool prefer_primitive = false);

/// Stacks w T^j for the basis rows w of W and 0 <= j < n and tests for full
/// rank. Powers of T are computed once.
class SplittingTester {
 public:
  SplittingTester(const MatrixFq& T, unsigned m, unsigned n);
  bool test(const SubspaceBasis& W) const;
  /// Same test for an ordered tuple of m vectors.
  bool test_rows(std::span<const RowVec> rows) const;
  unsigned m() const noexcept { return m_; }
  unsigned n() const noexcept { return n_; }

 private:
  FieldPtr ctx_;
  unsigned m_;
  unsigned n_;
  std::vector<MatrixFq> powers_;
};

bool is_alpha_splitting(const SplitInstance& inst, const SubspaceBasis& W);
bool is_T_splitting(const MatrixFq& T, const SubspaceBasis& W, unsigned m, unsigned n);

struct SplitCountReport {
  std::string instance;
  std::uint64_t q = 0;
  unsigned m = 0;
  unsigned n = 0;
  BigInt brute_count;
  std::optional<BigInt> formula_count;
  FormulaStatus status = FormulaStatus::proved;
  Match verdict = Match::formula_unavailable;
  double elapsed = 0;
  std::vector<std::string> notes;
};

/// Number of alpha-splitting subspaces among the indices [begin, end) of the
/// m-dimensional subspace stream. Partial counts over a partition of the
/// stream add up to the full count.
BigInt count_splitting_range(const SplitInstance& inst, std::uint64_t begin, std::uint64_t end,
                             const Bounds& bounds = default_bounds());
SplitCountReport count_splitting(const SplitInstance& inst, const Bounds& bounds = default_bounds());

/// (q^{mn} - 1)/(q^m - 1) * q^{m(m-1)(n-1)}.
BigInt ssc_formula(std::uint64_t q, unsigned m, unsigned n);
/// Proved for m <= 2 or n = 1.
FormulaStatus ssc_status(unsigned m, unsigned n);
/// (q^{mn} - 1)/(q^m - 1).
BigInt splitting_lower_bound(std::uint64_t q, unsigned m, unsigned n);
/// [4 2]_q - [4 1]_q, the closed count for m = n = 2.
BigInt two_by_two_count(std::uint64_t q);

/// span{alpha^{in} : 0 <= i < m}, always splitting.
SubspaceBasis power_subspace(const SplitInstance& inst);

/// Splitting subspaces containing x. Throws ZeroBasePoint for x = 0.
BigInt count_pointed(const SplitInstance& inst, const FieldElement& x, const Bounds& bounds = default_bounds());

struct PointedReport {
  BigInt splitting;
  // (code of x, number of splitting subspaces through x)
  std::vector<std::pair<std::uint64_t, BigInt>> per_point;
  bool exhaustive = false;
  bool uniform = false;
  // S * (q^m - 1) == |pointed| * (q^{mn} - 1)
  bool identity_holds = false;
};

/// Checks that every sampled nonzero x lies in the same number of splitting
/// subspaces and that double counting of pairs (W, x) balances. Exhaustive
/// over x when q^{mn} <= 4096, otherwise 64 points drawn with `seed`.
PointedReport pointed_consistency(const SplitInstance& inst, std::uint64_t seed = 0,
                                  const Bounds& bounds = default_bounds());

struct BasesReport {
  std::optional<BigInt> direct;
  BigInt product;
  BigInt value() const { return direct ? *direct : product; }
  bool consistent() const { return !direct || *direct == product; }
};

/// Ordered m-tuples (v_1..v_m) whose alpha-translates form a basis. The
/// direct tuple scan runs when q^{m*mn} fits the scan bound; the product
/// S * |GL_m| is always computed.
BasesReport count_splitting_bases(const SplitInstance& inst, const Bounds& bounds = default_bounds());

/// (q^{2n} - q^{2n-1})(q^{2n} - 1), the m = 2 ordered-basis count.
BigInt nobases_formula(std::uint64_t q, unsigned n);

BigInt count_T_splitting(const MatrixFq& T, unsigned m, unsigned n, const Bounds& bounds = default_bounds());

/// Phi_q(p_T) / (q - 1).
BigInt endo_formula(const Poly& p_T, const Bounds& bounds = default_bounds());

struct WeakSscReport {
  FieldElement beta;
  BigInt count_alpha;
  BigInt count_beta;
  Match verdict = Match::mismatch;
};

/// beta = (a alpha^{q^r} + b)/(c alpha^{q^r} + d), compared by brute counts.
WeakSscReport weak_ssc_check(const SplitInstance& inst, Code a, Code b, Code c, Code d, unsigned r,
                             const Bounds& bounds = default_bounds());

/// Brute count for every generator of the tower, ascending element code.
std::vector<std::pair<std::uint64_t, BigInt>> generator_sweep(const TowerPtr& tower, unsigned m, unsigned n,
                                                              const Bounds& bounds = default_bounds());

/// Up to `limit` splitting subspaces in stream order.
std::vector<SubspaceBasis> splitting_witnesses(const SplitInstance& inst, std::size_t limit,
                                               const Bounds& bounds = default_bounds());

}  // namespace splitlab
