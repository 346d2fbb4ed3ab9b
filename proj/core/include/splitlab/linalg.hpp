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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "splitlab/field.hpp"
#include "splitlab/number_theory.hpp"
#include "splitlab/poly.hpp"

namespace splitlab {

using RowVec = std::vector<Code>;

/// Dense row-major matrix of F_q codes.
class MatrixFq {
 public:
  MatrixFq() = default;
  MatrixFq(FieldPtr ctx, std::size_t rows, std::size_t cols);
  MatrixFq(FieldPtr ctx, std::size_t rows, std::size_t cols, std::vector<Code> entries);

  static MatrixFq identity(FieldPtr ctx, std::size_t n);
  static MatrixFq from_rows(FieldPtr ctx, std::size_t cols, std::span<const RowVec> rows);

  const FieldPtr& ctx() const noexcept { return ctx_; }
  const FieldCtx& field() const noexcept { return *ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Code at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Code v) { a_[i * cols_ + j] = v; }
  std::span<const Code> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
  std::span<Code> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  const std::vector<Code>& entries() const noexcept { return a_; }

  bool is_zero() const noexcept;
  /// "r0c0,r0c1;r1c0,r1c1"
  std::string literal() const;

  friend bool operator==(const MatrixFq& a, const MatrixFq& b);

 private:
  FieldPtr ctx_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Code> a_;
};

MatrixFq operator*(const MatrixFq& a, const MatrixFq& b);
MatrixFq operator+(const MatrixFq& a, const MatrixFq& b);
MatrixFq scale(const MatrixFq& m, Code c);
MatrixFq matrix_pow(const MatrixFq& m, std::uint64_t k);
/// Row vector times matrix (the row-vector convention used everywhere).
RowVec row_times(std::span<const Code> v, const MatrixFq& m);

/// f(M) = sum c_i M^i.
MatrixFq eval_poly(const Poly& f, const MatrixFq& m);

struct RrefResult {
  MatrixFq form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan with leftmost-pivot selection.
RrefResult rref(MatrixFq m);

/// Rank only. Over F_2 with at most 64 columns rows are bit-packed.
std::size_t rank(const MatrixFq& m);
std::size_t rank_of_rows(const FieldCtx& field, std::size_t cols, std::span<const RowVec> rows);

/// Basis of {v : v M = 0}.
std::vector<RowVec> left_kernel(const MatrixFq& m);

/// An m-dimensional subspace of F_q^ambient, stored by its RREF basis, which
/// is the unique canonical representative of the span.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  /// Row-reduces `rows`; throws DimensionMismatch if they are dependent.
  static SubspaceBasis from_rows(const FieldPtr& ctx, std::size_t ambient, std::span<const RowVec> rows);
  /// Trusts `basis` to be in RREF with full row rank.
  static SubspaceBasis from_rref(MatrixFq basis, std::vector<std::size_t> pivots);

  const FieldPtr& ctx() const noexcept { return basis_.ctx(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const MatrixFq& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Code> v) const;
  /// Checks the RREF invariants directly.
  bool is_canonical() const;
  std::uint64_t hash() const noexcept;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) { return a.basis_ == b.basis_; }

 private:
  MatrixFq basis_;
  std::vector<std::size_t> pivots_;
};

/// Exact Gaussian binomial [a b]_q. Throws BadArgs unless a >= b >= 0.
BigInt gaussian_binomial(long a, long b, std::uint64_t q);

/// |GL_m(F_q)|.
BigInt gl_order(unsigned m, std::uint64_t q);

/// Ordered stream of all k-dimensional subspaces of F_q^ambient. Pivot
/// profiles (k-subsets of columns) come in lexicographic order; within a
/// profile the free entries count up lexicographically, first entry most
/// significant. Every position in the stream has a stable index, so ranges
/// can be handed to different workers.
class SubspaceStream {
 public:
  SubspaceStream(FieldPtr ctx, std::size_t ambient, std::size_t k, const Bounds& bounds = default_bounds());

  std::uint64_t size() const noexcept { return total_; }
  /// Repositions the stream at `index`.
  void seek(std::uint64_t index);
  bool next(SubspaceBasis& out);

 private:
  void load_profile();
  SubspaceBasis current() const;
  bool advance_profile();

  FieldPtr ctx_;
  std::size_t ambient_;
  std::size_t k_;
  std::uint64_t total_;
  std::vector<std::size_t> profile_;
  std::vector<std::pair<std::size_t, std::size_t>> free_slots_;
  std::vector<Code> filling_;
  bool exhausted_ = false;
  bool fresh_ = true;
};

void for_each_subspace(const FieldPtr& ctx, std::size_t ambient, std::size_t k,
                       const std::function<void(const SubspaceBasis&)>& fn,
                       const Bounds& bounds = default_bounds());

/// Visits all rows x cols matrices in ascending order of their concatenated
/// codes (last entry least significant).
void for_each_matrix(const FieldPtr& ctx, std::size_t rows, std::size_t cols,
                     const std::function<void(const MatrixFq&)>& fn, const Bounds& bounds = default_bounds());

/// Number of nilpotent m x m matrices: q^(m(m-1)) in closed form, or an
/// exhaustive test of M^m = 0.
BigInt count_nilpotent(unsigned m, std::uint64_t q, CountMethod method, const Bounds& bounds = default_bounds());

/// Monic characteristic polynomial det(xI - M) via Hessenberg reduction.
Poly char_poly(const MatrixFq& m);

/// Companion matrix of monic f in the block-companion layout: ones on the
/// subdiagonal, last column holds -f_0 ... -f_{k-1}.
MatrixFq companion_matrix(const Poly& f);

/// Multiplicative order in GL_d(F_q).
std::uint64_t matrix_order(const MatrixFq& m, const Bounds& bounds = default_bounds());

/// Rows separated by ';', entries by ','.
MatrixFq parse_matrix_literal(const FieldPtr& ctx, std::string_view literal);

}  // namespace splitlab
