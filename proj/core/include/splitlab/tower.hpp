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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "splitlab/field.hpp"
#include "splitlab/linalg.hpp"
#include "splitlab/poly.hpp"

namespace splitlab {

class TowerCtx;
using TowerPtr = std::shared_ptr<const TowerCtx>;

/// F_{q^d} = F_q[x]/(defining_poly) over a base FieldCtx. Elements are
/// coordinate tuples with respect to 1, alpha, ..., alpha^(d-1), where alpha
/// is the class of x.
class TowerCtx {
 public:
  /// Validates that `defining_poly` is monic and irreducible over `base`.
  TowerCtx(FieldPtr base, Poly defining_poly);

  const FieldPtr& base_ptr() const noexcept { return base_; }
  const FieldCtx& base() const noexcept { return *base_; }
  std::size_t degree() const noexcept { return d_; }
  const Poly& defining_poly() const noexcept { return defining_; }
  const FieldElement& alpha() const noexcept { return alpha_; }
  /// q^d.
  std::uint64_t order() const noexcept { return size_; }
  std::uint64_t tag() const noexcept { return tag_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_base(Code c) const;
  FieldElement from_coords(std::span<const Code> coords) const;
  /// Element whose coordinates are the little-endian base-q digits of `code`.
  FieldElement from_code(std::uint64_t code) const;
  std::uint64_t code_of(const FieldElement& a) const;
  const std::vector<Code>& coords_of(const FieldElement& a) const;
  bool is_zero(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, std::uint64_t k) const;
  /// a^(p^r).
  FieldElement frobenius(const FieldElement& a, std::uint64_t r) const;

  /// Raw coordinate product, no context checks.
  std::vector<Code> mul_coords(std::span<const Code> a, std::span<const Code> b) const;

  std::string describe() const;

 private:
  void check(const FieldElement& a) const;
  FieldElement wrap(std::vector<Code> coords) const { return FieldElement{tag_, std::move(coords)}; }

  FieldPtr base_;
  std::size_t d_;
  Poly defining_;
  std::uint64_t size_;
  std::uint64_t tag_;
  FieldElement alpha_;
  // reduction_[i] = coordinates of x^(d+i) mod defining_poly
  std::vector<std::vector<Code>> reduction_;
};

/// The extension of degree d over `base`. Without an explicit polynomial the
/// least-rank monic irreducible is used, or with `prefer_primitive` the
/// least-rank primitive one.
TowerPtr build_extension(const FieldPtr& base, unsigned d, std::optional<Poly> defining_poly = std::nullopt,
                         bool prefer_primitive = false, const Bounds& bounds = default_bounds());

enum class ArithOp { add, sub, mul, div, neg, inv, pow, frobenius };
/// Second operand: an element for binary ops, an exponent for pow/frobenius.
using ArithOperand = std::variant<std::monostate, FieldElement, std::uint64_t>;

FieldElement arith(const TowerCtx& ctx, ArithOp op, const FieldElement& a, const ArithOperand& b = {});
FieldElement arith(const FieldCtx& ctx, ArithOp op, const FieldElement& a, const ArithOperand& b = {});

/// Monic least-degree annihilator over the base, from the first linear
/// dependency among 1, beta, beta^2, ...
Poly minimal_polynomial(const TowerCtx& tower, const FieldElement& beta);

/// True iff F_q(beta) is the whole tower.
bool generates(const TowerCtx& tower, const FieldElement& beta);

std::uint64_t multiplicative_order(const TowerCtx& tower, const FieldElement& beta,
                                   const Bounds& bounds = default_bounds());

/// The F_q-linear map x -> x * beta as a d x d matrix acting on row vectors:
/// coords(x * beta) = coords(x) * M.
MatrixFq multiplication_matrix(const TowerCtx& tower, const FieldElement& beta);

}  // namespace splitlab
