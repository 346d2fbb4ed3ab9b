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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitlab/field.hpp"
#include "splitlab/number_theory.hpp"

namespace splitlab {

/// Dense univariate polynomial over a FieldCtx, little-endian, with no
/// trailing zero coefficient. The zero polynomial has no coefficients and no
/// degree.
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr ctx, std::vector<Code> coeffs);

  static Poly zero(FieldPtr ctx) { return Poly(std::move(ctx), {}); }
  static Poly constant(FieldPtr ctx, Code c) { return Poly(std::move(ctx), {c}); }
  static Poly x(FieldPtr ctx) { return monomial(std::move(ctx), 1); }
  static Poly monomial(FieldPtr ctx, std::size_t k, Code c = 1);
  /// Inverse of rank_code(): little-endian base-q digits become coefficients.
  static Poly from_rank(FieldPtr ctx, std::uint64_t rank);

  const FieldPtr& ctx() const noexcept { return ctx_; }
  const FieldCtx& field() const noexcept { return *ctx_; }
  std::span<const Code> coeffs() const noexcept { return c_; }
  Code operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

  bool is_zero() const noexcept { return c_.empty(); }
  /// nullopt is the degree of the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  Code leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }

  /// Little-endian base-q integer of the coefficients (the lexicographic rank
  /// used by every scan). nullopt when it does not fit 64 bits.
  std::optional<std::uint64_t> rank_code() const;

  /// Literal form, e.g. "1,1,0,0,1" for x^4 + x + 1.
  std::string literal() const { return format_code_list(c_); }
  std::string pretty() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void normalize();

  FieldPtr ctx_;
  std::vector<Code> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& f, Code c);

struct PolyDivMod {
  Poly quot;
  Poly rem;
};
PolyDivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly make_monic(const Poly& f);

/// Monic gcd by Euclid. Throws BothZero when f = g = 0.
Poly gcd(const Poly& f, const Poly& g);

/// base^k mod m by square-and-multiply.
Poly pow_mod(const Poly& base, std::uint64_t k, const Poly& m);

/// Rabin's test: f of degree k is irreducible iff x^(q^k) = x mod f and
/// gcd(x^(q^(k/r)) - x, f) = 1 for every prime r | k.
bool is_irreducible(const Poly& f);

/// Irreducible and x has multiplicative order q^k - 1 modulo f.
bool is_primitive(const Poly& f, const Bounds& bounds = default_bounds());

/// Monic irreducible factors with multiplicities, found by trial division with
/// every monic polynomial of increasing degree up to deg f / 2.
std::vector<std::pair<Poly, unsigned>> factor_exhaustive(const Poly& f, const Bounds& bounds = default_bounds());

/// Number of polynomials of degree < deg f coprime to f.
BigInt q_totient(const Poly& f, CountMethod method = CountMethod::closed, const Bounds& bounds = default_bounds());

/// Ordered pairs (f1, f2): f1 nonzero with deg < n1, f2 monic with deg < n2,
/// gcd(f1, f2) = 1. Requires n1 >= n2 >= 1.
BigInt coprime_pair_count(unsigned n1, unsigned n2, const FieldPtr& ctx, CountMethod method,
                          const Bounds& bounds = default_bounds());

enum class IrreducibleFilter { all, primitive_only, irreducible_nonprimitive };

/// Monic degree-k polynomials passing `filter`, ascending rank_code.
std::vector<Poly> find_irreducibles(const FieldPtr& ctx, unsigned k, IrreducibleFilter filter,
                                    const Bounds& bounds = default_bounds());

/// Visits every monic polynomial of degree k in ascending rank_code order.
void for_each_monic(const FieldPtr& ctx, unsigned k, const std::function<void(const Poly&)>& fn,
                    const Bounds& bounds = default_bounds());

Poly parse_poly_literal(const FieldPtr& ctx, std::string_view literal);

}  // namespace splitlab
