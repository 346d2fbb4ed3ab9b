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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitlab/common.hpp"

namespace splitlab {

/// Canonical element encoding: base-p digits are the coefficients of the
/// residue representative, little-endian. Codes of F_q live in [0, q).
using Code = std::uint64_t;

/// An element together with a fingerprint of the context that owns it.
/// Elements of F_q carry one coordinate; tower elements carry d of them.
struct FieldElement {
  std::uint64_t ctx_tag = 0;
  std::vector<Code> coords;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// F_q with q = p^e, realised as F_p[x]/(modulus). Immutable once built.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  /// Validates everything: p prime, q < 2^63, modulus monic irreducible of
  /// degree e (ignored and expected empty when e == 1).
  FieldCtx(std::uint64_t p, unsigned e, std::vector<Code> modulus);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return e_; }
  std::uint64_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return e_ == 1; }
  /// Little-endian F_p codes of the defining polynomial; empty for prime fields.
  const std::vector<Code>& modulus() const noexcept { return modulus_; }
  std::uint64_t tag() const noexcept { return tag_; }

  /// The prime subfield F_p (this context itself when e == 1).
  FieldPtr prime_field() const;

  bool same_as(const FieldCtx& other) const noexcept { return tag_ == other.tag_; }
  bool contains(Code a) const noexcept { return a < q_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const;
  Code pow(Code a, std::uint64_t k) const;
  /// a^(p^r).
  Code frobenius(Code a, std::uint64_t r) const;

  FieldElement element(Code a) const;
  /// Unwraps an element, throwing ContextMismatch if it belongs elsewhere.
  Code code_of(const FieldElement& a) const;

  /// "p^e" plus the modulus literal when e > 1.
  std::string describe() const;

 private:
  Code mul_slow(Code a, Code b) const;
  void build_tables();

  std::uint64_t p_;
  unsigned e_;
  std::uint64_t q_;
  std::vector<Code> modulus_;
  std::uint64_t tag_;
  // Discrete log tables for small non-prime fields.
  std::vector<std::uint32_t> log_;
  std::vector<Code> exp_;
  FieldPtr prime_;
};

/// F_{p^e} with the canonical modulus: the monic irreducible of degree e with
/// the least little-endian code.
FieldPtr build_field(std::uint64_t p, unsigned e);
FieldPtr build_field(std::uint64_t p, unsigned e, std::vector<Code> modulus);

/// F_q for a prime power q.
FieldPtr field_of_order(std::uint64_t q);

/// Parses "p^e" (or a bare prime power such as "4") into (p, e).
std::pair<std::uint64_t, unsigned> parse_field_spec(std::string_view spec);

/// Comma-separated unsigned integers, e.g. "1,1,0,0,1".
std::vector<std::uint64_t> parse_code_list(std::string_view text);
std::string format_code_list(std::span<const Code> codes);

}  // namespace splitlab
