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

#include "splitlab/field.hpp"

#include <charconv>
#include <limits>
#include <sstream>

#include "splitlab/number_theory.hpp"
#include "splitlab/poly.hpp"

namespace splitlab {
namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finaliser over a running xor.
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

std::vector<Code> to_digits(Code a, std::uint64_t p, unsigned e) {
  std::vector<Code> d(e);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

Code from_digits(std::span<const Code> d, std::uint64_t p) {
  Code a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
  return a;
}

}  // namespace

FieldCtx::FieldCtx(std::uint64_t p, unsigned e, std::vector<Code> modulus)
    : p_(p), e_(e), q_(0), modulus_(std::move(modulus)), tag_(0) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(Errc::BadArgs, "extension degree must be at least 1");
  auto q = checked_pow(p, e);
  if (!q) throw Error(Errc::SizeExceeded, std::to_string(p) + "^" + std::to_string(e) + " does not fit below 2^63");
  q_ = *q;

  if (e_ == 1) {
    modulus_.clear();
  } else {
    prime_ = std::make_shared<const FieldCtx>(p_, 1, std::vector<Code>{});
    if (modulus_.size() != e_ + 1 || modulus_.back() != 1) {
      throw Error(Errc::NotMonic, "modulus must be monic of degree " + std::to_string(e_));
    }
    for (Code c : modulus_) {
      if (c >= p_) throw Error(Errc::BadArgs, "modulus coefficient out of range");
    }
    if (!is_irreducible(Poly(prime_field(), modulus_))) {
      throw Error(Errc::NotIrreducible, "modulus " + format_code_list(modulus_) + " is reducible over F_" +
                                            std::to_string(p_));
    }
  }

  tag_ = mix(mix(0x5f1e1d, p_), e_);
  for (Code c : modulus_) tag_ = mix(tag_, c);

  if (e_ > 1 && q_ <= kTableLimit) build_tables();
}

FieldPtr FieldCtx::prime_field() const {
  if (e_ == 1) return shared_from_this();
  return prime_;
}

void FieldCtx::build_tables() {
  const std::uint64_t group = q_ - 1;
  const auto factors = factorize(group);
  auto slow_pow = [&](Code a, std::uint64_t k) {
    Code r = 1;
    while (k != 0) {
      if (k & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      k >>= 1;
    }
    return r;
  };
  Code gen = 0;
  for (Code g = 2; g < q_ && gen == 0; ++g) {
    bool ok = true;
    for (auto [r, k] : factors) {
      if (slow_pow(g, group / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) gen = g;
  }
  exp_.resize(2 * group);
  log_.assign(q_, 0);
  Code cur = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = cur;
    exp_[i + group] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_slow(cur, gen);
  }
}

Code FieldCtx::add(Code a, Code b) const {
  if (e_ == 1) {
    const Code s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  Code out = 0, scale = 1;
  while (a != 0 || b != 0) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Code FieldCtx::neg(Code a) const {
  if (p_ == 2) return a;
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  Code out = 0, scale = 1;
  while (a != 0) {
    const Code d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Code FieldCtx::sub(Code a, Code b) const { return add(a, neg(b)); }

Code FieldCtx::mul_slow(Code a, Code b) const {
  const auto da = to_digits(a, p_, e_);
  const auto db = to_digits(b, p_, e_);
  std::vector<Code> prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) {
      prod[i + j] = (prod[i + j] + mul_mod(da[i], db[j], p_)) % p_;
    }
  }
  for (std::size_t k = prod.size(); k-- > e_;) {
    const Code c = prod[k];
    if (c == 0) continue;
    for (unsigned i = 0; i <= e_; ++i) {
      const std::size_t idx = k - e_ + i;
      prod[idx] = (prod[idx] + p_ - mul_mod(c, modulus_[i], p_)) % p_;
    }
  }
  return from_digits(std::span<const Code>(prod.data(), e_), p_);
}

Code FieldCtx::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  if (e_ == 1) return mul_mod(a, b, p_);
  if (!log_.empty()) return exp_[std::uint64_t{log_[a]} + log_[b]];
  return mul_slow(a, b);
}

Code FieldCtx::pow(Code a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  if (e_ == 1) return pow_mod(a, k, p_);
  if (!log_.empty()) {
    const std::uint64_t group = q_ - 1;
    return exp_[mul_mod(log_[a], k % group, group)];
  }
  Code r = 1;
  while (k != 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Code FieldCtx::inv(Code a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in " + describe());
  if (!log_.empty()) {
    const std::uint64_t group = q_ - 1;
    return exp_[(group - log_[a]) % group];
  }
  return pow(a, q_ - 2);
}

Code FieldCtx::div(Code a, Code b) const { return mul(a, inv(b)); }

Code FieldCtx::frobenius(Code a, std::uint64_t r) const {
  return pow(a, *checked_pow(p_, r % e_, std::numeric_limits<std::uint64_t>::max()));
}

FieldElement FieldCtx::element(Code a) const {
  if (a >= q_) throw Error(Errc::BadArgs, "code " + std::to_string(a) + " outside " + describe());
  return FieldElement{tag_, {a}};
}

Code FieldCtx::code_of(const FieldElement& a) const {
  if (a.ctx_tag != tag_ || a.coords.size() != 1) {
    throw Error(Errc::ContextMismatch, "element does not belong to " + describe());
  }
  return a.coords.front();
}

std::string FieldCtx::describe() const {
  std::string out = std::to_string(p_) + "^" + std::to_string(e_);
  if (e_ > 1) out += " mod " + format_code_list(modulus_);
  return out;
}

FieldPtr build_field(std::uint64_t p, unsigned e) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(Errc::BadArgs, "extension degree must be at least 1");
  auto q = checked_pow(p, e);
  if (!q) throw Error(Errc::SizeExceeded, std::to_string(p) + "^" + std::to_string(e) + " does not fit below 2^63");
  if (e == 1) return std::make_shared<const FieldCtx>(p, 1, std::vector<Code>{});

  auto prime = std::make_shared<const FieldCtx>(p, 1, std::vector<Code>{});
  std::vector<Code> coeffs(e + 1, 0);
  coeffs[e] = 1;
  for (std::uint64_t low = 0; low < *q; ++low) {
    Code rest = low;
    for (unsigned i = 0; i < e; ++i) {
      coeffs[i] = rest % p;
      rest /= p;
    }
    if (coeffs[0] == 0) continue;
    if (is_irreducible(Poly(prime, coeffs))) return std::make_shared<const FieldCtx>(p, e, coeffs);
  }
  throw Error(Errc::NotIrreducible, "no irreducible polynomial found");  // unreachable
}

FieldPtr build_field(std::uint64_t p, unsigned e, std::vector<Code> modulus) {
  return std::make_shared<const FieldCtx>(p, e, std::move(modulus));
}

FieldPtr field_of_order(std::uint64_t q) {
  auto pe = prime_power(q);
  if (!pe) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  return build_field(pe->first, pe->second);
}

std::pair<std::uint64_t, unsigned> parse_field_spec(std::string_view spec) {
  auto parse_uint = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw Error(Errc::ParseError, "bad field spec '" + std::string(spec) + "'");
    }
    return v;
  };
  if (auto caret = spec.find('^'); caret != std::string_view::npos) {
    const auto p = parse_uint(spec.substr(0, caret));
    const auto e = parse_uint(spec.substr(caret + 1));
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    return {p, static_cast<unsigned>(e)};
  }
  const auto q = parse_uint(spec);
  auto pe = prime_power(q);
  if (!pe) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  return *pe;
}

std::vector<std::uint64_t> parse_code_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return out;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto tok = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(Errc::ParseError, "bad code list '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_code_list(std::span<const Code> codes) {
  std::ostringstream os;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i != 0) os << ',';
    os << codes[i];
  }
  return os.str();
}

}  // namespace splitlab
