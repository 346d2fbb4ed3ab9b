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

#include "splitlab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace splitlab {
namespace {

void require_same(const Poly& a, const Poly& b) {
  if (!a.ctx() || !b.ctx() || !a.field().same_as(b.field())) {
    throw Error(Errc::ContextMismatch, "polynomials over different fields");
  }
}

std::uint64_t require_scan(std::uint64_t q, std::uint64_t k, std::uint64_t bound, Errc code) {
  auto n = checked_pow(q, k, bound == ~std::uint64_t{0} ? bound : bound + 1);
  if (!n) {
    throw Error(code, std::to_string(q) + "^" + std::to_string(k) + " candidates exceed bound " +
                          std::to_string(bound));
  }
  return *n;
}

}  // namespace

Poly::Poly(FieldPtr ctx, std::vector<Code> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  if (!ctx_) throw Error(Errc::BadArgs, "polynomial without coefficient field");
  for (Code c : c_) {
    if (!ctx_->contains(c)) throw Error(Errc::BadArgs, "coefficient " + std::to_string(c) + " outside field");
  }
  normalize();
}

Poly Poly::monomial(FieldPtr ctx, std::size_t k, Code c) {
  std::vector<Code> v(k + 1, 0);
  v[k] = c;
  return Poly(std::move(ctx), std::move(v));
}

Poly Poly::from_rank(FieldPtr ctx, std::uint64_t rank) {
  const std::uint64_t q = ctx->order();
  std::vector<Code> v;
  while (rank != 0) {
    v.push_back(rank % q);
    rank /= q;
  }
  return Poly(std::move(ctx), std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<std::size_t> Poly::degree() const noexcept {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

std::optional<std::uint64_t> Poly::rank_code() const {
  const std::uint64_t q = ctx_->order();
  __extension__ unsigned __int128 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * q + *it;
    if (acc > ~std::uint64_t{0}) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

std::string Poly::pretty() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << c_[k];
      continue;
    }
    if (c_[k] != 1) os << c_[k] << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.ctx_ && b.ctx_ && !a.ctx_->same_as(*b.ctx_)) return false;
  return a.c_ == b.c_;
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same(a, b);
  const auto& F = a.field();
  std::vector<Code> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a[i], b[i]);
  return Poly(a.ctx(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same(a, b);
  const auto& F = a.field();
  std::vector<Code> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a[i], b[i]);
  return Poly(a.ctx(), std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.ctx());
  const auto& F = a.field();
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  std::vector<Code> out(ca.size() + cb.size() - 1, 0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(ca[i], cb[j]));
    }
  }
  return Poly(a.ctx(), std::move(out));
}

Poly scale(const Poly& f, Code c) {
  std::vector<Code> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& v : out) v = f.field().mul(v, c);
  return Poly(f.ctx(), std::move(out));
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  const auto& F = a.field();
  std::vector<Code> rem(a.coeffs().begin(), a.coeffs().end());
  const auto cb = b.coeffs();
  const std::size_t db = cb.size() - 1;
  if (rem.size() < cb.size()) return {Poly::zero(a.ctx()), a};
  std::vector<Code> quot(rem.size() - db, 0);
  const Code lead_inv = F.inv(cb.back());
  for (std::size_t k = rem.size(); k-- > db;) {
    const Code c = rem[k];
    if (c == 0) continue;
    const Code t = F.mul(c, lead_inv);
    quot[k - db] = t;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[k - db + i] = F.sub(rem[k - db + i], F.mul(t, cb[i]));
    }
  }
  rem.resize(db);
  return {Poly(a.ctx(), std::move(quot)), Poly(a.ctx(), std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).rem; }

Poly make_monic(const Poly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return scale(f, f.field().inv(f.leading()));
}

Poly gcd(const Poly& f, const Poly& g) {
  require_same(f, g);
  if (f.is_zero() && g.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0) is undefined");
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Poly pow_mod(const Poly& base, std::uint64_t k, const Poly& m) {
  Poly result = Poly::constant(m.ctx(), 1) % m;
  Poly b = base % m;
  while (k != 0) {
    if (k & 1) result = (result * b) % m;
    b = (b * b) % m;
    k >>= 1;
  }
  return result;
}

bool is_irreducible(const Poly& f) {
  const auto deg = f.degree();
  if (!deg || *deg == 0) throw Error(Errc::DegreeZero, "irreducibility needs degree >= 1");
  const std::size_t k = *deg;
  if (k == 1) return true;
  const Poly g = make_monic(f);
  const std::uint64_t q = g.field().order();
  const Poly x = Poly::x(g.ctx()) % g;

  // frob[i] = x^(q^i) mod g
  std::vector<Poly> frob{x};
  for (std::size_t i = 1; i <= k; ++i) frob.push_back(pow_mod(frob.back(), q, g));
  if (!(frob[k] == x)) return false;
  for (auto [r, mult] : factorize(k)) {
    if (!gcd(frob[k / r] - x, g).is_one()) return false;
  }
  return true;
}

bool is_primitive(const Poly& f, const Bounds& bounds) {
  const auto deg = f.degree();
  if (!deg || *deg == 0) throw Error(Errc::DegreeZero, "primitivity needs degree >= 1");
  if (!f.is_monic()) throw Error(Errc::NotMonic, "primitivity is defined for monic polynomials");
  if (f[0] == 0) return false;
  if (!is_irreducible(f)) return false;
  const std::uint64_t q = f.field().order();
  auto qk = checked_pow(q, *deg);
  if (!qk) throw Error(Errc::SizeExceeded, "q^k does not fit below 2^63");
  const std::uint64_t group = *qk - 1;
  const Poly x = Poly::x(f.ctx());
  for (auto [r, mult] : factorize(group, bounds.factor)) {
    if (pow_mod(x, group / r, f).is_one()) return false;
  }
  return true;
}

std::vector<std::pair<Poly, unsigned>> factor_exhaustive(const Poly& f, const Bounds& bounds) {
  if (f.is_zero()) throw Error(Errc::BadArgs, "cannot factor the zero polynomial");
  std::vector<std::pair<Poly, unsigned>> out;
  Poly rest = make_monic(f);
  const std::uint64_t q = f.field().order();
  for (unsigned k = 1; rest.degree().value() >= 2 * std::size_t{k}; ++k) {
    require_scan(q, k, bounds.scan, Errc::FactorSearchExceeded);
    for_each_monic(
        f.ctx(), k,
        [&](const Poly& g) {
          if (rest.degree().value() < k) return;
          unsigned mult = 0;
          while (true) {
            auto dm = divmod(rest, g);
            if (!dm.rem.is_zero()) break;
            rest = std::move(dm.quot);
            ++mult;
          }
          if (mult != 0) out.emplace_back(g, mult);
        },
        Bounds{~std::uint64_t{0}, bounds.factor, bounds.iteration});
  }
  if (rest.degree().value() >= 1) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& pr) { return pr.first == rest; });
    if (it != out.end()) {
      ++it->second;
    } else {
      out.emplace_back(rest, 1);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.rank_code() < b.first.rank_code();
  });
  return out;
}

BigInt q_totient(const Poly& f, CountMethod method, const Bounds& bounds) {
  const auto deg = f.degree();
  if (!deg || *deg == 0) throw Error(Errc::DegreeZero, "q-totient needs degree >= 1");
  const std::uint64_t q = f.field().order();
  const std::size_t k = *deg;
  if (method == CountMethod::closed) {
    std::size_t covered = 0;
    BigInt acc = 1;
    for (const auto& [g, mult] : factor_exhaustive(f, bounds)) {
      const std::size_t ni = *g.degree();
      covered += ni;
      acc *= big_pow(q, ni) - 1;
    }
    return acc * big_pow(q, k - covered);
  }
  const std::uint64_t total = require_scan(q, k, bounds.scan, Errc::ScanBoundExceeded);
  BigInt count = 0;
  for (std::uint64_t r = 0; r < total; ++r) {
    if (gcd(Poly::from_rank(f.ctx(), r), f).is_one()) ++count;
  }
  return count;
}

BigInt coprime_pair_count(unsigned n1, unsigned n2, const FieldPtr& ctx, CountMethod method,
                          const Bounds& bounds) {
  if (n2 == 0) throw Error(Errc::BadArgs, "degree bounds must be positive");
  if (n1 < n2) throw Error(Errc::BoundOrder, "coprime census requires N1 >= N2");
  const std::uint64_t q = ctx->order();
  if (method == CountMethod::closed) return big_pow(q, n1 + n2 - 1) - 1;

  require_scan(q, n1 + n2, bounds.scan, Errc::ScanBoundExceeded);
  const std::uint64_t f1_total = *checked_pow(q, n1);
  std::vector<Poly> monics;
  for (unsigned t = 0; t < n2; ++t) {
    for_each_monic(ctx, t, [&](const Poly& g) { monics.push_back(g); }, bounds);
  }
  BigInt count = 0;
  for (std::uint64_t r = 1; r < f1_total; ++r) {
    const Poly f1 = Poly::from_rank(ctx, r);
    for (const auto& f2 : monics) {
      if (gcd(f1, f2).is_one()) ++count;
    }
  }
  return count;
}

void for_each_monic(const FieldPtr& ctx, unsigned k, const std::function<void(const Poly&)>& fn,
                    const Bounds& bounds) {
  const std::uint64_t q = ctx->order();
  const std::uint64_t total = require_scan(q, k, bounds.scan, Errc::ScanBoundExceeded);
  std::vector<Code> coeffs(k + 1, 0);
  coeffs[k] = 1;
  for (std::uint64_t low = 0; low < total; ++low) {
    fn(Poly(ctx, coeffs));
    for (unsigned i = 0; i < k; ++i) {
      if (++coeffs[i] < q) break;
      coeffs[i] = 0;
    }
  }
}

std::vector<Poly> find_irreducibles(const FieldPtr& ctx, unsigned k, IrreducibleFilter filter,
                                    const Bounds& bounds) {
  if (k == 0) throw Error(Errc::DegreeZero, "irreducibles need degree >= 1");
  std::vector<Poly> out;
  for_each_monic(
      ctx, k,
      [&](const Poly& f) {
        if (!is_irreducible(f)) return;
        if (filter == IrreducibleFilter::all) {
          out.push_back(f);
          return;
        }
        const bool prim = is_primitive(f, bounds);
        if ((filter == IrreducibleFilter::primitive_only) == prim) out.push_back(f);
      },
      bounds);
  return out;
}

Poly parse_poly_literal(const FieldPtr& ctx, std::string_view literal) {
  auto codes = parse_code_list(literal);
  for (auto c : codes) {
    if (!ctx->contains(c)) {
      throw Error(Errc::ParseError, "coefficient " + std::to_string(c) + " outside " + ctx->describe());
    }
  }
  return Poly(ctx, std::move(codes));
}

}  // namespace splitlab
