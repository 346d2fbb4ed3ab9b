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

#include "splitlab/tower.hpp"

#include <algorithm>

namespace splitlab {
namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h = (h ^ (h >> 33)) * 0xff51afd7ed558ccdULL;
  h = (h ^ (h >> 33)) * 0xc4ceb9fe1a85ec53ULL;
  return h ^ (h >> 33);
}

}  // namespace

TowerCtx::TowerCtx(FieldPtr base, Poly defining_poly)
    : base_(std::move(base)), d_(0), defining_(std::move(defining_poly)), size_(0), tag_(0) {
  if (!base_) throw Error(Errc::BadArgs, "tower without base field");
  if (!defining_.ctx() || !defining_.field().same_as(*base_)) {
    throw Error(Errc::ContextMismatch, "defining polynomial is not over the base field");
  }
  const auto deg = defining_.degree();
  if (!deg || *deg == 0) throw Error(Errc::DegreeZero, "defining polynomial must have degree >= 1");
  if (!defining_.is_monic()) throw Error(Errc::NotMonic, "defining polynomial must be monic");
  d_ = *deg;
  auto size = checked_pow(base_->order(), d_);
  if (!size) throw Error(Errc::SizeExceeded, "q^d does not fit below 2^63");
  size_ = *size;
  if (!is_irreducible(defining_)) {
    throw Error(Errc::NotIrreducible, defining_.pretty() + " is reducible over " + base_->describe());
  }

  tag_ = mix(mix(base_->tag(), 0x70e4), d_);
  for (Code c : defining_.coeffs()) tag_ = mix(tag_, c);

  const auto& F = *base_;
  std::vector<Code> cur(d_);
  for (std::size_t i = 0; i < d_; ++i) cur[i] = F.neg(defining_[i]);
  for (std::size_t i = 0; i + 1 < d_; ++i) {
    reduction_.push_back(cur);
    // multiply by x
    const Code top = cur[d_ - 1];
    for (std::size_t j = d_ - 1; j > 0; --j) cur[j] = F.add(cur[j - 1], F.mul(top, reduction_[0][j]));
    cur[0] = F.mul(top, reduction_[0][0]);
  }

  std::vector<Code> a(d_, 0);
  if (d_ == 1) {
    a[0] = F.neg(defining_[0]);
  } else {
    a[1] = 1;
  }
  alpha_ = wrap(std::move(a));
}

void TowerCtx::check(const FieldElement& a) const {
  if (a.ctx_tag != tag_ || a.coords.size() != d_) {
    throw Error(Errc::ContextMismatch, "element does not belong to " + describe());
  }
}

FieldElement TowerCtx::zero() const { return wrap(std::vector<Code>(d_, 0)); }
FieldElement TowerCtx::one() const { return from_base(1); }

FieldElement TowerCtx::from_base(Code c) const {
  if (!base_->contains(c)) throw Error(Errc::BadArgs, "base code out of range");
  std::vector<Code> v(d_, 0);
  v[0] = c;
  return wrap(std::move(v));
}

FieldElement TowerCtx::from_coords(std::span<const Code> coords) const {
  if (coords.size() != d_) throw Error(Errc::DimensionMismatch, "coordinate tuple has wrong length");
  for (Code c : coords) {
    if (!base_->contains(c)) throw Error(Errc::BadArgs, "coordinate out of range");
  }
  return wrap(std::vector<Code>(coords.begin(), coords.end()));
}

FieldElement TowerCtx::from_code(std::uint64_t code) const {
  if (code >= size_) throw Error(Errc::BadArgs, "element code out of range");
  const std::uint64_t q = base_->order();
  std::vector<Code> v(d_);
  for (auto& c : v) {
    c = code % q;
    code /= q;
  }
  return wrap(std::move(v));
}

std::uint64_t TowerCtx::code_of(const FieldElement& a) const {
  check(a);
  const std::uint64_t q = base_->order();
  std::uint64_t code = 0;
  for (auto it = a.coords.rbegin(); it != a.coords.rend(); ++it) code = code * q + *it;
  return code;
}

const std::vector<Code>& TowerCtx::coords_of(const FieldElement& a) const {
  check(a);
  return a.coords;
}

bool TowerCtx::is_zero(const FieldElement& a) const {
  check(a);
  return std::all_of(a.coords.begin(), a.coords.end(), [](Code c) { return c == 0; });
}

FieldElement TowerCtx::add(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::vector<Code> out(d_);
  for (std::size_t i = 0; i < d_; ++i) out[i] = base_->add(a.coords[i], b.coords[i]);
  return wrap(std::move(out));
}

FieldElement TowerCtx::sub(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  std::vector<Code> out(d_);
  for (std::size_t i = 0; i < d_; ++i) out[i] = base_->sub(a.coords[i], b.coords[i]);
  return wrap(std::move(out));
}

FieldElement TowerCtx::neg(const FieldElement& a) const {
  check(a);
  std::vector<Code> out(d_);
  for (std::size_t i = 0; i < d_; ++i) out[i] = base_->neg(a.coords[i]);
  return wrap(std::move(out));
}

std::vector<Code> TowerCtx::mul_coords(std::span<const Code> a, std::span<const Code> b) const {
  const auto& F = *base_;
  std::vector<Code> prod(2 * d_ - 1, 0);
  for (std::size_t i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
    }
  }
  for (std::size_t k = d_; k < prod.size(); ++k) {
    const Code c = prod[k];
    if (c == 0) continue;
    const auto& red = reduction_[k - d_];
    for (std::size_t i = 0; i < d_; ++i) prod[i] = F.add(prod[i], F.mul(c, red[i]));
  }
  prod.resize(d_);
  return prod;
}

FieldElement TowerCtx::mul(const FieldElement& a, const FieldElement& b) const {
  check(a);
  check(b);
  return wrap(mul_coords(a.coords, b.coords));
}

FieldElement TowerCtx::pow(const FieldElement& a, std::uint64_t k) const {
  check(a);
  std::vector<Code> result(d_, 0);
  result[0] = 1;
  std::vector<Code> b = a.coords;
  while (k != 0) {
    if (k & 1) result = mul_coords(result, b);
    k >>= 1;
    if (k != 0) b = mul_coords(b, b);
  }
  return wrap(std::move(result));
}

FieldElement TowerCtx::inv(const FieldElement& a) const {
  if (is_zero(a)) throw Error(Errc::DivisionByZero, "inverse of zero in " + describe());
  return pow(a, size_ - 2);
}

FieldElement TowerCtx::div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

FieldElement TowerCtx::frobenius(const FieldElement& a, std::uint64_t r) const {
  // a^(p^(e*d)) = a, so only r mod e*d matters.
  const std::uint64_t period = std::uint64_t{base_->degree()} * d_;
  return pow(a, *checked_pow(base_->characteristic(), r % period, ~std::uint64_t{0}));
}

std::string TowerCtx::describe() const {
  return "F_q[x]/(" + defining_.pretty() + ") over " + base_->describe();
}

TowerPtr build_extension(const FieldPtr& base, unsigned d, std::optional<Poly> defining_poly, bool prefer_primitive,
                         const Bounds& bounds) {
  if (!base) throw Error(Errc::BadArgs, "tower without base field");
  if (d == 0) throw Error(Errc::BadArgs, "extension degree must be at least 1");
  if (!checked_pow(base->order(), d)) throw Error(Errc::SizeExceeded, "q^d does not fit below 2^63");
  if (defining_poly) {
    if (defining_poly->degree() != std::optional<std::size_t>(d)) {
      throw Error(Errc::BadArgs, "defining polynomial degree differs from " + std::to_string(d));
    }
    return std::make_shared<const TowerCtx>(base, std::move(*defining_poly));
  }

  const std::uint64_t q = base->order();
  const std::uint64_t total = *checked_pow(q, d);
  std::vector<Code> coeffs(d + 1, 0);
  coeffs[d] = 1;
  std::optional<Poly> first_irreducible;
  for (std::uint64_t low = 0; low < total; ++low) {
    Code rest = low;
    for (unsigned i = 0; i < d; ++i) {
      coeffs[i] = rest % q;
      rest /= q;
    }
    Poly f(base, coeffs);
    if (!is_irreducible(f)) continue;
    if (!prefer_primitive) return std::make_shared<const TowerCtx>(base, std::move(f));
    if (!first_irreducible) first_irreducible = f;
    if (is_primitive(f, bounds)) return std::make_shared<const TowerCtx>(base, std::move(f));
  }
  return std::make_shared<const TowerCtx>(base, std::move(*first_irreducible));
}

namespace {

template <typename Ctx, typename Fn>
FieldElement dispatch(const Ctx& ctx, ArithOp op, const FieldElement& a, const ArithOperand& b, Fn&& binary) {
  auto elem = [&]() -> const FieldElement& {
    if (const auto* e = std::get_if<FieldElement>(&b)) return *e;
    throw Error(Errc::BadArgs, "operation needs a second element");
  };
  auto exponent = [&]() {
    if (const auto* k = std::get_if<std::uint64_t>(&b)) return *k;
    throw Error(Errc::BadArgs, "operation needs an exponent");
  };
  switch (op) {
    case ArithOp::add:
    case ArithOp::sub:
    case ArithOp::mul:
    case ArithOp::div:
      return binary(op, a, elem());
    case ArithOp::neg: return ctx.neg(a);
    case ArithOp::inv: return ctx.inv(a);
    case ArithOp::pow: return ctx.pow(a, exponent());
    case ArithOp::frobenius: return ctx.frobenius(a, exponent());
  }
  throw Error(Errc::BadArgs, "unknown arithmetic operation");
}

// FieldCtx works on codes; this adapter gives it the element-level surface.
struct PrimeAdapter {
  const FieldCtx& F;
  FieldElement neg(const FieldElement& a) const { return F.element(F.neg(F.code_of(a))); }
  FieldElement inv(const FieldElement& a) const { return F.element(F.inv(F.code_of(a))); }
  FieldElement pow(const FieldElement& a, std::uint64_t k) const { return F.element(F.pow(F.code_of(a), k)); }
  FieldElement frobenius(const FieldElement& a, std::uint64_t r) const {
    return F.element(F.frobenius(F.code_of(a), r));
  }
};

}  // namespace

FieldElement arith(const TowerCtx& ctx, ArithOp op, const FieldElement& a, const ArithOperand& b) {
  return dispatch(ctx, op, a, b, [&](ArithOp o, const FieldElement& x, const FieldElement& y) {
    switch (o) {
      case ArithOp::add: return ctx.add(x, y);
      case ArithOp::sub: return ctx.sub(x, y);
      case ArithOp::mul: return ctx.mul(x, y);
      default: return ctx.div(x, y);
    }
  });
}

FieldElement arith(const FieldCtx& ctx, ArithOp op, const FieldElement& a, const ArithOperand& b) {
  PrimeAdapter adapter{ctx};
  return dispatch(adapter, op, a, b, [&](ArithOp o, const FieldElement& x, const FieldElement& y) {
    const Code u = ctx.code_of(x), v = ctx.code_of(y);
    switch (o) {
      case ArithOp::add: return ctx.element(ctx.add(u, v));
      case ArithOp::sub: return ctx.element(ctx.sub(u, v));
      case ArithOp::mul: return ctx.element(ctx.mul(u, v));
      default: return ctx.element(ctx.div(u, v));
    }
  });
}

Poly minimal_polynomial(const TowerCtx& tower, const FieldElement& beta) {
  const std::size_t d = tower.degree();
  std::vector<RowVec> powers{tower.one().coords};
  FieldElement cur = tower.one();
  for (std::size_t k = 1; k <= d; ++k) {
    cur = tower.mul(cur, beta);
    powers.push_back(cur.coords);
    const auto kernel = left_kernel(MatrixFq::from_rows(tower.base_ptr(), d, powers));
    if (kernel.empty()) continue;
    // 1, ..., beta^(k-1) are independent, so the kernel is a line with a
    // nonzero last coordinate.
    const auto& v = kernel.front();
    const Code lead_inv = tower.base().inv(v.back());
    std::vector<Code> coeffs(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) coeffs[i] = tower.base().mul(v[i], lead_inv);
    return Poly(tower.base_ptr(), std::move(coeffs));
  }
  throw Error(Errc::BadArgs, "no linear dependency among d+1 powers");  // unreachable
}

bool generates(const TowerCtx& tower, const FieldElement& beta) {
  return minimal_polynomial(tower, beta).degree() == std::optional<std::size_t>(tower.degree());
}

std::uint64_t multiplicative_order(const TowerCtx& tower, const FieldElement& beta, const Bounds& bounds) {
  if (tower.is_zero(beta)) throw Error(Errc::ZeroElement, "zero has no multiplicative order");
  std::uint64_t order = tower.order() - 1;
  const FieldElement one = tower.one();
  for (auto [r, k] : factorize(order, bounds.factor)) {
    for (unsigned i = 0; i < k; ++i) {
      if (!(tower.pow(beta, order / r) == one)) break;
      order /= r;
    }
  }
  return order;
}

MatrixFq multiplication_matrix(const TowerCtx& tower, const FieldElement& beta) {
  const std::size_t d = tower.degree();
  MatrixFq m(tower.base_ptr(), d, d);
  FieldElement basis = tower.one();
  for (std::size_t i = 0; i < d; ++i) {
    const auto row = tower.mul(basis, beta);
    for (std::size_t j = 0; j < d; ++j) m.set(i, j, row.coords[j]);
    if (i + 1 < d) basis = tower.mul(basis, tower.alpha());
  }
  return m;
}

}  // namespace splitlab
