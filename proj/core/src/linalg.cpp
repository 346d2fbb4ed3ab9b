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

#include "splitlab/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace splitlab {
namespace {

void require_same(const MatrixFq& a, const MatrixFq& b) {
  if (!a.ctx() || !b.ctx() || !a.field().same_as(b.field())) {
    throw Error(Errc::ContextMismatch, "matrices over different fields");
  }
}

std::uint64_t to_u64(const BigInt& v) {
  if (v > BigInt(~std::uint64_t{0})) throw Error(Errc::ScanBoundExceeded, "count does not fit 64 bits");
  return static_cast<std::uint64_t>(v);
}

// Forward elimination in place; returns the rank.
std::size_t rank_inplace(const FieldCtx& F, std::vector<Code>& a, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
    }
    const Code inv = F.inv(a[r * cols + c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Code f = a[i * cols + c];
      if (f == 0) continue;
      const Code t = F.mul(f, inv);
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = F.sub(a[i * cols + j], F.mul(t, a[r * cols + j]));
      }
    }
    ++r;
  }
  return r;
}

std::size_t rank_gf2(std::vector<std::uint64_t> rows) {
  std::size_t r = 0;
  for (int bit = 63; bit >= 0 && r < rows.size(); --bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    auto piv = std::find_if(rows.begin() + r, rows.end(), [mask](std::uint64_t v) { return (v & mask) != 0; });
    if (piv == rows.end()) continue;
    std::iter_swap(rows.begin() + r, piv);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i] & mask) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r;
}

bool is_gf2(const FieldCtx& F) { return F.order() == 2; }

}  // namespace

MatrixFq::MatrixFq(FieldPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  if (!ctx_) throw Error(Errc::BadArgs, "matrix without coefficient field");
}

MatrixFq::MatrixFq(FieldPtr ctx, std::size_t rows, std::size_t cols, std::vector<Code> entries)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (!ctx_) throw Error(Errc::BadArgs, "matrix without coefficient field");
  if (a_.size() != rows * cols) throw Error(Errc::ShapeMismatch, "entry count does not match dimensions");
  for (Code c : a_) {
    if (!ctx_->contains(c)) throw Error(Errc::BadArgs, "matrix entry outside field");
  }
}

MatrixFq MatrixFq::identity(FieldPtr ctx, std::size_t n) {
  MatrixFq m(std::move(ctx), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixFq MatrixFq::from_rows(FieldPtr ctx, std::size_t cols, std::span<const RowVec> rows) {
  std::vector<Code> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(Errc::ShapeMismatch, "row length mismatch");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return MatrixFq(std::move(ctx), rows.size(), cols, std::move(flat));
}

bool MatrixFq::is_zero() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](Code c) { return c == 0; });
}

std::string MatrixFq::literal() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i != 0) os << ';';
    os << format_code_list(row(i));
  }
  return os.str();
}

bool operator==(const MatrixFq& a, const MatrixFq& b) {
  if (a.ctx_ && b.ctx_ && !a.ctx_->same_as(*b.ctx_)) return false;
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

MatrixFq operator*(const MatrixFq& a, const MatrixFq& b) {
  require_same(a, b);
  if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "inner dimensions differ");
  const auto& F = a.field();
  MatrixFq out(a.ctx(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Code f = a.at(i, k);
      if (f == 0) continue;
      const auto src = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) dst[j] = F.add(dst[j], F.mul(f, src[j]));
    }
  }
  return out;
}

MatrixFq operator+(const MatrixFq& a, const MatrixFq& b) {
  require_same(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::ShapeMismatch, "matrix sizes differ");
  std::vector<Code> out(a.entries().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field().add(a.entries()[i], b.entries()[i]);
  return MatrixFq(a.ctx(), a.rows(), a.cols(), std::move(out));
}

MatrixFq scale(const MatrixFq& m, Code c) {
  std::vector<Code> out(m.entries());
  for (auto& v : out) v = m.field().mul(v, c);
  return MatrixFq(m.ctx(), m.rows(), m.cols(), std::move(out));
}

MatrixFq matrix_pow(const MatrixFq& m, std::uint64_t k) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "power of a non-square matrix");
  MatrixFq result = MatrixFq::identity(m.ctx(), m.rows());
  MatrixFq base = m;
  while (k != 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

RowVec row_times(std::span<const Code> v, const MatrixFq& m) {
  if (v.size() != m.rows()) throw Error(Errc::ShapeMismatch, "vector length does not match matrix rows");
  const auto& F = m.field();
  RowVec out(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    const auto src = m.row(k);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = F.add(out[j], F.mul(v[k], src[j]));
  }
  return out;
}

MatrixFq eval_poly(const Poly& f, const MatrixFq& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "polynomial of a non-square matrix");
  if (!f.field().same_as(m.field())) throw Error(Errc::ContextMismatch, "polynomial and matrix fields differ");
  MatrixFq acc(m.ctx(), m.rows(), m.cols());
  // Horner
  const auto c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m + scale(MatrixFq::identity(m.ctx(), m.rows()), c[k]);
  }
  return acc;
}

RrefResult rref(MatrixFq m) {
  const auto& F = m.field();
  RrefResult res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      auto a = m.row(piv);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Code inv = F.inv(m.at(r, c));
    for (auto& v : m.row(r)) v = F.mul(v, inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const Code f = m.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m.set(i, j, F.sub(m.at(i, j), F.mul(f, m.at(r, j))));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.form = std::move(m);
  return res;
}

std::size_t rank(const MatrixFq& m) {
  if (is_gf2(m.field()) && m.cols() <= 64) {
    std::vector<std::uint64_t> packed(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m.at(i, j) != 0) packed[i] |= std::uint64_t{1} << (63 - j);
      }
    }
    return rank_gf2(std::move(packed));
  }
  std::vector<Code> a = m.entries();
  return rank_inplace(m.field(), a, m.rows(), m.cols());
}

std::size_t rank_of_rows(const FieldCtx& field, std::size_t cols, std::span<const RowVec> rows) {
  if (is_gf2(field) && cols <= 64) {
    std::vector<std::uint64_t> packed(rows.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (rows[i][j] != 0) packed[i] |= std::uint64_t{1} << (63 - j);
      }
    }
    return rank_gf2(std::move(packed));
  }
  std::vector<Code> a;
  a.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(Errc::ShapeMismatch, "row length mismatch");
    a.insert(a.end(), r.begin(), r.end());
  }
  return rank_inplace(field, a, rows.size(), cols);
}

std::vector<RowVec> left_kernel(const MatrixFq& m) {
  const auto& F = m.field();
  const std::size_t rows = m.rows(), cols = m.cols(), width = cols + rows;
  std::vector<Code> a(rows * width, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), a.begin() + i * width);
    a[i * width + cols + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * width + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(a.begin() + piv * width, a.begin() + (piv + 1) * width, a.begin() + r * width);
    const Code inv = F.inv(a[r * width + c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i * width + c] == 0) continue;
      const Code t = F.mul(a[i * width + c], inv);
      for (std::size_t j = 0; j < width; ++j) a[i * width + j] = F.sub(a[i * width + j], F.mul(t, a[r * width + j]));
    }
    ++r;
  }
  std::vector<RowVec> out;
  for (std::size_t i = r; i < rows; ++i) {
    out.emplace_back(a.begin() + i * width + cols, a.begin() + (i + 1) * width);
  }
  return out;
}

SubspaceBasis SubspaceBasis::from_rows(const FieldPtr& ctx, std::size_t ambient, std::span<const RowVec> rows) {
  auto res = rref(MatrixFq::from_rows(ctx, ambient, rows));
  if (res.rank != rows.size()) throw Error(Errc::DimensionMismatch, "spanning rows are linearly dependent");
  return from_rref(std::move(res.form), std::move(res.pivots));
}

SubspaceBasis SubspaceBasis::from_rref(MatrixFq basis, std::vector<std::size_t> pivots) {
  if (pivots.size() != basis.rows()) throw Error(Errc::DimensionMismatch, "one pivot per row required");
  SubspaceBasis out;
  out.basis_ = std::move(basis);
  out.pivots_ = std::move(pivots);
  return out;
}

bool SubspaceBasis::contains(std::span<const Code> v) const {
  if (v.size() != ambient_dim()) throw Error(Errc::DimensionMismatch, "vector length differs from ambient dimension");
  const auto& F = basis_.field();
  RowVec w(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Code f = w[pivots_[i]];
    if (f == 0) continue;
    const auto r = basis_.row(i);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = F.sub(w[j], F.mul(f, r[j]));
  }
  return std::all_of(w.begin(), w.end(), [](Code c) { return c == 0; });
}

bool SubspaceBasis::is_canonical() const {
  if (pivots_.size() != basis_.rows()) return false;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (i > 0 && pivots_[i] <= pivots_[i - 1]) return false;
    if (pivots_[i] >= basis_.cols()) return false;
    for (std::size_t j = 0; j < pivots_[i]; ++j) {
      if (basis_.at(i, j) != 0) return false;
    }
    if (basis_.at(i, pivots_[i]) != 1) return false;
    for (std::size_t k = 0; k < basis_.rows(); ++k) {
      if (k != i && basis_.at(k, pivots_[i]) != 0) return false;
    }
  }
  return true;
}

std::uint64_t SubspaceBasis::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Code c : basis_.entries()) {
    h ^= c + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return h ^ basis_.rows();
}

BigInt gaussian_binomial(long a, long b, std::uint64_t q) {
  if (b < 0 || a < b) throw Error(Errc::BadArgs, "gaussian binomial needs a >= b >= 0");
  BigInt num = 1, den = 1;
  const BigInt qa = big_pow(q, static_cast<std::uint64_t>(a));
  const BigInt qb = big_pow(q, static_cast<std::uint64_t>(b));
  for (long i = 0; i < b; ++i) {
    const BigInt qi = big_pow(q, static_cast<std::uint64_t>(i));
    num *= qa - qi;
    den *= qb - qi;
  }
  return num / den;
}

BigInt gl_order(unsigned m, std::uint64_t q) {
  BigInt out = 1;
  const BigInt qm = big_pow(q, m);
  for (unsigned i = 0; i < m; ++i) out *= qm - big_pow(q, i);
  return out;
}

SubspaceStream::SubspaceStream(FieldPtr ctx, std::size_t ambient, std::size_t k, const Bounds& bounds)
    : ctx_(std::move(ctx)), ambient_(ambient), k_(k), total_(0) {
  if (k > ambient) throw Error(Errc::BadArgs, "subspace dimension exceeds ambient dimension");
  const BigInt total = gaussian_binomial(static_cast<long>(ambient), static_cast<long>(k), ctx_->order());
  if (total > BigInt(bounds.scan)) {
    throw Error(Errc::ScanBoundExceeded,
                "[" + std::to_string(ambient) + " " + std::to_string(k) + "]_" + std::to_string(ctx_->order()) +
                    " = " + total.str() + " subspaces exceed scan bound " + std::to_string(bounds.scan));
  }
  total_ = to_u64(total);
  seek(0);
}

void SubspaceStream::load_profile() {
  free_slots_.clear();
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = profile_[i] + 1; j < ambient_; ++j) {
      if (std::find(profile_.begin() + static_cast<long>(i) + 1, profile_.end(), j) != profile_.end()) continue;
      free_slots_.emplace_back(i, j);
    }
  }
  filling_.assign(free_slots_.size(), 0);
}

bool SubspaceStream::advance_profile() {
  // Next k-subset of [0, ambient) in lexicographic order.
  if (k_ == 0) return false;
  std::size_t i = k_;
  while (i-- > 0) {
    if (profile_[i] < ambient_ - k_ + i) {
      ++profile_[i];
      for (std::size_t j = i + 1; j < k_; ++j) profile_[j] = profile_[j - 1] + 1;
      load_profile();
      return true;
    }
  }
  return false;
}

void SubspaceStream::seek(std::uint64_t index) {
  exhausted_ = index >= total_;
  fresh_ = true;
  profile_.resize(k_);
  for (std::size_t i = 0; i < k_; ++i) profile_[i] = i;
  load_profile();
  if (exhausted_) return;
  const std::uint64_t q = ctx_->order();
  while (true) {
    const std::uint64_t block = *checked_pow(q, free_slots_.size(), ~std::uint64_t{0});
    if (index < block) break;
    index -= block;
    advance_profile();
  }
  for (std::size_t s = filling_.size(); s-- > 0;) {
    filling_[s] = index % q;
    index /= q;
  }
}

SubspaceBasis SubspaceStream::current() const {
  MatrixFq m(ctx_, k_, ambient_);
  for (std::size_t i = 0; i < k_; ++i) m.set(i, profile_[i], 1);
  for (std::size_t s = 0; s < free_slots_.size(); ++s) m.set(free_slots_[s].first, free_slots_[s].second, filling_[s]);
  return SubspaceBasis::from_rref(std::move(m), profile_);
}

bool SubspaceStream::next(SubspaceBasis& out) {
  if (exhausted_) return false;
  if (fresh_) {
    fresh_ = false;
    out = current();
    return true;
  }
  const std::uint64_t q = ctx_->order();
  std::size_t s = filling_.size();
  bool carried = true;
  while (s-- > 0) {
    if (++filling_[s] < q) {
      carried = false;
      break;
    }
    filling_[s] = 0;
  }
  if (carried && !advance_profile()) {
    exhausted_ = true;
    return false;
  }
  out = current();
  return true;
}

void for_each_subspace(const FieldPtr& ctx, std::size_t ambient, std::size_t k,
                       const std::function<void(const SubspaceBasis&)>& fn, const Bounds& bounds) {
  SubspaceStream stream(ctx, ambient, k, bounds);
  SubspaceBasis w;
  while (stream.next(w)) fn(w);
}

void for_each_matrix(const FieldPtr& ctx, std::size_t rows, std::size_t cols,
                     const std::function<void(const MatrixFq&)>& fn, const Bounds& bounds) {
  const std::uint64_t q = ctx->order();
  auto total = checked_pow(q, rows * cols, bounds.scan == ~std::uint64_t{0} ? bounds.scan : bounds.scan + 1);
  if (!total) {
    throw Error(Errc::ScanBoundExceeded, std::to_string(q) + "^" + std::to_string(rows * cols) +
                                             " matrices exceed scan bound " + std::to_string(bounds.scan));
  }
  std::vector<Code> e(rows * cols, 0);
  for (std::uint64_t n = 0; n < *total; ++n) {
    fn(MatrixFq(ctx, rows, cols, e));
    for (std::size_t i = e.size(); i-- > 0;) {
      if (++e[i] < q) break;
      e[i] = 0;
    }
  }
}

BigInt count_nilpotent(unsigned m, std::uint64_t q, CountMethod method, const Bounds& bounds) {
  if (m == 0) throw Error(Errc::BadArgs, "matrix size must be positive");
  auto F = field_of_order(q);
  if (method == CountMethod::closed) return big_pow(q, std::uint64_t{m} * (m - 1));
  BigInt count = 0;
  for_each_matrix(
      F, m, m, [&](const MatrixFq& a) { if (matrix_pow(a, m).is_zero()) ++count; }, bounds);
  return count;
}

Poly char_poly(const MatrixFq& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "characteristic polynomial of a non-square matrix");
  const auto& F = m.field();
  const std::size_t n = m.rows();
  MatrixFq h = m;

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h.at(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) {
        const Code t = h.at(piv, c);
        h.set(piv, c, h.at(j + 1, c));
        h.set(j + 1, c, t);
      }
      for (std::size_t r = 0; r < n; ++r) {
        const Code t = h.at(r, piv);
        h.set(r, piv, h.at(r, j + 1));
        h.set(r, j + 1, t);
      }
    }
    const Code inv = F.inv(h.at(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      const Code u = F.mul(h.at(i, j), inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h.set(i, c, F.sub(h.at(i, c), F.mul(u, h.at(j + 1, c))));
      for (std::size_t r = 0; r < n; ++r) h.set(r, j + 1, F.add(h.at(r, j + 1), F.mul(u, h.at(r, i))));
    }
  }

  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{ik} (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}, 1-indexed.
  std::vector<Poly> p{Poly::constant(m.ctx(), 1)};
  const Poly x = Poly::x(m.ctx());
  for (std::size_t k = 1; k <= n; ++k) {
    Poly next = (x - Poly::constant(m.ctx(), h.at(k - 1, k - 1))) * p[k - 1];
    Code t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = F.mul(t, h.at(i, i - 1));
      if (t == 0) break;
      const Code coef = F.mul(h.at(i - 1, k - 1), t);
      if (coef != 0) next = next - scale(p[i - 1], coef);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

MatrixFq companion_matrix(const Poly& f) {
  const auto deg = f.degree();
  if (!deg || *deg == 0) throw Error(Errc::DegreeZero, "companion matrix needs degree >= 1");
  if (!f.is_monic()) throw Error(Errc::NotMonic, "companion matrix needs a monic polynomial");
  const std::size_t k = *deg;
  MatrixFq c(f.ctx(), k, k);
  for (std::size_t i = 1; i < k; ++i) c.set(i, i - 1, 1);
  for (std::size_t i = 0; i < k; ++i) c.set(i, k - 1, f.field().neg(f[i]));
  return c;
}

std::uint64_t matrix_order(const MatrixFq& m, const Bounds& bounds) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "order of a non-square matrix");
  const std::size_t d = m.rows();
  if (rank(m) != d) throw Error(Errc::Singular, "singular matrix has no multiplicative order");
  const MatrixFq id = MatrixFq::identity(m.ctx(), d);
  const auto qd = checked_pow(m.field().order(), d);

  const Poly cp = char_poly(m);
  if (qd && is_irreducible(cp)) {
    // The order divides q^d - 1; drop prime factors while the power stays trivial.
    std::uint64_t order = *qd - 1;
    for (auto [r, k] : factorize(order, bounds.factor)) {
      for (unsigned i = 0; i < k && order % r == 0; ++i) {
        if (!(matrix_pow(m, order / r) == id)) break;
        order /= r;
      }
    }
    return order;
  }

  const std::uint64_t limit = qd ? std::min(*qd - 1, bounds.iteration) : bounds.iteration;
  MatrixFq pw = m;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (pw == id) return k;
    pw = pw * m;
  }
  throw Error(Errc::IterationBoundExceeded, "matrix order exceeds iteration bound " + std::to_string(limit));
}

MatrixFq parse_matrix_literal(const FieldPtr& ctx, std::string_view literal) {
  std::vector<RowVec> rows;
  std::size_t pos = 0;
  while (pos <= literal.size()) {
    const auto semi = literal.find(';', pos);
    const auto tok = literal.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos);
    auto codes = parse_code_list(tok);
    for (auto c : codes) {
      if (!ctx->contains(c)) throw Error(Errc::ParseError, "matrix entry " + std::to_string(c) + " outside field");
    }
    rows.push_back(std::move(codes));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols || cols == 0) throw Error(Errc::ParseError, "ragged matrix literal '" + std::string(literal) + "'");
  }
  return MatrixFq::from_rows(ctx, cols, rows);
}

}  // namespace splitlab
