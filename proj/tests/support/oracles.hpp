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

// Deliberately naive reference computations over prime fields. Nothing here
// calls into splitlab, so the unit tests compare two independent routes.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;
using Poly = std::vector<std::uint64_t>;  // little-endian, may carry trailing zeros

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  return 0;
}

inline Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline Poly pmul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return trim(c);
}

inline Poly padd(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = ((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0)) % p;
  }
  return trim(c);
}

inline Poly pneg(const Poly& a, std::uint64_t p) {
  Poly c = a;
  for (auto& x : c) x = (p - x) % p;
  return trim(c);
}

inline Poly pmod(Poly a, const Poly& f, std::uint64_t p) {
  a = trim(a);
  const Poly g = trim(f);
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (a.size() >= g.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) a[shift + i] = (a[shift + i] + p - c * g[i] % p) % p;
    a = trim(a);
  }
  return a;
}

inline std::size_t gcd_degree(Poly a, Poly b, std::uint64_t p) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = b;
    b = r;
  }
  return a.size() - 1;
}

/// Monic polynomial of degree k whose lower coefficients are the base-p
/// digits of `low`.
inline Poly monic_from(std::uint64_t low, std::size_t k, std::uint64_t p) {
  Poly f(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i, low /= p) f[i] = low % p;
  f[k] = 1;
  return f;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Trial division by every monic polynomial of degree 1..k/2.
inline bool irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t k = trim(f).size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    for (std::uint64_t low = 0; low < ipow(p, d); ++low) {
      if (pmod(f, monic_from(low, d, p), p).empty()) return false;
    }
  }
  return k >= 1;
}

inline std::size_t rank(Mat a, std::uint64_t p) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t s = inv_mod(a[r][c], p);
    for (auto& x : a[r]) x = x * s % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
    }
    ++r;
  }
  return r;
}

inline Mat matmul(const Mat& A, const Mat& B, std::uint64_t p) {
  Mat C(A.size(), Vec(B[0].size(), 0));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t k = 0; k < B.size(); ++k) {
      for (std::size_t j = 0; j < B[0].size(); ++j) C[i][j] = (C[i][j] + A[i][k] * B[k][j]) % p;
    }
  }
  return C;
}

inline Vec vecmul(const Vec& v, const Mat& M, std::uint64_t p) { return matmul(Mat{v}, M, p)[0]; }

/// det(xI - M) by Leibniz expansion over polynomial entries.
inline Poly charpoly(const Mat& M, std::uint64_t p) {
  const std::size_t d = M.size();
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) inversions += perm[i] > perm[j];
    }
    Poly term{1};
    for (std::size_t i = 0; i < d; ++i) {
      Poly entry{(p - M[i][perm[i]]) % p};
      if (perm[i] == i) entry.push_back(1);
      term = pmul(term, trim(entry), p);
      if (term.empty()) break;
    }
    total = padd(total, inversions % 2 ? pneg(term, p) : term, p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::uint64_t order_by_iteration(const Mat& T, std::uint64_t p, std::uint64_t cap) {
  const std::size_t d = T.size();
  Mat I(d, Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i) I[i][i] = 1;
  Mat P = T;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (P == I) return k;
    P = matmul(P, T, p);
  }
  return 0;
}

inline Vec digits(std::uint64_t code, std::size_t len, std::uint64_t p) {
  Vec v(len);
  for (auto& x : v) {
    x = code % p;
    code /= p;
  }
  return v;
}

inline std::uint64_t code_of(const Vec& v, std::uint64_t p) {
  std::uint64_t c = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) c = c * p + *it;
  return c;
}

/// All vectors of span(rows), as sorted codes: a canonical key of the span.
inline std::vector<std::uint64_t> span_key(const Mat& rows, std::uint64_t p) {
  const std::size_t len = rows.empty() ? 0 : rows[0].size();
  std::set<std::uint64_t> out;
  for (std::uint64_t c = 0; c < ipow(p, rows.size()); ++c) {
    const Vec coef = digits(c, rows.size(), p);
    Vec v(len, 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < len; ++j) v[j] = (v[j] + coef[i] * rows[i][j]) % p;
    }
    out.insert(code_of(v, p));
  }
  return {out.begin(), out.end()};
}

/// Number of k-dimensional subspaces of F_p^n found by collecting distinct
/// spans of independent k-tuples.
inline std::size_t count_subspaces(std::size_t n, std::size_t k, std::uint64_t p) {
  std::set<std::vector<std::uint64_t>> spans;
  const std::uint64_t vectors = ipow(p, n);
  std::vector<std::uint64_t> idx(k, 0);
  for (std::uint64_t t = 0; t < ipow(vectors, k); ++t) {
    Mat rows;
    for (auto i : idx) rows.push_back(digits(i, n, p));
    if (rank(rows, p) == k) spans.insert(span_key(rows, p));
    for (std::size_t i = k; i-- > 0;) {
      if (++idx[i] < vectors) break;
      idx[i] = 0;
    }
  }
  return spans.size();
}

inline std::uint64_t count_invertible(std::size_t m, std::uint64_t p) {
  std::uint64_t count = 0;
  for (std::uint64_t c = 0; c < ipow(p, m * m); ++c) {
    const Vec e = digits(c, m * m, p);
    Mat M(m, Vec(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) M[i][j] = e[i * m + j];
    }
    count += rank(M, p) == m;
  }
  return count;
}

/// Matrix of x -> x * beta on F_p[x]/(f), rows = coords of x^i * beta.
inline Mat mult_matrix(const Poly& beta, const Poly& f, std::uint64_t p) {
  const std::size_t d = f.size() - 1;
  Mat M(d, Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    Poly xi(i + 1, 0);
    xi[i] = 1;
    const Poly r = pmod(pmul(xi, beta, p), f, p);
    for (std::size_t j = 0; j < r.size(); ++j) M[i][j] = r[j];
  }
  return M;
}

/// Ordered m-tuples (v_1..v_m) with {v_i T^j} a basis of F_p^{mn}.
inline std::uint64_t splitting_tuples(const Mat& T, std::size_t m, std::size_t n, std::uint64_t p) {
  const std::size_t d = m * n;
  const std::uint64_t vectors = ipow(p, d);
  std::vector<std::uint64_t> idx(m, 0);
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < ipow(vectors, m); ++t) {
    Mat rows, cur;
    for (auto i : idx) cur.push_back(digits(i, d, p));
    for (std::size_t j = 0; j < n; ++j) {
      rows.insert(rows.end(), cur.begin(), cur.end());
      for (auto& v : cur) v = vecmul(v, T, p);
    }
    count += rank(rows, p) == d;
    for (std::size_t i = m; i-- > 0;) {
      if (++idx[i] < vectors) break;
      idx[i] = 0;
    }
  }
  return count;
}

/// Polynomials of degree < deg f coprime to f.
inline std::uint64_t q_totient(const Poly& f, std::uint64_t p) {
  const std::size_t k = trim(f).size() - 1;
  std::uint64_t count = 0;
  for (std::uint64_t c = 1; c < ipow(p, k); ++c) {
    if (gcd_degree(trim(digits(c, k, p)), f, p) == 0) ++count;
  }
  return count;
}

}  // namespace oracle
