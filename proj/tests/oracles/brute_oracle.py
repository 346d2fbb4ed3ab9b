#!/usr/bin/env python3
# Copyright 2026 The splitlab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Works over prime fields only and never enumerates subspaces: splitting counts are
obtained from ordered m-tuples of field elements and divided by |GL_m|.
"""
import itertools
import sys


def polymulmod(a, b, f, p):
    """a, b little-endian coefficient lists; f monic little-endian."""
    d = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for i in range(d + 1):
                prod[k - d + i] = (prod[k - d + i] - c * f[i]) % p
    prod = prod[:d] + [0] * max(0, d - len(prod))
    return prod[:d]


def rank(rows, p):
    rows = [list(r) for r in rows]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                k = rows[i][c]
                rows[i] = [(x - k * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def elements(p, d):
    return [list(t)[::-1] for t in itertools.product(range(p), repeat=d)]


def splitting_bases(p, m, n, f):
    d = m * n
    alpha = [0, 1] + [0] * (d - 2) if d > 1 else None
    elems = elements(p, d)
    # alpha^j * v for each element, precomputed
    def orbit(v):
        out = [v]
        for _ in range(n - 1):
            out.append(polymulmod(out[-1], alpha, f, p))
        return out
    orbits = {tuple(v): orbit(v) for v in elems}
    count = 0
    for tup in itertools.product(elems, repeat=m):
        rows = []
        for j in range(n):
            for v in tup:
                rows.append(orbits[tuple(v)][j])
        if rank(rows, p) == d:
            count += 1
    return count


def gl_order(m, q):
    out = 1
    for i in range(m):
        out *= q ** m - q ** i
    return out


def charpoly_det(M, p):
    """det(xI - M) by Leibniz expansion over polynomials."""
    n = len(M)
    total = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if not seen[i]:
                j, L = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    L += 1
                if L % 2 == 0:
                    sign = -sign
        poly = [1]
        for i in range(n):
            entry = [(-M[i][perm[i]]) % p] + ([1] if i == perm[i] else [0])
            res = [0] * (len(poly) + 1)
            for a, x in enumerate(poly):
                for b, y in enumerate(entry):
                    res[a + b] = (res[a + b] + x * y) % p
            poly = res
        for k, c in enumerate(poly):
            total[k] = (total[k] + sign * c) % p
    return total


def block_companion(C, m, n):
    d = m * n
    T = [[0] * d for _ in range(d)]
    for b in range(1, n):
        for i in range(m):
            T[b * m + i][(b - 1) * m + i] = 1
    for b in range(n):
        for i in range(m):
            for j in range(m):
                T[b * m + i][(n - 1) * m + j] = C[b][i][j]
    return T


def matmul(A, B, p):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) % p for j in range(len(B[0]))] for i in range(len(A))]


def order(T, p, cap):
    d = len(T)
    I = [[int(i == j) for j in range(d)] for i in range(d)]
    P = T
    for k in range(1, cap + 1):
        if P == I:
            return k
        P = matmul(P, T, p)
    return None


def all_C(p, m, n):
    mats = [[[e[i * m + j] for j in range(m)] for i in range(m)]
            for e in itertools.product(range(p), repeat=m * m)]
    return itertools.product(mats, repeat=n)


def census(p, m, n):
    target = p ** (m * n) - 1
    singer = 0
    fibers = {}
    for C in all_C(p, m, n):
        T = block_companion(C, m, n)
        cp = tuple(charpoly_det(T, p))
        fibers[cp] = fibers.get(cp, 0) + 1
        if order(T, p, target) == target:
            singer += 1
    return singer, fibers


def coprime_pairs(p, N1, N2):
    def polys(N):
        return [list(t)[::-1] for t in itertools.product(range(p), repeat=N)]

    def strip(a):
        a = list(a)
        while a and a[-1] == 0:
            a.pop()
        return a

    def pmod(a, b):
        a = strip(a)
        b = strip(b)
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            s = len(a) - len(b)
            for i, y in enumerate(b):
                a[s + i] = (a[s + i] - c * y) % p
            a = strip(a)
        return a

    def gcd_deg(a, b):
        a, b = strip(a), strip(b)
        while b:
            a, b = b, pmod(a, b)
        return len(a) - 1

    count = 0
    for f1 in polys(N1):
        if not any(f1):
            continue
        for f2 in polys(N2):
            s = strip(f2)
            if not s or s[-1] != 1:
                continue
            if gcd_deg(f1, f2) == 0:
                count += 1
    return count


def t_splitting_count(T, p, m, n):
    d = m * n
    elems = elements(p, d)
    cnt = 0
    for tup in itertools.product(elems, repeat=m):
        rows = []
        cur = [list(v) for v in tup]
        for _ in range(n):
            rows.extend(cur)
            cur = [[sum(v[k] * T[k][j] for k in range(d)) % p for j in range(d)] for v in cur]
        if rank(rows, p) == d:
            cnt += 1
    return cnt // gl_order(m, p)


def main():
    print("N(2,2,2) x^4+x+1 =", splitting_bases(2, 2, 2, [1, 1, 0, 0, 1]))
    print("N(3,2,2) x^4+x+2 =", splitting_bases(3, 2, 2, [2, 1, 0, 0, 1]))
    print("N(2,2,3) x^6+x+1 =", splitting_bases(2, 2, 3, [1, 1, 0, 0, 0, 0, 1]))
    print("N(2,1,2) x^2+x+1 =", splitting_bases(2, 1, 2, [1, 1, 1]))
    if "--big" in sys.argv:
        print("N(2,3,2) x^6+x+1 =", splitting_bases(2, 3, 2, [1, 1, 0, 0, 0, 0, 1]))
    s, fib = census(2, 2, 2)
    print("census(2,2,2) singer =", s)
    for f in [(1, 1, 0, 0, 1), (1, 0, 0, 1, 1), (1, 1, 1, 1, 1)]:
        print("fiber", f, "=", fib.get(f, 0))
    print("fiber total =", sum(fib.values()))
    print("census(2,1,2) =", census(2, 2, 1)[0], " census(1,2,2) =", census(2, 1, 2)[0])
    for p in (2, 3):
        for N1 in range(1, 5):
            for N2 in range(1, N1 + 1):
                if p == 3 and N1 + N2 > 7:
                    continue
                print(f"nu q={p} ({N1},{N2}) =", coprime_pairs(p, N1, N2))
    # companion of x^2 + x over F_2: c0 = 0, c1 = 1
    print("S_T companion(x^2+x) =", t_splitting_count([[0, 0], [1, 1]], 2, 1, 2))


if __name__ == "__main__":
    main()
