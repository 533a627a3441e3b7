"""Exact integer linear algebra: characteristic polynomials, Smith
normal form, p-ranks and p-part elementary divisors.

Matrices are plain ``list[list[int]]`` with arbitrary-precision
entries; nothing in this module touches floating point.  Two graphs
are cospectral exactly when these integer characteristic polynomials
are equal, and coinvariant exactly when the invariant-factor lists
agree, so both routines must be exact rather than approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

Matrix = list[list[int]]


@dataclass(frozen=True, slots=True)
class CharPoly:
    """Coefficients c_0..c_n (ascending) of the monic det(xI - M)."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs)


@dataclass(frozen=True, slots=True)
class SnfResult:
    """Positive invariant factors f_1 | f_2 | ... plus zero count."""

    factors: tuple[int, ...]
    zeros: int

    @property
    def rank(self) -> int:
        return len(self.factors)

    def diagonal(self) -> tuple[int, ...]:
        return self.factors + (0,) * self.zeros

    def __str__(self) -> str:
        return " ".join(str(d) for d in self.diagonal())


def _check_square(m: Matrix) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    return n


def char_poly(m: Matrix) -> CharPoly:
    """Division-free characteristic polynomial (Berkowitz).

    Builds the polynomial of each leading principal submatrix in turn:
    the k-th step multiplies the previous coefficient vector by a
    Toeplitz matrix whose first column is
    1, -m[k][k], -R.C, -R.M'C, -R.M'^2 C, ...
    for the bordering row R, column C and leading block M'.  Only ring
    operations are used, so coefficients stay exact integers.
    """
    n = _check_square(m)
    poly = [1]  # descending coefficients, leading first
    for k in range(1, n + 1):
        row = m[k - 1]
        a = row[k - 1]
        toep = [1, -a]
        if k > 1:
            r = row[:k - 1]
            v = [m[i][k - 1] for i in range(k - 1)]
            block = m[: k - 1]
            for step in range(k - 1):
                toep.append(-sum(r[i] * v[i] for i in range(k - 1)))
                if step < k - 2:
                    v = [sum(block[i][j] * v[j] for j in range(k - 1))
                         for i in range(k - 1)]
        new = [0] * (k + 1)
        for j, pj in enumerate(poly):
            for i in range(j, k + 1):
                new[i] += toep[i - j] * pj
        poly = new
    poly.reverse()
    return CharPoly(tuple(poly))


def _divisibility_fixup(diag: list[int]) -> list[int]:
    """Turn a positive diagonal into a divisibility chain.

    Repeatedly replaces adjacent pairs by (gcd, lcm); each pass either
    fixes the chain or strictly migrates prime powers toward the tail,
    so the loop terminates.
    """
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = math.gcd(a, b)
                diag[i] = g
                diag[i + 1] = a // g * b
                changed = True
    return diag


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, u, v) with u*a + v*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _rank_and_minor(m: Matrix) -> tuple[int, int]:
    """Rational rank and the absolute value of one nonzero maximal minor.

    Fraction-free (Bareiss) elimination with full pivoting; every
    intermediate entry is itself a minor of ``m``, so growth stays
    polynomial.  The final pivot is the determinant of an r x r
    submatrix, which every invariant factor divides.
    """
    n = len(m)
    a = [list(row) for row in m]
    prev = 1
    r = 0
    for t in range(n):
        pr = pc = -1
        for i in range(t, n):
            ai = a[i]
            for j in range(t, n):
                if ai[j]:
                    pr, pc = i, j
                    break
            if pr >= 0:
                break
        if pr < 0:
            break
        if pr != t:
            a[t], a[pr] = a[pr], a[t]
        if pc != t:
            for rowv in a:
                rowv[t], rowv[pc] = rowv[pc], rowv[t]
        at = a[t]
        p = at[t]
        for i in range(t + 1, n):
            ai = a[i]
            x = ai[t]
            for j in range(t + 1, n):
                ai[j] = (p * ai[j] - x * at[j]) // prev
            ai[t] = 0
        prev = p
        r += 1
    return r, abs(prev)


def _diagonalize_mod(a: list[list[int]], d: int) -> list[int]:
    """Diagonalize working modulo d; the implicit lattice is
    rowspan + d*Z^n, so reducing any entry by d is a free row
    operation and nothing ever outgrows d."""
    n = len(a)
    for row in a:
        for j in range(n):
            row[j] %= d
    half = d >> 1
    diag: list[int] = []
    for t in range(n):
        # minimal symmetric-magnitude nonzero pivot in the trailing block
        pr = pc = -1
        best = d
        for i in range(t, n):
            ai = a[i]
            for j in range(t, n):
                x = ai[j]
                if x:
                    if x > half:
                        x = d - x
                    if x < best:
                        best = x
                        pr, pc = i, j
                        if x == 1:
                            break
            if best == 1:
                break
        if pr < 0:
            break  # trailing block vanished mod d
        if pr != t:
            a[t], a[pr] = a[pr], a[t]
        if pc != t:
            for rowv in a:
                rowv[t], rowv[pc] = rowv[pc], rowv[t]
        while True:
            at = a[t]
            p = at[t]
            dirty = False
            for i in range(t + 1, n):  # clear column t with row ops
                ai = a[i]
                x = ai[t]
                if not x:
                    continue
                if x % p == 0:
                    q = x // p
                    for j in range(t, n):
                        ai[j] = (ai[j] - q * at[j]) % d
                else:
                    g, u, v = _xgcd(p, x)
                    pg = p // g
                    xg = x // g
                    for j in range(t, n):
                        s, w = at[j], ai[j]
                        at[j] = (u * s + v * w) % d
                        ai[j] = (pg * w - xg * s) % d
                    p = g
            for j in range(t + 1, n):  # clear row t with column ops
                x = at[j]
                if not x:
                    continue
                if x % p == 0:
                    q = x // p
                    for i in range(t, n):
                        ai = a[i]
                        ai[j] = (ai[j] - q * ai[t]) % d
                else:
                    g, u, v = _xgcd(p, x)
                    pg = p // g
                    xg = x // g
                    for i in range(t, n):
                        ai = a[i]
                        s, w = ai[t], ai[j]
                        ai[t] = (u * s + v * w) % d
                        ai[j] = (pg * w - xg * s) % d
                    p = g
                    dirty = True  # the column ops can refill column t
            if not dirty:
                break
        diag.append(a[t][t])
    while len(diag) < n:
        diag.append(0)
    return diag


def snf(m: Matrix) -> SnfResult:
    """Smith normal form over the integers.

    First pass: fraction-free elimination finds the rank r and one
    nonzero r x r minor d.  Since every invariant factor divides d,
    the lattice spanned by the rows together with d*Z^n has invariant
    factors (f_1, ..., f_r, d, ..., d); the second pass diagonalizes
    with all arithmetic modulo d -- minimal-magnitude pivots, row and
    column combinations -- so entries never exceed d.  A final gcd/lcm
    pass over adjacent pairs enforces f_i | f_{i+1} regardless of
    pivot order.  Factors are reported positive; zero diagonal entries
    live in ``zeros``.
    """
    n = _check_square(m)
    r, d = _rank_and_minor(m)
    if r == 0:
        return SnfResult((), n)
    if d == 1:
        return SnfResult((1,) * r, n - r)
    raw = [math.gcd(e, d) for e in _diagonalize_mod([list(row) for row in m], d)]
    _divisibility_fixup(raw)
    assert all(x == d for x in raw[r:])  # padding rows carry exactly d
    return SnfResult(tuple(raw[:r]), n - r)


# ------------------------------------------------------------ primes

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for w in _MR_WITNESSES:
        if p == w:
            return True
        if p % w == 0:
            return False
    d = p - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def p_rank(m: Matrix, p: int) -> int:
    """Rank over F_p = number of invariant factors not divisible by p.

    Computed directly by Gaussian elimination mod p (cheap), which
    agrees with the SNF count; the test suite checks both routes.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = _check_square(m)
    a = [[x % p for x in row] for row in m]
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, n) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        arow = a[rank]
        for i in range(rank + 1, n):
            f = a[i][col]
            if f:
                f = f * inv % p
                ai = a[i]
                for j in range(col, n):
                    ai[j] = (ai[j] - f * arow[j]) % p
        rank += 1
    return rank


def p_part_divisors(m: Matrix, p: int) -> list:
    """p-adic valuations of the invariant factors, in chain order.

    Zero diagonal entries map to ``math.inf``.  The number of zero
    valuations equals p_rank(m, p).
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    result = snf(m)
    vals: list = []
    for f in result.factors:
        v = 0
        while f % p == 0:
            f //= p
            v += 1
        vals.append(v)
    vals.extend([math.inf] * result.zeros)
    return vals


# ------------------------------------------------------------ minors

def _det(mat: Matrix) -> int:
    """Bareiss fraction-free determinant."""
    a = [row[:] for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ai = a[i]
            ak = a[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * akk - aik * ak[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def gcd_of_k_minors(m: Matrix, k: int) -> int:
    """gcd of all k x k minors (0 if every one vanishes).

    Test oracle for the SNF: the product f_1 ... f_k equals this gcd.
    Exponential in n -- intended for n <= 6.
    """
    n = _check_square(m)
    if not 1 <= k <= n:
        raise ValueError(f"k = {k} outside 1..{n}")
    g = 0
    idx = list(range(n))
    for rows in combinations(idx, k):
        for cols in combinations(idx, k):
            sub = [[m[r][c] for c in cols] for r in rows]
            g = math.gcd(g, _det(sub))
            if g == 1:
                return 1
    return g


def determinant(m: Matrix) -> int:
    _check_square(m)
    return _det(m)
