"""Exact linear algebra over Q and Z.

Two layers live here. Small dense matrices of :class:`~fractions.Fraction`
(cutting forms of subspaces, coordinate changes) go through plain reduced row
echelon form. Large integer matrices (vanishing conditions) go through
:func:`integer_rank`: a modular pass that certifies full rank, then a kernel
certificate (multi-modular lift, checked exactly over Z), with fraction-free
Bareiss elimination as the fallback and as an independent reference.

Matrices are lists of rows throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence

import numpy as np

Matrix = list[list[Fraction]]

# 2**31 - 1; products of two residues fit in int64.
DEFAULT_PRIME = 2147483647


def to_fractions(rows: Iterable[Iterable]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over Q.

    Returns the nonzero rows of the echelon form and the pivot columns.
    """
    m = to_fractions(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                a = m[i][c]
                m[i] = [x - a * y for x, y in zip(m[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_q(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def kernel(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of the right null space, one basis vector per returned row.

    Vectors come from the reduced echelon form, so each has a 1 in its free
    column and 0 in the other free columns.
    """
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def in_row_space(rows: Sequence[Sequence], vec: Sequence) -> bool:
    if not rows:
        return all(x == 0 for x in vec)
    return rank_q(list(rows) + [list(vec)]) == rank_q(rows)


def same_row_space(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    return rref(a)[0] == rref(b)[0]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def determinant(rows: Sequence[Sequence]) -> Fraction:
    m = to_fractions(rows)
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        p = m[c][c]
        det *= p
        for i in range(c + 1, n):
            if m[i][c] != 0:
                a = m[i][c] / p
                m[i] = [x - a * y for x, y in zip(m[i], m[c])]
    return det


def primitive_integer_row(row: Sequence) -> list[int]:
    """Scale a rational row to coprime integers (sign left as is)."""
    fr = [Fraction(x) for x in row]
    den = lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free elimination.

    Every intermediate entry is a minor of the input, so the division by the
    previous pivot is exact. Columns whose remaining entries are all zero are
    skipped, which keeps that invariant intact.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    prev = 1
    rank = 0
    while work and work[0]:
        piv = next((i for i, r in enumerate(work) if r[0] != 0), None)
        if piv is None:
            work = [r[1:] for r in work]
            continue
        pr = work.pop(piv)
        p = pr[0]
        tail = pr[1:]
        nxt = []
        for r in work:
            a = r[0]
            if a == 0:
                if p == prev:
                    new = r[1:]
                else:
                    new = [x * p // prev for x in r[1:]]
            else:
                new = [(x * p - a * y) // prev for x, y in zip(r[1:], tail)]
            if any(new):
                nxt.append(new)
        work = nxt
        prev = p
        rank += 1
    return rank


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):  # deterministic below 3.4e14
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(bound: int = DEFAULT_PRIME + 1):
    """Primes below ``bound`` in decreasing order."""
    q = bound - 1
    while q > 2:
        if _is_prime(q):
            yield q
        q -= 1


def rref_mod_p(rows: Sequence[Sequence[int]], p: int = DEFAULT_PRIME):
    """Reduced row echelon form modulo ``p`` (p < 2**31).

    Returns ``(echelon, pivots)`` with ``echelon`` an int64 array holding the
    nonzero rows.
    """
    a = np.array([[x % p for x in r] for r in rows], dtype=np.int64)
    if a.size == 0:
        return a.reshape(0, len(rows[0]) if rows else 0), []
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = a[r, c:] * inv % p
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            factors = a[others, c][:, None]
            a[others, c:] = (a[others, c:] - factors * a[r, c:][None, :]) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank_mod_p(rows: Sequence[Sequence[int]], p: int = DEFAULT_PRIME) -> int:
    """Rank of an integer matrix reduced modulo the prime ``p`` (p < 2**31)."""
    if not rows or not rows[0]:
        return 0
    a = np.array([[x % p for x in r] for r in rows], dtype=np.int64)
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = a[r, c:] * inv % p
        below = r + 1 + np.flatnonzero(a[r + 1:, c])
        if below.size:
            factors = a[below, c][:, None]
            a[below, c:] = (a[below, c:] - factors * a[r, c:][None, :]) % p
        r += 1
    return r


def rational_reconstruct(a: int, m: int) -> Fraction | None:
    """The fraction n/d with |n|, d <= sqrt(m/2) congruent to ``a`` mod ``m``, if any."""
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound or gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def certified_kernel(rows: Sequence[Sequence[int]], max_primes: int = 64):
    """Rational null space of an integer matrix, verified exactly.

    Reduced echelon forms modulo several primes are combined by CRT and lifted
    to rationals; the candidate basis is accepted only once ``M v = 0`` holds
    over Z for every vector. Returns ``(rank, basis)`` or None if no
    candidate verified within ``max_primes`` primes.

    The rank returned is exact: it is at most the rational rank (it is a
    modular rank) and at least it (one verified kernel vector per free
    column).
    """
    ncols = len(rows[0])
    mat = np.array(rows, dtype=object)
    best_rank, pivots, modulus, residues = -1, None, 1, None
    for count, p in enumerate(primes_below()):
        if count >= max_primes:
            return None
        ech, piv = rref_mod_p(rows, p)
        if len(piv) < best_rank or (len(piv) == best_rank and piv != pivots):
            continue
        free = [c for c in range(ncols) if c not in set(piv)]
        # entry (row i, free column f) of the echelon form gives v_f[piv[i]] = -ech[i, f]
        res = [[-int(x) % p for x in ech[:, f]] for f in free]
        if len(piv) > best_rank:
            best_rank, pivots, modulus, residues = len(piv), piv, p, res
        else:
            residues = [[_crt(a, modulus, b, p) for a, b in zip(ra, rb)]
                        for ra, rb in zip(residues, res)]
            modulus *= p
        if not free:
            return best_rank, []
        basis = []
        for f, col in zip(free, residues):
            vals = [rational_reconstruct(x, modulus) for x in col]
            if any(v is None for v in vals):
                break
            v = [Fraction(0)] * ncols
            v[f] = Fraction(1)
            for pc, val in zip(pivots, vals):
                v[pc] = val
            basis.append(v)
        else:
            if all(_annihilates(mat, v) for v in basis):
                return best_rank, basis
    return None


def _crt(a: int, m: int, b: int, p: int) -> int:
    t = (b - a) * pow(m, -1, p) % p
    return a + m * t


def _annihilates(mat, v: list[Fraction]) -> bool:
    den = lcm(*(x.denominator for x in v))
    w = np.array([int(x * den) for x in v], dtype=object)
    return not any(mat.dot(w))


def integer_rank(rows: Sequence[Sequence[int]], modular_filter: bool = True,
                 prime: int = DEFAULT_PRIME) -> int:
    """Exact rank of an integer matrix.

    The rank modulo a prime never exceeds the rank over Q, so a modular rank
    equal to ``min(nrows, ncols)`` is already exact. Otherwise a verified
    kernel basis (:func:`certified_kernel`) pins the rank down, and
    :func:`bareiss_rank` settles anything that fails to verify. With
    ``modular_filter=False`` only Bareiss is used.
    """
    if not rows:
        return 0
    if not modular_filter:
        return bareiss_rank(rows)
    bound = min(len(rows), len(rows[0]))
    if rank_mod_p(rows, prime) == bound:
        return bound
    cert = certified_kernel(rows)
    if cert is not None:
        return cert[0]
    return bareiss_rank(rows)
