"""Binomial coefficients and the closed-form Hilbert functions the recursion bottoms out on."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

# Exact rationals are stdlib fractions throughout.
BigRational = Fraction


@lru_cache(maxsize=None)
def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def ambient_hilbert(n: int, t: int) -> int:
    """Dimension of the degree-``t`` forms on P^n."""
    if n < 1:
        raise ValueError(f"ambient dimension must be >= 1, got {n}")
    if t < 0:
        return 0
    return binom(t + n, n)


def fat_subspace_hilbert(n: int, k: int, m: int, t: int) -> int:
    """h((I_L)^m, t) for a k-dimensional linear subspace L of P^n.

    A form of degree t lies in (I_L)^m iff, written in coordinates adapted to
    L, every monomial has degree at least m in the n-k variables cutting out
    L; the subtracted sum counts the monomials that fail this.
    """
    if not 0 <= k <= n - 1:
        raise ValueError(f"need 0 <= k <= n-1, got n={n}, k={k}")
    if m < 1:
        raise ValueError(f"multiplicity must be >= 1, got {m}")
    if t < m:
        return 0
    bad = sum(binom(t - i + k, k) * binom(i + n - k - 1, n - k - 1) for i in range(m))
    return binom(t + n, n) - bad


def fat_points_on_line(multiplicities, t: int) -> int:
    """h(I, t) for fat points on P^1: the ideal is principal of degree sum(m)."""
    return max(0, t + 1 - sum(multiplicities))
