"""Brute-force Hilbert functions of fat linear schemes.

For each component L with multiplicity m, pick coordinates (u, v) with L =
{v = 0}. A degree-t form F lies in (I_L)^m exactly when F, rewritten in
(u, v), has no monomial of v-degree below m. Each such monomial gives one
linear condition on the coefficients of F. Stacking the conditions of all
components and taking the exact rank gives h(I_X, t).

Columns are indexed by the degree-t monomials of x_0..x_n in graded
lexicographic order (x_0^t first), see :func:`monomials`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .exact_arith import binom
from .scheme_core import FatComponent, FatSchemeSpec, LinearSubspace, SchemeError

DEFAULT_CAP = 30


@lru_cache(maxsize=None)
def monomials(nvars: int, t: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of degree ``t`` in ``nvars`` variables, lex descending."""
    if nvars == 1:
        return ((t,),)
    out = []
    for a in range(t, -1, -1):
        for rest in monomials(nvars - 1, t - a):
            out.append((a,) + rest)
    return tuple(out)


class _Substitution:
    """Truncated expansions of x^alpha under x = A (u, v) for one subspace.

    The first k+1 columns of A span L (integer kernel vectors), the rest are
    standard basis vectors completing them, so every x_i is a short integer
    combination of the new variables.
    """

    def __init__(self, subspace: LinearSubspace, m: int):
        n = subspace.ambient_dim
        self.nvars = n + 1
        self.split = subspace.dim + 1          # y_0..y_k are u, the rest v
        self.m = m
        span = [linalg.primitive_integer_row(v) for v in subspace.basis()]
        _, pivots = linalg.rref(subspace.cutting_forms)
        cols = span + [[int(i == p) for i in range(n + 1)] for p in pivots]
        if linalg.rank_q(cols) != n + 1:
            raise SchemeError("degenerate parametrization; this is a bug")
        # x_i = sum_j cols[j][i] * y_j
        self.linear = [[(j, cols[j][i]) for j in range(n + 1) if cols[j][i]]
                       for i in range(n + 1)]
        self.cache: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {
            (0,) * (n + 1): {(0,) * (n + 1): 1}}

    def expand(self, alpha: tuple[int, ...]) -> dict[tuple[int, ...], int]:
        poly = self.cache.get(alpha)
        if poly is not None:
            return poly
        i = max(idx for idx, a in enumerate(alpha) if a)
        lower = list(alpha)
        lower[i] -= 1
        base = self.expand(tuple(lower))
        split, m = self.split, self.m
        out: dict[tuple[int, ...], int] = {}
        for exp, c in base.items():
            vdeg = sum(exp[split:])
            for j, a in self.linear[i]:
                if j >= split and vdeg + 1 >= m:
                    continue
                e = list(exp)
                e[j] += 1
                e = tuple(e)
                out[e] = out.get(e, 0) + a * c
        out = {e: c for e, c in out.items() if c}
        self.cache[alpha] = out
        return out


@lru_cache(maxsize=256)
def _substitution(subspace: LinearSubspace, m: int) -> _Substitution:
    return _Substitution(subspace, m)


@dataclass(frozen=True)
class ConditionsMatrix:
    rows: list[list[int]]
    columns: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    def rank(self) -> int:
        return linalg.integer_rank(self.rows)


def component_conditions(c: FatComponent, t: int) -> ConditionsMatrix:
    """Linear conditions on degree-t forms for vanishing to order m along c."""
    if c.multiplicity < 1:
        raise ValueError("component_conditions needs multiplicity >= 1")
    n = c.subspace.ambient_dim
    cols = monomials(n + 1, t) if t >= 0 else ()
    sub = _substitution(c.subspace, c.multiplicity)
    row_of: dict[tuple[int, ...], int] = {}
    entries: list[tuple[int, int, int]] = []
    for ci, alpha in enumerate(cols):
        for beta, coeff in sub.expand(alpha).items():
            ri = row_of.setdefault(beta, len(row_of))
            entries.append((ri, ci, coeff))
    rows = [[0] * len(cols) for _ in range(len(row_of))]
    for ri, ci, coeff in entries:
        rows[ri][ci] = coeff
    return ConditionsMatrix(rows, cols)


def conditions(X: FatSchemeSpec, t: int) -> ConditionsMatrix:
    cols = monomials(X.ambient_dim + 1, t) if t >= 0 else ()
    rows: list[list[int]] = []
    for c in X.components:
        rows.extend(component_conditions(c, t).rows)
    return ConditionsMatrix(rows, cols)


def oracle_hilbert(X: FatSchemeSpec, t: int) -> int:
    """h(I_X, t) = dim of degree-t forms minus the rank of the stacked conditions."""
    if t < 0:
        return 0
    total = binom(t + X.ambient_dim, X.ambient_dim)
    if not X.components:
        return total
    return total - conditions(X, t).rank()


@dataclass(frozen=True)
class NotFoundBelowCap:
    """Returned by alpha searches when no form exists up to ``cap``."""

    cap: int

    def __bool__(self):
        return False


def oracle_alpha(X: FatSchemeSpec, t_max: int = DEFAULT_CAP) -> "int | NotFoundBelowCap":
    """Least t <= t_max with h(I_X, t) > 0.

    The scan starts at the largest multiplicity: (I_L)^m has nothing below
    degree m.
    """
    if t_max < 0:
        raise ValueError("t_max must be >= 0")
    start = max(X.multiplicities, default=0)
    for t in range(start, t_max + 1):
        if oracle_hilbert(X, t) > 0:
            return t
    return NotFoundBelowCap(t_max)


def oracle_reg_points(X: FatSchemeSpec) -> int:
    """Regularity tau + 1 of a reduced set of points.

    tau is the least degree in which the points impose independent
    conditions; c points always do in degree c - 1.
    """
    if not X.is_reduced or any(c.subspace.dim != 0 for c in X.components):
        raise SchemeError("oracle_reg_points needs reduced points")
    c = len(X.components)
    n = X.ambient_dim
    for t in range(0, max(c, 1)):
        if oracle_hilbert(X, t) == binom(t + n, n) - c:
            return t + 1
    raise AssertionError("points failed to impose independent conditions in degree c-1")
