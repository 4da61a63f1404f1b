"""Recursive Hilbert functions and initial degrees of inclic schemes.

With coordinates adapted so that H_0 = {x_0 = 0} and L_0 = {x_{k+1} = .. = x_n = 0},
the ideal of W = l_0 L_0 + Y splits by powers of x_0:

    I_W = sum_j x_0^j (I_{Y'_j} meet (x_{k+1}, .., x_n)^{l_0})

where Y'_j is the trace of Y on H_0 with every multiplicity lowered by j.
From degree l' = max multiplicity of Y on, every summand is the ideal of
l_0 L_0 itself, so

    h(I_W, t) = sum_{j=0}^{lam} h(truncated Y'_j, t - j) + h((I_{L_0})^{l_0}, t - l'),
    lam = min(l' - 1, t - l_0).

Extra hyperplanes H_j only shift the degree: I_X = prod eta_j^{h_j} I_W.

The traces Y'_j live in P^{n-1} and are answered by a :class:`HilbertProvider`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Protocol

from . import linalg
from .exact_arith import ambient_hilbert, fat_points_on_line, fat_subspace_hilbert
from .oracle import DEFAULT_CAP, NotFoundBelowCap, oracle_alpha, oracle_hilbert
from .scheme_core import (FatComponent, FatSchemeSpec, InclicScheme, LinearSubspace,
                          SchemeError, adapted_coordinates, hyperplane_coordinates,
                          merge_components, trace_scheme, validate_inclic)


class ProviderError(RuntimeError):
    """A provider was asked about a scheme it cannot handle."""


class DescentViolation(AssertionError):
    """Initial degrees of the traces failed to strictly decrease."""


class HilbertProvider(Protocol):
    def hilbert(self, scheme: FatSchemeSpec, t: int) -> int: ...


class OracleProvider:
    """Brute-force rank computation, memoized by scheme signature."""

    def __init__(self):
        self.cache: dict = {}

    def hilbert(self, scheme: FatSchemeSpec, t: int) -> int:
        key = (scheme.signature(), t)
        if key not in self.cache:
            self.cache[key] = oracle_hilbert(scheme, t)
        return self.cache[key]


class FatSubspaceProvider:
    """Closed form for the empty scheme and a single fat subspace."""

    def hilbert(self, scheme: FatSchemeSpec, t: int) -> int:
        n = scheme.ambient_dim
        if not scheme.components:
            return ambient_hilbert(n, t)
        if len(scheme.components) > 1:
            raise ProviderError("closed form covers a single fat subspace only")
        c = scheme.components[0]
        return fat_subspace_hilbert(n, c.subspace.dim, c.multiplicity, t)


class LineProvider:
    """Fat points on P^1."""

    def hilbert(self, scheme: FatSchemeSpec, t: int) -> int:
        if scheme.ambient_dim != 1:
            raise ProviderError(f"LineProvider needs P^1, got P^{scheme.ambient_dim}")
        return fat_points_on_line(scheme.multiplicities, t)


class CrossValidatingProvider:
    """Answers with ``primary`` and insists the oracle agrees."""

    def __init__(self, primary: HilbertProvider, oracle: HilbertProvider | None = None):
        self.primary = primary
        self.oracle = oracle or OracleProvider()
        self.checked = 0

    def hilbert(self, scheme: FatSchemeSpec, t: int) -> int:
        a = self.primary.hilbert(scheme, t)
        b = self.oracle.hilbert(scheme, t)
        self.checked += 1
        if a != b:
            raise ProviderError(
                f"provider mismatch at t={t}: {a} vs oracle {b} on {scheme.signature()}")
        return a


def find_inclic(scheme: FatSchemeSpec) -> InclicScheme | None:
    """Read an inclic structure off a plain fat scheme, if one is visible.

    Hyperplane components become the extra hyperplanes H_j. Among the rest,
    the first component (points first) outside the span of the others is
    L_0, and H_0 is a hyperplane through that span missing L_0. If all of
    them lie in a common hyperplane, that hyperplane is H_0 and L_0 is an
    auxiliary point of multiplicity 0. Returns None when no structure
    satisfying the inclic axioms is found.
    """
    n = scheme.ambient_dim
    hyps = [c for c in scheme.components if c.subspace.is_hyperplane]
    rest = [c for c in scheme.components if not c.subspace.is_hyperplane]
    if not rest:
        return None
    for h in hyps:
        if any(h.subspace.contains(c.subspace) for c in rest):
            return None
    for a in rest:
        for b in rest:
            if a is not b and b.subspace.contains(a.subspace):
                return None

    for c in sorted(rest, key=lambda c: c.subspace.dim):
        others = [o for o in rest if o is not c]
        if not others:
            continue
        span = others[0].subspace.join(o.subspace for o in others[1:])
        if span is None or span.contains(c.subspace):
            continue
        form = next(f for f in span.canonical
                    if not linalg.in_row_space(c.subspace.cutting_forms, f))
        return InclicScheme(n, c, LinearSubspace.hyperplane(form), others, hyps)

    span = rest[0].subspace.join(o.subspace for o in rest[1:])
    if span is not None:
        H0 = LinearSubspace.hyperplane(span.canonical[0])
        for p in _candidate_points(n):
            if not H0.contains_vector(p) and not any(h.subspace.contains_vector(p) for h in hyps):
                return InclicScheme(n, FatComponent(LinearSubspace.point(p), 0), H0, rest, hyps)
    return None


def _candidate_points(n: int):
    for i in range(n + 1):
        yield [int(j == i) for j in range(n + 1)]
    c = 2
    while True:
        yield [c ** j for j in range(n + 1)]
        c += 1


class RecursiveProvider:
    """Answers by recursing through :func:`hf_inclic` wherever an inclic is visible.

    Base cases: the empty scheme, hyperplanes only, and a single fat
    subspace have closed forms. Schemes with no visible inclic structure go
    to ``fallback`` (the oracle by default); with ``fallback=None`` they
    raise :class:`ProviderError`.
    """

    _default = object()

    def __init__(self, fallback: HilbertProvider | None = _default):
        self.fallback = OracleProvider() if fallback is RecursiveProvider._default else fallback
        self.cache: dict = {}
        self.fallback_calls = 0

    def hilbert(self, scheme: FatSchemeSpec, t: int) -> int:
        key = (scheme.signature(), t)
        if key not in self.cache:
            self.cache[key] = self._compute(scheme, t)
        return self.cache[key]

    def _compute(self, scheme: FatSchemeSpec, t: int) -> int:
        n = scheme.ambient_dim
        hyps = [c for c in scheme.components if c.subspace.is_hyperplane]
        rest = [c for c in scheme.components if not c.subspace.is_hyperplane]
        shift = sum(c.multiplicity for c in hyps)
        if not rest:
            return ambient_hilbert(n, t - shift)
        if len(rest) == 1 and not any(h.subspace.contains(rest[0].subspace) for h in hyps):
            c = rest[0]
            return fat_subspace_hilbert(n, c.subspace.dim, c.multiplicity, t - shift)
        inclic = find_inclic(scheme)
        if inclic is not None:
            return hf_inclic(inclic, t, self)
        if self.fallback is None:
            raise ProviderError(f"no inclic structure found for {scheme.signature()}")
        self.fallback_calls += 1
        return self.fallback.hilbert(scheme, t)


@dataclass(frozen=True)
class _Prepared:
    coords: list
    h0_coords: list
    inner: tuple[FatComponent, ...]
    L0_trace: LinearSubspace | None


@lru_cache(maxsize=4096)
def _prepare(X: InclicScheme) -> _Prepared:
    report = validate_inclic(X)
    if not report.ok:
        raise SchemeError("not an inclic: " + "; ".join(map(str, report.violations)))
    m = adapted_coordinates(X)
    n, k = X.ambient_dim, X.k
    L0_trace = LinearSubspace.coordinate(n - 1, range(k, n)) if k > 0 else None
    inner = tuple(c for c in X.inner if c.multiplicity > 0)
    return _Prepared(m, hyperplane_coordinates(m), inner, L0_trace)


@lru_cache(maxsize=16384)
def _trace(X: InclicScheme, j: int) -> FatSchemeSpec:
    prep = _prepare(X)
    return trace_scheme(prep.inner, j, X.H0, prep.h0_coords)


def _truncated_scheme(X: InclicScheme, j: int) -> FatSchemeSpec:
    """Y'_j together with l_0 times the trace of L_0, inside H_0 (needs k > 0)."""
    prep = _prepare(X)
    Yj = _trace(X, j)
    return merge_components(X.ambient_dim - 1,
                            [*Yj.components, FatComponent(prep.L0_trace, X.l0)])


def truncated_trace_hilbert(X: InclicScheme, j: int, i: int, provider: HilbertProvider) -> int:
    """h(I_{Y'_j} meet (I_{L_0 meet H_0})^{l_0}, i) inside H_0."""
    if i < X.l0:
        return 0
    if X.k == 0 or X.l0 == 0:
        return provider.hilbert(_trace(X, j), i)
    return oracle_hilbert(_truncated_scheme(X, j), i)


def hf_inclic(X: InclicScheme, t: int, provider: HilbertProvider,
              summation: str = "lambda") -> int:
    """h(I_X, t) by the trace recursion.

    ``summation="full"`` runs j over 0..l'-1 instead of 0..lam, with the
    truncated terms read as 0 below degree l_0; both give the same value.
    """
    s = t - X.hyperplane_degree
    if s < 0:
        return 0
    _prepare(X)
    n, k, l0 = X.ambient_dim, X.k, X.l0
    lp = X.l_prime
    if summation == "lambda":
        top = min(lp - 1, s - l0)
    elif summation == "full":
        top = lp - 1
    else:
        raise ValueError(f"unknown summation {summation!r}")
    total = 0
    for j in range(top + 1):
        total += truncated_trace_hilbert(X, j, s - j, provider)
    if l0 == 0:
        total += ambient_hilbert(n, s - lp)
    else:
        total += fat_subspace_hilbert(n, k, l0, s - lp)
    return total


@dataclass(frozen=True)
class AlphaResult:
    alpha: int
    d: int
    l_prime: int
    lower_bound: int
    upper_bound: int
    exact: bool = True


def alpha_inclic(X: InclicScheme, provider: HilbertProvider) -> AlphaResult:
    """Initial degree of I_X: h + l_0 + d, d the least j whose truncated trace starts in degree l_0.

    The truncated ideal never has anything below degree l_0, so the test
    for index j is just h(truncated Y'_j, l_0) > 0. Equality (rather than
    an upper bound) uses characteristic 0.
    """
    _prepare(X)
    lp, l0, h = X.l_prime, X.l0, X.hyperplane_degree
    for j in range(lp + 1):
        if truncated_trace_hilbert(X, j, l0, provider) > 0:
            d = j
            break
    else:
        raise AssertionError("trace scan ran past l'; truncated Y'_{l'} always starts in degree l_0")
    return AlphaResult(alpha=h + l0 + d, d=d, l_prime=lp,
                       lower_bound=h + max(lp, l0), upper_bound=h + lp + l0)


def provider_alpha(provider: HilbertProvider, scheme: FatSchemeSpec,
                   cap: int = DEFAULT_CAP) -> "int | NotFoundBelowCap":
    """Least t <= cap with provider.hilbert(scheme, t) > 0."""
    for t in range(max(scheme.multiplicities, default=0), cap + 1):
        if provider.hilbert(scheme, t) > 0:
            return t
    return NotFoundBelowCap(cap)


@dataclass(frozen=True)
class DescentChains:
    plain: dict[int, int]
    truncated: dict[int, int]
    d: int


def alpha_descent_check(X: InclicScheme, provider: HilbertProvider,
                        cap: int = DEFAULT_CAP) -> DescentChains:
    """Initial degrees of Y'_j for j = l'..0, and of the truncated traces for j = d..0.

    Both chains must increase strictly as j goes down to 0; a violation
    raises :class:`DescentViolation`.
    """
    lp, l0 = X.l_prime, X.l0
    plain = {}
    for j in range(lp, -1, -1):
        a = provider_alpha(provider, _trace(X, j), cap)
        if isinstance(a, NotFoundBelowCap):
            raise DescentViolation(f"alpha(Y'_{j}) not found below degree {cap}")
        plain[j] = a
    if plain[lp] != 0:
        raise DescentViolation(f"alpha(Y'_{lp}) = {plain[lp]}, expected 0")
    for j in range(lp):
        if not plain[j] > plain[j + 1]:
            raise DescentViolation(f"alpha(Y'_{j}) = {plain[j]} <= alpha(Y'_{j + 1}) = {plain[j + 1]}")

    d = alpha_inclic(X, provider).d
    truncated = {}
    for j in range(d, -1, -1):
        if X.k == 0 or l0 == 0:
            a = max(plain[j], l0)
        else:
            a = oracle_alpha(_truncated_scheme(X, j), cap)
            if isinstance(a, NotFoundBelowCap):
                raise DescentViolation(f"truncated alpha at j={j} not found below degree {cap}")
        truncated[j] = a
    if truncated[d] != l0:
        raise DescentViolation(f"truncated alpha at j=d={d} is {truncated[d]}, expected {l0}")
    for j in range(d):
        if not truncated[j] > truncated[j + 1]:
            raise DescentViolation(f"truncated chain not strictly decreasing at j={j}")
    return DescentChains(plain, truncated, d)


@dataclass(frozen=True)
class FlagLevel:
    """One level of a flag inclic.

    ``point`` is u_{i1} (None on level 1); ``hyperplanes`` are the u_{ij}
    for j >= 2, hyperplanes of V_i. On level 1, V_1 is a line and its
    hyperplanes are the points u_{1j}.
    """

    point: FatComponent | None
    hyperplanes: tuple[FatComponent, ...] = ()


@dataclass(frozen=True)
class FlagInclic:
    """Nested V_1 < V_2 < .. < V_n = P^n with one level of components on each.

    ``flag`` holds V_1..V_{n-1} as subspaces of P^n.
    """

    ambient_dim: int
    flag: tuple[LinearSubspace, ...]
    levels: tuple[FlagLevel, ...]
    _bases: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "flag", tuple(self.flag))
        object.__setattr__(self, "levels", tuple(self.levels))
        self._validate()
        n = self.ambient_dim
        ident = [[int(i == j) for j in range(n + 1)] for i in range(n + 1)]
        bases = [[list(r) for r in zip(*V.basis())] for V in self.flag] + [ident]
        object.__setattr__(self, "_bases", tuple(bases))

    def _validate(self):
        n = self.ambient_dim
        if len(self.flag) != n - 1 or len(self.levels) != n:
            raise SchemeError(f"a flag in P^{n} needs {n - 1} proper planes and {n} levels")
        for i, V in enumerate(self.flag, start=1):
            if V.dim != i:
                raise SchemeError(f"V_{i} has dimension {V.dim}")
            if i > 1 and not V.contains(self.flag[i - 2]):
                raise SchemeError(f"V_{i - 1} is not inside V_{i}")
        if self.levels[0].point is not None:
            raise SchemeError("level 1 has no distinguished point")
        lower: list[LinearSubspace] = []
        for i, level in enumerate(self.levels, start=1):
            V = self.flag[i - 1] if i < n else None
            prev = self.flag[i - 2] if i >= 2 else None
            comps = list(level.hyperplanes) + ([level.point] if level.point else [])
            for c in comps:
                if V is not None and not V.contains(c.subspace):
                    raise SchemeError(f"level {i} component is not inside V_{i}")
            if i >= 2:
                if level.point is None or level.point.subspace.dim != 0:
                    raise SchemeError(f"level {i} needs a point u_{i}1")
                if prev.contains(level.point.subspace):
                    raise SchemeError(f"u_{i}1 lies in V_{i - 1}")
            for h in level.hyperplanes:
                if h.subspace.dim != i - 1:
                    raise SchemeError(f"level {i} hyperplane has dimension {h.subspace.dim}")
                if level.point is not None and h.subspace.contains(level.point.subspace):
                    raise SchemeError(f"a level {i} hyperplane contains u_{i}1")
                if any(h.subspace.contains(L) for L in lower):
                    raise SchemeError(f"a level {i} hyperplane contains a lower component")
            if len({h.subspace for h in level.hyperplanes}) != len(level.hyperplanes):
                raise SchemeError(f"level {i} repeats a hyperplane")
            lower.extend(c.subspace for c in comps)

    def level_components(self, i: int, reduce_by: int = 0):
        """Components of X_i (levels 1..i) in the coordinates of V_i, multiplicities lowered."""
        B = self._bases[i - 1]
        out = []
        for lvl in self.levels[:i]:
            comps = list(lvl.hyperplanes) + ([lvl.point] if lvl.point else [])
            out.extend(FatComponent(c.subspace.restrict(B) if i < self.ambient_dim else c.subspace,
                                    max(0, c.multiplicity - reduce_by)) for c in comps)
        return out

    def level_inclic(self, i: int, reduce_by: int = 0) -> InclicScheme:
        """X_i with all multiplicities lowered by ``reduce_by``, as an inclic in V_i (i >= 2)."""
        B = self._bases[i - 1]
        top = i == self.ambient_dim

        def loc(s: LinearSubspace) -> LinearSubspace:
            return s if top else s.restrict(B)

        def red(c: FatComponent) -> FatComponent:
            return FatComponent(loc(c.subspace), max(0, c.multiplicity - reduce_by))

        inner = []
        for lvl in self.levels[:i - 1]:
            inner.extend(red(c) for c in lvl.hyperplanes)
            if lvl.point:
                inner.append(red(lvl.point))
        level = self.levels[i - 1]
        return InclicScheme(i, red(level.point), loc(self.flag[i - 2]), inner,
                            [red(h) for h in level.hyperplanes])

    def to_fat_scheme(self) -> FatSchemeSpec:
        return FatSchemeSpec(self.ambient_dim, self.level_components(self.ambient_dim))


class _FlagLevelProvider:
    """Answers for the traces of level i + 1 using the inclic of level i.

    The traces handed over by :func:`hf_inclic` are X_i with multiplicities
    lowered by some further j; j is recovered by matching signatures
    against the traces of the parent level.
    """

    def __init__(self, flag: FlagInclic, level: int, reduce_by: int,
                 parent: InclicScheme, memo: dict):
        self.flag, self.level, self.reduce_by, self.memo = flag, level, reduce_by, memo
        self.lookup = {_trace(parent, j).signature(): j for j in range(parent.l_prime + 1)}

    def hilbert(self, scheme: FatSchemeSpec, t: int) -> int:
        j = self.lookup.get(scheme.signature())
        if j is None:
            raise ProviderError("flag provider got a scheme that is not a trace of its parent")
        return _flag_level_hilbert(self.flag, self.level, self.reduce_by + j, t, self.memo)


def _flag_level_hilbert(F: FlagInclic, i: int, reduce_by: int, t: int, memo: dict) -> int:
    key = (i, reduce_by, t)
    if key in memo:
        return memo[key]
    if i == 1:
        mults = [max(0, h.multiplicity - reduce_by) for h in F.levels[0].hyperplanes]
        val = fat_points_on_line(mults, t)
    else:
        X = F.level_inclic(i, reduce_by)
        val = hf_inclic(X, t, _FlagLevelProvider(F, i - 1, reduce_by, X, memo))
    memo[key] = val
    return val


def hf_flag(F: FlagInclic, t: int) -> int:
    """h(I_X, t) for the full flag scheme X = X_n, level by level."""
    return _flag_level_hilbert(F, F.ambient_dim, 0, t, {})


@dataclass(frozen=True)
class HilbertTable:
    """Values h(I_X, t) (kind "ideal") or h(X, t) (kind "scheme") on a range of degrees."""

    ambient_dim: int
    values: tuple[tuple[int, int], ...]
    kind: str = "ideal"

    def __post_init__(self):
        if self.kind not in ("ideal", "scheme"):
            raise ValueError(f"kind must be 'ideal' or 'scheme', got {self.kind!r}")

    def as_dict(self) -> dict[int, int]:
        return dict(self.values)

    def complement(self) -> "HilbertTable":
        """Switch between h(I_X, t) and h(X, t) = binom(t+n, n) - h(I_X, t)."""
        n = self.ambient_dim
        other = "scheme" if self.kind == "ideal" else "ideal"
        return HilbertTable(n, tuple((t, ambient_hilbert(n, t) - h) if t >= 0 else (t, 0)
                                     for t, h in self.values), other)


def hilbert_table(X: "InclicScheme | FatSchemeSpec", degrees,
                  provider: HilbertProvider | None = None) -> HilbertTable:
    """h(I_X, t) for t in ``degrees``, by recursion for inclics and via ``provider`` otherwise."""
    provider = provider or RecursiveProvider()
    if isinstance(X, InclicScheme):
        vals = tuple((t, hf_inclic(X, t, provider)) for t in degrees)
    else:
        vals = tuple((t, provider.hilbert(X, t) if t >= 0 else 0) for t in degrees)
    return HilbertTable(X.ambient_dim, vals)
