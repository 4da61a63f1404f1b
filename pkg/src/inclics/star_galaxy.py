"""Star configurations, galaxies and their Waldschmidt constants.

Hyperplane A_i of a star has normal (1, c_i, c_i^2, .., c_i^n) with c_i = i.
Any n+1 of these normals form a Vandermonde matrix, so every i of them are
independent and the star condition holds by construction (it is still
rechecked). Halo points sit on the moment curve of P^{n+N} with parameters
u+1, .., u+N, disjoint from the hyperplane parameters.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .hf_engine import RecursiveProvider, alpha_inclic, provider_alpha
from .oracle import DEFAULT_CAP, NotFoundBelowCap, oracle_alpha
from .scheme_core import (FatComponent, FatSchemeSpec, InclicScheme, LinearSubspace,
                          SchemeError, symbolic_power_scheme, validate_inclic)


def _check_star_params(n: int, e: int, u: int):
    if not 1 <= e <= n < u:
        raise ValueError(f"need 1 <= e <= n < u, got n={n}, e={e}, u={u}")


@dataclass(frozen=True)
class StarConfiguration:
    n: int
    e: int
    u: int
    hyperplanes: tuple[LinearSubspace, ...]
    components: tuple[LinearSubspace, ...]
    subsets: tuple[tuple[int, ...], ...]

    def scheme(self, m: int = 1) -> FatSchemeSpec:
        """The star union A with every component of multiplicity ``m``."""
        return FatSchemeSpec(self.n, [FatComponent(c, m) for c in self.components])


def star_condition_holds(normals, n: int) -> bool:
    """Any i of the hyperplanes meet in dimension at most n - i (i <= n + 1)."""
    for i in range(1, min(len(normals), n + 1) + 1):
        for sub in itertools.combinations(normals, i):
            if linalg.rank_q(list(sub)) != i:
                return False
    return True


def build_star(n: int, e: int, u: int, seed: int | None = None) -> StarConfiguration:
    """S(n, e, u): the binom(u, e) intersections of e of u hyperplanes in general position.

    With ``seed`` the normals are random integer vectors instead of moment
    curve points (rejected and redrawn until the star condition holds).
    """
    _check_star_params(n, e, u)
    if seed is None:
        normals = [[c ** i for i in range(n + 1)] for c in range(1, u + 1)]
    else:
        rng = random.Random(seed)
        while True:
            normals = [[rng.randint(-9, 9) for _ in range(n + 1)] for _ in range(u)]
            if star_condition_holds(normals, n):
                break
    if not star_condition_holds(normals, n):
        raise SchemeError("hyperplanes fail the star condition")
    hyps = tuple(LinearSubspace.hyperplane(v) for v in normals)
    subsets = tuple(itertools.combinations(range(u), e))
    comps = tuple(LinearSubspace(n, [normals[i] for i in s]) for s in subsets)
    if len(set(comps)) != len(comps):
        raise SchemeError("star components are not distinct")
    return StarConfiguration(n, e, u, hyps, comps, subsets)


@dataclass(frozen=True)
class GalaxyParams:
    n: int
    N: int
    e: int
    u: int
    h: int | None = None

    def __post_init__(self):
        _check_star_params(self.n, self.e, self.u)
        if self.N < 1:
            raise ValueError(f"N must be >= 1, got {self.N}")
        if self.h is None:
            object.__setattr__(self, "h", self.N)
        if self.h != self.N:
            raise ValueError(f"only h = N galaxies are inclics; got h={self.h}, N={self.N}")


@dataclass(frozen=True)
class Galaxy:
    """The chain G_0 = A in P^n, G_i = A + P_1 + .. + P_i in P^{n+i}.

    ``chain[i]`` is G_i as a reduced fat scheme in its own P^{n+i};
    ``inclics[i - 1]`` is G_i packaged with L_0 = P_i and H_0 = the span of
    G_{i-1} (i >= 1).
    """

    params: GalaxyParams
    star: StarConfiguration
    halo: tuple[tuple[int, ...], ...]
    chain: tuple[FatSchemeSpec, ...]
    inclics: tuple[InclicScheme, ...]

    def inclic(self, i: int, m: int = 1) -> InclicScheme:
        """G_i (i >= 1) with every multiplicity ``m``."""
        X = self.inclics[i - 1]
        return X.with_multiplicities(l0=m, inner=[m] * len(X.inner))


def _moment_point(c: int, dim: int) -> list[int]:
    return [c ** i for i in range(dim + 1)]


def build_galaxy(params: GalaxyParams, halo_seed: int | None = None) -> Galaxy:
    """Embed S(n, e, u) in the first n+1 coordinates of P^{n+N} and add N halo points.

    G_i lives in V_i = span(P^n, P_1, .., P_i) with coordinates given by the
    echelon basis of V_i; every G_i (i >= 1) is validated as an inclic.
    """
    n, N = params.n, params.N
    big = n + N
    star = build_star(n, params.e, params.u)
    if halo_seed is None:
        halo = [_moment_point(params.u + i, big) for i in range(1, N + 1)]
    else:
        rng = random.Random(halo_seed)
        halo = [[rng.randint(-20, 20) for _ in range(big + 1)] for _ in range(N)]

    pad = [[int(j == i) for j in range(big + 1)] for i in range(n + 1, big + 1)]
    star_big = [LinearSubspace(big, [list(f) + [0] * N for f in c.cutting_forms] + pad)
                for c in star.components]
    halo_big = [LinearSubspace.point(p) for p in halo]

    plane = [[int(j == i) for j in range(big + 1)] for i in range(n + 1)]
    chain, inclics = [star.scheme()], []
    prev_V = None
    for i in range(1, N + 1):
        span_pts = plane + halo[:i]
        if linalg.rank_q(span_pts) != n + i + 1:
            raise SchemeError(f"halo point P_{i} lies in the span of the previous ones")
        forms = linalg.kernel(span_pts, big + 1)
        basis = [list(r) for r in zip(*linalg.kernel(forms, big + 1))] if forms else \
            [[int(a == b) for b in range(big + 1)] for a in range(big + 1)]

        def loc(s, basis=basis):
            return s if not forms else s.restrict(basis)

        comps = [FatComponent(loc(s), 1) for s in star_big + halo_big[:i]]
        if prev_V is None:
            H0_big = LinearSubspace(big, linalg.kernel(plane, big + 1))
        else:
            H0_big = prev_V
        X = InclicScheme(n + i, comps[-1], loc(H0_big), comps[:-1])
        report = validate_inclic(X)
        if not report.ok:
            raise SchemeError(f"galaxy G_{i} is not an inclic: "
                              + "; ".join(map(str, report.violations)))
        chain.append(FatSchemeSpec(n + i, comps))
        inclics.append(X)
        prev_V = LinearSubspace(big, forms) if forms else None
    return Galaxy(params, star, tuple(tuple(p) for p in halo), tuple(chain), tuple(inclics))


def a_sequence(r: int, u: int, e: int, N: int) -> list[int]:
    """a_0 = re, a_1 = ru, a_{i+2} = 2 a_{i+1} - a_i, for i up to N + 1."""
    if r < 1:
        raise ValueError("r must be >= 1")
    seq = [i * r * u - (i - 1) * r * e for i in range(N + 2)]
    for i in range(len(seq) - 2):
        assert seq[i + 2] == 2 * seq[i + 1] - seq[i]
    return seq


def waldschmidt_constant(params: GalaxyParams) -> Fraction:
    N, e, u = params.N, params.e, params.u
    return Fraction(N * (u - e) + u, N * (u - e) + e)


@dataclass(frozen=True)
class ResurgenceBounds:
    lower: Fraction
    upper: Fraction
    upper_kind: str          # "e=n" or "generic"


def resurgence_bounds(params: GalaxyParams) -> ResurgenceBounds:
    """alpha(I_G)/gamma = 2/gamma below; reg/gamma = (u-n+1)/gamma above when e = n, else n + N."""
    gamma = waldschmidt_constant(params)
    lower = 2 / gamma
    if params.e == params.n:
        return ResurgenceBounds(lower, Fraction(params.u - params.n + 1) / gamma, "e=n")
    return ResurgenceBounds(lower, Fraction(params.n + params.N), "generic")


@dataclass(frozen=True)
class WaldschmidtReport:
    params: GalaxyParams
    gamma: Fraction
    alpha_sequences: dict[int, list[int]]
    ratios: dict[int, list[Fraction]]
    rho_lower: Fraction
    rho_upper: Fraction
    upper_kind: str


def waldschmidt(params: GalaxyParams, rs=(1,)) -> WaldschmidtReport:
    """gamma(I_G) in closed form, with the a-sequence witnesses for each r.

    ``ratios[r][i]`` is a_{i+1}/a_i = alpha(I_{G_i}^{(a_i)})/a_i; the last
    entry (i = N) is a witness for G = G_N itself.
    """
    gamma = waldschmidt_constant(params)
    seqs, ratios = {}, {}
    for r in rs:
        a = a_sequence(r, params.u, params.e, params.N)
        seqs[r] = a
        ratios[r] = [Fraction(a[i + 1], a[i]) for i in range(params.N + 1)]
    b = resurgence_bounds(params)
    return WaldschmidtReport(params, gamma, seqs, ratios, b.lower, b.upper, b.upper_kind)


@dataclass(frozen=True)
class ChainStep:
    i: int
    multiplicity: int
    expected: int
    recursion: "int | NotFoundBelowCap"
    oracle: "int | NotFoundBelowCap | None"

    @property
    def ok(self) -> bool:
        vals = [self.recursion] + ([self.oracle] if self.oracle is not None else [])
        return all(v == self.expected for v in vals)

    @property
    def capped(self) -> bool:
        return any(isinstance(v, NotFoundBelowCap) for v in (self.recursion, self.oracle))


def verify_galaxy_chain(params: GalaxyParams, r: int, use_oracle: bool = True,
                        degree_cap: int = DEFAULT_CAP, galaxy: Galaxy | None = None,
                        provider=None) -> list[ChainStep]:
    """Check alpha(I_{a_i G_i}) = a_{i+1} for i = 0..N.

    i = 0 is the star itself (alpha(re A) = ru); i >= 1 goes through
    :func:`alpha_inclic`. Steps whose expected degree exceeds the cap are
    reported as capped rather than computed.
    """
    g = galaxy or build_galaxy(params)
    a = a_sequence(r, params.u, params.e, params.N)
    provider = provider or RecursiveProvider()
    steps = []
    for i in range(params.N + 1):
        m, expected = a[i], a[i + 1]
        if expected > degree_cap:
            steps.append(ChainStep(i, m, expected, NotFoundBelowCap(degree_cap),
                                   NotFoundBelowCap(degree_cap) if use_oracle else None))
            continue
        scheme = symbolic_power_scheme(g.chain[i], m)
        if i == 0:
            rec = provider_alpha(provider, scheme, degree_cap)
        else:
            rec = alpha_inclic(g.inclic(i, m), provider).alpha
        orc = oracle_alpha(scheme, degree_cap) if use_oracle else None
        steps.append(ChainStep(i, m, expected, rec, orc))
    return steps
