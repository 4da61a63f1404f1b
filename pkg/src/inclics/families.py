"""Seeded random inclics for cross-validation."""

from __future__ import annotations

import random

from . import linalg
from .scheme_core import FatComponent, InclicScheme, LinearSubspace, validate_inclic


def _small_vector(rng: random.Random, size: int, spread: int) -> list[int]:
    while True:
        v = [rng.randint(-spread, spread) for _ in range(size)]
        if any(v):
            return v


def _random_subspace_in(rng, n: int, container: LinearSubspace | None, dim: int,
                        spread: int) -> LinearSubspace:
    """A random dim-subspace of P^n, inside ``container`` when given."""
    basis = container.basis() if container is not None else None
    while True:
        pts = []
        for _ in range(dim + 1):
            if basis is None:
                pts.append(_small_vector(rng, n + 1, spread))
            else:
                coeffs = _small_vector(rng, len(basis), spread)
                pts.append([sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(n + 1)])
        if linalg.rank_q(pts) == dim + 1:
            return LinearSubspace.from_points(pts, n)


def random_inclic(rng: random.Random, n: int, max_components: int = 4,
                  max_multiplicity: int = 3, spread: int = 3,
                  max_tries: int = 200) -> InclicScheme:
    """A valid inclic in P^n with at most ``max_components`` components in total.

    L_0 is a point or (n >= 3) a line; inner components are points or lines
    strictly inside H_0; extra hyperplanes get multiplicity at most 2.
    """
    for _ in range(max_tries):
        H0 = LinearSubspace.hyperplane(_small_vector(rng, n + 1, spread))
        k = rng.choice([0, 1]) if n >= 3 else 0
        L0 = _random_subspace_in(rng, n, None, k, spread)
        if H0.contains(L0):
            continue
        budget = max_components - 1
        r = rng.randint(0, budget)
        s = rng.randint(0, min(2, budget - r))
        inner = []
        for _ in range(r):
            dim = rng.choice([0, 1]) if n >= 3 else 0
            inner.append(FatComponent(_random_subspace_in(rng, n, H0, dim, spread),
                                      rng.randint(1, max_multiplicity)))
        hyps = [FatComponent(LinearSubspace.hyperplane(_small_vector(rng, n + 1, spread)),
                             rng.randint(1, 2)) for _ in range(s)]
        X = InclicScheme(n, FatComponent(L0, rng.randint(1, max_multiplicity)), H0, inner, hyps)
        if validate_inclic(X).ok:
            return X
    raise RuntimeError("could not draw a valid inclic")


def random_inclic_family(seed: int, count: int, dims=(2, 3), **kwargs) -> list[InclicScheme]:
    rng = random.Random(seed)
    return [random_inclic(rng, rng.choice(dims), **kwargs) for _ in range(count)]
