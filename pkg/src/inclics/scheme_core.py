"""Linear subspaces, fat schemes and inclics.

A linear subspace of P^n is stored by its cutting forms: the rows of a full
rank rational matrix with n+1 columns whose common zero locus is the
subspace. Points are column vectors, a form ``f`` vanishes at ``p`` when
``f . p = 0``, and a coordinate change ``x = M y`` sends a form ``f`` to
``f M``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .linalg import Matrix


class SchemeError(ValueError):
    """Malformed geometric input (bad ranks, mismatched ambient spaces, ...)."""


def _freeze(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


@dataclass(frozen=True, eq=False)
class LinearSubspace:
    """A proper linear subvariety of P^n.

    Equality and hashing use the row space of the cutting forms, so two
    different systems of equations for the same subspace compare equal.
    """

    ambient_dim: int
    cutting_forms: tuple[tuple[Fraction, ...], ...]
    canonical: tuple[tuple[Fraction, ...], ...] = field(init=False, repr=False)

    def __init__(self, ambient_dim: int, cutting_forms: Iterable[Sequence]):
        forms = _freeze(cutting_forms)
        if ambient_dim < 1:
            raise SchemeError(f"ambient dimension must be >= 1, got {ambient_dim}")
        if not forms:
            raise SchemeError("a proper subspace needs at least one cutting form")
        if any(len(f) != ambient_dim + 1 for f in forms):
            raise SchemeError(f"cutting forms must have {ambient_dim + 1} coefficients")
        red, _ = linalg.rref(forms)
        if len(red) != len(forms):
            raise SchemeError(
                f"cutting forms are rank deficient: {len(forms)} rows, rank {len(red)}")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "cutting_forms", forms)
        object.__setattr__(self, "canonical", _freeze(red))

    @classmethod
    def from_points(cls, points: Iterable[Sequence], ambient_dim: int | None = None):
        """The linear span of the given points (homogeneous coordinates)."""
        pts = [list(p) for p in points]
        n = ambient_dim if ambient_dim is not None else len(pts[0]) - 1
        return cls(n, linalg.kernel(pts, n + 1))

    @classmethod
    def point(cls, coords: Sequence) -> "LinearSubspace":
        return cls.from_points([coords])

    @classmethod
    def hyperplane(cls, coeffs: Sequence) -> "LinearSubspace":
        return cls(len(coeffs) - 1, [coeffs])

    @classmethod
    def coordinate(cls, ambient_dim: int, vanishing: Iterable[int]) -> "LinearSubspace":
        """The subspace cut out by ``x_i = 0`` for ``i`` in ``vanishing``."""
        rows = []
        for i in vanishing:
            row = [0] * (ambient_dim + 1)
            row[i] = 1
            rows.append(row)
        return cls(ambient_dim, rows)

    @property
    def codim(self) -> int:
        return len(self.cutting_forms)

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.codim

    @property
    def is_hyperplane(self) -> bool:
        return self.codim == 1

    def basis(self) -> Matrix:
        """Spanning vectors (as rows) of the affine cone over the subspace."""
        return linalg.kernel(self.cutting_forms, self.ambient_dim + 1)

    def contains(self, other: "LinearSubspace") -> bool:
        """True when ``other`` is a subset of ``self``."""
        self._check_same_ambient(other)
        return all(linalg.in_row_space(other.cutting_forms, f) for f in self.cutting_forms)

    def contains_vector(self, v: Sequence) -> bool:
        return all(sum((Fraction(a) * b for a, b in zip(f, v)), Fraction(0)) == 0
                   for f in self.cutting_forms)

    def join(self, others: Iterable["LinearSubspace"]) -> "LinearSubspace | None":
        """Linear span of ``self`` and ``others``; None if it is all of P^n."""
        vecs = self.basis()
        for o in others:
            self._check_same_ambient(o)
            vecs.extend(o.basis())
        forms = linalg.kernel(vecs, self.ambient_dim + 1)
        return LinearSubspace(self.ambient_dim, forms) if forms else None

    def transform(self, m: Sequence[Sequence]) -> "LinearSubspace":
        """The same subspace in the coordinates y of ``x = m y``."""
        return LinearSubspace(self.ambient_dim, linalg.mat_mul(self.cutting_forms, m))

    def restrict(self, basis_cols: Sequence[Sequence]) -> "LinearSubspace":
        """Express a subspace of the span of ``basis_cols`` in that span's coordinates.

        ``basis_cols`` is an (n+1) x (d+1) matrix whose columns are linearly
        independent and span a d-plane V containing ``self``.
        """
        d = len(basis_cols[0]) - 1
        red, _ = linalg.rref(linalg.mat_mul(self.cutting_forms, basis_cols))
        if not red:
            raise SchemeError("subspace equals the plane it is restricted to")
        if d - len(red) != self.dim:
            raise SchemeError("subspace is not contained in the target plane")
        return LinearSubspace(d, red)

    def _check_same_ambient(self, other: "LinearSubspace"):
        if other.ambient_dim != self.ambient_dim:
            raise SchemeError(
                f"ambient dimension mismatch: P^{self.ambient_dim} vs P^{other.ambient_dim}")

    def __eq__(self, other):
        if not isinstance(other, LinearSubspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.canonical == other.canonical

    def __hash__(self):
        return hash((self.ambient_dim, self.canonical))

    def __repr__(self):
        return f"LinearSubspace(P^{self.ambient_dim}, dim={self.dim}, forms={_fmt(self.cutting_forms)})"


def _fmt(rows) -> str:
    return "[" + "; ".join(" ".join(str(x) for x in r) for r in rows) + "]"


@dataclass(frozen=True)
class FatComponent:
    subspace: LinearSubspace
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 0:
            raise SchemeError(f"multiplicity must be >= 0, got {self.multiplicity}")

    def with_multiplicity(self, m: int) -> "FatComponent":
        return FatComponent(self.subspace, m)


@dataclass(frozen=True)
class FatSchemeSpec:
    """A union of fat linear subspaces with no further structure assumed.

    Components of multiplicity 0 are dropped on construction.
    """

    ambient_dim: int
    components: tuple[FatComponent, ...]

    def __init__(self, ambient_dim: int, components: Iterable[FatComponent] = ()):
        comps = tuple(c for c in components if c.multiplicity > 0)
        for c in comps:
            if c.subspace.ambient_dim != ambient_dim:
                raise SchemeError(
                    f"component lives in P^{c.subspace.ambient_dim}, scheme in P^{ambient_dim}")
        if len({c.subspace for c in comps}) != len(comps):
            raise SchemeError("components must have distinct supports")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "components", comps)

    @property
    def multiplicities(self) -> list[int]:
        return [c.multiplicity for c in self.components]

    @property
    def is_reduced(self) -> bool:
        return all(m == 1 for m in self.multiplicities)

    def signature(self):
        """Hashable key independent of component order and of the chosen equations."""
        return (self.ambient_dim,
                tuple(sorted((c.subspace.canonical, c.multiplicity) for c in self.components)))

    def transform(self, m) -> "FatSchemeSpec":
        return FatSchemeSpec(self.ambient_dim,
                             [FatComponent(c.subspace.transform(m), c.multiplicity)
                              for c in self.components])


def merge_components(ambient_dim: int, components: Iterable[FatComponent]) -> FatSchemeSpec:
    """Build a scheme, keeping the larger multiplicity when supports repeat.

    For a common support L, (I_L)^a meets (I_L)^b in (I_L)^max(a, b).
    """
    best: dict[LinearSubspace, int] = {}
    for c in components:
        best[c.subspace] = max(best.get(c.subspace, 0), c.multiplicity)
    return FatSchemeSpec(ambient_dim, [FatComponent(s, m) for s, m in best.items()])


@dataclass(frozen=True)
class InclicScheme:
    """Fat scheme l_0 L_0 + sum l_i L_i + sum h_j H_j on an inclic.

    ``inner`` holds L_1..L_r (all inside ``H0``); ``hyperplanes`` holds
    H_1..H_s with their multiplicities h_j.
    """

    ambient_dim: int
    L0: FatComponent
    H0: LinearSubspace
    inner: tuple[FatComponent, ...] = ()
    hyperplanes: tuple[FatComponent, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "inner", tuple(self.inner))
        object.__setattr__(self, "hyperplanes", tuple(self.hyperplanes))

    @property
    def k(self) -> int:
        return self.L0.subspace.dim

    @property
    def l0(self) -> int:
        return self.L0.multiplicity

    @property
    def l_prime(self) -> int:
        return max((c.multiplicity for c in self.inner), default=0)

    @property
    def hyperplane_degree(self) -> int:
        return sum(c.multiplicity for c in self.hyperplanes)

    def all_components(self) -> list[FatComponent]:
        return [self.L0, *self.inner, *self.hyperplanes]

    def to_fat_scheme(self) -> FatSchemeSpec:
        return FatSchemeSpec(self.ambient_dim, self.all_components())

    def without_hyperplanes(self) -> "InclicScheme":
        return InclicScheme(self.ambient_dim, self.L0, self.H0, self.inner, ())

    def with_multiplicities(self, l0: int | None = None, inner=None, hyperplanes=None):
        L0 = self.L0 if l0 is None else self.L0.with_multiplicity(l0)
        inn = self.inner if inner is None else tuple(
            c.with_multiplicity(m) for c, m in zip(self.inner, inner))
        hyp = self.hyperplanes if hyperplanes is None else tuple(
            c.with_multiplicity(m) for c, m in zip(self.hyperplanes, hyperplanes))
        return InclicScheme(self.ambient_dim, L0, self.H0, inn, hyp)


@dataclass(frozen=True)
class Violation:
    condition: str
    indices: tuple[int, ...]
    detail: str

    def __str__(self):
        return f"{self.condition} {self.indices}: {self.detail}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}

    def __bool__(self):
        return self.ok


def validate_inclic(candidate: InclicScheme) -> ValidationReport:
    """Check the four inclic axioms.

    L's are indexed 0..r (L_0 first, then ``inner``) and H's 0..s (H_0
    first, then ``hyperplanes``); every violation names the offending pair.
    """
    n = candidate.ambient_dim
    Ls = [candidate.L0.subspace] + [c.subspace for c in candidate.inner]
    Hs = [candidate.H0] + [c.subspace for c in candidate.hyperplanes]
    for s in Ls + Hs:
        if s.ambient_dim != n:
            raise SchemeError(f"component in P^{s.ambient_dim} inside an inclic in P^{n}")
    out: list[Violation] = []

    for j, h in enumerate(Hs):
        if not h.is_hyperplane:
            out.append(Violation("C1", (j,), f"H_{j} has codimension {h.codim}"))
    for a in range(len(Hs)):
        for b in range(a + 1, len(Hs)):
            if Hs[a] == Hs[b]:
                out.append(Violation("C1", (a, b), f"H_{a} = H_{b}"))

    H0 = candidate.H0
    if H0.contains(Ls[0]):
        out.append(Violation("C2", (0, 0), "L_0 lies in H_0"))
    for i in range(1, len(Ls)):
        if not H0.contains(Ls[i]):
            out.append(Violation("C2", (i, 0), f"L_{i} is not contained in H_0"))

    for i in range(len(Ls)):
        for j in range(len(Ls)):
            if i != j and Ls[j].contains(Ls[i]):
                out.append(Violation("C3", (i, j), f"L_{i} is contained in L_{j}"))

    for i, L in enumerate(Ls):
        for j in range(1, len(Hs)):
            if Hs[j].codim == 1 and Hs[j].contains(L):
                out.append(Violation("C4", (i, j), f"L_{i} is contained in H_{j}"))
    return ValidationReport(tuple(out))


def adapted_coordinates(scheme: InclicScheme) -> Matrix:
    """Coordinate change ``x = M y`` with H_0 = {y_0 = 0} and L_0 = {y_{k+1} = .. = y_n = 0}.

    Columns of M: b_0 in L_0 off H_0, then a basis b_1..b_k of L_0 meet H_0,
    then vectors completing it to a basis of H_0. Bases come from reduced
    echelon forms, so an already normalized inclic gets the identity.
    """
    n = scheme.ambient_dim
    L0, H0 = scheme.L0.subspace, scheme.H0
    if H0.contains(L0):
        raise SchemeError("L_0 lies in H_0; no adapted coordinates exist")
    meet = linalg.kernel(list(L0.cutting_forms) + list(H0.cutting_forms), n + 1)
    b0 = next(v for v in L0.basis() if not H0.contains_vector(v))
    cols = list(meet)
    for v in H0.basis():
        if len(cols) == n:
            break
        if linalg.rank_q(cols + [v]) > len(cols):
            cols.append(v)
    cols = [b0] + cols
    m = [list(r) for r in zip(*cols)]
    _check_adapted(scheme, m)
    return m


def _check_adapted(scheme: InclicScheme, m: Matrix):
    n, k = scheme.ambient_dim, scheme.k
    if linalg.determinant(m) == 0:
        raise SchemeError("adapted coordinate matrix is singular")
    if scheme.H0.transform(m) != LinearSubspace.coordinate(n, [0]):
        raise SchemeError("H_0 is not {x_0 = 0} after the coordinate change")
    if scheme.L0.subspace.transform(m) != LinearSubspace.coordinate(n, range(k + 1, n + 1)):
        raise SchemeError("L_0 is not a coordinate subspace after the coordinate change")


def hyperplane_coordinates(m: Matrix) -> Matrix:
    """Columns 1..n of an adapted matrix: identifies H_0 with P^{n-1} by dropping y_0."""
    return [row[1:] for row in m]


def trace_scheme(Y: Iterable[FatComponent], j: int, H0: LinearSubspace,
                 basis_cols: Matrix | None = None) -> FatSchemeSpec:
    """The residual scheme Y'_j inside H_0 = P^{n-1}.

    Multiplicities drop to ``max(0, l - j)``; components reaching 0 vanish.
    ``basis_cols`` fixes the identification of H_0 with P^{n-1} (an
    (n+1) x n matrix whose columns span H_0); it defaults to the reduced
    echelon kernel basis of H_0.
    """
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    if basis_cols is None:
        basis_cols = [list(r) for r in zip(*H0.basis())]
    comps = []
    for c in Y:
        if not H0.contains(c.subspace):
            raise SchemeError(f"component {c.subspace} is not contained in H_0")
        m = max(0, c.multiplicity - j)
        if m:
            comps.append(FatComponent(c.subspace.restrict(basis_cols), m))
    return FatSchemeSpec(H0.ambient_dim - 1, comps)


def symbolic_power_scheme(base: FatSchemeSpec, m: int) -> FatSchemeSpec:
    """Same supports, every multiplicity ``m``: the m-th symbolic power of a reduced union."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not base.is_reduced:
        raise SchemeError("symbolic powers are taken of reduced schemes only")
    return FatSchemeSpec(base.ambient_dim,
                         [FatComponent(c.subspace, m) for c in base.components])
