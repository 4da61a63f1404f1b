import random

import pytest
from hypothesis import given, settings, strategies as st

from inclics import linalg
from inclics.exact_arith import fat_subspace_hilbert
from inclics.oracle import (NotFoundBelowCap, component_conditions, conditions, monomials,
                            oracle_alpha, oracle_hilbert, oracle_reg_points)
from inclics.scheme_core import FatComponent, FatSchemeSpec, LinearSubspace, SchemeError
from inclics.star_galaxy import build_star

from conftest import fat, pt


def test_monomial_order():
    assert monomials(3, 2)[0] == (2, 0, 0)
    assert len(monomials(3, 4)) == 15 and len(set(monomials(3, 4))) == 15
    assert monomials(2, 0) == ((0, 0),)


class TestComponentConditions:
    def test_simple_point_linear_forms(self):
        M = component_conditions(FatComponent(pt(1, 2, 3), 1), 1)
        assert M.rank() == 1 and M.shape[1] == 3

    def test_double_coordinate_point(self):
        M = component_conditions(FatComponent(pt(1, 0, 0), 2), 2)
        assert M.shape[1] - M.rank() == 3 == fat_subspace_hilbert(2, 0, 2, 2)

    def test_double_line(self):
        line = LinearSubspace.coordinate(3, [2, 3])
        M = component_conditions(FatComponent(line, 2), 2)
        assert M.shape[1] - M.rank() == 3 == fat_subspace_hilbert(3, 1, 2, 2)

    def test_zero_multiplicity_rejected(self):
        with pytest.raises(ValueError):
            component_conditions(FatComponent(pt(1, 0), 0), 3)


class TestOracleHilbert:
    def test_one_point(self):
        assert oracle_hilbert(fat(2, (pt(1, 1, 1), 1)), 2) == 5

    def test_three_general_double_points(self, three_general_points):
        X = fat(2, *[(p, 2) for p in three_general_points])
        assert [oracle_hilbert(X, t) for t in range(6)] == [0, 0, 0, 1, 6, 12]

    def test_two_points_span_a_line(self):
        assert oracle_hilbert(fat(2, (pt(1, 0, 0), 1), (pt(0, 1, 0), 1)), 1) == 1

    def test_negative_degree_and_empty(self):
        assert oracle_hilbert(fat(2, (pt(1, 0, 0), 1)), -1) == 0
        assert oracle_hilbert(FatSchemeSpec(2, []), 3) == 10

    def test_matches_fat_subspace_on_random_subspace(self):
        rng = random.Random(7)
        for _ in range(5):
            while True:
                forms = [[rng.randint(-4, 4) for _ in range(4)] for _ in range(2)]
                if linalg.rank_q(forms) == 2:
                    break
            L = LinearSubspace(3, forms)
            for t in range(5):
                assert oracle_hilbert(fat(3, (L, 2)), t) == fat_subspace_hilbert(3, 1, 2, t)

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.tuples(st.lists(st.integers(-3, 3), min_size=3, max_size=3),
                              st.integers(1, 3)), min_size=1, max_size=4),
           st.integers(0, 6))
    def test_monotone_in_degree(self, raw, t):
        comps = {}
        for coords, m in raw:
            if any(coords):
                comps[LinearSubspace.point(coords)] = m
        X = FatSchemeSpec(2, [FatComponent(s, m) for s, m in comps.items()])
        # multiplying by a linear form avoiding the support is injective
        assert oracle_hilbert(X, t + 1) >= oracle_hilbert(X, t)

    def test_invariant_under_coordinate_change(self, three_general_points):
        X = fat(2, (three_general_points[0], 3), (three_general_points[1], 2),
                (LinearSubspace.point([1, -1, 4]), 1))
        base = [oracle_hilbert(X, t) for t in range(7)]
        rng = random.Random(11)
        for _ in range(10):
            while True:
                g = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
                if linalg.determinant(g) != 0:
                    break
            assert [oracle_hilbert(X.transform(g), t) for t in range(7)] == base


class TestOracleAlpha:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_fat_point(self, m):
        assert oracle_alpha(fat(2, (pt(1, 2, 3), m))) == m

    def test_three_double_points(self, three_general_points):
        assert oracle_alpha(fat(2, *[(p, 2) for p in three_general_points])) == 3

    def test_star_s224(self):
        star = build_star(2, 2, 4)
        assert oracle_alpha(star.scheme()) == 3
        assert oracle_alpha(star.scheme(2)) == 4

    def test_cap(self):
        res = oracle_alpha(fat(2, (pt(1, 0, 0), 5)), t_max=3)
        assert isinstance(res, NotFoundBelowCap) and not res and res.cap == 3

    def test_empty_scheme(self):
        assert oracle_alpha(FatSchemeSpec(2, [])) == 0


class TestRegularity:
    def test_three_noncollinear(self, three_general_points):
        assert oracle_reg_points(fat(2, *[(p, 1) for p in three_general_points])) == 2

    def test_plus_point_off_plane(self):
        X = fat(3, (pt(1, 0, 0, 0), 1), (pt(0, 1, 0, 0), 1), (pt(1, 1, 1, 0), 1), (pt(1, 1, 1, 1), 1))
        assert oracle_reg_points(X) == 2

    def test_two_points(self):
        assert oracle_reg_points(fat(2, (pt(1, 0, 0), 1), (pt(0, 1, 0), 1))) == 2

    def test_collinear_points(self):
        X = fat(2, *[(pt(1, c, 0), 1) for c in range(4)])
        assert oracle_reg_points(X) == 4

    def test_rejects_fat_or_positive_dimensional(self):
        with pytest.raises(SchemeError):
            oracle_reg_points(fat(2, (pt(1, 0, 0), 2)))
        with pytest.raises(SchemeError):
            oracle_reg_points(fat(2, (LinearSubspace.hyperplane([1, 0, 0]), 1)))

    def test_scheme_function_frozen_after_regularity(self):
        rng = random.Random(3)
        pts = [pt(*[rng.randint(-5, 5) for _ in range(3)]) for _ in range(6)]
        X = fat(2, *[(p, 1) for p in dict.fromkeys(pts)])
        reg = oracle_reg_points(X)
        for t in range(reg - 1, reg + 3):
            assert (t + 2) * (t + 1) // 2 - oracle_hilbert(X, t) == len(X.components)


def test_conditions_stack_components(three_general_points):
    X = fat(2, *[(p, 1) for p in three_general_points])
    assert conditions(X, 2).shape == (3, 6)
