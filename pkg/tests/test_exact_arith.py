import itertools

import pytest

from inclics.exact_arith import ambient_hilbert, binom, fat_points_on_line, fat_subspace_hilbert


def monomial_count(n, k, m, t):
    """Degree-t monomials in x_0..x_n of degree >= m in x_{k+1}..x_n: h(I_L^m, t) for a coordinate L."""
    if t < 0:
        return 0
    count = 0
    for exps in itertools.product(range(t + 1), repeat=n + 1):
        if sum(exps) == t and sum(exps[k + 1:]) >= m:
            count += 1
    return count


@pytest.mark.parametrize("a,b,expected", [(4, 2, 6), (3, 5, 0), (0, 0, 1), (5, -1, 0), (60, 30, 118264581564861424)])
def test_binom(a, b, expected):
    assert binom(a, b) == expected


@pytest.mark.parametrize("n,t,expected", [(2, 2, 6), (3, 0, 1), (2, -1, 0), (4, -5, 0)])
def test_ambient_hilbert(n, t, expected):
    assert ambient_hilbert(n, t) == expected


@pytest.mark.parametrize("args,expected", [
    ((2, 0, 1, 1), 2),
    ((2, 0, 2, 2), 3),
    ((3, 1, 2, 2), 3),
    ((2, 0, 2, 1), 0),
])
def test_fat_subspace_examples(args, expected):
    assert fat_subspace_hilbert(*args) == expected
    assert monomial_count(*args) == expected


@pytest.mark.parametrize("n", [1, 2, 3])
def test_fat_subspace_matches_monomial_count(n):
    for k in range(n):
        for m in range(1, 4):
            for t in range(-1, 7):
                assert fat_subspace_hilbert(n, k, m, t) == monomial_count(n, k, m, t)


def test_fat_subspace_monotone_and_single_point():
    for n in range(1, 5):
        for k in range(n):
            for m in range(1, 5):
                vals = [fat_subspace_hilbert(n, k, m, t) for t in range(12)]
                assert vals == sorted(vals)
                assert all(v <= ambient_hilbert(n, t) for t, v in enumerate(vals))
        for t in range(1, 10):
            assert fat_subspace_hilbert(n, 0, 1, t) == binom(t + n, n) - 1


def test_fat_subspace_codimension_defect_is_polynomial():
    # for t >= m the defect binom(t+n,n) - h is a polynomial of degree k in t:
    # its (k+1)-st finite difference vanishes
    for n, k, m in [(3, 1, 2), (4, 2, 3), (2, 0, 3)]:
        defect = [ambient_hilbert(n, t) - fat_subspace_hilbert(n, k, m, t) for t in range(m, m + k + 8)]
        diffs = defect
        for _ in range(k + 1):
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        assert all(d == 0 for d in diffs)


def test_fat_subspace_errors():
    with pytest.raises(ValueError):
        fat_subspace_hilbert(2, 2, 1, 3)
    with pytest.raises(ValueError):
        fat_subspace_hilbert(2, 0, 0, 3)


def test_fat_points_on_line():
    assert fat_points_on_line([1, 1], 2) == 1
    assert fat_points_on_line([3, 2], 4) == 0
    assert fat_points_on_line([], -1) == 0
