from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricdual.ratlp import (
    feasible_nonneg,
    positive_dependency,
    positive_dependency_certified,
    solve_linear,
)


def test_solve_linear_basic():
    x = solve_linear([[2, 0], [0, 4]], [1, 2])
    assert x == (Fraction(1, 2), Fraction(1, 2))
    assert solve_linear([[1, 1], [1, 1]], [0, 1]) is None
    # underdetermined: free variable pinned to zero
    x = solve_linear([[1, 2, 3]], [6])
    assert x == (6, 0, 0)


def test_feasible_nonneg_simple():
    x, cert = feasible_nonneg([[1, 1]], [2])
    assert cert is None
    assert sum(x) == 2 and all(v >= 0 for v in x)
    x, cert = feasible_nonneg([[1, 1]], [-1])
    assert x is None
    # certificate: y*a <= 0 and y*b > 0
    assert cert[0] * 1 <= 0 and cert[0] * (-1) > 0


def test_positive_dependency_antiparallel_pair():
    r = positive_dependency([(1,), (-1,)])
    assert r is not None
    assert r[0] * 1 + r[1] * (-1) == 0
    assert all(v > 0 for v in r)


def test_positive_dependency_independent_pair():
    assert positive_dependency([(1, 0), (0, 1)]) is None


def test_positive_dependency_family_rows():
    # rows 4 and 5 of the planar dual of the rank-two example family
    r = positive_dependency([(1, 1), (-1, -1)])
    assert r is not None


def test_positive_dependency_errors():
    with pytest.raises(ValueError):
        positive_dependency([])
    with pytest.raises(ValueError):
        positive_dependency([(1, 2), (1,)])


def test_positive_dependency_zero_dim_convention():
    assert positive_dependency([(), ()]) == (1, 1)


def test_certificate_signs():
    rows = [(2, 0), (1, 1)]
    r, z = positive_dependency_certified(rows)
    assert r is None
    dots = [sum(a * b for a, b in zip(z, v)) for v in rows]
    assert all(d >= 0 for d in dots)
    assert any(d > 0 for d in dots)


vec3 = st.lists(st.integers(-4, 4), min_size=2, max_size=2)


@settings(max_examples=120, deadline=None)
@given(st.lists(vec3, min_size=1, max_size=6))
def test_positive_dependency_is_sound_and_certified(rows):
    rows = [tuple(v) for v in rows]
    r, z = positive_dependency_certified(rows)
    if r is not None:
        assert all(v > 0 for v in r)
        for j in range(2):
            assert sum(ri * v[j] for ri, v in zip(r, rows)) == 0
    else:
        dots = [sum(a * b for a, b in zip(z, v)) for v in rows]
        assert all(d >= 0 for d in dots)
        assert any(d > 0 for d in dots)
