from fractions import Fraction as F
import math

import pytest
from hypothesis import given, strategies as st

from floorsq.exact import DomainError
from floorsq.homog import (
    CEILING, FLOOR, KINDS, NEAREST, HomPoly, T_alpha_bridge, bracket, bracket_poly_error,
    bracket_poly_eval, check_witness, euler_brick_system, eta, perfect_brick_system, scan_multipliers,
)

PYTH = HomPoly.diagonal((1, 1, -1), 2)
BRICK = (240, 117, 44, 267, 244, 125)


@pytest.mark.parametrize("kind,x,want", [(FLOOR, F(7, 3), F(1, 3)), (CEILING, F(7, 3), F(2, 3)),
                                         (NEAREST, F(1, 2), F(1, 2))])
def test_eta_examples(kind, x, want):
    assert eta(kind, x) == want


def test_nearest_ties_round_up():
    assert bracket(NEAREST, F(1, 2)) == 1 and bracket(NEAREST, F(-1, 2)) == 0
    assert bracket(NEAREST, F(5, 2)) == 3


@given(st.sampled_from(KINDS), st.fractions(min_value=-100, max_value=100), st.integers(1, 16))
def test_bracket_axioms(kind, x, n):
    assert eta(kind, x) == eta(kind, x + 1)  # periodic
    assert eta(kind, F(math.floor(x))) == 0  # vanishes on integers
    assert eta(kind, n * x) <= n * eta(kind, x)  # subadditive in multiples


@given(st.sampled_from(KINDS), st.fractions(0, 1), st.fractions(min_value=F(1, 100), max_value=F(1, 2)))
def test_sublevel_sets_are_intervals(kind, x, eps):
    # {x in [0,1): eta(x) <= eps} is [0, eps] u [1-eps, 1) for floor-type brackets of this kind
    ok = eta(kind, x) <= eps
    if kind == FLOOR:
        assert ok == (x % 1 <= eps)
    elif kind == CEILING:
        assert ok == (x % 1 == 0 or 1 - x % 1 <= eps)
    else:
        f = x % 1
        assert ok == (min(f, 1 - f) <= eps)


def test_hompoly_validation():
    with pytest.raises(DomainError):
        HomPoly(((1, (2, 0)), (1, (1, 0))))
    with pytest.raises(DomainError):
        HomPoly(((0, (2, 0)),))
    assert PYTH.arity == 3 and PYTH.degree == 2 and PYTH((3, 4, 5)) == 0


@pytest.mark.parametrize("alpha", [F(1), F(1, 2)])
def test_pythagorean_eval(alpha):
    assert bracket_poly_eval(PYTH, alpha, (3, 4, 5)) == 0


def test_brick_diagonal_eval():
    f = HomPoly.diagonal((1, 1, 0, -1, 0, 0), 2)
    assert bracket_poly_eval(f, F(1), BRICK) == 0


def test_arity_mismatch():
    with pytest.raises(DomainError):
        bracket_poly_eval(PYTH, F(1, 2), (3, 4))


@given(st.lists(st.integers(-50, 50), min_size=3, max_size=3))
def test_alpha_one_floor_is_polynomial(pt):
    assert bracket_poly_eval(PYTH, F(1), pt) == PYTH(pt)


@given(st.sampled_from(KINDS), st.fractions(min_value=F(1, 100), max_value=3),
       st.lists(st.integers(1, 500), min_size=3, max_size=3))
def test_error_bound(kind, alpha, pt):
    diff, bound = bracket_poly_error(PYTH, alpha, pt, kind)
    assert abs(diff) <= bound


def test_scan_pythagorean():
    r = scan_multipliers([PYTH], (3, 4, 5), F(1, 2), 10)
    assert r.multipliers == list(range(1, 11)) and r.density == 1


def test_scan_rejects_non_solution():
    with pytest.raises(DomainError, match="#0"):
        scan_multipliers([PYTH], (1, 1, 1), F(1, 2), 10)
    with pytest.raises(DomainError):
        scan_multipliers([], (3, 4, 5), F(1, 2), 10)


def test_brick_systems():
    check_witness(euler_brick_system(), BRICK)
    assert [f.arity for f in perfect_brick_system()] == [7] * 4


@pytest.mark.parametrize("alpha", [F(1, 3), F(2, 7), F(5, 11)])
def test_rational_density_bound(alpha):
    N = 500
    r = scan_multipliers(euler_brick_system(), BRICK, alpha, N)
    assert r.count >= N // alpha.denominator
    assert all(n in r.multipliers for n in range(alpha.denominator, N + 1, alpha.denominator))


def test_scan_kinds_agree_on_exact_multiples():
    for kind in KINDS:
        r = scan_multipliers(euler_brick_system(), BRICK, F(2, 7), 70, kind)
        assert {7, 14, 21} <= set(r.multipliers)


def test_bridge_rejects_bad_certificate():
    with pytest.raises(DomainError, match="k\\^2\\+l\\^2\\+m\\^2=d\\^2"):
        T_alpha_bridge(BRICK + (300,), F(1, 2), 10)
    with pytest.raises(DomainError):
        T_alpha_bridge((240, 117, 44, 267, 244, 126), F(1, 2), 10)
    with pytest.raises(DomainError):
        T_alpha_bridge((3, 4, 5), F(1, 2), 10)


def test_bridge_even_multipliers():
    rows = T_alpha_bridge(BRICK, F(1, 2), 20)
    evens = [r for r in rows if r["n"] % 2 == 0]
    assert [r["n"] for r in evens] == list(range(2, 21, 2))
    assert all(r["pairs_ok"] for r in evens)


def test_bridge_multiple_of_denominator():
    rows = T_alpha_bridge(BRICK, F(2, 7), 7)
    assert rows[-1]["n"] == 7 and rows[-1]["pairs_ok"]
