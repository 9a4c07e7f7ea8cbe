from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curvepoincare.newton import LinearForm, NoFacetsError
from curvepoincare.poly import LaurentPoly1, LaurentPoly2, parse_poly
from curvepoincare.valuation import (
    SolverLimitError,
    ValueOrInfinite,
    boundary_part,
    default_cap,
    line_base,
    u_val,
    v_double_prime,
    v_feasibility_oracle,
    v_prime,
    valuation_vector,
)
from curvepoincare.verify import agreement_suite, axioms_suite

fin = ValueOrInfinite.finite
L1 = LinearForm(3, 1)


def P(text):
    return parse_poly(text, allow_negative=True)


def test_u_val(f_star):
    assert u_val(L1, f_star) == fin(5)
    assert u_val(LinearForm(1, 1), LaurentPoly2()) == ValueOrInfinite.infinite()
    assert u_val(LinearForm(1, 1), P("x^2*y^5")) == fin(7)


def test_boundary_part(f_star):
    bp = boundary_part(f_star, L1, 5)
    assert bp.base == (0, 5) and bp.step == (1, -3)
    assert bp.poly == LaurentPoly1({0: 1, 1: 1})
    assert boundary_part(f_star, L1, 6).poly.is_zero()
    bp = boundary_part(P("x^2*y"), L1, 7)
    assert bp.base == (0, 7) and bp.poly == LaurentPoly1({2: 1})
    assert bp.lift() == P("x^2*y")


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 9), st.integers(1, 9), st.integers(-40, 40))
def test_line_base_is_canonical(a, b, c):
    from math import gcd

    if gcd(a, b) != 1:
        return
    form = LinearForm(a, b)
    kx, ky = line_base(form, c)
    assert form((kx, ky)) == c and 0 <= kx < b


def test_v_double_prime_small():
    f = P("x + y")
    assert v_double_prime(P("x + y"), f, 0) == ValueOrInfinite.infinite()
    assert v_double_prime(P("x"), f, 0) == fin(1)
    assert not v_feasibility_oracle(P("x"), f, 0, 2, band=10)
    assert v_prime(P("y^2"), f, 0) == fin(2)
    assert not v_feasibility_oracle(P("y^2"), f, 0, 3, mode="holomorphic")


def test_f_star_values(f_star):
    g = P("y^5 + x*y^2")
    assert [v_double_prime(g, f_star, i) for i in range(3)] == [fin(7), fin(3), fin(7)]
    assert [v_prime(g, f_star, i) for i in range(3)] == [fin(7), fin(3), fin(7)]
    assert [str(v) for v in valuation_vector("u", g, f_star)] == ["5", "3", "7"]
    assert v_prime(P("x"), f_star, 0) == fin(3)
    # oracle confirmation of the frozen values
    for i, t in enumerate([7, 3, 7]):
        for mode in ("laurent", "holomorphic"):
            assert v_feasibility_oracle(g, f_star, i, t, band=12, mode=mode)
            assert not v_feasibility_oracle(g, f_star, i, t + 1, band=12, mode=mode)


def test_oracle_examples(f_star):
    f = P("x + y")
    assert v_feasibility_oracle(f, f, 0, 100, band=2)
    assert not v_feasibility_oracle(P("x"), f, 0, 2, band=10)
    assert not v_feasibility_oracle(P("y^5 + x*y^2"), f_star, 0, 8, band=10)


def _f_star_family(a05, a06, a13, a07, a14, a21):
    return LaurentPoly2(
        {(0, 5): a05, (1, 2): a05, (0, 6): a06, (1, 3): a13, (0, 7): a07, (1, 4): a14, (2, 1): a21}
    )


def test_level_six_cancellation_is_holomorphic(f_star):
    # a_06 = a_13 != 0 is cancelled by h = -a_06*y, which is holomorphic
    g = _f_star_family(1, 4, 4, 0, 0, 2)
    assert v_prime(g, f_star, 0) == fin(7)
    assert v_feasibility_oracle(g, f_star, 0, 7, mode="holomorphic")
    assert not v_feasibility_oracle(g, f_star, 0, 8, mode="holomorphic")


@pytest.mark.parametrize(
    "a07, a14, a21, expected_above_7",
    [
        (1, 2, 1, False),  # a07 - a14 + a21 = 0 but a05 = 1 keeps the obstruction
        (1, 2, 2, True),  # a07 - a14 + a21 = a05: level 7 cancels
        (3, 1, 1, False),
    ],
)
def test_level_seven_obstruction_includes_a05(f_star, a07, a14, a21, expected_above_7):
    g = _f_star_family(1, 0, 0, a07, a14, a21)
    v = v_double_prime(g, f_star, 0)
    assert (v.lower_bound > 7) == expected_above_7
    assert v_feasibility_oracle(g, f_star, 0, 7, band=12)
    assert v_feasibility_oracle(g, f_star, 0, 8, band=12) == expected_above_7


def test_v_prime_below_v_double_prime():
    # polynomial part of a Laurent multiple of f: only a Laurent h cancels it
    f = parse_poly("y^5 + x*y^2 + x^2*y + x^5")
    h = P("x*y^-1")
    g = LaurentPoly2({k: c for k, c in (h * f).items() if k[1] >= 0})
    vp, vpp = v_prime(g, f, 0), v_double_prime(g, f, 0)
    assert vp == fin(7)
    assert vpp == fin(17)


def test_cap_and_infinite():
    f = P("x + y")
    g = P("x^41 + y^41")  # divisible by x + y
    assert v_double_prime(g, f, 0, cap=30) == ValueOrInfinite.at_least(30)
    assert v_double_prime(g, f, 0) == ValueOrInfinite.infinite()
    assert v_double_prime(P("x^40"), f, 0, cap=30) == ValueOrInfinite.at_least(30)


def test_default_cap(f_star_diagram):
    assert default_cap(f_star_diagram.edges[0]) == 64
    e = parse_poly("y^9 + x^11")
    from curvepoincare.newton import germ_diagram

    assert default_cap(germ_diagram(e).edges[0]) == 8 * 99


def test_errors(f_star):
    with pytest.raises(IndexError):
        v_double_prime(P("x"), f_star, 3)
    with pytest.raises(ValueError):
        v_prime(P("x"), LaurentPoly2(), 0)
    with pytest.raises(NoFacetsError):
        v_prime(P("x"), P("x*y"), 0)
    with pytest.raises(SolverLimitError):
        v_feasibility_oracle(P("x"), f_star, 0, 60, band=40, max_unknowns=100)
    with pytest.raises(ValueError):
        v_feasibility_oracle(P("x"), f_star, 0, 6, mode="formal")


def test_value_rendering():
    assert str(fin(3)) == "3"
    assert str(ValueOrInfinite.at_least(30)) == ">=30"
    assert ValueOrInfinite.infinite().to_json() == "inf"
    assert ValueOrInfinite.at_least(30).to_json() == {"at_least": 30}
    assert ValueOrInfinite.at_least(30).lower_bound == 30


def test_scaling_by_rationals(f_star):
    g = P("y^5 + x*y^2 - 3*x^3*y")
    for lam in (Fraction(-1, 3), Fraction(7, 2)):
        for i in range(3):
            assert v_double_prime(g.scale(lam), f_star, i) == v_double_prime(g, f_star, i)


def test_agreement_small_seeded_run():
    res = agreement_suite(seed=11, n=40)
    assert res.passed, res.failures[:3]


def test_axioms_small_seeded_run():
    res = axioms_suite(seed=5, n=100)
    assert res.passed, res.failures[:3]
