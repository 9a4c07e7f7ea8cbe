import json
import random
from fractions import Fraction

import pytest

from curvepoincare.newton import NewtonDiagram, germ_diagram
from curvepoincare.poly import parse_poly
from curvepoincare.randgen import random_diagram
from curvepoincare.series import (
    BinomialProduct,
    TruncatedSeries,
    enumeration_oracle,
    expand,
    format_binomials,
    poincare_closed_form,
    series_equal,
    specialize_binomials,
)


def series(r, D, terms):
    return TruncatedSeries(r, D, {tuple(e): Fraction(c) for e, c in terms.items()})


def test_expand_geometric():
    b = BinomialProduct((), ((1,),))
    assert expand(b, 3) == series(1, 3, {(0,): 1, (1,): 1, (2,): 1, (3,): 1})


def test_expand_cusp():
    b = BinomialProduct(((6,),), ((2,), (3,)))
    got = expand(b, 8)
    assert got == series(1, 8, {(k,): 1 for k in (0, 2, 3, 4, 5, 6, 7, 8)})


def test_expand_two_variables():
    b = BinomialProduct(((1, 1),), ((1, 0), (0, 1)))
    expected = series(2, 2, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (2, 0): 1, (0, 2): 1})
    assert expand(b, 2) == expected


@pytest.mark.parametrize("a, b", [(2, 3), (3, 4), (2, 5), (3, 5), (4, 7)])
def test_quasihomogeneous_semigroup(a, b):
    d = germ_diagram(parse_poly(f"y^{a} + x^{b}"))
    D = 30
    got = expand(poincare_closed_form(d), D)
    members = {a * i + b * j for i in range(D + 1) for j in range(D + 1)}
    assert got == series(1, D, {(k,): 1 for k in range(D + 1) if k in members})


def test_f_star_closed_form(f_star_diagram):
    raw = poincare_closed_form(f_star_diagram)
    assert raw.numerator == ((3, 1, 1), (1, 1, 1), (1, 1, 3))
    assert raw.denominator == ((3, 1, 1), (1, 1, 3))
    assert raw.simplified() == BinomialProduct(((1, 1, 1),), ())
    assert series_equal(expand(raw, 12), enumeration_oracle(f_star_diagram, 12))


def test_identity_on_random_diagrams():
    rng = random.Random(3)
    for _ in range(15):
        d = random_diagram(rng, max_edges=4, max_coord=10)
        assert series_equal(expand(poincare_closed_form(d), 14), enumeration_oracle(d, 14)), d.vertices


def test_identity_with_repeated_facets():
    d = NewtonDiagram.from_vertices([(0, 6), (2, 2), (6, 0)])
    assert [e.length for e in d.edges] == [2, 2]
    assert series_equal(expand(poincare_closed_form(d), 16), enumeration_oracle(d, 16))


def test_constant_term_and_integrality():
    rng = random.Random(8)
    for _ in range(10):
        d = random_diagram(rng)
        s = expand(poincare_closed_form(d), 10)
        assert s.coeff((0,) * d.r) == 1
        assert all(c.denominator == 1 for c in s.coeffs.values())


def test_specialization_commutes():
    rng = random.Random(4)
    for _ in range(10):
        d = random_diagram(rng, max_edges=3)
        b = poincare_closed_form(d)
        assert expand(b, 12).specialize() == expand(specialize_binomials(b), 12)


def test_truncation_consistency(f_star_diagram):
    b = poincare_closed_form(f_star_diagram)
    assert expand(b, 15).truncate(9) == expand(b, 9)
    with pytest.raises(ValueError):
        expand(b, 5).truncate(6)


def test_series_equal_shape_mismatch():
    a = TruncatedSeries.one(1, 3)
    assert series_equal(a, TruncatedSeries.one(1, 3))
    assert not series_equal(a, series(1, 3, {(0,): 1, (2,): 5}))
    with pytest.raises(ValueError):
        series_equal(a, TruncatedSeries.one(2, 3))
    with pytest.raises(ValueError):
        series_equal(a, TruncatedSeries.one(1, 4))


def test_json_round_trip(f_star_diagram):
    b = poincare_closed_form(f_star_diagram)
    assert BinomialProduct.from_json(json.loads(json.dumps(b.to_json()))) == b
    s = expand(b, 8).mul_binomial((1, 0, 0)).div_binomial((0, 2, 0))
    s = TruncatedSeries(s.r, s.D, {e: c / 3 for e, c in s.coeffs.items()})
    assert TruncatedSeries.from_json(json.loads(json.dumps(s.to_json()))) == s


def test_rendering():
    assert format_binomials(BinomialProduct(((6,),), ((2,), (3,)))) == "(1 - t^6) / (1 - t^2)(1 - t^3)"
    assert str(BinomialProduct(((1, 1, 1),), ())) == "(1 - t1*t2*t3)"
    assert str(series(1, 3, {(0,): 1, (2,): -2})) == "1 - 2*t^2 + O(deg 4)"


def test_binomial_validation():
    with pytest.raises(ValueError):
        BinomialProduct(((0, 0),), ())
    with pytest.raises(ValueError):
        BinomialProduct(((1, -1),), ())
    with pytest.raises(ValueError):
        BinomialProduct(((1,),), ((1, 2),))
    with pytest.raises(ValueError):
        TruncatedSeries.one(1, 2).div_binomial((0,))
