import random

import pytest

from curvepoincare.alexander import (
    CyclotomicMatrixForm,
    alexander_delta,
    alexander_multilink,
    multilink_rows,
    quasihomogeneous_poincare,
    reduced_multilink,
    reduced_poincare,
    transpose_involution,
)
from curvepoincare.newton import NewtonDiagram, exponent_matrix
from curvepoincare.randgen import random_diagram
from curvepoincare.series import BinomialProduct, expand, poincare_closed_form


def test_two_edge_example():
    d = NewtonDiagram.from_vertices([(0, 4), (2, 2), (4, 1)])
    assert exponent_matrix(d).entries == ((2, 2), (1, 2))
    assert multilink_rows(d) == ((2, 1), (2, 2))
    assert reduced_poincare(d).rows == ((2, 2), (1, 2))
    assert transpose_involution(reduced_poincare(d)) == reduced_multilink(d)


def test_single_edge_with_length_two():
    d = NewtonDiagram.from_vertices([(0, 2), (2, 0)])
    em = exponent_matrix(d)
    assert em.entries == ((2,),) and em.lengths == (2,)
    assert (em.ux, em.uy) == ((1,), (1,))
    assert alexander_delta(d) == BinomialProduct(((1,),), ((1,), (1,)))
    assert alexander_multilink(d) == BinomialProduct(((2,),), ((1,), (1,)))


def test_unit_lengths_delta_is_poincare(f_star_diagram):
    assert all(e.length == 1 for e in f_star_diagram.edges)
    assert alexander_delta(f_star_diagram).multiset_equal(poincare_closed_form(f_star_diagram))


def test_correspondence_random():
    rng = random.Random(21)
    for _ in range(30):
        d = random_diagram(rng)
        red = reduced_poincare(d)
        assert transpose_involution(red).rows == alexander_multilink(d).numerator
        assert transpose_involution(transpose_involution(red)) == red


def test_quasihomogeneous_series_counts_monomials():
    # P_u is the sum of t^{u(x^a y^b)} over all monomials
    rng = random.Random(2)
    D = 12
    for _ in range(10):
        d = random_diagram(rng)
        em = exponent_matrix(d)
        counts = {}
        for a in range(D + 1):
            for b in range(D + 1):
                e = tuple(a * x + b * y for x, y in zip(em.ux, em.uy))
                if sum(e) <= D:
                    counts[e] = counts.get(e, 0) + 1
        got = expand(quasihomogeneous_poincare(d), D)
        assert got.coeffs == counts


def test_cyclotomic_validation_and_json():
    with pytest.raises(ValueError):
        CyclotomicMatrixForm(((1, 2),))
    with pytest.raises(ValueError):
        CyclotomicMatrixForm(((0,),))
    n = CyclotomicMatrixForm(((2, 2), (1, 2)))
    assert CyclotomicMatrixForm.from_json(n.to_json()) == n
    assert n.as_binomials() == BinomialProduct(((2, 2), (1, 2)), ())
