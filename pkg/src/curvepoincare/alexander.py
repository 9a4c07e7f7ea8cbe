"""Alexander polynomials of the facet curves and the transpose involution.

An ordered product ``prod_i (1 - t^{N_i})`` of ``r`` binomials in ``r``
variables is stored as its ``r x r`` exponent matrix ``N``.  Transposing
``N`` carries the reduced Poincare series (rows ``s_i m_i``) to the reduced
multilink Alexander polynomial (rows ``(s_1 m_1i, ..., s_r m_ri)``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .newton import NewtonDiagram, exponent_matrix
from .series import BinomialProduct

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CyclotomicMatrixForm:
    rows: Matrix

    def __post_init__(self):
        n = len(self.rows)
        if any(len(row) != n for row in self.rows):
            raise ValueError("exponent matrix must be square")
        if any(e < 1 for row in self.rows for e in row):
            raise ValueError("exponent matrix entries must be positive")

    def as_binomials(self) -> BinomialProduct:
        return BinomialProduct(self.rows, ())

    def to_json(self) -> dict:
        return {"matrix": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "CyclotomicMatrixForm":
        return cls(tuple(tuple(row) for row in data["matrix"]))


def transpose_involution(n: CyclotomicMatrixForm) -> CyclotomicMatrixForm:
    return CyclotomicMatrixForm(tuple(zip(*n.rows)) if n.rows else ())


def alexander_delta(diagram: NewtonDiagram) -> BinomialProduct:
    """Alexander polynomial of the link of the facet curves ``g_i``."""
    em = exponent_matrix(diagram)
    return BinomialProduct(em.reduced(), (em.ux, em.uy))


def multilink_rows(diagram: NewtonDiagram) -> Matrix:
    em = exponent_matrix(diagram)
    m, s = em.reduced(), em.lengths
    r = em.r
    return tuple(tuple(s[j] * m[j][i] for j in range(r)) for i in range(r))


def alexander_multilink(diagram: NewtonDiagram) -> BinomialProduct:
    """Alexander polynomial of the collection ``g_i^{s_i}``."""
    em = exponent_matrix(diagram)
    return BinomialProduct(multilink_rows(diagram), (em.ux, em.uy))


def reduced_poincare(diagram: NewtonDiagram) -> CyclotomicMatrixForm:
    em = exponent_matrix(diagram)
    return CyclotomicMatrixForm(
        tuple(tuple(s * e for e in row) for s, row in zip(em.lengths, em.reduced()))
    )


def reduced_multilink(diagram: NewtonDiagram) -> CyclotomicMatrixForm:
    return CyclotomicMatrixForm(multilink_rows(diagram))


def quasihomogeneous_poincare(diagram: NewtonDiagram) -> BinomialProduct:
    em = exponent_matrix(diagram)
    return BinomialProduct((), (em.ux, em.uy))
