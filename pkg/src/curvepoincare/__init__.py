"""Exact Newton-diagram invariants of plane curve germs.

Newton diagrams and facet data, the quasihomogeneous valuations ``u_i`` and
order functions ``v'_i``, ``v''_i``, the closed-form multivariable Poincare
series with its enumeration oracle, and the related Alexander polynomials.
"""

from .alexander import (
    CyclotomicMatrixForm,
    alexander_delta,
    alexander_multilink,
    quasihomogeneous_poincare,
    reduced_poincare,
    transpose_involution,
)
from .newton import (
    DiagramError,
    Edge,
    ExponentMatrix,
    LinearForm,
    NewtonDiagram,
    NoFacetsError,
    diagram_of,
    exponent_matrix,
    facet_normals,
    gamma_segment,
    germ_diagram,
    u_of_diagram,
)
from .poly import (
    LaurentPoly1,
    LaurentPoly2,
    PolySyntaxError,
    laurent_division,
    parse_poly,
)
from .series import (
    BinomialProduct,
    TruncatedSeries,
    enumeration_oracle,
    expand,
    poincare_closed_form,
    series_equal,
)
from .valuation import (
    LineRestriction,
    ValueOrInfinite,
    boundary_part,
    u_val,
    v_double_prime,
    v_feasibility_oracle,
    v_prime,
)

__version__ = "0.1.0"
