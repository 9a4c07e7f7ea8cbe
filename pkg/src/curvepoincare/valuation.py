"""Quasihomogeneous valuations and the order functions v' and v''.

``u_i(g)`` is the minimum of the facet form over the support of ``g``.
The order functions take the supremum of ``u_i(g + h f)`` over holomorphic
``h`` (``v_prime``) or over Laurent ``h`` (``v_double_prime``).  Both are
computed by reducing ``g`` one level at a time: the lowest level of ``g``
can only be cancelled by the slice of ``h`` sitting exactly ``c_i`` below
it, and that slice is forced to be the exact quotient of the two boundary
polynomials.  :func:`v_feasibility_oracle` answers the same question by
brute-force linear algebra and is kept independent of the reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .newton import Edge, LinearForm, germ_diagram
from .poly import LatticePoint, LaurentPoly1, LaurentPoly2, divides

FINITE = "finite"
AT_LEAST = "at_least"
INFINITE = "infinite"


@dataclass(frozen=True)
class ValueOrInfinite:
    kind: str
    value: int | None = None

    @classmethod
    def finite(cls, n: int) -> "ValueOrInfinite":
        return cls(FINITE, n)

    @classmethod
    def at_least(cls, cap: int) -> "ValueOrInfinite":
        return cls(AT_LEAST, cap)

    @classmethod
    def infinite(cls) -> "ValueOrInfinite":
        return cls(INFINITE)

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    @property
    def lower_bound(self) -> float:
        """Certified lower bound (exact for finite values)."""
        return float("inf") if self.kind == INFINITE else self.value

    def __str__(self) -> str:
        if self.kind == FINITE:
            return str(self.value)
        if self.kind == AT_LEAST:
            return f">={self.value}"
        return "inf"

    def to_json(self):
        if self.kind == FINITE:
            return self.value
        if self.kind == AT_LEAST:
            return {"at_least": self.value}
        return "inf"


def u_val(form: LinearForm, g: LaurentPoly2) -> ValueOrInfinite:
    if g.is_zero():
        return ValueOrInfinite.infinite()
    return ValueOrInfinite.finite(min(form(k) for k, _ in g.items()))


def line_base(form: LinearForm, c: int) -> LatticePoint:
    """Unique point on ``form == c`` with ``0 <= kx < form.ly``."""
    if form.ly == 1:
        kx = 0
    else:
        kx = (c * pow(form.lx, -1, form.ly)) % form.ly
    ky, rem = divmod(c - form.lx * kx, form.ly)
    assert rem == 0
    return (kx, ky)


def line_step(form: LinearForm) -> LatticePoint:
    return (form.ly, -form.lx)


@dataclass(frozen=True)
class LineRestriction:
    base: LatticePoint
    step: LatticePoint
    poly: LaurentPoly1

    def lift(self, poly: LaurentPoly1 | None = None) -> LaurentPoly2:
        """Back to two variables: ``z^j`` goes to ``x^(base + j*step)``."""
        poly = self.poly if poly is None else poly
        bx, by = self.base
        sx, sy = self.step
        return LaurentPoly2({(bx + j * sx, by + j * sy): c for j, c in poly.terms.items()})


def line_coordinate(form: LinearForm, k: LatticePoint) -> int:
    bx, _ = line_base(form, form(k))
    return (k[0] - bx) // form.ly


def boundary_part(g: LaurentPoly2, form: LinearForm, c: int) -> LineRestriction:
    base = line_base(form, c)
    step = line_step(form)
    poly = LaurentPoly1(
        ((k[0] - base[0]) // step[0], a) for k, a in g.items() if form(k) == c
    )
    return LineRestriction(base, step, poly)


def default_cap(edge: Edge) -> int:
    return max(64, 8 * edge.level)


def _edge(f: LaurentPoly2, i: int) -> Edge:
    if f.is_zero():
        raise ValueError("f must be nonzero")
    diagram = germ_diagram(f)
    if not 0 <= i < diagram.r:
        raise IndexError(f"edge index {i} out of range for {diagram.r} edges")
    return diagram.edges[i]


def _reduce(g: LaurentPoly2, f: LaurentPoly2, i: int, cap: int | None, holomorphic: bool) -> ValueOrInfinite:
    edge = _edge(f, i)
    form, ci = edge.normal, edge.level
    if cap is None:
        cap = default_cap(edge)
    fb = boundary_part(f, form, ci)
    q = fb.poly
    cur = g
    while True:
        if cur.is_zero():
            return ValueOrInfinite.infinite()
        c = min(form(k) for k, _ in cur.items())
        if c >= cap:
            return ValueOrInfinite.at_least(cap)
        gb = boundary_part(cur, form, c)
        quotient = divides(q, gb.poly)
        if quotient is None:
            return ValueOrInfinite.finite(c)
        # canonical base points are not additive; anchor h at the difference
        shift = (gb.base[0] - fb.base[0], gb.base[1] - fb.base[1])
        h = LineRestriction(shift, fb.step, quotient).lift()
        if holomorphic and not h.is_polynomial():
            return ValueOrInfinite.finite(c)
        cur = cur - h * f


def v_double_prime(g: LaurentPoly2, f: LaurentPoly2, i: int, cap: int | None = None) -> ValueOrInfinite:
    """``sup u_i(g + h f)`` over Laurent polynomials ``h``."""
    return _reduce(g, f, i, cap, holomorphic=False)


def v_prime(g: LaurentPoly2, f: LaurentPoly2, i: int, cap: int | None = None) -> ValueOrInfinite:
    """``sup u_i(g + h f)`` over holomorphic ``h``."""
    return _reduce(g, f, i, cap, holomorphic=True)


def valuation_vector(which: str, g: LaurentPoly2, f: LaurentPoly2, cap: int | None = None) -> list[ValueOrInfinite]:
    diagram = germ_diagram(f)
    if which == "u":
        return [u_val(e.normal, g) for e in diagram.edges]
    fn = {"vprime": v_prime, "vdoubleprime": v_double_prime}[which]
    return [fn(g, f, i, cap) for i in range(diagram.r)]


# --------------------------------------------------------------------------
# brute-force oracle


class SolverLimitError(RuntimeError):
    pass


HOLOMORPHIC = "holomorphic"
LAURENT = "laurent"


def _h_region(form: LinearForm, lo: int, hi: int, mode: str, band: int) -> list[LatticePoint]:
    pts = []
    for level in range(lo, hi + 1):
        bx, by = line_base(form, level)
        sx, sy = line_step(form)
        if mode == HOLOMORPHIC:
            # kx = bx + j*sx >= 0 and ky = by + j*sy >= 0
            j = 0
            while by + j * sy >= 0:
                pts.append((bx + j * sx, by + j * sy))
                j += 1
        else:
            pts.extend((bx + j * sx, by + j * sy) for j in range(-band, band + 1))
    return pts


def _consistent(rows: list[tuple[dict[int, Fraction], Fraction]]) -> bool:
    """Whether the sparse system ``rows`` (``{col: coeff}, rhs``) is solvable."""
    pivots: dict[int, tuple[dict[int, Fraction], Fraction]] = {}
    for row, rhs in rows:
        row = dict(row)
        while row:
            col = min(row)
            a = row[col]
            if col in pivots:
                prow, prhs = pivots[col]
                for k, v in prow.items():
                    nv = row.get(k, 0) - a * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
                rhs -= a * prhs
            else:
                pivots[col] = ({k: v / a for k, v in row.items()}, rhs / a)
                break
        else:
            if rhs != 0:
                return False
    return True


def v_feasibility_oracle(
    g: LaurentPoly2,
    f: LaurentPoly2,
    i: int,
    target: int,
    band: int = 10,
    mode: str = LAURENT,
    max_unknowns: int = 5000,
) -> bool:
    """Decide by exact linear algebra whether ``v(g) >= target``.

    Looks for ``h`` supported below level ``target - c_i`` (nonnegative
    exponents in holomorphic mode, line coordinate within ``band`` in
    Laurent mode) such that ``g + h f`` has no terms below ``target``.
    The Laurent region also includes one level under the lowest level of
    ``g`` so that the forced vanishing of low slices of ``h`` is tested
    rather than assumed.
    """
    if mode not in (HOLOMORPHIC, LAURENT):
        raise ValueError(f"unknown mode {mode!r}")
    edge = _edge(f, i)
    form, ci = edge.normal, edge.level
    if g.is_zero():
        return True
    ug = min(form(k) for k, _ in g.items())
    hi = target - ci - 1
    lo = 0 if mode == HOLOMORPHIC else min(ug, target) - ci - 1
    unknowns = _h_region(form, lo, hi, mode, band) if hi >= lo else []
    if len(unknowns) > max_unknowns:
        raise SolverLimitError(f"{len(unknowns)} unknowns exceed the limit {max_unknowns}")
    col_of = {k: n for n, k in enumerate(unknowns)}
    f_terms = list(f.items())
    eqs: dict[LatticePoint, dict[int, Fraction]] = {}
    for k, a in g.items():
        if form(k) < target:
            eqs.setdefault(k, {})
    for k, n in col_of.items():
        for (ex, ey), c in f_terms:
            m = (k[0] + ex, k[1] + ey)
            if form(m) < target:
                eqs.setdefault(m, {})[n] = c
    rows = [(cols, -g.coeff(m)) for m, cols in sorted(eqs.items(), key=lambda kv: form(kv[0]))]
    return _consistent(rows)
