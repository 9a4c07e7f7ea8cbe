"""Truncated multivariable power series and the Poincare series of a diagram.

The Poincare series of the filtration by the order functions ``v''_i`` is
the binomial product

    prod_i (1 - t^{M_i}) / ((1 - t^{u(x)}) (1 - t^{u(y)}))

where ``M`` is the exponent matrix of the diagram.  ``enumeration_oracle``
recomputes it from the sum over shifted diagrams ``k + Gamma_I`` with signs
``(-1)^{#I}``, building each ``Gamma_I`` as a Minkowski sum of axis-anchored
facet segments and minimizing every form over its vertices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .newton import NewtonDiagram, exponent_matrix, facet_normals

Vector = tuple[int, ...]


@dataclass(frozen=True)
class BinomialProduct:
    """``prod (1 - t^N) / prod (1 - t^D)`` over multisets of exponent vectors."""

    numerator: tuple[Vector, ...]
    denominator: tuple[Vector, ...]

    def __post_init__(self):
        vecs = self.numerator + self.denominator
        if any(not any(v) for v in vecs):
            raise ValueError("binomial exponents must be nonzero vectors")
        if any(min(v) < 0 for v in vecs):
            raise ValueError("binomial exponents must be nonnegative")
        if len({len(v) for v in vecs}) > 1:
            raise ValueError("exponent vectors of mixed length")

    @property
    def r(self) -> int:
        vecs = self.numerator + self.denominator
        return len(vecs[0]) if vecs else 0

    def simplified(self) -> "BinomialProduct":
        """Cancel identical vectors between numerator and denominator."""
        num, den = Counter(self.numerator), Counter(self.denominator)
        common = num & den
        num -= common
        den -= common
        return BinomialProduct(tuple(sorted(num.elements())), tuple(sorted(den.elements())))

    def multiset_equal(self, other: "BinomialProduct") -> bool:
        return Counter(self.numerator) == Counter(other.numerator) and Counter(
            self.denominator
        ) == Counter(other.denominator)

    def __mul__(self, other: "BinomialProduct") -> "BinomialProduct":
        return BinomialProduct(self.numerator + other.numerator, self.denominator + other.denominator)

    def to_json(self) -> dict:
        return {"num": [list(v) for v in self.numerator], "den": [list(v) for v in self.denominator]}

    @classmethod
    def from_json(cls, data: dict) -> "BinomialProduct":
        return cls(tuple(tuple(v) for v in data["num"]), tuple(tuple(v) for v in data["den"]))

    def __str__(self) -> str:
        return format_binomials(self)


def _monomial_str(v: Vector) -> str:
    if len(v) == 1:
        names = ["t"]
    else:
        names = [f"t{i + 1}" for i in range(len(v))]
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, v) if e]
    return "*".join(parts)


def format_binomials(b: BinomialProduct) -> str:
    def prod(vecs):
        return "".join(f"(1 - {_monomial_str(v)})" for v in vecs)

    num = prod(b.numerator) or "1"
    if not b.denominator:
        return num
    return f"{num} / {prod(b.denominator)}"


@dataclass
class TruncatedSeries:
    r: int
    D: int
    coeffs: dict[Vector, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in self.coeffs.items():
            e = tuple(e)
            if len(e) != self.r:
                raise ValueError(f"exponent {e} has wrong length for r={self.r}")
            if sum(e) <= self.D and c != 0:
                clean[e] = Fraction(c)
        self.coeffs = clean

    @classmethod
    def one(cls, r: int, D: int) -> "TruncatedSeries":
        return cls(r, D, {(0,) * r: Fraction(1)})

    def coeff(self, e: Vector) -> Fraction:
        return self.coeffs.get(tuple(e), Fraction(0))

    def mul_binomial(self, n: Vector) -> "TruncatedSeries":
        """Multiply by ``1 - t^n``."""
        out = dict(self.coeffs)
        for e, c in self.coeffs.items():
            k = tuple(a + b for a, b in zip(e, n))
            if sum(k) <= self.D:
                out[k] = out.get(k, 0) - c
        return TruncatedSeries(self.r, self.D, out)

    def div_binomial(self, u: Vector) -> "TruncatedSeries":
        """Multiply by the geometric series of ``t^u``."""
        step = sum(u)
        if step == 0:
            raise ValueError("cannot expand 1/(1 - t^0)")
        out: dict[Vector, Fraction] = {}
        for e, c in self.coeffs.items():
            k, deg = e, sum(e)
            while deg <= self.D:
                out[k] = out.get(k, 0) + c
                k = tuple(a + b for a, b in zip(k, u))
                deg += step
        return TruncatedSeries(self.r, self.D, out)

    def truncate(self, D: int) -> "TruncatedSeries":
        if D > self.D:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.r, D, self.coeffs)

    def specialize(self) -> "TruncatedSeries":
        """Substitute ``t_i -> t`` for all ``i``."""
        out: dict[Vector, Fraction] = {}
        for e, c in self.coeffs.items():
            k = (sum(e),)
            out[k] = out.get(k, 0) + c
        return TruncatedSeries(1, self.D, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.r, self.D, self.coeffs) == (other.r, other.D, other.coeffs)

    def to_json(self) -> dict:
        terms = [
            {"e": list(e), "c": f"{c.numerator}/{c.denominator}"}
            for e, c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        ]
        return {"r": self.r, "D": self.D, "terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        return cls(data["r"], data["D"], {tuple(t["e"]): Fraction(t["c"]) for t in data["terms"]})

    def __str__(self) -> str:
        if not self.coeffs:
            return f"0 + O(deg {self.D + 1})"
        parts = []
        for e, c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            mono = _monomial_str(e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") + f" + O(deg {self.D + 1})"


def expand(b: BinomialProduct, D: int, r: int | None = None) -> TruncatedSeries:
    """Power series of ``b`` up to total degree ``D``."""
    r = b.r if r is None else r
    s = TruncatedSeries.one(r, D)
    for n in b.numerator:
        s = s.mul_binomial(n)
    for u in b.denominator:
        s = s.div_binomial(u)
    return s


def series_equal(a: TruncatedSeries, b: TruncatedSeries) -> bool:
    if a.r != b.r or a.D != b.D:
        raise ValueError(f"series shapes differ: (r={a.r}, D={a.D}) vs (r={b.r}, D={b.D})")
    return a.coeffs == b.coeffs


def poincare_closed_form(diagram: NewtonDiagram) -> BinomialProduct:
    """Raw closed form; call ``.simplified()`` for the cancelled display form."""
    em = exponent_matrix(diagram)
    return BinomialProduct(tuple(em.entries), (em.ux, em.uy))


def specialize_binomials(b: BinomialProduct) -> BinomialProduct:
    return BinomialProduct(
        tuple((sum(v),) for v in b.numerator), tuple((sum(v),) for v in b.denominator)
    )


def _minkowski_vertices(diagram: NewtonDiagram, subset: tuple[int, ...]) -> list[tuple[int, int]]:
    # edges are already ordered by decreasing steepness
    segs = []
    for i in subset:
        e = diagram.edges[i]
        segs.append((e.length * e.direction[0], e.length * e.direction[1]))
    x, y = 0, -sum(dy for _, dy in segs)
    verts = [(x, y)]
    for dx, dy in segs:
        x, y = x + dx, y + dy
        verts.append((x, y))
    return verts


def enumeration_oracle(diagram: NewtonDiagram, D: int) -> TruncatedSeries:
    """Signed sum of ``t^{u(k + Gamma_I)}`` over shifts ``k >= 0`` and subsets ``I``."""
    forms = [form for form, _ in facet_normals(diagram)]
    r = len(forms)
    shifts: list[tuple[Vector, int]] = []
    for size in range(r + 1):
        for subset in combinations(range(r), size):
            verts = _minkowski_vertices(diagram, subset)
            u = tuple(min(form(v) for v in verts) for form in forms)
            shifts.append((u, (-1) ** size))
    ux = tuple(form.lx for form in forms)
    uy = tuple(form.ly for form in forms)
    out: dict[Vector, Fraction] = {}
    kx = 0
    while kx * sum(ux) <= D:
        ky = 0
        while kx * sum(ux) + ky * sum(uy) <= D:
            base = tuple(form((kx, ky)) for form in forms)
            for u, sign in shifts:
                e = tuple(a + b for a, b in zip(base, u))
                if sum(e) <= D:
                    out[e] = out.get(e, 0) + sign
            ky += 1
        kx += 1
    return TruncatedSeries(r, D, out)
