"""Newton diagrams of plane curve germs and their facet data."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .poly import LatticePoint, LaurentPoly2


class DiagramError(ValueError):
    """Invalid input for a Newton diagram construction."""


class NoFacetsError(DiagramError):
    """The diagram is a single vertex (the germ is a monomial times a unit)."""

    def __init__(self, msg: str = "diagram has no facets"):
        super().__init__(msg)


@dataclass(frozen=True)
class LinearForm:
    """Primitive positive form ``lx*kx + ly*ky``."""

    lx: int
    ly: int

    def __post_init__(self):
        if self.lx < 1 or self.ly < 1 or gcd(self.lx, self.ly) != 1:
            raise DiagramError(f"not a primitive positive form: ({self.lx}, {self.ly})")

    def __call__(self, k: LatticePoint) -> int:
        return self.lx * k[0] + self.ly * k[1]

    def __str__(self) -> str:
        cx = "" if self.lx == 1 else str(self.lx)
        cy = "" if self.ly == 1 else str(self.ly)
        return f"{cx}kx+{cy}ky"


@dataclass(frozen=True)
class Edge:
    v_from: LatticePoint
    v_to: LatticePoint
    normal: LinearForm
    level: int
    length: int
    direction: LatticePoint

    @classmethod
    def between(cls, a: LatticePoint, b: LatticePoint) -> "Edge":
        dx, dy = b[0] - a[0], b[1] - a[1]
        if dx <= 0 or dy >= 0:
            raise DiagramError(f"edge {a}->{b} must go right and down")
        s = gcd(dx, -dy)
        direction = (dx // s, dy // s)
        normal = LinearForm(-direction[1], direction[0])
        return cls(a, b, normal, normal(a), s, direction)

    @property
    def steepness(self) -> tuple[int, int]:
        # |dy|/dx as a pair for exact comparison
        return (-self.direction[1], self.direction[0])


def _steeper(e1: Edge, e2: Edge) -> bool:
    a, b = e1.steepness
    c, d = e2.steepness
    return a * d > c * b


@dataclass(frozen=True)
class NewtonDiagram:
    vertices: tuple[LatticePoint, ...]
    edges: tuple[Edge, ...]

    @classmethod
    def from_vertices(cls, vertices) -> "NewtonDiagram":
        """Build from an ordered vertex list, validating convexity."""
        verts = tuple((int(a), int(b)) for a, b in vertices)
        if not verts:
            raise DiagramError("a diagram needs at least one vertex")
        if any(a < 0 or b < 0 for a, b in verts):
            raise DiagramError("diagram vertices must be nonnegative")
        edges = tuple(Edge.between(verts[i], verts[i + 1]) for i in range(len(verts) - 1))
        for e1, e2 in zip(edges, edges[1:]):
            if not _steeper(e1, e2):
                raise DiagramError("edge slopes must become strictly less steep")
        return cls(verts, edges)

    @property
    def r(self) -> int:
        return len(self.edges)

    def shift(self, k: LatticePoint) -> "NewtonDiagram":
        return NewtonDiagram.from_vertices((a + k[0], b + k[1]) for a, b in self.vertices)

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "edges": [
                {
                    "from": list(e.v_from),
                    "to": list(e.v_to),
                    "normal": [e.normal.lx, e.normal.ly],
                    "level": e.level,
                    "length": e.length,
                }
                for e in self.edges
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "NewtonDiagram":
        diagram = cls.from_vertices(data["vertices"])
        # edge records are derived data; reject inconsistent ones
        if "edges" in data and diagram.to_json()["edges"] != data["edges"]:
            raise DiagramError("edge records do not match the vertices")
        return diagram


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def diagram_of(g: LaurentPoly2) -> NewtonDiagram:
    """Newton diagram (compact faces of the Newton polygon) of a polynomial."""
    if g.is_zero():
        raise DiagramError("the zero polynomial has no Newton diagram")
    if not g.is_polynomial():
        raise DiagramError("Newton diagram needs nonnegative exponents")
    lowest: dict[int, int] = {}
    for a, b in g.support():
        if a not in lowest or b < lowest[a]:
            lowest[a] = b
    pts = sorted(lowest.items())
    start = pts[0]
    ymin = min(b for _, b in pts)
    end = min(p for p in pts if p[1] == ymin)
    hull: list[LatticePoint] = []
    for p in pts:
        if p[0] > end[0]:
            break
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    assert hull[0] == start and hull[-1] == end
    return NewtonDiagram.from_vertices(hull)


def germ_diagram(f: LaurentPoly2) -> NewtonDiagram:
    """Diagram of a germ ``f`` with ``f(0) = 0`` and at least one facet."""
    if f.coeff((0, 0)) != 0:
        raise DiagramError("germ has a nonzero constant term")
    d = diagram_of(f)
    if d.r == 0:
        raise NoFacetsError()
    return d


def facet_normals(diagram: NewtonDiagram) -> list[tuple[LinearForm, int]]:
    if diagram.r == 0:
        raise NoFacetsError()
    return [(e.normal, e.level) for e in diagram.edges]


def u_of_diagram(form: LinearForm, diagram: NewtonDiagram) -> int:
    # a linear form on a staircase attains its minimum at a vertex
    return min(form(v) for v in diagram.vertices)


def gamma_segment(edge: Edge) -> NewtonDiagram:
    """The facet translated so its endpoints sit on the coordinate axes."""
    dx, dy = edge.direction
    s = edge.length
    return NewtonDiagram.from_vertices([(0, -dy * s), (dx * s, 0)])


@dataclass(frozen=True)
class ExponentMatrix:
    entries: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]
    ux: tuple[int, ...]
    uy: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.lengths)

    def reduced(self) -> tuple[tuple[int, ...], ...]:
        """Rows divided by the integer lengths."""
        return tuple(tuple(m // s for m in row) for row, s in zip(self.entries, self.lengths))


def exponent_matrix(diagram: NewtonDiagram) -> ExponentMatrix:
    forms = [form for form, _ in facet_normals(diagram)]
    entries = tuple(
        tuple(u_of_diagram(form, gamma_segment(e)) for form in forms) for e in diagram.edges
    )
    return ExponentMatrix(
        entries=entries,
        lengths=tuple(e.length for e in diagram.edges),
        ux=tuple(form.lx for form in forms),
        uy=tuple(form.ly for form in forms),
    )


def reduced_matrix_is_symmetric(em: ExponentMatrix) -> bool:
    """Diagnostic only: whether ``M`` with rows divided by ``s`` is symmetric."""
    m = em.reduced()
    return all(m[i][j] == m[j][i] for i in range(em.r) for j in range(em.r))
