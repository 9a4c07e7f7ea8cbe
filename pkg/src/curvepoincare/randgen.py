"""Seeded generators for diagrams, germs and Laurent polynomials."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .newton import NewtonDiagram
from .poly import LaurentPoly1, LaurentPoly2


def _primitive_directions(max_step: int) -> list[tuple[int, int]]:
    return [
        (dx, -dy)
        for dx in range(1, max_step + 1)
        for dy in range(1, max_step + 1)
        if gcd(dx, dy) == 1
    ]


def random_diagram(rng: random.Random, max_edges: int = 5, max_coord: int = 12, max_length: int = 3) -> NewtonDiagram:
    """Random lattice staircase with at most ``max_edges`` edges.

    Distinct primitive directions are sorted by steepness and chained from
    a start point on or near the ``ky`` axis.
    """
    dirs = _primitive_directions(min(5, max_coord))
    r = rng.randint(1, max_edges)
    while True:
        for _ in range(200):
            chosen = rng.sample(dirs, r)
            chosen.sort(key=lambda d: Fraction(-d[1], d[0]), reverse=True)
            lengths = [rng.choice([1, 1, 1] + list(range(1, max_length + 1))) for _ in chosen]
            width = sum(s * d[0] for s, d in zip(lengths, chosen))
            height = sum(s * -d[1] for s, d in zip(lengths, chosen))
            if width <= max_coord and height <= max_coord:
                break
        else:
            r -= 1
            continue
        break
    x0 = 0 if rng.random() < 0.6 else rng.randint(0, max_coord - width)
    y_end = 0 if rng.random() < 0.6 else rng.randint(0, max_coord - height)
    verts = [(x0, y_end + height)]
    for s, (dx, dy) in zip(lengths, chosen):
        x, y = verts[-1]
        verts.append((x + s * dx, y + s * dy))
    return NewtonDiagram.from_vertices(verts)


def _coeff(rng: random.Random, lo: int = -3, hi: int = 3) -> Fraction:
    c = 0
    while c == 0:
        c = rng.randint(lo, hi)
    return Fraction(c)


def random_poly(rng: random.Random, n_terms: int, max_deg: int, min_deg: int = 0) -> LaurentPoly2:
    terms = {}
    for _ in range(n_terms):
        k = (rng.randint(min_deg, max_deg), rng.randint(min_deg, max_deg))
        terms[k] = _coeff(rng)
    return LaurentPoly2(terms)


def germ_with_diagram(rng: random.Random, diagram: NewtonDiagram, extra_terms: int = 3, degenerate: float = 0.3) -> LaurentPoly2:
    """A polynomial whose Newton diagram is ``diagram``.

    With probability ``degenerate`` each edge polynomial is a pure power
    ``c (1 + z)^s`` (repeated roots), otherwise random coefficients are put
    on the interior lattice points of the edge.
    """
    terms: dict = {}
    for e in diagram.edges:
        pts = [(e.v_from[0] + j * e.direction[0], e.v_from[1] + j * e.direction[1]) for j in range(e.length + 1)]
        if rng.random() < degenerate:
            edge_poly = LaurentPoly1({0: 1})
            for _ in range(e.length):
                edge_poly = edge_poly * LaurentPoly1({0: 1, 1: rng.choice([1, -1, 2])})
            scale = _coeff(rng)
            coeffs = [scale * edge_poly.coeff(j) for j in range(e.length + 1)]
        else:
            coeffs = [_coeff(rng) if j in (0, e.length) else Fraction(rng.randint(-2, 2)) for j in range(e.length + 1)]
        for j, (p, c) in enumerate(zip(pts, coeffs)):
            if j == 0 and p in terms:
                continue  # shared vertex, keep the first edge's value
            terms[p] = c
    if diagram.r == 0:
        terms[diagram.vertices[0]] = Fraction(1)
    # extra terms strictly above every facet line
    xs = max(v[0] for v in diagram.vertices) + 2
    ys = max(v[1] for v in diagram.vertices) + 2
    tries = 0
    added = 0
    while added < extra_terms and tries < 50:
        tries += 1
        k = (rng.randint(0, xs), rng.randint(0, ys))
        if k in terms:
            continue
        inside = k[0] >= diagram.vertices[0][0] and k[1] >= diagram.vertices[-1][1]
        if inside and all(e.normal(k) > e.level for e in diagram.edges):
            terms[k] = _coeff(rng)
            added += 1
    return LaurentPoly2(terms)


def random_laurent1(rng: random.Random, lo: int, hi: int, density: float = 0.6) -> LaurentPoly1:
    return LaurentPoly1({e: _coeff(rng) for e in range(lo, hi + 1) if rng.random() < density})


def random_divisor(rng: random.Random, d_range: int = 5, max_s: int = 5) -> LaurentPoly1:
    d = rng.randint(-d_range, d_range)
    s = rng.randint(0, max_s)
    terms = {d: _coeff(rng), d + s: _coeff(rng)}
    for e in range(d + 1, d + s):
        terms[e] = Fraction(rng.randint(-3, 3))
    return LaurentPoly1(terms)


def random_instance(rng: random.Random, max_edges: int = 3, max_coord: int = 6):
    """Random ``(f, g, i)`` for order-function tests.

    ``g`` mixes a multiple of ``f`` with a small random remainder so that
    level cancellations actually happen.
    """
    diagram = random_diagram(rng, max_edges=max_edges, max_coord=max_coord, max_length=2)
    f = germ_with_diagram(rng, diagram, extra_terms=rng.randint(0, 2))
    kind = rng.random()
    if kind < 0.35:
        h = random_poly(rng, rng.randint(1, 3), 3)
        g = h * f + random_poly(rng, rng.randint(0, 3), 8)
    elif kind < 0.55:
        # polynomial part of a Laurent multiple: separates v' from v''
        h = random_poly(rng, rng.randint(1, 3), 3, min_deg=-2)
        g = LaurentPoly2({k: c for k, c in (h * f).items() if k[0] >= 0 and k[1] >= 0})
    elif kind < 0.7:
        # shifted copy of an edge polynomial: cancellable at its lowest level
        e = rng.choice(diagram.edges)
        edge_terms = {k: c for k, c in f.items() if e.normal(k) == e.level}
        g = LaurentPoly2(edge_terms).shift((rng.randint(0, 2), rng.randint(0, 2))) + random_poly(rng, 2, 9)
    else:
        g = random_poly(rng, rng.randint(1, 5), 7)
    if g.is_zero():
        g = random_poly(rng, 2, 5) + LaurentPoly2({(1, 1): 1})
    return f, g, rng.randrange(diagram.r)
