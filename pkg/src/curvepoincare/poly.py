"""Exact bivariate Laurent polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` throughout.  Exponents are
integer pairs ``(kx, ky)`` and may be negative; germ inputs coming from
the parser are checked to be honest polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Rational = Fraction
LatticePoint = tuple[int, int]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"coefficient must be int, str or Fraction, not {type(c).__name__}")


class LaurentPoly2:
    """Finitely supported map ``(kx, ky) -> Fraction`` with no zero entries.

    Instances are immutable and hashable.  Arithmetic operators return new
    normalized polynomials.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[LatticePoint, object] | Iterable[tuple[LatticePoint, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[LatticePoint, Fraction] = {}
        for k, c in items:
            key = (int(k[0]), int(k[1]))
            acc[key] = acc.get(key, Fraction(0)) + _as_fraction(c)
        self._terms = {k: c for k, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[LatticePoint, Fraction]) -> "LaurentPoly2":
        # terms must already be zero-free
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, k: LatticePoint, c=1) -> "LaurentPoly2":
        return cls({k: c})

    @property
    def terms(self) -> dict[LatticePoint, Fraction]:
        return dict(self._terms)

    def support(self) -> list[LatticePoint]:
        return sorted(self._terms)

    def coeff(self, k: LatticePoint) -> Fraction:
        return self._terms.get(k, Fraction(0))

    def items(self) -> Iterator[tuple[LatticePoint, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly2):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly2({(0, 0): other})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentPoly2._wrap(out)

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly2":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        out: dict[LatticePoint, Fraction] = {}
        for (a, b), c in self._terms.items():
            for (e, f), d in other._terms.items():
                k = (a + e, b + f)
                out[k] = out.get(k, 0) + c * d
        return LaurentPoly2._wrap({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def scale(self, lam) -> "LaurentPoly2":
        lam = _as_fraction(lam)
        if lam == 0:
            return LaurentPoly2()
        return LaurentPoly2._wrap({k: lam * c for k, c in self._terms.items()})

    def shift(self, k: LatticePoint) -> "LaurentPoly2":
        """Multiply by the monomial ``x^k[0] y^k[1]``."""
        return LaurentPoly2._wrap({(a + k[0], b + k[1]): c for (a, b), c in self._terms.items()})

    def is_polynomial(self) -> bool:
        return all(a >= 0 and b >= 0 for a, b in self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly2({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def add(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p + q


def sub(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p - q


def mul(p: LaurentPoly2, q: LaurentPoly2) -> LaurentPoly2:
    return p * q


def scalar_mul(lam, p: LaurentPoly2) -> LaurentPoly2:
    return p.scale(lam)


def _format_monomial(k: LatticePoint) -> str:
    parts = []
    for name, e in zip("xy", k):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(p: LaurentPoly2) -> str:
    """Render in the grammar accepted by :func:`parse_poly`.

    Terms are listed by increasing total degree, then increasing ``kx``.
    """
    if p.is_zero():
        return "0"
    chunks = []
    for k in sorted(p.support(), key=lambda k: (k[0] + k[1], k[0])):
        c = p.coeff(k)
        mono = _format_monomial(k)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        chunks.append((sign, body))
    first_sign, first = chunks[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


# --------------------------------------------------------------------------
# parsing


class PolySyntaxError(ValueError):
    """Raised on malformed polynomial text; ``pos`` is a 0-based column."""

    def __init__(self, msg: str, text: str, pos: int):
        self.pos = pos
        self.text = text
        super().__init__(f"{msg} at position {pos}: {text!r}")


class _Parser:
    def __init__(self, text: str, allow_negative: bool):
        self.text = text
        self.allow_negative = allow_negative
        self.i = 0
        self.n = len(text)

    def error(self, msg: str, pos: int | None = None):
        raise PolySyntaxError(msg, self.text, self.i if pos is None else pos)

    def skip(self):
        while self.i < self.n and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < self.n else ""

    def integer(self, signed: bool = False) -> int:
        self.skip()
        start = self.i
        if signed and self.i < self.n and self.text[self.i] in "+-":
            self.i += 1
            self.skip()
        digits_start = self.i
        while self.i < self.n and self.text[self.i].isdigit():
            self.i += 1
        if self.i == digits_start:
            self.error("expected integer")
        return int(self.text[start:self.i].replace(" ", ""))

    def parse(self) -> LaurentPoly2:
        terms: dict[LatticePoint, Fraction] = {}
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
        while True:
            k, c = self.term()
            terms[k] = terms.get(k, Fraction(0)) + sign * c
            ch = self.peek()
            if ch == "":
                break
            if ch not in "+-":
                self.error(f"unexpected character {ch!r}")
            sign = -1 if ch == "-" else 1
            self.i += 1
        return LaurentPoly2(terms)

    def term(self) -> tuple[LatticePoint, Fraction]:
        self.skip()
        start = self.i
        coeff = Fraction(1)
        seen = False
        if self.peek().isdigit():
            num = self.integer()
            den = 1
            if self.peek() == "/":
                self.i += 1
                at = self.i
                den = self.integer()
                if den == 0:
                    self.error("zero denominator", at)
            coeff = Fraction(num, den)
            seen = True
        kx = ky = 0
        while True:
            ch = self.peek()
            if ch == "*":
                if not seen:
                    self.error("'*' without a left operand")
                self.i += 1
                ch = self.peek()
                if ch not in ("x", "y"):
                    self.error("expected 'x' or 'y' after '*'")
            if ch not in ("x", "y"):
                break
            self.i += 1
            e = 1
            if self.peek() == "^":
                self.i += 1
                at = self.i
                e = self.integer(signed=True)
                if e < 0 and not self.allow_negative:
                    self.error("negative exponent in germ input", at)
            if ch == "x":
                kx += e
            else:
                ky += e
            seen = True
        if not seen:
            self.error("expected a term", start)
        return (kx, ky), coeff


def parse_poly(text: str, allow_negative: bool = False) -> LaurentPoly2:
    """Parse ``text`` such as ``"3/2*x^2*y - y^3"``.

    Negative exponents are rejected unless ``allow_negative`` is set.
    """
    return _Parser(text, allow_negative).parse()


# --------------------------------------------------------------------------
# one-variable Laurent polynomials


class LaurentPoly1:
    """Finitely supported map ``int -> Fraction`` with no zero entries."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), Fraction(0)) + _as_fraction(c)
        self._terms = {e: c for e, c in acc.items() if c != 0}

    @classmethod
    def from_list(cls, coeffs: Iterable, start: int = 0) -> "LaurentPoly1":
        return cls((start + i, c) for i, c in enumerate(coeffs))

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coeff(self, e: int) -> Fraction:
        return self._terms.get(e, Fraction(0))

    def support(self) -> list[int]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def low(self) -> int:
        return min(self._terms)

    def high(self) -> int:
        return max(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly1):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly1({0: other})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly1(out)

    def __neg__(self) -> "LaurentPoly1":
        return LaurentPoly1({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly1":
        if isinstance(other, (int, Fraction)):
            return LaurentPoly1({e: c * other for e, c in self._terms.items()})
        out: dict[int, Fraction] = {}
        for e, c in self._terms.items():
            for f, d in other._terms.items():
                out[e + f] = out.get(e + f, 0) + c * d
        return LaurentPoly1(out)

    __rmul__ = __mul__

    def __call__(self, z) -> Fraction:
        z = _as_fraction(z)
        return sum((c * z**e for e, c in self._terms.items()), Fraction(0))

    def __repr__(self) -> str:
        if not self._terms:
            return "LaurentPoly1(0)"
        body = " + ".join(f"{c}*z^{e}" for e, c in sorted(self._terms.items()))
        return f"LaurentPoly1({body})"


def laurent_division(p: LaurentPoly1, q: LaurentPoly1, d_prime: int) -> tuple[LaurentPoly1, LaurentPoly1]:
    """Divide ``p`` by ``q`` leaving a remainder supported in a fixed window.

    With ``q = sum_{i=0..s} b_i z^(d+i)`` (``b_0, b_s != 0``) returns the
    unique ``(a, r)`` with ``p = q*a + r`` and ``supp r`` inside
    ``{d_prime, ..., d_prime + s - 1}``.  Terms above the window are peeled
    with the top coefficient of ``q``, then terms below it with the bottom
    coefficient; the second pass never reaches back above the window.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    qt = q.terms
    d, top = min(qt), max(qt)
    s = top - d
    b0, bs = qt[d], qt[top]
    rem = p.terms
    quot: dict[int, Fraction] = {}

    def subtract(shift: int, factor: Fraction):
        quot[shift] = quot.get(shift, 0) + factor
        for e, b in qt.items():
            v = rem.get(e + shift, 0) - factor * b
            if v:
                rem[e + shift] = v
            else:
                rem.pop(e + shift, None)

    hi = d_prime + s
    while rem:
        e = max(rem)
        if e < hi:
            break
        subtract(e - top, rem[e] / bs)
    while rem:
        e = min(rem)
        if e >= d_prime:
            break
        subtract(e - d, rem[e] / b0)
    return LaurentPoly1(quot), LaurentPoly1(rem)


def divides(q: LaurentPoly1, p: LaurentPoly1) -> LaurentPoly1 | None:
    """Exact quotient ``p / q`` in the Laurent ring, or ``None``."""
    a, r = laurent_division(p, q, 0)
    return a if r.is_zero() else None
