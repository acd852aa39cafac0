"""Elliptic curves y^2 = x^3 + a2 x^2 + a4 x + a6 over Q with the chord-tangent law."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .arith import Rational, as_rat, cbrt_exact, format_rat, sqrt_exact
from .errors import NotOnCurveError, SingularCurveError


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rat(self.x))
        object.__setattr__(self, "y", as_rat(self.y))

    def __repr__(self):
        return f"Point({format_rat(self.x)}, {format_rat(self.y)})"


CurvePoint = Union[Point, _Infinity]


class Invariants(NamedTuple):
    b2: Fraction
    b4: Fraction
    b6: Fraction
    b8: Fraction
    c4: Fraction
    c6: Fraction
    discriminant: Fraction
    j: Fraction | None


def weierstrass_invariants(a2: Rational, a4: Rational, a6: Rational) -> Invariants:
    """Standard b/c invariants of the a1 = a3 = 0 model; j is None when singular."""
    a2, a4, a6 = as_rat(a2), as_rat(a4), as_rat(a6)
    b2, b4, b6 = 4 * a2, 2 * a4, 4 * a6
    b8 = 4 * a2 * a6 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    j = c4**3 / disc if disc else None
    return Invariants(b2, b4, b6, b8, c4, c6, disc, j)


@dataclass(frozen=True)
class WeierstrassCurve:
    a2: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a2", "a4", "a6"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))
        if weierstrass_invariants(self.a2, self.a4, self.a6).discriminant == 0:
            raise SingularCurveError(f"singular curve {self}")

    def __str__(self):
        terms = "x^3"
        for c, mono in ((self.a2, "x^2"), (self.a4, "x"), (self.a6, "")):
            if c:
                terms += f" {'-' if c < 0 else '+'} {format_rat(abs(c))}{mono}"
        return f"y^2 = {terms}"

    def rhs(self, x: Rational) -> Fraction:
        x = as_rat(x)
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def invariants(self) -> Invariants:
        return weierstrass_invariants(self.a2, self.a4, self.a6)

    def on_curve(self, p) -> bool:
        if p is INFINITY:
            return True
        return p.y * p.y == self.rhs(p.x)

    def point(self, x: Rational, y: Rational) -> Point:
        p = Point(x, y)
        self._require(p)
        return p

    def _require(self, p):
        if not self.on_curve(p):
            raise NotOnCurveError(f"{p!r} is not on {self}")

    def neg(self, p: CurvePoint) -> CurvePoint:
        self._require(p)
        return p if p is INFINITY else Point(p.x, -p.y)

    def add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        self._require(p)
        self._require(q)
        if p is INFINITY:
            return q
        if q is INFINITY:
            return p
        if p.x == q.x:
            if p.y != q.y or p.y == 0:
                return INFINITY
            slope = (3 * p.x * p.x + 2 * self.a2 * p.x + self.a4) / (2 * p.y)
        else:
            slope = (q.y - p.y) / (q.x - p.x)
        x3 = slope * slope - self.a2 - p.x - q.x
        return Point(x3, slope * (p.x - x3) - p.y)

    def double(self, p: CurvePoint) -> CurvePoint:
        return self.add(p, p)

    def mul(self, m: int, p: CurvePoint) -> CurvePoint:
        """m * p by binary double-and-add."""
        self._require(p)
        if m < 0:
            return self.neg(self.mul(-m, p))
        acc: CurvePoint = INFINITY
        addend = p
        while m:
            if m & 1:
                acc = self.add(acc, addend)
            m >>= 1
            if m:
                addend = self.add(addend, addend)
        return acc

    def to_json(self) -> dict:
        return {"a2": format_rat(self.a2), "a4": format_rat(self.a4), "a6": format_rat(self.a6)}

    @classmethod
    def from_json(cls, obj: dict) -> "WeierstrassCurve":
        return cls(as_rat(obj["a2"]), as_rat(obj["a4"]), as_rat(obj["a6"]))


def point_to_json(p: CurvePoint):
    if p is INFINITY:
        return "infinity"
    return {"x": format_rat(p.x), "y": format_rat(p.y)}


def point_from_json(obj) -> CurvePoint:
    if obj == "infinity":
        return INFINITY
    return Point(as_rat(obj["x"]), as_rat(obj["y"]))


def q_isomorphic(e1: WeierstrassCurve, e2: WeierstrassCurve) -> Fraction | None:
    """Positive u with c4(e2) = u^4 c4(e1) and c6(e2) = u^6 c6(e1), if one exists in Q."""
    i1, i2 = e1.invariants(), e2.invariants()
    c4, c6, d4, d6 = i1.c4, i1.c6, i2.c4, i2.c6
    if (c4 == 0) != (d4 == 0) or (c6 == 0) != (d6 == 0):
        return None
    if c4 and c6:
        u2 = (d6 * c4) / (c6 * d4)
    elif c4:
        u2 = sqrt_exact(d4 / c4)
    else:
        u2 = cbrt_exact(d6 / c6)
    if u2 is None or u2 <= 0:
        return None
    u = sqrt_exact(u2)
    if u is None:
        return None
    if u**4 * c4 != d4 or u**6 * c6 != d6:
        return None
    return u

