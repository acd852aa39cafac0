"""Genus-one quartics v^2 = q(x), conics, and maps to Weierstrass form.

A quartic with a known rational point is birational to an elliptic curve.
The construction used here moves a chosen *base* point to (0, s) with
s^2 = q(0) and applies the classical degree-2 map of Mordell, which sends
the base point to the identity:

    X = (2s(v + s) + d x) / x^2
    Y = (4s^2(v + s) + 2s(d x + c x^2) - d^2 x^2 / (2s)) / x^3

for  v^2 = a x^4 + b x^3 + c x^2 + d x + s^2,  giving the long-form curve
a1 = d/s, a2 = c - d^2/(4s^2), a3 = 2sb, a4 = -4s^2 a, a6 = a2 a4, whose
square is then completed to reach the a1 = a3 = 0 model.

The base can be an affine point with v != 0 or, when the leading coefficient
is a square, one of the two points at infinity (handled by x -> 1/x).
Because the base is the group identity, the group structure (and therefore
"2Q") depends on which base is chosen.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .arith import Rational, UniPoly, as_rat, format_rat, is_squarefree, sqrt_exact
from .curves import INFINITY, CurvePoint, Point, WeierstrassCurve
from .errors import DomainError, ExceptionalPointError, NonSquarefreeError


@dataclass(frozen=True)
class QuarticPoint:
    x: Fraction
    v: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rat(self.x))
        object.__setattr__(self, "v", as_rat(self.v))

    def __repr__(self):
        return f"QuarticPoint({format_rat(self.x)}, {format_rat(self.v)})"

    def to_json(self) -> dict:
        return {"x": format_rat(self.x), "v": format_rat(self.v)}


@dataclass(frozen=True)
class QuarticInfinity:
    """The point at infinity where v / x^2 -> sign * sqrt(leading coefficient)."""

    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")


Base = Union[QuarticPoint, QuarticInfinity]


class QuarticCurve:
    """v^2 = q(x) with deg q in {3, 4} and q squarefree."""

    def __init__(self, q: UniPoly | Sequence[Rational]):
        if not isinstance(q, UniPoly):
            q = UniPoly(q)
        if q.degree not in (3, 4):
            raise DomainError(f"quartic model needs degree 3 or 4, got {q.degree}")
        if not is_squarefree(q):
            raise NonSquarefreeError(f"{q} has a repeated root")
        self.q = q

    def __eq__(self, other):
        return isinstance(other, QuarticCurve) and self.q == other.q

    def __hash__(self):
        return hash(self.q)

    def __repr__(self):
        return f"QuarticCurve(v^2 = {self.q})"

    def __call__(self, x: Rational) -> Fraction:
        return self.q(x)

    def on_quartic(self, p: QuarticPoint) -> bool:
        return p.v * p.v == self.q(p.x)

    def point(self, x: Rational, v: Rational) -> QuarticPoint:
        p = QuarticPoint(x, v)
        if not self.on_quartic(p):
            raise DomainError(f"{p!r} is not on {self!r}")
        return p

    def to_json(self) -> list[str]:
        return [format_rat(self.q.coeff(i)) for i in range(5)]

    @classmethod
    def from_json(cls, coeffs: Sequence[str]) -> "QuarticCurve":
        return cls(UniPoly([as_rat(c) for c in coeffs]))


def find_points(Q: QuarticCurve, bound: int = 100, max_den: int = 1) -> list[QuarticPoint]:
    """Rational points with |numerator| <= bound and denominator <= max_den (v >= 0 only)."""
    found = set()
    for den in range(1, max_den + 1):
        for num in range(-bound, bound + 1):
            x = Fraction(num, den)
            if x.denominator != den:
                continue
            v = sqrt_exact(Q(x)) if Q(x) >= 0 else None
            if v is not None:
                found.add(QuarticPoint(x, v))
    return sorted(found, key=lambda p: (p.x, p.v))


# ---------------------------------------------------------------------------
# conics


@dataclass(frozen=True)
class Conic:
    """u^2 = A t^2 + B, optionally with a known rational point (t0, u0)."""

    A: Fraction
    B: Fraction
    seed: tuple[Fraction, Fraction] | None = None

    def __post_init__(self):
        object.__setattr__(self, "A", as_rat(self.A))
        object.__setattr__(self, "B", as_rat(self.B))
        if self.A == 0:
            raise DomainError("conic needs A != 0")
        if self.B == 0:
            raise DomainError("conic with B = 0 is degenerate (reducible)")
        if self.seed is not None:
            t0, u0 = as_rat(self.seed[0]), as_rat(self.seed[1])
            object.__setattr__(self, "seed", (t0, u0))
            if not self.contains(t0, u0):
                raise DomainError(f"seed {self.seed} is not on u^2 = {self.A} t^2 + {self.B}")

    def contains(self, t: Rational, u: Rational) -> bool:
        t, u = as_rat(t), as_rat(u)
        return u * u == self.A * t * t + self.B


@dataclass(frozen=True)
class ConicParametrization:
    """t(k) = t_num(k) / den(k), u(k) = u_num(k) / den(k) for the chord of slope k through the seed."""

    conic: Conic
    t_num: UniPoly
    u_num: UniPoly
    den: UniPoly

    def __call__(self, k: Rational) -> tuple[Fraction, Fraction]:
        k = as_rat(k)
        d = self.den(k)
        if d == 0:
            raise DomainError(f"k = {format_rat(k)} is a pole of the parametrization (k^2 = A)")
        return self.t_num(k) / d, self.u_num(k) / d

    def parameter_of(self, t: Rational, u: Rational) -> Fraction:
        """Inverse map: the slope k whose chord meets the conic again at (t, u)."""
        t, u = as_rat(t), as_rat(u)
        if not self.conic.contains(t, u):
            raise DomainError("point is not on the conic")
        t0, u0 = self.conic.seed
        if t != t0:
            return (u - u0) / (t - t0)
        if u == u0 and u0 != 0:
            return self.conic.A * t0 / u0  # tangent at the seed
        raise DomainError("the point opposite the seed corresponds to k = infinity")


def conic_parametrize(c: Conic) -> ConicParametrization:
    if c.seed is None:
        raise DomainError("parametrization needs a rational seed point")
    t0, u0 = c.seed
    A = c.A
    # u = u0 + k (t - t0) meets the conic again at t = (t0 k^2 - 2 u0 k + A t0) / (k^2 - A)
    den = UniPoly([-A, 0, 1])
    t_num = UniPoly([A * t0, -2 * u0, t0])
    u_num = den * u0 + UniPoly([0, 1]) * (t_num - den * t0)
    return ConicParametrization(c, t_num, u_num, den)


def simultaneous_square_quartic(c1: Conic, c2: Conic) -> tuple[QuarticCurve, UniPoly]:
    """Quartic V^2 = N(k) whose points give t with both conics square at t.

    t is swept along ``c1``'s parametrization; with V = v * den(k) the second
    conic becomes V^2 = A2 t_num^2 + B2 den^2.
    """
    par = conic_parametrize(c1)
    N = par.t_num * par.t_num * c2.A + par.den * par.den * c2.B
    return QuarticCurve(N), par.den


# ---------------------------------------------------------------------------
# maps to Weierstrass form


@dataclass
class QuarticMap:
    quartic: QuarticCurve
    curve: WeierstrassCurve
    base: Base | None
    seed: QuarticPoint | None
    # normalized quartic a x^4 + b x^3 + c x^2 + d x + s^2, base at (0, s)
    _norm: tuple = field(repr=False, default=())
    _long: tuple = field(repr=False, default=())

    def forward(self, p: QuarticPoint) -> CurvePoint:
        if not self.quartic.on_quartic(p):
            raise DomainError(f"{p!r} is not on {self.quartic!r}")
        if self.quartic.q.degree == 3:
            lead = self.quartic.q.lead
            return Point(lead * p.x, lead * p.v)
        a, b, c, d, s = self._norm
        a1, a2, a3 = self._long
        if isinstance(self.base, QuarticInfinity):
            if p.x == 0:
                # original x = 0 is the normalized point at infinity with v/x^2 -> p.v
                return self._short(2 * s * p.v, Fraction(0))
            x, v = 1 / p.x, p.v / (p.x * p.x)
        else:
            x, v = p.x - self.base.x, p.v
        if x == 0:
            if v == s:
                return INFINITY
            # v = -s: take the limit along the branch v = -s + e1 x + e2 x^2 + e3 x^3 + ...
            e1 = -d / (2 * s)
            e2 = (e1 * e1 - c) / (2 * s)
            e3 = (2 * e1 * e2 - b) / (2 * s)
            return self._short(-a2, 4 * s * s * e3)
        X = (2 * s * (v + s) + d * x) / (x * x)
        Y = (4 * s * s * (v + s) + 2 * s * (d * x + c * x * x) - d * d * x * x / (2 * s)) / x**3
        return self._short(X, Y)

    def _short(self, X: Fraction, Y_long: Fraction) -> Point:
        a1, a2, a3 = self._long
        return Point(X, Y_long + (a1 * X + a3) / 2)

    def backward(self, P: CurvePoint) -> QuarticPoint:
        if not self.curve.on_curve(P):
            raise DomainError(f"{P!r} is not on {self.curve}")
        if self.quartic.q.degree == 3:
            if P is INFINITY:
                raise ExceptionalPointError("the identity corresponds to the point at infinity of the cubic", None)
            lead = self.quartic.q.lead
            return QuarticPoint(P.x / lead, P.y / lead)
        if P is INFINITY:
            if isinstance(self.base, QuarticInfinity):
                raise ExceptionalPointError("the identity corresponds to the base point at infinity", None)
            return self.base
        a, b, c, d, s = self._norm
        a1, a2, a3 = self._long
        X = P.x
        Y = P.y - (a1 * X + a3) / 2
        if Y == 0 and X == -a2:
            x, v = Fraction(0), -s
        elif Y == 0:
            r = X / (2 * s)
            if r * r != a or a == 0:
                raise ExceptionalPointError(f"backward map undefined at X = {format_rat(X)}", X)
            # normalized point at infinity with v/x^2 -> r
            if isinstance(self.base, QuarticInfinity):
                return self._checked(QuarticPoint(0, r), P)
            raise ExceptionalPointError(
                f"X = {format_rat(X)} maps to a point at infinity of the quartic", X
            )
        else:
            x = (2 * s * (X + c) - d * d / (2 * s)) / Y
            v = -s + x * (x * X - d) / (2 * s)
        if isinstance(self.base, QuarticInfinity):
            if x == 0:
                raise ExceptionalPointError(
                    f"X = {format_rat(X)} maps to the opposite point at infinity of the quartic", X
                )
            return self._checked(QuarticPoint(1 / x, v / (x * x)), P)
        return self._checked(QuarticPoint(x + self.base.x, v), P)

    def _checked(self, p: QuarticPoint, P: CurvePoint) -> QuarticPoint:
        # the inverse formula is only valid off a finite set; confirm by mapping back
        if not self.quartic.on_quartic(p) or self.forward(p) != P:
            raise ExceptionalPointError(f"backward map undefined at X = {format_rat(P.x)}", P.x)
        return p

    def exceptional_points(self) -> list[CurvePoint]:
        """Points of the curve with no affine preimage on the quartic."""
        if self.quartic.q.degree == 3:
            return [INFINITY]
        a, b, c, d, s = self._norm
        a1, a2, a3 = self._long
        if isinstance(self.base, QuarticInfinity):
            e1 = -d / (2 * s)
            e2 = (e1 * e1 - c) / (2 * s)
            e3 = (2 * e1 * e2 - b) / (2 * s)
            return [INFINITY, self._short(-a2, 4 * s * s * e3)]
        r = sqrt_exact(a)
        if r is None:
            return []
        return [self._short(2 * s * r, Fraction(0)), self._short(-2 * s * r, Fraction(0))]


def to_weierstrass(Q: QuarticCurve, seed: QuarticPoint | None = None, base: Base | None = None) -> QuarticMap:
    """Birational map from ``Q`` to a Weierstrass model.

    ``base`` is the point sent to the identity.  By default it is the
    reflection (x0, -v0) of ``seed``, so that the seed itself lands on an
    affine point; when no usable seed is given and the leading coefficient
    is a square, the point at infinity with positive sign is used.
    """
    if seed is not None and not Q.on_quartic(seed):
        raise DomainError(f"seed {seed!r} is not on {Q!r}")
    q = Q.q
    if q.degree == 3:
        if base is not None:
            raise DomainError("cubic models always use the point at infinity as base")
        lead = q.lead
        E = WeierstrassCurve(q.coeff(2), lead * q.coeff(1), lead * lead * q.coeff(0))
        return QuarticMap(Q, E, None, seed)
    if base is None:
        if seed is not None and seed.v != 0:
            base = QuarticPoint(seed.x, -seed.v)
        elif sqrt_exact(q.lead) is not None:
            base = QuarticInfinity(1)
        else:
            raise DomainError(
                "need a seed with v != 0, or a square leading coefficient, to build the map"
            )
    if isinstance(base, QuarticInfinity):
        root = sqrt_exact(q.lead)
        if root is None:
            raise DomainError(f"leading coefficient {format_rat(q.lead)} is not a rational square")
        s = base.sign * root
        norm = q.reversed(4)
    else:
        if not Q.on_quartic(base):
            raise DomainError(f"base {base!r} is not on {Q!r}")
        if base.v == 0:
            raise DomainError("base point needs v != 0")
        s = base.v
        norm = q.shift(base.x)
    e, d, c, b, a = (norm.coeff(i) for i in range(5))
    assert e == s * s
    a1 = d / s
    a2 = c - d * d / (4 * s * s)
    a3 = 2 * s * b
    a4 = -4 * s * s * a
    a6 = a2 * a4
    E = WeierstrassCurve(a2 + a1 * a1 / 4, a4 + a1 * a3 / 2, a6 + a3 * a3 / 4)
    return QuarticMap(Q, E, base, seed, (a, b, c, d, s), (a1, a2, a3))


def transfer(qmap: QuarticMap, direction: str, point):
    if direction == "forward":
        return qmap.forward(point)
    if direction == "backward":
        return qmap.backward(point)
    raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")


@dataclass
class Multiples:
    points: list[tuple[int, QuarticPoint]]
    skipped: list[tuple[int, str]]
    qmap: QuarticMap


def quartic_multiples(Q: QuarticCurve, seed: QuarticPoint, M: int, base: Base | None = None) -> Multiples:
    """backward(m * forward(seed)) for m = 1..M; unrepresentable multiples are reported in ``skipped``."""
    if M < 1:
        raise DomainError("M must be >= 1")
    qmap = to_weierstrass(Q, seed, base)
    P = qmap.forward(seed)
    if P is INFINITY:
        raise DomainError("seed coincides with the base point")
    E = qmap.curve
    points, skipped = [], []
    R: CurvePoint = INFINITY
    for m in range(1, M + 1):
        R = E.add(R, P)
        try:
            points.append((m, qmap.backward(R)))
        except ExceptionalPointError as exc:
            skipped.append((m, str(exc)))
    return Multiples(points, skipped, qmap)
