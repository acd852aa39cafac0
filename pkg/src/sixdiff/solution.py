"""Solutions of X^6 - Y^6 = W^n - Z^n and their normal forms.

The equation is weighted homogeneous: replacing (X, Y, W, Z) by
(l^a X, l^a Y, l^b W, l^b Z) with 6a = n b maps solutions to solutions.
``WEIGHTS[n]`` is the minimal such pair (a, b).  Denominator clearing and
primitive reduction are both defined through this scaling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from sympy import isprime, perfect_power
from sympy.ntheory import pollard_pm1, pollard_rho

from .arith import Rational, as_rat, coprime_base, strip_small_primes, valuation
from .errors import DomainError

WEIGHTS = {2: (1, 3), 3: (1, 2), 4: (2, 3)}


def check_n(n: int) -> int:
    if n not in WEIGHTS:
        raise DomainError(f"exponent n must be 2, 3 or 4, got {n!r}")
    return n


def verify(n: int, X: Rational, Y: Rational, W: Rational, Z: Rational) -> bool:
    """True iff X^6 - Y^6 == W^n - Z^n exactly."""
    check_n(n)
    X, Y, W, Z = (as_rat(v) for v in (X, Y, W, Z))
    return X**6 - Y**6 == W**n - Z**n


def residual(n: int, X: Rational, Y: Rational, W: Rational, Z: Rational) -> Fraction:
    X, Y, W, Z = (as_rat(v) for v in (X, Y, W, Z))
    return (X**6 - Y**6) - (W**n - Z**n)


@dataclass(frozen=True)
class Solution:
    """Integer solution; construction fails if the equation does not hold."""

    n: int
    X: int
    Y: int
    W: int
    Z: int

    def __post_init__(self):
        check_n(self.n)
        for name in ("X", "Y", "W", "Z"):
            v = getattr(self, name)
            if isinstance(v, Fraction) and v.denominator == 1:
                object.__setattr__(self, name, v.numerator)
            elif not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{name} must be an integer, got {v!r}")
        if not verify(self.n, self.X, self.Y, self.W, self.Z):
            raise DomainError(f"not a solution: {self}")

    @property
    def weights(self) -> tuple[int, int]:
        return WEIGHTS[self.n]

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.X, self.Y, self.W, self.Z)

    def is_trivial(self) -> bool:
        return self.X**6 == self.Y**6 and self.W**self.n == self.Z**self.n

    def scaled(self, lam: int) -> "Solution":
        a, b = self.weights
        la, lb = lam**a, lam**b
        return Solution(self.n, la * self.X, la * self.Y, lb * self.W, lb * self.Z)

    def mirrored(self) -> "Solution":
        """(Y, X, Z, W): negating both sides of the equation."""
        return Solution(self.n, self.Y, self.X, self.Z, self.W)

    def to_json(self) -> dict:
        return {"n": self.n, "X": str(self.X), "Y": str(self.Y), "W": str(self.W), "Z": str(self.Z)}

    @classmethod
    def from_json(cls, obj: dict) -> "Solution":
        return cls(int(obj["n"]), int(obj["X"]), int(obj["Y"]), int(obj["W"]), int(obj["Z"]))


@dataclass(frozen=True)
class RationalSolution:
    n: int
    X: Fraction
    Y: Fraction
    W: Fraction
    Z: Fraction

    def __post_init__(self):
        check_n(self.n)
        for name in ("X", "Y", "W", "Z"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))
        if not verify(self.n, self.X, self.Y, self.W, self.Z):
            raise DomainError(f"not a rational solution: {self}")

    def scaled(self, lam: Rational) -> "RationalSolution":
        a, b = WEIGHTS[self.n]
        lam = as_rat(lam)
        return RationalSolution(self.n, lam**a * self.X, lam**a * self.Y, lam**b * self.W, lam**b * self.Z)


def _weighted_root(nums: tuple[int, int], weights: tuple[int, int], mode: str) -> int:
    """Per-prime extremal exponent rule, evaluated without full factorization.

    mode "ceil": least l with nums[i] | l^weights[i]   (exponent max ceil(e_i/w_i))
    mode "floor": largest l with l^weights[i] | nums[i] (exponent min floor(e_i/w_i))

    Primes below 1000 are handled directly.  The remaining cofactors are split
    into a coprime base; a base element B whose exponent ratios make the rule
    linear (the extremal e_i/w_i is an integer r) contributes exactly B^r no
    matter how B factors.  Only the leftover elements go through ``_split``.
    """
    pick = max if mode == "ceil" else min

    def exponent(es, f=1):
        parts = [
            (-(-e * f // w)) if mode == "ceil" else (e * f // w) for e, w in zip(es, weights)
        ]
        return pick(parts)

    split = [strip_small_primes(n) for n in nums]
    lam = 1
    for p in set(split[0][0]) | set(split[1][0]):
        lam *= p ** exponent([sp[0].get(p, 0) for sp in split])
    for b in coprime_base(sp[1] for sp in split):
        es = [valuation(sp[1], b) for sp in split]
        ratio = pick(Fraction(e, w) for e, w in zip(es, weights))
        if ratio.denominator == 1:
            lam *= b ** ratio.numerator
            continue
        for q, k in _split(b).items():
            lam *= q ** exponent([e * k for e in es])
    return lam


def _split(n: int) -> dict[int, int]:
    """Partial factorization of a cofactor free of primes below 1000.

    Prime powers are exact.  Otherwise a cheap, bounded Pollard p-1 / rho pass
    looks for a divisor; a composite that survives is returned as is and the
    caller treats it as squarefree.  That can only overestimate a minimal
    scaling if such a cofactor hides a repeated prime above the search bound.
    """
    root, k = _perfect_power(n)
    if isprime(root):
        return {root: k}
    d = pollard_pm1(root, B=2000) or pollard_rho(root, max_steps=2000)
    if not d or d in (1, root):
        return {root: k}
    out: dict[int, int] = {}
    for part in coprime_base([d, root // d]):
        for q, j in _split(part).items():
            out[q] = out.get(q, 0) + j * k * valuation(root, part)
    return out


def _perfect_power(n: int) -> tuple[int, int]:
    pp = perfect_power(n)
    if not pp:
        return n, 1
    root, k = int(pp[0]), int(pp[1])
    inner, j = _perfect_power(root)
    return inner, k * j


def clearing_factor(rs: RationalSolution) -> int:
    """Least positive integer l making the weighted rescale of ``rs`` integral."""
    den_xy = lcm(rs.X.denominator, rs.Y.denominator)
    den_wz = lcm(rs.W.denominator, rs.Z.denominator)
    return _weighted_root((den_xy, den_wz), WEIGHTS[rs.n], "ceil")


def to_integer(rs: RationalSolution, lam: Rational) -> Solution:
    """Rescale by ``lam`` and insist the result is integral."""
    scaled = rs.scaled(lam)
    vals = (scaled.X, scaled.Y, scaled.W, scaled.Z)
    if any(v.denominator != 1 for v in vals):
        raise DomainError(f"scale {lam} does not clear the denominators of {rs}")
    return Solution(rs.n, *(v.numerator for v in vals))


def clear_denominators(rs: RationalSolution) -> Solution:
    return to_integer(rs, clearing_factor(rs))


def primitive_factor(s: Solution) -> int:
    """Largest l with l^a | X, Y and l^b | W, Z (weights (a, b))."""
    g_xy, g_wz = gcd(s.X, s.Y), gcd(s.W, s.Z)
    if g_xy == 0 and g_wz == 0:
        return 1
    a, b = s.weights
    if g_xy == 0:
        return _weighted_root((g_wz, g_wz), (b, b), "floor")
    if g_wz == 0:
        return _weighted_root((g_xy, g_xy), (a, a), "floor")
    return _weighted_root((g_xy, g_wz), (a, b), "floor")


def reduce_weighted_primitive(s: Solution) -> Solution:
    lam = primitive_factor(s)
    if lam == 1:
        return s
    a, b = s.weights
    la, lb = lam**a, lam**b
    return Solution(s.n, s.X // la, s.Y // la, s.W // lb, s.Z // lb)


def canonicalize(s: Solution) -> Solution:
    """Absolute values for X, Y (and W, Z when n is even); for n = 3 make W + Z >= 0."""
    X, Y, W, Z = abs(s.X), abs(s.Y), s.W, s.Z
    if s.n in (2, 4):
        W, Z = abs(W), abs(Z)
    elif W + Z < 0:
        W, Z = -Z, -W
    return Solution(s.n, X, Y, W, Z)


def normal_form(s: Solution) -> Solution:
    """Canonical, weighted-primitive representative of the rescaling class."""
    return canonicalize(reduce_weighted_primitive(canonicalize(s)))


def equivalent(s1: Solution, s2: Solution, *, allow_mirror: bool = False) -> bool:
    """Equal up to weighted rescaling and sign conventions (optionally also mirroring)."""
    if s1.n != s2.n:
        return False
    a = normal_form(s1)
    if a == normal_form(s2):
        return True
    return allow_mirror and a == normal_form(s2.mirrored())
