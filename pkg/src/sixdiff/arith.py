"""Exact integer/rational helpers and a small univariate polynomial type.

Integers are plain ``int`` and rationals are ``fractions.Fraction``; both are
unbounded and ``Fraction`` is always held in lowest terms with a positive
denominator, so equality and hashing are structural.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, isqrt
from typing import Iterable, Sequence, Union

from sympy import factorint

Rational = Union[int, Fraction]

_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % q for q in range(2, isqrt(p) + 1))]


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction (never floats)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rat(value: Rational) -> str:
    """Wire form: ``"p/q"``, or a bare decimal integer when q = 1."""
    value = as_rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_square(v: int) -> bool:
    if v < 0:
        return False
    r = isqrt(v)
    return r * r == v


def int_sqrt_exact(v: int) -> int | None:
    """Nonnegative k with k*k == v, or None."""
    if v < 0:
        return None
    r = isqrt(v)
    return r if r * r == v else None


def int_cbrt_floor(m: int) -> int:
    """Largest k >= 0 with k**3 <= m (m >= 0)."""
    if m < 2:
        return max(m, 0)
    # Newton iteration on integers, then fix up
    k = 1 << ((m.bit_length() + 2) // 3)
    while True:
        nxt = (2 * k + m // (k * k)) // 3
        if nxt >= k:
            break
        k = nxt
    while k * k * k > m:
        k -= 1
    while (k + 1) ** 3 <= m:
        k += 1
    return k


def int_cbrt_exact(v: int) -> int | None:
    """Integer k with k**3 == v, or None.  Works for negative v."""
    sign = -1 if v < 0 else 1
    k = int_cbrt_floor(abs(v))
    return sign * k if k * k * k == abs(v) else None


def sqrt_exact(v: Rational) -> Fraction | None:
    v = as_rat(v)
    num = int_sqrt_exact(v.numerator)
    if num is None:
        return None
    den = int_sqrt_exact(v.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def cbrt_exact(v: Rational) -> Fraction | None:
    v = as_rat(v)
    num = int_cbrt_exact(v.numerator)
    den = int_cbrt_exact(v.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| (n != 0).

    Small primes are stripped by trial division; whatever survives goes to
    sympy, which in practice only sees 1 for the numbers this package builds.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        for p, e in factorint(n).items():
            out[int(p)] = out.get(int(p), 0) + int(e)
    return out


def strip_small_primes(n: int) -> tuple[dict[int, int], int]:
    """Split |n| into (factorization over primes < 1000, cofactor)."""
    n = abs(n)
    out: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out[p] = k
    return out, n


def valuation(n: int, b: int) -> int:
    """Largest k with b**k dividing n (n != 0, b > 1)."""
    k = 0
    while n % b == 0:
        n //= b
        k += 1
    return k


def coprime_base(nums: Iterable[int]) -> list[int]:
    """Pairwise coprime integers > 1 such that every input is a product of their powers."""
    base = sorted({abs(n) for n in nums if abs(n) > 1})
    changed = True
    while changed:
        changed = False
        for i in range(len(base)):
            for j in range(i + 1, len(base)):
                g = gcd(base[i], base[j])
                if g > 1:
                    x, y = base[i] // g, base[j] // g
                    rest = [b for k, b in enumerate(base) if k not in (i, j)]
                    base = sorted(set(rest + [b for b in (x, g, y) if b > 1]))
                    changed = True
                    break
            if changed:
                break
    return base


def _trim(coeffs: Iterable[Rational]) -> tuple[Fraction, ...]:
    cs = [as_rat(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class UniPoly:
    """Univariate polynomial over Q; ``coeffs[i]`` multiplies ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Rational] = ()):
        self.coeffs = _trim(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: Rational) -> Fraction:
        return poly_eval(self, x)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[format_rat(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = format_rat(abs(c))
            if i == 0:
                body = mag
            else:
                body = ("" if abs(c) == 1 else mag) + ("x" if i == 1 else f"x^{i}")
            terms.append(("-" if c < 0 else "+", body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            k = as_rat(other)
            return UniPoly([k * c for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        while len(rem) >= len(other.coeffs) and rem:
            shift = len(rem) - len(other.coeffs)
            k = rem[-1] / other.lead
            quot[shift] = k
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= k * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def shift(self, h: Rational) -> "UniPoly":
        """The polynomial x -> p(x + h)."""
        h = as_rat(h)
        out = [Fraction(0)] * len(self.coeffs)
        for i, c in enumerate(self.coeffs):
            for j in range(i + 1):
                out[j] += c * comb(i, j) * h ** (i - j)
        return UniPoly(out)

    def reversed(self, degree: int) -> "UniPoly":
        """x^degree * p(1/x)."""
        return UniPoly([self.coeff(degree - i) for i in range(degree + 1)])


def poly_eval(p: UniPoly, x: Rational) -> Fraction:
    x = as_rat(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd (zero polynomial if both are zero)."""
    while q.coeffs:
        p, q = q, p.divmod(q)[1]
    if not p.coeffs:
        return p
    return p * (1 / p.lead)


def is_squarefree(p: UniPoly) -> bool:
    return poly_gcd(p, p.derivative()).degree <= 0
