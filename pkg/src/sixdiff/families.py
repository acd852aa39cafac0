"""Closed-form parametric families of solutions.

For n = 2 the left side a^6 - b^6 splits into the four factors

    F1 = a - b, F2 = a + b, F3 = a^2 + ab + b^2, F4 = a^2 - ab + b^2

and any subset S of them gives W + Z = (prod S) t, W - Z = (prod of the rest) / t.
A split is encoded as a 4-bit mask, bit i standing for F(i+1).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Mapping

from .errors import DomainError
from .solution import RationalSolution, Solution, normal_form, to_integer

FACTOR_NAMES = ("a-b", "a+b", "a^2+ab+b^2", "a^2-ab+b^2")

# Cases 1-4: the splits whose closed forms are written out in the literature
CASE_MASKS = {1: 0b1010, 2: 0b1100, 3: 0b1011, 4: 0b1111}


def factors(a: int, b: int) -> tuple[int, int, int, int]:
    return (a - b, a + b, a * a + a * b + b * b, a * a - a * b + b * b)


def split_mask(split) -> int:
    """Accept a mask int or an iterable of factor indices 1..4."""
    if isinstance(split, int):
        if not 0 <= split <= 15:
            raise DomainError(f"split mask must be in 0..15, got {split}")
        return split
    mask = 0
    for i in split:
        if i not in (1, 2, 3, 4):
            raise DomainError(f"factor index must be 1..4, got {i}")
        mask |= 1 << (i - 1)
    return mask


def n2_factor_family(a: int, b: int, t: int, split=CASE_MASKS[1]) -> Solution:
    if t == 0:
        raise DomainError("t must be nonzero")
    mask = split_mask(split)
    chosen, rest = 1, 1
    for i, f in enumerate(factors(a, b)):
        if mask >> i & 1:
            chosen *= f
        else:
            rest *= f
    s, d = Fraction(chosen * t), Fraction(rest, t)
    rs = RationalSolution(2, a, b, (s + d) / 2, (s - d) / 2)
    # scaling by 2t reproduces the printed polynomials, e.g. W = 4t^2(S t^2 + R)
    return to_integer(rs, 2 * t)


def n2_method2(a: int, b: int, p: int) -> Solution:
    """X = a(p^2-1), Y = b(p^2-1) with W, Z quadratic in p (from W = pt + a^3, Z = t + b^3)."""
    if p * p == 1:
        raise DomainError("p = +-1 makes the substitution degenerate")
    k = p * p - 1
    a3, b3 = a**3, b**3
    W = k * k * (a3 * p * p - 2 * p * b3 + a3)
    Z = k * k * (2 * a3 * p - b3 - b3 * p * p)
    return Solution(2, a * k, b * k, W, Z)


def n3_method1(a: int, b: int) -> Solution:
    if a == 0 and b == 0:
        raise DomainError("(a, b) = (0, 0) is excluded")
    c = (a * a + b * b) * (a**4 - a * a * b * b + b**4)
    return Solution(
        3,
        a * c,
        b * c,
        c * a * a * (a**6 - 2 * b**6),
        c * b * b * (b**6 - 2 * a**6),
    )


def _n2_split(mask):
    return lambda a, b, t: n2_factor_family(a, b, t, mask)


FAMILIES = {f"n2-case{k}": (("a", "b", "t"), _n2_split(m)) for k, m in CASE_MASKS.items()}
FAMILIES.update({f"n2-split-{m}": (("a", "b", "t"), _n2_split(m)) for m in range(16)})
FAMILIES["n2-m2"] = (("a", "b", "p"), n2_method2)
FAMILIES["n3-m1"] = (("a", "b"), n3_method1)


def family_params(family_id: str) -> tuple[str, ...]:
    try:
        return FAMILIES[family_id][0]
    except KeyError:
        raise DomainError(f"unknown family {family_id!r}; known: {', '.join(FAMILIES)}") from None


def generate(family_id: str, **params: int) -> Solution:
    names = family_params(family_id)
    missing = set(names) - set(params)
    if missing:
        raise DomainError(f"{family_id} needs parameters {', '.join(sorted(missing))}")
    extra = set(params) - set(names)
    if extra:
        raise DomainError(f"{family_id} does not take {', '.join(sorted(extra))}")
    return FAMILIES[family_id][1](*(params[k] for k in names))


def _as_range(spec) -> range:
    if isinstance(spec, range):
        return spec
    if isinstance(spec, int):
        return range(spec, spec + 1)
    lo, hi = spec
    return range(lo, hi + 1)


def enumerate_family(family_id: str, box: Mapping[str, object], reduce: bool = False) -> list[Solution]:
    """All solutions over a finite parameter box, in lexicographic parameter order.

    ``box`` maps each parameter to an int, an inclusive ``(lo, hi)`` pair or a
    ``range``.  Parameter points that violate a family precondition (t = 0,
    p = +-1, (a, b) = (0, 0)) are skipped.  With ``reduce`` the output is
    canonicalized, reduced to primitive form and deduplicated (first occurrence
    wins).
    """
    names = family_params(family_id)
    missing = set(names) - set(box)
    if missing:
        raise DomainError(f"box is missing {', '.join(sorted(missing))}")
    ranges = [_as_range(box[k]) for k in names]
    if any(len(r) == 0 for r in ranges):
        raise DomainError("empty parameter box")
    fn = FAMILIES[family_id][1]
    out: list[Solution] = []
    seen = set()
    for point in itertools.product(*ranges):
        try:
            s = fn(*point)
        except DomainError:
            continue
        if reduce:
            s = normal_form(s)
            if s in seen:
                continue
            seen.add(s)
        out.append(s)
    return out

