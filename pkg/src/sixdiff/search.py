"""Bounded exhaustive search for X^6 - Y^6 = W^n - Z^n.

Values m = X^6 - Y^6 over 0 <= Y <= X <= xy_bound are hashed to their (X, Y)
pairs.  Each distinct m is then matched against W^n - Z^n by walking the
divisors of m, which are available cheaply from the factorization

    X^6 - Y^6 = (X - Y)(X + Y)(X^2 + XY + Y^2)(X^2 - XY + Y^2).

For n = 2 a divisor pair d * e = m gives W = (d + e)/2, Z = (e - d)/2; for
n = 4 the same with W^2, Z^2; for n = 3, d = W - Z fixes Z through a quadratic.
Output is canonical (Y <= X; W, Z >= 0 for even n; W + Z >= 0 for n = 3) and
sorted.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import isqrt

from .arith import factorize, int_cbrt_floor, int_sqrt_exact
from .errors import DomainError
from .solution import Solution, check_n, reduce_weighted_primitive, verify

MAX_XY = 500
MAX_WZ = 10**6

# residues of W^n - Z^n modulo small M, kept where they rule something out
_RESIDUES = {
    n: [
        (M, frozenset((a**n - b**n) % M for a in range(M) for b in range(M)))
        for M in (16, 9, 5, 7, 13, 17, 37, 41)
    ]
    for n in (2, 3, 4)
}
_RESIDUES = {n: [(M, r) for M, r in rs if len(r) < M] for n, rs in _RESIDUES.items()}


def _possible(n: int, m: int) -> bool:
    return all(m % M in r for M, r in _RESIDUES[n])


@dataclass(frozen=True)
class SearchSpec:
    n: int
    xy_bound: int
    wz_bound: int
    include_trivial: bool = False
    primitive_only: bool = False

    def __post_init__(self):
        check_n(self.n)
        if self.xy_bound < 0 or self.wz_bound < 0:
            raise DomainError("search bounds must be >= 0")
        if self.xy_bound > MAX_XY or self.wz_bound > MAX_WZ:
            raise DomainError(f"search budget exceeded: xy_bound <= {MAX_XY}, wz_bound <= {MAX_WZ}")


def _divisors(fac: dict[int, int], hi: int) -> list[int]:
    """Divisors <= hi (pruned while generating, since extending only grows them)."""
    divs = [1]
    for p, e in fac.items():
        nxt = []
        for d in divs:
            for _ in range(e + 1):
                if d > hi:
                    break
                nxt.append(d)
                d *= p
        divs = nxt
    return divs


def _value_factorization(X: int, Y: int) -> dict[int, int]:
    fac: dict[int, int] = defaultdict(int)
    for part in (X - Y, X + Y, X * X + X * Y + Y * Y, X * X - X * Y + Y * Y):
        for p, e in factorize(part).items():
            fac[p] += e
    return fac


def _match(n: int, m: int, fac: dict[int, int], wz: int) -> list[tuple[int, int]]:
    """All canonical (W, Z) with W^n - Z^n = m > 0 and |W|, |Z| <= wz."""
    out = []
    if n == 4:
        return [wz_pair for wz_pair in _match_quartic(m, fac) if wz_pair[0] <= wz]
    if n == 3:
        # d = W - Z <= 2 wz and d^3 <= 4m; e = W^2 + WZ + Z^2 <= 3 wz^2
        d_max = min(2 * wz, int_cbrt_floor(4 * m))
        d_min = -(-m // (3 * wz * wz)) if wz else m + 1
    else:
        # d = W - Z <= e = W + Z <= 2 wz
        d_max = isqrt(m)
        d_min = -(-m // (2 * wz)) if wz else m + 1
    for d in _divisors(fac, d_max):
        if d < d_min:
            continue
        e = m // d
        if n == 3:
            # W = Z + d, 3Z^2 + 3dZ + d^2 - e = 0, canonical root has 2Z + d >= 0
            disc = 12 * e - 3 * d * d
            r = int_sqrt_exact(disc) if disc >= 0 else None
            if r is None or (r - 3 * d) % 6:
                continue
            Z = (r - 3 * d) // 6
            W = Z + d
        else:
            if d > e or (d + e) % 2:
                continue
            W, Z = (d + e) // 2, (e - d) // 2
        if abs(W) <= wz and abs(Z) <= wz:
            out.append((W, Z))
    return out


def _match_quartic(m: int, fac: dict[int, int]) -> list[tuple[int, int]]:
    """W^4 - Z^4 = m with W > Z >= 0.

    With g = W - Z and s = W + Z, W^4 - Z^4 = g s (s^2 + g^2) / 2 and s >= g,
    so g^4 <= 2m and s is the unique root of the increasing s^3 + g^2 s = 2m/g.
    """
    out = []
    for g in _divisors(fac, isqrt(isqrt(2 * m))):
        target = 2 * m // g
        lo, hi = g, int_cbrt_floor(target)
        while lo < hi:
            mid = (lo + hi) // 2
            if mid * (mid * mid + g * g) < target:
                lo = mid + 1
            else:
                hi = mid
        s = lo
        if s * (s * s + g * g) == target and (s - g) % 2 == 0:
            out.append(((s + g) // 2, (s - g) // 2))
    return out


def _scan(spec: SearchSpec, xs: range) -> list[tuple[int, int, int, int]]:
    values: dict[int, list[tuple[int, int]]] = defaultdict(list)
    facs: dict[int, dict[int, int]] = {}
    for X in xs:
        for Y in range(X):
            m = X**6 - Y**6
            values[m].append((X, Y))
            if m not in facs and _possible(spec.n, m):
                facs[m] = _value_factorization(X, Y)
    found = []
    for m, pairs in values.items():
        if m not in facs:
            continue
        for W, Z in _match(spec.n, m, facs[m], spec.wz_bound):
            found.extend((X, Y, W, Z) for X, Y in pairs)
    return found


def _trivial(spec: SearchSpec) -> list[tuple[int, int, int, int]]:
    return [(x, x, w, w) for x in range(spec.xy_bound + 1) for w in range(spec.wz_bound + 1)]


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("DIO_THREADS", "1")))
    except ValueError:
        return 1


def brute_search(spec: SearchSpec, workers: int | None = None) -> list[Solution]:
    """Every canonical solution inside the box, sorted by (X, Y, W, Z)."""
    workers = _workers() if workers is None else max(1, workers)
    xs = range(1, spec.xy_bound + 1)
    if workers == 1 or spec.xy_bound < 2 * workers:
        tuples = _scan(spec, xs)
    else:
        chunks = [xs[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            tuples = [t for part in pool.map(_scan, [spec] * workers, chunks) for t in part]
    if spec.include_trivial:
        tuples += _trivial(spec)
    sols = sorted(set(tuples))
    out = [Solution(spec.n, *t) for t in sols]
    if spec.primitive_only:
        out = [s for s in out if reduce_weighted_primitive(s) == s]
    return out


def in_range(spec: SearchSpec, s: Solution) -> bool:
    return 0 <= s.Y <= s.X <= spec.xy_bound and abs(s.W) <= spec.wz_bound and abs(s.Z) <= spec.wz_bound


def contains(spec: SearchSpec, s) -> bool:
    """Membership in ``brute_search(spec)`` decided without searching.

    ``s`` is a Solution or a raw (X, Y, W, Z) tuple; tuples that do not satisfy
    the equation are simply not members.  Candidates outside the box (after
    canonicalization) are rejected.
    """
    if isinstance(s, Solution):
        if s.n != spec.n:
            raise DomainError(f"solution has n = {s.n}, search has n = {spec.n}")
        X, Y, W, Z = s.as_tuple()
    else:
        X, Y, W, Z = (int(v) for v in s)
    cand = _canonical_tuple(spec.n, X, Y, W, Z)
    X, Y, W, Z = cand
    if not (0 <= Y <= X <= spec.xy_bound and abs(W) <= spec.wz_bound and abs(Z) <= spec.wz_bound):
        raise DomainError(f"{cand} is outside the search box")
    if not verify(spec.n, X, Y, W, Z):
        return False
    sol = Solution(spec.n, X, Y, W, Z)
    if sol.is_trivial() and not spec.include_trivial:
        return False
    return not spec.primitive_only or reduce_weighted_primitive(sol) == sol


def _canonical_tuple(n: int, X: int, Y: int, W: int, Z: int) -> tuple[int, int, int, int]:
    """The sign rules of ``canonicalize``, usable on tuples that may not verify."""
    X, Y = abs(X), abs(Y)
    if n in (2, 4):
        W, Z = abs(W), abs(Z)
    elif W + Z < 0:
        W, Z = -Z, -W
    return X, Y, W, Z
