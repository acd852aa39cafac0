"""Elliptic-curve pipelines: quartic -> rational points -> integer solutions.

Each method substitutes a linear ansatz into X^6 - Y^6 = W^n - Z^n, which
collapses to a genus-one quartic (or a pair of conics).  Rational points on
that quartic are produced as multiples on the associated elliptic curve and
each one is turned back into a solution.

    n2-m3:  X = x+u, Y = x-u, W = v^2+x, Z = v^2-x     v^2 = 3u x^4 + 10u^3 x^2 + 3u^5
    n3-m2:  X = x+u, Y = x-u, W = y/3+x, Z = y/3-x     y^2 = 18u x^4 + (60u^3-3) x^2 + 18u^5
    n4-m1:  (X, Y, R, S) = (2at, 2bt, 2tu, 2tv)         u^2 = (a^3+b^3)t^2 + (a^3-b^3)
                                                         v^2 = (a^3+b^3)t^2 - (a^3-b^3)
    n4-m2:  (X, Y, R, S) = (at, bt, ct, U t)             V^2 = (a^6-b^6)(c^4 - U^4), V = (a^6-b^6) t
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .arith import Rational, as_rat, format_rat
from .errors import DomainError
from .quartic import (
    Base,
    Conic,
    ConicParametrization,
    QuarticCurve,
    QuarticInfinity,
    QuarticPoint,
    conic_parametrize,
    quartic_multiples,
    simultaneous_square_quartic,
)
from .solution import RationalSolution, Solution, canonicalize, clear_denominators

PIPELINE_IDS = ("n2-m3", "n3-m2", "n4-m1", "n4-m2")


def _on(Q: QuarticCurve, p: QuarticPoint, what: str):
    if not Q.on_quartic(p):
        raise DomainError(f"{p!r} is not on the {what} quartic {Q!r}")


# ---------------------------------------------------------------- n = 2


def n2_method3_quartic(u: int) -> QuarticCurve:
    if u == 0:
        raise DomainError("u must be nonzero")
    return QuarticCurve([3 * u**5, 0, 10 * u**3, 0, 3 * u])


def n2_method3_solution(u: int, p: QuarticPoint) -> Solution:
    _on(n2_method3_quartic(u), p, "n2-m3")
    if p.x == 0:
        raise DomainError("x = 0 gives no solution (the relation was divided by x)")
    x, t2 = p.x, p.v * p.v
    rs = RationalSolution(2, x + u, x - u, t2 + x, t2 - x)
    return canonicalize(clear_denominators(rs))


# ---------------------------------------------------------------- n = 3


def n3_method2_quartic(u: int) -> QuarticCurve:
    if u == 0:
        raise DomainError("u must be nonzero")
    return QuarticCurve([18 * u**5, 0, 60 * u**3 - 3, 0, 18 * u])


def n3_method2_solution(u: int, p: QuarticPoint) -> Solution:
    _on(n3_method2_quartic(u), p, "n3-m2")
    if p.x == 0:
        raise DomainError("x = 0 gives no solution (the relation was divided by x)")
    x, t = p.x, p.v / 3
    rs = RationalSolution(3, x + u, x - u, t + x, t - x)
    return canonicalize(clear_denominators(rs))


# ---------------------------------------------------------------- n = 4, conic pair


def n4_method1_conics(a: int, b: int, seed: tuple[Rational, Rational] | None = None) -> tuple[Conic, Conic]:
    """u^2 = (a^3+b^3)t^2 + (a^3-b^3) and v^2 = (a^3+b^3)t^2 - (a^3-b^3)."""
    if a == b or a == -b:
        raise DomainError("a = +-b makes the conics degenerate")
    s, d = a**3 + b**3, a**3 - b**3
    return Conic(s, d, seed), Conic(s, -d)


def n4_method1_quartic(a: int, b: int, seed: tuple[Rational, Rational]) -> tuple[QuarticCurve, ConicParametrization]:
    c1, c2 = n4_method1_conics(a, b, seed)
    Q, _ = simultaneous_square_quartic(c1, c2)
    return Q, conic_parametrize(c1)


def n4_method1_triple(a: int, b: int, seed, p: QuarticPoint) -> tuple[Fraction, Fraction, Fraction]:
    """(t, u, v) on both conics from a point (k, V) on the k-quartic."""
    Q, par = n4_method1_quartic(a, b, seed)
    _on(Q, p, "n4-m1")
    t, u = par(p.x)
    return t, u, p.v / par.den(p.x)


def n4_method1_solution(a: int, b: int, t: Rational, u: Rational, v: Rational) -> Solution:
    c1, c2 = n4_method1_conics(a, b)
    t, u, v = as_rat(t), as_rat(u), as_rat(v)
    if t == 0:
        raise DomainError("t must be nonzero")
    if not c1.contains(t, u) or not c2.contains(t, v):
        raise DomainError(
            f"(t, u, v) = ({format_rat(t)}, {format_rat(u)}, {format_rat(v)}) is not on both conics"
        )
    rs = RationalSolution(4, 2 * a * t, 2 * b * t, 2 * t * u, 2 * t * v)
    return canonicalize(clear_denominators(rs))


# ---------------------------------------------------------------- n = 4, scaling


def n4_method2_quartic(a: int, b: int, c: int) -> QuarticCurve:
    k = a**6 - b**6
    if k == 0:
        raise DomainError("a^6 = b^6 is degenerate")
    if c == 0:
        raise DomainError("c must be nonzero")
    return QuarticCurve([k * c**4, 0, 0, 0, -k])


def n4_method2_solution(a: int, b: int, c: int, p: QuarticPoint) -> Solution:
    _on(n4_method2_quartic(a, b, c), p, "n4-m2")
    if p.v == 0:
        raise DomainError("V = 0 gives t = 0")
    t = p.v / (a**6 - b**6)
    rs = RationalSolution(4, a * t, b * t, c * t, p.x * t)
    return canonicalize(clear_denominators(rs))


# ---------------------------------------------------------------- runs


@dataclass(frozen=True)
class PipelineConfig:
    id: str
    params: dict
    seed: QuarticPoint
    base: Base | None = None
    multiples: int = 1
    conic_seed: tuple | None = None  # n4-m1 only

    def __post_init__(self):
        if self.id not in PIPELINE_IDS:
            raise DomainError(f"unknown pipeline {self.id!r}; known: {', '.join(PIPELINE_IDS)}")
        if self.multiples < 1:
            raise DomainError("multiples must be >= 1")
        if self.id == "n4-m1" and self.conic_seed is None:
            raise DomainError("n4-m1 needs a rational point on the first conic")

    def to_json(self) -> dict:
        if self.base is None:
            base = None
        elif isinstance(self.base, QuarticInfinity):
            base = f"{'+' if self.base.sign > 0 else '-'}infinity"
        else:
            base = self.base.to_json()
        out = {
            "id": self.id,
            "params": {k: str(v) for k, v in self.params.items()},
            "seed": self.seed.to_json(),
            "base": base,
            "multiples": self.multiples,
        }
        if self.conic_seed is not None:
            out["conic_seed"] = [format_rat(c) for c in self.conic_seed]
        return out


# Seeds: n2-m3 and n3-m2 use the small points behind the printed "Case Q"
# solutions; the bases are the ones under which doubling the seed gives the
# printed "2Q" points.  n4-m1 and n4-m2 start from the printed doubled points.
DEFAULT_CONFIGS = {
    "n2-m3": PipelineConfig(
        "n2-m3",
        {"u": 19},
        QuarticPoint(-76, 48013),
        QuarticPoint(Fraction(19, 4), Fraction(-48013, 16)),
    ),
    "n3-m2": PipelineConfig("n3-m2", {"u": 2}, QuarticPoint(4, 132), QuarticPoint(0, 24)),
    "n4-m1": PipelineConfig(
        "n4-m1",
        {"a": 2, "b": 1},
        QuarticPoint(Fraction(508773, 142471), Fraction(-362848187502, 20297985841)),
        conic_seed=(1, 4),
    ),
    "n4-m2": PipelineConfig(
        "n4-m2",
        {"a": 2, "b": 1, "c": 4},
        QuarticPoint(Fraction(452, 463), Fraction(27175680, 214369)),
    ),
}


def default_config(pipeline_id: str, multiples: int = 1) -> PipelineConfig:
    try:
        return replace(DEFAULT_CONFIGS[pipeline_id], multiples=multiples)
    except KeyError:
        raise DomainError(f"unknown pipeline {pipeline_id!r}; known: {', '.join(PIPELINE_IDS)}") from None


def pipeline_quartic(cfg: PipelineConfig) -> QuarticCurve:
    p = cfg.params
    if cfg.id == "n2-m3":
        return n2_method3_quartic(p["u"])
    if cfg.id == "n3-m2":
        return n3_method2_quartic(p["u"])
    if cfg.id == "n4-m1":
        return n4_method1_quartic(p["a"], p["b"], cfg.conic_seed)[0]
    return n4_method2_quartic(p["a"], p["b"], p["c"])


def point_to_solution(cfg: PipelineConfig, point: QuarticPoint) -> Solution:
    p = cfg.params
    if cfg.id == "n2-m3":
        return n2_method3_solution(p["u"], point)
    if cfg.id == "n3-m2":
        return n3_method2_solution(p["u"], point)
    if cfg.id == "n4-m1":
        t, u, v = n4_method1_triple(p["a"], p["b"], cfg.conic_seed, point)
        return n4_method1_solution(p["a"], p["b"], t, u, v)
    return n4_method2_solution(p["a"], p["b"], p["c"], point)


@dataclass
class PipelineRun:
    config: PipelineConfig
    emitted: list[tuple[int, QuarticPoint, Solution]] = field(default_factory=list)
    skipped: list[tuple[int, str]] = field(default_factory=list)

    @property
    def solutions(self) -> list[Solution]:
        return [s for _, _, s in self.emitted]

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "emitted": [{"m": m, "point": p.to_json(), "solution": s.to_json()} for m, p, s in self.emitted],
            "skipped": [{"m": m, "reason": r} for m, r in self.skipped],
        }


def run_pipeline(cfg: PipelineConfig) -> PipelineRun:
    """Solutions from the multiples m = 1..M of the seed, in order of m."""
    Q = pipeline_quartic(cfg)
    mult = quartic_multiples(Q, cfg.seed, cfg.multiples, cfg.base)
    run = PipelineRun(cfg, skipped=list(mult.skipped))
    for m, point in mult.points:
        try:
            run.emitted.append((m, point, point_to_solution(cfg, point)))
        except DomainError as exc:
            run.skipped.append((m, str(exc)))
    run.skipped.sort()
    if not run.emitted:
        raise DomainError(f"pipeline {cfg.id} emitted no solutions: {run.skipped}")
    return run
