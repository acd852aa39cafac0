"""Registry of printed numeric claims and an exact checker for them.

Each claim carries its payload as verbatim decimal / "p/q" strings, the
expected outcome, and a short location label.  Claims whose expectation cannot
be fixed in advance (comparisons between our Weierstrass models and the
printed ones) are flagged ``informative``: their recorded outcome is a
baseline, and they are reported apart from the discrepancies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .arith import UniPoly, as_rat, format_rat
from .curves import Point, WeierstrassCurve, q_isomorphic
from .errors import DomainError
from .pipelines import (
    PipelineConfig,
    n4_method1_triple,
    pipeline_quartic,
    point_to_solution,
)
from .quartic import Conic, QuarticCurve, QuarticPoint, conic_parametrize, to_weierstrass
from .solution import RationalSolution, Solution, canonicalize, equivalent, residual

KINDS = ("solution", "curve-point", "quartic-point", "conic-triple", "model-equivalence", "identity-instance")
OUTCOMES = ("Pass", "Fail")


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str
    location: str
    payload: dict
    expected: str
    informative: bool = False

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "kind": self.kind,
            "location": self.location,
            "expected": self.expected,
            "payload": self.payload,
        }
        if self.informative:
            out["informative"] = True
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Claim":
        return cls(
            obj["id"],
            obj["kind"],
            obj["location"],
            obj["payload"],
            obj["expected"],
            bool(obj.get("informative", False)),
        )


@dataclass(frozen=True)
class Verdict:
    id: str
    location: str
    outcome: str
    residual: str | None = None
    detail: str = ""
    expected: str = "Pass"
    informative: bool = False

    @property
    def as_expected(self) -> bool:
        return self.outcome == self.expected

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "location": self.location,
            "outcome": self.outcome,
            "residual": self.residual,
            "expected": self.expected,
            "informative": self.informative,
            "detail": self.detail,
        }


def load_claims(text: str) -> list[Claim]:
    claims = [Claim.from_json(c) for c in json.loads(text)["claims"]]
    seen = set()
    for c in claims:
        if c.id in seen:
            raise DomainError(f"duplicate claim id {c.id!r}")
        seen.add(c.id)
    return claims


def builtin_claims() -> list[Claim]:
    text = resources.files("sixdiff").joinpath("data/claims.json").read_text(encoding="utf-8")
    return load_claims(text)


# ---------------------------------------------------------------- payload decoding


def _curve(obj) -> WeierstrassCurve:
    return WeierstrassCurve.from_json(obj)


def _qpoint(obj) -> QuarticPoint:
    return QuarticPoint(as_rat(obj["x"]), as_rat(obj["v"]))


def _config(payload: dict, seed: QuarticPoint | None = None) -> PipelineConfig:
    params = {k: int(v) for k, v in payload["params"].items()}
    conic_seed = payload.get("conic_seed")
    if conic_seed is not None:
        conic_seed = tuple(as_rat(c) for c in conic_seed)
    return PipelineConfig(payload["pipeline"], params, seed or QuarticPoint(0, 0), conic_seed=conic_seed)


def _printed_solution(payload: dict) -> Solution:
    n = int(payload["n"])
    named = dict(zip(payload["order"], (int(v) for v in payload["values"])))
    return Solution(n, named["X"], named["Y"], named["W"], named["Z"])


def _printed_tuple(payload: dict) -> tuple[int, int, int, int, int]:
    n = int(payload["n"])
    named = dict(zip(payload["order"], (int(v) for v in payload["values"])))
    return n, named["X"], named["Y"], named["W"], named["Z"]


# ---------------------------------------------------------------- checks
# each returns (passed, residual-or-None, detail)


def _check_solution(c: Claim, _claims):
    n, X, Y, W, Z = _printed_tuple(c.payload)
    r = residual(n, X, Y, W, Z)
    if r == 0:
        return True, None, f"both sides equal {X**6 - Y**6}"
    return False, format_rat(r), "X^6 - Y^6 - (W^n - Z^n)"


def _check_curve_point(c: Claim, _claims):
    E = _curve(c.payload["curve"])
    P = Point(as_rat(c.payload["point"]["x"]), as_rat(c.payload["point"]["y"]))
    gap = E.rhs(P.x) - P.y * P.y
    if gap != 0:
        return False, format_rat(gap), f"rhs {format_rat(E.rhs(P.x))} vs y^2 {format_rat(P.y * P.y)}"
    if "double" not in c.payload:
        return True, None, f"y^2 = {format_rat(P.y * P.y)}"
    D = Point(as_rat(c.payload["double"]["x"]), as_rat(c.payload["double"]["y"]))
    if not E.on_curve(D):
        return False, format_rat(E.rhs(D.x) - D.y * D.y), "the claimed double is not on the curve"
    got = E.double(P)
    if got == D:
        return True, None, "double(P) matches"
    return False, f"x: {format_rat(got.x - D.x)}, y: {format_rat(got.y - D.y)}", f"double(P) = {got!r}"


def _quartic_of(payload: dict) -> QuarticCurve:
    if "quartic" in payload:
        return QuarticCurve.from_json(payload["quartic"])
    return pipeline_quartic(_config(payload))


def _check_quartic_point(c: Claim, _claims):
    Q = _quartic_of(c.payload)
    p = _qpoint(c.payload["point"])
    gap = Q(p.x) - p.v * p.v
    if gap == 0:
        return True, None, f"v^2 = {format_rat(p.v * p.v)}"
    return False, format_rat(gap), "q(x) - v^2"


def _check_conic_triple(c: Claim, _claims):
    t, u, v = (as_rat(c.payload[k]) for k in ("t", "u", "v"))
    gaps = []
    for conic, w in zip(c.payload["conics"], (u, v)):
        A, B = as_rat(conic["A"]), as_rat(conic["B"])
        gaps.append(A * t * t + B - w * w)
    if not any(gaps):
        return True, None, "both conics hold"
    return False, ", ".join(format_rat(g) for g in gaps), "A t^2 + B - w^2 per conic"


def _check_model_equivalence(c: Claim, _claims):
    p = c.payload
    cfg = _config(p)
    Q = pipeline_quartic(cfg)
    derived = to_weierstrass(Q, seed=_qpoint(p["seed"])).curve
    printed = _curve(p["curve"])
    u = q_isomorphic(derived, printed)
    if u is not None:
        return True, None, f"derived {derived} is isomorphic with u = {format_rat(u)}"
    di, pi = derived.invariants(), printed.invariants()
    return (
        False,
        f"j: {format_rat(di.j)} vs {format_rat(pi.j)}",
        f"derived {derived} is not isomorphic to the printed model",
    )


def _identity_quartic_model(c: Claim, _claims):
    got = pipeline_quartic(_config(c.payload))
    want = QuarticCurve.from_json(c.payload["quartic"])
    if got == want:
        return True, None, f"v^2 = {got.q}"
    return False, str(got.q - want.q), f"derived v^2 = {got.q}"


def _identity_conic_parametrization(c: Claim, _claims):
    p = c.payload
    par = conic_parametrize(Conic(as_rat(p["A"]), as_rat(p["B"]), tuple(as_rat(s) for s in p["seed"])))
    num, den = UniPoly([as_rat(x) for x in p["t_num"]]), UniPoly([as_rat(x) for x in p["t_den"]])
    # t_num/den == num/den as rational functions
    diff = par.t_num * den - num * par.den
    if not diff.coeffs:
        return True, None, f"t(k) = ({par.t_num}) / ({par.den})"
    return False, str(diff), f"derived t(k) = ({par.t_num}) / ({par.den})"


def _identity_triple_from_point(c: Claim, _claims):
    p = c.payload
    a, b = int(p["a"]), int(p["b"])
    seed = tuple(as_rat(s) for s in p["conic_seed"])
    t, u, v = n4_method1_triple(a, b, seed, _qpoint(p["point"]))
    want = [as_rat(p[k]) for k in ("t", "u", "v")]
    gaps = [t - want[0], u * u - want[1] ** 2, v * v - want[2] ** 2]
    if any(gaps):
        return False, ", ".join(format_rat(g) for g in gaps), "t, u^2, v^2 differences"
    signs = "".join("+" if x == y else "-" for x, y in zip((u, v), want[1:]))
    return True, None, f"t exact; (u, v) signs relative to printed: {signs}"


def _identity_scaling_t(c: Claim, _claims):
    p = c.payload
    a, b = int(p["a"]), int(p["b"])
    t = as_rat(p["V"]) / (a**6 - b**6)
    gap = t - as_rat(p["t"])
    if gap == 0:
        return True, None, f"t = {format_rat(t)}"
    return False, format_rat(gap), f"V/(a^6 - b^6) = {format_rat(t)}"


def _raw_rational(cfg: PipelineConfig, point: QuarticPoint) -> RationalSolution:
    """The rational tuple a pipeline builds from a quartic point, before clearing."""
    p = cfg.params
    x, v = point.x, point.v
    if cfg.id == "n2-m3":
        u = p["u"]
        return RationalSolution(2, x + u, x - u, v * v + x, v * v - x)
    if cfg.id == "n3-m2":
        u, t = p["u"], v / 3
        return RationalSolution(3, x + u, x - u, t + x, t - x)
    if cfg.id == "n4-m1":
        a, b = p["a"], p["b"]
        t, uu, vv = n4_method1_triple(a, b, cfg.conic_seed, point)
        return RationalSolution(4, 2 * a * t, 2 * b * t, 2 * t * uu, 2 * t * vv)
    a, b, cc = p["a"], p["b"], p["c"]
    t = v / (a**6 - b**6)
    return RationalSolution(4, a * t, b * t, cc * t, x * t)


def _referenced(c: Claim, claims) -> Solution:
    ref = c.payload["solution"]
    for other in claims:
        if other.id == ref:
            return _printed_solution(other.payload)
    raise DomainError(f"claim {c.id} refers to unknown claim {ref!r}")


def _identity_pipeline_rescale(c: Claim, claims):
    cfg = _config(c.payload)
    lam = int(c.payload["lambda"])
    scaled = _raw_rational(cfg, _qpoint(c.payload["point"])).scaled(lam)
    want = canonicalize(_referenced(c, claims))
    vals = (scaled.X, scaled.Y, scaled.W, scaled.Z)
    if any(v.denominator != 1 for v in vals):
        return False, "non-integral", f"lambda = {lam} leaves denominators"
    got = canonicalize(Solution(scaled.n, *(v.numerator for v in vals)))
    if got == want:
        return True, None, f"lambda = {lam} reproduces the printed tuple"
    diffs = [g - w for g, w in zip(got.as_tuple(), want.as_tuple())]
    return False, ", ".join(str(d) for d in diffs), f"lambda = {lam} gives {got.as_tuple()}"


def _identity_pipeline_equivalent(c: Claim, claims):
    cfg = _config(c.payload)
    got = point_to_solution(cfg, _qpoint(c.payload["point"]))
    want = _referenced(c, claims)
    if equivalent(got, want):
        return True, None, "equal up to weighted scaling and signs"
    return False, "not equivalent", f"pipeline gives {got.as_tuple()}"


_IDENTITIES = {
    "quartic-model": _identity_quartic_model,
    "conic-parametrization": _identity_conic_parametrization,
    "conic-triple-from-point": _identity_triple_from_point,
    "scaling-t": _identity_scaling_t,
    "pipeline-rescale": _identity_pipeline_rescale,
    "pipeline-equivalent": _identity_pipeline_equivalent,
}


def _check_identity(c: Claim, claims):
    name = c.payload.get("identity")
    if name not in _IDENTITIES:
        raise DomainError(f"unknown identity {name!r}")
    return _IDENTITIES[name](c, claims)


_CHECKS = {
    "solution": _check_solution,
    "curve-point": _check_curve_point,
    "quartic-point": _check_quartic_point,
    "conic-triple": _check_conic_triple,
    "model-equivalence": _check_model_equivalence,
    "identity-instance": _check_identity,
}


def check_claim(c: Claim, claims: list[Claim] | None = None) -> Verdict:
    """Exact verdict for one claim; malformed claims fail with an explanation."""
    if claims is None:
        claims = builtin_claims()
    try:
        if c.kind not in _CHECKS:
            raise DomainError(f"unknown claim kind {c.kind!r}")
        ok, res, detail = _CHECKS[c.kind](c, claims)
    except (DomainError, KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        ok, res, detail = False, "malformed", f"{type(exc).__name__}: {exc}"
    return Verdict(c.id, c.location, "Pass" if ok else "Fail", res, detail, c.expected, c.informative)


def check_all(claims: list[Claim] | None = None) -> list[Verdict]:
    if claims is None:
        claims = builtin_claims()
    return sorted((check_claim(c, claims) for c in claims), key=lambda v: v.id)


def unexpected(verdicts: list[Verdict]) -> list[Verdict]:
    """Non-informative verdicts whose outcome differs from the expectation."""
    return [v for v in verdicts if not v.informative and not v.as_expected]


@dataclass
class Report:
    verdicts: list[Verdict]
    summary: dict = field(init=False)

    def __post_init__(self):
        self.verdicts = sorted(self.verdicts, key=lambda v: v.id)
        self.summary = {
            "total": len(self.verdicts),
            "pass": sum(v.outcome == "Pass" for v in self.verdicts),
            "fail": sum(v.outcome == "Fail" for v in self.verdicts),
            "unexpected": len(unexpected(self.verdicts)),
        }

    @property
    def discrepancies(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.outcome == "Fail" and not v.informative]

    @property
    def informative(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.informative]


def render_report(verdicts: list[Verdict], fmt: str = "text") -> str:
    rep = Report(list(verdicts))
    if fmt == "json":
        return json.dumps(
            {
                "summary": rep.summary,
                "verdicts": [v.to_json() for v in rep.verdicts],
                "discrepancies": [v.id for v in rep.discrepancies],
                "informative": [v.id for v in rep.informative],
            },
            indent=2,
        )
    if fmt != "text":
        raise DomainError(f"unknown report format {fmt!r}")
    s = rep.summary
    lines = [f"claims: {s['total']}  pass: {s['pass']}  fail: {s['fail']}  unexpected: {s['unexpected']}", ""]
    for v in rep.verdicts:
        tag = "" if v.as_expected else "  (UNEXPECTED)"
        lines.append(f"{v.outcome:4}  {v.id}{tag}")
    lines += ["", "discrepancies:"]
    if not rep.discrepancies:
        lines.append("  none")
    for v in rep.discrepancies:
        lines.append(f"  {v.id}: {v.location}")
        lines.append(f"    residual: {v.residual}  ({v.detail})")
    lines += ["", "informative (model comparisons, baseline outcomes):"]
    if not rep.informative:
        lines.append("  none")
    for v in rep.informative:
        lines.append(f"  {v.outcome:4} {v.id}: {v.detail}")
    return "\n".join(lines) + "\n"

