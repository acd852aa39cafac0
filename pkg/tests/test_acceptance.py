"""The eight acceptance criteria, each checked exactly (no tolerances).

Every test records one PASS/FAIL line; the lines are printed in the pytest
terminal summary, or directly when this file is run as a script.
"""

import io
import itertools
import time
from fractions import Fraction

from naive import naive_search
from sixdiff.claims import Report, builtin_claims, check_all, check_claim, unexpected
from sixdiff.cli import main
from sixdiff.curves import INFINITY, Point, WeierstrassCurve
from sixdiff.families import enumerate_family, n2_factor_family, n2_method2, n3_method1
from sixdiff.pipelines import default_config, n4_method1_quartic, run_pipeline
from sixdiff.quartic import Conic, QuarticCurve, QuarticPoint, conic_parametrize, to_weierstrass
from sixdiff.search import SearchSpec, brute_search
from sixdiff.solution import Solution, equivalent, normal_form, verify

F = Fraction
RESULTS: dict[int, tuple[bool, str]] = {}
NAMES = {
    1: "printed solutions verify",
    2: "big-number path",
    3: "family identities",
    4: "group law",
    5: "quartic models",
    6: "discrepancy detection",
    7: "search against oracles",
    8: "infinitude evidence",
}


def record(n, ok, note=""):
    RESULTS[n] = (bool(ok), note)
    assert ok, f"criterion {n} ({NAMES[n]}) failed: {note}"


def summary_lines():
    lines = []
    for n in sorted(NAMES):
        if n in RESULTS:
            ok, note = RESULTS[n]
            lines.append(f"criterion {n} ({NAMES[n]}): {'PASS' if ok else 'FAIL'}{' - ' + note if note else ''}")
        else:
            lines.append(f"criterion {n} ({NAMES[n]}): NOT RUN")
    return lines


def test_criterion_1_printed_solutions():
    ok = (
        verify(3, 6, 2, 48, 40)
        and verify(3, 210, 1110, 1297800, 1594800)
        and verify(2, 57, 95, 2305248093, 2305248245)
    )
    record(1, ok)


N2_2Q = QuarticPoint(F(-14407111, 765404), F(3653190399329653, 585843283216))
N2_CASE_2Q = (51880996630, 11079141384474, 977317944922183691537359421841783861640210, 977318891095178497546429988862159754468626)
N4M2_FINAL = (184940423680, 92470211840, 79290987367715840, 19351796053027840)


def test_criterion_2_big_numbers():
    claims = {c.id: c for c in builtin_claims()}
    ids = ("n2-case2Q", "n4-m1-final", "n4-m2-final")
    first = [check_claim(claims[i]) for i in ids]
    second = [check_claim(claims[i]) for i in ids]
    deterministic = [v.to_json() for v in first] == [v.to_json() for v in second]
    verdicts_pass = all(v.outcome == "Pass" for v in first)

    # scaling pipeline: its registry seed is the doubled point; t = V / 63
    run = run_pipeline(default_config("n4-m2", 1))
    (_, p, sol), = run.emitted
    t = p.v / 63
    lam = 214369
    raw = (2 * t, t, 4 * t, p.x * t)
    scaled = (raw[0] * lam**2, raw[1] * lam**2, raw[2] * lam**3, raw[3] * lam**3)
    n4_ok = scaled == N4M2_FINAL and equivalent(sol, Solution(4, *N4M2_FINAL))

    # n = 2 elliptic pipeline: the second multiple of the registry seed is the printed 2Q point
    run = run_pipeline(default_config("n2-m3", 2))
    m, p, sol = run.emitted[1]
    lam = 382702 * 765404
    x, v2 = p.x, p.v * p.v
    raw = (x + 19, x - 19, v2 + x, v2 - x)
    scaled = tuple(abs(c) for c in (raw[0] * lam, raw[1] * lam, raw[2] * lam**3, raw[3] * lam**3))
    n2_ok = (
        m == 2
        and p.x == N2_2Q.x
        and abs(p.v) == N2_2Q.v
        and scaled == N2_CASE_2Q
        and equivalent(sol, Solution(2, *N2_CASE_2Q))
    )
    record(2, deterministic and verdicts_pass and n4_ok and n2_ok,
           f"verdicts {'/'.join(v.outcome for v in first)}, lambda 214369 and 382702*765404")


def test_criterion_3_family_identities():
    violations = 0
    for mask in range(16):
        for a, b, t in itertools.product(range(-5, 6), range(-5, 6), range(1, 6)):
            violations += not verify(2, *n2_factor_family(a, b, t, mask).as_tuple())
    for a, b, p in itertools.product(range(-5, 6), range(-5, 6), range(-5, 6)):
        if p not in (1, -1):
            violations += not verify(2, *n2_method2(a, b, p).as_tuple())
    for a, b in itertools.product(range(-5, 6), repeat=2):
        if (a, b) != (0, 0):
            violations += not verify(3, *n3_method1(a, b).as_tuple())
    record(3, violations == 0, f"{violations} violations")


def test_criterion_4_group_law():
    ok = True
    for E, P in ((WeierstrassCurve(0, 196, 0), Point(2, 20)), (WeierstrassCurve(0, -49, 0), Point(F(112, 9), F(-980, 27)))):
        pts = [E.mul(m, P) for m in range(1, 6)]
        ok &= all(E.mul(m, P) is not INFINITY for m in range(1, 9))
        for A, B in itertools.product(pts, repeat=2):
            ok &= E.on_curve(E.add(A, B))
            ok &= E.add(A, B) == E.add(B, A)
            for C in pts:
                ok &= E.add(E.add(A, B), C) == E.add(A, E.add(B, C))
    E = WeierstrassCurve(0, 196, 0)
    ok &= E.double(Point(2, 20)) == Point(F(576, 25), F(-16176, 125))
    record(4, ok)


def test_criterion_5_quartic_models():
    Q23 = QuarticCurve([7428297, 0, 68590, 0, 57])
    Q32 = QuarticCurve([576, 0, 477, 0, 36])
    Q41 = QuarticCurve([162, -1296, 864, -144, 2])
    Q42 = QuarticCurve([16128, 0, 0, 0, -63])
    points = {
        Q23: [N2_2Q, QuarticPoint(76, 48013)],
        Q32: [QuarticPoint(F(-44, 15), F(6428, 75)), QuarticPoint(4, 132)],
        Q41: [QuarticPoint(F(508773, 142471), F(-362848187502, 20297985841))],
        Q42: [QuarticPoint(F(452, 463), F(27175680, 214369))],
    }
    ok = all(Q.on_quartic(p) for Q, pts in points.items() for p in pts)
    roundtrips = 0
    for Q, pts in points.items():
        for seed in pts:
            qmap = to_weierstrass(Q, seed)
            for p in pts:
                P = qmap.forward(p)
                ok &= qmap.curve.on_curve(P) and qmap.backward(P) == p
                roundtrips += 1
    par = conic_parametrize(Conic(9, 7, (1, 4)))
    k = F(5, 3)
    ok &= par(k)[0] == (k * k - 8 * k + 9) / (k * k - 9)
    ok &= [par.t_num.coeff(i) for i in range(3)] == [9, -8, 1]
    ok &= [par.den.coeff(i) for i in range(3)] == [-9, 0, 1]
    Q, _ = n4_method1_quartic(2, 1, (1, 4))
    ok &= [Q.q.coeff(i) for i in range(5)] == [162, -1296, 864, -144, 2]
    record(5, ok, f"{roundtrips} roundtrips")


def test_criterion_6_discrepancies():
    verdicts = check_all()
    rep = Report(verdicts)
    flagged = {v.id for v in rep.discrepancies}
    by_id = {v.id: v for v in verdicts}
    expected_pass_ok = all(v.outcome == "Pass" for v in verdicts if v.expected == "Pass" and not v.informative)
    out, err = io.StringIO(), io.StringIO()
    code = main(["claims"], out, err)
    ok = (
        flagged == {"s32-gen-on-curve", "s32-2P-on-curve", "s32-2P-consistency"}
        and by_id["s32-gen-on-curve"].residual == str(2684 - 1936)
        and expected_pass_ok
        and not unexpected(verdicts)
        and code == 0
    )
    record(6, ok, f"flagged {sorted(flagged)}, exit {code}")


def test_criterion_7_search_oracles():
    ok = Solution(3, 6, 2, 48, 40) in brute_search(SearchSpec(3, 10, 60))
    ok &= Solution(2, 4, 2, 64, 8) in brute_search(SearchSpec(2, 5, 100))
    fast = [s.as_tuple() for s in brute_search(SearchSpec(2, 8, 300))]
    ok &= fast == naive_search(2, 8, 300)
    record(7, ok, f"{len(fast)} tuples in the n=2 box")


def test_criterion_8_infinitude_evidence():
    sols = run_pipeline(default_config("n3-m2", 3)).solutions
    ok = len(sols) == 3 and len({normal_form(s) for s in sols}) == 3
    ok &= all(verify(3, *s.as_tuple()) for s in sols)
    for fid in ["n2-case1", "n2-case2", "n2-case3", "n2-case4"]:
        raw = [s.as_tuple() for s in enumerate_family(fid, {"a": 2, "b": 1, "t": (1, 50)})]
        ok &= len(raw) == 50 and len(set(raw)) == 50
    record(8, ok)


if __name__ == "__main__":
    start = time.perf_counter()
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    for line in summary_lines():
        print(line)
    print(f"elapsed: {time.perf_counter() - start:.1f} s")
