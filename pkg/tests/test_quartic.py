from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sixdiff.arith import UniPoly
from sixdiff.curves import INFINITY, WeierstrassCurve, q_isomorphic
from sixdiff.errors import DomainError, ExceptionalPointError, NonSquarefreeError
from sixdiff.quartic import (
    Conic,
    QuarticCurve,
    QuarticInfinity,
    QuarticPoint,
    conic_parametrize,
    find_points,
    quartic_multiples,
    simultaneous_square_quartic,
    to_weierstrass,
    transfer,
)

F = Fraction
Q23 = QuarticCurve([7428297, 0, 68590, 0, 57])
Q32 = QuarticCurve([576, 0, 477, 0, 36])
Q41 = QuarticCurve([162, -1296, 864, -144, 2])
Q42 = QuarticCurve([16128, 0, 0, 0, -63])

PRINTED_POINTS = [
    (Q23, QuarticPoint(F(-14407111, 765404), F(3653190399329653, 585843283216))),
    (Q32, QuarticPoint(F(-44, 15), F(6428, 75))),
    (Q41, QuarticPoint(F(508773, 142471), F(-362848187502, 20297985841))),
    (Q42, QuarticPoint(F(452, 463), F(27175680, 214369))),
]
DERIVED_POINTS = [(Q23, QuarticPoint(76, 48013)), (Q32, QuarticPoint(4, 132))]


def test_on_quartic_examples():
    for Q, p in PRINTED_POINTS + DERIVED_POINTS:
        assert Q.on_quartic(p)
        assert Q.on_quartic(QuarticPoint(p.x, -p.v))
    assert Q32(F(-44, 15)) == F(371872656, 50625)
    assert 214369 == 463**2
    assert not Q32.on_quartic(QuarticPoint(4, 133))


def test_quartic_rejects_bad_polynomials():
    with pytest.raises(NonSquarefreeError):
        QuarticCurve([1, 0, -2, 0, 1])
    with pytest.raises(DomainError):
        QuarticCurve([1, 0, 1])
    with pytest.raises(NonSquarefreeError):
        QuarticCurve([0, 0, 0, 0, 1])  # x^4 is singular, so no model is built for it


def test_roundtrip_at_every_point():
    maps = {}
    for Q, p in PRINTED_POINTS + DERIVED_POINTS:
        maps.setdefault(Q, []).append(p)
    for Q, pts in maps.items():
        for seed in pts:
            qmap = to_weierstrass(Q, seed)
            for p in pts:
                for q in (p, QuarticPoint(p.x, -p.v)):
                    P = transfer(qmap, "forward", q)
                    assert qmap.curve.on_curve(P)
                    if P is INFINITY:
                        continue
                    assert transfer(qmap, "backward", P) == q


def test_transfer_direction_checked():
    qmap = to_weierstrass(Q32, QuarticPoint(4, 132))
    with pytest.raises(ValueError):
        transfer(qmap, "sideways", QuarticPoint(4, 132))


def test_seed_maps_affine_and_base_to_identity():
    seed = QuarticPoint(76, 48013)
    qmap = to_weierstrass(Q23, seed)
    assert qmap.forward(seed) is not INFINITY
    assert qmap.forward(QuarticPoint(76, -48013)) is INFINITY
    assert qmap.backward(INFINITY) == QuarticPoint(76, -48013)


def test_infinity_branch():
    qmap = to_weierstrass(Q32)
    assert isinstance(qmap.base, QuarticInfinity)
    assert q_isomorphic(qmap.curve, qmap.curve) == 1
    for p in (QuarticPoint(4, 132), QuarticPoint(-4, 132), QuarticPoint(0, 24), QuarticPoint(0, -24)):
        P = qmap.forward(p)
        assert qmap.curve.on_curve(P)
        assert qmap.backward(P) == p
    with pytest.raises(ExceptionalPointError):
        qmap.backward(INFINITY)
    with pytest.raises(DomainError):
        to_weierstrass(Q42)  # no seed and -63 is not a square


def test_exceptional_points_are_rejected():
    qmap = to_weierstrass(Q32, QuarticPoint(4, 132))
    for P in qmap.exceptional_points():
        if P is INFINITY:
            continue
        assert qmap.curve.on_curve(P)
        with pytest.raises(ExceptionalPointError):
            qmap.backward(P)


def test_conic_parametrization_example():
    c = Conic(9, 7, (1, 4))
    par = conic_parametrize(c)
    assert par.t_num == UniPoly([9, -8, 1])
    assert par.den == UniPoly([-9, 0, 1])
    assert par(0) == (-1, 4)
    for k in range(-6, 7):
        if k * k == 9:
            with pytest.raises(DomainError):
                par(k)
            continue
        t, u = par(k)
        assert t == F(k * k - 8 * k + 9, k * k - 9)
        assert c.contains(t, u)
        if (t, u) != (1, -4):
            assert par.parameter_of(t, u) == k
    with pytest.raises(DomainError):
        Conic(1, 0, (1, 1))
    with pytest.raises(DomainError):
        conic_parametrize(Conic(9, 7))


@given(st.fractions(max_denominator=50).filter(lambda k: k * k != 9))
def test_conic_points_on_conic(k):
    par = conic_parametrize(Conic(9, 7, (1, 4)))
    assert Conic(9, 7).contains(*par(k))


def test_simultaneous_quartic_example():
    Q, den = simultaneous_square_quartic(Conic(9, 7, (1, 4)), Conic(9, -7))
    assert Q == Q41
    assert str(Q.q) == "2x^4 - 144x^3 + 864x^2 - 1296x + 162"
    assert den == UniPoly([-9, 0, 1])
    with pytest.raises(NonSquarefreeError):
        simultaneous_square_quartic(Conic(9, 7, (1, 4)), Conic(9, 7))


def test_mirror_seed_gives_isomorphic_model():
    Qm, _ = simultaneous_square_quartic(Conic(9, 7, (-1, 4)), Conic(9, -7))
    assert Qm != Q41
    # the mirror seed is k -> -k on the printed quartic
    assert Qm.q == UniPoly([Q41.q.coeff(i) * (-1) ** i for i in range(5)])
    E1 = to_weierstrass(Q41, PRINTED_POINTS[2][1]).curve
    p = PRINTED_POINTS[2][1]
    E2 = to_weierstrass(Qm, QuarticPoint(-p.x, p.v)).curve
    assert q_isomorphic(E1, E2) is not None


def test_model_consistency_with_printed_curves():
    for Q, p, E in (
        (Q41, PRINTED_POINTS[2][1], WeierstrassCurve(0, -49, 0)),
        (Q42, PRINTED_POINTS[3][1], WeierstrassCurve(0, 196, 0)),
        (Q23, QuarticPoint(-76, 48013), WeierstrassCurve(1, -1564, -18304)),
    ):
        derived = to_weierstrass(Q, p).curve
        assert q_isomorphic(derived, E) is not None


def test_quartic_multiples_examples():
    seed = QuarticPoint(4, 132)
    assert [p for _, p in quartic_multiples(Q32, seed, 1).points] == [seed]
    pts = quartic_multiples(Q32, seed, 2).points
    second = pts[1][1]
    assert Q32.on_quartic(second) and abs(second.x) != 4
    seed42 = PRINTED_POINTS[3][1]
    mult = quartic_multiples(Q42, seed42, 2)
    assert len(mult.points) == 2
    assert all(Q42.on_quartic(p) for _, p in mult.points)
    with pytest.raises(DomainError):
        quartic_multiples(Q32, seed, 0)


def test_printed_doubling_under_pipeline_base():
    # with base (0, 24) the double of (4, 132) is the printed point
    mult = quartic_multiples(Q32, QuarticPoint(4, 132), 2, QuarticPoint(0, 24))
    assert mult.points[1][1] in (PRINTED_POINTS[1][1], QuarticPoint(F(-44, 15), F(-6428, 75)))


def test_find_points():
    pts = find_points(Q32, bound=10)
    assert QuarticPoint(4, 132) in pts and QuarticPoint(0, 24) in pts
    assert all(Q32.on_quartic(p) for p in pts)


def test_infinity_and_affine_models_agree():
    E_inf = to_weierstrass(Q32).curve
    for seed in (QuarticPoint(4, 132), QuarticPoint(0, 24), QuarticPoint(F(-44, 15), F(6428, 75))):
        assert q_isomorphic(E_inf, to_weierstrass(Q32, seed).curve) is not None
