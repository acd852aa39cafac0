import json

import pytest

from sixdiff.claims import (
    KINDS,
    Claim,
    Report,
    builtin_claims,
    check_all,
    check_claim,
    load_claims,
    render_report,
    unexpected,
)
from sixdiff.errors import DomainError

EXPECTED_FAILS = {"s32-gen-on-curve", "s32-2P-on-curve", "s32-2P-consistency"}


@pytest.fixture(scope="module")
def verdicts():
    return check_all()


def test_registry_shape():
    claims = builtin_claims()
    assert len(claims) == 33
    assert len({c.id for c in claims}) == len(claims)
    assert {c.kind for c in claims} == set(KINDS)
    for c in claims:
        assert c.expected in ("Pass", "Fail")
        assert "\u00a7" not in c.location  # no section signs in locations


def test_every_outcome_matches_expectation(verdicts):
    assert unexpected(verdicts) == []
    for v in verdicts:
        if not v.informative:
            assert v.outcome == v.expected, v.id


def test_discrepancies_are_exactly_the_bad_curve_claims(verdicts):
    rep = Report(verdicts)
    assert {v.id for v in rep.discrepancies} == EXPECTED_FAILS
    by_id = {v.id: v for v in verdicts}
    # 17^3 + 17^2 - 122*17 - 444 = 2684 against 44^2 = 1936
    assert 17**3 + 17**2 - 122 * 17 - 444 - 44**2 == 748
    assert by_id["s32-gen-on-curve"].residual == "748"
    assert by_id["s32-2P-consistency"].residual == "748"
    assert 21**3 + 21**2 - 122 * 21 - 444 - 93**2 == -1953
    assert by_id["s32-2P-on-curve"].residual == "-1953"


def test_big_number_claims_pass(verdicts):
    by_id = {v.id: v for v in verdicts}
    for cid in ("n2-case2Q", "n4-m1-final", "n4-m2-final", "s23-2Q-rescale", "s42-2Q-rescale", "s41-2Q-solution"):
        assert by_id[cid].outcome == "Pass", cid


def test_informative_model_comparisons(verdicts):
    info = {v.id: v.outcome for v in verdicts if v.informative}
    assert info == {
        "s23-model-equivalence": "Pass",
        "s32-model-equivalence": "Fail",
        "s41-model-equivalence": "Pass",
        "s42-model-equivalence": "Pass",
    }


def test_check_is_deterministic(verdicts):
    assert [v.to_json() for v in check_all()] == [v.to_json() for v in verdicts]


def test_claim_json_roundtrip():
    claims = builtin_claims()
    text = json.dumps({"claims": [c.to_json() for c in claims]})
    assert load_claims(text) == claims
    with pytest.raises(DomainError):
        load_claims(json.dumps({"claims": [claims[0].to_json(), claims[0].to_json()]}))


def test_render_all_pass_subset():
    passing = [v for v in check_all() if v.outcome == "Pass"]
    text = render_report(passing)
    assert "discrepancies:\n  none" in text
    obj = json.loads(render_report(passing, "json"))
    assert obj["discrepancies"] == []


def test_render_json_schema(verdicts):
    obj = json.loads(render_report(verdicts, "json"))
    assert obj["summary"] == {"total": 33, "pass": 29, "fail": 4, "unexpected": 0}
    for row in obj["verdicts"]:
        assert {"id", "location", "outcome", "residual"} <= set(row)
    assert set(obj["discrepancies"]) == EXPECTED_FAILS
    with pytest.raises(DomainError):
        render_report(verdicts, "xml")


def test_malformed_claims_fail():
    bad = [
        Claim("x1", "nonsense", "nowhere", {}, "Pass"),
        Claim("x2", "solution", "nowhere", {"n": "2"}, "Pass"),
        Claim("x3", "curve-point", "nowhere", {"curve": {"a2": "0", "a4": "0", "a6": "0"}, "point": {"x": "0", "y": "0"}}, "Pass"),
        Claim("x4", "identity-instance", "nowhere", {"identity": "no-such-identity"}, "Pass"),
    ]
    for c in bad:
        v = check_claim(c, bad)
        assert v.outcome == "Fail"
        assert v.residual == "malformed"
    assert len(unexpected([check_claim(c, bad) for c in bad])) == 4


def test_wrong_printed_value_is_caught():
    c = next(c for c in builtin_claims() if c.id == "n3-caseQ")
    payload = dict(c.payload, values=["6", "2", "41", "48"])
    v = check_claim(Claim("n3-bad", "solution", c.location, payload, "Pass"))
    assert v.outcome == "Fail"
    assert v.residual not in (None, "malformed")
