import json

import mqtower


def test_families_small():
    fams = mqtower.families(20)
    assert ("COND1", 5, 7) in fams
    assert ("COND2", 3, 7) in fams
    assert ("COND3", 17, 0) in fams


def test_invariants_match_hand_values():
    # eps_35 = 6 + sqrt 35 (36 - 35 = 1); Q(sqrt -14) has forms x^2+14y^2, 2x^2+7y^2, 3x^2 +- 2xy + 5y^2.
    assert mqtower.invariants(35)["eps"] == (6, 1, 1)
    assert mqtower.invariants(-14)["h"] == 4
    assert mqtower.m_exponent(7) == 2


def test_classify_cond2():
    c = mqtower.classify("COND2", 3, 7)
    assert c["contradictions"] == []
    assert c["groups"]["L"] == "Q_3"
    assert c["groups"]["k"] == "Q_4"


def test_group_claims_hold():
    for name, holds, detail in mqtower.group_claims("S", 6):
        assert holds, (name, detail)


def test_verify_json_parses():
    doc = json.loads(mqtower.verify(20, "json"))
    assert doc["summary"]["instances"] == len(doc["instances"])


def test_cli_usage_error():
    rc, out, err = mqtower.cli(["nosuch"])
    assert rc == 2
    assert err
