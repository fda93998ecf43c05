import pytest

import diffsys

LOOP = """\
basis b1 b2;
eq delta(b1) f = 1;
eq delta(b2) f = 1;
eq delta(-b1 - b2) f = 1;
solve;
"""

SUB = """\
basis b1 b2;
eq delta(b1) f = 1;
eq delta(b2) f = 1;
solve;
"""


def test_solve_unsolvable_and_certify():
    report = diffsys.solve(LOOP)
    assert report["schema"] == 1
    assert report["outcome"]["kind"] == "unsolvable"
    cert = report["outcome"]["certificate"]
    assert cert["kind"] == "zero-operator"
    assert cert["combinedOperator"] == "0"
    assert cert["combinedRHS"] == "3"
    result = diffsys.certify(report)
    assert result["ok"] and result["exit"] == 0


def test_solve_subsystem_and_certify():
    report = diffsys.solve(SUB)
    assert report["outcome"]["kind"] == "solution"
    assert diffsys.certify(report)["ok"]


def test_min_supnorm_exact_value():
    script = """\
basis b1 b2 b3;
eq delta(b1) f = 2/2*chi(<b2, b3> + 0);
eq delta(b2) f = chi(<b1, b3> + 0);
eq delta(b3) f = chi(<b1, b2> + 0);
"""
    report = diffsys.min_supnorm(script, radius=2)
    assert report["outcome"]["kind"] == "value"
    assert report["outcome"]["value"] == "3/2"
    assert diffsys.certify(report)["ok"]


def test_deduce():
    script = SUB + "deduce T[0]:1, T[b1]:2;\n"
    report = diffsys.deduce(script)
    assert report["outcome"]["operator"] == "-T[0] + T[b1 + b2]"
    assert report["outcome"]["rhs"] == "2"
    assert diffsys.certify(report)["ok"]


def test_poly_solve():
    report = diffsys.poly_solve("eq delta(1) f = poly(0, 1);\n")
    assert report["outcome"] == {"kind": "solution", "solution": "poly(0,-1/2,1/2)"}
    assert diffsys.certify(report)["ok"]


def test_gallery_and_certify():
    assert "increment-loop" in diffsys.gallery_names()
    report = diffsys.gallery("increment-loop", n=2, radius=3)
    assert report["gallery"]["allPass"]
    assert diffsys.certify(report)["ok"]


def test_canonical_roundtrip():
    text = diffsys.canonical("basis b1;eq delta( b1 ) f = 1 ;solve;")
    assert text == "basis b1;\neq -T[0] + T[b1] f = 1;\nsolve;\n"
    assert diffsys.canonical(text) == text


def test_parse_error_is_value_error():
    with pytest.raises(ValueError) as err:
        diffsys.canonical("eq delta(zz) f = 1;")
    assert "zz" in str(err.value)


def test_reports_are_deterministic():
    assert diffsys.solve(LOOP) == diffsys.solve(LOOP)
    a = diffsys.gallery("sign-set", k=5, trials=50, seed=9)
    b = diffsys.gallery("sign-set", k=5, trials=50, seed=9)
    assert a == b
