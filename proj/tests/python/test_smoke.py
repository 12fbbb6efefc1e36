import os

import pytest

import thomschur

GOLDEN = os.environ.get(
    "THOMSCHUR_GOLDEN_DIR",
    os.path.join(os.path.dirname(__file__), "..", "..", "data", "golden"),
)


def test_compute_i22_r2():
    assert thomschur.compute("I22", 2) == {(1, 3, 3): 1, (3, 4): 3}


def test_compute_a3_r1():
    assert thomschur.compute("A3", 1) == {(1, 1, 1): 1, (1, 2): 5, (3,): 6}


def test_solve_matches_compute():
    assert thomschur.solve("A4", 1) == thomschur.compute("A4", 1)


def test_verify_a3_r2():
    ok, report = thomschur.verify("A3", 2)
    assert ok
    assert all(entry["status"] == "PASS" for entry in report)
    assert any(entry["equation_label"] == "III22" for entry in report)


def test_table_rows():
    d = thomschur.table("d", 7)
    assert d[0][0] == 1
    assert d[6][:4] == [127, 119, 91, 35]
    e = thomschur.table("e", 7)
    assert e[0][0] == 5
    assert e[6][:4] == [9329, 4402, 1904, 526]


def test_schur_and_complete():
    assert thomschur.complete(2, "X2") == "x1^2 + x1*x2 + x2^2"
    assert thomschur.schur([4, 5, 6, 9], "A2 - B4") == "0"


def test_evaluate_vanishing():
    assert thomschur.evaluate({(1, 3, 3): 1, (3, 4): 3}, "x - [2x] - B1") == "0"


def test_unsupported_singularity():
    with pytest.raises(ValueError):
        thomschur.compute("A5", 1)


def test_selftest():
    ok, report = thomschur.selftest(GOLDEN)
    assert ok, report
    assert len(report) == 13
