import pytest

import iqgklo


def test_catalog():
    names = [inst["name"] for inst in iqgklo.catalog()]
    assert len(names) == 10
    assert "qsA2-v11" in names


def test_validate_catalog_name():
    (inst,) = iqgklo.validate("qsA2-v11")
    assert inst["v"] == [1, 1]


def test_check_passes():
    rep = iqgklo.check("qsA2-v11", oracle={"trials": 3}, identities=False)
    assert rep["schema"] == iqgklo.REPORT_SCHEMA
    assert rep["all_pass"]
    labels = [e["label"] for r in rep["reports"] for e in r["entries"]]
    assert "BB3(1,2)" in labels


def test_corruption_fails_with_support():
    rep = iqgklo.check("sA1-v1-t1", corruption={"drop_kappa": True}, oracle={"trials": 3}, identities=False)
    assert not rep["all_pass"]
    failing = [e for r in rep["reports"] for e in r["entries"] if e["status"] == "fail"]
    assert failing and failing[0]["discrepancies"]


def test_identities():
    assert iqgklo.identities(oracle={"trials": 3})["all_pass"]


def test_image():
    assert "w[1,1]" in iqgklo.image("sA1-v1-t0", "B", 1)


def test_errors():
    with pytest.raises(iqgklo.IqgError, match="AdjacentThetas"):
        iqgklo.validate({"type": "A2", "lambda": [1, 1], "mu": [0, 0], "theta": [1, 1]})
    with pytest.raises(iqgklo.IqgError, match="ValidationError"):
        iqgklo.check("sA1-v1-t0", relations="BB4")
