import pytest

from hookspecht.combinatorics import HookShape
from hookspecht.oracle import (
    VerificationReport,
    verify_end_dimension,
    verify_presentation,
    verify_domino_identities,
    verify_endomorphism,
)


@pytest.mark.parametrize("ab,p,dim", [((3, 2), 0, 6), ((2, 1), 5, 2), ((4, 0), 0, 1), ((1, 0), 3, 1)], ids=str)
def test_presentation_examples(ab, p, dim):
    rep = verify_presentation(HookShape(*ab), p)
    assert rep.ok, rep.table()
    assert rep.stats["dim"] == dim
    assert len(rep.checks) >= 21


@pytest.mark.parametrize("ab", [(5, 4), (3, 2), (7, 6)], ids=str)
def test_domino_identities_examples(ab):
    rep = verify_domino_identities(HookShape(*ab))
    assert rep.ok, rep.table()


def test_endomorphism_examples():
    rep = verify_endomorphism(HookShape(5, 4), 0)
    assert rep.ok and rep.stats["eigenvalues"] == ["-4", "-6", "0"]
    rep = verify_endomorphism(HookShape(3, 2), 5)
    assert rep.ok and rep.stats["eigenvalues"] == ["0", "3"]
    rep = verify_endomorphism(HookShape(5, 2), 3)
    assert rep.ok and rep.stats["eigenvalues"] == ["0"]


def test_preconditions():
    with pytest.raises(ValueError):
        verify_presentation(HookShape(6, 6))
    with pytest.raises(ValueError):
        verify_domino_identities(HookShape(4, 2))
    with pytest.raises(ValueError):
        verify_endomorphism(HookShape(3, 2), 2)
    with pytest.raises(ValueError):
        verify_endomorphism(HookShape(4, 2), 0)


def test_end_dimension():
    assert verify_end_dimension(HookShape(4, 4), 3).ok
    assert verify_end_dimension(HookShape(7, 2), 0).ok


def test_report_round_trip_and_witness():
    rep = verify_presentation(HookShape(3, 2), 0)
    again = VerificationReport.from_dict(rep.to_dict())
    assert again.to_dict() == rep.to_dict()
    rep.add("synthetic", False, "entry (0,1)")
    assert not rep.ok
    assert rep.failures()[0].witness == "entry (0,1)"
    assert "FAIL" in rep.table()


def test_deterministic():
    a = verify_presentation(HookShape(4, 3), 7).to_dict()
    b = verify_presentation(HookShape(4, 3), 7).to_dict()
    a["stats"].pop("seconds"), b["stats"].pop("seconds")
    assert a == b
