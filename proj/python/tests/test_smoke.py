from fractions import Fraction

import pytest

import parablat as pl


def test_fixtures_listed():
    assert pl.fixture_names() == ["FIX-H", "FIX-G3", "FIX-L5", "FIX-L5b", "FIX-L7", "FIX-G5"]
    fx = pl.fixture("FIX-G3")
    assert fx["lattice"]["gram"] == [[0, 2, 0], [2, 0, 1], [0, 1, 2]]


def test_parse_rational():
    assert pl.parse_rational("4/6") == Fraction(2, 3)
    with pytest.raises(pl.InputError):
        pl.parse_rational("1/0")


def test_analyze():
    a = pl.analyze("FIX-L5")
    assert a["signature"] == [3, 2]
    assert a["discriminant_order"] == 2
    g3 = pl.analyze([[0, 2, 0], [2, 0, 1], [0, 1, 2]], sublattice=[[1], [0], [0]])
    assert g3["discriminant_order"] == 8
    assert g3["isotropic_data"]["H_I_order"] == 2


def test_frame_of_g3():
    f = pl.frame("FIX-G3")
    assert f["alpha"] == [[Fraction(1, 16)]]
    assert f["iota_class_trivial"] is False
    assert pl.frame("FIX-L5")["iota_class_trivial"] is True


def test_decompose_vector():
    d = pl.decompose_vector("FIX-G3", [0, 1, 0])
    assert d["decomposition"]["u"] == [Fraction(-1, 4), 0, 0]
    assert d["decomposition"]["w"] == [0, 0, Fraction(1, 2)]
    for key in ("in_L", "in_Lstar", "in_LstarI"):
        assert d[key]["decomposition"] == d[key]["direct"]


def test_membership_and_assembly():
    coords = pl.complete_to_element("FIX-L5", [[1, 2], [0, 1]], [[1]])
    rep = pl.member("FIX-L5", coords)
    assert rep["conditions"]["member"] and rep["oracle_agrees"]
    a = pl.assemble("FIX-L5", coords)
    assert pl.decompose_element("FIX-L5", a) == coords

    bad = dict(coords, eta=[[0, Fraction(1, 2)], [Fraction(-1, 2), 0]])
    rep = pl.member("FIX-L5", bad)
    assert not rep["conditions"]["member"]
    assert rep["conditions"]["iv_eta_condition"] is False
    assert rep["oracle_agrees"]


def test_not_in_parabolic():
    with pytest.raises(pl.NotInParabolic):
        pl.decompose_element("FIX-H", [[0, 1], [1, 0]])


def test_heisenberg():
    h = pl.heis("FIX-L7", [[2, 1], [1, 2]], [[0, Fraction(1, 2)], [Fraction(-1, 2), 0]])
    assert h["member"]
    assert h["c_psi"] == [[0, Fraction(1, 2)], [Fraction(-1, 2), 0]]


def test_cocycle_g5():
    c = pl.cocycle("FIX-G5", [[[3, 1], [2, 1]], [[1, 1], [0, 1]]])
    assert c["values"][0]["b"] == [[Fraction(1, 2), Fraction(1, 2)]]
    assert c["values"][0]["b_zero"] is False
    assert c["law_on_consecutive_pairs"] == [True]
    with pytest.raises(pl.PreconditionError):
        pl.cocycle("FIX-G5", [[[1, 0], [1, 1]]])


def test_boundary():
    b = pl.boundary("FIX-L5b")
    assert all(b["checks"].values())
    assert (b["gamma_Lstar"]["N"], b["gamma_Lstar"]["D"]) == (2, 1)
    assert b["gamma_Lstar"]["index_in_SL2Z"] == 3
    with pytest.raises(pl.PreconditionError):
        pl.boundary("FIX-G3")


def test_bad_input():
    with pytest.raises(pl.PreconditionError):
        pl.analyze([[1]])
    with pytest.raises(pl.InputError):
        pl.frame("FIX-NOPE")
    with pytest.raises(pl.Error):
        pl.frame([[0, 1], [1, 0]])


def test_selfcheck_acceptance_subset():
    results = pl.selfcheck(scale=0.05, acceptance_only=True)
    assert len(results) == 9
    assert [r["name"] for r in results if not r["pass"]] == []
