from fractions import Fraction

import pytest

import toric3


def test_catalog_volumes_and_length():
    for vol, name in enumerate(["T0", "S1", "S2", "E", "K1", "K2"]):
        p = toric3.catalog(name)
        assert toric3.vol3(p) == vol
        assert toric3.minkowski_length(p) == 1
        assert toric3.is_dps(p)


def test_polytope_from_points():
    seg = toric3.Polytope([[0, 0, 0], [1, 0, 0]])
    assert seg.dim == 1
    assert len(seg) == 2
    cube = toric3.catalog("Cube:1")
    assert toric3.minkowski_length(cube) == 3
    assert toric3.minkowski_length(toric3.catalog("K1") + toric3.catalog("K1")) == 2
    tri = toric3.Polytope([[0, 0], [1, 0], [0, 1]], ambient=2)
    assert toric3.vol2(tri) == 1
    with pytest.raises(ValueError):
        toric3.Polytope([[0, 0, 0, 0]])


def test_zero_counts():
    f1 = [([2, 1, 0], 1), ([1, 2, 0], -2), ([0, 0, 0], 1)]
    f2 = [([3, 0, 0], 1), ([0, 0, 1], -2), ([0, 0, 2], 1)]
    assert toric3.count_zeros(f1, 7) == 54
    assert toric3.count_zeros(f2, 7) == 54
    assert toric3.common_zero_count(f1, f2, 7) == 12


def test_code_params():
    r = toric3.code_params(toric3.catalog("P8"), 5)
    assert (r["n"], r["k"], r["d"], r["N_P"]) == (64, 8, 36, 28)
    assert (r["griesmer"], r["gv"]) == (47, 37)
    names = {b["name"] for b in r["bounds"]}
    assert "simplex" in names
    assert toric3.max_zero_count(toric3.catalog("EX72"), 5) == 40


def test_budget_error():
    with pytest.raises(toric3.BudgetExceeded):
        toric3.max_zero_count(toric3.catalog("Cube:2"), 7, engine="exhaustive")


def test_bounds():
    b = toric3.bounds
    assert b.special("T0", 7) == 60
    assert b.maxa(2, 2, 7) == 120
    assert [b.width_one_final(2, q) for q in (5, 7, 8, 9, 11)] == [44, 96, 126, 168, 250]
    value, pp = b.beta(7, 3, 2, 1, 5, 2)
    assert abs(value - 105.915) < 1e-3 and pp == 107
    assert b.beta(7, 3, 2, 1, 5, 2, mode="global")[1] == 43
    assert b.griesmer(216, 8, 7) == 181 and b.gv(216, 8, 7) == 159
    assert b.mindist(2, 11, True) == 743
    reports = b.for_polytope(toric3.catalog("EX72"), 5, 40)
    final = next(r for r in reports if r["name"] == "width_one_final")
    assert final["value"] == 44 and final["holds"] is True
    k2 = b.for_polytope(toric3.catalog("K2"), 7)
    assert any(isinstance(r["value"], (int, Fraction)) for r in k2)


def test_verify_fast():
    assert "ex72" in toric3.verify_suites()
    for suite in ("table1", "ex63", "lemma41"):
        results = toric3.verify(suite)
        assert results and all(ok for _, ok, _ in results)
