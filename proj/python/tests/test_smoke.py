import pytest

import kmchev


def mono(fund, delta=None):
    w = {"fund": fund}
    if delta is not None:
        w["delta"] = delta
    return w


def test_affine_dominant_row_agrees():
    assert kmchev.models_agree("A2~", "1,1,0", "0 1 2 1")
    assert kmchev.models_agree("A2~", "1,1,0", "0 1 2 1", sign="antidominant")
    r = kmchev.chevalley("A2~", "1,1,0", w="0 1 2 1", model="ls")
    assert r["w"] == [0, 1, 2, 1]
    assert len(r["rows"]) == 4
    assert sum(t["mult"] for row in r["rows"] for t in row["terms"]) == 8


def test_type_a2_example():
    # T_{s1} coefficient of T_{s1s2s1} e^{2w1+w2}: two monomials of multiplicity one
    r = kmchev.chevalley("A2", "2,1", w="1 2 1", model="nilhecke")
    row = next(row for row in r["rows"] if row["z"] == [1])
    assert "delta" not in r["lambda"]
    assert sorted(t["mult"] for t in row["terms"]) == [1, 1]


def test_fixed_z_is_transpose():
    fz = kmchev.chevalley("A2~", "1,0,0", z="0", max_length=3, model="alcove")
    assert fz["z"] == [0]
    assert fz["truncated"] is True
    for row in fz["rows"]:
        w = " ".join(map(str, row["w"]))
        fw = kmchev.chevalley("A2~", "1,0,0", w=w)
        match = [r for r in fw["rows"] if r["z"] == [0]]
        assert match and match[0]["terms"] == row["terms"]


def test_generic_matrix():
    m = [[2, -3], [-3, 2]]
    rows = [kmchev.chevalley("", "1,1", w="0 1 0", model=x, matrix=m)["rows"] for x in kmchev.MODELS]
    assert rows[0] == rows[1] == rows[2]


def test_demazure_character_is_weyl_character():
    ch = kmchev.demazure_character("A2", "2,1", "1 2 1")
    assert sum(ch.values()) == 15
    assert ch["2,1"] == 1 and ch["0,2"] == 1 and ch["1,0"] == 2
    assert "0,0" not in ch


def test_crystal_realizations():
    ls = kmchev.crystal("A2~", "1,1,0", "0 1 2 1")
    al = kmchev.crystal("A2~", "1,1,0", "0 1 2 1", model="alcove")
    assert len(ls["vertices"]) == len(al["vertices"]) == 9
    assert len(ls["edges"]) == len(al["edges"])


def test_lifts_and_tree():
    assert kmchev.lift_up("A2~", "1 2", "2 1", [2]) == "1 2 1"
    assert kmchev.lift_down("A2~", "0 1 2 1", "0", [2]) == "0 2"
    assert kmchev.tree_dot("A2~", "1,1,0", "0 1 2 1").startswith("digraph")


def test_selftest():
    assert "A2-rho" in kmchev.selftest_scenarios()
    assert kmchev.selftest(["A2-rho"])["passed"] is True
    assert kmchev.selftest([])["checks"] == []
    bad = kmchev.selftest(["A2-rho"], inject_fault=True)
    assert bad["passed"] is False


def test_errors():
    with pytest.raises(ValueError):
        kmchev.chevalley("A2", "-1,1", w="1")
    with pytest.raises(ValueError):
        kmchev.chevalley("A2", "1,1,delta=1", w="1")
