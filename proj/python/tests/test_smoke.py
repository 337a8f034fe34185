import pytest

import akstab

S0 = akstab.condition(3, ["1", ["1", "1"], ["0", "1"]])
K2 = akstab.condition(2, ["1", ["0", "1/4"]])


def test_homs_table():
    assert akstab.homs([2, 3], [1, 2]) == {1: 1, 2: 1}
    assert akstab.homs([1, 3], [1, 3]) == {0: 1, 2: 1}
    assert akstab.homs("P23", "P12", k=3) == {1: 1, 2: 1}


def test_algebra():
    alg = akstab.algebra(4, 3)
    assert alg["dim"] == 14
    assert alg["pairing_perfect"]


def test_extensions_and_twists():
    assert akstab.ext(3, "P12", "P33") == "P13"
    assert akstab.ext(3, "P22", "P22[1]") == "0"
    with pytest.raises(akstab.AkstabError) as err:
        akstab.ext(3, "P11", "P33")
    assert err.value.args[0] == "ExtUndefined"
    assert akstab.twist_word(2, [1], "P11") == "P11[-1]"


def test_hn_worked_instance():
    f = akstab.hn(S0, "Ext(P23, P12[1])")
    assert [fac["stables"] for fac in f["factors"]] == [["P11[1]"], ["P33"]]
    assert [fac["phase"]["decimal"] for fac in f["factors"]] == [1.0, 0.5]
    assert f["valid"] and f["confluent"]


def test_axioms():
    rep = akstab.axioms(S0)
    assert rep["pass"]


def test_walls_and_crossing():
    target = ["1", ["1/4", "-1/8"]]
    ws = akstab.walls(K2, target)
    assert len(ws) == 1 and ws[0]["kind"] == "parallel"
    out = akstab.cross(K2, target)
    stables = {(s["i"], s["j"]): s["object"]["expr"] for s in out["condition"]["stables"]}
    assert stables[(1, 2)] == "Ext(P22, P11)"
    assert out["simple"]["simple"]
    back = akstab.cross(out["condition"], K2["Z"])
    assert [s["object"]["expr"] for s in back["condition"]["stables"]] == ["P11", "P12", "P22"]


def test_generator_loop_and_monodromy():
    rep = akstab.generator_loop(K2, 2)
    assert rep["all_match"]
    mono = akstab.monodromy(K2, rep["vertices"])
    assert mono["word"] == [2, 2]
    assert not mono["word_trivial"]
    assert mono["consistent"]


def test_braids():
    q1 = [[-1, "-1/3"], [1, "1/3"]]
    q2 = [["1/3", -1], ["-1/3", 1]]
    q3 = [[1, "1/3"], [-1, "-1/3"]]
    assert akstab.braid_of_loop([q1, q2, q3]) == [1]
    assert akstab.is_trivial([1, 2, 1, -2, -1, -2], 3)
    assert not akstab.is_trivial([1, 1], 3)
    assert akstab.free_reduce([1, 2, -2, -1, 3]) == [3]


def test_svg():
    doc = akstab.svg_condition(S0)
    assert doc.count("<circle") == 4 and doc.count("<line") == 6
    assert doc == akstab.svg_condition(S0)


def test_acceptance_criterion():
    r = akstab.run_criterion(2)
    assert r["pass"], r["detail"]
