from dchordal.checks import HOLDS, NOT_APPLICABLE, VIOLATED, check_lemma3, check_lemma4, check_theorem3, check_tree, run_check
from dchordal.graph import complete, cycle, diamond, from_edges, path, wheel
from dchordal.recognition import CompatibleTree


def test_tree_holds_on_wheel():
    verdict, rep = check_tree(wheel(4))
    assert verdict == HOLDS
    assert rep["route"] == "clique_weight"
    assert rep["max_tree_path"] <= 3


def test_tree_rejects_bad_tree():
    # path tree 0-1-2-3 on a 4-wheel with hub 4 breaks the clique-subtree condition
    G = wheel(4)
    T = CompatibleTree((None, 0, 1, 2, 3), 0)
    verdict, rep = check_tree(G, T)
    assert verdict == VIOLATED
    assert not rep["cond2"]


def test_tree_not_applicable_on_hole():
    assert check_tree(cycle(5))[0] == NOT_APPLICABLE


def test_theorem3_reports_odd_hole():
    verdict, rep = check_theorem3(wheel(5))
    assert verdict == HOLDS
    assert rep["three_colorable"] is False
    assert rep["odd_hole"] == [1, 2, 3, 4, 5]


def test_theorem3_reports_k4():
    verdict, rep = check_theorem3(complete(4))
    assert verdict == HOLDS and rep["k4"] == [1, 2, 3, 4]


def test_lemma3():
    assert check_lemma3(wheel(4))[0] == HOLDS
    assert check_lemma3(wheel(4))[1]["cycles"] == 1
    assert check_lemma3(complete(4))[0] == NOT_APPLICABLE
    assert check_lemma3(cycle(4))[0] == NOT_APPLICABLE


def test_lemma4():
    assert check_lemma4(diamond())[0] == HOLDS
    assert check_lemma4(cycle(4))[0] == NOT_APPLICABLE


def test_construction():
    assert run_check(wheel(5), "construction")[0] == HOLDS
    verdict, rep = run_check(path(3), "construction")
    assert verdict == NOT_APPLICABLE and rep["vertex"] == 2
