import pytest

from friezeknot.frieze import Frieze, frieze_from_word
from friezeknot.laurent import eval_at_A4_minus1, parse_poly
from friezeknot.lrword import EMPTY, all_words, parse_word
from friezeknot.rational import Fraction
from friezeknot.recipe import (
    bracket_num, bracket_via_paths, choose_diamond, denominator_link_bracket, extract_diamond,
    fold_triangle, reduce_chain, signed_paths,
)

RL2RL = parse_word("RL^2RL")


def test_diamond_of_RL2RL():
    f = frieze_from_word(RL2RL)
    d = choose_diamond(f)
    assert (d.M, d.s, d.t, d.v) == (19, 7, 8, 11)
    assert d.u == 12
    assert extract_diamond(frieze_from_word(parse_word("L^2R^2L"))).M == 17
    assert extract_diamond(frieze_from_word(EMPTY)).M == 2


def test_fold_of_RL2RL():
    tri = fold_triangle(frieze_from_word(RL2RL))
    assert tri.left_flank == (19, 8, 5, 2, 1)
    assert tri.right_flank == (19, 11, 3, 1)
    strings = {str(p): p for p in signed_paths(tri)}
    assert "19 -8 -5 +3 -2 +[1]" in strings
    assert strings["19 -8 -5 +3 -2 +[1]"].monomial() == parse_poly("-A^-4")


def test_fold_of_empty_word():
    tri = fold_triangle(frieze_from_word(EMPTY))
    assert tri.children[tri.apex][0].value == tri.children[tri.apex][1].value == 1


def test_example_values():
    f = frieze_from_word(RL2RL)
    assert bracket_via_paths(f) == parse_poly("-A^12+2A^8-3A^4+4-3A^-4+3A^-8-2A^-12+A^-16")
    assert bracket_num(f) == parse_poly("1-A^-4+2A^-8-2A^-12+A^-16")
    assert eval_at_A4_minus1(bracket_num(f)) == 7
    assert eval_at_A4_minus1(bracket_via_paths(f)) == 19
    assert denominator_link_bracket(Fraction(7, 19)) == parse_poly(
        "A^15-2A^11+3A^7-4A^3+3A^-1-3A^-5+2A^-9-A^-13")


def test_node_sums_and_signs():
    for w in all_words(10):
        tri = fold_triangle(frieze_from_word(w))
        for node, (lc, rc) in tri.children.items():
            assert lc.value + rc.value == node.value
        assert list(tri.edges())[0][2] == "-"


def test_bare_frieze_uses_leftmost_maximum():
    f = frieze_from_word(RL2RL)
    bare = Frieze(f.rows)
    assert eval_at_A4_minus1(bracket_via_paths(bare)) == 19


def test_reduction_chain():
    steps = reduce_chain(RL2RL)
    assert [(s.word.compact(), str(s.fraction)) for s in steps] == [
        ("L^2RL", "4/11"), ("LRL", "3/8"), ("RL", "2/5"), ("L", "1/3"), ("-", "1/2")]
    assert all(s.parent_ok for s in steps)
    assert reduce_chain(EMPTY) == []
