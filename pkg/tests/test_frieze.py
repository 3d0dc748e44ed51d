import numpy as np
import pytest

from friezeknot.frieze import (
    FriezeError, compare_friezes, complete_invariant, flip_rows, frieze_bracket,
    frieze_bracket_recursive, frieze_equal, frieze_from_quiddity, frieze_from_word, is_valid,
    mirror, qr_polynomials, translate, validate, vertical_reflection, word_of_frieze,
)
from friezeknot.laurent import LaurentPoly, canonical_up_to_bar, parse_poly
from friezeknot.lrword import EMPTY, LRWord, all_words, i_word, ir_word, parse_word
from friezeknot.rational import Fraction

FIG12_QUIDDITY = (2, 4, 2, 2, 1, 4, 2, 3, 1)
NON_ZIGZAG = (1, 4, 1, 2, 4, 1, 2, 3)


def test_base_brackets():
    assert frieze_bracket(EMPTY) == parse_poly("-A^4-A^-4")
    assert frieze_bracket(LRWord("L")) == parse_poly("-A^4+1+A^-8")
    assert frieze_bracket(LRWord("R")) == parse_poly("A^8+1-A^-4")


def test_figure_twelve():
    f = frieze_from_word(parse_word("L^2R^2L"))
    assert f.max_entry == 17
    assert f.period == 9
    q = f.quiddity
    assert any(q[k:] + q[:k] == FIG12_QUIDDITY for k in range(9))


def test_empty_word_frieze():
    f = frieze_from_word(EMPTY)
    assert f.rows.tolist() == [[1, 2, 1, 2]]
    assert f.meta["minimal_period"] == 2
    assert f.max_entry == 2


def test_non_zigzag_is_rejected():
    f = frieze_from_quiddity(NON_ZIGZAG)
    validate(f)
    with pytest.raises(FriezeError, match="not zigzag-type"):
        word_of_frieze(f)


def test_broken_diamond_is_invalid():
    f = frieze_from_word(parse_word("LRL"))
    rows = f.rows.copy()
    rows[1, 2] += 1
    assert not is_valid(type(f)(rows))


def test_quiddity_round_trip():
    for w in all_words(6):
        f = frieze_from_word(w)
        g = frieze_from_quiddity(f.quiddity)
        assert np.array_equal(f.rows, g.rows)
        assert word_of_frieze(g) in (w, ir_word(w))


def test_reflection_of_L3R():
    f = frieze_from_word(parse_word("L^3R"))
    assert frieze_equal(vertical_reflection(f), frieze_from_word(parse_word("R^3L")))
    assert vertical_reflection(vertical_reflection(f)) == f
    assert frieze_equal(flip_rows(f), f)


def test_translation_is_seen():
    f = frieze_from_word(parse_word("RL^2RL"))
    cmp = compare_friezes(f, translate(f, 4))
    assert cmp.translation


def test_reflection_keeps_bracket_up_to_bar():
    for w in all_words(10):
        f = frieze_from_word(w)
        g = vertical_reflection(f)
        assert canonical_up_to_bar(g.bracket()) == canonical_up_to_bar(f.bracket())


def test_word_recursion():
    for w in all_words(8):
        assert frieze_bracket_recursive(w) == frieze_bracket(w)


def test_qr_base_values():
    assert qr_polynomials(Fraction(1, 2)) == (LaurentPoly({0: 1}), LaurentPoly())
    with pytest.raises(ValueError):
        qr_polynomials(Fraction(1, 1))


@pytest.mark.parametrize("word, fractions", [
    ("LLLR", {"5/9", "4/9", "2/9", "7/9"}),
    ("LLRR", {"7/10", "3/10"}),
    ("-", {"1/2"}),
])
def test_complete_invariant(word, fractions):
    assert {str(x) for x in complete_invariant(parse_word(word)).fractions} == fractions


def test_mirror_gives_complement_word():
    for w in all_words(7):
        assert frieze_equal(mirror(frieze_from_word(w)), frieze_from_word(i_word(w)))
