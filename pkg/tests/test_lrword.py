import random

import pytest

from friezeknot.lrword import (
    EMPTY, LRWord, all_words, fraction_of, i_word, ir_word, join, parse_word, r_word, word_of,
)
from friezeknot.rational import Fraction, evaluate


def F(text):
    p, q = text.split("/")
    return Fraction(int(p), int(q))


@pytest.mark.parametrize("frac, word", [
    ("1/2", ""), ("1/5", "LLL"), ("2/7", "RLL"), ("3/8", "LRL"), ("3/7", "RRL"), ("5/12", "LRRL"),
])
def test_word_table(frac, word):
    assert word_of(F(frac)) == LRWord(word)
    assert fraction_of(LRWord(word)) == F(frac)


def test_operation_table_for_LLLR():
    w = parse_word("LLLR")
    assert (i_word(w), r_word(w), ir_word(w)) == (LRWord("RRRL"), LRWord("RLLL"), LRWord("LRRR"))
    assert [str(fraction_of(u)) for u in (w, i_word(w), r_word(w), ir_word(w))] == [
        "5/9", "4/9", "2/9", "7/9"]


def test_operation_table_for_LLRR():
    w = parse_word("LLRR")
    assert (i_word(w), r_word(w), ir_word(w)) == (LRWord("RRLL"), LRWord("RRLL"), LRWord("LLRR"))
    assert [str(fraction_of(u)) for u in (w, i_word(w), r_word(w), ir_word(w))] == [
        "7/10", "3/10", "3/10", "7/10"]


def test_exponent_sugar_and_empty_word():
    assert parse_word("RL^2RL") == LRWord("RLLRL")
    assert parse_word("-") == EMPTY
    assert LRWord("RLLRL").compact() == "RL^2RL"
    with pytest.raises(ValueError):
        parse_word("RLX")


def test_fold_of_RL2RL():
    assert fraction_of(parse_word("RL^2RL")) == Fraction(7, 19)


def test_join_examples():
    assert join(EMPTY, parse_word("L^2R")) == parse_word("L^3R")
    assert join(parse_word("RL"), parse_word("R^2L")) == parse_word("LR^2L")
    assert join(LRWord("L"), EMPTY) == LRWord("RL")


def test_join_rejects_non_neighbors():
    with pytest.raises(ValueError):
        join(LRWord("LL"), LRWord("RR"))


def test_ir_is_an_involution():
    for w in all_words(12):
        assert ir_word(ir_word(w)) == w


def test_round_trip_up_to_length_14():
    for w in all_words(14, min_len=13):
        assert word_of(fraction_of(w)) == w


def test_round_trip_by_fraction():
    for q in range(2, 201):
        for p in range(1, q):
            x = Fraction.of(p, q)
            if x.q == q:
                assert fraction_of(word_of(x)) == x


def test_longer_expansion_gives_longer_word():
    rng = random.Random(7)
    for _ in range(300):
        m = rng.randrange(2, 7)
        terms = (0,) + tuple(rng.randrange(1, 5) for _ in range(m))
        longer, shorter = evaluate(terms), evaluate(terms[:-1])
        if 0 < shorter.p < shorter.q:
            assert len(word_of(longer)) > len(word_of(shorter))


def test_word_of_rejects_outside_unit_interval():
    with pytest.raises(ValueError):
        word_of(Fraction(3, 2))
