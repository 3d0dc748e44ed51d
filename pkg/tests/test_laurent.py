import pytest
from hypothesis import given, strategies as st

from friezeknot.laurent import (
    DELTA, LaurentPoly, bar, canonical_up_to_bar, eval_at_A4_minus1, format_poly, neg_A3_power,
    parse_poly,
)

polys = st.dictionaries(st.integers(-20, 20), st.integers(-50, 50), max_size=6).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPoly()


@given(polys, polys)
def test_bar_is_a_ring_involution(p, q):
    assert bar(bar(p)) == p
    assert bar(p * q) == bar(p) * bar(q)
    assert canonical_up_to_bar(p) == canonical_up_to_bar(bar(p))


@given(polys)
def test_text_round_trip(p):
    assert parse_poly(format_poly(p)) == p


def test_format_uses_descending_exponents():
    p = LaurentPoly({12: -1, 8: 2, 4: -3, 0: 4, -4: -3, -8: 3, -12: -2, -16: 1})
    assert str(p) == "-A^12+2A^8-3A^4+4-3A^-4+3A^-8-2A^-12+A^-16"
    assert str(LaurentPoly()) == "0"


def test_delta_and_powers():
    assert DELTA == LaurentPoly({2: -1, -2: -1})
    assert neg_A3_power(2) == LaurentPoly({6: 1})
    assert neg_A3_power(-1) == LaurentPoly({-3: -1})


def test_eval_at_A4_minus1():
    assert eval_at_A4_minus1(LaurentPoly({4: -1, -4: -1})) == 2
    with pytest.raises(ValueError):
        eval_at_A4_minus1(LaurentPoly({2: 1}))


def test_overflow_is_reported():
    big = LaurentPoly({0: 2**62})
    with pytest.raises(OverflowError):
        big * 4
