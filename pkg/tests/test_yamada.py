import pytest

from friezeknot import yamada
from friezeknot.laurent import LaurentPoly, neg_A3_power
from friezeknot.rational import Fraction, continued_fraction_even
from friezeknot.tangle import BracketVector, integer_tangle, tangle_of_fraction, v_map, vertical_tangle
from friezeknot.yamada import (
    PathCapExceeded, bracket_via_phi, build_triangle, descending_paths, phi_direct, phi_recursive,
    phi_tilde, tr_map,
)


def test_base_values():
    assert phi_recursive(Fraction(0, 1)) == BracketVector(LaurentPoly(), LaurentPoly({0: 1}))
    assert phi_recursive(Fraction(1, 0)) == BracketVector(LaurentPoly({6: 1}), LaurentPoly())


def test_seven_fourths_triangle():
    tri = build_triangle(Fraction(7, 4))
    assert (tri.r, tri.l) == (2, 4)
    paths = {tuple(map(str, p.vertices)): p for p in descending_paths(tri)}
    p = paths[("inf", "1/1", "3/2", "5/3", "7/4")]
    assert (p.w_left, p.w_right) == (1, 4)


@pytest.mark.parametrize("n", range(1, 9))
def test_one_over_n(n):
    # phi(1/n) = (-A^2)(-A^4)^(1-n) ([inf] + A^2 sum (-A^4)^k [0])
    pref = LaurentPoly.monomial(-1, 2) * LaurentPoly.monomial((-1) ** (n - 1), 4 * (1 - n))
    tail = LaurentPoly({4 * k + 2: (-1) ** k for k in range(n)})
    expect = BracketVector(pref, pref * tail)
    assert phi_direct(Fraction(1, n)) == expect == phi_recursive(Fraction(1, n))
    assert tangle_of_fraction(Fraction(1, n)) == phi_recursive(Fraction(1, n)).scale(neg_A3_power(n - 2))


@pytest.mark.parametrize("n", range(1, 9))
def test_integers(n):
    assert integer_tangle(n) == phi_recursive(Fraction(n, 1)).scale(neg_A3_power(-n))


def test_p_over_pn_plus_one():
    for p in range(1, 7):
        for n in range(1, 7):
            x = Fraction(p, p * n + 1)
            assert phi_recursive(x) == tangle_of_fraction(x).scale(neg_A3_power(p - n))


def test_m_plus_one_over_n():
    for m in range(1, 6):
        for n in range(1, 6):
            x = Fraction(m * n + 1, n)
            assert phi_recursive(x) == tangle_of_fraction(x).scale(neg_A3_power(m - n + 2))


def test_half():
    assert v_map(phi_recursive(Fraction(1, 2))) == LaurentPoly({4: -1, -4: -1})


def test_trace_map():
    for x in (Fraction(1, 2), Fraction(7, 4), Fraction(7, 19)):
        assert tr_map(phi_tilde(x)) == v_map(phi_recursive(x))


def test_bridge_small():
    for q in range(1, 20):
        for p in range(1, 20):
            x = Fraction.of(p, q)
            assert bracket_via_phi(x) == tangle_of_fraction(x)


def test_path_cap(monkeypatch):
    monkeypatch.setenv("FRIEZE_PATH_CAP", "3")
    with pytest.raises(PathCapExceeded):
        phi_direct(Fraction(7, 19))


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        build_triangle(Fraction(0, 1))
