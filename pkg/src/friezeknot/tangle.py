"""Bracket vectors of rational tangles.

A tangle's bracket is ``n [inf] + d [0]`` with ``n, d`` Laurent polynomials;
everything here is algebra on the pair ``(n, d)``, no diagrams are drawn.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import DELTA, ONE, ZERO, LaurentPoly, bar
from .rational import Fraction, continued_fraction_even


@dataclass(frozen=True)
class BracketVector:
    """``n`` is the coefficient of ``[inf]``, ``d`` that of ``[0]``."""

    n: LaurentPoly
    d: LaurentPoly

    def __add__(self, other: "BracketVector") -> "BracketVector":
        return BracketVector(self.n + other.n, self.d + other.d)

    def __neg__(self) -> "BracketVector":
        return BracketVector(-self.n, -self.d)

    def __sub__(self, other: "BracketVector") -> "BracketVector":
        return self + (-other)

    def scale(self, c: LaurentPoly) -> "BracketVector":
        return BracketVector(c * self.n, c * self.d)

    __rmul__ = scale

    def __str__(self) -> str:
        return f"({self.n})[inf] + ({self.d})[0]"


ZERO_TANGLE = BracketVector(ZERO, ONE)
INF_TANGLE = BracketVector(ONE, ZERO)


def _alternating_sum(sign_exp: int, count: int) -> LaurentPoly:
    """``sum_{k<count} (-A^sign_exp)^k``."""
    return LaurentPoly({sign_exp * k: (-1) ** k for k in range(count)})


def integer_tangle(n: int) -> BracketVector:
    """Horizontal twist ``[n]``, ``n >= 0``."""
    if n < 0:
        raise ValueError("use mirror(integer_tangle(-n)) for negative twists")
    if n == 0:
        return ZERO_TANGLE
    return BracketVector(_alternating_sum(-4, n).shift(n - 2), LaurentPoly.monomial(1, n))


def vertical_tangle(n: int) -> BracketVector:
    """Vertical twist ``1/[n]``, ``n >= 0``."""
    if n < 0:
        raise ValueError("use mirror(vertical_tangle(-n)) for negative twists")
    if n == 0:
        return INF_TANGLE
    return BracketVector(LaurentPoly.monomial(1, -n), _alternating_sum(4, n).shift(2 - n))


def tangle_sum(t: BracketVector, u: BracketVector) -> BracketVector:
    """Horizontal sum ``t ⋈ u``."""
    return BracketVector(t.n * u.d + t.d * u.n + t.n * u.n * DELTA, t.d * u.d)


def tangle_product(t: BracketVector, u: BracketVector) -> BracketVector:
    """Vertical product ``t * u``."""
    return BracketVector(t.n * u.n, t.d * u.n + t.n * u.d + t.d * u.d * DELTA)


def mirror(t: BracketVector) -> BracketVector:
    return BracketVector(bar(t.n), bar(t.d))


def rot(t: BracketVector) -> BracketVector:
    return BracketVector(t.d, t.n)


def inv(t: BracketVector) -> BracketVector:
    return BracketVector(bar(t.d), bar(t.n))


def v_map(t: BracketVector) -> LaurentPoly:
    """Close ``[inf]`` to a loop (``delta``) and ``[0]`` to nothing (``1``)."""
    return t.n * DELTA + t.d


def numerator_closure(t: BracketVector) -> LaurentPoly:
    return v_map(rot(t))


def denominator_closure(t: BracketVector) -> LaurentPoly:
    return v_map(t)


def tangle_of_terms(terms: tuple[int, ...]) -> BracketVector:
    """Bracket of ``[[a0], [a1], ..., [an]]``.

    Built from the inside out: ``T[a_k; ...] = [a_k] ⋈ T[a_{k+1}; ...]^in``,
    since inversion turns a tangle of fraction ``y`` into one of ``1/y``.
    """
    t = integer_tangle(terms[-1])
    for a in reversed(terms[:-1]):
        t = tangle_sum(integer_tangle(a), inv(t))
    return t


def tangle_of_fraction(x: Fraction) -> BracketVector:
    """Bracket of the standard rational tangle ``T(x)``, ``x >= 0`` or infinity."""
    if x.is_inf:
        return INF_TANGLE
    if x.p < 0:
        raise ValueError("negative fractions are not supported")
    return tangle_of_terms(continued_fraction_even(x).terms)
