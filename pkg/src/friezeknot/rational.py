"""Irreducible fractions, Farey arithmetic and even-length continued fractions.

Fractions follow the convention ``q >= 0`` and ``1/0`` for infinity, which
is why :class:`Fraction` here is not :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence


@dataclass(frozen=True, order=False)
class Fraction:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 0:
            raise ValueError("denominator must be non-negative")
        if self.q == 0 and self.p != 1:
            raise ValueError("infinity is spelled 1/0")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not irreducible")

    @classmethod
    def of(cls, p: int, q: int = 1) -> "Fraction":
        """Normalize signs and common factors, then build."""
        if q == 0:
            if p == 0:
                raise ValueError("0/0 is not a fraction")
            return INF
        if q < 0:
            p, q = -p, -q
        g = gcd(p, q)
        return cls(p // g, q // g)

    @property
    def is_inf(self) -> bool:
        return self.q == 0

    def __lt__(self, other: "Fraction") -> bool:
        return self.p * other.q < other.p * self.q

    def __le__(self, other: "Fraction") -> bool:
        return self.p * other.q <= other.p * self.q

    def __gt__(self, other: "Fraction") -> bool:
        return other < self

    def __ge__(self, other: "Fraction") -> bool:
        return other <= self

    def __str__(self) -> str:
        return "inf" if self.is_inf else f"{self.p}/{self.q}"

    def __repr__(self) -> str:
        return f"Fraction({self.p}, {self.q})"


ZERO = Fraction(0, 1)
ONE = Fraction(1, 1)
HALF = Fraction(1, 2)
INF = Fraction(1, 0)


def parse_fraction(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer, or ``"inf"``."""
    s = text.strip()
    if s.lower() in ("inf", "1/0"):
        return INF
    if "/" in s:
        num, den = s.split("/", 1)
        p, q = int(num), int(den)
    else:
        p, q = int(s), 1
    if q == 0:
        raise ValueError(f"bad fraction {text!r}")
    return Fraction.of(p, q)


def det(x: Fraction, y: Fraction) -> int:
    """``q_x p_y - p_x q_y``; equals 1 for an ascending Farey pair."""
    return x.q * y.p - x.p * y.q


def is_farey_neighbor(x: Fraction, y: Fraction) -> bool:
    return abs(det(x, y)) == 1


def farey_sum(x: Fraction, y: Fraction) -> Fraction:
    """Mediant of an ascending Farey pair."""
    if det(x, y) != 1:
        raise ValueError(f"{x} and {y} are not ascending Farey neighbors")
    return Fraction(x.p + y.p, x.q + y.q)


def stern_brocot_descent(x: Fraction) -> Iterator[tuple[Fraction, Fraction, Fraction]]:
    """Walk the Stern-Brocot tree from the root towards ``x``.

    Yields ``(left, right, mediant)`` for every node visited, ending with the
    node equal to ``x``.  ``x`` must be positive and finite.
    """
    if x.is_inf or x.p <= 0:
        raise ValueError(f"{x} is not a positive finite rational")
    left, right = ZERO, INF
    while True:
        med = Fraction(left.p + right.p, left.q + right.q)
        yield left, right, med
        if med == x:
            return
        if x < med:
            right = med
        else:
            left = med


def parents(x: Fraction) -> tuple[Fraction, Fraction]:
    """The ascending Farey pair whose mediant is ``x``."""
    if x.is_inf or x.p == 0:
        raise ValueError("0 and infinity have no parents")
    for left, right, _ in stern_brocot_descent(x):
        pass
    return left, right


# continued fractions ------------------------------------------------------

@dataclass(frozen=True)
class ContinuedFraction:
    """``[a0; a1, ..., an]`` with ``a0 >= 0`` and the rest positive."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("empty continued fraction")
        if self.terms[0] < 0 or any(a < 1 for a in self.terms[1:]):
            raise ValueError(f"bad partial quotients {self.terms}")

    @property
    def n(self) -> int:
        """Index of the last partial quotient."""
        return len(self.terms) - 1

    def value(self) -> Fraction:
        return evaluate(self.terms)

    def alternating_sum(self) -> int:
        """``a0 - a1 + a2 - ... `` (sign of ``a_i`` is ``(-1)^i``)."""
        return sum(a if i % 2 == 0 else -a for i, a in enumerate(self.terms))

    def __str__(self) -> str:
        head, *rest = self.terms
        return f"[{head}; {', '.join(map(str, rest))}]" if rest else f"[{head}]"


def evaluate(terms: Sequence[int]) -> Fraction:
    """Value of ``[a0; a1, ..., an]``."""
    p, q = 1, 0
    for a in reversed(terms):
        p, q = a * p + q, p
    return Fraction.of(p, q)


def euclid_terms(x: Fraction) -> list[int]:
    if x.is_inf or x.p < 0:
        raise ValueError(f"{x} is not a non-negative finite rational")
    p, q = x.p, x.q
    terms = []
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    return terms


def continued_fraction_even(x: Fraction) -> ContinuedFraction:
    """The expansion of ``x`` whose last index ``n`` is even."""
    terms = euclid_terms(x)
    if len(terms) % 2 == 0:  # n odd
        if terms[-1] >= 2:
            terms[-1:] = [terms[-1] - 1, 1]
        else:
            last = terms.pop()
            terms[-1] += last
    return ContinuedFraction(tuple(terms))


def continued_fraction_odd(x: Fraction) -> ContinuedFraction:
    """The expansion of ``x`` with odd ``n``; needs ``x`` not an integer <= 0."""
    terms = list(continued_fraction_even(x).terms)
    if terms[-1] >= 2:
        terms[-1:] = [terms[-1] - 1, 1]
    elif len(terms) > 1:
        last = terms.pop()
        terms[-1] += last
    else:
        raise ValueError(f"{x} has no odd-length expansion")
    return ContinuedFraction(tuple(terms))


def ir_fraction(x: Fraction) -> Fraction:
    """Reverse the even expansion ``[0; a1..an]`` of ``x`` in (0, 1)."""
    if not (ZERO < x < ONE):
        raise ValueError(f"{x} is not in (0, 1)")
    terms = continued_fraction_even(x).terms
    return evaluate((0,) + tuple(reversed(terms[1:])))


def fractions_in_unit_interval(max_q: int) -> Iterator[Fraction]:
    """All irreducible ``p/q`` in (0, 1) with ``q <= max_q``, by denominator."""
    for q in range(2, max_q + 1):
        for p in range(1, q):
            if gcd(p, q) == 1:
                yield Fraction(p, q)


def positive_fractions(max_q: int, max_value: int | None = None) -> Iterator[Fraction]:
    """Irreducible ``p/q > 0`` with ``q <= max_q`` and ``p/q <= max_value``.

    ``max_value`` defaults to ``max_q`` so the set stays finite.
    """
    bound = max_q if max_value is None else max_value
    for q in range(1, max_q + 1):
        for p in range(1, bound * q + 1):
            if gcd(p, q) == 1:
                yield Fraction(p, q)
