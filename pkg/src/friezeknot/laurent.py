"""Sparse Laurent polynomials in one variable ``A`` with integer coefficients.

Values are immutable.  Coefficients are plain Python ints but are held to the
signed 64-bit range; any operation that would leave it raises
:class:`OverflowError` instead of silently growing.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def _checked(c: int) -> int:
    if c > INT64_MAX or c < INT64_MIN:
        raise OverflowError(f"coefficient {c} leaves the signed 64-bit range")
    return c


class LaurentPoly:
    """An element of Z[A, A^-1], stored as ``{exponent: coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be int")
            acc[e] = _checked(acc.get(e, 0) + c)
        self._terms = {e: c for e, c in acc.items() if c != 0}
        self._hash = None

    # constructors ---------------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        """Wrap an already checked dict, dropping zero coefficients."""
        obj = cls.__new__(cls)
        obj._terms = {e: c for e, c in terms.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    # accessors ------------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        """Yield ``(exponent, coefficient)`` pairs, highest exponent first."""
        for e in sorted(self._terms, reverse=True):
            yield e, self._terms[e]

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = _checked(out.get(e, 0) + c)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: _checked(-c) for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = _checked(out.get(e, 0) + _checked(c1 * c2))
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial is not a unit")
            return LaurentPoly({e * n: c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``A**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    # comparison / hashing -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def sort_key(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.items())

    # text -----------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"


def _coerce(x: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
A = LaurentPoly.monomial(1, 1)
#: loop value -A^2 - A^-2
DELTA = LaurentPoly({2: -1, -2: -1})


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def bar(p: LaurentPoly) -> LaurentPoly:
    """The involution A -> A^-1."""
    return LaurentPoly._raw({-e: c for e, c in p._terms.items()})


def eval_at_A4_minus1(p: LaurentPoly) -> int:
    """Substitute A^4 = -1.  Every exponent of ``p`` must be a multiple of 4."""
    total = 0
    for e, c in p._terms.items():
        if e % 4:
            raise ValueError(f"exponent {e} is not a multiple of 4")
        total += c if (e // 4) % 2 == 0 else -c
    return total


def canonical_up_to_bar(p: LaurentPoly) -> LaurentPoly:
    """Pick a fixed representative of ``{p, bar(p)}``.

    Polynomials are ordered by their ``(exponent, coefficient)`` sequence,
    highest exponent first, compared lexicographically; the smaller wins.
    """
    q = bar(p)
    return q if q.sort_key() < p.sort_key() else p


def t_power(k: int) -> LaurentPoly:
    """``t**k`` with ``t = A^4``."""
    return LaurentPoly.monomial(1, 4 * k)


def neg_A3_power(k: int) -> LaurentPoly:
    """``(-A^3)**k`` for any integer ``k``."""
    return LaurentPoly.monomial(-1 if k % 2 else 1, 3 * k)


# text format ---------------------------------------------------------------

def format_poly(p: LaurentPoly) -> str:
    """Render with descending exponents, e.g. ``-A^12+2A^8-3A^4+4-3A^-4``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, (e, c) in enumerate(p.items()):
        sign = "-" if c < 0 else ("+" if i else "")
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "A" if e == 1 else f"A^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        parts.append(sign + body)
    return "".join(parts)


_TERM = re.compile(r"([+-]?)(\d*)(A(?:\^(-?\d+))?)?")


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :func:`format_poly`; whitespace is ignored."""
    s = "".join(text.split())
    if s in ("", "0"):
        return ZERO
    terms: list[tuple[int, int]] = []
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        if pos and not m.group(1):
            raise ValueError(f"missing sign before {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        mag = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) is not None else 1
        else:
            exp = 0
        terms.append((exp, sign * mag))
        pos = m.end()
    return LaurentPoly(terms)
