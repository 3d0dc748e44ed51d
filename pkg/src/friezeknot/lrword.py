"""Words over {L, R} and their bijection with the rationals in (0, 1).

``word_of`` and ``fraction_of`` are deliberately computed by different
routes (a Stern-Brocot walk versus a left fold of letter-append rules) so
that the round trip is a real check.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .rational import ONE, ZERO, Fraction, det


@dataclass(frozen=True)
class LRWord:
    letters: str = ""

    def __post_init__(self) -> None:
        if set(self.letters) - {"L", "R"}:
            raise ValueError(f"LR word may only contain L and R: {self.letters!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __add__(self, other: "LRWord | str") -> "LRWord":
        other_letters = other.letters if isinstance(other, LRWord) else other
        return LRWord(self.letters + other_letters)

    def __radd__(self, other: str) -> "LRWord":
        return LRWord(other + self.letters)

    @property
    def count_L(self) -> int:
        return self.letters.count("L")

    @property
    def count_R(self) -> int:
        return self.letters.count("R")

    def __str__(self) -> str:
        return self.letters or "∅"

    def compact(self) -> str:
        """Run-length form such as ``RL^2RL``; ``-`` for the empty word."""
        if not self.letters:
            return "-"
        out = []
        for m in re.finditer(r"L+|R+", self.letters):
            run = m.group()
            out.append(run[0] if len(run) == 1 else f"{run[0]}^{len(run)}")
        return "".join(out)


EMPTY = LRWord("")

_WORD_TOKEN = re.compile(r"([LR])(?:\^(\d+))?")


def parse_word(text: str) -> LRWord:
    """Parse ``"RL^2RL"``-style input; ``"-"``, ``""`` and ``"∅"`` are empty."""
    s = "".join(text.split())
    if s in ("", "-", "∅"):
        return EMPTY
    out = []
    pos = 0
    while pos < len(s):
        m = _WORD_TOKEN.match(s, pos)
        if m is None:
            raise ValueError(f"cannot parse LR word at {s[pos:]!r}")
        out.append(m.group(1) * int(m.group(2) or 1))
        pos = m.end()
    return LRWord("".join(out))


def word_of(x: Fraction) -> LRWord:
    """Stern-Brocot walk from 1/2 down to ``x``, letters read backwards."""
    if not (ZERO < x < ONE):
        raise ValueError(f"{x} is not in (0, 1)")
    left, right = ZERO, ONE
    walk = []
    while True:
        med = Fraction(left.p + right.p, left.q + right.q)
        if med == x:
            break
        if x < med:
            walk.append("L")
            right = med
        else:
            walk.append("R")
            left = med
    return LRWord("".join(reversed(walk)))


def fraction_of(w: LRWord) -> Fraction:
    """Fold letters left to right from 1/2: ``L: p/q -> p/(p+q)``, ``R: p/q -> q/(2q-p)``."""
    p, q = 1, 2
    for letter in w.letters:
        if letter == "L":
            p, q = p, p + q
        else:
            p, q = q, 2 * q - p
    return Fraction(p, q)


def i_word(w: LRWord) -> LRWord:
    """Swap L and R."""
    return LRWord(w.letters.translate(str.maketrans("LR", "RL")))


def r_word(w: LRWord) -> LRWord:
    """Reverse the letters."""
    return LRWord(w.letters[::-1])


def ir_word(w: LRWord) -> LRWord:
    return i_word(r_word(w))


def join(w: LRWord, w2: LRWord) -> LRWord:
    """Word of the Farey sum of two ascending neighbors given by their words."""
    x, y = fraction_of(w), fraction_of(w2)
    if det(x, y) != 1:
        raise ValueError(f"{x} and {y} are not ascending Farey neighbors")
    if len(w) == len(w2):
        raise ValueError(f"join undefined for words of equal length {len(w)}")
    return "L" + w2 if len(w) < len(w2) else "R" + w


def all_words(max_len: int, min_len: int = 0) -> Iterator[LRWord]:
    """Every word with ``min_len <= len <= max_len``, shortest first."""
    for n in range(min_len, max_len + 1):
        for letters in product("LR", repeat=n):
            yield LRWord("".join(letters))
