"""Conway-Coxeter friezes of zigzag-type and their bracket invariants.

Entries are addressed as ``(r, i)``: ``r`` is the row counted from the top
row of 1s (``r = 0``) down to the bottom row of 1s (``r = h + 1``), and ``i``
is the position along the row.  Row ``r`` sits half a step further right
than row ``r - 1``, so the unit diamond with left corner ``(r, i)`` is::

        b = (r-1, i+1)
    a = (r, i)      d = (r, i+1)
        c = (r+1, i)

and the frieze rule reads ``a d - b c = 1``.  A zigzag step ``L`` goes from
``(r, i)`` down-left to ``(r+1, i-1)``, a step ``R`` down-right to
``(r+1, i)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from .laurent import ONE, ZERO, LaurentPoly, canonical_up_to_bar, eval_at_A4_minus1
from .lrword import LRWord, fraction_of, i_word, ir_word, r_word
from .rational import HALF, ONE as FONE, ZERO as FZERO, Fraction, stern_brocot_descent
from .tangle import v_map
from .yamada import phi_recursive


class FriezeError(ValueError):
    """A grid that is not a valid (or not a zigzag-type) frieze."""


@dataclass(frozen=True, eq=False)
class Frieze:
    """One period of a frieze: ``rows[r - 1, i]`` is entry ``(r, i)`` for ``0 <= i < period``.

    Only interior rows are stored; the boundary rows of 1s are implicit.
    Row ``r`` is drawn offset by ``r / 2`` column widths, which is the
    parity flag of the diamond lattice.
    """

    rows: np.ndarray
    source_word: LRWord | None = None
    meta: dict = field(default_factory=dict)

    @property
    def height(self) -> int:
        """Number of interior rows."""
        return int(self.rows.shape[0])

    @property
    def period(self) -> int:
        """Columns stored: the frieze order ``height + 3``, always a period.

        Symmetric patterns can also repeat after a proper divisor of it;
        :func:`frieze_from_word` records that in ``meta["minimal_period"]``.
        """
        return int(self.rows.shape[1])

    def entry(self, r: int, i: int) -> int:
        if r == 0 or r == self.height + 1:
            return 1
        if not 0 < r <= self.height:
            raise IndexError(f"row {r} outside the frieze")
        return int(self.rows[r - 1, i % self.period])

    @property
    def quiddity(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self.rows[0])

    @property
    def max_entry(self) -> int:
        return int(self.rows.max())

    def bracket(self) -> LaurentPoly:
        """``<Gamma>``; a bare grid is first matched to a word."""
        w = self.source_word if self.source_word is not None else word_of_frieze(self)
        return frieze_bracket(w)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Frieze):
            return NotImplemented
        return self.rows.shape == other.rows.shape and bool(np.array_equal(self.rows, other.rows))

    def __hash__(self) -> int:
        return hash((self.rows.shape, self.rows.tobytes()))


# -- construction ------------------------------------------------------------

def _solve(num: int, den: int, where: tuple[int, int]) -> int:
    if den == 0 or num % den:
        raise FriezeError(f"non-integral entry at {where}: {num}/{den}")
    val = num // den
    if val <= 0:
        raise FriezeError(f"non-positive entry {val} at {where}")
    return val


def zigzag_positions(w: LRWord) -> list[int]:
    """Position ``i`` of the zigzag 1 in rows ``1 .. len(w)+1``, starting at 0."""
    pos = [0]
    for letter in w:
        pos.append(pos[-1] - 1 if letter == "L" else pos[-1])
    return pos


def frieze_from_word(w: LRWord) -> Frieze:
    """The frieze containing a 1-zigzag of shape ``w``.

    Starting from the zigzag and the two boundary rows, entries to the right
    are solved for ``d`` and entries to the left for ``a``; the period is
    then measured from the filled window, not assumed.
    """
    h = len(w) + 1
    zig = zigzag_positions(w)
    span = 3 * (h + 3) + 2
    lo, hi = zig[-1] - span, zig[0] + span
    m: dict[tuple[int, int], int] = {}
    for r in range(1, h + 1):
        m[(r, zig[r - 1])] = 1

    def get(r: int, i: int) -> int:
        return 1 if r == 0 or r == h + 1 else m[(r, i)]

    for i in range(zig[-1] + 1, hi + 1):
        for r in range(1, h + 1):
            if i > zig[r - 1]:
                a, b, c = get(r, i - 1), get(r - 1, i), get(r + 1, i - 1)
                m[(r, i)] = _solve(1 + b * c, a, (r, i))
    for i in range(zig[0] - 1, lo - 1, -1):
        for r in range(h, 0, -1):
            if i < zig[r - 1]:
                d, b, c = get(r, i + 1), get(r - 1, i + 1), get(r + 1, i)
                m[(r, i)] = _solve(1 + b * c, d, (r, i))

    left, right = zig[0] + 1 - span // 2, zig[0] + span // 2
    window = np.array([[m[(r, i)] for i in range(left, right + 1)] for r in range(1, h + 1)],
                      dtype=np.int64)
    order = h + 3
    minimal = _measure_period(window)
    if order % minimal or not np.array_equal(window[:, order:], window[:, :-order]):
        raise FriezeError(f"pattern for {w} does not repeat after {order} columns")
    rows = window[:, -left:-left + order].copy()
    return Frieze(rows, w, {"minimal_period": minimal})


def _measure_period(window: np.ndarray) -> int:
    width = window.shape[1]
    for p in range(1, width // 2 + 1):
        if np.array_equal(window[:, p:], window[:, :-p]):
            return p
    raise FriezeError("no period found inside the computed window")


def frieze_from_quiddity(quiddity: list[int] | tuple[int, ...]) -> Frieze:
    """Build a frieze from one period of its first interior row.

    Along a down-right diagonal (fixed ``i``) entries obey the continuant
    ``m(r+1, i) = a_{i+r} m(r, i) - m(r-1, i)`` with ``a`` the first row.
    Raises :class:`FriezeError` unless the result closes with a row of 1s
    and stays positive.
    """
    a = [int(v) for v in quiddity]
    n = len(a)
    if n < 3:
        raise FriezeError("a frieze period needs at least three entries")
    h = n - 3
    grid = np.zeros((h, n), dtype=np.int64)
    for i in range(n):
        prev, cur = 0, 1  # the virtual row of 0s above, then the row of 1s
        for r in range(1, h + 2):
            nxt = a[(i + r - 1) % n] * cur - prev
            prev, cur = cur, nxt
            if r <= h:
                if cur <= 0:
                    raise FriezeError(f"non-positive entry {cur} in row {r}")
                grid[r - 1, i] = cur
        if cur != 1:
            raise FriezeError(f"quiddity {a} does not close to a row of 1s")
    f = Frieze(grid)
    validate(f)
    return f


# -- validation --------------------------------------------------------------

def diamonds(f: Frieze) -> Iterator[tuple[tuple[int, int], int, int, int, int]]:
    """Every unit diamond ``((r, i), a, b, c, d)`` of one period."""
    for r in range(1, f.height + 1):
        for i in range(f.period):
            yield (r, i), f.entry(r, i), f.entry(r - 1, i + 1), f.entry(r + 1, i), f.entry(r, i + 1)
    # diamonds whose left corner is on a boundary row
    for i in range(f.period):
        yield (0, i), 1, 1, f.entry(1, i), 1
        h = f.height + 1
        yield (h, i), 1, f.entry(h - 1, i + 1), 1, 1


def validate(f: Frieze) -> None:
    """Check positivity, integrality and every diamond; raise on failure."""
    if f.rows.ndim != 2 or f.rows.shape[0] < 1:
        raise FriezeError("frieze needs at least one interior row")
    if (f.rows <= 0).any():
        raise FriezeError("frieze has a non-positive entry")
    for where, a, b, c, d in diamonds(f):
        if where[0] in (0, f.height + 1):
            continue
        if a * d - b * c != 1:
            raise FriezeError(f"diamond at {where} has ad - bc = {a * d - b * c}")


def is_valid(f: Frieze) -> bool:
    try:
        validate(f)
    except FriezeError:
        return False
    return True


# -- symmetries and equality -------------------------------------------------

def translate(f: Frieze, s: int) -> Frieze:
    """Shift every row ``s`` positions to the left."""
    return Frieze(np.roll(f.rows, -s, axis=1), f.source_word)


def mirror(f: Frieze) -> Frieze:
    """Reflection in a vertical line: entry ``(r, i)`` becomes ``(r, -i - r)``."""
    h, n = f.rows.shape
    rows = np.empty_like(f.rows)
    for r in range(1, h + 1):
        for i in range(n):
            rows[r - 1, i] = f.rows[r - 1, (-i - r) % n]
    return Frieze(rows, i_word(f.source_word) if f.source_word is not None else None)


def flip_rows(f: Frieze) -> Frieze:
    """Reflection in a horizontal line: row ``r`` becomes row ``h + 1 - r``.

    Entry ``(r, i)`` is taken from ``(h + 1 - r, i + r)``; the shift keeps
    the diamond lattice aligned.  For a frieze this is the glide-reflection
    image up to translation.
    """
    h, n = f.rows.shape
    rows = np.empty_like(f.rows)
    for r in range(1, h + 1):
        for i in range(n):
            rows[r - 1, i] = f.rows[h - r, (i + r) % n]
    return Frieze(rows, ir_word(f.source_word) if f.source_word is not None else None)


def vertical_reflection(f: Frieze) -> Frieze:
    """The reflection that turns the frieze of ``w`` into that of ``i(w)``.

    This is the mirror in a vertical axis; :func:`flip_rows` would return the
    same frieze up to translation.
    """
    return mirror(f)


def translation_offset(f: Frieze, g: Frieze) -> int | None:
    """Smallest ``s`` with ``translate(f, s) == g``, or ``None``."""
    if f.rows.shape != g.rows.shape:
        return None
    for s in range(f.period):
        if np.array_equal(np.roll(f.rows, -s, axis=1), g.rows):
            return s
    return None


def frieze_equal(f: Frieze, g: Frieze) -> bool:
    """Equal as bi-infinite patterns up to horizontal translation."""
    return translation_offset(f, g) is not None


@dataclass(frozen=True)
class FriezeComparison:
    translation: bool
    glide: bool
    mirror: bool

    @property
    def any(self) -> bool:
        return self.translation or self.glide or self.mirror


def compare_friezes(f: Frieze, g: Frieze) -> FriezeComparison:
    """Which symmetry, if any, carries ``f`` onto ``g``."""
    return FriezeComparison(
        translation=frieze_equal(f, g),
        glide=frieze_equal(flip_rows(f), g),
        mirror=frieze_equal(mirror(f), g),
    )


# -- word reconstruction -----------------------------------------------------

def find_zigzags(f: Frieze) -> list[tuple[int, LRWord]]:
    """All 1-zigzags as ``(start position in row 1, word)``, one period."""
    h = f.height
    found = []
    for start in range(f.period):
        if f.entry(1, start) != 1:
            continue
        stack = [(1, start, "")]
        while stack:
            r, i, letters = stack.pop()
            if r == h:
                found.append((start, LRWord(letters)))
                continue
            for letter, ni in (("R", i), ("L", i - 1)):
                if f.entry(r + 1, ni) == 1:
                    stack.append((r + 1, ni, letters + letter))
    return sorted(found, key=lambda t: (t[0], t[1].letters))


def word_of_frieze(f: Frieze) -> LRWord:
    """Word of the first 1-zigzag found; ``FriezeError`` if there is none."""
    zigzags = find_zigzags(f)
    if not zigzags:
        raise FriezeError("not zigzag-type: no 1-zigzag joins the boundary rows")
    return zigzags[0][1]


# -- bracket of a frieze -----------------------------------------------------

def frieze_bracket(w: LRWord) -> LaurentPoly:
    """``<Gamma(w)> = v(phi(x))`` for the fraction ``x`` of ``w``."""
    return v_map(phi_recursive(fraction_of(w)))


def frieze_bracket_canonical(w: LRWord) -> LaurentPoly:
    return canonical_up_to_bar(frieze_bracket(w))


_MT = LaurentPoly.monomial(-1, 4)
_MT_INV = LaurentPoly.monomial(-1, -4)


@lru_cache(maxsize=None)
def frieze_bracket_recursive(w: LRWord) -> LaurentPoly:
    """``<Gamma(w)>`` from the letter-prefix recursions alone.

    ``R^k L u`` and ``L^k R u`` peel one letter off the leading run.  Words
    made of a single repeated letter fall back to the virtual words at
    ``0/1`` and ``1/1``, whose bracket is 1.
    """
    s = w.letters
    if s == "":
        return LaurentPoly({4: -1, -4: -1})
    if s == "L":
        return LaurentPoly({4: -1, 0: 1, -8: 1})
    if s == "R":
        return LaurentPoly({8: 1, 0: 1, -4: -1})
    head = s[0]
    k = len(s) - len(s.lstrip(head))
    if k == len(s):
        shorter = frieze_bracket_recursive(LRWord(s[1:]))
        if head == "L":
            return _MT * ONE + _MT_INV * shorter
        return _MT * shorter + _MT_INV * ONE
    rest = LRWord(s[k + 1:])
    peeled = LRWord(s[1:])
    if head == "R":
        return _MT * frieze_bracket_recursive(peeled) + _MT_INV * frieze_bracket_recursive(rest)
    return _MT * frieze_bracket_recursive(rest) + _MT_INV * frieze_bracket_recursive(peeled)


# -- Q / R decomposition -----------------------------------------------------

_QR_CACHE: dict[Fraction, tuple[LaurentPoly, LaurentPoly]] = {
    FZERO: (ZERO, ONE), FONE: (ZERO, ONE), HALF: (ONE, ZERO)}


def qr_polynomials(x: Fraction) -> tuple[LaurentPoly, LaurentPoly]:
    """``(Q_x, R_x)`` in ``t = A^4``, stored as polynomials in ``A``."""
    if not (FZERO < x < FONE):
        raise ValueError(f"{x} is not in (0, 1)")
    if x in _QR_CACHE:
        return _QR_CACHE[x]
    for left, right, med in stern_brocot_descent(x):
        if med.q < 2 or med in _QR_CACHE:
            continue  # 1/1 and 1/2 are fixed values, not mediants
        ql, rl = _QR_CACHE[left]
        qr, rr = _QR_CACHE[right]
        _QR_CACHE[med] = (_MT * ql + _MT_INV * qr, _MT * rl + _MT_INV * rr)
    return _QR_CACHE[x]


def bracket_from_qr(x: Fraction) -> LaurentPoly:
    """``(-t - t^-1) Q_x + R_x``."""
    q, r = qr_polynomials(x)
    return LaurentPoly({4: -1, -4: -1}) * q + r


def qr_at_minus1(x: Fraction) -> tuple[int, int]:
    """``(Q_x(-1), R_x(-1))``, checking the case split on ``2p`` versus ``q``."""
    q_poly, r_poly = qr_polynomials(x)
    qv, rv = eval_at_A4_minus1(q_poly), eval_at_A4_minus1(r_poly)
    p, q = x.p, x.q
    if 2 * p > q:
        ok = qv + rv == p and qv == q - p
    elif 2 * p < q:
        ok = qv == p and qv + rv == q - p
    else:
        ok = (qv, rv) == (1, 0)
    if not ok:
        raise AssertionError(f"case split fails at {x}: Q(-1)={qv}, R(-1)={rv}")
    return qv, rv


def determinant_eval(x: Fraction) -> int:
    """``v(phi(x))`` at ``A^4 = -1``."""
    return eval_at_A4_minus1(v_map(phi_recursive(x)))


# -- complete invariant ------------------------------------------------------

@dataclass(frozen=True)
class CcfInvariant:
    fractions: frozenset

    def __post_init__(self) -> None:
        qs = {x.q for x in self.fractions}
        if len(qs) != 1:
            raise ValueError(f"mixed denominators {sorted(qs)}")
        for x in self.fractions:
            if Fraction(x.q - x.p, x.q) not in self.fractions:
                raise ValueError(f"{x} lacks its complement")

    def sorted(self) -> list[Fraction]:
        return sorted(self.fractions)

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.sorted())) + "}"


def _invariant_from_qr(w: LRWord) -> frozenset:
    out = set()
    for u in (w, r_word(w)):
        qv, rv = qr_at_minus1(fraction_of(u))
        den = 2 * qv + rv
        out.add(Fraction.of(qv, den))
        out.add(Fraction.of(qv + rv, den))
    return frozenset(out)


def _invariant_from_words(w: LRWord) -> frozenset:
    x, y = fraction_of(w), fraction_of(r_word(w))
    return frozenset({x, Fraction(x.q - x.p, x.q), y, Fraction(y.q - y.p, y.q)})


def complete_invariant(w: LRWord) -> CcfInvariant:
    """``C_w``, computed from ``Q, R`` at ``-1`` and cross-checked against the word maps."""
    via_qr = _invariant_from_qr(w)
    via_words = _invariant_from_words(w)
    if via_qr != via_words:
        raise AssertionError(f"C_w disagrees for {w}: {via_qr} vs {via_words}")
    return CcfInvariant(via_qr)


def word_images(w: LRWord) -> dict[str, LRWord]:
    return {"w": w, "i": i_word(w), "r": r_word(w), "ir": ir_word(w)}


def fractions_table(w: LRWord) -> dict[str, Fraction]:
    """Fractions of ``w``, ``i(w)``, ``r(w)`` and ``ir(w)``."""
    return {k: fraction_of(u) for k, u in word_images(w).items()}


__all__ = [
    "CcfInvariant", "Frieze", "FriezeComparison", "FriezeError", "bracket_from_qr",
    "compare_friezes", "complete_invariant", "determinant_eval", "find_zigzags", "flip_rows",
    "fractions_table", "frieze_bracket", "frieze_bracket_canonical", "frieze_bracket_recursive",
    "frieze_equal", "frieze_from_quiddity", "frieze_from_word", "is_valid", "mirror",
    "qr_at_minus1", "qr_polynomials", "translate", "translation_offset", "validate",
    "vertical_reflection", "word_of_frieze", "word_images", "zigzag_positions",
]
