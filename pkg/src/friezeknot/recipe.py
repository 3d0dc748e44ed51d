"""Reading the bracket off a frieze by folding a curve at its maximum.

Around the maximum ``M`` the frieze looks like::

          a
        s   v
      b   M   d
        t   u
          c

The ``(t -> M -> v)`` curve is the diagonal through ``t``, ``M`` and ``v``;
from ``M`` it falls to the bottom row of 1s through ``t`` and to the top row
through ``v``.  Folding it at ``M`` gives the two flanks of a triangle in
which every node is the sum of its two children.  Edges to a left child are
``-`` and edges to a right child ``+``, so the left flank is all ``-`` and
the right flank all ``+``.  Paths from ``M`` to the floor 1 (the left end)
or the ceiling 1 (the right end) are weighted ``+ -> -A^4``, ``- -> -A^-4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .frieze import Frieze, FriezeError, frieze_from_word, word_of_frieze
from .laurent import LaurentPoly, neg_A3_power
from .lrword import LRWord, fraction_of, word_of
from .rational import Fraction, continued_fraction_even, parents
from .yamada import PathCapExceeded, path_cap

FLOOR = "floor"
CEILING = "ceiling"


@dataclass(frozen=True)
class Diamond:
    """``M`` at ``(row, pos)`` and its neighbours as laid out in the module docstring."""

    row: int
    pos: int
    M: int
    s: int
    t: int
    u: int
    v: int
    a: int
    b: int
    c: int
    d: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.M, self.s, self.t, self.u, self.v, self.a, self.b, self.c, self.d)


def _entry(f: Frieze, r: int, i: int) -> int:
    """Entry with the frieze continued by a row of 0s beyond each row of 1s."""
    if r < 0 or r > f.height + 1:
        return 0
    return f.entry(r, i)


def max_positions(f: Frieze) -> list[tuple[int, int]]:
    """Every ``(row, pos)`` holding the maximum, leftmost first within a period."""
    rows, cols = np.nonzero(f.rows == f.rows.max())
    return sorted(((int(r) + 1, int(i)) for r, i in zip(rows, cols)), key=lambda p: (p[1], p[0]))


def _check_maximum(f: Frieze) -> list[tuple[int, int]]:
    """The maximum must occur once per period, up to the glide reflection."""
    found = max_positions(f)
    h = f.height
    if len(found) == 2:
        (r1, i1), (r2, i2) = found
        # a glide maps (r, i) to (h + 1 - r, i + r + k) for a fixed shift k
        if r1 + r2 != h + 1:
            raise FriezeError(f"maximum {f.max_entry} occurs at unrelated places {found}")
    elif len(found) != 1:
        raise FriezeError(f"maximum {f.max_entry} occurs {len(found)} times per period: {found}")
    return found


def diamond_at(f: Frieze, r: int, i: int) -> Diamond:
    return Diamond(
        row=r, pos=i, M=_entry(f, r, i),
        s=_entry(f, r - 1, i), v=_entry(f, r - 1, i + 1),
        t=_entry(f, r + 1, i - 1), u=_entry(f, r + 1, i),
        a=_entry(f, r - 2, i + 1), c=_entry(f, r + 2, i - 1),
        b=_entry(f, r, i - 1), d=_entry(f, r, i + 1),
    )


def extract_diamond(f: Frieze) -> Diamond:
    """Neighbourhood of the leftmost maximum in the stored period."""
    r, i = _check_maximum(f)[0]
    return diamond_at(f, r, i)


def choose_diamond(f: Frieze) -> Diamond:
    """Occurrence of ``M`` whose upper-left neighbour is the numerator of the source word.

    The two occurrences of ``M`` are glide images; one has ``s = p`` for the
    word ``w`` and the other has ``s`` equal to the numerator of ``ir(w)``.
    Without a source word the leftmost occurrence is used.
    """
    found = _check_maximum(f)
    if f.source_word is None:
        return diamond_at(f, *found[0])
    x = fraction_of(f.source_word)
    for r, i in found:
        dia = diamond_at(f, r, i)
        if dia.s == x.p and dia.M == x.q:
            return dia
    raise FriezeError(f"no occurrence of {f.max_entry} has s = {x.p} for {f.source_word}")


# -- folding ------------------------------------------------------------------

@dataclass(frozen=True)
class Node:
    """A node of the folded triangle: ``("L", j)``, ``("R", j)`` or the apex ``("M", 0)``."""

    side: str
    index: int
    value: int


@dataclass(frozen=True)
class FoldedTriangle:
    """Children-sum triangle obtained by folding the ``(t -> M -> v)`` curve.

    ``left_flank`` runs ``M, t, ..., 1`` (down to the floor) and
    ``right_flank`` runs ``M, v, ..., 1`` (up to the ceiling).  ``children``
    maps a node to ``(left child, right child)``.
    """

    diamond: Diamond
    left_flank: tuple[int, ...]
    right_flank: tuple[int, ...]
    children: dict

    @property
    def apex(self) -> Node:
        return Node("M", 0, self.diamond.M)

    @property
    def floor(self) -> Node:
        return Node("L", len(self.left_flank) - 1, 1)

    @property
    def ceiling(self) -> Node:
        return Node("R", len(self.right_flank) - 1, 1)

    def edges(self) -> Iterator[tuple[Node, Node, str]]:
        """``(parent, child, sign)`` for every edge, apex first."""
        for node, (left, right) in self.children.items():
            yield node, left, "-"
            yield node, right, "+"


def fold_triangle(f: Frieze) -> FoldedTriangle:
    """Fold the ``/`` diagonal through ``M`` and rebuild the signed triangle."""
    dia = choose_diamond(f)
    r, i = dia.row, dia.pos
    left = [dia.M]
    for k in range(1, f.height + 2 - r):
        left.append(f.entry(r + k, i - k))
    right = [dia.M]
    for k in range(1, r + 1):
        right.append(f.entry(r - k, i + k))
    if left[-1] != 1 or right[-1] != 1:
        raise FriezeError("curve through the maximum does not end on the rows of 1s")

    def node(side: str, j: int) -> Node:
        if j == 0:
            return Node("M", 0, dia.M)
        return Node(side, j, left[j] if side == "L" else right[j])

    children: dict[Node, tuple[Node, Node]] = {}
    children[node("M", 0)] = (node("L", 1), node("R", 1))
    a, b = 1, 1
    while a < len(left) - 1 or b < len(right) - 1:
        la, rb = left[a], right[b]
        if la > rb and a < len(left) - 1:
            children[node("L", a)] = (node("L", a + 1), node("R", b))
            a += 1
        elif rb > la and b < len(right) - 1:
            children[node("R", b)] = (node("L", a), node("R", b + 1))
            b += 1
        else:
            raise FriezeError(f"fold gets stuck at {la} / {rb}")
    for parent, (lc, rc) in children.items():
        if lc.value + rc.value != parent.value:
            raise FriezeError(f"{parent.value} is not {lc.value} + {rc.value}")
    return FoldedTriangle(dia, tuple(left), tuple(right), children)


@dataclass(frozen=True)
class SignedPath:
    nodes: tuple[Node, ...]
    signs: str

    @property
    def plus_count(self) -> int:
        return self.signs.count("+")

    @property
    def minus_count(self) -> int:
        return self.signs.count("-")

    @property
    def end(self) -> str:
        return FLOOR if self.nodes[-1].side == "L" else CEILING

    def monomial(self) -> LaurentPoly:
        """``(-1)^(p+q) A^(4(p-q))``."""
        p, q = self.plus_count, self.minus_count
        return LaurentPoly.monomial(-1 if (p + q) % 2 else 1, 4 * (p - q))

    def __str__(self) -> str:
        """Signed steps such as ``19 -8 -5 +3 -2 +[1]``; ``(1)`` is the floor, ``[1]`` the ceiling."""
        parts = [str(self.nodes[0].value)]
        for sign, n in zip(self.signs, self.nodes[1:-1]):
            parts.append(f"{sign}{n.value}")
        parts.append(self.signs[-1] + ("(1)" if self.end == FLOOR else "[1]"))
        return " ".join(parts)


def signed_paths(tri: FoldedTriangle, cap: int | None = None) -> Iterator[SignedPath]:
    """Decreasing paths from ``M`` to either end 1, depth first, left child first."""
    budget = path_cap() if cap is None else cap
    floor, ceiling = tri.floor, tri.ceiling
    steps = 0
    stack = [((tri.apex,), "")]
    while stack:
        nodes, signs = stack.pop()
        head = nodes[-1]
        if head == floor or head == ceiling:
            yield SignedPath(nodes, signs)
            continue
        steps += 1
        if steps > budget:
            raise PathCapExceeded(f"more than {budget} path steps below {tri.diamond.M}")
        lc, rc = tri.children[head]
        stack.append((nodes + (rc,), signs + "+"))
        stack.append((nodes + (lc,), signs + "-"))


def _path_sum(f: Frieze, only: str | None) -> LaurentPoly:
    tri = fold_triangle(f)
    coeffs: dict[int, int] = {}
    for path in signed_paths(tri):
        if only is not None and path.end != only:
            continue
        p, q = path.plus_count, path.minus_count
        e = 4 * (p - q)
        coeffs[e] = coeffs.get(e, 0) + (-1 if (p + q) % 2 else 1)
    return LaurentPoly(coeffs)


def bracket_via_paths(f: Frieze) -> LaurentPoly:
    """Sum of path monomials to both ends of the folded triangle."""
    return _path_sum(f, None)


def bracket_num(f: Frieze) -> LaurentPoly:
    """Sum of path monomials ending on the floor 1 only."""
    return _path_sum(f, FLOOR)


def link_exponent(x: Fraction) -> int:
    """``sum (-1)^(i+1) a_i`` over the even expansion of ``x``."""
    return -continued_fraction_even(x).alternating_sum()


def denominator_link_bracket(x: Fraction) -> LaurentPoly:
    """``<D(x)>`` from the frieze of ``word_of(x)`` by the path sum."""
    f = frieze_from_word(word_of(x))
    return neg_A3_power(link_exponent(x)) * bracket_via_paths(f)


# -- reduction chain ----------------------------------------------------------

@dataclass(frozen=True)
class ReductionStep:
    word: LRWord
    fraction: Fraction
    parent_ok: bool


def reduce_chain(w: LRWord) -> list[ReductionStep]:
    """Drop the leading letter until the word is empty.

    Each new fraction should be one of the parents of the previous one;
    ``parent_ok`` records whether it is.
    """
    out = []
    prev = fraction_of(w)
    cur = w
    while len(cur):
        cur = LRWord(cur.letters[1:])
        x = fraction_of(cur)
        out.append(ReductionStep(cur, x, x in parents(prev)))
        prev = x
    return out


def frieze_word(f: Frieze) -> LRWord:
    return f.source_word if f.source_word is not None else word_of_frieze(f)
