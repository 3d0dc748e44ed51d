"""Ancestor triangles and the mediant-recursive bracket map ``phi``.

Two independent routes compute ``phi``:

* :func:`phi_recursive` runs ``phi(x) = -A^4 phi(y) - A^-4 phi(z)`` over the
  parents ``(y, z)`` of ``x``, starting from ``phi(0) = [0]`` and
  ``phi(inf) = A^6 [inf]``.
* :func:`phi_direct` enumerates every descending path through the ancestor
  triangle and sums monomials in the number of fundamental triangles lying
  left or right of each path.  The sides are found from the triangulation
  itself (which triangles a path separates), not from the recursion.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field
from typing import Iterator

from .laurent import ZERO, LaurentPoly, neg_A3_power
from .rational import INF, ZERO as FZERO, ContinuedFraction, Fraction, continued_fraction_even, stern_brocot_descent
from .tangle import INF_TANGLE, ZERO_TANGLE, BracketVector, tangle_of_terms

DEFAULT_PATH_CAP = 10**7

MINUS_A4 = LaurentPoly.monomial(-1, 4)
MINUS_A_4 = LaurentPoly.monomial(-1, -4)

#: weights of the two parents in the phi recursion; read at call time so a
#: test can swap in a broken pair (call clear_caches afterwards)
PHI_WEIGHTS = (MINUS_A4, MINUS_A_4)


class PathCapExceeded(RuntimeError):
    """Path enumeration went past the configured step budget."""


def path_cap() -> int:
    """Step budget for path enumeration; ``FRIEZE_PATH_CAP`` overrides it."""
    env = os.environ.get("FRIEZE_PATH_CAP")
    return int(env) if env else DEFAULT_PATH_CAP


def minus_t_power(k: int) -> LaurentPoly:
    """``(-A^4)**k``."""
    return LaurentPoly.monomial(-1 if k % 2 else 1, 4 * k)


# -- mediant recursion -------------------------------------------------------

def mediant_recursion(x: Fraction, at_zero, at_inf, cache: dict | None = None,
                      left_weight: LaurentPoly = MINUS_A4,
                      right_weight: LaurentPoly = MINUS_A_4):
    """Evaluate ``f(x) = left_weight f(y) + right_weight f(z)`` for parents ``(y, z)``.

    Values only need ``+`` and left multiplication by a Laurent polynomial.
    Walks down the Stern-Brocot tree, so every parent is computed before its
    mediant; ``cache`` (keyed by fraction) is read and filled on the way.
    """
    if x == FZERO:
        return at_zero
    if x.is_inf:
        return at_inf
    values = {FZERO: at_zero, INF: at_inf}
    for left, right, med in stern_brocot_descent(x):
        if cache is not None and med in cache:
            values[med] = cache[med]
            continue
        val = _scale(left_weight, values[left]) + _scale(right_weight, values[right])
        values[med] = val
        if cache is not None:
            cache[med] = val
    return values[x]


def _scale(c: LaurentPoly, v):
    return v.scale(c) if isinstance(v, BracketVector) else c * v


_phi_cache: dict[Fraction, BracketVector] = {}
_phi_tilde_cache: dict[Fraction, BracketVector] = {}
_cache_lock = threading.Lock()

PHI_ZERO = ZERO_TANGLE
PHI_INF = BracketVector(LaurentPoly.monomial(1, 6), ZERO)


def phi_recursive(x: Fraction) -> BracketVector:
    """``phi(x)`` via the parents recursion, memoized across calls."""
    with _cache_lock:
        return mediant_recursion(x, PHI_ZERO, PHI_INF, _phi_cache, *PHI_WEIGHTS)


def phi_tilde(x: Fraction) -> BracketVector:
    """Same recursion as ``phi`` but with ``phi~(inf) = [inf]``."""
    with _cache_lock:
        return mediant_recursion(x, ZERO_TANGLE, INF_TANGLE, _phi_tilde_cache, *PHI_WEIGHTS)


def clear_caches() -> None:
    with _cache_lock:
        _phi_cache.clear()
        _phi_tilde_cache.clear()


def tr_map(t: BracketVector) -> LaurentPoly:
    """``tr(a[inf] + b[0]) = a(-A^4)(A^4 + 1) + b``."""
    return t.n * LaurentPoly({8: -1, 4: -1}) + t.d


# -- ancestor triangles ------------------------------------------------------

@dataclass(frozen=True)
class FundamentalTriangle:
    left: Fraction
    right: Fraction
    mediant: Fraction


@dataclass(frozen=True)
class AncestorTriangle:
    """Triangulated region spanned by ``x``, ``0/1`` and ``1/0``.

    ``triangles`` are listed top (``0/1, 1/0, 1/1``) to bottom (the one whose
    mediant is ``x``); consecutive triangles share an edge.  ``left_side``
    runs from ``0/1`` down to ``x`` and ``right_side`` from ``1/0`` to ``x``.
    Drawn with ``0/1`` on the negative x-axis, ``1/0`` on the positive
    x-axis and ``x`` on the negative y-axis, as recorded in ``layout``.
    """

    x: Fraction
    triangles: tuple[FundamentalTriangle, ...]
    left_side: tuple[Fraction, ...]
    right_side: tuple[Fraction, ...]
    layout: dict = field(default_factory=lambda: {
        "0/1": "negative x-axis", "1/0": "positive x-axis", "apex": "negative y-axis"},
        compare=False)

    @property
    def l(self) -> int:
        """Number of edges on the left oblique side."""
        return len(self.left_side) - 1

    @property
    def r(self) -> int:
        """Number of edges on the right oblique side."""
        return len(self.right_side) - 1

    @property
    def vertices(self) -> tuple[Fraction, ...]:
        return (FZERO, INF) + tuple(t.mediant for t in self.triangles)

    def parents_of(self, v: Fraction) -> tuple[Fraction, Fraction]:
        for t in self.triangles:
            if t.mediant == v:
                return t.left, t.right
        raise KeyError(v)


def build_triangle(x: Fraction) -> AncestorTriangle:
    if x.is_inf or x.p <= 0:
        raise ValueError(f"ancestor triangles need a positive rational, got {x}")
    tris = tuple(FundamentalTriangle(l, r, m) for l, r, m in stern_brocot_descent(x))
    chain = [t.mediant for t in tris[:-1]]
    left = (FZERO,) + tuple(c for c in chain if c < x) + (x,)
    right = (INF,) + tuple(c for c in chain if c > x) + (x,)
    return AncestorTriangle(x, tris, left, right)


@dataclass(frozen=True)
class DescendingPath:
    """A path from ``0/1`` or ``1/0`` down to the apex along triangle edges."""

    vertices: tuple[Fraction, ...]
    w_left: int
    w_right: int

    @property
    def start(self) -> Fraction:
        return self.vertices[0]


class _PathSides:
    """Classifies fundamental triangles against paths through one triangle.

    Vertices are numbered: ``0/1 -> -2``, ``1/0 -> -1`` and the mediant of
    the ``j``-th fundamental triangle ``-> j``.  An edge is the sorted pair of
    its endpoint numbers.
    """

    def __init__(self, tri: AncestorTriangle):
        index = {FZERO: -2, INF: -1}
        for j, t in enumerate(tri.triangles):
            index[t.mediant] = j
        self.index = index
        self.parents = [(index[t.left], index[t.right]) for t in tri.triangles]
        left_set = {index[v] for v in tri.left_side}
        right_set = {index[v] for v in tri.right_side}
        n = len(tri.triangles)
        # the edge shared by triangle j and j+1 is the parent pair of mediant j+1
        self.cuts = [_edge(*self.parents[j + 1]) for j in range(n - 1)]
        cut_set = set(self.cuts)
        self.boundary: list[list[tuple[tuple[int, int], str]]] = []
        for j in range(n):
            l, r = self.parents[j]
            edges = []
            for a, b in ((l, r), (l, j), (r, j)):
                e = _edge(a, b)
                if e in cut_set:
                    continue
                if e == (-2, -1):
                    side = "top"
                elif a in left_set and b in left_set:
                    side = "left"
                elif a in right_set and b in right_set:
                    side = "right"
                else:
                    raise AssertionError(f"edge {e} is neither shared nor on the boundary")
                edges.append((e, side))
            self.boundary.append(edges)
        self.n = n

    def count(self, path: tuple[int, ...]) -> tuple[int, int]:
        """``(w_left, w_right)`` for a numbered path given top to bottom."""
        used = set(map(_edge, path, path[1:]))
        top_side = "left" if path[0] == -1 else "right"
        w_left = w_right = 0
        start = 0
        for j in range(self.n):
            if j < self.n - 1 and self.cuts[j] not in used:
                continue
            # triangles start..j form one region
            sides = set()
            for k in range(start, j + 1):
                for e, side in self.boundary[k]:
                    if e not in used:
                        sides.add(top_side if side == "top" else side)
            if len(sides) != 1:
                raise AssertionError(f"region {start}..{j} touches sides {sides}")
            if "left" in sides:
                w_left += j + 1 - start
            else:
                w_right += j + 1 - start
            start = j + 1
        return w_left, w_right


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _numbered_paths(sides: _PathSides, budget: int) -> Iterator[tuple[int, ...]]:
    steps = 0
    stack: list[tuple[int, ...]] = [(sides.n - 1,)]
    while stack:
        rev = stack.pop()
        head = rev[-1]
        if head < 0:
            yield rev[::-1]
            continue
        steps += 1
        if steps > budget:
            raise PathCapExceeded(f"more than {budget} path steps")
        left, right = sides.parents[head]
        stack.append(rev + (right,))
        stack.append(rev + (left,))


def descending_paths(tri: AncestorTriangle, cap: int | None = None) -> Iterator[DescendingPath]:
    """Every descending path from ``0/1`` or ``1/0`` to the apex."""
    budget = path_cap() if cap is None else cap
    sides = _PathSides(tri)
    names = {i: v for v, i in sides.index.items()}
    for path in _numbered_paths(sides, budget):
        w_left, w_right = sides.count(path)
        yield DescendingPath(tuple(names[i] for i in path), w_left, w_right)


def phi_direct(x: Fraction, cap: int | None = None) -> BracketVector:
    """``phi(x)`` as a sum over descending paths of the ancestor triangle."""
    if x == FZERO:
        return PHI_ZERO
    if x.is_inf:
        return PHI_INF
    tri = build_triangle(x)
    sides = _PathSides(tri)
    n_coeff: dict[int, int] = {}
    d_coeff: dict[int, int] = {}
    for path in _numbered_paths(sides, path_cap() if cap is None else cap):
        w_left, w_right = sides.count(path)
        if path[0] == -1:
            n_coeff[w_right] = n_coeff.get(w_right, 0) + 1
        else:
            d_coeff[-w_left] = d_coeff.get(-w_left, 0) + 1
    # (-A^4)^k c, then the prefactors A^6 (-A^4)^-r and (-A^4)^l
    n = LaurentPoly({4 * (k - tri.r) + 6: -c if (k - tri.r) % 2 else c for k, c in n_coeff.items()})
    d = LaurentPoly({4 * (k + tri.l): -c if (k + tri.l) % 2 else c for k, c in d_coeff.items()})
    return BracketVector(n, d)


# -- normalization to the tangle bracket -------------------------------------

def normalization_exponent(cf: ContinuedFraction) -> int:
    """Power ``e`` with ``phi = (-A^3)^e <T>`` for the tangle built from ``cf``."""
    return cf.alternating_sum() + (2 if cf.n % 2 else 0)


def bracket_via_phi(x: Fraction) -> BracketVector:
    """``<T(x)>`` recovered from ``phi(x)`` by removing the ``(-A^3)`` power."""
    if x.is_inf:
        return INF_TANGLE
    cf = continued_fraction_even(x)
    return phi_recursive(x).scale(neg_A3_power(-normalization_exponent(cf)))


def tangle_from_terms_normalized(cf: ContinuedFraction) -> BracketVector:
    """``(-A^3)^e <T(cf)>``; should reproduce ``phi`` of the value of ``cf``."""
    return tangle_of_terms(cf.terms).scale(neg_A3_power(normalization_exponent(cf)))
