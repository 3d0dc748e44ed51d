"""Exhaustive property sweeps over small fractions and words.

Each suite returns a :class:`SuiteResult`; :func:`run_suites` runs them all
and the ``verify`` subcommand prints the summary.  Suites only read shared
state (the memo tables in :mod:`friezeknot.yamada`), so they can be spread
over worker processes.
"""

from __future__ import annotations

import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterator

from . import yamada
from .frieze import (
    compare_friezes, complete_invariant, determinant_eval, flip_rows, frieze_bracket,
    frieze_bracket_recursive, frieze_equal, frieze_from_word, is_valid, mirror, qr_at_minus1,
    bracket_from_qr, word_of_frieze,
)
from .laurent import LaurentPoly, bar, canonical_up_to_bar, eval_at_A4_minus1
from .lrword import all_words, fraction_of, i_word, ir_word, join, r_word, word_of
from .rational import (
    ONE, ZERO, Fraction, continued_fraction_even, continued_fraction_odd, evaluate, ir_fraction,
    parents,
)
from .recipe import bracket_num, bracket_via_paths, denominator_link_bracket, reduce_chain
from .tangle import denominator_closure, tangle_of_fraction, v_map

MAX_FAILURES = 5

# path enumeration and frieze building grow fast; these suites stop here
PHI_DIRECT_CEILING = 100
RECIPE_CEILING = 50
FRIEZE_WORD_CEILING = 10


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    report: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok and len(self.failures) < MAX_FAILURES:
            self.failures.append(what)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name}: {self.checked} checks in {self.seconds:.2f}s"
        if self.failures:
            text += "\n      " + "\n      ".join(self.failures)
        return text


# -- domains -------------------------------------------------------------------

def positive_domain(max_n: int) -> Iterator[Fraction]:
    """``p/q`` with ``1 <= p, q <= max_n``."""
    for q in range(1, max_n + 1):
        for p in range(1, max_n + 1):
            if gcd(p, q) == 1:
                yield Fraction(p, q)


def unit_domain(max_q: int) -> Iterator[Fraction]:
    """``p/q`` in (0, 1) with ``q <= max_q``."""
    for q in range(2, max_q + 1):
        for p in range(1, q):
            if gcd(p, q) == 1:
                yield Fraction(p, q)


def nonempty_words(max_len: int):
    return all_words(max_len, min_len=1)


_MT = LaurentPoly.monomial(-1, 4)
_MT_INV = LaurentPoly.monomial(-1, -4)


# -- phi ------------------------------------------------------------------------

def suite_phi_oracle(max_q: int, max_len: int) -> SuiteResult:
    res = SuiteResult("phi: direct path sum equals recursion")
    for x in positive_domain(min(max_q, PHI_DIRECT_CEILING)):
        res.check(yamada.phi_direct(x) == yamada.phi_recursive(x), f"phi differs at {x}")
    return res


def suite_phi_linearity(max_q: int, max_len: int) -> SuiteResult:
    res = SuiteResult("phi: v is linear over the parents")
    for x in positive_domain(max_q):
        y, z = parents(x)
        lhs = v_map(yamada.phi_recursive(x))
        rhs = _MT * v_map(yamada.phi_recursive(y)) + _MT_INV * v_map(yamada.phi_recursive(z))
        res.check(lhs == rhs, f"v(phi) not linear at {x}")
    return res


def suite_phi_trace(max_q: int, max_len: int) -> SuiteResult:
    res = SuiteResult("phi: v(phi) equals tr(phi~)")
    for x in positive_domain(max_q):
        res.check(v_map(yamada.phi_recursive(x)) == yamada.tr_map(yamada.phi_tilde(x)),
                  f"v(phi) != tr(phi~) at {x}")
    return res


def suite_phi_tangle(max_q: int, max_len: int) -> SuiteResult:
    res = SuiteResult("phi: (-A^3) normalization gives the tangle bracket")
    for x in positive_domain(min(max_q, RECIPE_CEILING)):
        res.check(yamada.bracket_via_phi(x) == tangle_of_fraction(x),
                  f"normalized phi differs from tangle bracket at {x}")
        if x != ONE:
            cf = continued_fraction_odd(x)
            res.check(yamada.tangle_from_terms_normalized(cf) == yamada.phi_recursive(x),
                      f"odd expansion {cf} of {x} misses the +2 shift")
    return res


def suite_stepping_stone(max_q: int, max_len: int) -> SuiteResult:
    res = SuiteResult("phi: [l;m,n] = [l;m,n-1] # [l;m]")
    for l in range(0, 6):
        for m in range(1, 6):
            for n in range(2, 6):
                x, y, z = evaluate((l, m, n)), evaluate((l, m, n - 1)), evaluate((l, m))
                lhs = yamada.phi_recursive(x)
                rhs = yamada.phi_recursive(y).scale(_MT) + yamada.phi_recursive(z).scale(_MT_INV)
                res.check(parents(x) == (y, z) and lhs == rhs, f"stepping stone fails at [{l};{m},{n}]")
    return res


# -- words ---------------------------------------------------------------------

def suite_word_maps(max_q: int, max_len: int) -> SuiteResult:
    res = SuiteResult("words: round trips, letter maps and joins")
    for w in all_words(max_len):
        x = fraction_of(w)
        res.check(word_of(x) == w, f"round trip fails for {w}")
        # i swaps to the complement
        res.check(fraction_of(i_word(w)) == Fraction(x.q - x.p, x.q), f"i(w) is not the complement for {w}")
        # appending a letter
        res.check(fraction_of(w + "L") == Fraction(x.p, x.p + x.q), f"wL wrong for {w}")
        res.check(fraction_of(w + "R") == Fraction(x.q, 2 * x.q - x.p), f"wR wrong for {w}")
        # reversal through the parents
        (pq, rs) = parents(x)
        res.check(fraction_of(r_word(w)) == Fraction.of(pq.q, x.q), f"r(w) wrong for {w}")
        res.check(fraction_of(ir_word(w)) == Fraction.of(rs.q, x.q), f"ir(w) wrong for {w}")
        # ir on words matches ir on fractions
        res.check(ir_word(w) == word_of(ir_fraction(x)), f"ir does not commute with w() at {w}")
        # appending through the odd expansion of the complement
        rest = continued_fraction_odd(Fraction(x.q - x.p, x.q)).terms[1:]
        res.check(fraction_of(w + "R") == evaluate((0, 1) + rest), f"wR expansion wrong for {w}")
        res.check(fraction_of(w + "L") == evaluate((0, 2, rest[0] - 1) + rest[1:]),
                  f"wL expansion wrong for {w}")
    for x in unit_domain(max_q):
        y, z = parents(x)
        if ZERO < y and z < ONE:
            wy, wz = word_of(y), word_of(z)
            res.check(word_of(x) == join(wy, wz), f"join fails at {x}")
            res.check(i_word(word_of(x)) == join(i_word(wz), i_word(wy)), f"i does not reverse join at {x}")
    return res


# -- brackets of friezes ----------------------------------------------------------

def suite_word_recursion(max_q: int, max_len: int) -> SuiteResult:
    res = SuiteResult("bracket: word recursion equals v(phi)")
    for w in all_words(max_len):
        res.check(frieze_bracket_recursive(w) == frieze_bracket(w), f"word recursion differs at {w}")
    return res


def suite_degrees(max_q: int, max_len: int) -> SuiteResult:
    res = SuiteResult("bracket: degree bounds and sign pattern")
    for w in nonempty_words(max_len):
        g = frieze_bracket(w)
        res.check(g.min_degree() == -4 * (w.count_L + 1), f"min degree wrong for {w}")
        res.check(g.max_degree() == 4 * (w.count_R + 1), f"max degree wrong for {w}")
        ok = all(e % 4 == 0 and (c > 0) == ((e // 4) % 2 == 0) for e, c in g.items())
        res.check(ok, f"sign pattern broken for {w}: {g}")
    return res


def suite_bar_symmetries(max_q: int, max_len: int) -> SuiteResult:
    res = SuiteResult("bracket: bar matches ir and the complement")
    for x in unit_domain(max_q):
        g = v_map(yamada.phi_recursive(x))
        res.check(v_map(yamada.phi_recursive(ir_fraction(x))) == bar(g), f"bar vs ir fails at {x}")
        res.check(v_map(yamada.phi_recursive(Fraction(x.q - x.p, x.q))) == bar(g),
                  f"bar vs complement fails at {x}")
    return res


def suite_qr(max_q: int, max_len: int) -> SuiteResult:
    res = SuiteResult("bracket: Q/R decomposition")
    for x in unit_domain(max_q):
        res.check(bracket_from_qr(x) == v_map(yamada.phi_recursive(x)), f"(-t-1/t)Q+R differs at {x}")
        try:
            qr_at_minus1(x)
            res.check(True, "")
        except AssertionError as exc:
            res.check(False, str(exc))
    return res


def suite_determinant(max_q: int, max_len: int) -> SuiteResult:
    res = SuiteResult("bracket: value at A^4 = -1 is the denominator")
    for q in range(1, max_q + 1):
        for p in range(1, q + 1):
            if gcd(p, q) == 1:
                x = Fraction(p, q)
                res.check(determinant_eval(x) == q, f"determinant of {x} is {determinant_eval(x)}")
    return res


# -- friezes ---------------------------------------------------------------------

def suite_friezes(max_q: int, max_len: int) -> SuiteResult:
    res = SuiteResult("frieze: validity, reflections and word recovery")
    for w in all_words(min(max_len, FRIEZE_WORD_CEILING)):
        f = frieze_from_word(w)
        res.check(is_valid(f) and f.period == len(w) + 4, f"invalid frieze for {w}")
        res.check(f.max_entry == fraction_of(w).q, f"maximum of {w} is not the denominator")
        res.check(frieze_equal(mirror(f), frieze_from_word(i_word(w))), f"mirror is not CCF(i(w)) for {w}")
        res.check(frieze_equal(flip_rows(f), f), f"glide symmetry missing for {w}")
        res.check(frieze_equal(f, frieze_from_word(ir_word(w))), f"CCF(w) != CCF(ir(w)) for {w}")
        res.check(canonical_up_to_bar(mirror(f).bracket()) == canonical_up_to_bar(f.bracket()),
                  f"mirror changes the bracket of {w}")
        res.check(word_of_frieze(f.__class__(f.rows)) in (w, ir_word(w)), f"word recovery fails for {w}")
    return res


def _frieze_class_key(w) -> bytes:
    f = frieze_from_word(w)
    keys = []
    for g in (f, mirror(f)):
        for s in range(g.period):
            keys.append(bytes(str(g.rows.shape), "ascii") + g.rows.take(
                range(s, s + g.period), axis=1, mode="wrap").tobytes())
    return min(keys)


def suite_completeness(max_q: int, max_len: int) -> SuiteResult:
    """``C_w = C_w'`` exactly when the friezes agree up to translation or mirror."""
    res = SuiteResult("invariant: C_w separates friezes")
    by_inv: dict[frozenset, list] = defaultdict(list)
    by_frieze: dict[bytes, list] = defaultdict(list)
    for w in all_words(min(max_len, FRIEZE_WORD_CEILING)):
        try:
            inv = complete_invariant(w).fractions
        except AssertionError as exc:
            res.check(False, str(exc))
            continue
        by_inv[inv].append(w)
        by_frieze[_frieze_class_key(w)].append(w)
    groups_inv = {frozenset(v) for v in by_inv.values()}
    groups_frieze = {frozenset(v) for v in by_frieze.values()}
    res.check(groups_inv == groups_frieze, "C_w classes and frieze classes differ")
    relations: Counter = Counter()
    for group in groups_inv:
        ws = sorted(group, key=lambda u: u.letters)
        for a_idx, a in enumerate(ws):
            for b in ws[a_idx + 1:]:
                cmp = compare_friezes(frieze_from_word(a), frieze_from_word(b))
                if b == ir_word(a):
                    kind = "ir"
                elif b == i_word(a):
                    kind = "i"
                elif b == r_word(a):
                    kind = "r"
                else:
                    kind = "other"
                relations[(kind, cmp.translation, cmp.mirror)] += 1
                res.check(cmp.translation or cmp.mirror, f"{a} and {b} share C_w but not a frieze")
        res.check(all(u in (ws[0], i_word(ws[0]), r_word(ws[0]), ir_word(ws[0])) for u in ws),
                  f"class {ws} is larger than the four images")
    res.report = {
        "classes": len(groups_inv),
        "words": sum(len(g) for g in groups_inv),
        "pair relations (image, translation, mirror)": {
            f"{k[0]} translation={k[1]} mirror={k[2]}": n for k, n in sorted(relations.items())},
    }
    return res


# -- recipe --------------------------------------------------------------------

def suite_recipe(max_q: int, max_len: int) -> SuiteResult:
    res = SuiteResult("recipe: folded path sums")
    for x in unit_domain(min(max_q, RECIPE_CEILING)):
        w = word_of(x)
        f = frieze_from_word(w)
        g = bracket_via_paths(f)
        vphi = v_map(yamada.phi_recursive(x))
        res.check(g == vphi, f"path sum differs from v(phi) at {x}")
        res.check(canonical_up_to_bar(g) == canonical_up_to_bar(bracket_from_qr(x)),
                  f"path sum differs from the Q/R route at {x}")
        num = bracket_num(f)
        res.check(eval_at_A4_minus1(num) == x.p, f"numerator paths of {x} count {eval_at_A4_minus1(num)}")
        res.check(eval_at_A4_minus1(g - num) == x.q - x.p, f"ceiling paths of {x} do not count q - p")
        res.check(denominator_link_bracket(x) == denominator_closure(tangle_of_fraction(x)),
                  f"link bracket from the frieze differs from the tangle at {x}")
    for w in all_words(min(max_len, FRIEZE_WORD_CEILING)):
        res.check(all(st.parent_ok for st in reduce_chain(w)), f"reduction chain of {w} leaves the parents")
    return res


SUITES: list[Callable[[int, int], SuiteResult]] = [
    suite_phi_oracle, suite_phi_linearity, suite_phi_trace, suite_phi_tangle, suite_stepping_stone,
    suite_word_maps, suite_word_recursion, suite_degrees, suite_bar_symmetries, suite_qr,
    suite_determinant, suite_friezes, suite_completeness, suite_recipe,
]


def _timed(suite: Callable[[int, int], SuiteResult], max_q: int, max_len: int) -> SuiteResult:
    start = time.perf_counter()
    try:
        res = suite(max_q, max_len)
    except Exception as exc:  # a crash is a failure of that suite, not of the run
        res = SuiteResult(suite.__name__, failures=[f"{type(exc).__name__}: {exc}"])
    res.seconds = time.perf_counter() - start
    return res


def run_suites(max_q: int, max_len: int, workers: int = 1,
               suites: list[Callable[[int, int], SuiteResult]] | None = None) -> list[SuiteResult]:
    if max_q < 1 or max_len < 0:
        raise ValueError("bounds must be max_q >= 1 and max_len >= 0")
    chosen = SUITES if suites is None else suites
    if workers <= 1:
        return [_timed(s, max_q, max_len) for s in chosen]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_timed, s, max_q, max_len) for s in chosen]
        return [fut.result() for fut in futures]
