"""Command-line front end: ``friezeknot {bracket,frieze,triangle,reduce,verify}``."""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .frieze import (
    Frieze, FriezeError, complete_invariant, frieze_bracket, frieze_from_quiddity,
    frieze_from_word, validate, word_of_frieze,
)
from .lrword import LRWord, fraction_of, parse_word, word_of
from .rational import ONE, ZERO, Fraction, continued_fraction_even, parse_fraction
from .recipe import bracket_num, denominator_link_bracket, fold_triangle, reduce_chain
from .render import (
    render_ancestor_triangle, render_folded_triangle, render_frieze, render_quiddity,
    render_reduction,
)
from .yamada import PathCapExceeded, build_triangle


class UsageError(Exception):
    """Bad input on the command line; reported without a traceback."""


def _word_text(w: LRWord) -> str:
    return w.compact()


def _unit_input(args) -> tuple[str, Fraction, LRWord]:
    """``(raw input, fraction, word)`` for commands that live on (0, 1)."""
    if args.word is not None:
        w = parse_word(args.word)
        return args.word, fraction_of(w), w
    x = parse_fraction(args.fraction)
    if not (ZERO < x < ONE):
        raise UsageError(f"{x} is not in (0, 1); words only address fractions there")
    return args.fraction, x, word_of(x)


def _summary(raw: str, x: Fraction, w: LRWord, f: Frieze) -> dict:
    return {
        "input": raw,
        "fraction": str(x),
        "word": _word_text(w),
        "continued_fraction": list(continued_fraction_even(x).terms),
        "bracket": str(frieze_bracket(w)),
        "bracket_num": str(bracket_num(f)),
        "invariant": [str(y) for y in complete_invariant(w).sorted()],
        "period": f.period,
        "max_entry": f.max_entry,
    }


def cmd_bracket(args) -> int:
    raw, x, w = _unit_input(args)
    link = denominator_link_bracket(x)
    if args.denominator_link and not args.json:
        print(link)
        return 0
    f = frieze_from_word(w)
    data = _summary(raw, x, w, f)
    data["denominator_link"] = str(link)
    if args.json:
        print(json.dumps(data, indent=2))
        return 0
    print(f"fraction:           {x}")
    print(f"word:               {data['word']}")
    print(f"continued fraction: {continued_fraction_even(x)}")
    print(f"bracket:            {data['bracket']}")
    print(f"bracket_num:        {data['bracket_num']}")
    print(f"{f'D({x}):':<20}{link}")
    print(f"invariant:          {{{', '.join(data['invariant'])}}}")
    return 0


def _parse_quiddity(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"bad quiddity {text!r}") from exc


def cmd_frieze(args) -> int:
    if args.quiddity is not None:
        f = frieze_from_quiddity(_parse_quiddity(args.quiddity))
        validate(f)
        w = word_of_frieze(f)  # raises "not zigzag-type" when no 1-zigzag exists
        x, raw = fraction_of(w), args.quiddity
        f = frieze_from_word(w)
    else:
        raw, x, w = _unit_input(args)
        f = frieze_from_word(w)
    if args.json:
        data = _summary(raw, x, w, f)
        data["rows"] = [[int(v) for v in row] for row in f.rows]
        print(json.dumps(data, indent=2))
        return 0
    minimal = f.meta.get("minimal_period", f.period)
    print(f"frieze of {_word_text(w)} ({x}): height {f.height}, period {f.period}"
          + (f" (repeats after {minimal})" if minimal != f.period else ""))
    print(render_frieze(f))
    print(f"quiddity: {render_quiddity(f)}")
    print(f"maximum:  {f.max_entry}")
    if args.fold:
        print(render_folded_triangle(fold_triangle(f)))
    return 0


def cmd_triangle(args) -> int:
    if args.word is not None:
        x = fraction_of(parse_word(args.word))
    else:
        x = parse_fraction(args.fraction)
    if x.is_inf or x.p <= 0:
        raise UsageError(f"ancestor triangles need a positive rational, got {x}")
    tri = build_triangle(x)
    if args.json:
        print(json.dumps({
            "fraction": str(x), "l": tri.l, "r": tri.r,
            "left_side": [str(v) for v in tri.left_side],
            "right_side": [str(v) for v in tri.right_side],
            "triangles": [[str(t.left), str(t.right), str(t.mediant)] for t in tri.triangles],
        }, indent=2))
        return 0
    print(render_ancestor_triangle(tri))
    return 0


def cmd_reduce(args) -> int:
    raw, x, w = _unit_input(args)
    steps = reduce_chain(w)
    if args.json:
        print(json.dumps([{"word": _word_text(s.word), "fraction": str(s.fraction),
                           "parent_ok": s.parent_ok} for s in steps], indent=2))
        return 0
    print(render_reduction(_word_text(w), str(x), steps))
    return 0


def cmd_verify(args) -> int:
    if args.max_q < 1 or args.max_len < 1:
        raise UsageError("bounds must be at least 1")
    results = verify_mod.run_suites(args.max_q, args.max_len, workers=args.workers)
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps([{"suite": r.name, "passed": r.passed, "checked": r.checked,
                           "failures": r.failures, "report": r.report} for r in results], indent=2))
        return 0 if ok else 1
    for r in results:
        print(r.line())
        for key, val in r.report.items():
            if isinstance(val, dict):
                print(f"      {key}:")
                for k, n in val.items():
                    print(f"        {k}: {n}")
            else:
                print(f"      {key}: {val}")
    total = sum(r.checked for r in results)
    failed = sum(not r.passed for r in results)
    print(f"{'PASS' if ok else 'FAIL'}: {len(results) - failed}/{len(results)} suites, {total} checks"
          f" (max q {args.max_q}, max word length {args.max_len})")
    return 0 if ok else 1


def _add_input(p: argparse.ArgumentParser, quiddity: bool = False) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--fraction", help="p/q")
    group.add_argument("--word", help="word over L, R with ^ exponents; '-' is the empty word")
    if quiddity:
        group.add_argument("--quiddity", help="one period of the first row, e.g. '1,4,1,2,4,1,2,3'")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="friezeknot",
        description="Kauffman brackets of rational tangles read off Conway-Coxeter friezes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bracket", help="<Gamma>, its numerator part, <D(p/q)> and C_w")
    _add_input(p)
    p.add_argument("--denominator-link", action="store_true", help="print only <D(p/q)>")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("frieze", help="draw the frieze of a word or fraction")
    _add_input(p, quiddity=True)
    p.add_argument("--fold", action="store_true", help="also draw the folded signed triangle")
    p.set_defaults(func=cmd_frieze)

    p = sub.add_parser("triangle", help="draw the ancestor triangle of a positive fraction")
    _add_input(p)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("reduce", help="drop leading letters down to the empty word")
    _add_input(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="run the exhaustive property sweeps")
    p.add_argument("--max-q", type=int, default=100)
    p.add_argument("--max-len", type=int, default=10)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FriezeError, PathCapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
