"""One test per acceptance criterion; each prints a PASS or FAIL line."""

import json
import time
from pathlib import Path

from friezeknot import verify
from friezeknot.frieze import FriezeError, frieze_bracket, frieze_from_quiddity, frieze_from_word, word_of_frieze
from friezeknot.laurent import parse_poly
from friezeknot.lrword import EMPTY, LRWord, fraction_of, i_word, ir_word, parse_word, r_word, word_of
from friezeknot.rational import Fraction, continued_fraction_even
from friezeknot.recipe import bracket_num, denominator_link_bracket

REPORT_DIR = Path(__file__).resolve().parent.parent / "reports"


def record(log, n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    print(line)
    log.append(line)
    return ok


def run(*suites, max_q, max_len):
    results = verify.run_suites(max_q, max_len, suites=list(suites))
    return results, all(r.passed for r in results), "; ".join(r.line() for r in results)


def test_golden_values(acceptance_log):
    start = time.perf_counter()
    rl2rl = parse_word("RL^2RL")
    f = frieze_from_word(rl2rl)
    checks = [
        frieze_bracket(EMPTY) == parse_poly("-A^4-A^-4"),
        frieze_bracket(LRWord("L")) == parse_poly("-A^4+1+A^-8"),
        frieze_bracket(LRWord("R")) == parse_poly("A^8+1-A^-4"),
        frieze_bracket(rl2rl) == parse_poly("-A^12+2A^8-3A^4+4-3A^-4+3A^-8-2A^-12+A^-16"),
        bracket_num(f) == parse_poly("1-A^-4+2A^-8-2A^-12+A^-16"),
        denominator_link_bracket(Fraction(7, 19))
        == parse_poly("A^15-2A^11+3A^7-4A^3+3A^-1-3A^-5+2A^-9-A^-13"),
        [str(word_of(Fraction(*x))) for x in ((1, 2), (1, 5), (2, 7), (3, 8), (3, 7))]
        == ["∅", "LLL", "RLL", "LRL", "RRL"],
        [str(fraction_of(g(LRWord("LLLR")))) for g in (lambda w: w, i_word, r_word, ir_word)]
        == ["5/9", "4/9", "2/9", "7/9"],
        [str(g(LRWord("LLLR"))) for g in (i_word, r_word, ir_word)] == ["RRRL", "RLLL", "LRRR"],
        [str(fraction_of(g(LRWord("LLRR")))) for g in (lambda w: w, i_word, r_word, ir_word)]
        == ["7/10", "3/10", "3/10", "7/10"],
        [str(g(LRWord("LLRR"))) for g in (i_word, r_word, ir_word)] == ["RRLL", "RRLL", "LLRR"],
        continued_fraction_even(Fraction(7, 19)).terms == (0, 2, 1, 2, 2),
    ]
    fig12 = frieze_from_word(parse_word("L^2R^2L"))
    row = " ".join(map(str, fig12.quiddity * 2))
    checks += ["2 4 2 2 1 4 2 3 1" in row, fig12.max_entry == 17]
    elapsed = time.perf_counter() - start
    ok = all(checks) and elapsed < 1.0
    assert record(acceptance_log, 1, ok, f"{sum(checks)}/{len(checks)} golden values in {elapsed:.2f}s")


def test_oracle_triangulation(acceptance_log):
    (res,), ok, text = run(verify.suite_phi_oracle, max_q=100, max_len=1)
    ok = ok and res.seconds < 30
    assert record(acceptance_log, 2, ok, text)


def test_tangle_bridge(acceptance_log):
    _, ok, text = run(verify.suite_phi_tangle, verify.suite_stepping_stone, max_q=50, max_len=1)
    assert record(acceptance_log, 3, ok, text)


def test_recipe(acceptance_log):
    _, ok, text = run(verify.suite_recipe, max_q=50, max_len=10)
    assert record(acceptance_log, 4, ok, text)


def test_determinant_law(acceptance_log):
    _, ok, text = run(verify.suite_determinant, max_q=200, max_len=1)
    _, ok2, text2 = run(verify.suite_recipe, max_q=50, max_len=1)
    assert record(acceptance_log, 5, ok and ok2, f"{text}; numerators via {text2}")


def test_case_split(acceptance_log):
    _, ok, text = run(verify.suite_qr, max_q=200, max_len=1)
    assert record(acceptance_log, 6, ok, text)


def test_degree_bounds(acceptance_log):
    (res,), ok, text = run(verify.suite_degrees, max_q=1, max_len=12)
    ok = ok and res.checked == 3 * 8190 and res.seconds < 60
    assert record(acceptance_log, 7, ok, text)


def test_symmetries(acceptance_log):
    _, ok, text = run(verify.suite_bar_symmetries, verify.suite_word_maps, verify.suite_friezes,
                      verify.suite_word_recursion, max_q=100, max_len=12)
    assert record(acceptance_log, 8, ok, text)


def test_completeness(acceptance_log):
    (res,), ok, text = run(verify.suite_completeness, max_q=1, max_len=10)
    REPORT_DIR.mkdir(exist_ok=True)
    (REPORT_DIR / "completeness_relation.json").write_text(json.dumps(res.report, indent=2) + "\n")
    assert record(acceptance_log, 9, ok, f"{text}; relation report in reports/completeness_relation.json")


def test_well_formed_friezes(acceptance_log):
    _, ok, text = run(verify.suite_friezes, max_q=1, max_len=10)
    try:
        word_of_frieze(frieze_from_quiddity((1, 4, 1, 2, 4, 1, 2, 3)))
        rejected = False
    except FriezeError as exc:
        rejected = "not zigzag-type" in str(exc)
    assert record(acceptance_log, 10, ok and rejected, f"{text}; non-zigzag rejected: {rejected}")
