import json
import shlex
import subprocess
import sys
from pathlib import Path

import pytest

from friezeknot.cli import main

GOLDEN = Path(__file__).parent / "golden"
CASES = [line.split("|", 1) for line in (GOLDEN / "cases.txt").read_text().splitlines() if line]


@pytest.mark.parametrize("name, cmd", CASES, ids=[c[0] for c in CASES])
def test_golden_output(name, cmd, capsys):
    assert main(shlex.split(cmd)) == 0
    assert capsys.readouterr().out == (GOLDEN / name).read_text()


def test_worked_example_lines(capsys):
    main(["bracket", "--word", "RL^2RL"])
    assert "-A^12+2A^8-3A^4+4-3A^-4+3A^-8-2A^-12+A^-16" in capsys.readouterr().out
    main(["bracket", "--fraction", "1/2"])
    assert "-A^4-A^-4" in capsys.readouterr().out
    main(["frieze", "--word", "L^2R^2L"])
    assert "2 4 2 2 1 4 2 3 1" in capsys.readouterr().out
    main(["triangle", "--fraction", "7/4"])
    assert "r=2 l=4" in capsys.readouterr().out


def test_json_schema(capsys):
    main(["bracket", "--fraction", "7/19", "--json"])
    data = json.loads(capsys.readouterr().out)
    assert {"input", "fraction", "word", "continued_fraction", "bracket", "bracket_num",
            "invariant", "period", "max_entry"} <= set(data)
    assert data["continued_fraction"] == [0, 2, 1, 2, 2]
    assert data["max_entry"] == 19


@pytest.mark.parametrize("argv, message", [
    (["bracket", "--fraction", "3/2"], "not in (0, 1)"),
    (["bracket", "--word", "RLX"], "cannot parse"),
    (["frieze", "--quiddity", "1,4,1,2,4,1,2,3"], "not zigzag-type"),
    (["triangle", "--fraction", "0/1"], "positive rational"),
])
def test_errors_exit_nonzero(argv, message, capsys):
    assert main(argv) != 0
    assert message in capsys.readouterr().err


def test_both_inputs_rejected():
    with pytest.raises(SystemExit) as exc:
        main(["bracket", "--word", "L", "--fraction", "1/3"])
    assert exc.value.code != 0


def test_verify_trivial_bounds(capsys):
    assert main(["verify", "--max-q", "1", "--max-len", "1"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "friezeknot", "bracket", "--fraction", "7/19",
                          "--denominator-link"], capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "A^15-2A^11+3A^7-4A^3+3A^-1-3A^-5+2A^-9-A^-13"
