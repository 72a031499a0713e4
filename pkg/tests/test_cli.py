from __future__ import annotations

import json
import subprocess
import sys

import pytest

from fpgroups.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_normalize(capsys):
    assert run(capsys, "normalize", "--p", "2", "x0^2*x1^-1*x0")[:2] == (0, "x0^3*x2^-1")
    assert run(capsys, "normalize", "--p", "2", "e")[:2] == (0, "e")
    assert run(capsys, "normalize", "--p", "3", "x1*x4*x1^-1")[:2] == (0, "x2")


def test_normalize_diagram_input_and_outputs(capsys):
    assert run(capsys, "normalize", "--p", "3", "(.(...).)->(..(...))")[:2] == (0, "x1")
    assert run(capsys, "normalize", "--p", "2", "x0", "--output", "diagram")[1] == "((..).)->(.(..))"
    data = json.loads(run(capsys, "normalize", "--p", "2", "x1*x0", "--output", "json")[1])
    assert data["normal_form"] == "x0*x2" and data["positive"] == [[0, 1], [2, 1]]
    assert run(capsys, "normalize", "--p", "2", "x0", "--output", "dot")[1].startswith("digraph")


def test_metric(capsys):
    code, out, _ = run(capsys, "metric", "--p", "2", "x0^3*x2^-1")
    data = json.loads(out)
    assert code == 0 and data["D"] == 6 and data["N"] == 4
    data = json.loads(run(capsys, "metric", "--p", "2", "e", "--exact")[1])
    assert (data["D"], data["N"], data["exact_length"]) == (0, 0, 0)
    assert json.loads(run(capsys, "metric", "--p", "3", "x1", "--exact")[1])["exact_length"] == 1


def test_metric_cap_exceeded(capsys):
    code, out, _ = run(capsys, "metric", "--p", "2", "x0^3*x2^-1", "--exact", "--cap", "2")
    assert code == 3 and json.loads(out)["exact_length"] == "cap exceeded"


def test_embed_and_shift(capsys):
    assert run(capsys, "embed", "--kind", "dense", "--from", "4", "--to", "2", "x1")[:2] == (0, "x1^3")
    assert run(capsys, "embed", "--kind", "sparse", "--from", "2", "--to", "3", "x1")[:2] == (0, "x2")
    assert run(capsys, "embed", "--kind", "power", "--from", "4", "--to", "2", "x0")[1] == "x0^2*x1*x2^-1"
    assert run(capsys, "shift", "--p", "3", "--k", "2", "x1")[:2] == (0, "x3")
    assert run(capsys, "shift", "--p", "3", "--k", "2", "--caret", "x1")[:2] == (0, "x3")


def test_ball(capsys):
    assert run(capsys, "ball", "--p", "2", "--radius", "1", "--format", "csv")[:2] == (0, "0,1\n1,4")
    data = json.loads(run(capsys, "ball", "--p", "3", "--radius", "2", "--format", "json")[1])
    assert data["sphere_sizes"] == [1, 6, 30]


def test_map(capsys):
    assert run(capsys, "map", "--p", "2", "--rep", "line", "--eval", "3/2", "x1")[1] == "2"
    assert run(capsys, "map", "--p", "2", "--eval", "1/4", "x0")[1] == "1/2"
    assert json.loads(run(capsys, "map", "--p", "2", "x0")[1])["variant"] == "unit"
    assert run(capsys, "map", "--p", "2", "--format", "csv", "x0")[1].startswith("x,y")
    assert run(capsys, "map", "--p", "2", "--eval", "abc", "x0")[0] == 1
    assert run(capsys, "map", "--p", "2", "--eval", "2", "x0")[0] == 2


def test_render(capsys):
    code, out, _ = run(capsys, "render", "--p", "3", "x1", "--part", "source")
    assert code == 0 and out.startswith("digraph")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "shifts", "--seed", "7", "--samples", "20")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--suite", "metrics", "--seed", "7", "--samples", "20", "--json")
    assert code == 0 and all(r["passed"] for r in json.loads(out)["results"])


def test_verify_failure_exit(capsys, monkeypatch):
    from fpgroups import cli
    from fpgroups.verify import PropertyResult

    bad = PropertyResult("shifts", "broken", checked=1, failures=1, counterexample="x0")
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: [bad])
    code, _, err = run(capsys, "verify", "--suite", "shifts")
    assert code == 4 and "x0" in err


@pytest.mark.parametrize(
    "argv, code",
    [
        (["verify", "--suite", "bogus"], 1),
        (["normalize", "--p", "2", "x0^^"], 1),
        (["normalize", "--p", "2", "(..)->."], 1),
        (["frobnicate"], 1),
        (["normalize", "--p", "1", "x0"], 2),
        (["normalize", "--p", "2", "x-1"], 2),
        (["embed", "--kind", "sparse", "--from", "3", "--to", "4", "x0"], 2),
        (["embed", "--kind", "power", "--from", "6", "--to", "2", "x0"], 2),
        (["ball", "--p", "2", "--radius", "6", "--max-states", "100"], 3),
    ],
)
def test_exit_codes(capsys, argv, code):
    try:
        got = main(argv)
    except SystemExit as exc:
        got = exc.code
    assert got == code
    assert capsys.readouterr().err


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "fpgroups.cli", "verify", "--suite", "bogus"], capture_output=True, text=True
    )
    assert proc.returncode == 1
