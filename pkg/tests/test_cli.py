import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from qhopf.cli import run

from cli_cases import CASES

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue().replace(str(HERE), "<tests>"), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_report(name):
    argv, want_code = CASES[name]
    code, text, _ = _run(argv)
    assert code == want_code
    assert text == (GOLDEN / f"{name}.txt").read_text(encoding="utf-8")


def test_reports_are_deterministic():
    argv = CASES["demo_prop5_11"][0]
    assert _run(argv) == _run(argv)


def test_key_value_format():
    _, text, _ = _run(["demo", "remark5_9"])
    for line in text.splitlines():
        key, sep, _ = line.partition("=")
        assert sep and key and " " not in key


def test_spec_examples():
    code, text, _ = _run(["verify", "--preset", "kalpha_phi", "-p", "3"])
    assert code == 0 and "check.pentagon=pass" in text
    _, text, _ = _run(CASES["cohomology_alpha_product"][0])
    assert "cohomology.h3.dim=4" in text
    _, text, _ = _run(["demo", "remark5_9"])
    assert "remark5_9.exp_of_coboundary=1 + (1+g)⊗(1+g)" in text
    assert "remark5_9.verdict=differ" in text


def test_json_mirrors_text():
    _, text, _ = _run(["demo", "thm5_17"])
    _, js, _ = _run(["demo", "thm5_17", "--json"])
    pairs = dict(line.split("=", 1) for line in text.splitlines())
    assert json.loads(js) == pairs


def test_usage_error_exit_code():
    code, _, _ = _run(["frobnicate"])
    assert code == 2
    code, _, err = _run(["verify"])
    assert code == 2 and "no input" in err


def test_stdin_spec(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO((HERE / "data" / "kx2.spec").read_text()))
    code, text, _ = _run(["verify", "-"])
    assert code == 0 and "dim=2" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qhopf", "demo", "remark5_9"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "demo_remark5_9.txt").read_text(encoding="utf-8")
