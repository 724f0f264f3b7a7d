import io
import json
import subprocess
import sys

import pytest

from cli_cases import every_subcommand, write_inputs
from pointless.cli import run


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    return write_inputs(tmp_path_factory.mktemp("cli"))


def _run(argv):
    buf = io.StringIO()
    code = run(argv, buf)
    return code, buf.getvalue()


def test_eval_taxicab(files):
    assert _run(["eval", "--term", files["taxi"], "--point", "3,-4"]) == (0, "7\n")


def test_unsat(files):
    assert _run(["unsat", "--n", "4"]) == (0, "checked 32, satisfying 0\n")


def test_forced_sup_two_boxes(files):
    code, out = _run(["forced-sup", "--open", files["two_boxes"], "--term", files["x"], "--tol", "1/100"])
    assert code == 0
    doc = json.loads(out)
    lo, hi = (float(eval(doc[k])) for k in ("lo", "hi"))
    assert abs(lo - 2) <= 0.01 and abs(hi - 3) <= 0.01


def test_force_eq_proves_identity(files):
    code, out = _run(every_subcommand(files)["force-eq"])
    assert code == 0 and json.loads(out)["verdict"] == "proven_within"


def test_worked_distance(files):
    code, out = _run(["dist", "--open", files["strip"], "--point", "0,0"])
    doc = json.loads(out)
    assert code == 0 and (doc["lo"], doc["hi"]) == ("1", "3")


def test_svg_outputs(files):
    for argv in (
        ["obstruct-sqrt", "--format", "svg", "--steps", "16"],
        ["recover", "--open", files["strip"], "--window", "0,3,-1,2", "--pitch", "1/4", "--eps", "3/2", "--format", "svg", "--tol", "1/100"],
        ["dist", "--open", files["strip"], "--window", "0,3,-1,2", "--pitch", "1/2", "--format", "svg", "--tol", "1/100"],
    ):
        code, out = _run(argv)
        assert code == 0 and out.startswith("<svg") and 'width="512"' in out


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "--point", "1,2"],
        ["eval", "--term", "missing.json", "--point", "1,2"],
        ["unsat", "--n", "four"],
        ["eval", "--term", "t.json", "--point", "1.5,2"],
        ["frobnicate"],
    ],
)
def test_parse_errors_exit_2(argv):
    assert _run(argv)[0] == 2


def test_bad_payload_exit_2(files):
    assert _run(["eval", "--term", files["points"], "--point", "0,0"])[0] == 2


def test_engine_errors_exit_1(files):
    assert _run(["forced-sup", "--open", files["not_normal"], "--term", files["x"]])[0] == 1
    assert _run(["obstruct-sqrt", "--steps", "4"])[0] == 1
    assert _run(["unsat", "--n", "40"])[0] == 1


def test_every_subcommand_succeeds(files):
    for name, argv in every_subcommand(files).items():
        code, out = _run(argv)
        assert code == 0, name
        assert out


def test_console_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "pointless", "eval", "--term", files["taxi"], "--point", "3,-4"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout == "7\n"
