"""
    QCoherentPy/test_cli.py

"""
# Python Dependencies
import json
import pytest

from QCoherentPy import cli
from QCoherentPy.config import THREADS_ENV
from QCoherentPy.utils import parse_complex


@pytest.mark.parametrize("argv, expected", [
    (["eval", "qnumber", "--n", "3", "--q", "0.5"], "1.75 error=0"),
    (["eval", "qfactorial", "--n", "3", "--q", "0.5"], "2.625 error=0"),
    (["eval", "qbinomial", "--n", "4", "--k", "2", "--q", "0.5"], "2.1875 error=0"),
    (["eval", "energy", "--j", "1", "--q", "0.5"], "1.25 error=0"),
    (["eval", "qpochhammer", "--a", "0.5", "--q", "0.5", "--n", "2"], "0.375 error=0 terms=2"),
    (["eval", "kernel_classical", "--z", "0", "--w", "0.3+0.1i", "--m", "0"], "1 error=0"),
    (["eval", "wall", "--n", "0", "--x", "0.3", "--a", "0.2", "--q", "0.5"], "1 error=0 degree=0"),
])
def test_eval(capsys, argv, expected):
    assert cli.main(argv) == 0
    assert capsys.readouterr().out.strip() == expected


def test_eval_series_value(capsys):
    assert cli.main(["eval", "qexp", "--xi", "0.5", "--q", "0.5"]) == 0
    out = capsys.readouterr().out.strip()
    value, error, terms = out.split(" ")
    assert error.startswith("error=") and terms.startswith("terms=")
    assert int(terms[len("terms="):]) > 0


def test_eval_general_binomial(capsys):
    assert cli.main(["eval", "qbinomial_general", "--s", "4", "--k", "2", "--q", "0.5"]) == 0
    value, error = capsys.readouterr().out.strip().split(" ")
    assert parse_complex(value) == pytest.approx(2.1875, rel=1e-12)
    assert error == "error=0"


@pytest.mark.parametrize("argv, code", [
    (["eval", "nope"], 2),
    (["eval", "qnumber", "--n", "3"], 2),
    (["eval", "qnumber", "--n", "3", "--q"], 2),
    (["eval", "qnumber", "--n", "x", "--q", "0.5"], 2),
    (["eval", "qnumber", "--n", "3", "--p", "0.5"], 2),
    (["eval", "qnumber", "--n", "3", "--q", "1.5"], 1),
    (["eval", "normalization", "--m", "0", "--x", "5", "--q", "0.5"], 1),
    (["eval", "phi21", "--a", "0.5", "--b", "0.5", "--c", "0.3", "--q", "0.5", "--z", "1.5"], 1),
    (["verify", "nope"], 2),
    (["verify", "ladder", "--q", "a,b"], 2),
    (["table", "nope"], 2),
    ([], 2),
])
def test_exit_codes(capsys, argv, code):
    assert cli.main(argv) == code
    assert capsys.readouterr().err


def test_version(capsys):
    assert cli.main(["--version"]) == 0
    assert capsys.readouterr().out.startswith("qcoherent ")


def test_bad_thread_count(monkeypatch, capsys):
    monkeypatch.setenv(THREADS_ENV, "zero")
    assert cli.main(["eval", "qnumber", "--n", "1", "--q", "0.5"]) == 2
    assert THREADS_ENV in capsys.readouterr().err


def test_verify_stdout(capsys):
    assert cli.main(["verify", "qidentities", "--q", "0.5", "--draws", "3", "--seed", "1"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["suite"] == "qidentities"
    assert report["seed"] == 1
    assert report["summary"]["failed"] == 0
    assert report["summary"]["wall_time_ms"] == 0


def test_verify_output_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    argv = ["verify", "wall-orthogonality", "--q", "0.5", "--output", str(path)]
    assert cli.main(argv) == 0
    assert capsys.readouterr().out == ""
    first = path.read_text(encoding="utf-8")
    assert cli.main(argv) == 0
    assert path.read_text(encoding="utf-8") == first


def test_verify_failure_exit(capsys):
    assert cli.main(["verify", "ladder", "--q", "0.5", "--m-max", "0", "--j-max", "2", "--tol", "0"]) == 1
    assert json.loads(capsys.readouterr().out)["summary"]["failed"] > 0


def test_verify_single_level(capsys):
    argv = ["verify", "coeff-orthonormality", "--q", "0.5", "--m", "2", "--j-max", "4"]
    assert cli.main(argv) == 0
    report = json.loads(capsys.readouterr().out)
    assert [case["params"]["m"] for case in report["cases"]] == [2]


def test_table_stdout(capsys):
    assert cli.main(["table", "energies", "--q", "0.5", "--j-max", "1"]) == 0
    lines = capsys.readouterr().out.split("\n")
    assert lines[0] == "j,energy,classical"
    assert len(lines) == 4 and lines[1] == "0,0.5,0.5"


def test_table_output(tmp_path, capsys):
    path = tmp_path / "coefficients.csv"
    assert cli.main(["table", "coefficients", "--q", "0.5", "--m", "1", "--j-max", "2", "--output", str(path)]) == 0
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "l,r,j,value_re,value_im"
    assert len(lines) == 1 + 3 * 10


def test_table_unwritable(tmp_path, capsys):
    path = tmp_path / "missing" / "energies.csv"
    assert cli.main(["table", "energies", "--output", str(path)]) == 1
    assert "cannot write" in capsys.readouterr().err


def test_verify_all_default_sweep(capsys):
    assert cli.main(["verify", "all", "--seed", "7"]) == 0
    first = capsys.readouterr().out
    report = json.loads(first)
    assert report["suite"] == "all"
    assert report["summary"]["failed"] == 0
    assert cli.main(["verify", "all", "--seed", "7"]) == 0
    assert capsys.readouterr().out == first
