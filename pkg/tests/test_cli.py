import json
import subprocess
import sys

import pytest

from quasitrace.cli import main, parse_complex, parse_gammas, UsageError
from quasitrace.qseries import QSeries


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_series_E4(capsys):
    code, out, _ = run(capsys, "series", "E", "--weight", "4", "--terms", "5")
    assert code == 0
    f = QSeries.from_json(out)
    assert [f.coeff(n) for n in range(5)] == [1, 240, 2160, 6720, 17520]


def test_series_tsv(capsys):
    code, out, _ = run(capsys, "series", "eta", "--terms", "3", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "exponent\tpi_degree\tre\tim"
    assert lines[1] == "1/24\t0\t1\t0"
    assert lines[-1] == "# precision\t3"


def test_series_trace_matches_U(capsys):
    _, a, _ = run(capsys, "series", "trace", "--n", "3", "--psi", "psi1", "--terms", "20")
    _, b, _ = run(capsys, "series", "U", "--index", "6", "--terms", "20")
    assert QSeries.from_json(a) == QSeries.from_json(b)


@pytest.mark.parametrize("argv", [
    ["series", "E", "--terms", "5"],
    ["series", "E", "--weight", "3"],
    ["series", "U", "--index", "5"],
    ["series", "E", "--weight", "4", "--terms", "0"],
    ["series", "trace", "--n", "2", "--psi", "nope"],
    ["verify", "lattice", "--tau", "1-2i"],
    ["verify", "transform", "--gammas", "1,1,1,1"],
    ["verify", "lattice", "--s-ladder", "0.4,x"],
    ["verify", "transform", "--checks", "0"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-suite"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["series", "E", "--weight", "four"])
    assert exc.value.code == 2


def test_verify_pass_and_json_shape(capsys):
    code, out, _ = run(capsys, "verify", "cycle-lemma", "--max-n", "6", "--terms", "20")
    assert code == 0
    body = json.loads(out)
    assert body["status"] == "pass" and body["failed"] == 0
    assert body["checks"] == len(body["results"])
    r = body["results"][0]
    assert {"suite", "check", "status", "anchor", "checked_orders", "first_failure"} <= set(r)


def test_tight_tolerance_fails_with_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "lattice", "--radius", "50", "--tau", "1i",
                       "--tol-lattice-sum", "1e-15")
    assert code == 1
    body = json.loads(out)
    assert body["status"] == "fail"
    bad = [r for r in body["results"] if r["status"] == "fail"]
    assert bad and all(r["residual"] >= r["tolerance"] for r in bad)


def test_transform_is_deterministic(capsys):
    argv = ["verify", "transform", "--checks", "3", "--seed", "7", "--terms", "60"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    _, c, _ = run(capsys, "verify", "transform", "--checks", "3", "--seed", "8", "--terms", "60")
    assert c != a


def test_explicit_gammas(capsys):
    code, out, _ = run(capsys, "verify", "transform", "--gammas", "0,-1,1,0;1,1,0,1", "--terms", "60")
    assert code == 0
    gammas = {tuple(r["gamma"]) for r in json.loads(out)["results"]}
    assert gammas == {(0, -1, 1, 0), (1, 1, 0, 1)}


def test_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"checks": 2, "seed": 3, "terms": 60, "format": "tsv"}))
    code, out, _ = run(capsys, "verify", "transform", "--config", str(cfg))
    assert code == 0
    rows = out.splitlines()[1:]
    assert len({r.split("gamma=")[1] for r in rows}) <= 2
    code, out2, _ = run(capsys, "verify", "transform", "--config", str(cfg), "--format", "json")
    assert json.loads(out2)["status"] == "pass"


def test_bad_config(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text("[1, 2]")
    code, _, err = run(capsys, "verify", "theta-identity", "--config", str(cfg))
    assert code == 2
    code, _, _ = run(capsys, "verify", "theta-identity", "--config", str(tmp_path / "missing.json"))
    assert code == 2


def test_out_file(capsys, tmp_path):
    path = tmp_path / "v4.json"
    code, out, _ = run(capsys, "series", "V", "--index", "4", "--terms", "10", "--out", str(path))
    assert code == 0 and out == ""
    assert QSeries.from_json(path.read_text()).prec == 10


def test_parsers():
    assert parse_complex("0.5+1i") == 0.5 + 1j
    assert parse_complex("2i") == 2j
    assert parse_gammas("1,0,0,1; 0,-1,1,0") == ((1, 0, 0, 1), (0, -1, 1, 0))
    with pytest.raises(UsageError):
        parse_gammas("1,2,3")


def test_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quasitrace.cli", "series", "G", "--weight", "2",
                           "--terms", "3", "--format", "tsv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "1\t0\t2\t0" in proc.stdout
