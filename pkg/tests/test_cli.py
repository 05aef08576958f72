import json

import numpy as np
import pytest

from coloured_hopf.cli import main, matrix_document, matrix_from_document
from coloured_hopf.models import closed_form_R4, closed_form_R9


def run(tmp_path, *argv):
    out = tmp_path / "out.json"
    code = main([*argv, "--out", str(out)])
    return code, (json.loads(out.read_text()) if out.exists() else None)


def test_rmat_gl2_reference(tmp_path):
    code, doc = run(tmp_path, "rmat", "--model", "gl2", "--q", "1.7", "--s", "0.6",
                    "--lambda", "0.3", "--mu", "-1.1", "--spin", "0.5", "--renormalize")
    assert code == 0
    assert (doc["rows"], doc["cols"], len(doc["data"])) == (4, 4, 16)
    assert doc["meta"]["renormalized"] is True
    assert doc["meta"]["model"] == "gl2"
    r = matrix_from_document(doc)
    assert np.abs(r - closed_form_R4(1.7, 0.6, 0.3, -1.1)).max() < 1e-12


def test_rmat_h4_reference(tmp_path):
    code, doc = run(tmp_path, "rmat", "--model", "h4", "--z", "0.8",
                    "--lambda", "2+0i,0.5+0i", "--mu", "1+0i,1+0i")
    assert code == 0
    r = matrix_from_document(doc)
    assert np.abs(r - closed_form_R9(0.8, (2, 0.5), (1, 1))).max() < 1e-12


def test_rmat_classical_limit(tmp_path):
    code, doc = run(tmp_path, "rmat", "--model", "gl2", "--q", "1", "--lambda", "0.3", "--mu", "0.5")
    assert code == 0
    assert np.array_equal(matrix_from_document(doc), np.eye(4))


def test_rmat_mixed_spin(tmp_path):
    code, doc = run(tmp_path, "rmat", "--model", "gl2", "--q", "1.2", "--lambda", "1", "--mu", "1",
                    "--spin", "1,1.5")
    assert code == 0 and doc["rows"] == 12 and doc["meta"]["spins"] == [1.0, 1.5]


@pytest.mark.parametrize("argv", [
    ["rmat", "--model", "gl2", "--q", "abc", "--lambda", "1", "--mu", "1"],
    ["rmat", "--model", "gl2", "--lambda", "1"],
    ["rmat", "--model", "h4", "--lambda", "1", "--mu", "1,1"],
    ["rmat", "--model", "gl2", "--lambda", "0", "--mu", "1"],
    ["rmat", "--model", "sl3", "--lambda", "1", "--mu", "1"],
    ["verify", "--suite", "nope"],
    ["verify", "--trials", "0"],
    ["verify", "--trials", "x"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv):
    assert main(argv) == 2


def test_computation_error_exits_1(tmp_path):
    code, _ = run(tmp_path, "rmat", "--model", "gl2", "--q", "1.0000000001", "--lambda", "1", "--mu", "1")
    assert code == 1
    code, _ = run(tmp_path, "rmat", "--model", "gl2", "--spin", "7", "--lambda", "1", "--mu", "1")
    assert code == 1


def test_round_trip_is_bit_exact(tmp_path):
    rng = np.random.default_rng(4)
    a = rng.standard_normal((5, 3)) + 1j * rng.standard_normal((5, 3))
    a[0, 0] = complex(np.nextafter(1, 2), -1e-300)
    path = tmp_path / "m.json"
    path.write_text(json.dumps(matrix_document(a, {})))
    b = matrix_from_document(json.loads(path.read_text()))
    assert np.array_equal(a.view(np.float64), b.view(np.float64))


def test_bad_document():
    with pytest.raises(ValueError):
        matrix_from_document({"rows": 2, "cols": 2, "data": [[1, 0]]})


def test_verify_passes_and_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["verify", "--suite", "ybe", "--trials", "1", "--seed", "7", "--out", str(a)]) == 0
    assert main(["verify", "--suite", "ybe", "--trials", "1", "--seed", "7", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_failure_exits_1(tmp_path):
    code, rows = run(tmp_path, "verify", "--suite", "hopf", "--trials", "1", "--tol", "1e-40")
    assert code == 1
    assert not all(r["pass"] for r in rows)


def test_seed_env_overrides_flag(tmp_path, monkeypatch):
    monkeypatch.setenv("COLOURED_HOPF_SEED", "9")
    _, rows = run(tmp_path, "verify", "--model", "h4", "--suite", "cocomm", "--trials", "1", "--seed", "1")
    assert {r["seed"] for r in rows} == {9}


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# oscillator only\nmodel = h4\nsuite = quasi,cocomm\ntrials = 2\nseed = 5\n")
    code, rows = run(tmp_path, "verify", "--config", str(cfg), "--seed", "6")
    assert code == 0
    assert {r["model"] for r in rows} == {"h4"}
    assert {r["check"] for r in rows} == {"quasitriangular", "almost_cocommutative"}
    assert {r["seed"] for r in rows} == {6}
    assert len(rows) == 4


def test_config_bool_and_unknown_key(tmp_path):
    cfg = tmp_path / "r.cfg"
    cfg.write_text("model=gl2\nq=1.7\ns=0.6\nlambda=0.3\nmu=-1.1\nrenormalize=true\n")
    code, doc = run(tmp_path, "rmat", "--config", str(cfg))
    assert code == 0 and doc["meta"]["renormalized"] is True
    cfg.write_text("colour=3\n")
    assert main(["rmat", "--config", str(cfg)]) == 2
    assert main(["rmat", "--config", str(tmp_path / "missing.cfg")]) == 2
