import json
import shlex
import subprocess
import sys

import numpy as np
import pytest

from sweeplab import kernels
from sweeplab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sweep_golden_5_3(capsys):
    assert run(capsys, "sweep", "--r", "5", "--s", "-3", "--variant", "minus", "--word", "ENEENNEE") == \
        (0, "EEENENNE\n", "")


def test_sweep_trace(capsys):
    code, out, _ = run(capsys, "sweep", "--r", "5", "--s", "-3", "--word", "ENEENNEE", "--trace")
    assert out.splitlines() == ["EEENENNE", "levels: -3 2 -1 -4 1 6 3 0", "order: 3 1 4 6 7 2 5 8"]


def test_sweep_degenerate(capsys):
    assert run(capsys, "sweep", "--r", "-1", "--s", "-1", "--variant", "minus", "--word", "NEEN")[1] == "NEEN\n"


def test_sweep_perturbed_and_json(capsys):
    code, out, _ = run(capsys, "sweep", "--r", "1", "--s", "-1", "--perturb", "below", "--word", "NE", "--format", "json")
    data = json.loads(out)
    assert data["image"] == "NE" and data["levels"] == [1, 0]


def test_sweep_general(capsys):
    assert run(capsys, "sweep-general", "--weights", "N=1,D=0,E=-1", "--word", "NDE")[:2] == (0, "DNE\n")


def test_map_zeta(capsys):
    assert run(capsys, "map", "zeta", "--a", "7", "--b", "10", "--partition", "4,4,4,2,2,1")[:2] == (0, "8,6,4,2\n")


def test_map_gm_json(capsys):
    code, out, _ = run(capsys, "map", "gm", "--a", "7", "--b", "10", "--partition", "4,4,4,2,2,1", "--format", "json")
    data = json.loads(out)
    assert data["image"] == "8,6,4,2"
    assert data["generators"] == [0, 3, 6, 7, 12, 14, 19, 21, 28, 35]


def test_map_word_maps(capsys):
    assert run(capsys, "map", "phi-hl", "--word", "NENE")[1] == "NNEE\n"
    assert run(capsys, "map", "phi-lw", "--word", "NENE")[1] == "NNEE\n"
    assert run(capsys, "map", "schroder", "--word", "NDE")[1] == "DNE\n"
    assert run(capsys, "map", "phi-prime", "--word", "ENNEENEEEEENNEEENNEEENEEEE", "--k", "2", "--m", "2")[1] == \
        "NENENENENEEEENEENNEEEEEEEE\n"


def test_invert_methods(capsys):
    code, out, _ = run(capsys, "invert", "--method", "brute", "--r", "5", "--s", "-3", "--word", "EEENENNE",
                       "--format", "json")
    assert code == 0 and json.loads(out)["preimages"] == ["ENEENNEE"]
    code, out, _ = run(capsys, "invert", "--method", "haglund", "--word", "NNEE", "--format", "json")
    assert json.loads(out) == {"method": "haglund", "word": "NNEE", "preimages": ["NENE"], "labels": [1, 1, 0, 0]}
    assert run(capsys, "invert", "--method", "square", "--word", "NNEE")[1] == "NENE\n"
    assert run(capsys, "invert", "--method", "phi", "--word", "NNEENNNNNEENNEENEEENNEENNEEENNEE",
               "--k", "0", "--m", "1")[1] == "NENNENNENNNENNENEEENEEENENNEENEE\n"


def test_invert_not_in_image(capsys):
    code, _, err = run(capsys, "invert", "--method", "haglund", "--word", "EENN")
    assert code == 3 and "NotInImage" in err
    code, _, _ = run(capsys, "invert", "--method", "gm", "--word", "NNNEEEEEE", "--b", "6")
    assert code == 3


def test_invert_budget(capsys):
    code, _, _ = run(capsys, "invert", "--method", "brute", "--r", "1", "--s", "-1", "--word", "NNNEEE", "--budget", "5")
    assert code == 4


def test_poly_formats(capsys):
    assert run(capsys, "poly", "hl", "--n", "2")[1] == "+1*t^1+1*q^1\n"
    assert run(capsys, "poly", "qbin", "--a", "2", "--b", "2")[1] == "+1+1*q^1+2*q^2+1*q^3+1*q^4\n"
    code, out, _ = run(capsys, "poly", "catalan", "--r", "1", "--s", "-1", "--a", "2", "--b", "2", "--format", "json")
    assert json.loads(out) == {"terms": [{"q": 0, "t": 1, "c": 1}, {"q": 1, "t": 0, "c": 1}]}
    code, out, _ = run(capsys, "poly", "square", "--a", "2", "--b", "3", "--format", "csv")
    assert out == "q,t,c\n0,1,5\n1,0,5\n"
    assert run(capsys, "poly", "qint", "--n", "3")[1] == "+1+1*q^1+1*q^2\n"


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "words", "--a", "1", "--b", "1")[1] == "EN\nNE\n"
    code, out, _ = run(capsys, "enumerate", "dyck", "--a", "3", "--b", "3", "--r", "1", "--s", "-1", "--format", "json")
    assert json.loads(out)["count"] == 5
    assert run(capsys, "enumerate", "trapezoid", "--n", "4", "--k", "0", "--m", "1", "--limit", "3")[1].count("\n") == 3
    assert run(capsys, "enumerate", "multiset", "--counts", "N=1,D=1,E=1", "--limit", "2")[1] == "NDE\nNED\n"


def test_error_exit_codes(capsys):
    assert run(capsys, "sweep", "--r", "1", "--s", "-1", "--word", "NXE")[0] == 2
    assert run(capsys, "sweep", "--r", "1", "--word", "NE")[0] == 2
    assert run(capsys, "sweep-general", "--weights", "N=x", "--word", "N")[0] == 2
    assert run(capsys, "map", "zeta", "--a", "2", "--b", "4", "--partition", "")[0] == 3
    assert run(capsys, "map", "phi-hl", "--word", "ENNE")[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--r", "one"])
    assert exc.value.code == 2


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "bijectivity", "--rmax", "3", "--smax", "3", "--sizemax", "8", "--quiet")
    assert code == 0 and ": pass (49 pass, 0 fail, 0 skipped;" in out
    code, out, err = run(capsys, "verify", "conjecture:joint-symmetry-catalan", "--rmax", "2", "--smax", "2",
                         "--sizemax", "7")
    assert code == 0 and err.count("[pass]") == 25


def test_verify_json_and_output_file(capsys, tmp_path):
    dest = tmp_path / "rep.json"
    code, out, _ = run(capsys, "verify", "inversion:haglund", "--nmax", "4", "--quiet", "--format", "json",
                       "--output", str(dest))
    rep = json.loads(out)
    assert rep["schema"] == "sweeplab-report/1" and rep["status"] == "pass"
    assert dest.read_text() == out


def test_verify_budget_exit(capsys):
    assert run(capsys, "verify", "equivalence:phi-lw", "--nmax", "4", "--budget", "10", "--quiet")[0] == 4


def test_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("# small run\nrmax = 1\nsmax=1\nsizemax=4\nformat=json\n")
    code, out, _ = run(capsys, "verify", "bijectivity", "--config", str(cfg), "--quiet")
    rep = json.loads(out)
    assert rep["config"]["sizemax"] == 4 and rep["totals"]["points"] == 9
    code, out, _ = run(capsys, "verify", "bijectivity", "--config", str(cfg), "--smax", "0", "--quiet")
    assert json.loads(out)["totals"]["points"] == 3
    cfg.write_text("bogus=1\n")
    assert run(capsys, "verify", "bijectivity", "--config", str(cfg))[0] == 2


def test_jobs_from_env(capsys, monkeypatch):
    monkeypatch.setenv("SWEEPLAB_JOBS", "2")
    code, out, _ = run(capsys, "verify", "bijectivity", "--rmax", "1", "--smax", "1", "--sizemax", "4",
                       "--quiet", "--format", "json")
    assert code == 0 and "jobs" not in json.loads(out)["config"]
    monkeypatch.setenv("SWEEPLAB_JOBS", "many")
    assert run(capsys, "verify", "bijectivity", "--quiet")[0] == 3


def test_failure_replays(capsys, monkeypatch):
    monkeypatch.setattr(kernels, "sweep_batch", lambda codes, wt, plus=False, impl=None: np.sort(codes, axis=1))
    code, out, _ = run(capsys, "verify", "bijectivity", "--rmax", "1", "--smax", "1", "--sizemax", "4",
                       "--quiet", "--format", "json")
    assert code == 1
    rep = json.loads(out)
    cx = next(p["counterexample"] for p in rep["points"] if p["status"] == "fail")
    argv = shlex.split(cx["replay"])[1:] + ["--quiet"]
    assert run(capsys, *argv)[0] == 1


def test_console_script_module_entry():
    out = subprocess.run([sys.executable, "-m", "sweeplab", "sweep", "--r", "5", "--s", "-3", "--word", "ENEENNEE"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout == "EEENENNE\n"
