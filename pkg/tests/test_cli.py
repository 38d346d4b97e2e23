import json
import subprocess
import sys

import pytest

from invtab.cli import main
from invtab.pipedream import enumerate_RP, phi
from invtab.schubert import schubert_dd


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_schubert(capsys):
    code, out, _ = run(capsys, "schubert", "431562", "--method", "tableaux")
    assert code == 0
    assert out.strip() == str(schubert_dd((4, 3, 1, 5, 6, 2)))
    assert out.count("x1^3*x2^2") == 3
    assert run(capsys, "schubert", "1", "--method", "dd")[1] == "1\n"


def test_schubert_json_matches_methods(capsys):
    outs = {run(capsys, "schubert", "2413", "--method", m, "--json")[1] for m in ("dd", "tableaux", "pipedreams")}
    assert len(outs) == 1


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["schubert", "1123"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_domain_errors(capsys):
    assert run(capsys, "grassmann", "123")[0] == 1
    assert run(capsys, "skew", "1324", "3412", "--k", "2")[0] == 1
    code, _, err = run(capsys, "enumerate", "132", "--what", "uit")
    assert code == 1 and "max-entry" in err
    assert run(capsys, "stanley", "21", "--vars", "0")[0] == 1


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "431562")
    assert code == 0 and len(json.loads(out)) == 3
    assert len(json.loads(run(capsys, "enumerate", "1432", "--what", "pipedreams")[1])) == 5
    assert len(json.loads(run(capsys, "enumerate", "21", "--what", "uit", "--max-entry", "3")[1])) == 3


def test_bijection(capsys, monkeypatch):
    import io
    P = enumerate_RP((1, 4, 3, 2))[2]
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(P.to_json())))
    code, out, _ = run(capsys, "bijection", "--dir", "pd2it")
    assert code == 0 and json.loads(out) == phi(P).to_json()
    monkeypatch.setattr(sys, "stdin", io.StringIO(out))
    code, back, _ = run(capsys, "bijection", "--dir", "it2pd")
    assert code == 0 and json.loads(back) == P.to_json()
    monkeypatch.setattr(sys, "stdin", io.StringIO("not json"))
    assert run(capsys, "bijection", "--dir", "it2pd")[0] == 1


def test_grassmann_and_skew(capsys):
    code, out, _ = run(capsys, "grassmann", "24571368")
    data = json.loads(out)
    assert code == 0 and data["k"] == 4 and data["inverse"]["shape"] == [4, 3, 1]
    assert data["inverse"]["flags"] == [1, 3, 6]
    code, out, _ = run(capsys, "skew", "1342", "1243", "--k", "3", "--json")
    assert code == 0 and json.loads(out)["schur_expansion"]


def test_stanley_and_poset(capsys):
    assert run(capsys, "stanley", "2143", "--vars", "2")[1].strip() == "x1^2 + 2*x1*x2 + x2^2"  # s_2 + s_11
    code, out, _ = run(capsys, "poset", "1432")
    assert code == 0 and out.startswith("digraph")
    assert len(json.loads(run(capsys, "poset", "431562", "--format", "json")[1])["vertices"]) == 3


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4")
    assert code == 0 and "FAIL" not in out
    assert len(out.splitlines()) == 18


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "invtab", "enumerate", "2413", "--what", "pipedreams"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
