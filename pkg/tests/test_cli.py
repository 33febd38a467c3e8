import json
import subprocess
import sys

import pytest

from abmw.affine_bmw import BmwElem, BmwEngine, parse_element
from abmw.affine_hecke import HeckeElem, h_star, parse_hecke
from abmw.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reduce_examples(capsys):
    assert run(capsys, "reduce", "-n", "2", "e1 y1 e1")[:2] == (0, "d1 * e1\n")
    assert run(capsys, "reduce", "-n", "2", "g1 g1^-1")[1] == "1\n"
    assert run(capsys, "reduce", "-n", "3", "e1 e2 e1")[1] == "e1\n"


@pytest.mark.parametrize("n,s,L,count", [(2, 2, 0, 2), (2, 0, 1, 9), (3, 1, 1, 243)])
def test_basis_counts(capsys, n, s, L, count):
    code, out, _ = run(capsys, "basis", "-n", str(n), "-s", str(s), "-L", str(L))
    assert code == 0
    assert len(out.splitlines()) == count
    code, out, _ = run(capsys, "basis", "-n", str(n), "-s", str(s), "-L", str(L), "--format", "json")
    assert len(json.loads(out)) == count


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "mul", "-n", "2", "--format", "json", "g1 x1", "e1 y1^-1")
    x = BmwElem.from_json(json.loads(out))
    assert x == parse_element("g1 x1 e1 y1^-1", 2)
    code, out, _ = run(capsys, "star", "-n", "2", "--algebra", "hecke", "--format", "json", "T1 t^[1,0]")
    assert HeckeElem.from_json(out) == h_star(parse_hecke("T1 t^[1,0]", 2))


def test_text_round_trip(capsys):
    _, out, _ = run(capsys, "mul", "-n", "3", "x1 e2", "g1^-1 y1")
    assert parse_element(out.strip(), 3) == parse_element("x1 e2 g1^-1 y1", 3)


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "basis-count", "-n", "3")
    assert code == 0 and "15" in out
    code, out, _ = run(capsys, "verify", "props", "-n", "2", "--trials", "200", "--seed", "7")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "bmw-cell", "-n", "2", "-L", "1", "-M", "1", "--field", "prime")
    assert code == 0


def test_deterministic(capsys):
    a = run(capsys, "verify", "props", "-n", "2", "--trials", "20", "--seed", "3", "--format", "json")
    b = run(capsys, "verify", "props", "-n", "2", "--trials", "20", "--seed", "3", "--format", "json")
    assert a == b


def test_exit_codes(capsys, monkeypatch):
    assert run(capsys, "reduce", "-n", "2", "g9")[0] == 2
    assert run(capsys, "reduce", "-n", "2", "(r + ) * e1")[0] == 2
    monkeypatch.setitem(BmwEngine._engines, 3, BmwEngine(3))
    before = BmwEngine.get(3).budget
    assert run(capsys, "reduce", "-n", "3", "--budget", "2", "e1 y1 g2 y1 e2 g1^-1 y1^-1 e1 g2 e2")[0] == 3
    assert BmwEngine.get(3).budget == before
    assert run(capsys, "reduce", "-n", "5", "g1")[0] == 4
    assert run(capsys, "verify", "hecke-cell", "-s", "3")[0] == 4
    assert run(capsys, "basis", "-n", "2", "-s", "1")[0] == 2


def test_field_argument(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "hecke-cell", "--field", "12"])
    code, _, _ = run(capsys, "verify", "hecke-cell", "-s", "1", "--field", "1000003")
    assert code == 0


def test_cell_form(capsys):
    code, out, _ = run(capsys, "cell-form", "-n", "2", "-s", "0", "-L", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["symmetric"] and len(data["entries"]) == 9
    code, out, _ = run(capsys, "cell-form", "--algebra", "hecke", "-s", "2", "--cell", "(2)")
    assert code == 0 and "symmetric: True" in out


def test_console_script():
    res = subprocess.run([sys.executable, "-m", "abmw.cli", "reduce", "-n", "2", "e1 e1"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert "e1" in res.stdout
