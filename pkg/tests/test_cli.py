import io
import json

import pytest

from hitprob.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dim_text_and_json(capsys):
    code, out, _ = run(capsys, "dim", "--k", "5", "--n", "12")
    assert code == 0 and out.strip() == "190"
    code, out, _ = run(capsys, "dim", "--k", "5", "--n", "12", "--format", "json")
    payload = json.loads(out)
    assert payload == {"k": 5, "n": 12, "dim": 190, "method": "monolithic"}


def test_dim_wood_shortcut(capsys):
    code, out, _ = run(capsys, "dim", "--k", "2", "--n", "12", "--format", "json")
    assert code == 0
    assert json.loads(out)["dim"] == 0
    assert json.loads(out)["method"] == "wood"


def test_dim_filtration_method(capsys):
    code, out, _ = run(capsys, "dim", "--k", "5", "--n", "12",
                       "--method", "filtration")
    assert code == 0 and out.strip() == "190"


def test_basis_counts(capsys):
    code, out, _ = run(capsys, "basis", "--k", "4", "--n", "12")
    assert code == 0
    assert len(out.strip().splitlines()) == 21
    code, out, _ = run(capsys, "basis", "--k", "5", "--n", "12",
                       "--plus", "--omega", "4,2,1")
    assert code == 0
    assert len(out.strip().splitlines()) == 75
    code, out, _ = run(capsys, "basis", "--k", "5", "--n", "4")
    assert code == 0
    assert len(out.strip().splitlines()) == 45


def test_filtration_csv(capsys):
    code, out, _ = run(capsys, "filtration", "--k", "5", "--n", "12")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "omega,block_size,rank,dim,method"
    total = sum(int(line.rsplit(",", 2)[-2]) for line in lines[1:])
    assert total == 190


def test_normal_form_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("7 0 0 0 0\n"))
    code, out, _ = run(capsys, "normal-form", "--k", "5")
    assert code == 0 and out.strip() == "7 0 0 0 0"
    # a hit class reduces to zero
    monkeypatch.setattr("sys.stdin", io.StringIO("2 0\n"))
    code, out, _ = run(capsys, "normal-form", "--k", "2")
    assert code == 0 and out.strip() == "0"


def test_kameko_report(capsys):
    code, out, _ = run(capsys, "kameko", "--k", "3", "--m", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["is_isomorphism"] is True
    assert payload["dim_source"] == payload["dim_target"]


def test_morphism_commands(capsys):
    code, out, _ = run(capsys, "morphism", "--op", "phi",
                       "--pair", "1;(2)", "--monomial", "3 3 3 3")
    assert code == 0 and out.strip() == "1 2 3 3 3"
    code, out, _ = run(capsys, "morphism", "--op", "p",
                       "--pair", "1;(2)", "--monomial", "1 1 2")
    assert code == 0 and out.strip() == "2 2"
    code, out, _ = run(capsys, "morphism", "--op", "phi-sets",
                       "--k", "5", "--n", "12")
    assert code == 0
    assert json.loads(out)["phi0"] == 105


def test_verify_properties_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "properties")
    assert code == 0
    assert "FAIL" not in out


def test_export(tmp_path, capsys):
    target = tmp_path / "basis.json"
    code, _, _ = run(capsys, "export", "--k", "4", "--n", "12",
                     "--output", str(target))
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["dim"] == 21
    assert len(payload["zero_part"]) + len(payload["positive_part"]) == 21


def test_exit_codes(capsys):
    code, _, err = run(capsys, "dim", "--k", "5", "--n", "200",
                       "--method", "monolithic")
    assert code == 3 and "capacity" in err
    code, _, _ = run(capsys, "dim", "--k", "9", "--n", "2")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["dim", "--k", "5"])  # missing --n
    assert exc.value.code == 2
