import json

from permchar.cli import main


def test_cli_verify(capsys):
    code = main(["verify", "--group", "dihedral(6)", "--theorems", "A,C"])
    out = capsys.readouterr().out
    assert code == 0
    assert "dihedral(6)" in out
    assert "Pass=2" in out


def test_cli_verify_writes_ndjson(tmp_path, capsys):
    out = tmp_path / "reports.ndjson"
    code = main(
        ["verify", "--group", "frobenius(7,3)", "--theorems", "K", "--json", str(out)]
    )
    capsys.readouterr()
    assert code == 0
    lines = [json.loads(l) for l in out.read_text().splitlines()]
    assert {l["status"] for l in lines} == {"Pass", "HypothesesNotSatisfied"}


def test_cli_verify_group_file(tmp_path, capsys):
    doc = {"name": "klein", "degree": 4, "generators": [[[1, 2]], [[3, 4]]]}
    gf = tmp_path / "klein.json"
    gf.write_text(json.dumps(doc))
    code = main(["verify", "--group", str(gf), "--theorems", "B"])
    capsys.readouterr()
    assert code == 0


def test_cli_catalog_run_with_config(tmp_path, capsys):
    cfg = tmp_path / "config.json"
    cfg.write_text(
        json.dumps({"groups": ["cyclic(6)", "dihedral(6)"], "theorems": ["A", "C"]})
    )
    code = main(["catalog", "run", "--config", str(cfg)])
    out = capsys.readouterr().out
    assert code == 0
    assert "total:" in out


def test_cli_catalog_run_bad_config(tmp_path, capsys):
    cfg = tmp_path / "config.json"
    cfg.write_text(json.dumps({"theorems": ["nonsense"]}))
    code = main(["catalog", "run", "--config", str(cfg)])
    assert code == 2


def test_cli_dump(tmp_path, capsys):
    out = tmp_path / "table.json"
    code = main(["dump", "--kind", "table", "--group", "cyclic(2)", "--out", str(out)])
    capsys.readouterr()
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["irreducibles"] == [[1, 1], [1, -1]]


def test_cli_dump_stdout(capsys):
    code = main(["dump", "--kind", "chiefseries", "--group", "dihedral(6)"])
    out = capsys.readouterr().out
    assert code == 0
    assert json.loads(out)["orders"] == [1, 3, 6]


def test_cli_usage_error_exit_code(capsys):
    assert main(["verify"]) == 2
    capsys.readouterr()


def test_cli_unknown_group_exit_code(capsys):
    assert main(["verify", "--group", "mystery(3)"]) == 2
    capsys.readouterr()
