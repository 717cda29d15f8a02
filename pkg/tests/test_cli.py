import json

import pytest

from densek.cli import main


@pytest.fixture
def c4(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    return path


def run(capsys, *argv):
    code = main(list(map(str, argv)))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve(capsys, c4):
    code, out, _ = run(capsys, "solve", "--graph", c4, "--k", 3)
    doc = json.loads(out)
    assert code == 0 and doc["value"] == 2 and doc["objective"] == "densest"
    code, out, _ = run(capsys, "solve", "--graph", c4, "--k", 3, "--strategy", "deletion-block",
                       "--deletion-set", "0")
    assert code == 0 and json.loads(out)["value"] == 2


def test_exit_codes(capsys, c4, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    assert run(capsys, "solve", "--graph", bad, "--k", 1)[0] == 2
    assert run(capsys, "solve", "--graph", tmp_path / "missing", "--k", 1)[0] == 2
    code, _, err = run(capsys, "solve", "--graph", c4, "--k", 2, "--strategy", "block-dp")
    assert code == 4 and err.startswith("error:")
    assert run(capsys, "solve", "--graph", c4, "--k", 9)[0] == 4


def test_params(capsys, c4):
    code, out, err = run(capsys, "params", "--graph", c4)
    doc = json.loads(out)
    assert code == 0 and doc["vc"] == 2 and doc["nd"] == 2 and not err


def test_gen_then_solve(capsys, tmp_path):
    out_file = tmp_path / "cog.txt"
    code, out, _ = run(capsys, "gen", "--kind", "cograph", "--n", 9, "--seed", 2, "--out", out_file)
    summary = json.loads(out)
    assert code == 0 and summary["n"] == 9
    code, out, _ = run(capsys, "solve", "--graph", out_file, "--k", 4, "--strategy", "deletion-cw",
                       "--deletion-set", "", "--expression", summary["expression"])
    ref = json.loads(run(capsys, "solve", "--graph", out_file, "--k", 4)[1])["value"]
    assert code == 0 and json.loads(out)["value"] == ref

    planted = tmp_path / "p.txt"
    run(capsys, "gen", "--kind", "planted", "--n", 12, "--d", 2, "--out", planted)
    assert "# deletion-set: 10,11" in planted.read_text()
