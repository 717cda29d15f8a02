import pytest

from densek.cli import main


@pytest.mark.parametrize("suite", ["block", "deletion", "approx"])
def test_quick_suite_writes_files(tmp_path, capsys, suite):
    assert main(["bench", "--suite", suite, "--quick", "--out", str(tmp_path)]) == 0
    out, err = capsys.readouterr()
    assert out.splitlines()[0].count(",") >= 2
    assert (tmp_path / f"{suite}.csv").read_text() == out
    assert (tmp_path / f"{suite}.png").read_bytes()[:4] == b"\x89PNG"
    assert "wrote" in err
