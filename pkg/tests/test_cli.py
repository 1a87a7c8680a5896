import json

import pytest

from lefcat.cli import main

from conftest import FIXTURES


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys):
    code, out, _ = run(capsys, "validate", FIXTURES / "C.cat", FIXTURES / "swapC.fun")
    assert code == 0 and "2 objects" in out and "strict" in out


def test_validate_reports_error_class(capsys, tmp_path):
    bad = tmp_path / "bad.cat"
    bad.write_text("objects: 2\nmor f: 0 -> 1\nmor g: 1 -> 0\n")
    code, _, err = run(capsys, "validate", bad)
    assert code != 0
    assert err.startswith("CycleDetected:")
    assert len(err.strip().splitlines()) == 1


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", tmp_path / "nope.cat")
    assert code == 2 and err.startswith("FileNotFoundError:")


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", FIXTURES / "D.cat", "--format", "structured")
    body = json.loads(out)["body"]
    assert code == 0
    assert body == {"simplices": [4, 5], "betti": [1, 2], "euler": -1,
                    "euler_from_homology": -1}


def test_lefschetz_parallel_pair(capsys):
    code, out, _ = run(capsys, "lefschetz", FIXTURES / "C.cat", FIXTURES / "idC.fun")
    assert code == 0
    assert "L = 0" in out and "L_R = 1" in out


def test_check_d(capsys):
    code, out, _ = run(capsys, "check", FIXTURES / "D.cat", FIXTURES / "idD.fun",
                       "--format", "structured")
    assert code == 0
    report = json.loads(out)["reports"][0]
    assert report["L"] == -1 and report["fixed_objects"]


def test_check_with_cutoff(capsys):
    code, out, _ = run(capsys, "check", FIXTURES / "layered.cat", FIXTURES / "layered.fun",
                       "--cutoff", "0")
    assert code == 0
    assert "layered L = 1" in out


def test_gen_to_files_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for prefix in (a, b):
        assert run(capsys, "gen", "--seed", 42, "--objects", 6, "--morphisms", 14,
                   "--collapse", 0.2, "--prefix", prefix)[0] == 0
    for ext in (".cat", ".fun"):
        assert (tmp_path / ("a" + ext)).read_bytes() == (tmp_path / ("b" + ext)).read_bytes()
    code, _, _ = run(capsys, "validate", str(a) + ".cat", str(a) + ".fun")
    assert code == 0


def test_gen_stdout(capsys):
    code, out, _ = run(capsys, "gen", "--seed", 1, "--objects", 3, "--morphisms", 4)
    assert code == 0 and out.startswith("objects:") and "\n---\n" in out


def test_selfcheck(capsys):
    code, out, _ = run(capsys, "selfcheck", "--count", 10, "--seed", 3, "--format",
                       "structured")
    assert code == 0
    assert json.loads(out)["body"]["violations"] == 0


def test_usage_error():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
