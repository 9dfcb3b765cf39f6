import json

from edwardsproof.cli import run_cli


def test_curve_add(capsys):
    assert run_cli(["curve", "add", "-p", "13", "-c", "1", "-d", "2", "(4,4)", "(4,4)"]) == 0
    assert capsys.readouterr().out.strip() == "(0,1)"


def test_square_d_is_rejected(capsys):
    assert run_cli(["curve", "check", "-p", "13", "-c", "1", "-d", "4"]) == 2
    err = capsys.readouterr().err
    assert "nonzero square" in err and "completeness" in err


def test_bad_parameters(capsys):
    assert run_cli(["curve", "points", "-p", "15", "-t", "2"]) == 2
    assert run_cli(["curve", "points", "-p", "13", "-t", "1"]) == 2
    assert "singular" in capsys.readouterr().err
    assert run_cli(["curve", "points", "-p", "13"]) == 2
    assert run_cli(["curve", "add", "-p", "13", "-c", "1", "-d", "2", "(1,1)", "(1,0)"]) == 2
    assert run_cli(["frobnicate"]) == 2


def test_projective_commands(capsys):
    assert run_cli(["curve", "points", "-p", "13", "-t", "2", "--format", "json"]) == 0
    pts = json.loads(capsys.readouterr().out)
    assert len(pts) == 16
    assert run_cli(["curve", "mul", "-p", "13", "-t", "2", "2", "[(0,1),0]"]) == 0
    assert capsys.readouterr().out.strip() == "[(12,0),0]"
    assert run_cli(["oracle", "wellformed", "-p", "13", "-t", "2"]) == 0
    assert run_cli(["oracle", "dichotomy", "-p", "13", "-t", "2", "--format", "json"]) == 0
    capsys.readouterr()
    assert run_cli(["oracle", "dichotomy", "-p", "13", "-c", "1", "-d", "2"]) == 2


def test_sweep(capsys):
    assert run_cli(["oracle", "sweep", "-p", "13", "-c", "1", "-d", "2"]) == 0
    assert run_cli(["curve", "check", "-p", "17", "-t", "2", "--format", "json"]) == 0
    capsys.readouterr()


def test_verify_single_entry(tmp_path, capsys):
    rc = run_cli(["verify", "--entry", "jacobi-quartic", "--entry", "closure", "--emit-certs", str(tmp_path)])
    assert rc == 0
    report = json.loads(capsys.readouterr().out)
    assert report["status"] == "PASS"
    assert [e["name"] for e in report["entries"]] == ["closure", "jacobi-quartic"]
    assert len(list(tmp_path.glob("*.json"))) == 2


def test_verify_output_is_stable(capsys):
    run_cli(["verify", "--skip-tform", "--seed", "5"])
    first = capsys.readouterr().out
    run_cli(["verify", "--skip-tform", "--seed", "5"])
    assert capsys.readouterr().out == first


def test_bench(capsys):
    assert run_cli(["bench", "--repeat", "1", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "PASS"
