import json

import pytest

from goldenring.cli import main


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *args):
    code, out, err = run(capsys, *args, "--format", "json", "--no-timestamp")
    assert code == 0, err
    return json.loads(out)


def test_chi_text(capsys):
    code, out, err = run(capsys, "chi", "--d", "3", "--format", "text")
    assert code == 0
    assert "config:" in out
    assert "profile" in out


def test_chi_json_envelope(capsys):
    data = run_json(capsys, "chi", "--d", "4")
    assert data["command"] == "chi"
    assert "timestamp" not in data
    assert data["config"]["d"] == 4
    assert data["result"]["closed"] == [1, 3, 5, 7, 5]
    assert data["result"]["match"] is True


def test_chi_bidegree_and_oracle(capsys):
    data = run_json(capsys, "chi", "--d1", "2", "--d2", "1", "--oracle")
    assert data["result"]["closed"] == [1, 3, 3, 1]
    assert data["result"]["oracle"] == [1, 3, 3, 1]
    assert data["result"]["match"] is True


def test_chi_csv(capsys):
    code, out, _ = run(
        capsys, "chi", "--d", "2", "--oracle", "--format", "csv", "--no-timestamp"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1] == "s,closed,oracle"
    assert len(lines) == 2 + 3


def test_chi_timestamp_present(capsys):
    code, out, _ = run(capsys, "chi", "--d", "2", "--format", "json")
    assert code == 0
    assert "timestamp" in json.loads(out)


def test_degree_arguments_are_exclusive(capsys):
    code, _, err = run(capsys, "chi", "--d", "3", "--d1", "1", "--d2", "1")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "chi")
    assert code == 2
    code, _, _ = run(capsys, "chi", "--d1", "3")
    assert code == 2


def test_repeated_runs_identical(capsys):
    first = run(capsys, "chi", "--d", "5", "--format", "json", "--no-timestamp")
    second = run(capsys, "chi", "--d", "5", "--format", "json", "--no-timestamp")
    assert first == second


def test_enum_counts(capsys):
    data = run_json(capsys, "enum", "--d", "4")
    assert data["result"]["count"] == 21
    assert data["result"]["match"] is True
    data = run_json(capsys, "enum", "--d1", "2", "--d2", "2")
    assert data["result"]["count"] == 13


def test_enum_csv(capsys):
    code, out, _ = run(capsys, "enum", "--d", "2", "--format", "csv", "--no-timestamp")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("#")
    assert lines[1] == "m,n"
    assert len(lines) == 2 + 7


def test_quads_by_value(capsys):
    data = run_json(capsys, "quads", "--alpha", "2", "1", "--count", "4")
    chain = data["result"]["quads"]
    assert len(chain) == 4
    assert data["result"]["match"] is True
    sizes = [q["size"] for q in chain]
    assert sizes == list(range(sizes[0], sizes[0] + 4))


def test_quads_zero_value(capsys):
    data = run_json(capsys, "quads", "--alpha", "0", "0")
    assert data["result"]["class"] == "zero"
    assert data["result"]["quads"] == []


def test_quads_by_bidegree(capsys):
    data = run_json(capsys, "quads", "--bidegree", "2", "2")
    assert data["result"]["match"] is True
    assert data["result"]["first_value"] == {"m": 2, "n": 2}
    assert data["result"]["last_value"] == {"m": 2, "n": -2}


def test_quads_argument_validation(capsys):
    code, _, _ = run(capsys, "quads")
    assert code == 2
    code, _, _ = run(capsys, "quads", "--alpha", "1", "0", "--bidegree", "1", "1")
    assert code == 2
    code, _, err = run(capsys, "quads", "--bidegree", "0", "0")
    assert code == 2 and "error" in err


def test_seq_verify(capsys):
    data = run_json(capsys, "seq", "--verify", "--window", "14")
    assert data["result"]["verification"]["dets_ok"] is True
    assert data["result"]["verification"]["theta_excludes_zero"] is True
    assert data["result"]["K"] == 14


def test_seq_generate_and_load(capsys, tmp_path):
    code, out, _ = run(capsys, "seq", "--format", "json", "--no-timestamp")
    assert code == 0
    system = json.loads(out)["result"]["system"]
    path = tmp_path / "window.json"
    path.write_text(json.dumps(system))
    data = run_json(capsys, "seq", "--load", str(path), "--verify")
    assert data["result"]["verification"]["e4_abs_constant"] is True


def test_seq_load_rejects_tampering(capsys, tmp_path):
    code, out, _ = run(capsys, "seq", "--format", "json", "--no-timestamp")
    system = json.loads(out)["result"]["system"]
    system["window"][6][0] = str(int(system["window"][6][0]) + 1)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(system))
    code, _, err = run(capsys, "seq", "--load", str(path), "--verify")
    assert code == 1
    assert "error" in err


def test_seq_load_missing_and_malformed(capsys, tmp_path):
    code, _, _ = run(capsys, "seq", "--load", str(tmp_path / "missing.json"))
    assert code == 2
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    code, _, _ = run(capsys, "seq", "--load", str(bad))
    assert code == 2


def test_seq_bad_seed_index(capsys):
    code, _, err = run(capsys, "seq", "--seed-index", "99")
    assert code == 2 and "error" in err


def test_hilbert(capsys):
    data = run_json(capsys, "hilbert", "--d", "2")
    assert data["result"]["computed"] == 25
    assert data["result"]["expected"] == 25
    assert data["result"]["match"] is True
    data = run_json(capsys, "hilbert", "--d1", "1", "--d2", "1")
    assert data["result"]["computed"] == 15


def test_hilbert_bound_exceeded(capsys):
    code, _, err = run(capsys, "hilbert", "--d", "6")
    assert code == 3 and "error" in err


def test_hilbert_bad_matrix(capsys):
    code, _, _ = run(capsys, "hilbert", "--d", "2", "--matrix", "1,2,3")
    assert code == 2
    code, _, _ = run(capsys, "hilbert", "--d", "2", "--matrix", "2,0,0,2")
    assert code == 2


def test_basis(capsys):
    data = run_json(capsys, "basis", "--d", "1")
    assert data["result"]["spans"] is True
    assert data["result"]["cardinality"] == 7
    assert data["result"]["quotient_rank"] == 7


def test_dim_single(capsys):
    data = run_json(capsys, "dim", "--d", "3", "--delta", "3/2")
    assert data["result"]["dim"] == 25
    code, _, _ = run(capsys, "dim", "--d", "13", "--delta", "1/2")
    assert code == 3
    code, _, _ = run(capsys, "dim", "--d", "3")
    assert code == 2


def test_dim_grid_csv(capsys):
    code, out, _ = run(capsys, "dim", "--grid", "--format", "csv", "--no-timestamp")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2 + 36


def test_csv_only_for_tables(capsys):
    for args in (
        ("seq", "--verify"),
        ("hilbert", "--d", "2"),
        ("basis", "--d", "1"),
        ("dim", "--d", "2", "--delta", "1/2"),
    ):
        code, _, err = run(capsys, *args, "--format", "csv")
        assert code == 2, args
        assert "csv" in err


def test_unknown_command(capsys):
    assert main(["nope"]) == 2


def test_console_entry_point():
    from importlib.metadata import entry_points

    eps = entry_points()
    if hasattr(eps, "select"):
        scripts = eps.select(group="console_scripts")
    else:  # pragma: no cover (pre-3.10 interface)
        scripts = eps["console_scripts"]
    assert any(ep.name == "goldenring" for ep in scripts)
