import itertools
import json

import pytest

from temponet.cli import main


def _write_edges(path):
    lines = []
    for t in range(1, 11):
        lines += [f"{a} {b} {t}" for a, b in itertools.combinations("abcd", 2)]
        lines += [f"{a} {b} {t}" for a, b in itertools.combinations("efgh", 2)]
    for t in range(11, 21):
        lines += [f"{a} {b} {t}" for a, b in itertools.combinations("abcd", 2)]
        lines += [f"{a} {b} {t}" for a, b in itertools.combinations(["e", "f", "x"], 2)]
        lines += [f"{a} {b} {t}" for a, b in itertools.combinations(["g", "h", "y"], 2)]
    path.write_text("\n".join(lines) + "\n")
    return path


def test_export_to_file(tmp_path, capsys):
    edges = _write_edges(tmp_path / "edges.txt")
    out = tmp_path / "analysis.json"
    code = main(["--edges", str(edges), "--timeslices", "2", "--out", str(out)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["format"] == "temponet-analysis"
    assert doc["community_count"] == 5
    err = capsys.readouterr().err
    assert "5 communities" in err and "mean modularity" in err


def test_export_byte_identical_across_runs(tmp_path):
    edges = _write_edges(tmp_path / "edges.txt")
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["--edges", str(edges), "--timeslices", "2", "--seed", "7", "--out", str(out1)]) == 0
    assert main(["--edges", str(edges), "--timeslices", "2", "--seed", "7", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_export_to_stdout(tmp_path, capsys):
    edges = _write_edges(tmp_path / "edges.txt")
    assert main(["--edges", str(edges), "--timeslices", "2"]) == 0
    captured = capsys.readouterr()
    doc = json.loads(captured.out)
    assert doc["version"] == 1


def test_suggest_only(tmp_path, capsys):
    edges = _write_edges(tmp_path / "edges.txt")
    assert main(["--edges", str(edges), "--suggest-only"]) == 0
    suggestion = json.loads(capsys.readouterr().out)
    assert set(suggestion) == {"min", "default", "max"}
    assert 1 <= suggestion["min"] <= suggestion["default"] <= suggestion["max"]


def test_default_timeslices_follow_suggestion(tmp_path, capsys):
    edges = _write_edges(tmp_path / "edges.txt")
    assert main(["--edges", str(edges), "--suggest-only"]) == 0
    suggested = json.loads(capsys.readouterr().out)["default"]
    out = tmp_path / "auto.json"
    assert main(["--edges", str(edges), "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["config"]["slice_count"] == suggested


def test_metadata_labels_flow_through(tmp_path):
    edges = _write_edges(tmp_path / "edges.txt")
    meta = tmp_path / "meta.txt"
    meta.write_text("a red\nb red\nc red\nd red\n")
    out = tmp_path / "out.json"
    assert main(["--edges", str(edges), "--metadata", str(meta), "--timeslices", "2", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["metadata"]["a"] == "red"


def test_missing_edge_file_exit_1(tmp_path, capsys):
    assert main(["--edges", str(tmp_path / "nope.txt")]) == 1
    assert "cannot read edge file" in capsys.readouterr().err


def test_no_valid_edges_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("garbage here\nmore garbage\n")
    assert main(["--edges", str(bad)]) == 1


def test_bad_lines_warning_but_success(tmp_path, capsys):
    mixed = tmp_path / "mixed.txt"
    good = [f"{a} {b} {t}" for t in (1, 2, 3, 4) for a, b in itertools.combinations("abc", 2)]
    mixed.write_text("\n".join(good[:6] + ["x y oops"] + good[6:]) + "\n")
    assert main(["--edges", str(mixed), "--timeslices", "2", "--out", str(tmp_path / "o.json")]) == 0
    assert "skipped 1 bad line(s): 7" in capsys.readouterr().err


def test_invalid_tau_exit_2(tmp_path, capsys):
    edges = _write_edges(tmp_path / "edges.txt")
    assert main(["--edges", str(edges), "--tau", "1.5"]) == 2
    assert "tau" in capsys.readouterr().err


def test_invalid_sampling_exit_2(tmp_path):
    edges = _write_edges(tmp_path / "edges.txt")
    assert main(["--edges", str(edges), "--sampling", "wat:0.5"]) == 2


def test_timeslices_out_of_range_exit_1(tmp_path, capsys):
    edges = _write_edges(tmp_path / "edges.txt")
    assert main(["--edges", str(edges), "--timeslices", "9999"]) == 1
    assert "slice" in capsys.readouterr().err.lower()


def test_sampling_shrinks_export(tmp_path):
    edges = _write_edges(tmp_path / "edges.txt")
    out = tmp_path / "sampled.json"
    code = main([
        "--edges", str(edges),
        "--sampling", "node:0.5",
        "--seed", "3",
        "--timeslices", "2",
        "--out", str(out),
    ])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["nodes"] <= 5
    assert doc["config"]["sampling"]["method"] == "node"


def test_console_script_installed():
    import shutil

    assert shutil.which("temponet") is not None
