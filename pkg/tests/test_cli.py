"""Command-line interface: outputs, exit codes, JSON determinism."""

import json

import pytest

from holefree.cli import main
from holefree.families import cycle_graph, path_graph, prism_graph
from holefree.graph import emit_graph, parse_graph


@pytest.fixture()
def c4_file(tmp_path):
    f = tmp_path / "c4.gr"
    f.write_text(emit_graph(cycle_graph(4)))
    return str(f)


@pytest.fixture()
def prism3_file(tmp_path):
    f = tmp_path / "prism3.gr"
    f.write_text(emit_graph(prism_graph(3)))
    return str(f)


def _json_out(capsys):
    return json.loads(capsys.readouterr().out)


def test_solve_c4_human(c4_file, capsys):
    assert main(["solve", c4_file]) == 0
    out = capsys.readouterr().out
    assert "weight 2" in out
    assert "witness: 1 3" in out


def test_solve_prism_json(prism3_file, capsys):
    assert main(["solve", prism3_file, "--json"]) == 0
    report = _json_out(capsys)
    assert report["result"]["weight"] == "2"
    assert report["stats"]["minseps"] == 6
    assert report["command"] == "solve"


def test_solve_malformed_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.gr"
    bad.write_text("p mwis 2 1\ne 1 3\n")
    assert main(["solve", str(bad)]) == 2


def test_solve_missing_file_exits_2(capsys):
    assert main(["solve", "/nonexistent/nowhere.gr"]) == 2


def test_solve_capacity_exits_3(prism3_file, capsys):
    assert main(["solve", prism3_file, "--strategy", "bt", "--cap-seps", "2"]) == 3


def test_verify_c5(tmp_path, capsys):
    f = tmp_path / "c5.gr"
    f.write_text(emit_graph(cycle_graph(5)))
    assert main(["verify", str(f), "--json"]) == 0
    report = _json_out(capsys)
    assert report["verdicts"]["long_hole_free"] is False
    assert len(report["verdicts"]["certificate"]) == 5


def test_verify_prism3(prism3_file, capsys):
    assert main(["verify", prism3_file, "--max-k", "4", "--json"]) == 0
    report = _json_out(capsys)
    assert report["verdicts"]["long_hole_free"] is True
    assert report["verdicts"]["largest_prism"] == 3


def test_verify_p4_chordal(tmp_path, capsys):
    f = tmp_path / "p4.gr"
    f.write_text(emit_graph(path_graph(4)))
    assert main(["verify", str(f), "--json"]) == 0
    assert _json_out(capsys)["verdicts"]["chordal"] is True


def test_analyze_prism3(prism3_file, capsys):
    assert main(["analyze", prism3_file, "--json"]) == 0
    report = _json_out(capsys)
    analysis = report["analysis"]
    assert analysis["minseps"] == 6
    assert analysis["minsep_bound_ok"] is True
    assert analysis["dom_histogram"]["brute-fallback"] == 0


def test_analyze_c4(c4_file, capsys):
    assert main(["analyze", c4_file, "--json"]) == 0
    analysis = _json_out(capsys)["analysis"]
    assert analysis["pmcs"] == 4
    assert analysis["dom_histogram"]["single-vertex"] == 4


def test_analyze_k4(tmp_path, capsys):
    from holefree.families import complete_graph

    f = tmp_path / "k4.gr"
    f.write_text(emit_graph(complete_graph(4)))
    assert main(["analyze", str(f), "--json"]) == 0
    analysis = _json_out(capsys)["analysis"]
    assert analysis["minseps"] == 0 and analysis["pmcs"] == 1


def test_generate_prism4(tmp_path, capsys):
    out = tmp_path / "p4.gr"
    assert main(["generate", "prism", "4", "--out", str(out)]) == 0
    g = parse_graph(out.read_text())
    assert g.n == 8 and g.m == 16


def test_generate_chordal_is_long_hole_free(tmp_path, capsys):
    out = tmp_path / "ch.gr"
    assert main(["generate", "chordal", "12", "20", "--seed", "7", "--out", str(out)]) == 0
    assert main(["verify", str(out), "--json"]) == 0
    report = _json_out(capsys)
    assert report["verdicts"]["long_hole_free"] is True
    assert report["verdicts"]["chordal"] is True


def test_generate_lhf_filter(tmp_path, capsys):
    from holefree.recognition import find_long_hole

    out = tmp_path / "lhf.gr"
    assert main(["generate", "lhf-filter", "10", "0.4", "--seed", "1", "--out", str(out)]) == 0
    assert find_long_hole(parse_graph(out.read_text())) is None


def test_generate_complement_of(prism3_file, tmp_path, capsys):
    out = tmp_path / "c.gr"
    assert main(["generate", "complement-of", prism3_file, "--out", str(out)]) == 0
    g = parse_graph(out.read_text())
    assert g.n == 6 and g.m == 15 - 9


def test_generate_embeds_seed_comment(tmp_path):
    out = tmp_path / "g.gr"
    main(["generate", "chordal", "6", "8", "--seed", "77", "--out", str(out)])
    assert "seed=77" in out.read_text()


def test_generate_bad_params_exit_2(capsys):
    assert main(["generate", "prism", "zero"]) == 2
    assert main(["generate", "prism"]) == 2


def test_json_deterministic(prism3_file, capsys):
    def run():
        main(["solve", prism3_file, "--json"])
        report = _json_out(capsys)
        report["stats"]["time_ms"] = 0  # wall time is the one run-dependent field
        return json.dumps(report)

    assert run() == run()


def test_strategies_agree_via_cli(c4_file, capsys):
    weights = set()
    for strategy in ("bt", "subexp1", "subexp2", "brute"):
        assert main(["solve", c4_file, "--strategy", strategy, "--json"]) == 0
        weights.add(_json_out(capsys)["result"]["weight"])
    assert weights == {"2"}


def test_stable_json_keys(c4_file, capsys):
    main(["solve", c4_file, "--json"])
    report = _json_out(capsys)
    assert list(report.keys()) == [
        "version",
        "command",
        "input",
        "result",
        "verdicts",
        "analysis",
        "stats",
    ]
