import io
import json
import subprocess
import sys

import pytest

from graphtwins.cli import (
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    BenchReport,
    RunReport,
    bench_gnp,
    run,
)
from graphtwins.generators import gen_forest, gen_gnp, gen_odd_cliques
from graphtwins.graph import Graph, TwinPair, format_graph, induced_edge_count, parse_graph

from conftest import p4, star


def write(tmp_path, g: Graph, name="g.txt"):
    path = tmp_path / name
    path.write_text(format_graph(g))
    return str(path)


def invoke(capsys, argv):
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_check_valid_pair(tmp_path, capsys):
    code, out, _ = invoke(capsys, ["check", write(tmp_path, p4()), "--a", "0,1", "--b", "2,3"])
    assert code == EXIT_OK
    assert json.loads(out)["valid"] is True


def test_check_invalid_pair_exits_one(tmp_path, capsys):
    code, out, _ = invoke(capsys, ["check", write(tmp_path, p4()), "--a", "0", "--b", "1,2"])
    assert code == EXIT_FAILURE
    assert json.loads(out)["violations"]


def test_exact_over_cap(tmp_path, capsys):
    code, out, err = invoke(capsys, ["exact", write(tmp_path, Graph(20))])
    assert code == EXIT_USAGE and out == ""
    assert "cap" in err


def test_exact_with_raised_cap(tmp_path, capsys):
    code, out, _ = invoke(capsys, ["exact", write(tmp_path, star(6)), "--cap", "20"])
    rep = json.loads(out)
    assert code == EXIT_OK and rep["size"] == rep["trace"]["t"] == 2


def test_forest_on_small_star(tmp_path, capsys):
    code, out, _ = invoke(capsys, ["forest", write(tmp_path, star(5))])
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["size"] == 2 and rep["disc"] == 0 and rep["bound_satisfied"] is True


def test_forest_rejects_cycle(tmp_path, capsys):
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    code, _, err = invoke(capsys, ["forest", write(tmp_path, g)])
    assert code == EXIT_USAGE and "twins:" in err


def test_approx_reports_bound(tmp_path, capsys):
    code, out, _ = invoke(capsys, ["approx", write(tmp_path, gen_gnp(24, 0.3, 5))])
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["bound_kind"] == "max_disc" and rep["bound_satisfied"] is True
    assert rep["trace"]["chosen"] in ("extraction", "local_search")


def test_sparse_on_grid(tmp_path, capsys):
    from graphtwins.generators import grid_graph
    code, out, _ = invoke(capsys, ["sparse", write(tmp_path, grid_graph(5, 5))])
    rep = json.loads(out)
    assert code == EXIT_OK and rep["disc"] == 0


def test_sparse_precondition(tmp_path, capsys):
    code, _, err = invoke(capsys, ["sparse", write(tmp_path, p4())])
    assert code == EXIT_USAGE and "n >= 16" in err


def test_criteria_text_and_json(tmp_path, capsys):
    path = write(tmp_path, p4())
    code, out, _ = invoke(capsys, ["criteria", path])
    rep = json.loads(out)
    assert code == EXIT_OK and rep["size"] == 2 and rep["disc"] == 0
    code, out, _ = invoke(capsys, ["--format", "text", "criteria", path])
    assert "satisfied criteria: [1, 2, 4]" in out


def test_criteria_without_perfect_twins(tmp_path, capsys):
    code, out, _ = invoke(capsys, ["criteria", write(tmp_path, gen_odd_cliques(2))])
    rep = json.loads(out)
    assert code == EXIT_OK and rep["size"] == 0 and rep["trace"]["method"] is None


def test_format_flag_after_subcommand(tmp_path, capsys):
    code, out, _ = invoke(capsys, ["forest", write(tmp_path, star(5)), "--format", "text"])
    assert code == EXIT_OK and out.startswith("algorithm: forest")


def test_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(format_graph(p4())))
    code, out, _ = invoke(capsys, ["check", "-", "--a", "0,2", "--b", "1,3"])
    assert code == EXIT_OK and json.loads(out)["valid"]


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["check", "x.txt"],
    ["check", "x.txt", "--a", "0,zz", "--b", "1"],
    ["gen", "--family", "gnp", "--seed", "-1"],
    ["bench", "--n", "5"],
])
def test_usage_errors(argv, capsys):
    code, out, _ = invoke(capsys, argv)
    assert code == EXIT_USAGE and out == ""


def test_missing_file_and_bad_input(tmp_path, capsys):
    assert invoke(capsys, ["forest", str(tmp_path / "missing.txt")])[0] == EXIT_USAGE
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n1 7\n")
    code, _, err = invoke(capsys, ["forest", str(bad)])
    assert code == EXIT_USAGE and "line 3" in err


def test_gen_text_feeds_back_into_parser(capsys):
    code, out, _ = invoke(capsys, ["gen", "--family", "gnp", "--n", "12", "--p", "0.3", "--seed", "9"])
    assert code == EXIT_OK
    assert parse_graph(io.StringIO(out)).edges == gen_gnp(12, 0.3, 9).edges


def test_gen_json(capsys):
    code, out, _ = invoke(capsys, ["gen", "--format", "json", "--family", "forest", "--n", "10", "--seed", "3"])
    d = json.loads(out)
    assert code == EXIT_OK and d["n"] == 10
    assert [tuple(e) for e in d["edges"]] == list(gen_forest(10, 3).edges)


def test_reported_counts_match_recount(tmp_path, capsys):
    for seed in range(10):
        g = gen_forest(20, seed)
        path = write(tmp_path, g)
        for cmd in ("forest", "approx", "criteria"):
            _, out, _ = invoke(capsys, [cmd, path])
            rep = json.loads(out)
            ea, eb = induced_edge_count(g, rep["a"]), induced_edge_count(g, rep["b"])
            assert (rep["edges_a"], rep["edges_b"]) == (ea, eb)
            assert rep["disc"] == abs(ea - eb) and rep["size"] == len(rep["a"]) == len(rep["b"])


def test_run_report_round_trip(tmp_path, capsys):
    for seed in range(5):
        path = write(tmp_path, gen_gnp(14, 0.4, seed))
        for cmd in ("exact", "approx", "criteria"):
            _, out, _ = invoke(capsys, [cmd, path])
            d = json.loads(out)
            rep = RunReport.from_dict(d)
            assert json.loads(json.dumps(rep.to_dict())) == d


def test_run_report_rejects_inconsistent_dict():
    g = p4()
    d = RunReport.build(g, "check", [0, 1], [2, 3]).to_dict()
    d["disc"] = 1
    with pytest.raises(ValueError):
        RunReport.from_dict(d)


def test_run_report_bound_judgement():
    g = p4()
    ok = RunReport.build(g, "x", [0, 2], [1, 3], bound=1, bound_kind="min_size")
    bad = RunReport.build(g, "x", [0], [1], bound=2, bound_kind="min_size")
    assert ok.bound_satisfied and bad.bound_satisfied is False
    assert isinstance(ok.result, TwinPair)


def test_bench_empty_graphs():
    rep = bench_gnp(4, 0.0, 10, 1)
    assert rep.perfect_twin_fraction == 1.0
    assert rep.size_histogram == {2: 10}


def test_bench_is_deterministic():
    r1, r2 = bench_gnp(12, 0.5, 50, 7), bench_gnp(12, 0.5, 50, 7)
    assert r1.to_dict() == r2.to_dict()
    assert r1.oracle_checked == 50


def test_bench_worker_count_does_not_matter():
    assert bench_gnp(12, 0.5, 24, 3, workers=1).to_dict() == bench_gnp(12, 0.5, 24, 3, workers=3).to_dict()


def test_bench_report_round_trip():
    rep = bench_gnp(10, 0.3, 20, 11)
    d = json.loads(json.dumps(rep.to_dict()))
    assert BenchReport.from_dict(d).to_dict() == d
    assert sum(rep.size_histogram.values()) == rep.samples


def test_bench_rejects_bad_arguments():
    with pytest.raises(ValueError):
        bench_gnp(5, 0.5, 10, 0)
    with pytest.raises(ValueError):
        bench_gnp(6, 0.5, 0, 0)


def test_console_entry_point(tmp_path):
    path = write(tmp_path, star(5))
    proc = subprocess.run([sys.executable, "-m", "graphtwins", "forest", path],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["size"] == 2
