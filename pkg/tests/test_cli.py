import json
import subprocess
import sys

import pytest

from chromablend.blending import parse_trace_json, run_total_blending
from chromablend.cli import main
from chromablend.cluster import parse_cluster
from chromablend.graphio import graph_to_text, parse_graph_text
from chromablend.corpus import cycle_graph
from chromablend.verify import VerifyReport


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEmbody:
    def test_max_to_stdout(self, capsys):
        code, out, err = run_cli(capsys, "embody", "2,3", "max")
        assert code == 0
        graph = parse_graph_text(out)
        assert (graph.n, graph.m) == (5, 6)
        assert "eps_plus=6" in err and "eps_minus=4" in err and "edges=6" in err

    def test_min_chromatic_dot(self, capsys):
        code, out, _ = run_cli(capsys, "embody", "1,1,1", "min-chromatic", "--format", "dot")
        assert code == 0
        assert out.count(" -- ") == 3

    def test_min_proper_report(self, capsys):
        code, out, err = run_cli(capsys, "embody", "2,2", "min-proper")
        assert code == 0
        assert parse_graph_text(out).m == 3
        assert "edges=3" in err

    def test_out_file_round_trips(self, capsys, tmp_path):
        target = tmp_path / "graph.txt"
        code, out, _ = run_cli(capsys, "embody", "2,3,1", "max", "--out", str(target))
        assert code == 0
        assert "N=6" in out
        graph = parse_graph_text(target.read_text())
        assert graph.m == 11

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "embody", "2,2", "max", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 4 and len(payload["edges"]) == 4

    def test_single_class_null_graph(self, capsys):
        code, out, err = run_cli(capsys, "embody", "4", "max")
        assert code == 0
        graph = parse_graph_text(out)
        assert (graph.n, graph.m) == (4, 0)
        assert "eps_minus=-" in err and "eps_plus=0" in err

    def test_single_class_min_mode_rejected(self, capsys):
        assert run_cli(capsys, "embody", "4", "min-chromatic")[0] == 2

    def test_validation_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "embody", "0,1", "max")
        assert code == 2
        assert "error:" in err

    def test_cap_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "embody", "2000,2000", "max")
        assert code == 3
        assert "cap" in err

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("CHROMABLEND_MATERIALIZATION_CAP", "3")
        code, _, _ = run_cli(capsys, "embody", "2,2", "max")
        assert code == 3
        code, _, _ = run_cli(capsys, "embody", "2,2", "max", "--materialization-cap", "10")
        assert code == 0

    def test_bad_env_value(self, capsys, monkeypatch):
        monkeypatch.setenv("CHROMABLEND_MATERIALIZATION_CAP", "lots")
        code, _, err = run_cli(capsys, "embody", "2,2", "max")
        assert code == 2
        assert "CHROMABLEND_MATERIALIZATION_CAP" in err


class TestBlend:
    def test_cluster_table(self, capsys):
        code, out, _ = run_cli(capsys, "blend", "1,1,1,1")
        assert code == 0
        assert "t_chi=3" in out
        assert "null_order=90" in out
        assert "max_edge_iteration=2" in out
        assert out.splitlines()[0] == "iteration classes vertices edges"

    def test_trace_out_round_trips(self, capsys, tmp_path):
        target = tmp_path / "trace.json"
        code, _, _ = run_cli(capsys, "blend", "2,3", "--trace-out", str(target))
        assert code == 0
        trace = parse_trace_json(target.read_text())
        assert trace == run_total_blending(parse_cluster("2,3"))

    def test_graph_input_auto_coloured(self, capsys, tmp_path):
        target = tmp_path / "c5.txt"
        target.write_text(graph_to_text(cycle_graph(5)))
        code, out, _ = run_cli(capsys, "blend", "--graph", str(target))
        assert code == 0
        assert "t_chi=2" in out

    def test_graph_input_with_colouring_file(self, capsys, tmp_path):
        graph_file = tmp_path / "p4.txt"
        graph_file.write_text("4 3\n0 1\n1 2\n2 3\n")
        colour_file = tmp_path / "colours.txt"
        colour_file.write_text("0 1\n1 2\n2 1\n3 2\n")
        code, out, _ = run_cli(
            capsys, "blend", "--graph", str(graph_file), "--colouring", str(colour_file)
        )
        assert code == 0
        assert "t_chi=1" in out
        assert "null_order=3" in out

    def test_requires_exactly_one_input(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "blend")
        assert code == 2
        target = tmp_path / "g.txt"
        target.write_text("2 1\n0 1\n")
        code, _, _ = run_cli(capsys, "blend", "1,1", "--graph", str(target))
        assert code == 2

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "blend", "--graph", "/nonexistent/g.txt")
        assert code == 2
        assert "error:" in err

    def test_single_class_literal(self, capsys):
        code, _, _ = run_cli(capsys, "blend", "9")
        assert code == 2


class TestSequence:
    def test_complete_graph_family(self, capsys):
        code, out, _ = run_cli(capsys, "sequence", "complete-graph", "--max-l", "4")
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[0] == "ell,cluster,t_chi,null_order,max_edges"
        assert rows[1] == '2,"1,1",1,1,1'
        assert rows[2] == '3,"1,1,1",2,3,3'
        assert rows[3] == '4,"1,1,1,1",3,90,90'

    def test_uniform_family(self, capsys):
        code, out, _ = run_cli(capsys, "sequence", "uniform", "--r", "2", "--max-l", "2")
        assert code == 0
        assert out.strip().splitlines()[1] == '2,"2,2",1,4,4'

    def test_uniform_one_equals_complete_graph_family(self, capsys):
        code_a, out_a, _ = run_cli(capsys, "sequence", "uniform", "--r", "1", "--max-l", "5")
        code_b, out_b, _ = run_cli(capsys, "sequence", "complete-graph", "--max-l", "5")
        assert code_a == code_b == 0
        assert out_a == out_b

    def test_custom_family(self, capsys):
        code, out, _ = run_cli(capsys, "sequence", "custom", "--clusters", "1,1,2", "2,3")
        assert code == 0
        rows = out.strip().splitlines()
        assert rows[1] == '3,"1,1,2",2,8,8'
        assert rows[2] == '2,"2,3",1,6,6'

    def test_missing_arguments(self, capsys):
        assert run_cli(capsys, "sequence", "uniform", "--max-l", "3")[0] == 2
        assert run_cli(capsys, "sequence", "complete-graph")[0] == 2
        assert run_cli(capsys, "sequence", "custom")[0] == 2


class TestOracle:
    def test_text_stats(self, capsys, tmp_path):
        target = tmp_path / "c5.txt"
        target.write_text(graph_to_text(cycle_graph(5)))
        code, out, _ = run_cli(capsys, "oracle", str(target))
        assert code == 0
        assert out == "chi=3\nomega=2\ndelta=2\ntriangle_free=true\nt_chi=2\n"

    def test_stat_selection_and_json(self, capsys, tmp_path):
        target = tmp_path / "c5.txt"
        target.write_text(graph_to_text(cycle_graph(5)))
        code, out, _ = run_cli(
            capsys, "oracle", str(target), "--stats", "chi,t-chi", "--format", "json"
        )
        assert code == 0
        assert json.loads(out) == {"chi": 3, "t_chi": 2}

    def test_unknown_stat(self, capsys, tmp_path):
        target = tmp_path / "c5.txt"
        target.write_text(graph_to_text(cycle_graph(5)))
        assert run_cli(capsys, "oracle", str(target), "--stats", "girth")[0] == 2

    def test_oracle_cap_exit(self, capsys, tmp_path):
        target = tmp_path / "c5.txt"
        target.write_text(graph_to_text(cycle_graph(5)))
        assert run_cli(capsys, "oracle", str(target), "--oracle-cap", "3")[0] == 3

    def test_oracle_cap_env(self, capsys, tmp_path, monkeypatch):
        target = tmp_path / "c5.txt"
        target.write_text(graph_to_text(cycle_graph(5)))
        monkeypatch.setenv("CHROMABLEND_ORACLE_CAP", "3")
        assert run_cli(capsys, "oracle", str(target))[0] == 3
        assert run_cli(capsys, "oracle", str(target), "--oracle-cap", "24")[0] == 0


class TestVerify:
    def test_selector_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "eps", "--max-l", "3", "--max-r", "2")
        assert code == 0
        assert "VERIFY PASS" in out
        assert "SUMMARY eps-triple checked=12 failed=0" in out
        assert "SUMMARY max-chromatic checked=12 failed=0" in out

    def test_quiet_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "eps", "--max-l", "3", "--max-r", "2", "--quiet"
        )
        assert code == 0
        assert "PASS eps-triple" not in out
        assert "SUMMARY" in out

    def test_eps_equality_notes_present(self, capsys):
        _, out, _ = run_cli(capsys, "verify", "eps", "--max-l", "3", "--max-r", "2")
        assert "NOTE eps-equality 1,1 l=2 equal=True all_ones=True" in out
        assert "NOTE eps-equality 2,1 l=2 equal=True all_ones=False" in out

    def test_failure_exit_code(self, capsys, monkeypatch):
        broken = VerifyReport("eps-triple")
        broken.fail("1,1", "rigged")
        monkeypatch.setattr(
            "chromablend.verify.check_eps_triple", lambda *a, **k: broken
        )
        code, out, _ = run_cli(capsys, "verify", "eps", "--max-l", "2", "--max-r", "1")
        assert code == 4
        assert "VERIFY FAIL" in out

    def test_argparse_rejects_unknown_selector(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "everything"])
        assert excinfo.value.code == 2


def test_cli_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "chromablend", "blend", "1,1,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "t_chi=2" in proc.stdout
