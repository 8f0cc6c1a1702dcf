import io
import json

import pytest

import dichroma.cli as cli
from dichroma.bounds import BoundCertificate
from dichroma.errors import InternalInvariantError


C7 = "".join(f"{i} {(i + 1) % 7}\n" for i in range(7))
C5 = "".join(f"{i} {(i + 1) % 5}\n" for i in range(5))
C3 = "0 1\n1 2\n2 0\n"
ACYCLIC = "a b\nb c\n"


def run(monkeypatch, capsys, argv, stdin_text=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_text_report(self, monkeypatch, capsys):
        code, out, err = run(monkeypatch, capsys, ["analyze"], stdin_text=C7)
        assert code == 0
        assert "best: 2" in out
        assert "oracle: 2" in out
        assert "circ-girth" in out

    def test_json_report_schema(self, monkeypatch, capsys):
        code, out, _ = run(
            monkeypatch, capsys, ["analyze", "--format", "json"], stdin_text=C7
        )
        assert code == 0
        data = json.loads(out)
        assert data["best"] == 2
        assert data["oracle"] == 2
        names = [b["name"] for b in data["bounds"]]
        assert "window-residue" in names
        for b in data["bounds"]:
            assert set(b) == {"name", "value", "hypotheses", "verified", "params"}

    def test_file_input(self, monkeypatch, capsys, tmp_path):
        path = tmp_path / "c3.txt"
        path.write_text(C3)
        code, out, _ = run(monkeypatch, capsys, ["analyze", "-i", str(path)])
        assert code == 0
        assert "best: 2" in out

    def test_complete_symmetric_4(self, monkeypatch, capsys):
        k4 = "\n".join(
            f"{u} {v}" for u in range(4) for v in range(4) if u != v
        )
        code, out, _ = run(monkeypatch, capsys, ["analyze"], stdin_text=k4)
        assert code == 0
        assert "best: 4" in out
        assert "oracle: 4" in out

    def test_acyclic_notes_missing_cycle(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["analyze"], stdin_text=ACYCLIC)
        assert code == 0
        assert "no cycle: girth/circumference undefined" in out
        assert "best: 1" in out

    def test_explicit_parameters(self, monkeypatch, capsys):
        code, out, _ = run(
            monkeypatch,
            capsys,
            ["analyze", "--format", "json", "--k", "4", "--p", "2"],
            stdin_text=C7,
        )
        assert code == 0
        data = json.loads(out)
        window = next(b for b in data["bounds"] if b["name"] == "window-residue")
        assert window["value"] == 2

    def test_bad_input_exits_1(self, monkeypatch, capsys):
        code, _, err = run(monkeypatch, capsys, ["analyze"], stdin_text="a b c\n")
        assert code == 1
        assert "error" in err

    def test_internal_invariant_exits_2(self, monkeypatch, capsys):
        def boom(d, options=None):
            raise InternalInvariantError("forced")

        monkeypatch.setattr(cli, "best_bound", boom)
        code, _, err = run(monkeypatch, capsys, ["analyze"], stdin_text=C3)
        assert code == 2
        assert "internal error" in err


class TestColor:
    def test_round_trip_through_verify(self, monkeypatch, capsys, tmp_path):
        code, out, _ = run(
            monkeypatch,
            capsys,
            ["color", "--method", "circ-girth", "--format", "json"],
            stdin_text=C5,
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["verified"]
        assert payload["num_colors"] == 2
        assert set(payload["colors"]) == {"0", "1", "2", "3", "4"}
        coloring_path = tmp_path / "coloring.json"
        coloring_path.write_text(out)
        code, out, _ = run(
            monkeypatch,
            capsys,
            ["verify", "-c", str(coloring_path)],
            stdin_text=C5,
        )
        assert code == 0
        assert out.startswith("valid:")

    def test_text_output_lists_vertices(self, monkeypatch, capsys):
        code, out, _ = run(
            monkeypatch, capsys, ["color", "--method", "spine"], stdin_text=C3
        )
        assert code == 0
        assert "method: " in out
        assert "verified: yes" in out
        assert "0 " in out

    def test_window_refusal_exits_3_with_witness(self, monkeypatch, capsys):
        code, _, err = run(
            monkeypatch,
            capsys,
            ["color", "--method", "window-residue", "--k", "4", "--p", "2"],
            stdin_text=C5,
        )
        assert code == 3
        assert "refused" in err
        assert "witness cycle: 0 1 2 3 4" in err

    def test_oracle_method(self, monkeypatch, capsys):
        code, out, _ = run(
            monkeypatch,
            capsys,
            ["color", "--method", "oracle", "--format", "json"],
            stdin_text=C7,
        )
        assert code == 0
        assert json.loads(out)["num_colors"] == 2

    def test_oracle_on_complete_symmetric_3(self, monkeypatch, capsys):
        k3 = "0 1\n0 2\n1 0\n1 2\n2 0\n2 1\n"
        code, out, _ = run(
            monkeypatch,
            capsys,
            ["color", "--method", "oracle", "--format", "json"],
            stdin_text=k3,
        )
        assert code == 0
        assert json.loads(out)["num_colors"] == 3

    def test_chen_numeric_not_offered(self, monkeypatch, capsys):
        code, _, err = run(
            monkeypatch,
            capsys,
            ["color", "--method", "chen-numeric"],
            stdin_text=C7,
        )
        assert code == 1
        assert "invalid choice" in err

    def test_missing_certificate_exits_2(self, monkeypatch, capsys):
        def hollow(d, method, options=None):
            return BoundCertificate(
                name=method, value=2, hypotheses=(), certificate=None,
                verified=False, parameters={},
            )

        monkeypatch.setattr(cli, "run_method", hollow)
        code, _, err = run(
            monkeypatch, capsys, ["color", "--method", "spine"], stdin_text=C3
        )
        assert code == 2
        assert "internal error" in err


class TestVerify:
    def write(self, tmp_path, payload):
        path = tmp_path / "coloring.json"
        path.write_text(json.dumps(payload))
        return str(path)

    def test_valid_coloring(self, monkeypatch, capsys, tmp_path):
        path = self.write(tmp_path, {"colors": {"0": 0, "1": 0, "2": 1}})
        code, out, _ = run(monkeypatch, capsys, ["verify", "-c", path], stdin_text=C3)
        assert code == 0
        assert out.startswith("valid:")

    def test_monochromatic_cycle_witnessed(self, monkeypatch, capsys, tmp_path):
        path = self.write(tmp_path, {"colors": {"0": 0, "1": 0, "2": 0}})
        code, out, _ = run(monkeypatch, capsys, ["verify", "-c", path], stdin_text=C3)
        assert code == 0
        assert out.startswith("invalid: monochromatic cycle 0 1 2")

    def test_json_format_reports_witness(self, monkeypatch, capsys, tmp_path):
        path = self.write(tmp_path, {"colors": {"0": 0, "1": 0, "2": 0}})
        code, out, _ = run(
            monkeypatch, capsys,
            ["verify", "-c", path, "--format", "json"], stdin_text=C3,
        )
        assert code == 0
        data = json.loads(out)
        assert data == {"valid": False, "witness": ["0", "1", "2"]}

    def test_label_mismatch_exits_1(self, monkeypatch, capsys, tmp_path):
        path = self.write(tmp_path, {"colors": {"0": 0, "1": 0, "x": 1}})
        code, _, err = run(monkeypatch, capsys, ["verify", "-c", path], stdin_text=C3)
        assert code == 1
        assert "missing ['2']" in err
        assert "unknown ['x']" in err

    def test_num_colors_too_small_exits_1(self, monkeypatch, capsys, tmp_path):
        path = self.write(
            tmp_path, {"num_colors": 1, "colors": {"0": 0, "1": 0, "2": 1}}
        )
        code, _, err = run(monkeypatch, capsys, ["verify", "-c", path], stdin_text=C3)
        assert code == 1
        assert "num_colors" in err

    def test_malformed_json_exits_1(self, monkeypatch, capsys, tmp_path):
        path = tmp_path / "coloring.json"
        path.write_text("{not json")
        code, _, err = run(
            monkeypatch, capsys, ["verify", "-c", str(path)], stdin_text=C3
        )
        assert code == 1

    def test_non_integer_colors_exit_1(self, monkeypatch, capsys, tmp_path):
        path = self.write(tmp_path, {"colors": {"0": "red", "1": 0, "2": 1}})
        code, _, err = run(monkeypatch, capsys, ["verify", "-c", path], stdin_text=C3)
        assert code == 1
        assert "integers" in err


class TestGenerate:
    def test_cycle_to_stdout(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["generate", "cycle", "--n", "7"])
        assert code == 0
        assert out == C7

    def test_strong_reproducible_to_file(self, monkeypatch, capsys, tmp_path):
        target = tmp_path / "d.txt"
        code, out, _ = run(
            monkeypatch, capsys,
            ["generate", "strong", "--n", "6", "--m", "9", "--seed", "1",
             "-o", str(target)],
        )
        assert code == 0
        assert out == ""
        first = target.read_text()
        run(
            monkeypatch, capsys,
            ["generate", "strong", "--n", "6", "--m", "9", "--seed", "1",
             "-o", str(target)],
        )
        assert target.read_text() == first
        assert len(first.splitlines()) == 9

    def test_residue_requires_k_and_residues(self, monkeypatch, capsys):
        code, _, err = run(
            monkeypatch, capsys, ["generate", "residue", "--n", "6"]
        )
        assert code == 1
        assert "--k and --residues" in err

    def test_residue_family(self, monkeypatch, capsys):
        code, out, _ = run(
            monkeypatch, capsys,
            ["generate", "residue", "--n", "6", "--k", "3", "--residues", "0"],
        )
        assert code == 0
        assert len(out.splitlines()) == 6

    def test_invalid_parameters_exit_1(self, monkeypatch, capsys):
        code, _, _ = run(
            monkeypatch, capsys, ["generate", "strong", "--n", "3", "--m", "99"]
        )
        assert code == 1


class TestDfs:
    def test_text_dump(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["dfs"], stdin_text=C3)
        assert code == 0
        assert "root: 0" in out
        assert "tree length t: 2" in out
        assert "2 0  backward" in out

    def test_json_dump(self, monkeypatch, capsys):
        code, out, _ = run(
            monkeypatch, capsys, ["dfs", "--format", "json"], stdin_text=C3
        )
        assert code == 0
        data = json.loads(out)
        assert data["root"] == "0"
        assert data["f"] == {"0": 1, "1": 2, "2": 3}
        classes = {(a["tail"], a["head"]): a["class"] for a in data["arcs"]}
        assert classes[("2", "0")] == "backward"

    def test_named_root(self, monkeypatch, capsys):
        code, out, _ = run(
            monkeypatch, capsys, ["dfs", "--root", "b"], stdin_text="a b\nb a\n"
        )
        assert code == 0
        assert "root: b" in out

    def test_unknown_root_exits_1(self, monkeypatch, capsys):
        code, _, err = run(
            monkeypatch, capsys, ["dfs", "--root", "zz"], stdin_text=C3
        )
        assert code == 1
        assert "unknown vertex label" in err

    def test_dot_export(self, monkeypatch, capsys, tmp_path):
        target = tmp_path / "tree.dot"
        code, _, _ = run(
            monkeypatch, capsys, ["dfs", "--dot", str(target)], stdin_text=C3
        )
        assert code == 0
        assert target.read_text().startswith("digraph")

    def test_picks_spanning_root_outside_single_component(self, monkeypatch, capsys):
        code, out, _ = run(monkeypatch, capsys, ["dfs"], stdin_text="a b\nb c\n")
        assert code == 0
        assert "root: a" in out


class TestUsageAndEnvironment:
    def test_missing_subcommand_exits_1(self, monkeypatch, capsys):
        code, _, _ = run(monkeypatch, capsys, [])
        assert code == 1

    def test_unknown_flag_exits_1(self, monkeypatch, capsys):
        code, _, _ = run(monkeypatch, capsys, ["analyze", "--bogus"], stdin_text=C3)
        assert code == 1

    def test_cycle_cap_env_is_honored(self, monkeypatch, capsys):
        monkeypatch.setenv("DICHROMA_CYCLE_CAP", "1")
        code, out, _ = run(
            monkeypatch, capsys, ["analyze", "--format", "json"],
            stdin_text="0 1\n1 0\n0 2\n2 0\n1 2\n2 1\n",
        )
        assert code == 0
        data = json.loads(out)
        mod = next(b for b in data["bounds"] if b["name"] == "mod-no1")
        assert mod["value"] is None
        assert "incomplete" in mod["hypotheses"][0]["condition"]

    def test_cycle_cap_flag_beats_env(self, monkeypatch, capsys):
        monkeypatch.setenv("DICHROMA_CYCLE_CAP", "1")
        code, out, _ = run(
            monkeypatch, capsys,
            ["analyze", "--format", "json", "--cycle-cap", "1000000"],
            stdin_text=C7,
        )
        assert code == 0
        data = json.loads(out)
        mod = next(b for b in data["bounds"] if b["name"] == "mod-no1")
        assert mod["value"] == 4

    def test_bad_env_value_exits_1(self, monkeypatch, capsys):
        monkeypatch.setenv("DICHROMA_CYCLE_CAP", "lots")
        code, _, err = run(monkeypatch, capsys, ["analyze"], stdin_text=C3)
        assert code == 1
        assert "DICHROMA_CYCLE_CAP" in err

    def test_nonpositive_caps_exit_1(self, monkeypatch, capsys):
        code, _, err = run(
            monkeypatch, capsys,
            ["analyze", "--cycle-cap", "0"], stdin_text=C3,
        )
        assert code == 1
        assert "positive" in err
        code, _, err = run(
            monkeypatch, capsys,
            ["analyze", "--oracle-cap", "-3"], stdin_text=C3,
        )
        assert code == 1
        assert "positive" in err
