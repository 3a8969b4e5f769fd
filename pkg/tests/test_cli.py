"""The command-line interface: subcommand contracts, exit codes, stability."""

from __future__ import annotations

from pathlib import Path

import pytest

from argus.cli import run
from conftest import FIXTURES

ALT = str(FIXTURES / "alt_example.yaml")
CYCLIC = str(FIXTURES / "cyclic.yaml")
FIG9 = str(FIXTURES / "mixed_fig9.yaml")
NESTED = str(FIXTURES / "nested_groups.yaml")


class TestValidate:
    def test_ok(self, capsys):
        assert run(["validate", ALT]) == 0
        assert capsys.readouterr().out.strip() == "OK"

    def test_cycle_named(self, capsys):
        assert run(["validate", CYCLIC]) == 1
        err = capsys.readouterr().err
        assert "CycleDetected" in err
        assert "A -> B -> A" in err

    def test_schema_error(self, tmp_path, capsys):
        doc = tmp_path / "bad.yaml"
        doc.write_text("version: 1\n")
        assert run(["validate", str(doc)]) == 1
        assert "nodes" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert run(["validate", "does/not/exist.yaml"]) == 1
        assert "error:" in capsys.readouterr().err


class TestEvaluate:
    def test_baseline_root_line(self, capsys):
        assert run(["evaluate", ALT]) == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines == ["B 0.8", "C 0.7", "A 0.8572"]

    def test_override_raises_root(self, capsys):
        assert run(["evaluate", ALT, "--set", "B=1"]) == 0
        assert capsys.readouterr().out.strip().split("\n")[-1] == "A 0.949"

    def test_weight_override_key(self, capsys):
        assert run(["evaluate", ALT, "--set", "w:A:0=0"]) == 0
        assert capsys.readouterr().out.strip().split("\n")[-1] == "A 0.49"

    def test_set_does_not_mutate_the_file(self, capsys):
        run(["evaluate", ALT])
        baseline = capsys.readouterr().out
        run(["evaluate", ALT, "--set", "B=1"])
        capsys.readouterr()
        run(["evaluate", ALT])
        assert capsys.readouterr().out == baseline
        assert "0.8" in Path(ALT).read_text()

    def test_json_byte_stable(self, capsys):
        assert run(["evaluate", ALT, "--format", "json"]) == 0
        first = capsys.readouterr().out
        assert run(["evaluate", ALT, "--format", "json"]) == 0
        assert capsys.readouterr().out == first
        assert '"root_confidence": 0.8572' in first

    def test_leak_override_key(self, capsys):
        # explicit leak 0.5 -> 1.0 doubles the root of the nested fixture
        run(["evaluate", NESTED])
        baseline = float(capsys.readouterr().out.strip().split("\n")[-1].split()[1])
        run(["evaluate", NESTED, "--set", "v:G=1"])
        doubled = float(capsys.readouterr().out.strip().split("\n")[-1].split()[1])
        assert doubled == pytest.approx(2 * baseline, abs=2e-4)

    def test_bad_override(self, capsys):
        assert run(["evaluate", ALT, "--set", "nope=1"]) == 1
        assert run(["evaluate", ALT, "--set", "B=abc"]) == 1
        assert run(["evaluate", ALT, "--set", "B"]) == 1


class TestTornado:
    def test_top_entry(self, capsys):
        assert run(["tornado", ALT, "--target", "A", "--top", "1"]) == 0
        out = capsys.readouterr().out
        lines = out.strip().split("\n")
        assert len(lines) == 2  # header plus one entry
        assert "g(B)" in lines[1]
        assert "[0.49, 0.949]" in lines[1]

    def test_text_bars_scale(self, capsys):
        run(["tornado", ALT, "--target", "A"])
        out = capsys.readouterr().out
        for line in out.strip().split("\n")[1:]:
            bar = line.split("|")[1]
            assert len(bar) == 40

    def test_json_stable_and_ordered(self, capsys):
        assert run(["tornado", ALT, "--target", "A", "--format", "json"]) == 0
        first = capsys.readouterr().out
        run(["tornado", ALT, "--target", "A", "--format", "json"])
        assert capsys.readouterr().out == first
        assert first.index('"key": "B"') < first.index('"key": "C"')

    def test_svg(self, capsys):
        assert run(["tornado", ALT, "--target", "A", "--format", "svg"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("<svg")
        assert out.count("<rect") == 4
        assert "g(B)" in out

    def test_variable_filter(self, capsys):
        assert run(["tornado", ALT, "--target", "A", "--variable", "B"]) == 0
        out = capsys.readouterr().out
        assert "g(B)" in out
        assert "g(C)" not in out

    def test_unknown_target(self, capsys):
        assert run(["tornado", ALT, "--target", "nope"]) == 1


class TestTransformExport:
    def test_transform_json(self, capsys):
        assert run(["transform", FIG9]) == 0
        out = capsys.readouterr().out
        assert '"I_B_C"' in out
        assert '"noisy_and"' in out

    def test_transform_dot(self, capsys):
        assert run(["transform", FIG9, "--format", "dot"]) == 0
        assert capsys.readouterr().out.startswith("digraph")

    def test_export_writes_file(self, tmp_path, capsys):
        out_path = tmp_path / "net.dot"
        assert run(["export", FIG9, "--dot", str(out_path)]) == 0
        text = out_path.read_text()
        assert "diamond" in text
        assert "g=" not in text

    def test_export_with_values(self, tmp_path):
        out_path = tmp_path / "net.dot"
        assert run(["export", FIG9, "--dot", str(out_path), "--with-values"]) == 0
        assert "g=0.8572" in out_path.read_text()


class TestUsageErrors:
    def test_no_arguments(self, capsys):
        assert run([]) == 2

    def test_unknown_subcommand(self, capsys):
        assert run(["frobnicate"]) == 2

    def test_tornado_requires_target(self, capsys):
        assert run(["tornado", ALT]) == 2

    def test_bad_format_choice(self, capsys):
        assert run(["evaluate", ALT, "--format", "xml"]) == 2


class TestLogging:
    def test_log_env_accepted(self, capsys, monkeypatch):
        monkeypatch.setenv("ARGUS_LOG", "debug")
        assert run(["validate", ALT]) == 0

    def test_unknown_log_level_falls_back(self, capsys, monkeypatch):
        monkeypatch.setenv("ARGUS_LOG", "loud")
        assert run(["validate", ALT]) == 0
