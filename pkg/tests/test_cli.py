"""Command line interface tests via click's runner."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from docexplore.cli import main


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def library(runner: CliRunner, fixtures_dir, tmp_path) -> Path:
    out = tmp_path / "library"
    result = runner.invoke(
        main, ["ingest", str(fixtures_dir / "diabetes_ratgeber.json"), "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    return out


class TestIngest:
    def test_ingest_reports_shape(self, runner: CliRunner, fixtures_dir, tmp_path):
        out = tmp_path / "lib"
        result = runner.invoke(
            main,
            ["ingest", str(fixtures_dir / "diabetes_ratgeber.json"), "--out", str(out)],
        )
        assert result.exit_code == 0
        assert "7 chapters" in result.output
        stored = json.loads((out / "t2d-ratgeber.json").read_text())
        assert stored["id"] == "t2d-ratgeber"

    def test_ingest_rejects_malformed(self, runner: CliRunner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"id": "x", "title": "t", "metadata": {}, "chapters": []}))
        result = runner.invoke(main, ["ingest", str(bad), "--out", str(tmp_path / "lib")])
        assert result.exit_code != 0
        assert "chapter" in result.output.lower()

    def test_ingest_missing_file(self, runner: CliRunner, tmp_path):
        result = runner.invoke(
            main, ["ingest", str(tmp_path / "ghost.json"), "--out", str(tmp_path / "lib")]
        )
        assert result.exit_code != 0


class TestAnalyze:
    def test_stdout_report(self, runner: CliRunner, fixtures_dir):
        result = runner.invoke(main, ["analyze", str(fixtures_dir / "session_p08.jsonl")])
        assert result.exit_code == 0, result.output
        report = json.loads(result.output)
        assert report["events"] == 22
        assert report["triples"] == 20
        assert report["fine"]["loops"] == 10
        assert report["coarse"]["multipleEdges"] == 11

    def test_output_file_byte_identical_on_rerun(
        self, runner: CliRunner, fixtures_dir, tmp_path
    ):
        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        for out in (a, b):
            result = runner.invoke(
                main,
                ["analyze", str(fixtures_dir / "session_p08.jsonl"), "--out", str(out)],
            )
            assert result.exit_code == 0, result.output
        assert a.read_bytes() == b.read_bytes()

    def test_min_duration_flag(self, runner: CliRunner, fixtures_dir):
        result = runner.invoke(
            main,
            ["analyze", str(fixtures_dir / "session_p08.jsonl"), "--min-duration", "0"],
        )
        assert result.exit_code == 0
        assert json.loads(result.output)["triples"] == 22

    def test_malformed_log_fails_with_location(self, runner: CliRunner, tmp_path):
        bad = tmp_path / "bad.jsonl"
        bad.write_text('{"session": "s"}\n')
        result = runner.invoke(main, ["analyze", str(bad)])
        assert result.exit_code != 0
        assert "bad.jsonl:1" in result.output


class TestExport:
    def test_graph_dot_and_json(self, runner: CliRunner, fixtures_dir, tmp_path):
        dot = tmp_path / "g.dot"
        js = tmp_path / "g.json"
        result = runner.invoke(
            main,
            [
                "export",
                "graph",
                str(fixtures_dir / "session_p12.jsonl"),
                "--out",
                str(dot),
                "--json",
                str(js),
            ],
        )
        assert result.exit_code == 0, result.output
        assert dot.read_text().startswith("digraph")
        graph = json.loads(js.read_text())
        assert len(graph["nodes"]) == 5

    def test_matrix_svg(self, runner: CliRunner, fixtures_dir, tmp_path):
        svg = tmp_path / "m.svg"
        result = runner.invoke(
            main,
            ["export", "matrix", str(fixtures_dir / "session_p08.jsonl"), "--out", str(svg)],
        )
        assert result.exit_code == 0, result.output
        assert svg.read_text().startswith("<svg")

    def test_wordcloud_svg_deterministic(self, runner: CliRunner, library, tmp_path):
        outputs = []
        for name in ("a.svg", "b.svg"):
            path = tmp_path / name
            result = runner.invoke(
                main,
                [
                    "export",
                    "wordcloud",
                    "--library",
                    str(library),
                    "--doc",
                    "t2d-ratgeber",
                    "--chapter",
                    "2",
                    "--out",
                    str(path),
                    "--seed",
                    "42",
                ],
            )
            assert result.exit_code == 0, result.output
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1]
        assert outputs[0].startswith(b"<svg")

    def test_tilebar_svg_and_json(self, runner: CliRunner, library, tmp_path):
        svg = tmp_path / "t.svg"
        js = tmp_path / "t.json"
        result = runner.invoke(
            main,
            [
                "export",
                "tilebar",
                "--library",
                str(library),
                "--doc",
                "t2d-ratgeber",
                "--term",
                "Insulin",
                "--out",
                str(svg),
                "--json",
                str(js),
            ],
        )
        assert result.exit_code == 0, result.output
        grid = json.loads(js.read_text())
        assert len(grid["rows"]) == 7

    def test_unknown_doc_fails(self, runner: CliRunner, library, tmp_path):
        result = runner.invoke(
            main,
            [
                "export",
                "wordcloud",
                "--library",
                str(library),
                "--doc",
                "ghost",
                "--chapter",
                "1",
                "--out",
                str(tmp_path / "x.svg"),
            ],
        )
        assert result.exit_code != 0

    def test_missing_required_option(self, runner: CliRunner):
        result = runner.invoke(main, ["export", "wordcloud"])
        assert result.exit_code != 0
