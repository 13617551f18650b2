"""Tests report rendering, record sinks, settings, batching and timing."""
import json
from pathlib import Path

import pytest

from flag_algebras.errors import MalformedInput
from flag_algebras.outcome import Verdict
from flag_algebras.report import (
    SCHEMA_VERSION,
    ReportFormat,
    append_records,
    emit_report,
    jsonl_reader,
)
from flag_algebras.settings import SETTINGS, load_settings
from flag_algebras.timing import report_time, timeit
from flag_algebras.workers import chunks, map_chunks

from .fixtures import results_sink
from .helpers import ignore_unused, parse_text_report

ignore_unused(results_sink, reason="Fixtures")


# pylint: disable=redefined-outer-name


DEFAULTS = Path(__file__).parent.parent / "flag_algebras" / "defaults.toml"


def test_json_report() -> None:
    """Tests if JSON reports carry the schema version and sorted keys."""
    text = emit_report({"verdict": "true", "counts": [1, 2]}, ReportFormat.JSON)

    assert json.loads(text) == {"schema": SCHEMA_VERSION, "verdict": "true", "counts": [1, 2]}
    assert text.index('"counts"') < text.index('"schema"') < text.index('"verdict"')


def test_text_report() -> None:
    """Tests scalars, nested mappings and tables in the text format."""
    report = {
        "agrees": True,
        "counterexample": None,
        "torsion": [2, 6],
        "nested": {"free_rank": 0},
        "orbits": [{"representative": "(e,g)", "size": 2}],
    }
    text = emit_report(report, ReportFormat.TEXT)

    assert text.splitlines() == [
        "agrees: true",
        "counterexample: -",
        "nested:",
        "  free_rank: 0",
        "orbits:",
        "  - representative: (e,g)",
        "    size: 2",
        "schema: 1",
        "torsion: [2, 6]",
    ]
    assert parse_text_report(text)["torsion"] == "[2, 6]"


def test_verdicts_serialize_as_strings() -> None:
    """Tests if verdicts go into reports without calling `.value`."""
    assert Verdict.UNDECIDED == "undecided"
    assert json.loads(emit_report({"verdict": Verdict.TRUE}, ReportFormat.JSON))["verdict"] == "true"
    assert json.dumps([Verdict.of(False)]) == '["false"]'


def test_reports_are_deterministic() -> None:
    """Tests if key order in the input does not change the output."""
    lhs = emit_report({"a": 1, "b": {"y": 2, "x": 1}}, ReportFormat.TEXT)
    rhs = emit_report({"b": {"x": 1, "y": 2}, "a": 1}, ReportFormat.TEXT)

    assert lhs == rhs


def test_append_records(results_sink: Path) -> None:
    """Tests if records are appended as JSON lines."""
    assert append_records(results_sink, [{"index": 0}, {"index": 1}]) == 2
    assert append_records(results_sink, [{"index": 2}]) == 1

    with jsonl_reader(results_sink) as reader:
        assert [record["index"] for record in reader] == [0, 1, 2]


def test_default_settings() -> None:
    """Tests the packaged defaults."""
    assert SETTINGS.max_prime == 257
    assert "S3" in SETTINGS.catalog
    assert load_settings(DEFAULTS) == SETTINGS


def test_budget_override() -> None:
    """Tests if a single budget replaces every enumeration budget."""
    settings = SETTINGS.with_budget(7)

    assert settings.budgets.labelings == settings.budgets.orbits == 7
    assert settings.budgets.search == settings.budgets.enumeration == 7
    assert settings.budgets.antichain_classes == SETTINGS.budgets.antichain_classes
    assert SETTINGS.with_budget(None) is SETTINGS


@pytest.mark.parametrize(
    "contents",
    [
        "[budgets\nlabelings = 1",
        "[budgets]\nlabelings = 1\n",
        DEFAULTS.read_text(encoding="utf-8").replace("max_prime = 257", 'max_prime = "x"'),
    ],
)
def test_bad_settings(tmp_path: Path, contents: str) -> None:
    """Tests if broken or incomplete settings are refused."""
    path = tmp_path / "settings.toml"
    path.write_text(contents, encoding="utf-8")

    with pytest.raises(MalformedInput):
        load_settings(path)


def test_missing_settings(tmp_path: Path) -> None:
    """Tests if a missing settings file is refused."""
    with pytest.raises(MalformedInput):
        load_settings(tmp_path / "missing.toml")


def test_chunks() -> None:
    """Tests batching."""
    assert list(chunks(range(10), 4)) == [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9]]
    assert not list(chunks([], 4))


@pytest.mark.parametrize("jobs", [1, 2])
def test_map_chunks(jobs: int) -> None:
    """Tests if batch results keep their order, with or without workers."""
    assert map_chunks(sum, range(10), jobs=jobs, size=4) == [6, 22, 17]


def test_timing(capsys: pytest.CaptureFixture[str]) -> None:
    """Tests if timed functions keep their result and report on stderr."""
    assert timeit(sum, [1, 2]).value == 3

    timed = report_time("sum", sum, [3, 4])

    assert timed.value == 7
    assert timed.time >= 0
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.startswith("sum took ")
