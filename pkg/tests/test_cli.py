"""Tests the command-line interface end to end."""
from dataclasses import replace
from pathlib import Path
from typing import Any

import pytest
from typer.testing import CliRunner

from flag_algebras import cli
from flag_algebras.cli import Command, ExitStatus, JobSpec, make_app, run_command
from flag_algebras.errors import InputError
from flag_algebras.oracles import CrossValidation, SuiteContext, SuiteResult
from flag_algebras.settings import SETTINGS, Budgets

from .fixtures import results_sink
from .helpers import ignore_unused, parse_text_report, report_json

ignore_unused(results_sink, reason="Fixtures")


# pylint: disable=redefined-outer-name


DEFAULTS = Path(__file__).parent.parent / "flag_algebras" / "defaults.toml"


@pytest.fixture()
def runner() -> CliRunner:
    """A runner invoking the app in-process."""
    return CliRunner()


@pytest.fixture()
def quick_config(tmp_path: Path) -> Path:
    """Default settings with few sampled identity cases."""
    path = tmp_path / "quick.toml"
    path.write_text(
        DEFAULTS.read_text(encoding="utf-8").replace("identity_cases = 1000", "identity_cases = 6"),
        encoding="utf-8",
    )
    return path


def test_analyze(runner: CliRunner) -> None:
    """Tests the structural summary of the square."""
    result = runner.invoke(make_app(), ["analyze", "--preorder", "fixture:EX56", "--format", "json"])

    assert result.exit_code == ExitStatus.OK
    report = report_json(result.output)
    assert report["schema"] == 1
    assert report["command"] == "analyze"
    assert (report["n"], report["antichains"], report["aut"], report["aut0"]) == (4, 7, 4, 4)
    assert report["hasse"] == [[0, 2], [0, 3], [1, 2], [1, 3]]


def test_analyze_text_file(runner: CliRunner, tmp_path: Path) -> None:
    """Tests a preorder file, the text format and the closure note."""
    path = tmp_path / "chain.txt"
    path.write_text("# a chain\nn 3\n1 2\n2 3\n", encoding="utf-8")

    result = runner.invoke(make_app(), ["analyze", "--preorder", str(path)])

    assert result.exit_code == ExitStatus.OK
    assert "note: the given pairs were closed" in result.output
    report = parse_text_report(result.output)
    assert report["n"] == "3"
    assert report["relation_size"] == "6"
    assert report["heights"] == "[0, 1, 2]"


def test_lattice_records(runner: CliRunner, results_sink: Path) -> None:
    """Tests the antichain listing and its jsonlines records."""
    result = runner.invoke(
        make_app(),
        ["lattice", "--preorder", "fixture:VEE", "--format", "json", "--output", str(results_sink)],
    )

    assert result.exit_code == ExitStatus.OK
    report = report_json(result.output)
    assert report["count"] == 5
    assert len(report["meet"]) == 5
    assert len(results_sink.read_text(encoding="utf-8").splitlines()) == 5


def test_records_command(runner: CliRunner, results_sink: Path) -> None:
    """Tests if appended records are read back and reported."""
    app = make_app()
    for _ in range(2):
        runner.invoke(app, ["lattice", "--preorder", "fixture:UT2", "--output", str(results_sink)])

    result = runner.invoke(app, ["records", str(results_sink), "--format", "json"])

    assert result.exit_code == ExitStatus.OK, result.output
    records = report_json(result.output)["records"]
    assert len(records) == 6
    assert records[0] == {"index": 0, "classes": [], "elements": []}
    assert records[3] == records[0]


def test_aut(runner: CliRunner) -> None:
    """Tests the automorphism group order of UT2 over F3."""
    result = runner.invoke(
        make_app(), ["aut", "--preorder", "fixture:UT2", "--field", "3", "--format", "json"]
    )

    assert result.exit_code == ExitStatus.OK
    report = report_json(result.output)
    assert report["automorphisms"] == 6
    assert report["units"] == 12
    assert report["coelho_count_agrees"] is True



def test_global_field_and_jobs(runner: CliRunner) -> None:
    """Tests if --field and --jobs given before the command reach every job."""
    result = runner.invoke(
        make_app(),
        ["--field", "3", "--jobs", "2", "aut", "--preorder", "fixture:UT2", "--format", "json"],
    )

    assert result.exit_code == ExitStatus.OK, result.output
    assert report_json(result.output)["automorphisms"] == 6

    result = runner.invoke(
        make_app(),
        ["--field", "4", "aut", "--preorder", "fixture:UT2", "--field", "3", "--format", "json"],
    )

    assert result.exit_code == ExitStatus.OK, result.output
    assert report_json(result.output)["automorphisms"] == 6

def test_triviality(runner: CliRunner) -> None:
    """Tests the Z2 verdict on the square and its augmentation."""
    result = runner.invoke(
        make_app(),
        ["triviality", "--preorder", "fixture:EX56", "--group", "Z2", "--augment", "--format", "json"],
    )

    assert result.exit_code == ExitStatus.OK
    report = report_json(result.output)
    assert report["verdict"] == "false"
    assert (report["consistent"], report["trivial"]) == (16, 8)
    assert report["counterexample"]["2,4"] == "g"
    assert report["abelian"]["cycle_rank"] == 1
    assert report["augmented"]["n"] == 5
    assert report["augmented"]["abelian"]["verdict"] == "true"


def test_triviality_undecided(runner: CliRunner) -> None:
    """Tests if an exhausted budget exits with the undecided status."""
    result = runner.invoke(
        make_app(),
        ["triviality", "--preorder", "fixture:EX56", "--budget", "1", "--format", "json"],
    )

    assert result.exit_code == ExitStatus.UNDECIDED
    assert report_json(result.output)["verdict"] == "undecided"


def test_classify(runner: CliRunner) -> None:
    """Tests the orbit count and the cross-validation."""
    result = runner.invoke(
        make_app(), ["classify", "--preorder", "fixture:FULL2", "--group", "Z2", "--format", "json"]
    )

    assert result.exit_code == ExitStatus.OK
    report = report_json(result.output)
    assert report["orbits"] == 2
    assert [r["representative"] for r in report["representatives"]] == ["(e,e)", "(e,g)"]
    assert report["cross_validation"]["agrees"] is True


def test_classify_undecided(runner: CliRunner) -> None:
    """Tests the undecided outcome of a classification."""
    result = runner.invoke(
        make_app(), ["classify", "--preorder", "fixture:EX56", "--group", "Z3", "--budget", "10"]
    )

    assert result.exit_code == ExitStatus.UNDECIDED
    assert parse_text_report(result.output)["verdict"] == "undecided"


@pytest.mark.parametrize(
    "arguments",
    [
        ["analyze", "--preorder", "missing.txt"],
        ["analyze", "--preorder", "fixture:NOPE"],
        ["aut", "--preorder", "fixture:UT2", "--field", "4"],
        ["classify", "--preorder", "fixture:UT2", "--group", "Q8"],
        ["triviality", "--preorder", "fixture:UT2", "--jobs", "0"],
        ["analyze", "--preorder", "fixture:UT2", "--config", "missing.toml"],
        ["--field", "4", "analyze", "--preorder", "fixture:UT2"],
        ["--jobs", "0", "lattice", "--preorder", "fixture:UT2"],
        ["records", "missing.jsonl"],
    ],
)
def test_input_errors(runner: CliRunner, arguments: list[str]) -> None:
    """Tests if unusable input exits with status 1 and an error message."""
    result = runner.invoke(make_app(), arguments)

    assert result.exit_code == ExitStatus.INPUT_ERROR
    assert "error:" in result.output


def test_malformed_preorder(runner: CliRunner, tmp_path: Path) -> None:
    """Tests if a pair outside of the ground set is refused."""
    path = tmp_path / "bad.json"
    path.write_text('{"n": 2, "pairs": [[1, 3]]}', encoding="utf-8")

    result = runner.invoke(make_app(), ["analyze", "--preorder", str(path)])

    assert result.exit_code == ExitStatus.INPUT_ERROR


def test_oracle(runner: CliRunner, quick_config: Path) -> None:
    """Tests if every suite passes through the CLI."""
    result = runner.invoke(
        make_app(),
        ["oracle", "--samples", "2", "--seed", "3", "--config", str(quick_config), "--format", "json"],
    )

    assert result.exit_code == ExitStatus.OK, result.output
    suites = report_json(result.output)["suites"]
    assert {suite["status"] for suite in suites} == {"pass"}
    assert len(suites) == 10


def test_run_command_disagreement(monkeypatch: pytest.MonkeyPatch) -> None:
    """Tests if a failed suite maps to the disagreement status."""
    monkeypatch.setattr(cli, "SUITES", {"square": None})
    monkeypatch.setattr(cli, "run_suite", lambda name, context: SuiteResult(name, False, "broken"))

    outcome = run_command(JobSpec(Command.ORACLE))

    assert outcome.status is ExitStatus.DISAGREEMENT
    assert outcome.records == [{"name": "square", "status": "fail", "detail": "broken"}]


def test_job_validation() -> None:
    """Tests the checks on a job."""
    with pytest.raises(InputError):
        JobSpec(Command.ANALYZE)
    with pytest.raises(InputError):
        JobSpec(Command.ORACLE, settings=SETTINGS.with_budget(0))


def test_run_command_passes_user_budgets(monkeypatch: pytest.MonkeyPatch) -> None:
    """Tests if the job budgets reach the cross-check and the suites."""
    settings = SETTINGS.with_budget(50)
    budgets_seen: list[Budgets] = []

    def record_cross_validate(poset: Any, group: Any, budgets: Budgets) -> CrossValidation:
        budgets_seen.append(budgets)
        return CrossValidation(0, ())

    def record_suite(name: str, context: SuiteContext) -> SuiteResult:
        budgets_seen.append(context.budgets)
        return SuiteResult(name, True, "ok")

    monkeypatch.setattr(cli, "cross_validate", record_cross_validate)
    monkeypatch.setattr(cli, "SUITES", {"square": None})
    monkeypatch.setattr(cli, "run_suite", record_suite)

    classified = run_command(JobSpec(Command.CLASSIFY, "fixture:FULL2", settings=settings))
    checked = run_command(JobSpec(Command.ORACLE, settings=settings))

    assert (classified.status, checked.status) == (ExitStatus.OK, ExitStatus.OK)
    assert budgets_seen == [settings.budgets, settings.budgets]


def test_classify_cross_check_over_budget() -> None:
    """Tests if a cross-check beyond the search budget is reported undecided."""
    settings = replace(SETTINGS, budgets=replace(SETTINGS.budgets, search=1))

    outcome = run_command(JobSpec(Command.CLASSIFY, "fixture:VEE", settings=settings))

    assert outcome.report["verdict"] == "true"
    assert outcome.report["orbits"] == 3
    assert outcome.report["cross_validation"]["verdict"] == "undecided"
    assert outcome.status is ExitStatus.UNDECIDED
