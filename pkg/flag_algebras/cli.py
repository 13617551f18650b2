"""CLI part of the project."""
from dataclasses import dataclass
from enum import Enum, IntEnum
from pathlib import Path
from typing import Any, Callable, NamedTuple, Optional

import jsonlines
import typer
from typer import Exit, Option, Typer

from .automorphisms import (
    automorphism_summary,
    coelho_decompose,
    enumerate_T,
)
from .classification import classify_orbits
from .errors import BudgetExceeded, FlagAlgebraError, InputError
from .field import prime_field
from .grading import all_trivial_abelian, all_trivial_for_group, catalog_evidence
from .groups import build_group
from .lattice import (
    antichain_join,
    antichain_meet,
    enumerate_antichains,
    poset_automorphisms,
)
from .oracles import (
    CROSS_VALIDATION_MAX_TUPLES,
    SUITES,
    SuiteContext,
    cross_validate,
    run_suite,
)
from .outcome import Verdict
from .poset import Preorder, QuotientPoset, augment_with_apex, load_preorder, quotient_order
from .report import ReportFormat, append_records, emit_report, jsonl_reader
from .settings import SETTINGS, Settings, load_settings
from .timing import report_time

LATTICE_TABLE_CAP = 16


class ExitStatus(IntEnum):
    """Process exit statuses."""

    OK = 0
    INPUT_ERROR = 1
    UNDECIDED = 2
    DISAGREEMENT = 3


class Command(str, Enum):
    """Analyses offered by the CLI."""

    ANALYZE = "analyze"
    LATTICE = "lattice"
    AUT = "aut"
    TRIVIALITY = "triviality"
    CLASSIFY = "classify"
    ORACLE = "oracle"


@dataclass(frozen=True)
class JobSpec:
    """Everything a single CLI invocation needs."""

    command: Command
    preorder: str | None = None
    field: int = 2
    group: str = "Z2"
    format: ReportFormat = ReportFormat.TEXT
    seed: int = SETTINGS.seed
    samples: int = SETTINGS.samples
    jobs: int = 1
    augment: bool = False
    settings: Settings = SETTINGS

    def __post_init__(self) -> None:
        budgets = self.settings.budgets
        if min(budgets.labelings, budgets.orbits, budgets.search, budgets.enumeration) <= 0:
            raise InputError("Budgets must be positive.")
        if self.jobs <= 0:
            raise InputError("--jobs must be positive.")
        prime_field(self.field, self.settings.max_prime)
        if self.command is not Command.ORACLE and self.preorder is None:
            raise InputError(f"`{self.command.value}` needs --preorder.")


class Outcome(NamedTuple):
    """Result of `run_command`: exit status, report and jsonlines records."""

    status: ExitStatus
    report: dict[str, Any]
    records: list[dict[str, Any]]


class _Loaded(NamedTuple):
    preorder: Preorder
    poset: QuotientPoset
    already_closed: bool


def _load(job: JobSpec) -> _Loaded:
    assert job.preorder is not None
    closure = load_preorder(job.preorder)
    return _Loaded(closure.preorder, quotient_order(closure.preorder), closure.already_closed)


def _classes(poset: QuotientPoset, members: Any) -> list[list[int]]:
    return [list(poset.classes[a]) for a in members]


def _analyze(job: JobSpec) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    loaded = _load(job)
    poset = loaded.poset
    budgets = job.settings.budgets
    antichains = enumerate_antichains(poset, budgets.antichain_classes)
    report = {
        "n": loaded.preorder.n,
        "relation_size": len(loaded.preorder.pairs),
        "classes": [list(c) for c in poset.classes],
        "multiplicities": list(poset.mult),
        "hasse": [list(arrow) for arrow in poset.hasse],
        "components": poset.num_components,
        "component_of": list(poset.comp_of),
        "heights": list(poset.height_of),
        "antichains": len(antichains),
        "aut": len(poset_automorphisms(poset, False, budgets.enumeration)),
        "aut0": len(poset_automorphisms(poset, True, budgets.enumeration)),
    }
    return report, []


def _lattice(job: JobSpec) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    poset = _load(job).poset
    antichains = enumerate_antichains(poset, job.settings.budgets.antichain_classes)
    index = {d: k for k, d in enumerate(antichains)}
    listing = [
        {"index": k, "classes": list(d.members), "elements": _classes(poset, d)}
        for k, d in enumerate(antichains)
    ]
    report: dict[str, Any] = {"count": len(antichains), "antichains": listing}
    if len(antichains) <= LATTICE_TABLE_CAP:
        report["meet"] = [[index[antichain_meet(poset, d, e)] for e in antichains] for d in antichains]
        report["join"] = [[index[antichain_join(poset, d, e)] for e in antichains] for d in antichains]
    return report, listing


def _aut(job: JobSpec) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    preorder = _load(job).preorder
    field_ = prime_field(job.field, job.settings.max_prime)
    budget = job.settings.budgets.enumeration
    summary = automorphism_summary(preorder, field_, budget)

    scalars = enumerate_T(preorder, field_, budget)
    sample = next((a for a in scalars if not a.is_one), scalars[0])
    decomposition = coelho_decompose(preorder, field_, sample)
    report = {
        "field": job.field,
        "units": summary.units,
        "central_units": summary.central_units,
        "inner": summary.inner,
        "aut0": summary.aut0,
        "T": summary.T,
        "kernel": summary.kernel,
        "coelho_subgroup": summary.coelho,
        "automorphisms": summary.total,
        "coelho_count_agrees": summary.total == summary.coelho_total,
        "coelho_example": {
            "a": {f"{i},{j}": v for (i, j), v in sample.values},
            "d": list(decomposition.d),
            "residual": {f"{i},{j}": v for (i, j), v in decomposition.residual.values},
        },
    }
    return report, []


def _abelian(preorder: Preorder, group_spec: str) -> dict[str, Any]:
    group = build_group(group_spec)
    abelian = all_trivial_abelian(preorder, group)
    return {
        "verdict": Verdict.of(abelian.verdict).value,
        "cycle_rank": abelian.cycle_rank,
        "free_rank": abelian.free_rank,
        "torsion": list(abelian.torsion),
        "group_verdict": None if abelian.group_verdict is None else Verdict.of(abelian.group_verdict).value,
    }


def _evidence(job: JobSpec, preorder: Preorder) -> dict[str, str]:
    evidence = catalog_evidence(
        preorder, job.settings.catalog, job.settings.budgets.labelings, job.jobs
    )
    return {spec: verdict.value for spec, verdict in evidence.items()}


def _triviality(job: JobSpec) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    preorder = _load(job).preorder
    group = build_group(job.group)
    result = all_trivial_for_group(preorder, group, job.settings.budgets.labelings, job.jobs)
    report: dict[str, Any] = {
        "group": group.name,
        "verdict": result.verdict.value,
        "labelings": result.labelings,
        "consistent": result.consistent,
        "trivial": result.trivial,
        "counterexample": None if result.counterexample is None else result.counterexample.labels(),
        "abelian": _abelian(preorder, job.group),
        "evidence": _evidence(job, preorder),
    }
    if job.augment:
        augmented = augment_with_apex(preorder)
        report["augmented"] = {
            "n": augmented.n,
            "abelian": _abelian(augmented, job.group),
            "evidence": _evidence(job, augmented),
        }
    return report, []


def _classify(job: JobSpec) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    poset = _load(job).poset
    group = build_group(job.group)
    result = classify_orbits(poset, group, job.settings.budgets.orbits, job.jobs)
    orbits = [
        {
            "representative": group.label_tuple(orbit.representative),
            "size": orbit.size,
        }
        for orbit in result.orbits
    ]
    report: dict[str, Any] = {
        "group": group.name,
        "verdict": result.verdict.value,
        "orbits": result.count if result.verdict is not Verdict.UNDECIDED else None,
        "representatives": orbits,
    }
    if result.verdict is not Verdict.UNDECIDED and group.order**poset.preorder.n <= CROSS_VALIDATION_MAX_TUPLES:
        try:
            check = cross_validate(poset, group, job.settings.budgets)
        except BudgetExceeded as error:
            report["cross_validation"] = {"verdict": Verdict.UNDECIDED.value, "reason": str(error)}
        else:
            report["cross_validation"] = {
                "compared": check.compared,
                "agrees": not check.disagreements,
            }
    return report, orbits


def _oracle(job: JobSpec) -> tuple[dict[str, Any], list[dict[str, Any]]]:
    context = SuiteContext(
        seed=job.seed,
        samples=job.samples,
        identity_cases=job.settings.identity_cases,
        budgets=job.settings.budgets,
        catalog=job.settings.catalog,
    )
    suites = []
    for name in SUITES:
        result = report_time(name, run_suite, name, context).value
        status = {True: "pass", False: "fail", None: "skipped"}[result.passed]
        suites.append({"name": result.name, "status": status, "detail": result.detail})
    return {"suites": suites}, suites


_COMMANDS: dict[Command, Callable[[JobSpec], tuple[dict[str, Any], list[dict[str, Any]]]]] = {
    Command.ANALYZE: _analyze,
    Command.LATTICE: _lattice,
    Command.AUT: _aut,
    Command.TRIVIALITY: _triviality,
    Command.CLASSIFY: _classify,
    Command.ORACLE: _oracle,
}


def _status(report: Any) -> ExitStatus:
    """DISAGREEMENT for failed suites or cross-checks, UNDECIDED when a verdict ran out of budget."""
    found = ExitStatus.OK

    def visit(value: Any) -> None:
        nonlocal found
        if isinstance(value, dict):
            if value.get("status") == "fail" or value.get("agrees") is False:
                found = ExitStatus.DISAGREEMENT
            elif value.get("verdict") == Verdict.UNDECIDED.value or value.get("status") == "skipped":
                found = max(found, ExitStatus.UNDECIDED)
            for item in value.values():
                visit(item)
        elif isinstance(value, list):
            for item in value:
                visit(item)

    visit(report)
    return found


def run_command(job: JobSpec) -> Outcome:
    """
    Runs one analysis. Input errors propagate; an exhausted budget becomes an
    undecided report.
    """
    try:
        results, records = _COMMANDS[job.command](job)
    except BudgetExceeded as error:
        results = {"verdict": Verdict.UNDECIDED.value, "reason": str(error)}
        records = []
    report = {"command": job.command.value, **results}
    return Outcome(_status(report), report, records)


def _settings(config: Optional[Path], budget: Optional[int]) -> Settings:
    settings = SETTINGS if config is None else load_settings(config)
    return settings.with_budget(budget)


def make_app() -> Typer:
    """Creates CLI application."""
    app = Typer(help="Structural matrix algebras, their automorphisms and gradings.")
    shared = {"field": 2, "jobs": 1}

    @app.callback()
    def options(  # pylint: disable=unused-variable
        field_: int = Option(2, "--field", help="Prime modulus p of the base field."),
        jobs: int = Option(1, "--jobs", help="Worker processes for the exhaustive scans."),
    ) -> None:
        """Structural matrix algebras, their automorphisms and gradings."""
        shared.update(field=field_, jobs=jobs)

    def field_of(override: Optional[int]) -> int:
        return shared["field"] if override is None else override

    def jobs_of(override: Optional[int]) -> int:
        return shared["jobs"] if override is None else override

    def execute(make_job: Callable[[], JobSpec], output: Optional[Path]) -> None:
        try:
            job = make_job()
            if job.preorder is not None and not load_preorder(job.preorder).already_closed:
                typer.echo("note: the given pairs were closed to a preorder.", err=True)
            outcome = run_command(job)
        except FlagAlgebraError as error:
            typer.echo(f"error: {error}", err=True)
            raise Exit(ExitStatus.INPUT_ERROR) from error

        typer.echo(emit_report(outcome.report, job.format))
        if output is not None and outcome.records:
            append_records(output, outcome.records)
        raise Exit(outcome.status)

    preorder_option = Option(
        ...,
        "--preorder",
        help="Preorder file (text or JSON) or `fixture:<NAME>`.",
    )
    format_option = Option(ReportFormat.TEXT, "--format", help="Report format.")
    budget_option = Option(None, "--budget", help="Overrides every enumeration budget.")
    config_option = Option(None, "--config", help="TOML file replacing the default settings.")
    output_option = Option(None, "--output", help="Appends per-record JSON lines here.")
    field_option = Option(None, "--field", help="Prime modulus p of the base field.")
    group_option = Option("Z2", "--group", help="Group spec, e.g. Z3, S3, Z2xZ2, table:<path>.")
    jobs_option = Option(None, "--jobs", help="Worker processes for the exhaustive scans.")

    @app.command()
    def analyze(  # pylint: disable=unused-variable
        preorder: str = preorder_option,
        format_: ReportFormat = format_option,
        budget: Optional[int] = budget_option,
        config: Optional[Path] = config_option,
        output: Optional[Path] = output_option,
    ) -> None:
        """Classes, quotient poset, Hasse arrows, components, heights and counts."""
        execute(
            lambda: JobSpec(
                Command.ANALYZE,
                preorder,
                field=field_of(None),
                format=format_,
                jobs=jobs_of(None),
                settings=_settings(config, budget),
            ),
            output,
        )

    @app.command()
    def lattice(  # pylint: disable=unused-variable
        preorder: str = preorder_option,
        format_: ReportFormat = format_option,
        budget: Optional[int] = budget_option,
        config: Optional[Path] = config_option,
        output: Optional[Path] = output_option,
    ) -> None:
        """Antichain list, with meet and join tables on small lattices."""
        execute(
            lambda: JobSpec(
                Command.LATTICE,
                preorder,
                field=field_of(None),
                format=format_,
                jobs=jobs_of(None),
                settings=_settings(config, budget),
            ),
            output,
        )

    @app.command()
    def aut(  # pylint: disable=unused-variable
        preorder: str = preorder_option,
        field_: Optional[int] = field_option,
        format_: ReportFormat = format_option,
        budget: Optional[int] = budget_option,
        jobs: Optional[int] = jobs_option,
        config: Optional[Path] = config_option,
        output: Optional[Path] = output_option,
    ) -> None:
        """Orders of the groups building the automorphism group of M(ρ, F_p)."""
        execute(
            lambda: JobSpec(
                Command.AUT,
                preorder,
                field=field_of(field_),
                format=format_,
                jobs=jobs_of(jobs),
                settings=_settings(config, budget),
            ),
            output,
        )

    @app.command()
    def triviality(  # pylint: disable=unused-variable
        preorder: str = preorder_option,
        group: str = group_option,
        format_: ReportFormat = format_option,
        budget: Optional[int] = budget_option,
        jobs: Optional[int] = jobs_option,
        augment: bool = Option(
            False, "--augment", help="Also report on the preorder with an apex added."
        ),
        config: Optional[Path] = config_option,
        output: Optional[Path] = output_option,
    ) -> None:
        """Whether every transitive function into the group is trivial."""
        execute(
            lambda: JobSpec(
                Command.TRIVIALITY,
                preorder,
                field=field_of(None),
                group=group,
                format=format_,
                jobs=jobs_of(jobs),
                augment=augment,
                settings=_settings(config, budget),
            ),
            output,
        )

    @app.command()
    def classify(  # pylint: disable=unused-variable
        preorder: str = preorder_option,
        group: str = group_option,
        format_: ReportFormat = format_option,
        budget: Optional[int] = budget_option,
        jobs: Optional[int] = jobs_option,
        config: Optional[Path] = config_option,
        output: Optional[Path] = output_option,
    ) -> None:
        """Isomorphism classes of gradings induced by graded flags."""
        execute(
            lambda: JobSpec(
                Command.CLASSIFY,
                preorder,
                field=field_of(None),
                group=group,
                format=format_,
                jobs=jobs_of(jobs),
                settings=_settings(config, budget),
            ),
            output,
        )

    @app.command()
    def oracle(  # pylint: disable=unused-variable
        seed: int = Option(SETTINGS.seed, "--seed", help="Seed of the sampled suites."),
        samples: int = Option(SETTINGS.samples, "--samples", help="Random pairs per fixture."),
        format_: ReportFormat = format_option,
        budget: Optional[int] = budget_option,
        config: Optional[Path] = config_option,
        output: Optional[Path] = output_option,
    ) -> None:
        """Runs the brute-force suites and reports whether they agree."""
        execute(
            lambda: JobSpec(
                Command.ORACLE,
                field=field_of(None),
                format=format_,
                seed=seed,
                samples=samples,
                jobs=jobs_of(None),
                settings=_settings(config, budget),
            ),
            output,
        )

    @app.command()
    def records(  # pylint: disable=unused-variable
        path: Path,
        format_: ReportFormat = format_option,
    ) -> None:
        """Prints the records previously appended with --output."""
        try:
            with jsonl_reader(path) as reader:
                items = list(reader)
        except (OSError, jsonlines.InvalidLineError) as error:
            typer.echo(f"error: cannot read records from {path}: {error}", err=True)
            raise Exit(ExitStatus.INPUT_ERROR) from error
        typer.echo(emit_report({"command": "records", "records": items}, format_))

    return app


def main() -> None:
    """Console-script entry point."""
    make_app()()
