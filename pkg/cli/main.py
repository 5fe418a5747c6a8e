import sys

import click
import uvicorn
from pydantic import ValidationError

from analytic import AnalyticInterface
from analytic.errors import (
    ArgumentDomainError,
    TableRangeError,
    ToleranceUnreachableError,
)
from config import GlobalConfig
from experiments import ExperimentConfig, ExperimentsInterface
from experiments.errors import ExperimentConfigError, ReplicateJobError
from generator import GeneratorInterface
from generator.errors import GeneratorStateError
from graph_statistics import StatisticsInterface
from logger import Logger
from multigraph import MultiGraphInterface
from multigraph.errors import (
    BlockSizeError,
    EdgeListFormatError,
    InvalidHistoryError,
    UnknownVertexError,
)
from oracle import OracleInterface
from oracle.config import OracleConfig
from oracle.errors import (
    EnumerationCapError,
    RecurrenceInvariantError,
    WindowTooSmallError,
)
from .writers import emit, write_csv, write_json

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CHECK_FAILED = 2

OPERATIONAL_ERRORS = (
    ArgumentDomainError,
    BlockSizeError,
    EdgeListFormatError,
    EnumerationCapError,
    ExperimentConfigError,
    GeneratorStateError,
    InvalidHistoryError,
    MemoryError,
    OSError,
    RecurrenceInvariantError,
    ReplicateJobError,
    TableRangeError,
    ToleranceUnreachableError,
    UnknownVertexError,
    ValidationError,
    ValueError,
    WindowTooSmallError,
)

MODES = click.Choice(["exact", "float", "auto"])
FORMATS = click.Choice(["csv", "json"])

seed_option = click.option(
    "--seed", type=click.IntRange(0, 2**64 - 1), required=True, help="64-bit base seed"
)
threads_option = click.option(
    "--threads",
    type=click.IntRange(min=1),
    default=None,
    help="worker processes (default: PA_SECDEG_THREADS or 1)",
)
queue_option = click.option(
    "--queue", is_flag=True, help="send replicate batches to the rq replicates queue"
)
out_option = click.option(
    "--out", type=click.Path(dir_okay=False, writable=True), default="-", help="output file"
)


def _threads(threads: int | None) -> int:
    return GlobalConfig.THREADS if threads is None else threads


def _status(passed: bool, event: str, **fields) -> int:
    if passed:
        emit("info", event, passed=True, **fields)
        return EXIT_OK
    emit("warning", event, passed=False, **fields)
    return EXIT_CHECK_FAILED


def _report_rows(report) -> tuple[list[str], list[list]]:
    rows = [row.model_dump() for row in report.rows]
    columns = list(rows[0]) if rows else []
    return columns, [[row[column] for column in columns] for row in rows]


def _write_report(report, out: str, fmt: str):
    if fmt == "json":
        write_json(out, report.model_dump(mode="json"))
    else:
        columns, rows = _report_rows(report)
        write_csv(out, f"report={report.kind}", columns, rows)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False),
    default=GlobalConfig.CLI_LOG_LEVEL,
    show_default=True,
    help="threshold of the log records written to stderr as JSON lines",
)
def cli(log_level: str):
    """Second degrees of the preferential-attachment multigraph G_m^n."""
    Logger().configure(log_level.upper(), json_lines=True)


@cli.command()
@click.option("--n", type=click.IntRange(min=0), required=True, help="vertices of G_m^n")
@click.option("--m", type=click.IntRange(min=1), default=1, show_default=True, help="block size")
@seed_option
@click.option("--out", type=click.Path(dir_okay=False, writable=True), required=True)
def generate(n: int, m: int, seed: int, out: str):
    """Sample G_m^n and write the history of G_1^{mn} as an edge list."""
    history = GeneratorInterface().generate(n * m, seed)
    MultiGraphInterface().save(history, out, block_size=m)
    emit("info", "generated", n=n, m=m, seed=seed, out=out)
    return EXIT_OK


@cli.command()
@click.option("--in", "path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--format", "fmt", type=FORMATS, default="csv", show_default=True)
@out_option
def stats(path: str, fmt: str, out: str):
    """Census N/P and the degree and second-degree histograms of an edge list."""
    graph = MultiGraphInterface().load(path)
    counts = StatisticsInterface().joint_counts(graph)
    rows = counts.to_rows()

    if fmt == "json":
        write_json(
            out,
            {
                "n": graph.n,
                "m": graph.block_size,
                "rows": [
                    {"kind": kind, "l": l, "k": k, "count": count}
                    for kind, l, k, count in rows
                ],
            },
        )
    else:
        write_csv(out, f"n={graph.n} m={graph.block_size}", ["kind", "l", "k", "count"], rows)

    problems = counts.violations(edge_count=graph.edge_count)
    return _status(not problems, "census_checked", problems=problems)


@cli.group()
def analytic():
    """c(l, k) and p(l, k) tables."""


def _analytic_command(kind: str):
    @click.option("--lmax", type=click.IntRange(min=1), required=True)
    @click.option("--kmax", type=click.IntRange(min=0), required=True)
    @click.option("--mode", type=MODES, default="auto", show_default=True)
    @click.option("--check", is_flag=True, help="verify the series identities")
    @click.option("--tol", type=float, default=1e-6, show_default=True)
    @out_option
    def command(lmax: int, kmax: int, mode: str, check: bool, tol: float, out: str):
        interface = AnalyticInterface()
        build = interface.c_table if kind == "c" else interface.p_table
        table = build(lmax, kmax, mode)
        write_csv(
            out,
            f"table={kind} lmax={lmax} kmax={kmax} mode={table.mode}",
            ["l", "k", "value"],
            ([l, k, table.format_value(value)] for l, k, value in table.cells()),
        )
        if not check:
            return EXIT_OK

        if kind == "c":
            ctable, ptable = table, interface.p_table(lmax, kmax, table.mode)
        else:
            ctable, ptable = interface.c_table(lmax, kmax, table.mode), table
        report = interface.identity_checks(ctable, ptable, tol)
        return _status(
            report.passed,
            "identities_checked",
            failures=[check.model_dump() for check in report.failures()],
        )

    return command


analytic.command(name="ctable", help="Write the c(l, k) table as CSV l,k,value.")(
    _analytic_command("c")
)
analytic.command(name="ptable", help="Write the p(l, k) table as CSV l,k,value.")(
    _analytic_command("p")
)


@cli.group()
def oracle():
    """Exact expectations by recurrence and by enumeration."""


def _write_expectations(table, out: str):
    write_csv(
        out,
        f"n={table.n} provenance={table.provenance} mode={table.mode}",
        ["kind", "l", "k", "value"],
        ([kind, l, k, table.format_value(value)] for kind, l, k, value in table.rows()),
    )


@oracle.command()
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--lmax", type=click.IntRange(min=1), default=None, help="default min(n + 1, window cap)")
@click.option("--kmax", type=click.IntRange(min=1), default=None, help="default min(2n, window cap)")
@click.option("--dmax", type=click.IntRange(min=1), default=None, help="default min(n + 1, window cap)")
@click.option("--mode", type=MODES, default="auto", show_default=True)
@out_option
def dp(n, lmax, kmax, dmax, mode, out):
    """
    Run the expectation recurrences up to n vertices. Without window flags the
    window is the full one, cut to PA_SECDEG_DP_WINDOW_CAP in each direction.
    """
    cap = OracleConfig.DEFAULT_WINDOW_CAP
    table = OracleInterface().dp_expectations(
        n,
        lmax or min(n + 1, cap),
        kmax or min(2 * n, cap),
        dmax or min(n + 1, cap),
        mode,
    )
    _write_expectations(table, out)
    emit("info", "dp_finished", n=n, full_window=table.is_full_window)
    return EXIT_OK


@oracle.command(name="enum")
@click.option("--n", type=click.IntRange(min=1), required=True)
@threads_option
@out_option
def enumerate_command(n, threads, out):
    """Enumerate every attachment history of n vertices."""
    table = OracleInterface().enumerate_exact(n, _threads(threads))
    _write_expectations(table, out)
    return EXIT_OK


@oracle.command()
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--mode", type=click.Choice(["exact", "float"]), default="exact", show_default=True)
@threads_option
@out_option
def diff(n, mode, threads, out):
    """Compare the recurrences with enumeration cell by cell."""
    report = OracleInterface().dp_vs_enum(n, mode, _threads(threads))
    write_json(out, report.model_dump(mode="json"))
    return _status(report.passed, "oracle_diff", n=n, max_abs_diff=report.max_abs_diff)


@cli.command()
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--m", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--reps", type=click.IntRange(min=1), required=True)
@click.option("--kmax", type=click.IntRange(min=0), default=20, show_default=True)
@click.option("--dmax", type=click.IntRange(min=1), default=20, show_default=True)
@seed_option
@threads_option
@queue_option
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
@out_option
def mc(n, m, reps, kmax, dmax, seed, threads, queue, fmt, out):
    """Monte-Carlo replicates of G_m^n against exact and closed-form values."""
    cfg = ExperimentConfig(
        n=n,
        m=m,
        replicates=reps,
        kmax=kmax,
        dmax=dmax,
        seed=seed,
        threads=_threads(threads),
        out=None if out == "-" else out,
    )
    report = ExperimentsInterface(cfg.threads, use_queue=queue).monte_carlo(cfg)
    if fmt == "json":
        write_json(out, report.model_dump(mode="json"))
    else:
        columns, rows = _report_rows(report)
        write_csv(out, f"report=mc n={n} m={m} reps={reps} seed={seed}", columns, rows)
    return EXIT_OK


@cli.group()
def report():
    """Theorem-level reports."""


@report.command()
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--m", type=click.IntRange(min=1), default=2, show_default=True)
@click.option("--dmax", type=click.IntRange(min=1), default=10, show_default=True)
@click.option("--reps", type=click.IntRange(min=1), default=50, show_default=True)
@seed_option
@threads_option
@queue_option
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
@out_option
def theorem1(n, m, dmax, reps, seed, threads, queue, fmt, out):
    """Degree counts of G_m^n against 2nm(m+1)/(d(d+1)(d+2))."""
    experiments = ExperimentsInterface(_threads(threads), use_queue=queue)
    result = experiments.theorem1_report(n, m, dmax, reps, seed)
    _write_report(result, out, fmt)
    return _status(result.passed, "theorem1", n=n, m=m)


@report.command()
@click.option("--n", type=click.IntRange(min=1), required=True)
@click.option("--kmax", type=click.IntRange(min=1), default=40, show_default=True)
@click.option("--source", type=click.Choice(["dp", "mc"]), default="dp", show_default=True)
@click.option("--C", "constant", type=float, default=None, help="envelope constant (default: golden)")
@click.option("--lmax", type=click.IntRange(min=1), default=64, show_default=True)
@click.option("--reps", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=None, help="required for --source mc")
@threads_option
@queue_option
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
@out_option
def theorem2(n, kmax, source, constant, lmax, reps, seed, threads, queue, fmt, out):
    """Ratios k^2 M2_n(k)/(4n) against their error envelope."""
    if source == "mc" and seed is None:
        raise click.UsageError("--seed is required with --source mc")
    experiments = ExperimentsInterface(_threads(threads), use_queue=queue)
    result = experiments.theorem2_report(n, kmax, source, constant, reps, seed, lmax)
    _write_report(result, out, fmt)
    return _status(result.passed, "theorem2", n=n, source=source)


@report.command()
@click.option("--n", type=click.IntRange(min=2), required=True)
@click.option("--k", "klist", type=click.IntRange(min=1), multiple=True, default=tuple(range(1, 11)))
@click.option("--reps", type=click.IntRange(min=50), default=200, show_default=True)
@click.option("--compare-n", type=click.IntRange(min=2), default=None, help="smaller n for the CV trend")
@seed_option
@threads_option
@queue_option
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
@out_option
def concentration(n, klist, reps, compare_n, seed, threads, queue, fmt, out):
    """Deviations of X_n(k) beyond k sqrt(n) ln^2 n and the CV of X_n(k)."""
    experiments = ExperimentsInterface(_threads(threads), use_queue=queue)
    result = experiments.concentration_report(n, list(klist), reps, seed)
    passed = result.passed
    _write_report(result, out, fmt)

    if compare_n is not None:
        smaller = experiments.concentration_report(
            compare_n, list(klist), reps, seed, cv_ceiling=float("inf")
        )
        trend = experiments.concentration_trend(smaller, result)
        emit("info", "concentration_trend", **trend.model_dump(mode="json"))
        passed = passed and trend.passed
    return _status(passed, "concentration", n=n)


@report.command()
@click.option("--n", "n_grid", type=click.IntRange(min=1), multiple=True, default=(10, 100, 1000, 10_000))
@click.option("--lmax", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("--kmax", type=click.IntRange(min=1), default=30, show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
@out_option
def bounds(n_grid, lmax, kmax, fmt, out):
    """Exact error bounds on a grid of n."""
    result = ExperimentsInterface().bound_checks(list(n_grid), lmax, kmax)
    _write_report(result, out, fmt)
    return _status(result.passed, "bounds", n_grid=list(n_grid))


@cli.command()
def worker():
    """Run an rq worker for the replicates queue."""
    from experiments.replicate_queue import ReplicateQueue

    ReplicateQueue().run_worker()
    return EXIT_OK


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int):
    """Serve the HTTP API."""
    uvicorn.run("api.main:app", host=host, port=port)
    return EXIT_OK


def run(argv: list[str] | None = None) -> int:
    """
    Dispatch argv and return the exit code: 0 success, 1 usage or operational
    error, 2 when a check fails.
    """
    try:
        code = cli.main(args=argv, prog_name="pa-secdeg", standalone_mode=False)
    except click.UsageError as e:
        emit(
            "error",
            "usage_error",
            message=e.format_message(),
            usage=e.ctx.get_usage() if e.ctx else None,
        )
        return EXIT_USAGE
    except click.ClickException as e:
        emit("error", "usage_error", message=e.format_message())
        return EXIT_USAGE
    except click.Abort:
        emit("error", "aborted")
        return EXIT_USAGE
    except OPERATIONAL_ERRORS as e:
        emit("error", type(e).__name__, message=str(e))
        return EXIT_USAGE
    return EXIT_OK if code is None else int(code)


def main():
    sys.exit(run())
