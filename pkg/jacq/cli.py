import json
import logging
import sys
from enum import Enum
from itertools import islice
from typing import Any, NoReturn, Optional

import typer

from . import __version__
from .bench import run_bench
from .constants import BENCH_METHODS, DEFAULT_MAX_R, MAX_R_ENV_VAR
from .errors import BenchDisagreement, DomainError, JacqError, UnknownIdentity
from .genfunc import jlq_series, jq_series
from .harness import run_identity, run_suite, summarize
from .logs import get_logger, set_level
from .matrices import describe
from .quaternion import jlq_binet, jlq_term, jq_binet, jq_term
from .reports import serialize, to_csv
from .sequences import (
    SeqKind,
    printed_corollary_s2,
    seq_term,
    sum_closed,
    sum_direct,
)

app = typer.Typer()
logger = get_logger("cli")

REPORT_FIELDS = ["identity_id", "n", "r", "s", "status", "pass", "lhs", "rhs", "reason"]
QUAT_FIELDS = ["s", "i", "j", "k"]
SUM_FIELDS = [
    "r",
    "n",
    "direct",
    "closed",
    "degenerate",
    "printed_corollary",
    "erratum",
]
BENCH_FIELDS = ["method", "n", "wall_time", "value_digits", "multiplications"]


class QuatSeq(str, Enum):
    JQ3 = "JQ3"
    jQ3 = "jQ3"


class OutputFormat(str, Enum):
    json = "json"
    csv = "csv"


class MatrixName(str, Enum):
    M = "M"
    L = "L"
    F = "F"
    A = "A"
    Q = "Q"
    B = "B"
    H = "H"
    R = "R"
    RM = "RM"


def _fail(err: JacqError, code: int = 2) -> NoReturn:
    logger.error(str(err))
    raise typer.Exit(code)


def _emit(rows: list[dict[str, Any]], fields: list[str], fmt: OutputFormat) -> None:
    if fmt is OutputFormat.csv:
        typer.echo(to_csv(rows, fields), nl=False)
        return
    for row in rows:
        typer.echo(json.dumps(row))


@app.callback()
def main_callback(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="Warnings only"),
):
    """Exact third-order Jacobsthal numbers, quaternions and identity checks."""
    # terms past J(14000) have more than the default 4300 printable digits
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    if verbose:
        set_level(logging.DEBUG)
    elif quiet:
        set_level(logging.WARNING)
    else:
        set_level(logging.INFO)


@app.command()
def term(
    seq: SeqKind = typer.Option(..., "--seq", help="Sequence"),
    n: int = typer.Option(..., "--n", help="Index"),
    fmt: OutputFormat = typer.Option(OutputFormat.json, "--format"),
):
    """Print one term of J3, j3, J2 or jL2."""
    try:
        value = seq_term(seq, n)
    except DomainError as e:
        _fail(e)
    _emit([{"seq": seq.value, "n": n, "value": str(value)}], ["seq", "n", "value"], fmt)


@app.command()
def qterm(
    seq: QuatSeq = typer.Option(..., "--seq", help="Quaternion sequence"),
    n: int = typer.Option(..., "--n", help="Index"),
    binet: bool = typer.Option(False, "--binet", help="Evaluate by Binet formula"),
    fmt: OutputFormat = typer.Option(OutputFormat.json, "--format"),
):
    """Print one third-order Jacobsthal (or Jacobsthal-Lucas) quaternion."""
    if seq is QuatSeq.JQ3:
        evaluate = jq_binet if binet else jq_term
    else:
        evaluate = jlq_binet if binet else jlq_term
    try:
        value = evaluate(n)
    except DomainError as e:
        _fail(e)
    if fmt is OutputFormat.csv:
        row = {"seq": seq.value, "n": n, **value.to_json()}
        _emit([row], ["seq", "n", *QUAT_FIELDS], fmt)
        return
    _emit([{"seq": seq.value, "n": n, "value": value.to_json()}], [], fmt)


@app.command("sum")
def sum_command(
    r: int = typer.Option(..., "--r", help="Stride"),
    n: int = typer.Option(..., "--n", help="Upper index"),
    fmt: OutputFormat = typer.Option(OutputFormat.json, "--format"),
):
    """Sum J(rk) for k = 0..n directly and by the closed formula."""
    if r < 1 or n < 0:
        _fail(DomainError(f"sum needs r >= 1 and n >= 0, got r={r}, n={n}"))
    direct = sum_direct(r, n)
    row: dict[str, Any] = {"r": r, "n": n, "direct": str(direct)}
    # the closed forms start at n = 1
    if n > 0:
        if r % 3 == 0:
            row.update(closed=None, degenerate=True)
        else:
            row.update(closed=str(sum_closed(r, n)), degenerate=False)
        if r == 2:
            printed = printed_corollary_s2(n)
            row.update(printed_corollary=str(printed), erratum=printed != direct)
    _emit([row], SUM_FIELDS, fmt)


@app.command()
def verify(
    identity: str = typer.Option(..., "--identity", help="Identity tag or 'all'"),
    start: int = typer.Option(0, "--from", help="First index"),
    stop: int = typer.Option(..., "--to", help="Last index"),
    r_from: int = typer.Option(1, "--r-from", help="Smallest stride"),
    max_r: int = typer.Option(DEFAULT_MAX_R, "--max-r", envvar=MAX_R_ENV_VAR),
    workers: int = typer.Option(1, "--workers", help="Worker threads"),
    fmt: OutputFormat = typer.Option(OutputFormat.json, "--format"),
):
    """Check identities over an index range; exit 1 on any counterexample."""
    try:
        if identity == "all":
            reports = run_suite(None, start, stop, max_r, workers, r_from)
        else:
            reports = run_identity(identity, start, stop, max_r, workers, r_from)
    except (DomainError, UnknownIdentity) as e:
        _fail(e)
    rows = [report.model_dump(mode="json", by_alias=True) for report in reports]
    _emit(rows, REPORT_FIELDS, fmt)
    summary = summarize(reports)
    if summary.counterexample is not None:
        if fmt is OutputFormat.json:
            counterexample = summary.counterexample.model_dump(
                mode="json", by_alias=True
            )
            typer.echo(json.dumps({"counterexample": counterexample}))
        raise typer.Exit(1)


@app.command()
def series(
    seq: QuatSeq = typer.Option(QuatSeq.JQ3, "--seq", help="Quaternion sequence"),
    count: int = typer.Option(10, "--count", help="Number of coefficients"),
    fmt: OutputFormat = typer.Option(OutputFormat.json, "--format"),
):
    """Print the first coefficients of the generating function."""
    if count < 0:
        _fail(DomainError(f"count must be >= 0, got {count}"))
    source = jq_series() if seq is QuatSeq.JQ3 else jlq_series()
    rows = [coefficient.to_json() for coefficient in islice(source, count)]
    _emit(rows, QUAT_FIELDS, fmt)


@app.command()
def matrix(
    name: MatrixName = typer.Option(..., "--name", help="Matrix to print"),
    r: Optional[int] = typer.Option(None, "--r", help="Stride"),
    n: Optional[int] = typer.Option(None, "--n", help="Index or power"),
):
    """Print one of the generating matrices as JSON."""
    try:
        value = describe(name.value, r=r, n=n)
    except DomainError as e:
        _fail(e)
    typer.echo(
        json.dumps({"name": name.value, "r": r, "n": n, "rows": serialize(value)})
    )


@app.command()
def bench(
    n: int = typer.Option(..., "--n", help="Index"),
    methods: str = typer.Option(",".join(BENCH_METHODS), "--methods"),
    fmt: OutputFormat = typer.Option(OutputFormat.json, "--format"),
):
    """Evaluate J(n) by each method, check agreement and report timings."""
    selected = [m.strip() for m in methods.split(",") if m.strip()]
    try:
        records = run_bench(n, selected)
    except BenchDisagreement as e:
        _fail(e, code=1)
    except DomainError as e:
        _fail(e)
    _emit([record.model_dump() for record in records], BENCH_FIELDS, fmt)


@app.command()
def version():
    """Print the current version of the application."""
    typer.echo(f"jacq version: {__version__}")


def main():
    app()


if __name__ == "__main__":
    main()
