"""Command-line interface.

Usage:
    dyckcount count 3 3 --terms
    dyckcount table --max-m 10 --max-n 10 --format csv --out table.csv
    dyckcount verify --suite all
    dyckcount census 3 3

Exit status is 0 on success, 1 when an identity or cross-check fails and
2 on usage or precondition errors.
"""
from __future__ import annotations

import csv
import functools
import io
import json
import sys

import click

from . import __version__
from .arith import format_fraction
from .counting import CountResult, Method, count
from .exceptions import CrossCheckError, PreconditionError
from .partitions import MultSeq
from .paths import census as path_census
from .paths import count_dp
from .verify import DEFAULT_LIMITS, LIMIT_MEANING, SUITES, run_suite

EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

METHOD_CHOICES = ["auto"] + [m.value for m in Method]


def _handle_errors(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except PreconditionError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_USAGE)
        except CrossCheckError as exc:
            click.echo(f"cross-check failed: {exc}", err=True)
            sys.exit(EXIT_CHECK_FAILED)

    return wrapper


def _partition_pairs(a: MultSeq) -> list[list[int]]:
    return [[part, mult] for part, mult in a.parts()]


def _partition_label(a: MultSeq) -> str:
    return "(" + " ".join(f"{p}^{k}" if k > 1 else str(p) for p, k in a.parts()) + ")"


def output_record(m: int, n: int, result: CountResult, with_terms: bool = False) -> dict:
    rec = {"m": m, "n": n, "method": result.method.value, "value": str(result.value)}
    if with_terms and result.terms is not None:
        rec["terms"] = [
            {"partition": _partition_pairs(a), "value": format_fraction(t)} for a, t in result.terms
        ]
    return rec


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


@click.group()
@click.version_option(__version__, prog_name="dyckcount")
def cli():
    """Exact counts of lattice paths below the line from (0,0) to (m,n)."""


@cli.command("count")
@click.argument("m", type=int)
@click.argument("n", type=int)
@click.option("--method", "method", type=click.Choice(METHOD_CHOICES), default="auto", show_default=True)
@click.option("--terms", is_flag=True, help="Also print the per-partition terms of the main formula.")
@click.option("--json", "as_json", is_flag=True, help="Emit one JSON record instead of plain text.")
@_handle_errors
def count_cmd(m, n, method, terms, as_json):
    """Print C(M, N)."""
    if method == "auto":
        method = Method.MAIN.value
    if terms and method != Method.MAIN.value:
        raise PreconditionError("--terms is only available with the main method")
    result = count(m, n, method)
    if as_json:
        click.echo(_dump_json(output_record(m, n, result, terms)), nl=False)
        return
    click.echo(str(result.value))
    if terms:
        for a, t in result.terms:
            click.echo(f"{_partition_label(a)}\t{format_fraction(t)}")


def render_table(max_m: int, max_n: int, fmt: str, method: str = Method.MAIN.value) -> str:
    rows = [(m, n, count(m, n, method)) for m in range(1, max_m + 1) for n in range(1, max_n + 1)]
    if fmt == "json":
        return _dump_json([output_record(m, n, r) for m, n, r in rows])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m", "n", "value"])
    for m, n, r in rows:
        writer.writerow([m, n, str(r.value)])
    return buf.getvalue()


@cli.command("table")
@click.option("--max-m", type=click.IntRange(min=1), required=True)
@click.option("--max-n", type=click.IntRange(min=1), required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@click.option("--method", type=click.Choice(["main", "recurrence", "oracle"]), default="main", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@_handle_errors
def table_cmd(max_m, max_n, fmt, method, out):
    """Emit C(m, n) for 1 <= m <= MAX_M, 1 <= n <= MAX_N."""
    text = render_table(max_m, max_n, fmt, method)
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


@cli.command("verify")
@click.option("--suite", type=click.Choice(["all"] + list(SUITES)), default="all", show_default=True)
@click.option("--limit", type=click.IntRange(min=1), default=None,
              help="Parameter bound; its meaning depends on the suite (see --help-limits).")
@click.option("--quiet", is_flag=True, help="Only print failures and the summary.")
@click.option("--help-limits", is_flag=True, help="List suites with their default limits and exit.")
@_handle_errors
def verify_cmd(suite, limit, quiet, help_limits):
    """Run identity and oracle checks; exit 1 if any fails."""
    if help_limits:
        for name in SUITES:
            click.echo(f"{name}\tdefault {DEFAULT_LIMITS[name]}\t{LIMIT_MEANING[name]}")
        return
    passed = failed = 0
    for res in run_suite(suite, limit):
        if res.passed:
            passed += 1
            if not quiet:
                click.echo(f"PASS {res.suite} {res.case}")
        else:
            failed += 1
            click.echo(f"FAIL {res.suite} {res.case}: {res.detail}")
    click.echo(f"summary: {passed} passed, {failed} failed")
    if failed:
        sys.exit(EXIT_CHECK_FAILED)


def census_payload(m: int, n: int) -> dict:
    records = path_census(m, n)
    total = sum(r.count for r in records)
    expected = count_dp(m, n)
    if total != expected:
        raise CrossCheckError(f"census total {total} != C({m}, {n}) = {expected}")
    return {
        "m": m,
        "n": n,
        "records": [
            {"type": _partition_pairs(r.type), "period": r.period, "count": str(r.count)} for r in records
        ],
        "total": str(total),
    }


@cli.command("census")
@click.argument("m", type=int)
@click.argument("n", type=int)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json", show_default=True)
@_handle_errors
def census_cmd(m, n, fmt):
    """Count Dyck paths to (M, N) by type and period (exhaustive)."""
    payload = census_payload(m, n)
    if fmt == "json":
        click.echo(_dump_json(payload), nl=False)
        return
    for r in payload["records"]:
        label = "(" + " ".join(f"{p}^{k}" if k > 1 else str(p) for p, k in r["type"]) + ")"
        click.echo(f"type {label}\tperiod {r['period']}\tcount {r['count']}")
    click.echo(f"total {payload['total']}")


def main(argv=None):
    cli.main(args=argv, prog_name="dyckcount")


if __name__ == "__main__":  # pragma: no cover
    main()
