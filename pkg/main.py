"""Command-line interface for the Cartier-Manin toolkit.

Usage:
    python main.py matrix --family minus --p 11            # entries of N(t) over F_11[t]
    python main.py matrix --family minus --p 7 --t0 2      # N at one fibre, with its classification
    python main.py table --which split --pmax 439          # genus/degree table for split primes
    python main.py verify --check genus --pmin 7 --pmax 439
    python main.py scan --family plus --p 7                # classify every fibre mod 7
"""

import asyncio
import logging
import sys
import time
from typing import Any, Dict, List, NoReturn, Optional

import click
import pandas as pd

from curves import families
from curves.cartier import classify, coeff_matrix
from models.exceptions import NotSquarefreeError, PrimeError
from models.pydantic_models import OutputRecord, RunConfig
from services.coordinator import TableCoordinator
from services.verification import CHECKS

__version__ = "1.0.0"

logger = logging.getLogger(__name__)

EXIT_FAILED_CHECK = 1
EXIT_INVALID_PRIME = 2
EXIT_DEGENERATE = 3

TABLE_COLUMNS = {
    "inert": ["p", "genus", "deg_d", "genus_minus_degree"],
    "split": ["p", "deg_d", "non_ordinary", "difference"],
}

FAMILY = click.Choice(["minus", "plus"])
ROW_FORMATS = click.Choice(["json", "csv"])


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def fail(error: Exception, code: int) -> NoReturn:
    click.echo(f"Error: {error}", err=True)
    sys.exit(code)


def emit(
    ctx: click.Context,
    payload: Dict[str, Any],
    rows: List[Dict[str, Any]],
    output_format: str,
    started: float,
    columns: Optional[List[str]] = None,
) -> None:
    """Write the JSON envelope or the CSV row table to stdout."""
    elapsed_ms = round((time.perf_counter() - started) * 1000.0, 3)
    logger.debug("%s finished in %.3f ms", ctx.info_name, elapsed_ms)
    if output_format == "csv":
        if rows:
            frame = pd.json_normalize(rows).convert_dtypes()
            if columns:
                frame = frame[columns + [c for c in frame.columns if c not in columns]]
        else:
            frame = pd.DataFrame(columns=columns or [])
        click.echo(frame.to_csv(index=False, lineterminator="\n"), nl=False)
        return
    record = OutputRecord(
        command={"name": ctx.info_name, **ctx.params},
        payload=payload,
        timing_ms=elapsed_ms,
    )
    click.echo(record.json(indent=2))


@click.group()
@click.version_option(version=__version__, prog_name="cartier-manin")
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG logging on stderr")
@click.pass_context
def cli(ctx: click.Context, verbose: int):
    """
    Cartier-Manin matrices of hyperelliptic curves over F_p, the families
    C-(t): y^2 = x^5 - 5x^3 + 5x + 2 - 4t and C+(t): y^2 = (x + 2)(...),
    and the genus tables of X0_(5,oo,oo)(P).
    """
    configure_logging(verbose)
    ctx.obj = {"verbosity": verbose}


@cli.command()
@click.option("--family", type=FAMILY, required=True)
@click.option("--p", "p", type=int, required=True, help="Prime p > 5")
@click.option("--t0", type=int, default=None, help="Specialise at t = t0; omit for N(t)")
@click.option("--format", "output_format", type=click.Choice(["json", "csv", "pretty"]), default="json")
@click.pass_context
def matrix(ctx: click.Context, family: str, p: int, t0: Optional[int], output_format: str):
    """Coefficient matrix N of a family member, parametric or at one fibre."""
    started = time.perf_counter()
    try:
        spec = families.family_spec(family, p)
    except PrimeError as e:
        fail(e, EXIT_INVALID_PRIME)
    header = {"family": spec.sign, "p": p, "split_class": spec.split_class, "modulus": p}

    if t0 is None:
        N = families.parametric_coeff_matrix(family, p)
        rows = []
        for i in (1, 2):
            for j in (1, 2):
                poly = N.entry(i, j)
                rows.append(
                    {
                        "i": i,
                        "j": j,
                        "index": N.coefficient_index(i, j, p),
                        "polynomial": str(poly),
                        "degree": poly.degree,
                        "coefficients": list(poly.values),
                    }
                )
        if output_format == "pretty":
            width = max(len(r["polynomial"]) for r in rows)
            click.echo(f"N(t) for C{'-' if family == 'minus' else '+'} over F_{p}[t]:")
            for i in (0, 2):
                click.echo(f"[ {rows[i]['polynomial']:>{width}}  {rows[i + 1]['polynomial']:>{width}} ]")
            return
        emit(ctx, {**header, "entries": rows}, rows, output_format, started)
        return

    try:
        curve = families.curve_model_at(family, p, t0)
    except NotSquarefreeError as e:
        fail(e, EXIT_DEGENERATE)
    N = coeff_matrix(curve, p)
    classification = classify(N)
    values = N.to_ints()
    rows = [
        {"i": i, "j": j, "index": N.coefficient_index(i, j, p), "value": values[i - 1][j - 1]}
        for i in (1, 2)
        for j in (1, 2)
    ]
    if output_format == "pretty":
        click.echo(f"N at t0={t0 % p} for C{'-' if family == 'minus' else '+'} over F_{p}:")
        for row in values:
            click.echo("[ " + "  ".join(f"{v:>{len(str(p))}}" for v in row) + " ]")
        click.echo(f"{classification.tag} (p-rank {classification.p_rank})")
        return
    payload = {
        **header,
        "t0": t0 % p,
        "matrix": values,
        "classification": classification.dict(),
    }
    emit(ctx, payload, rows, output_format, started)


@cli.command()
@click.option("--which", type=click.Choice(["inert", "split"]), required=True)
@click.option("--pmax", type=click.IntRange(min=7), required=True)
@click.option("--format", "output_format", type=ROW_FORMATS, default="csv")
@click.option("--jobs", type=click.IntRange(min=1), default=1, help="Worker processes")
@click.pass_context
def table(ctx: click.Context, which: str, pmax: int, output_format: str, jobs: int):
    """Reproduce the genus/degree table for inert or split primes up to pmax."""
    started = time.perf_counter()
    config = RunConfig(jobs=jobs, output_format=output_format, verbosity=ctx.obj["verbosity"])
    rows = asyncio.run(TableCoordinator(config).build_table(which, pmax))
    records = [row.dict() for row in rows]
    payload = {"which": which, "pmax": pmax, "columns": TABLE_COLUMNS[which], "rows": records}
    emit(ctx, payload, records, output_format, started, columns=TABLE_COLUMNS[which])


@cli.command()
@click.option("--check", type=click.Choice(list(CHECKS)), required=True)
@click.option("--pmin", type=int, default=7, show_default=True)
@click.option("--pmax", type=int, required=True)
@click.option("--jobs", type=click.IntRange(min=1), default=1, help="Worker processes")
@click.option("--format", "output_format", type=ROW_FORMATS, default="json")
@click.pass_context
def verify(ctx: click.Context, check: str, pmin: int, pmax: int, jobs: int, output_format: str):
    """
    Check a statement for every applicable prime in [pmin, pmax].

    Exits 1 if any prime fails, except for the remark check, which only reports.
    """
    if pmin > pmax:
        raise click.BadParameter(f"pmin={pmin} exceeds pmax={pmax}", param_hint="--pmin")
    started = time.perf_counter()
    config = RunConfig(jobs=jobs, output_format=output_format, verbosity=ctx.obj["verbosity"])
    outcome = asyncio.run(TableCoordinator(config).run_verification(check, pmin, pmax))
    summary = outcome["summary"]
    results = [r.dict() for r in outcome["results"]]
    payload = {"summary": summary.dict(), "results": results}
    emit(ctx, payload, results, output_format, started, columns=["p", "check", "passed"])
    if check != "remark" and not summary.all_passed:
        click.echo(f"{summary.failed} of {summary.total} primes failed the {check} check", err=True)
        sys.exit(EXIT_FAILED_CHECK)


@cli.command()
@click.option("--family", type=FAMILY, required=True)
@click.option("--p", "p", type=int, required=True, help="Prime p > 5")
@click.option("--format", "output_format", type=ROW_FORMATS, default="json")
@click.pass_context
def scan(ctx: click.Context, family: str, p: int, output_format: str):
    """Classify the fibre at every t0 in F_p; degenerate fibres are flagged."""
    started = time.perf_counter()
    try:
        report = families.scan_family(family, p)
    except PrimeError as e:
        fail(e, EXIT_INVALID_PRIME)
    payload = report.dict()
    emit(ctx, payload, payload["entries"], output_format, started)


if __name__ == "__main__":
    cli()
