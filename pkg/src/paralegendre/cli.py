"""Command-line front end.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage error,
3 the Fock truncation could not be made large enough.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction

import click

from . import checks
from .calculus import d_integrate
from .fock import TruncationError, closed_form_norm, converged_norm
from .legendre import GENERATORS, legendre, legendre_family, moment_x, moment_x_direct
from .polynomial import (
    format_coeffs,
    format_rational,
    parse_coeffs,
    parse_rational,
    poly_eval_exact,
    poly_eval_float,
    pretty,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_TRUNCATION = 3


class RationalType(click.ParamType):
    name = "rational"

    def __init__(self, positive: bool = False):
        self.positive = positive

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            q = value
        else:
            try:
                q = parse_rational(str(value))
            except (ValueError, ZeroDivisionError):
                self.fail(f"{value!r} is not a rational number (use a or a/b)", param, ctx)
        if self.positive and q <= 0:
            self.fail(f"{value!r} must be positive", param, ctx)
        return q


RATIONAL = RationalType()
POSITIVE_RATIONAL = RationalType(positive=True)
NONNEG = click.IntRange(min=0)
FORMAT = click.option(
    "--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text", show_default=True
)


def _ps(ps) -> list[Fraction]:
    return list(ps) if ps else [Fraction(1)]


def _emit_csv(header, rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    click.echo(buf.getvalue(), nl=False)


def _emit_json(obj) -> None:
    click.echo(json.dumps(obj, indent=2))


@click.group()
def cli():
    """Deformed Legendre polynomials of the parabose calculus."""


@cli.command()
@click.option("--n", "n", type=NONNEG, help="Degree to print.")
@click.option("--max-n", type=NONNEG, help="Print P_0..P_max-n instead of a single degree.")
@click.option("--p", "ps", type=POSITIVE_RATIONAL, multiple=True, help="Paraquantization order (repeatable).")
@click.option("--generator", type=click.Choice(GENERATORS), default="recursion", show_default=True)
@FORMAT
def gen(n, max_n, ps, generator, fmt):
    """Print deformed Legendre polynomials with exact coefficients."""
    if (n is None) == (max_n is None):
        raise click.UsageError("give exactly one of --n or --max-n")
    degrees = [n] if n is not None else list(range(max_n + 1))
    records = []
    for p in _ps(ps):
        fam = legendre_family(max(degrees), p, generator)
        records.extend((p, k, fam[k]) for k in degrees)

    if fmt == "json":
        out = [{"p": format_rational(p), "n": k, "coeffs": [format_rational(c) for c in f.coeffs]} for p, k, f in records]
        _emit_json(out[0] if len(out) == 1 else out)
    elif fmt == "csv":
        _emit_csv(["p", "n", "coeffs"], [(format_rational(p), k, format_coeffs(f)) for p, k, f in records])
    else:
        multi_p = len(ps) > 1
        for p, k, f in records:
            tag = f"  (p = {format_rational(p)})" if multi_p else ""
            click.echo(f"P_{k} = {pretty(f)}{tag}")
            click.echo(f"coeffs: {format_coeffs(f)}")


@cli.command()
@click.option(
    "--suite",
    "suites",
    type=click.Choice(checks.SUITES + ("all",)),
    multiple=True,
    help="Suite to run (repeatable, default all).",
)
@click.option("--max-n", type=NONNEG, default=20, show_default=True)
@click.option("--p", "ps", type=POSITIVE_RATIONAL, multiple=True, help="Default grid: 1, 2, 3, 5, 7/2.")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for randomized calculus pairs.")
@click.option("--pairs", type=NONNEG, default=200, show_default=True)
@click.option("--r", "rs", type=float, multiple=True, help="Squeezing values for the fock suite.")
@click.option("--max-m", type=NONNEG, default=8, show_default=True)
@click.option("--dim", type=click.IntRange(min=2), default=None, help="Starting truncation dimension.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def check(suites, max_n, ps, seed, pairs, rs, max_m, dim, fmt):
    """Run verification suites; exit 1 if any check fails."""
    chosen = checks.SUITES if not suites or "all" in suites else tuple(suites)
    ps = list(ps) if ps else list(checks.DEFAULT_P_GRID)
    rs = list(rs) if rs else [0.1, 0.5, 1.0, 2.0]
    results = list(
        checks.run_suites(chosen, ps=ps, max_n=max_n, seed=seed, pairs=pairs, rs=rs, max_m=max_m, dim=dim)
    )
    failed = [res for res in results if not res.passed]
    header = {
        "seed": seed,
        "suites": [s for s in checks.SUITES if s in chosen],
        "p": [format_rational(p) for p in ps],
        "max_n": max_n,
    }
    if fmt == "json":
        _emit_json(
            {
                **header,
                "results": [
                    {"suite": r.suite, "check": r.name, "passed": r.passed, "detail": r.detail} for r in results
                ],
                "failed": len(failed),
            }
        )
    else:
        click.echo(
            f"# seed={seed} suites={','.join(header['suites'])} p={','.join(header['p'])} max_n={max_n}"
        )
        for res in results:
            status = "PASS" if res.passed else "FAIL"
            detail = f"  [{res.detail}]" if res.detail else ""
            click.echo(f"{status} {res.suite}: {res.name}{detail}")
        click.echo(f"# {len(results) - len(failed)}/{len(results)} passed")
    for res in failed:
        click.echo(f"failed: {res.suite}: {res.name} {res.detail}".rstrip(), err=True)
    sys.exit(EXIT_CHECK_FAILED if failed else EXIT_OK)


@cli.command()
@click.option("--coeffs", required=True, help='Ascending coefficients, e.g. "-1/2,0,3/2".')
@click.option("--a", "a", type=RATIONAL, required=True)
@click.option("--b", "b", type=RATIONAL, required=True)
@click.option("--p", "p", type=POSITIVE_RATIONAL, default="1", show_default=True)
@FORMAT
def integrate(coeffs, a, b, p, fmt):
    """Exact deformed definite integral of a polynomial over [a, b]."""
    try:
        f = parse_coeffs(coeffs)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.BadParameter(str(exc), param_hint="--coeffs") from exc
    value = d_integrate(f, a, b, p)
    fields = {
        "p": format_rational(p),
        "a": format_rational(a),
        "b": format_rational(b),
        "coeffs": [format_rational(c) for c in f.coeffs],
        "value": format_rational(value),
    }
    if fmt == "json":
        _emit_json(fields)
    elif fmt == "csv":
        _emit_csv(["p", "a", "b", "coeffs", "value"], [(fields["p"], fields["a"], fields["b"], format_coeffs(f), fields["value"])])
    else:
        click.echo(format_rational(value))


@cli.command()
@click.option("--max-n", type=NONNEG, default=6, show_default=True)
@click.option("--p", "ps", type=POSITIVE_RATIONAL, multiple=True)
@FORMAT
def moments(max_n, ps, fmt):
    """Table of x-moments of neighbouring P_n, checked against direct integration."""
    rows = []
    failed = 0
    for p in _ps(ps):
        for n in range(max_n + 1):
            for m in range(max_n + 1):
                closed = moment_x(n, m, p)
                direct = moment_x_direct(n, m, p)
                failed += closed != direct
                if abs(n - m) == 1 or closed != direct:
                    rows.append((format_rational(p), n, m, format_rational(closed), format_rational(direct), closed == direct))
    if fmt == "json":
        keys = ("p", "n", "m", "closed_form", "direct", "match")
        _emit_json([dict(zip(keys, row)) for row in rows])
    elif fmt == "csv":
        _emit_csv(["p", "n", "m", "closed_form", "direct", "match"], rows)
    else:
        for p, n, m, closed, direct, ok in rows:
            click.echo(f"p={p} n={n} m={m} closed={closed} direct={direct} {'ok' if ok else 'MISMATCH'}")
    sys.exit(EXIT_CHECK_FAILED if failed else EXIT_OK)


@cli.command("eval")
@click.option("--n", "n", type=NONNEG, required=True)
@click.option("--p", "p", type=POSITIVE_RATIONAL, default="1", show_default=True)
@click.option("--x", "x", required=True, help="Point, rational like 3/2 or decimal.")
@click.option("--float", "use_float", is_flag=True, help="Evaluate in double precision instead of exactly.")
@FORMAT
def eval_cmd(n, p, x, use_float, fmt):
    """Evaluate P_n at a point."""
    poly = legendre(n, p)
    if use_float:
        try:
            x0 = float(x)
            value = poly_eval_float(poly, x0)
        except ValueError as exc:
            raise click.BadParameter(str(exc), param_hint="--x") from exc
        x_text, v_text = repr(x0), repr(value)
    else:
        try:
            x0 = parse_rational(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise click.BadParameter(str(exc), param_hint="--x") from exc
        x_text, v_text = format_rational(x0), format_rational(poly_eval_exact(poly, x0))
    if fmt == "json":
        _emit_json({"p": format_rational(p), "n": n, "x": x_text, "value": v_text})
    elif fmt == "csv":
        _emit_csv(["p", "n", "x", "value"], [(format_rational(p), n, x_text, v_text)])
    else:
        click.echo(v_text)


@cli.command("fock-norm")
@click.option("--r", "rs", type=float, multiple=True, required=True)
@click.option("--m", "ms", type=NONNEG, multiple=True, required=True)
@click.option("--p", "ps", type=POSITIVE_RATIONAL, multiple=True)
@click.option("--dim", type=click.IntRange(min=2), default=None, help="Starting truncation (env PARALEGENDRE_FOCK_DIM).")
@click.option("--tol", type=float, default=1e-9, show_default=True)
@FORMAT
def fock_norm(rs, ms, ps, dim, tol, fmt):
    """Compare simulated excitation norms against the closed form."""
    header = ["p", "r", "m", "dim", "numeric_norm", "closed_form", "rel_err"]
    rows = []
    try:
        for p in _ps(ps):
            for r in rs:
                for m in ms:
                    numeric, used = converged_norm(r, m, p, dim)
                    closed = closed_form_norm(r, m, p)
                    rows.append((format_rational(p), r, m, used, numeric, closed, abs(numeric / closed - 1)))
    except TruncationError as exc:
        click.echo(f"truncation failure: {exc}", err=True)
        sys.exit(EXIT_TRUNCATION)
    if fmt == "json":
        _emit_json([dict(zip(header, row)) for row in rows])
    elif fmt == "csv":
        _emit_csv(header, [(p, repr(r), m, d, repr(a), repr(b), repr(e)) for p, r, m, d, a, b, e in rows])
    else:
        for p, r, m, d, a, b, e in rows:
            click.echo(f"p={p} r={r!r} m={m} dim={d} numeric={a!r} closed={b!r} rel_err={e:.3e}")
    bad = [row for row in rows if not row[-1] < tol]
    for row in bad:
        click.echo(f"rel_err {row[-1]:.3e} exceeds {tol:g} at p={row[0]} r={row[1]} m={row[2]}", err=True)
    sys.exit(EXIT_CHECK_FAILED if bad else EXIT_OK)


def main(argv=None):
    cli.main(args=argv, prog_name="paralegendre")


if __name__ == "__main__":
    main()
