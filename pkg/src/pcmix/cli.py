"""Command-line surface: coefficient tables, grid verification, catalogue info.

Output is byte-deterministic for fixed flags: fixed key order, fixed row
order, no timestamps.  Exit codes: 0 success, 1 mathematical counterexample,
2 usage error.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import families as fam
from . import special as sp
from .identities import (
    ALL_IDS,
    AUDIT_IDS,
    CATALOGUE,
    CORE_IDS,
    DEFAULT_GRID,
    Grid,
    ParameterError,
    VerificationResult,
    summarize,
    verify_grid,
)
from .poly import Poly


def _parse_rational(text: str) -> Fraction:
    text = str(text)
    if any(ch in text for ch in ".eE"):
        raise ValueError(text)
    return Fraction(text)


class RationalType(click.ParamType):
    """Accepts integer or p/q literals, never decimals."""

    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return _parse_rational(value)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not an exact rational (use integers or p/q)", param, ctx)


class RationalListType(click.ParamType):
    name = "rationals"

    def convert(self, value, param, ctx):
        try:
            return tuple(_parse_rational(part) for part in str(value).split(","))
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a comma-separated list of rationals", param, ctx)


class IntListType(click.ParamType):
    name = "integers"

    def convert(self, value, param, ctx):
        try:
            return tuple(int(part) for part in str(value).split(","))
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of integers", param, ctx)


RATIONAL = RationalType()
RATIONAL_LIST = RationalListType()
INT_LIST = IntListType()


def _pair(value: Fraction) -> list[int]:
    return [value.numerator, value.denominator]


def _poly_wire(p: Poly) -> list[list[int]]:
    return [_pair(c) for c in p.coeffs]


def _param_wire(name: str, value) -> object:
    if name in ("k", "r", "s", "m"):
        return int(value)
    return str(value)


_WIRE_NAMES = {"lam": "lambda"}


_FAMILY_SPECS = {
    "poisson-charlier": (("a",), lambda n, p: fam.poisson_charlier(n, p["a"]).coeffs),
    "poly-cauchy-1": (("k",), lambda n, p: fam.poly_cauchy_first(n, p["k"]).coeffs),
    "poly-cauchy-2": (("k",), lambda n, p: fam.poly_cauchy_second(n, p["k"]).coeffs),
    "bernoulli": (("r",), lambda n, p: fam.bernoulli_poly(n, p["r"]).coeffs),
    "frobenius-euler": (
        ("r", "lambda"),
        lambda n, p: fam.frobenius_euler(n, p["r"], p["lambda"]).coeffs,
    ),
    "pc-mixed": (("k", "a"), lambda n, p: fam.pc_mixed(n, p["k"], p["a"]).coeffs),
    "pc-hat-mixed": (
        ("k", "a"),
        lambda n, p: fam.pc_hat_mixed(n, p["k"], p["a"]).coeffs,
    ),
    "stirling1": ((), lambda n, p: tuple(Fraction(sp.stirling1(n, j)) for j in range(n + 1))),
    "stirling2": ((), lambda n, p: tuple(Fraction(sp.stirling2(n, j)) for j in range(n + 1))),
    "cauchy1": (("r",), lambda n, p: (sp.cauchy_first(n, p["r"]),)),
    "cauchy2": (("r",), lambda n, p: (sp.cauchy_second(n, p["r"]),)),
}


@click.group()
def main():
    """Exact tables and identity verification for the mixed-type polynomial catalogue."""


@main.command()
@click.option("--family", required=True, help="family name, e.g. pc-mixed or stirling1")
@click.option("--a", type=RATIONAL, default=None, help="rational parameter a (p/q)")
@click.option("--k", type=int, default=None, help="integer Lif index k")
@click.option("--r", type=int, default=None, help="nonnegative order r")
@click.option("--lambda", "lam", type=RATIONAL, default=None, help="rational parameter, != 1")
@click.option("--n-max", "n_max", type=int, required=True, help="emit rows n = 0..n-max")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def table(family, a, k, r, lam, n_max, fmt):
    """Emit exact coefficient rows for one family, lowest degree first."""
    spec = _FAMILY_SPECS.get(family)
    if spec is None:
        raise click.UsageError(
            f"unknown family {family!r}; choose from {', '.join(sorted(_FAMILY_SPECS))}"
        )
    needed, producer = spec
    given = {"a": a, "k": k, "r": r, "lambda": lam}
    params = {}
    for name in needed:
        if given[name] is None:
            raise click.UsageError(f"family {family!r} needs --{name}")
        params[name] = given[name]
    extras = sorted(
        f"--{name}" for name, value in given.items() if value is not None and name not in needed
    )
    if extras:
        raise click.UsageError(f"family {family!r} does not take {', '.join(extras)}")
    if n_max < 0:
        raise click.UsageError("--n-max must be >= 0")
    try:
        rows = [
            {"n": n, "coeffs": [_pair(c) for c in producer(n, params)]}
            for n in range(n_max + 1)
        ]
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if fmt == "json":
        payload = {
            "family": family,
            "params": {name: _param_wire(name, params[name]) for name in sorted(params)},
            "rows": rows,
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        lines = []
        for row in rows:
            cells = [str(row["n"])]
            cells += [f"{num}/{den}" if den != 1 else str(num) for num, den in row["coeffs"]]
            lines.append(",".join(cells))
        click.echo("\n".join(lines))


def _resolve_ids(spec: str) -> tuple[str, ...]:
    named = {"core": CORE_IDS, "audit": AUDIT_IDS, "all": ALL_IDS}
    if spec in named:
        return named[spec]
    ids = tuple(part.strip() for part in spec.split(",") if part.strip())
    if not ids:
        raise click.UsageError("--ids must name identities or one of core, audit, all")
    unknown = sorted(set(ids) - set(ALL_IDS))
    if unknown:
        raise click.UsageError(f"unknown identities: {', '.join(unknown)}")
    return ids


def _result_wire(result: VerificationResult) -> dict:
    params = {
        _WIRE_NAMES.get(name, name): _param_wire(name, value)
        for name, value in sorted(result.params.items())
    }
    out = {"id": result.identity, "n": result.n, "params": params, "equal": result.equal}
    if result.as_printed is not None:
        out["as_printed"] = result.as_printed
        out["derivation_form"] = result.derivation_form
    if result.lhs is not None:
        out["lhs"] = _poly_wire(result.lhs)
        out["rhs"] = _poly_wire(result.rhs)
    if result.note:
        out["note"] = result.note
    return out


def _params_text(params: dict) -> str:
    return ", ".join(
        f"{_WIRE_NAMES.get(name, name)}={value}" for name, value in sorted(params.items())
    )


@main.command("verify")
@click.option("--ids", default="core", help="comma-separated ids, or core/audit/all")
@click.option("--n-max", "n_max", type=int, default=10)
@click.option("--a", "a_values", type=RATIONAL_LIST, default=None, help="grid override")
@click.option("--k", "k_values", type=INT_LIST, default=None, help="grid override")
@click.option("--s", "s_values", type=INT_LIST, default=None, help="grid override")
@click.option("--lambda", "lam_values", type=RATIONAL_LIST, default=None, help="grid override")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def verify_command(ids, n_max, a_values, k_values, s_values, lam_values, fmt):
    """Run identity verification over a parameter grid; exact, zero tolerance."""
    id_list = _resolve_ids(ids)
    if n_max < 0:
        raise click.UsageError("--n-max must be >= 0")
    grid = Grid(
        a_values=a_values or DEFAULT_GRID.a_values,
        k_values=k_values or DEFAULT_GRID.k_values,
        s_values=s_values or DEFAULT_GRID.s_values,
        lam_values=lam_values or DEFAULT_GRID.lam_values,
    )
    try:
        results = verify_grid(id_list, n_max, grid)
    except ParameterError as exc:
        raise click.UsageError(str(exc))
    summary = summarize(results)
    failures = [r for r in results if not r.equal]
    if fmt == "json":
        payload = {
            "grid": {
                "ids": list(id_list),
                "n_max": n_max,
                "a": [str(v) for v in grid.a_values],
                "k": list(grid.k_values),
                "s": list(grid.s_values),
                "lambda": [str(v) for v in grid.lam_values],
            },
            "results": [_result_wire(r) for r in results],
            "summary": summary,
        }
        click.echo(json.dumps(payload, indent=2))
    else:
        by_id: dict[str, list[VerificationResult]] = {}
        for r in results:
            by_id.setdefault(r.identity, []).append(r)
        lines = []
        for ident in id_list:
            rs = by_id.get(ident, [])
            total = len(rs)
            ok = sum(1 for r in rs if r.equal)
            if CATALOGUE[ident].tier == "audit":
                ap = sum(1 for r in rs if r.as_printed)
                df = sum(1 for r in rs if r.derivation_form)
                lines.append(
                    f"{ident}: {ok}/{total} verified "
                    f"(as printed {ap}/{total}, derivation form {df}/{total})"
                )
            else:
                lines.append(f"{ident}: {ok}/{total} equal")
        lines.append(f"summary: checked {summary['checked']}, failed {summary['failed']}")
        if failures:
            first = failures[0]
            lines.append("first counterexample:")
            lines.append(f"  id={first.identity} n={first.n} {_params_text(first.params)}")
            lines.append(f"  lhs = {first.lhs}")
            lines.append(f"  rhs = {first.rhs}")
        click.echo("\n".join(lines))
    if failures:
        sys.exit(1)


_DOMAIN_TEXT = {
    "k": "k any integer",
    "a": "a nonzero rational",
    "s": "s integer >= 0",
    "lam": "lambda rational, != 1",
    "m": "m integer with 1 <= m <= n",
}


@main.command()
@click.argument("identity_id")
def describe(identity_id):
    """Show one catalogue entry: statement location, domain, strategy."""
    info = CATALOGUE.get(identity_id)
    if info is None:
        raise click.UsageError(f"unknown identity {identity_id!r}")
    domain = [f"n >= {info.n_min}"]
    domain += [_DOMAIN_TEXT[axis] for axis in info.axes]
    lines = [
        f"{info.identity}  [{info.tier}]",
        f"  statement: {info.statement}",
        f"  stated at: {info.location}",
        f"  domain:    {'; '.join(domain)}",
        f"  strategy:  {info.strategy}",
    ]
    click.echo("\n".join(lines))


if __name__ == "__main__":
    main()
