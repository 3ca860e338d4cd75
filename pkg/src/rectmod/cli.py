"""Command-line front end.

Usage:
    rectmod eval psi 3-2sqrt2            # 1.000000000000
    rectmod invert psi 8.24639           # 0.479047...
    rectmod modulus 100                  # exterior, interior, L(b), U(b)
    rectmod table psi_bounds 0.01 0.99 99
    rectmod --format json verify thm1.1

Exit status: 0 success, 1 a verification claim failed, 2 usage or domain error.
"""

from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass
from typing import Callable

import click

from . import elliptic, modulus, psimu, verify
from .errors import DomainError
from .report import GridSpec

# symbolic literals accepted wherever a number is expected
LITERALS = {
    "3-2sqrt2": psimu.R_UNIT,
    "1/sqrt2": math.sqrt(0.5),
    "sqrt2-1": math.sqrt(2.0) - 1.0,
    "pi": math.pi,
    "pi/2": 0.5 * math.pi,
}


@dataclass(frozen=True)
class CliConfig:
    digits: int = 12
    fmt: str = "plain"


class Number(click.ParamType):
    name = "number"

    def convert(self, value, param, ctx):
        if isinstance(value, float):
            return value
        key = value.strip().lower().replace(" ", "").replace("√", "sqrt")
        if key in LITERALS:
            return LITERALS[key]
        try:
            return float(key)
        except ValueError:
            self.fail(f"{value!r} is not a number or one of {', '.join(LITERALS)}", param, ctx)


NUMBER = Number()


def fmt_number(x: float, digits: int) -> str:
    """Fixed point with ``digits`` decimals; scientific outside [1e-4, 1e15)."""
    if x == 0 or (1e-4 <= abs(x) < 1e15) or not math.isfinite(x):
        return f"{x:.{digits}f}"
    return f"{x:.{digits}e}"


def _kc(r: float) -> float:
    return elliptic.ellip_k(elliptic.complement(r), r)


def _ec(r: float) -> float:
    return elliptic.ellip_e(elliptic.complement(r), r)


EVALUATORS: dict[str, Callable[[float], float]] = {
    "K": elliptic.ellip_k,
    "E": elliptic.ellip_e,
    "Kc": _kc,
    "Ec": _ec,
    "psi": psimu.psi,
    "psi_prime": psimu.psi_prime,
    "mu": psimu.mu,
    "f8": psimu.f8,
}

INVERSES: dict[str, Callable[[float], float]] = {"psi": psimu.psi_inv, "mu": psimu.mu_inv}


def _fail(msg: str) -> None:
    click.echo(f"error: {msg}", err=True)
    sys.exit(2)


def _emit_record(cfg: CliConfig, record: dict[str, float | str]) -> None:
    d = cfg.digits
    if cfg.fmt == "json":
        click.echo(json.dumps(record))
    elif cfg.fmt == "csv":
        click.echo(",".join(record))
        click.echo(",".join(fmt_number(v, d) if isinstance(v, float) else v for v in record.values()))
    else:
        for k, v in record.items():
            click.echo(f"{k} {fmt_number(v, d) if isinstance(v, float) else v}")


@click.group()
@click.option("--digits", type=click.IntRange(1, 17), default=12, show_default=True, help="Printed decimals.")
@click.option("--format", "fmt", type=click.Choice(["plain", "csv", "json"]), default="plain", show_default=True)
@click.pass_context
def main(ctx: click.Context, digits: int, fmt: str) -> None:
    """Elliptic integrals, the function psi, and rectangle moduli."""
    ctx.obj = CliConfig(digits, fmt)


@main.command("eval")
@click.argument("function", type=click.Choice(list(EVALUATORS)))
@click.argument("r", type=NUMBER)
@click.pass_obj
def eval_cmd(cfg: CliConfig, function: str, r: float) -> None:
    """Evaluate FUNCTION at R."""
    try:
        value = EVALUATORS[function](r)
    except DomainError as exc:
        _fail(str(exc))
    if cfg.fmt == "plain":
        click.echo(fmt_number(value, cfg.digits))
    else:
        _emit_record(cfg, {"r": r, function: value})


@main.command()
@click.argument("function", type=click.Choice(list(INVERSES)))
@click.argument("y", type=NUMBER)
@click.pass_obj
def invert(cfg: CliConfig, function: str, y: float) -> None:
    """Solve FUNCTION(r) = Y for r in (0,1)."""
    try:
        r = INVERSES[function](y)
    except DomainError as exc:
        _fail(str(exc))
    if cfg.fmt == "plain":
        click.echo(fmt_number(r, cfg.digits))
    else:
        _emit_record(cfg, {"y": y, "r": r})


@main.command("modulus")
@click.argument("b", type=NUMBER)
@click.pass_obj
def modulus_cmd(cfg: CliConfig, b: float) -> None:
    """Exterior and interior moduli of [0,1] x [0,B] with the bounds L(B), U(B)."""
    try:
        res = modulus.rectangle(b)
    except DomainError as exc:
        _fail(str(exc))
    _emit_record(cfg, {"b": b, "exterior": res.exterior, "interior": res.interior,
                       "lower": res.lower, "upper": res.upper})


def _table_rows(quantity: str, x: float) -> list[float]:
    if quantity == "psi":
        return [psimu.psi(x)]
    if quantity == "psi_bounds":
        bp = psimu.psi_bounds(x)
        return [bp.lower, psimu.psi(x), bp.upper]
    if quantity == "modulus":
        return [modulus.exterior_modulus(x), modulus.interior_modulus(x)]
    if quantity == "modulus_bounds":
        mb = modulus.modulus_bounds(x)
        return [mb.lower, modulus.exterior_modulus(x), mb.upper]
    return [modulus.comparison_gap(x)]


TABLE_HEADERS = {
    "psi": ["r", "psi"],
    "psi_bounds": ["r", "lower", "psi", "upper"],
    "modulus": ["b", "exterior", "interior"],
    "modulus_bounds": ["b", "lower", "exterior", "upper"],
    "comparison_gap": ["r", "gap"],
}


@main.command()
@click.argument("quantity", type=click.Choice(list(TABLE_HEADERS)))
@click.argument("lo", type=NUMBER)
@click.argument("hi", type=NUMBER)
@click.argument("n", type=int)
@click.option("--log", "log_spacing", is_flag=True, help="Logarithmic spacing.")
@click.pass_obj
def table(cfg: CliConfig, quantity: str, lo: float, hi: float, n: int, log_spacing: bool) -> None:
    """Tabulate QUANTITY at N points of [LO, HI] as CSV."""
    try:
        grid = GridSpec(lo, hi, n, "logarithmic" if log_spacing else "uniform")
    except ValueError as exc:
        _fail(str(exc))
    header = TABLE_HEADERS[quantity]
    out = []
    try:
        for x in grid.points():
            out.append([float(x)] + _table_rows(quantity, float(x)))
    except DomainError as exc:
        _fail(str(exc))
    if cfg.fmt == "json":
        for row in out:
            click.echo(json.dumps(dict(zip(header, row))))
        return
    lines = [",".join(header)] + [",".join(fmt_number(v, cfg.digits) for v in row) for row in out]
    sys.stdout.write("\n".join(lines) + "\n")


@main.command("verify")
@click.argument("prefix", required=False, default="")
@click.option("--points", type=int, default=None, help="Points on the one-variable grids.")
@click.option("--pair-points", type=int, default=None, help="Points per axis on the two-variable grid.")
@click.pass_obj
def verify_cmd(cfg: CliConfig, prefix: str, points: int | None, pair_points: int | None) -> None:
    """Run the claim registry (or the claims whose id starts with PREFIX)."""
    if not verify.claim_ids(prefix):
        _fail(f"no claim id starts with {prefix!r}")
    d = verify.GridDefaults()
    try:
        if points is not None:
            d = verify.GridDefaults(
                r=GridSpec(d.r.lo, d.r.hi, points, d.r.law),
                identity=GridSpec(d.identity.lo, d.identity.hi, points, d.identity.law),
                deriv=d.deriv, pair=d.pair, b=d.b, bpair=d.bpair,
                x=GridSpec(d.x.lo, d.x.hi, points, d.x.law),
            )
        if pair_points is not None:
            d = verify.GridDefaults(r=d.r, identity=d.identity, deriv=d.deriv, b=d.b, bpair=d.bpair, x=d.x,
                                    pair=GridSpec(d.pair.lo, d.pair.hi, pair_points, d.pair.law))
    except ValueError as exc:
        _fail(str(exc))

    if cfg.fmt == "csv":
        click.echo("claim_id,verdict,worst_margin,worst_point,points_tested")
    failed = 0
    for rep in verify.iter_all(d, prefix):
        failed += not rep.passed
        if cfg.fmt == "json":
            click.echo(rep.to_json())
            continue
        pt = rep.worst_point
        pt_s = ";".join(f"{v:.6g}" for v in pt) if isinstance(pt, tuple) else f"{pt:.6g}"
        margin = f"{rep.worst_margin:.3e}"
        if cfg.fmt == "csv":
            click.echo(f"{rep.claim_id},{rep.verdict},{margin},{pt_s},{rep.points_tested}")
        else:
            click.echo(f"{rep.verdict.upper():4}  {rep.claim_id:30}  margin={margin}  at={pt_s}")
    if cfg.fmt == "plain":
        click.echo(f"{failed} failed")
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
