"""
fraccauchy batch CLI

Commands:
- ml: Mittag-Leffler values M_beta(x)
- sample: draws of D(t), E(t), the composite inverse E(t) or the scaled CTRW count
- eigen: eigenvalue-problem solutions h(t, lambda)
- solve: spectral series solution on a point grid
- mc: Monte-Carlo solution at the given points
- validate: cross-engine acceptance suite

Usage:
    python -m fraccauchy solve --config data/frac.cfg --out frac.csv
    python -m fraccauchy ml --set beta=0.5 --set x=0,-1,-10
    python -m fraccauchy validate --seed 7 --threads 8 --out validation.csv

Exit status: 0 on success, 1 when a computation misses its error contract
or a validation check fails, 2 for configuration and usage errors.

Run-config keys are listed in fraccauchy/core/runconfig.py. Measure files
hold one directive per line (`#` starts a comment):

    atom <beta> <weight>                          atom of the mixing measure
    caputo <beta> <coefficient>                   atom given by its Caputo coefficient
    density <beta0> <beta1> <nodes> <profile> [scale]   profile: uniform | linear
"""

import logging
import sys
from typing import Callable, List

import click
import numpy as np

from fraccauchy.core import (
    ConfigError,
    FracCauchyError,
    RunConfig,
    get_settings,
    load_run_config,
    parse_overrides,
)
from fraccauchy.distorder import OrderMeasure, h_eigen, load_measure, sample_inverse_composite
from fraccauchy.mcsolver import McConfig, mc_field
from fraccauchy.reporting import TextReporter, write_field_csv, write_values_csv
from fraccauchy.solver import OrderSpec, solve
from fraccauchy.spectral import BoxDomain, parse_initial, project
from fraccauchy.specfun import MLQuery, mittag_leffler
from fraccauchy.subord import RngStream, StableIndex, ctrw_count, sample_inverse, sample_stable_at, summarize
from fraccauchy.validation import DEFAULT_SUITE, CheckContext, ValidationSuite, run_suite

logger = logging.getLogger("fraccauchy.cli")

EXIT_FAILURE = 1
EXIT_USAGE = 2


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        force=True,
    )


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.out is None:
        click.echo(text, nl=False)
    else:
        logger.info(f"wrote {cfg.out}")


def _order(cfg: RunConfig) -> OrderSpec:
    if cfg.measure is not None:
        return load_measure(cfg.measure)
    return float(cfg.beta)


def _domain(cfg: RunConfig) -> BoxDomain:
    return BoxDomain(tuple(cfg.lengths))


def _execute(command: str, body: Callable[[RunConfig], bool], options: dict) -> None:
    _configure_logging(options["verbose"])
    try:
        overrides = parse_overrides(list(options["overrides"]))
        for key in ("seed", "out", "threads"):
            if options[key] is not None:
                overrides[key] = options[key]
        cfg = load_run_config(command, options["config_path"], overrides)
        ok = body(cfg)
    except ConfigError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_USAGE)
    except FracCauchyError as e:
        click.echo(f"Error: {type(e).__name__}: {e}", err=True)
        sys.exit(EXIT_FAILURE)
    if not ok:
        sys.exit(EXIT_FAILURE)


def run_options(func):
    """Flags shared by every command."""
    options = [
        click.option('--config', 'config_path', type=click.Path(dir_okay=False), default=None,
                     help='Run-config file (key = value lines)'),
        click.option('--seed', type=int, default=None, help='64-bit master seed'),
        click.option('--out', type=click.Path(dir_okay=False), default=None, help='Output file (default: stdout)'),
        click.option('--threads', type=int, default=None, help='Worker threads'),
        click.option('--set', 'overrides', multiple=True, metavar='KEY=VALUE', help='Override a config key'),
        click.option('--verbose', '-v', is_flag=True, help='Debug logging'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@click.group()
def cli():
    """Heat, fractional and distributed-order Cauchy problems on boxes."""


@cli.command()
@run_options
def ml(**options):
    """Mittag-Leffler values for beta and the x list."""

    def body(cfg: RunConfig) -> bool:
        rel_tol = get_settings().ml_rel_tol
        rows = [[cfg.beta, x, mittag_leffler(MLQuery(cfg.beta, x, rel_tol))] for x in cfg.x]
        _emit(write_values_csv(["beta", "x", "value"], rows, cfg.out), cfg)
        return True

    _execute("ml", body, options)


@cli.command()
@run_options
def sample(**options):
    """Draws from the selected sampler."""

    def body(cfg: RunConfig) -> bool:
        r = RngStream(cfg.seed)
        n = cfg.n_samples
        if cfg.sampler == "composite":
            values = sample_inverse_composite(load_measure(cfg.measure), cfg.t, r, cfg.dx, size=n, budget=cfg.budget)
        else:
            idx = StableIndex(cfg.beta)
            if cfg.sampler == "stable":
                values = sample_stable_at(idx, cfg.t, r, size=n)
            elif cfg.sampler == "inverse":
                values = sample_inverse(idx, cfg.t, r, size=n)
            else:
                values = ctrw_count(idx, cfg.c, cfg.t, r, size=n)
        values = np.asarray(values, dtype=float)
        summary = summarize(values)
        logger.info(f"{cfg.sampler} sampler: mean {summary.mean:.6g} +/- {summary.std_error:.2e} (n={summary.n})")
        _emit(write_values_csv(["index", "value"], ([i, v] for i, v in enumerate(values)), cfg.out), cfg)
        return True

    _execute("sample", body, options)


@cli.command()
@run_options
def eigen(**options):
    """Eigenvalue-problem solutions for every (t, lambda) pair."""

    def body(cfg: RunConfig) -> bool:
        order = _order(cfg)
        rows: List[list] = []
        for t in cfg.times:
            for lam in cfg.lambdas:
                if isinstance(order, OrderMeasure):
                    solution = h_eigen(order, t, lam)
                    rows.append([t, lam, solution.value, solution.est_error])
                else:
                    rel_tol = get_settings().ml_rel_tol
                    value = mittag_leffler(MLQuery(order, -lam * t ** order, rel_tol))
                    rows.append([t, lam, value, rel_tol * value])
        _emit(write_values_csv(["t", "lambda", "value", "est_error"], rows, cfg.out), cfg)
        return True

    _execute("eigen", body, options)


@cli.command("solve")
@run_options
def solve_cmd(**options):
    """Spectral series solution at every time on the point grid."""

    def body(cfg: RunConfig) -> bool:
        dom = _domain(cfg)
        order = _order(cfg)
        coeffs = project(parse_initial(cfg.initial, dom), dom, cfg.mode_cap())
        points = cfg.point_array()
        samples = [solve(coeffs, order, t, points, cfg.tolerance) for t in cfg.times]
        _emit(write_field_csv(samples, cfg.out), cfg)
        return True

    _execute("solve", body, options)


@cli.command()
@run_options
def mc(**options):
    """Monte-Carlo solution at every time and point."""

    def body(cfg: RunConfig) -> bool:
        dom = _domain(cfg)
        order = _order(cfg)
        f = parse_initial(cfg.initial, dom)
        mc_cfg = McConfig(
            n_paths=cfg.n_paths,
            dt=cfg.dt,
            dx=cfg.dx,
            seed=cfg.seed,
            budget=cfg.budget,
            block_size=cfg.block_size,
            threads=cfg.threads,
        ).check_for(dom)
        points = cfg.point_array()
        samples = [mc_field(f, dom, order, t, points, mc_cfg) for t in cfg.times]
        _emit(write_field_csv(samples, cfg.out), cfg)
        return True

    _execute("mc", body, options)


@cli.command()
@run_options
def validate(**options):
    """Run the acceptance suite; exit 1 if any check fails."""

    def body(cfg: RunConfig) -> bool:
        suite = ValidationSuite.from_yaml(cfg.suite or DEFAULT_SUITE).select(cfg.checks)
        ctx = CheckContext(
            seed=cfg.seed,
            threads=cfg.threads or get_settings().threads,
            scale=cfg.scale or suite.scale,
        )
        report = run_suite(suite, ctx, cfg.fault)
        click.echo(TextReporter().render(report))
        if cfg.out is not None:
            write_values_csv(
                ["check", "criterion", "status", "measured", "threshold"], report.to_rows(), cfg.out
            )
            logger.info(f"wrote {cfg.out}")
        return report.all_passed

    _execute("validate", body, options)


def main() -> None:
    cli(prog_name="fraccauchy")


if __name__ == '__main__':
    main()
