import logging
import math
from functools import partial, wraps
from typing import Optional, Tuple

import click

from .experiment import ConfigError, SweepConfig, load_config, preset_config, single_point, run_sweep, \
    convergence_report, run_selftest, write_csv, CONVERGENCE_TOLERANCES, SELFTEST_CHECKS, ResultTable
from .oracles import McConfig
from .specfun import SpecFunError
from .utils import GLOBAL_CONTEXT_SETTINGS, KeyValueParamType, configure_logging
from .utils import print_version as _origin_print_version

print_version = partial(_origin_print_version, 'linkmix')


@click.group(context_settings={**GLOBAL_CONTEXT_SETTINGS})
@click.option('-v', '--version', is_flag=True,
              callback=print_version, expose_value=False, is_eager=True,
              help="Show version of linkmix.")
def cli():
    pass  # pragma: no cover


def _friendly_errors(func):
    @wraps(func)
    def _func(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (ConfigError, SpecFunError) as err:
            raise click.ClickException(str(err))
        except OSError as err:
            raise click.ClickException(f'{err.strerror or err}' + (f': {err.filename!r}' if err.filename else ''))

    return _func


def _common_options(func):
    options = [
        click.option('--set', 'overrides', type=KeyValueParamType(), multiple=True,
                     help='Override a configuration entry, e.g. fso.xi=6.7.'),
        click.option('--seed', 'seed', type=int, default=None,
                     help='Root seed of the Monte-Carlo oracle.'),
        click.option('--samples', 'samples', type=int, default=None,
                     help='Monte-Carlo sample count.'),
        click.option('--tol', 'tol', type=float, default=None,
                     help='Truncation tolerance of the κ-μ series.'),
        click.option('--no-mc', 'no_mc', is_flag=True, default=False,
                     help='Disable the Monte-Carlo oracle.'),
        click.option('--no-quad', 'no_quad', is_flag=True, default=False,
                     help='Disable the quadrature oracle.'),
        click.option('-j', '--workers', 'workers', type=int, default=4,
                     help='Sweep points evaluated concurrently.', show_default=True),
        click.option('--verbose', 'verbose', is_flag=True, default=False,
                     help='Log kernel diagnostics at debug level.'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _apply_flags(cfg: SweepConfig, seed: Optional[int], samples: Optional[int], tol: Optional[float],
                 no_mc: bool, no_quad: bool) -> SweepConfig:
    changes = {}
    if no_mc:
        changes['mc'] = None
    elif seed is not None or samples is not None:
        base = cfg.mc or McConfig()
        changes['mc'] = McConfig(seed=base.seed if seed is None else seed,
                                 n_samples=base.n_samples if samples is None else samples)
    if no_quad:
        changes['quad'] = False
    if tol is not None:
        if not (tol > 0 and math.isfinite(tol)):
            raise ConfigError(f'Tolerance should be positive, but {tol!r} found.', 'sweep', 'tol')
        changes['tol'] = tol
    return cfg.with_(**changes) if changes else cfg


def _load(config_file: Optional[str], preset: Optional[str], overrides: Tuple) -> SweepConfig:
    if bool(config_file) == bool(preset):
        raise ConfigError('Exactly one of --config and --preset should be given.')
    if config_file:
        return load_config(config_file, overrides)
    return preset_config(preset, overrides)


def _write(table: ResultTable, output_file: str):
    write_csv(table, output_file)
    if table.failed_rows:
        logging.warning(f'Some rows of {output_file!r} carry NaN cells, see the reason column.')


@cli.command('eval', context_settings={**GLOBAL_CONTEXT_SETTINGS},
             help='Evaluate a configuration at a single point of its sweep axis.')
@click.option('-c', '--config', 'config_file', type=click.Path(dir_okay=False), default=None,
              help='INI configuration file.')
@click.option('-p', '--preset', 'preset', type=str, default=None,
              help='Figure preset (fig2 ... fig5) used instead of a configuration file.')
@click.option('-a', '--at', 'at', type=float, default=None,
              help='Axis value, the sweep start by default.')
@click.option('-o', '--out', 'output_file', type=click.Path(dir_okay=False), default=None,
              help='Also write the row as CSV.')
@_common_options
@_friendly_errors
def eval_(config_file, preset, at, output_file, overrides, seed, samples, tol, no_mc, no_quad, workers, verbose):
    configure_logging(verbose)
    cfg = _apply_flags(_load(config_file, preset, overrides), seed, samples, tol, no_mc, no_quad)
    table = run_sweep(single_point(cfg, at), workers=1)
    for name, value in zip(table.columns, table.rows[0]):
        click.echo(f'{name} = {value!r}')
    if table.reasons[0]:
        click.echo(f'reason = {table.reasons[0]}')
    if output_file:
        _write(table, output_file)


@cli.command('sweep', context_settings={**GLOBAL_CONTEXT_SETTINGS},
             help='Run the sweep of a configuration file and write the CSV table.')
@click.option('-c', '--config', 'config_file', type=click.Path(dir_okay=False), required=True,
              help='INI configuration file.')
@click.option('-o', '--out', 'output_file', type=click.Path(dir_okay=False), required=True,
              help='CSV file to write.')
@_common_options
@_friendly_errors
def sweep(config_file, output_file, overrides, seed, samples, tol, no_mc, no_quad, workers, verbose):
    configure_logging(verbose)
    cfg = _apply_flags(load_config(config_file, overrides), seed, samples, tol, no_mc, no_quad)
    _write(run_sweep(cfg, workers=workers), output_file)


@cli.command('figure', context_settings={**GLOBAL_CONTEXT_SETTINGS},
             help='Reproduce one of the figure presets fig2, fig3, fig4 and fig5.')
@click.argument('name', type=click.Choice(['fig2', 'fig3', 'fig4', 'fig5']))
@click.option('-o', '--out', 'output_file', type=click.Path(dir_okay=False), required=True,
              help='CSV file to write.')
@click.option('--xi', 'xis', type=float, multiple=True,
              help='Pointing ratios of the fig5 curves, 1.1 and 10 by default.')
@_common_options
@_friendly_errors
def figure(name, output_file, xis, overrides, seed, samples, tol, no_mc, no_quad, workers, verbose):
    configure_logging(verbose)
    cfg = preset_config(name, overrides, xis=xis or None)
    cfg = _apply_flags(cfg, seed, samples, tol, no_mc, no_quad)
    _write(run_sweep(cfg, workers=workers), output_file)


@cli.command('converge', context_settings={**GLOBAL_CONTEXT_SETTINGS},
             help='Report the Poisson terms the κ-μ series keeps at several tolerances.')
@click.option('-c', '--config', 'config_file', type=click.Path(dir_okay=False), default=None,
              help='INI configuration file of the kappamu family.')
@click.option('-p', '--preset', 'preset', type=str, default=None,
              help='Figure preset used instead of a configuration file, e.g. fig3.')
@click.option('-o', '--out', 'output_file', type=click.Path(dir_okay=False), required=True,
              help='CSV file to write.')
@click.option('-t', '--tolerance', 'tolerances', type=float, multiple=True,
              help=f'Tolerances of the report, {", ".join(f"{t:g}" for t in CONVERGENCE_TOLERANCES)} by default.')
@click.option('--set', 'overrides', type=KeyValueParamType(), multiple=True,
              help='Override a configuration entry, e.g. rf.kappa=0.')
@click.option('-j', '--workers', 'workers', type=int, default=4,
              help='Sweep points evaluated concurrently.', show_default=True)
@click.option('--verbose', 'verbose', is_flag=True, default=False,
              help='Log kernel diagnostics at debug level.')
@_friendly_errors
def converge(config_file, preset, output_file, tolerances, overrides, workers, verbose):
    configure_logging(verbose)
    cfg = _load(config_file, preset, overrides)
    table = convergence_report(cfg, tolerances or CONVERGENCE_TOLERANCES, workers=workers)
    _write(table, output_file)


@cli.command('selftest', context_settings={**GLOBAL_CONTEXT_SETTINGS},
             help='Run the full-size acceptance suites.')
@click.option('--seed', 'seed', type=int, default=42,
              help='Root seed of the Monte-Carlo oracle.', show_default=True)
@click.option('--samples', 'samples', type=int, default=1000000,
              help='Monte-Carlo sample count.', show_default=True)
@click.option('-s', '--suite', 'suites', type=click.Choice(sorted(SELFTEST_CHECKS)), multiple=True,
              help='Suites to run, all by default.')
@click.option('--quick', 'quick', is_flag=True, default=False,
              help='Shrink the triple agreement grid.')
@click.option('--verbose', 'verbose', is_flag=True, default=False,
              help='Log kernel diagnostics at debug level.')
@_friendly_errors
def selftest(seed, samples, suites, quick, verbose):
    configure_logging(verbose)
    results = run_selftest(McConfig(seed=seed, n_samples=samples), quick=quick, names=suites or None)
    for result in results:
        click.echo(f'[{"PASS" if result.passed else "FAIL"}] {result.name}: {result.detail}')
    failed = [result.name for result in results if not result.passed]
    if failed:
        raise click.ClickException(f'Failed suites: {", ".join(failed)}.')


if __name__ == '__main__':
    cli()
