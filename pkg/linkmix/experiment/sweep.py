"""
Overview:
    Sweep execution, closed forms with their error estimates next to the optional oracles.

    Column layout, for every curve ``<label>`` and requested output ``<out>``:

    * ``<out>[<label>]`` closed form, ``<out>_err[<label>]`` its absolute error estimate
      (``outage_asym`` has no error column),
    * ``mc_<out>[<label>]`` and ``mc_<out>_se[<label>]`` Monte-Carlo estimate and standard error,
    * ``quad_<out>[<label>]`` quadrature oracle.

    Oracles cover ``outage``, ``ber:<scheme>`` and ``cdf:<g>``.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Tuple, Optional, Callable, Dict, Sequence

import numpy as np
from hbutils.string import plural_word
from scipy.interpolate import PchipInterpolator
from tqdm import tqdm

from .config import SweepConfig, SweepCurve, config_lines
from .exceptions import ConfigError
from .table import ResultTable, git_describe
from ..channels import EtaMuParams, KappaMuParams, FsoChannelParams, etamu_cdf, kappamu_cdf
from ..config.meta import __TITLE__, __VERSION__
from ..endtoend import SystemConfig, ModulationScheme, outage, outage_asymptotic, ber_mixed, cdf_mixed, \
    pdf_mixed, cdf_kappamu_gg
from ..oracles import mc_cdf, mc_ber, quad_cdf, quad_ber
from ..specfun import SpecFunError, GEvalOptions

#: Truncation tolerances of :func:`convergence_report`.
CONVERGENCE_TOLERANCES = (1e-4, 1e-6, 1e-8)

#: Grid density of the CDF interpolant feeding the quadrature BER oracle.
_CDF_POINTS_PER_DECADE = 16

_FAILURES = (SpecFunError, ArithmeticError, ValueError)


@dataclass(frozen=True)
class _Output:
    name: str
    kind: str
    gamma: Optional[float] = None
    modulation: Optional[ModulationScheme] = None

    @classmethod
    def parse(cls, name: str) -> '_Output':
        kind, _, argument = name.partition(':')
        if kind == 'ber':
            return cls(name, kind, modulation=ModulationScheme.named(argument))
        elif kind in ('cdf', 'pdf'):
            return cls(name, kind, gamma=float(argument))
        else:
            return cls(name, kind)

    @property
    def has_error(self) -> bool:
        return self.kind != 'outage_asym'

    @property
    def has_oracles(self) -> bool:
        return self.kind in ('outage', 'ber', 'cdf')


def sweep_columns(cfg: SweepConfig) -> List[str]:
    """
    Column names of :func:`run_sweep` for ``cfg``.

    Examples::
        >>> from linkmix.experiment import preset_config
        >>> cfg = preset_config('fig4').with_(mc=None)
        >>> sweep_columns(cfg)[:3]
        ['gamma_bar1_db', 'outage[cn2=1e-15]', 'outage_err[cn2=1e-15]']
    """
    columns = [cfg.axis.name]
    for curve in cfg.curves:
        for output in map(_Output.parse, cfg.outputs):
            columns.append(f'{output.name}[{curve.label}]')
            if output.has_error:
                columns.append(f'{output.name}_err[{curve.label}]')
            if output.has_oracles and cfg.mc is not None:
                columns.append(f'mc_{output.name}[{curve.label}]')
                columns.append(f'mc_{output.name}_se[{curve.label}]')
            if output.has_oracles and cfg.quad:
                columns.append(f'quad_{output.name}[{curve.label}]')
    return columns


def provenance_lines(cfg: SweepConfig, opts: Optional[GEvalOptions] = None) -> List[str]:
    opts = opts or GEvalOptions()
    lines = [
        f'{__TITLE__} {__VERSION__}',
        f'git: {git_describe()}',
        f'series tolerance: {cfg.tol!r}',
        f'kernel: method={opts.method}, rel_tol={opts.rel_tol!r}, '
        f'max_quadrature_nodes={opts.max_quadrature_nodes}, nudge={opts.nudge!r}',
    ]
    if cfg.mc is not None:
        lines.append(f'monte-carlo: seed={cfg.mc.seed}, n_samples={cfg.mc.n_samples}')
    lines.append('config:')
    lines.extend(config_lines(cfg))
    return lines


def rf_cdf_function(rf, tol: float = 1e-9) -> Callable[[float], float]:
    """
    Marginal CDF of the RF hop as a plain function, the input of the quadrature oracle.
    """
    if isinstance(rf, EtaMuParams):
        return lambda g: float(etamu_cdf(rf, g))
    elif isinstance(rf, KappaMuParams):
        return lambda g: kappamu_cdf(rf, g, tol)[0]
    else:
        raise TypeError(f'Unknown RF parameters - {rf!r}.')


def quad_cdf_interpolant(rf, fso: FsoChannelParams, sys: SystemConfig, upper: float) \
        -> Callable[[float], float]:
    """
    Monotone interpolant of the quadrature CDF on a log grid up to ``upper``, linear towards ``0``
    below the grid.
    """
    rf_cdf = rf_cdf_function(rf)
    lo, hi = math.log10(rf.gamma_bar1) - 8.0, math.log10(upper)
    grid = np.logspace(lo, hi, int(math.ceil((hi - lo) * _CDF_POINTS_PER_DECADE)) + 1)
    values = np.maximum.accumulate([quad_cdf(rf_cdf, fso, sys, float(g)).value for g in grid])
    interpolant = PchipInterpolator(np.log(grid), values, extrapolate=False)
    first = float(values[0])

    def _cdf(gamma: float) -> float:
        if gamma <= grid[0]:
            return first * gamma / grid[0]
        elif gamma >= grid[-1]:
            return float(values[-1])
        return float(interpolant(math.log(gamma)))

    return _cdf


def _clean_reason(text: str) -> str:
    return ' '.join(str(text).split())


def _evaluate_curve(cfg: SweepConfig, curve: SweepCurve, value: float,
                    opts: Optional[GEvalOptions]) -> Tuple[List[float], List[str]]:
    cells, reasons = [], []
    rf, fso, sys = curve.build(cfg.axis.name, value, cfg.system)
    outputs = list(map(_Output.parse, cfg.outputs))

    mc_values: Dict[str, Tuple[float, float]] = {}
    if cfg.mc is not None:
        thresholds = [(o.name, sys.gamma_th if o.kind == 'outage' else o.gamma)
                      for o in outputs if o.kind in ('outage', 'cdf')]
        try:
            if thresholds:
                estimates = mc_cdf(rf, fso, sys, [g for _, g in thresholds], cfg.mc)
                for (name, _), estimate in zip(thresholds, estimates):
                    mc_values[name] = (estimate.value, estimate.std_error)
            for o in outputs:
                if o.kind == 'ber':
                    estimate = mc_ber(rf, fso, sys, o.modulation, cfg.mc)
                    mc_values[o.name] = (estimate.value, estimate.std_error)
        except _FAILURES as err:
            reasons.append(f'{curve.label} monte-carlo: {err}')

    ber_cdf = None
    for o in outputs:
        try:
            if o.kind == 'outage':
                result = outage(rf, fso, sys, cfg.tol, opts)
            elif o.kind == 'outage_asym':
                result = None
                cells.append(outage_asymptotic(rf, fso, sys, cfg.tol, opts))
            elif o.kind == 'ber':
                result = ber_mixed(rf, fso, sys, o.modulation, cfg.tol, opts)
            elif o.kind == 'cdf':
                result = cdf_mixed(rf, fso, sys, o.gamma, cfg.tol, opts)
            else:
                result = pdf_mixed(rf, fso, sys, o.gamma, cfg.tol, opts)
            if result is not None:
                cells.extend([result.value, result.abs_error_est])
        except _FAILURES as err:
            cells.extend([math.nan, math.nan] if o.has_error else [math.nan])
            reasons.append(f'{curve.label} {o.name}: {err}')

        if not o.has_oracles:
            continue
        if cfg.mc is not None:
            cells.extend(mc_values.get(o.name, (math.nan, math.nan)))
        if cfg.quad:
            try:
                if o.kind == 'ber':
                    if ber_cdf is None:
                        ber_cdf = quad_cdf_interpolant(rf, fso, sys, upper=800.0 / min(
                            x.modulation.q for x in outputs if x.kind == 'ber'))
                    cells.append(quad_ber(ber_cdf, o.modulation).value)
                else:
                    gamma = sys.gamma_th if o.kind == 'outage' else o.gamma
                    cells.append(quad_cdf(rf_cdf_function(rf), fso, sys, gamma).value)
            except _FAILURES as err:
                cells.append(math.nan)
                reasons.append(f'{curve.label} quad_{o.name}: {err}')

    return cells, reasons


def _curve_width(cfg: SweepConfig) -> int:
    return (len(sweep_columns(cfg)) - 1) // len(cfg.curves)


def _evaluate_point(cfg: SweepConfig, point: Tuple[float, float], opts: Optional[GEvalOptions]) \
        -> Tuple[List[float], str]:
    axis_value, linear = point
    row, reasons = [axis_value], []
    for curve in cfg.curves:
        try:
            cells, curve_reasons = _evaluate_curve(cfg, curve, linear, opts)
        except _FAILURES as err:
            cells, curve_reasons = [math.nan] * _curve_width(cfg), [f'{curve.label}: {err}']
        row.extend(cells)
        reasons.extend(curve_reasons)
    if reasons:
        logging.warning(f'Sweep point {cfg.axis.name}={axis_value!r} has failures: {"; ".join(reasons)}')
    return row, _clean_reason('; '.join(reasons))


def _run_points(cfg: SweepConfig, func: Callable[[Tuple[float, float]], Tuple[List[float], str]],
                table: ResultTable, workers: int, desc: str):
    points = list(cfg.axis.points)
    logging.info(f'{desc.capitalize()} over {plural_word(len(points), "point")} '
                 f'and {plural_word(len(cfg.curves), "curve")}.')
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        for row, reason in tqdm(pool.map(func, points), total=len(points), desc=desc):
            table.append(row, reason)
    if table.failed_rows:
        logging.warning(f'{plural_word(table.failed_rows, "row")} of {desc} carry failures.')


def run_sweep(cfg: SweepConfig, workers: int = 4, opts: Optional[GEvalOptions] = None) -> ResultTable:
    """
    Evaluate every requested output of every curve at every sweep point.

    Points are evaluated concurrently and assembled in sweep order. A failing evaluation leaves
    ``NaN`` cells and a ``reason`` text, the sweep itself never aborts on it.
    """
    table = ResultTable(sweep_columns(cfg), provenance=provenance_lines(cfg, opts))
    _run_points(cfg, lambda point: _evaluate_point(cfg, point, opts), table, workers, 'sweep')
    return table


def convergence_report(cfg: SweepConfig, tolerances: Sequence[float] = CONVERGENCE_TOLERANCES,
                       workers: int = 4, opts: Optional[GEvalOptions] = None) -> ResultTable:
    """
    Poisson terms kept by the κ-μ outage series, and the tail bound achieved, at every tolerance.

    :raise ConfigError: When the configuration is not of the κ-μ family.
    """
    if any(curve.family != 'kappamu' for curve in cfg.curves):
        raise ConfigError('Convergence reports need the kappamu family.', 'rf', 'family')

    columns = [cfg.axis.name]
    for curve in cfg.curves:
        for tol in tolerances:
            columns.append(f'terms[tol={tol:g}][{curve.label}]')
            columns.append(f'tail_bound[tol={tol:g}][{curve.label}]')
    table = ResultTable(columns, provenance=[*provenance_lines(cfg, opts),
                                             f'tolerances: {", ".join(f"{t:g}" for t in tolerances)}'])

    def _point(point):
        axis_value, linear = point
        row, reasons = [axis_value], []
        for curve in cfg.curves:
            for tol in tolerances:
                try:
                    rf, fso, sys = curve.build(cfg.axis.name, linear, cfg.system)
                    result = cdf_kappamu_gg(rf, fso, sys, sys.gamma_th, tol, opts)
                    row.extend([float(result.terms_used), result.extra['tail_bound']])
                except _FAILURES as err:
                    row.extend([math.nan, math.nan])
                    reasons.append(f'{curve.label} tol={tol:g}: {err}')
        return row, _clean_reason('; '.join(reasons))

    _run_points(cfg, _point, table, workers, 'convergence')
    return table
