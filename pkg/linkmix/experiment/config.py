"""
Overview:
    Sweep configuration, parsed from INI files or built from preset dictionaries.

    An INI file looks like::

        [rf]
        family = etamu
        eta = 0.9
        mu = 1
        gamma_bar1_db = 10

        [fso]
        cn2 = 1e-15
        L = 4000
        D = 0.01
        wavelength = 1550e-9
        xi = 1.1
        t = 1
        gamma_bar2_db = 10

        [system]
        c = 1
        gamma_th_db = 0

        [sweep]
        axis = gamma_bar2_db
        start = 0
        stop = 50
        step = 5
        tol = 1e-6

        [outputs]
        requested = outage, outage_asym, ber:CBFSK

        [oracles]
        mc = 1000000, 42
        quad = no

        [curve:eta=0.9,mu=2]
        mu = 2

    Keys ending in ``_db`` are converted to linear scale here, once.
"""
import configparser
import math
import re
from dataclasses import dataclass, field, replace
from typing import Dict, Any, Tuple, Optional, List, Union, Iterable

from .exceptions import ConfigError
from ..channels import EtaMuParams, KappaMuParams, FsoChannelParams
from ..endtoend import SystemConfig, ModulationScheme
from ..oracles import McConfig
from ..specfun import SpecFunError
from ..utils import db_to_linear

#: Sweep axes and the parameter each of them drives.
AXES = {
    'gamma_bar1_db': ('rf', 'gamma_bar1'),
    'gamma_bar2_db': ('fso', 'gamma_bar2'),
    'xi': ('fso', 'xi'),
    'cn2': ('fso', 'cn2'),
}

RF_KEYS = {
    'etamu': ('eta', 'mu', 'gamma_bar1'),
    'kappamu': ('kappa', 'mu', 'gamma_bar1'),
}
FSO_KEYS = {
    'cn2': 'cn2', 'l': 'L', 'd': 'D', 'wavelength': 'wavelength', 'xi': 'xi', 't': 't',
    'gamma_bar2': 'gamma_bar2', 'rytov_constant': 'rytov_constant',
}
SYSTEM_KEYS = ('c', 'gamma_th')

#: Defaults of the relay link, threshold at 0 dB which is linear 1.
DEFAULTS = {
    'fso': {'l': 4000.0, 'd': 0.01, 'wavelength': 1550e-9, 't': 1},
    'system': {'c': 1.0, 'gamma_th': 1.0},
}

_OUTPUT_PATTERN = re.compile(r'^(outage|outage_asym)$|^(ber|cdf|pdf):(.+)$')


@dataclass(frozen=True)
class SweepAxis:
    """
    Sweep axis with inclusive ``start`` and ``stop``, the points carry both the axis value and the
    linear value of the driven parameter.
    """
    name: str
    start: float
    stop: float
    step: float
    points: Tuple[Tuple[float, float], ...] = ()


@dataclass(frozen=True)
class SweepCurve:
    """
    One curve of the sweep, parameters are already linear.
    """
    label: str
    family: str
    rf: Dict[str, float]
    fso: Dict[str, float]

    def build(self, axis: str, value: float, sys: SystemConfig) \
            -> Tuple[Union[EtaMuParams, KappaMuParams], FsoChannelParams, SystemConfig]:
        """
        Parameter records of the curve at one point of the sweep.
        """
        rf, fso = dict(self.rf), dict(self.fso)
        target, name = AXES[axis]
        (rf if target == 'rf' else fso)[name] = value
        rf_params = EtaMuParams(**rf) if self.family == 'etamu' else KappaMuParams(**rf)
        fso_params = FsoChannelParams(**{FSO_KEYS[k]: v for k, v in fso.items()})
        return rf_params, fso_params, sys


@dataclass(frozen=True)
class SweepConfig:
    """
    Everything :func:`linkmix.experiment.run_sweep` needs.

    :param curves: Curves of the sweep, each with its own label.
    :param axis: The sweep axis.
    :param system: Relay configuration shared by all curves.
    :param outputs: Requested outputs, ``outage``, ``outage_asym``, ``ber:<scheme>``, ``cdf:<g>``, ``pdf:<g>``.
    :param mc: Monte-Carlo oracle configuration, ``None`` when disabled.
    :param quad: Whether the quadrature oracle runs.
    :param tol: Truncation tolerance of κ-μ series.
    :param echo: Flat configuration echo for the provenance block.
    """
    curves: Tuple[SweepCurve, ...]
    axis: SweepAxis
    system: SystemConfig
    outputs: Tuple[str, ...]
    mc: Optional[McConfig] = None
    quad: bool = False
    tol: float = 1e-6
    echo: Dict[str, Dict[str, str]] = field(default_factory=dict)

    def with_(self, **changes) -> 'SweepConfig':
        return replace(self, **changes)


def _float(data: Dict[str, Any], section: str, key: str) -> float:
    raw = data[section][key]
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise ConfigError(f'Number expected, but {raw!r} found.', section, key)
    if not math.isfinite(value):
        raise ConfigError(f'Finite number expected, but {raw!r} found.', section, key)
    return value


def _linear_section(data: Dict[str, Any], section: str) -> Dict[str, float]:
    # every *_db key becomes its linear counterpart here and nowhere else
    retval = {}
    for key in data.get(section, {}):
        if key == 'family':
            continue
        value = _float(data, section, key)
        if key.endswith('_db'):
            retval[key[:-3]] = db_to_linear(value)
        else:
            retval[key] = value
    return retval


def _axis_points(name: str, start: float, stop: float, step: float) -> Tuple[Tuple[float, float], ...]:
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    values = [start + i * step for i in range(count)]
    return tuple((v, db_to_linear(v) if name.endswith('_db') else v) for v in values)


def _parse_axis(data: Dict[str, Any]) -> SweepAxis:
    sweep = data.get('sweep', {})
    name = str(sweep.get('axis', '')).strip().lower()
    if name not in AXES:
        raise ConfigError(f'Unknown sweep axis {name!r}, one of {sorted(AXES)!r} expected.', 'sweep', 'axis')
    for key in ('start', 'stop', 'step'):
        if key not in sweep:
            raise ConfigError('Missing value.', 'sweep', key)
    start, stop, step = (_float(data, 'sweep', key) for key in ('start', 'stop', 'step'))
    if stop < start:
        raise ConfigError(f'Sweep stop {stop!r} is below start {start!r}.', 'sweep', 'stop')
    if not step > 0:
        raise ConfigError(f'Sweep step should be positive, but {step!r} found.', 'sweep', 'step')
    return SweepAxis(name, start, stop, step, _axis_points(name, start, stop, step))


def _parse_outputs(data: Dict[str, Any]) -> Tuple[str, ...]:
    raw = str(data.get('outputs', {}).get('requested', ''))
    outputs = []
    for item in (x.strip() for x in raw.split(',')):
        if not item:
            continue
        matched = _OUTPUT_PATTERN.match(item)
        if not matched:
            raise ConfigError(f'Unknown output {item!r}.', 'outputs', 'requested')
        kind, argument = matched.group(2), matched.group(3)
        if kind == 'ber':
            try:
                item = f'ber:{ModulationScheme.named(argument).name}'
            except SpecFunError as err:
                raise ConfigError(str(err), 'outputs', 'requested')
        elif kind in ('cdf', 'pdf'):
            try:
                gamma = float(argument)
            except ValueError:
                raise ConfigError(f'SNR expected in {item!r}.', 'outputs', 'requested')
            if not gamma > 0:
                raise ConfigError(f'SNR should be positive in {item!r}.', 'outputs', 'requested')
        outputs.append(item)
    if not outputs:
        raise ConfigError('At least one output should be requested.', 'outputs', 'requested')
    return tuple(outputs)


def _parse_oracles(data: Dict[str, Any]) -> Tuple[Optional[McConfig], bool]:
    oracles = data.get('oracles', {})
    mc = None
    raw = str(oracles.get('mc', '')).strip()
    if raw and raw.lower() not in ('no', 'off', 'false', '0'):
        parts = [x.strip() for x in raw.split(',')]
        try:
            n_samples = int(float(parts[0]))
            seed = int(parts[1]) if len(parts) > 1 else 42
            mc = McConfig(seed=seed, n_samples=n_samples)
        except (ValueError, SpecFunError) as err:
            raise ConfigError(f'Expected "<samples>, <seed>", but {raw!r} found ({err}).', 'oracles', 'mc')
    quad = str(oracles.get('quad', 'no')).strip().lower() in ('yes', 'on', 'true', '1')
    return mc, quad


def _curve_label(family: str, rf: Dict[str, float], fso: Dict[str, float]) -> str:
    keys = RF_KEYS[family][:2]
    return ','.join(f'{k}={rf[k]:g}' for k in keys if k in rf) + f',xi={fso.get("xi", math.nan):g}'


def _split_keys(family: str, values: Dict[str, float], section: str,
                rf: Dict[str, float], fso: Dict[str, float], allow_rf: bool = True, allow_fso: bool = True):
    for key, value in values.items():
        if allow_rf and key in RF_KEYS[family]:
            rf[key] = value
        elif allow_fso and key in FSO_KEYS:
            fso[key] = value
        else:
            raise ConfigError('Unknown key.', section, key)


def _parse_curves(data: Dict[str, Any], axis: str) -> Tuple[SweepCurve, ...]:
    family = str(data.get('rf', {}).get('family', '')).strip().lower()
    if family not in RF_KEYS:
        raise ConfigError(f'Unknown RF family {family!r}, one of {sorted(RF_KEYS)!r} expected.', 'rf', 'family')
    base_rf, base_fso = {}, dict(DEFAULTS['fso'])
    _split_keys(family, _linear_section(data, 'rf'), 'rf', base_rf, base_fso, allow_fso=False)
    _split_keys(family, _linear_section(data, 'fso'), 'fso', base_rf, base_fso, allow_rf=False)

    target, name = AXES[axis]
    sections = [s for s in data if s.startswith('curve:')] or [None]
    curves = []
    for section in sections:
        rf, fso = dict(base_rf), dict(base_fso)
        if section is not None:
            _split_keys(family, _linear_section(data, section), section, rf, fso)

        for key in RF_KEYS[family]:
            if key not in rf and not (target == 'rf' and key == name):
                raise ConfigError('Missing value.', section or 'rf', key)
        for key in FSO_KEYS:
            if key not in fso and key != 'rytov_constant' and not (target == 'fso' and key == name):
                raise ConfigError('Missing value.', section or 'fso', key)

        label = section[len('curve:'):] if section else _curve_label(family, rf, fso)
        curves.append(SweepCurve(label, family, rf, fso))
    return tuple(curves)


def _section_name(name: Any) -> str:
    name = str(name).strip()
    if name.lower().startswith('curve:'):
        return 'curve:' + name[len('curve:'):].strip()
    return name.lower()


def config_from_dict(data: Dict[str, Dict[str, Any]]) -> SweepConfig:
    """
    Build a :class:`SweepConfig` from section dictionaries, the common path of INI files and presets.

    :raise ConfigError: When a value is missing or invalid.
    """
    data = {_section_name(s): {str(k).strip().lower(): v for k, v in values.items()}
            for s, values in data.items()}
    axis = _parse_axis(data)
    system_values = {**DEFAULTS['system'], **_linear_section(data, 'system')}
    for key in system_values:
        if key not in SYSTEM_KEYS:
            raise ConfigError('Unknown key.', 'system', key)
    try:
        system = SystemConfig(**system_values)
    except SpecFunError as err:
        raise ConfigError(str(err), 'system')
    outputs = _parse_outputs(data)
    curves = _parse_curves(data, axis.name)
    mc, quad = _parse_oracles(data)
    tol = _float(data, 'sweep', 'tol') if 'tol' in data.get('sweep', {}) else 1e-6
    if not tol > 0:
        raise ConfigError(f'Tolerance should be positive, but {tol!r} found.', 'sweep', 'tol')

    # fail early on invalid records rather than once per sweep point
    for curve in curves:
        value = axis.points[0][1]
        try:
            curve.build(axis.name, value, system)
        except (SpecFunError, TypeError) as err:
            raise ConfigError(f'Invalid curve {curve.label!r}: {err}')

    echo = {s: {k: str(v) for k, v in values.items()} for s, values in data.items()}
    return SweepConfig(curves, axis, system, outputs, mc, quad, tol, echo)


def apply_overrides(data: Dict[str, Dict[str, Any]], overrides: Iterable[Tuple[str, str, str]]) \
        -> Dict[str, Dict[str, Any]]:
    """
    Patch section dictionaries with ``(section, key, value)`` triples.
    """
    retval = {s: dict(values) for s, values in data.items()}
    for section, key, value in overrides:
        retval.setdefault(section, {})[key] = value
    return retval


def read_config_dict(text: str, source: str = '<string>') -> Dict[str, Dict[str, str]]:
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=(';',))
    try:
        parser.read_string(text, source=source)
    except configparser.Error as err:
        raise ConfigError(err.message if hasattr(err, 'message') else str(err),
                          getattr(err, 'section', None), getattr(err, 'option', None),
                          getattr(err, 'lineno', None))
    return {section: dict(parser[section]) for section in parser.sections()}


def parse_config(text: str, source: str = '<string>',
                 overrides: Iterable[Tuple[str, str, str]] = ()) -> SweepConfig:
    return config_from_dict(apply_overrides(read_config_dict(text, source), overrides))


def load_config(path: str, overrides: Iterable[Tuple[str, str, str]] = ()) -> SweepConfig:
    """
    Load an INI sweep configuration.

    :raise ConfigError: Invalid content.
    :raise OSError: Unreadable file.
    """
    with open(path, 'r', encoding='utf-8') as f:
        return parse_config(f.read(), source=path, overrides=overrides)


def config_lines(cfg: SweepConfig) -> List[str]:
    """
    INI-like echo of the configuration for the provenance block.
    """
    lines = []
    for section, values in cfg.echo.items():
        lines.append(f'[{section}]')
        lines.extend(f'{key} = {value}' for key, value in values.items())
    return lines


def single_point(cfg: SweepConfig, value: Optional[float] = None) -> SweepConfig:
    """
    Shrink the sweep of ``cfg`` to one point, its start by default.

    :param value: Axis value, in the unit of the axis (dB for the SNR axes).
    """
    value = cfg.axis.start if value is None else float(value)
    if not math.isfinite(value):
        raise ConfigError(f'Finite axis value expected, but {value!r} found.', 'sweep', 'start')
    axis = SweepAxis(cfg.axis.name, value, value, cfg.axis.step,
                     _axis_points(cfg.axis.name, value, value, cfg.axis.step))
    return cfg.with_(axis=axis)
