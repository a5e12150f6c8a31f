"""
Overview:
    Figure presets, section dictionaries in the layout of the INI files.

    All presets share the link of the numerical section: ``L = 4000 m``, ``D = 0.01 m``,
    ``lambda = 1550 nm``, heterodyne detection, ``c = 1`` and a threshold of ``0 dB``.
"""
from typing import Dict, Any, Optional, Tuple, Iterable

from .config import SweepConfig, config_from_dict, apply_overrides
from .exceptions import ConfigError

_LINK = {
    'L': 4000, 'D': 0.01, 'wavelength': 1550e-9, 't': 1,
}
_SYSTEM = {'c': 1, 'gamma_th_db': 0}
_ORACLES = {'mc': '1000000, 42', 'quad': 'no'}

#: Second pointing ratio of the BER figure, the caption leaves it open.
FIG5_XI = (1.1, 10.0)


def _fig2() -> Dict[str, Dict[str, Any]]:
    return {
        'rf': {'family': 'etamu', 'gamma_bar1_db': 10},
        'fso': {**_LINK, 'cn2': 1e-15, 'xi': 1.1},
        'system': dict(_SYSTEM),
        'sweep': {'axis': 'gamma_bar2_db', 'start': 0, 'stop': 50, 'step': 2.5, 'tol': 1e-6},
        'outputs': {'requested': 'outage, outage_asym'},
        'oracles': dict(_ORACLES),
        'curve:eta=0.5,mu=1': {'eta': 0.5, 'mu': 1},
        'curve:eta=0.9,mu=1': {'eta': 0.9, 'mu': 1},
        'curve:eta=0.9,mu=2': {'eta': 0.9, 'mu': 2},
    }


def _fig3() -> Dict[str, Dict[str, Any]]:
    return {
        'rf': {'family': 'kappamu', 'gamma_bar1_db': 10},
        'fso': {**_LINK, 'cn2': 1e-15, 'xi': 1.1},
        'system': dict(_SYSTEM),
        'sweep': {'axis': 'gamma_bar2_db', 'start': 0, 'stop': 50, 'step': 2.5, 'tol': 1e-6},
        'outputs': {'requested': 'outage, outage_asym'},
        'oracles': dict(_ORACLES),
        'curve:kappa=1,mu=1': {'kappa': 1, 'mu': 1},
        'curve:kappa=3,mu=1': {'kappa': 3, 'mu': 1},
        'curve:kappa=3,mu=2': {'kappa': 3, 'mu': 2},
    }


def _fig4() -> Dict[str, Dict[str, Any]]:
    return {
        'rf': {'family': 'etamu', 'eta': 0.5, 'mu': 3},
        'fso': {**_LINK, 'xi': 1.1, 'gamma_bar2_db': 10},
        'system': dict(_SYSTEM),
        'sweep': {'axis': 'gamma_bar1_db', 'start': 0, 'stop': 40, 'step': 2.5, 'tol': 1e-6},
        'outputs': {'requested': 'outage'},
        'oracles': dict(_ORACLES),
        'curve:cn2=1e-15': {'cn2': 1e-15},
        'curve:cn2=9e-15': {'cn2': 9e-15},
        'curve:cn2=3e-14': {'cn2': 3e-14},
    }


def _fig5(xis: Iterable[float] = FIG5_XI) -> Dict[str, Dict[str, Any]]:
    data = {
        'rf': {'family': 'etamu', 'eta': 0.5, 'mu': 3},
        'fso': {**_LINK, 'cn2': 9e-15, 'gamma_bar2_db': 10},
        'system': dict(_SYSTEM),
        'sweep': {'axis': 'gamma_bar1_db', 'start': 0, 'stop': 40, 'step': 2.5, 'tol': 1e-6},
        'outputs': {'requested': 'ber:CBFSK, ber:NBFSK'},
        'oracles': dict(_ORACLES),
    }
    for xi in xis:
        data[f'curve:xi={xi:g}'] = {'xi': xi}
    return data


PRESETS = {
    'fig2': _fig2,
    'fig3': _fig3,
    'fig4': _fig4,
    'fig5': _fig5,
}


def preset_dict(name: str) -> Dict[str, Dict[str, Any]]:
    """
    Section dictionaries of a preset, a fresh copy on every call.

    :raise ConfigError: Unknown preset name.
    """
    key = name.strip().lower()
    if key not in PRESETS:
        raise ConfigError(f'Unknown preset {name!r}, one of {sorted(PRESETS)!r} expected.')
    return PRESETS[key]()


def preset_config(name: str, overrides: Iterable[Tuple[str, str, str]] = (),
                  xis: Optional[Iterable[float]] = None) -> SweepConfig:
    """
    Parsed preset.

    :param name: One of ``fig2``, ``fig3``, ``fig4`` and ``fig5``.
    :param overrides: ``(section, key, value)`` patches applied before parsing.
    :param xis: Pointing ratios of the ``fig5`` curves.

    Examples::
        >>> cfg = preset_config('fig2')
        >>> [curve.label for curve in cfg.curves]
        ['eta=0.5,mu=1', 'eta=0.9,mu=1', 'eta=0.9,mu=2']
        >>> len(cfg.axis.points)
        21
    """
    if xis is not None:
        if name.strip().lower() != 'fig5':
            raise ConfigError(f'Pointing ratio lists apply to fig5 only, not to {name!r}.')
        data = _fig5(xis)
    else:
        data = preset_dict(name)
    return config_from_dict(apply_overrides(data, overrides))
