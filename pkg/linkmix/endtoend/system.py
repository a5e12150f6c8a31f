import math
from dataclasses import dataclass, field
from typing import Optional, List, Dict, Any

from ..specfun import DomainError, GEvalRecord


@dataclass(frozen=True)
class SystemConfig:
    """
    Relay-level configuration.

    :param c: Fixed-gain constant of the relay, ``G^2 / N0``.
    :param gamma_th: Outage threshold, linear.
    """
    c: float = 1.0
    gamma_th: float = 1.0

    def __post_init__(self):
        for name in ('c', 'gamma_th'):
            value = float(getattr(self, name))
            if not (value > 0 and math.isfinite(value)):
                raise DomainError(f'{name} should be positive and finite, but {value!r} found.')
            object.__setattr__(self, name, value)


@dataclass(frozen=True)
class ModulationScheme:
    """
    Binary modulation in the unified form ``P_b = q^p / (2 Gamma(p)) * Integral exp(-q g) g^(p-1) F(g) dg``.

    Examples::
        >>> ModulationScheme.named('nbfsk')
        ModulationScheme(p=1.0, q=0.5, name='NBFSK')
    """
    p: float
    q: float
    name: str = 'custom'

    def __post_init__(self):
        for key in ('p', 'q'):
            value = float(getattr(self, key))
            if not (value > 0 and math.isfinite(value)):
                raise DomainError(f'Modulation parameter {key} should be positive, but {value!r} found.')
            object.__setattr__(self, key, value)

    @classmethod
    def named(cls, name: str) -> 'ModulationScheme':
        key = name.strip().upper()
        if key not in MODULATIONS:
            raise DomainError(f'Unknown modulation scheme {name!r}, one of {sorted(MODULATIONS)!r} expected.')
        return MODULATIONS[key]


MODULATIONS: Dict[str, ModulationScheme] = {
    'CBFSK': ModulationScheme(0.5, 0.5, 'CBFSK'),
    'NBFSK': ModulationScheme(1.0, 0.5, 'NBFSK'),
    'CBPSK': ModulationScheme(0.5, 1.0, 'CBPSK'),
    'DBPSK': ModulationScheme(1.0, 1.0, 'DBPSK'),
}


@dataclass
class EvalResult:
    """
    Closed-form value with its error bookkeeping.

    :param value: Reported value, clamped into the valid range when the raw value is out of it by no
        more than ``abs_error_est``.
    :param abs_error_est: Sum of kernel error bounds, truncation tail bound and rounding.
    :param terms_used: Poisson terms of κ-μ series, ``None`` otherwise.
    :param diagnostics: Every Meijer G evaluation that went into the value.
    :param raw_value: Value before clamping.
    :param extra: Family specific details (tail bound, kept Poisson mass).
    """
    value: float
    abs_error_est: float
    terms_used: Optional[int] = None
    diagnostics: List[GEvalRecord] = field(default_factory=list)
    raw_value: Optional[float] = None
    extra: Dict[str, Any] = field(default_factory=dict)


def finish(raw: float, error: float, lower: Optional[float] = 0.0, upper: Optional[float] = 1.0, **kwargs) \
        -> EvalResult:
    """
    Wrap a raw value into :class:`EvalResult`, clamping values that leave ``[lower, upper]`` by no
    more than the error estimate.
    """
    value = raw
    if lower is not None and lower - error <= raw < lower:
        value = lower
    if upper is not None and upper < raw <= upper + error:
        value = upper
    return EvalResult(value=value, abs_error_est=abs(error), raw_value=raw, **kwargs)
