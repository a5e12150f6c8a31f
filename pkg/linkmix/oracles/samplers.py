"""
Overview:
    Exact samplers of the hop SNRs.

    * η-μ: ``gb (eta U + V) / (mu (1 + eta))`` with ``U, V`` unit-scale gamma variates of shape ``mu``.
    * κ-μ: ``N ~ Poisson(kappa mu)``, then a unit-scale gamma variate of shape ``mu + N`` over ``A``.
    * Gamma-gamma with pointing errors: irradiance ``X Y P`` with unit-mean gamma variates ``X, Y``
      and ``P = W^(1 / xi^2)``, ``W`` uniform, mapped to the SNR by ``kappa_t (X Y P / d)^t``.
"""
from typing import Optional, Union

import numpy as np

from ..channels import EtaMuParams, KappaMuParams, FsoChannelParams


def sample_etamu(rf: EtaMuParams, stream: np.random.Generator, size: Optional[int] = None):
    u = stream.gamma(rf.mu, size=size)
    v = stream.gamma(rf.mu, size=size)
    return rf.gamma_bar1 * (rf.eta * u + v) / (rf.mu * (1.0 + rf.eta))


def sample_kappamu(rf: KappaMuParams, stream: np.random.Generator, size: Optional[int] = None):
    n = stream.poisson(rf.poisson_mean, size=size)
    return stream.gamma(rf.mu + n) / rf.rate


def sample_rf(rf: Union[EtaMuParams, KappaMuParams], stream: np.random.Generator, size: Optional[int] = None):
    if isinstance(rf, EtaMuParams):
        return sample_etamu(rf, stream, size)
    elif isinstance(rf, KappaMuParams):
        return sample_kappamu(rf, stream, size)
    else:
        raise TypeError(f'Unknown RF fading parameters - {rf!r}.')


def sample_irradiance(fso: FsoChannelParams, stream: np.random.Generator, size: Optional[int] = None,
                      pointing: bool = True):
    """
    Normalised irradiance ``X Y P``, with ``P = 1`` when ``pointing`` is off.
    """
    x = stream.gamma(fso.a, 1.0 / fso.a, size=size)
    y = stream.gamma(fso.b, 1.0 / fso.b, size=size)
    if not pointing:
        return x * y
    p = stream.random(size=size) ** (1.0 / fso.xi2)
    return x * y * p


def sample_gg_pointing(fso: FsoChannelParams, stream: np.random.Generator, size: Optional[int] = None,
                       pointing: bool = True):
    """
    SNR of the FSO hop. Without pointing errors ``d = 1`` and ``kappa_t`` takes its ``xi -> inf`` limit.

    Examples::
        >>> fso = FsoChannelParams(1e-15, 4000, 0.01, 1550e-9, 1.1, 1, 10.0)
        >>> samples = sample_gg_pointing(fso, np.random.Generator(np.random.Philox(1)), 200000)
        >>> bool(abs(samples.mean() / 10.0 - 1.0) < 0.02)
        True
    """
    irradiance = sample_irradiance(fso, stream, size, pointing)
    if pointing:
        return fso.kappa_t * (irradiance / fso.d) ** fso.t
    return fso.kappa_t_no_pointing * irradiance ** fso.t
