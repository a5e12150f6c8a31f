"""
Overview:
    Nakagami-m and Rayleigh RF hops over the gamma-gamma FSO hop, written out with their own
    Meijer G bookkeeping. These are the limits the η-μ and κ-μ closed forms must reduce to.
"""
import math
from typing import Optional

from scipy import special

from .system import SystemConfig, EvalResult, finish
from ..channels import FsoChannelParams
from ..channels.etamu import _check_positive_int, _check_positive
from ..specfun import MeijerGSpec, GEvalOptions, meijer_g_eval


def _relay_g(fso: FsoChannelParams, j: int, z: float, opts: Optional[GEvalOptions]):
    t = fso.t
    omega = [(fso.xi2 + 1.0 + i) / t for i in range(t)]
    tau = [(x + i) / t for x in (fso.xi2, fso.a, fso.b) for i in range(t)]
    spec = MeijerGSpec.of(3 * t + 1, 0, omega, tau + [float(j)])
    return meijer_g_eval(spec, z / t ** (2 * t), opts)


def cdf_nakagami_gg(m: int, gamma_bar1: float, fso: FsoChannelParams, sys: SystemConfig, gamma: float,
                    opts: Optional[GEvalOptions] = None) -> EvalResult:
    """
    End-to-end CDF with a Nakagami-m RF hop, ``x = m g / gb``::

        1 - C_t exp(-x) sum_{k<m} sum_{j<=k} C(k, j) x^(k - j) / k! * G^{3t+1,0}_{t,3t+1}(...| ...; ..., j)

    written with the binomial form of ``(1 + c / g2)^k``.
    """
    m = _check_positive_int('m', m)
    gamma_bar1 = _check_positive('gamma_bar1', gamma_bar1)
    if gamma == 0:
        return finish(0.0, 0.0)
    gamma = _check_positive('gamma', gamma)

    t, a, b = fso.t, fso.a, fso.b
    log_prefactor = math.log(fso.xi2) + (a + b - 2.0) * math.log(t) - (t - 1) * math.log(2.0 * math.pi) \
        - special.gammaln(a) - special.gammaln(b)
    x = m * gamma / gamma_bar1
    z = (fso.dab ** t) * x * sys.c / fso.kappa_t

    records, survival, error = [], 0.0, 0.0
    for k in range(m):
        for j in range(k + 1):
            record = _relay_g(fso, j, z, opts)
            records.append(record)
            weight = math.exp(log_prefactor - x + k * math.log(x) - special.gammaln(k + 1)) \
                * math.comb(k, j) / x ** j
            survival += weight * record.value
            error += weight * record.abs_error
    return finish(1.0 - survival, error, diagnostics=records)


def cdf_rayleigh_gg(gamma_bar1: float, fso: FsoChannelParams, sys: SystemConfig, gamma: float,
                    opts: Optional[GEvalOptions] = None) -> EvalResult:
    """
    End-to-end CDF with a Rayleigh RF hop::

        1 - xi^2 t^(a+b-2) / ((2 pi)^(t-1) Gamma(a) Gamma(b)) * exp(-g / gb) * G^{3t+1,0}_{t,3t+1}(...| ...; ..., 0)
    """
    gamma_bar1 = _check_positive('gamma_bar1', gamma_bar1)
    if gamma == 0:
        return finish(0.0, 0.0)
    gamma = _check_positive('gamma', gamma)

    t, a, b = fso.t, fso.a, fso.b
    x = gamma / gamma_bar1
    log_prefactor = math.log(fso.xi2) + (a + b - 2.0) * math.log(t) - (t - 1) * math.log(2.0 * math.pi) \
        - special.gammaln(a) - special.gammaln(b) - x
    record = _relay_g(fso, 0, (fso.dab ** t) * x * sys.c / fso.kappa_t, opts)
    scale = math.exp(log_prefactor)
    return finish(1.0 - scale * record.value, scale * record.abs_error, diagnostics=[record])
