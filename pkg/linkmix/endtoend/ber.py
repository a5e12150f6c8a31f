"""
Overview:
    Unified bit error rate of binary modulations over the mixed link,

    .. math::
        P_b = \\frac{q^p}{2\\Gamma(p)} \\int_0^\\infty e^{-q\\gamma}\\gamma^{p-1} F(\\gamma)\\, d\\gamma,

    with the end-to-end CDF substituted term by term. Every term ends up as a
    :math:`G^{3t+1,1}_{t+1,3t+1}` of the relay kernel lists, or :math:`G^{2t+1,1}_{1,2t+1}` once the
    pointing errors are dropped.
"""
import math
from typing import Optional, Tuple, Union

from scipy import special

from .cdf import _EPS
from .kernel import RelayKernel
from .system import SystemConfig, ModulationScheme, EvalResult, finish
from ..channels import EtaMuParams, KappaMuParams, FsoChannelParams, poisson_series
from ..specfun import GEvalOptions


def _ber_block(kernel: RelayKernel, rate: float, mod: ModulationScheme, l: int) -> Tuple[float, float, float]:
    # q^p / (2 Gamma(p)) * Integral exp(-q g) g^(p-1) exp(-A g) (A g)^l / l! * E[...] dg
    p, q = mod.p, mod.q
    log_head = p * math.log(q) - special.gammaln(p) - math.log(2.0)
    value, error, mass = 0.0, 0.0, 0.0
    for j in range(l + 1):
        log_coef = log_head + (l - j) * math.log(rate) + (j - p - l) * math.log(q + rate) \
            - special.gammaln(j + 1) - special.gammaln(l - j + 1)
        coef = math.exp(log_coef)
        g_value, g_error = kernel.ber_term(rate, q, p, l, j)
        value += coef * g_value
        error += coef * g_error
        mass += abs(coef * g_value)
    return value, error, mass


def _ber_etamu(rf: EtaMuParams, fso: FsoChannelParams, sys: SystemConfig, mod: ModulationScheme,
               opts: Optional[GEvalOptions], pointing: bool) -> EvalResult:
    kernel = RelayKernel(fso, sys.c, opts, pointing=pointing)
    total, error, mass = 0.0, 0.0, 0.0
    for rate, l, weight in rf.exponential_terms():
        value, err, block_mass = _ber_block(kernel, rate, mod, l)
        total += weight * value
        error += abs(weight) * err
        mass += abs(weight) * block_mass
    return finish(0.5 - total, error + 8 * _EPS * (mass + 1.0), upper=0.5, diagnostics=kernel.records,
                  extra={'modulation': mod.name})


def _ber_kappamu(rf: KappaMuParams, fso: FsoChannelParams, sys: SystemConfig, mod: ModulationScheme,
                 tol: float, opts: Optional[GEvalOptions], pointing: bool) -> EvalResult:
    # blocks of the telescoped CDF series averaged against the modulation kernel, they sum to 1/2
    mu = rf.require_integer_mu()
    kernel = RelayKernel(fso, sys.c, opts, pointing=pointing)
    rate = rf.rate
    state = {'mass': 0.0}

    def _block(l: int) -> Tuple[float, float]:
        value, err, mass = _ber_block(kernel, rate, mod, l)
        state['mass'] += mass
        return value, err

    series = poisson_series(rf.poisson_mean, mu, _block, 0.5, tol)
    return finish(
        series.value, series.error + series.tail_bound + 8 * _EPS * (state['mass'] + 1.0), upper=0.5,
        terms_used=series.terms_used, diagnostics=kernel.records,
        extra={'modulation': mod.name, 'tail_bound': series.tail_bound, 'poisson_mass': series.weight_sum},
    )


def ber_etamu_gg(rf: EtaMuParams, fso: FsoChannelParams, sys: SystemConfig, mod: ModulationScheme,
                 opts: Optional[GEvalOptions] = None) -> EvalResult:
    """
    BER of the η-μ / gamma-gamma link with pointing errors.

    Examples::
        >>> from linkmix.channels import FsoChannelParams, EtaMuParams
        >>> fso = FsoChannelParams(9e-15, 4000, 0.01, 1550e-9, 1.1, 1, 10.0)
        >>> result = ber_etamu_gg(EtaMuParams(0.5, 3, 100.0), fso, SystemConfig(), ModulationScheme.named('CBFSK'))
        >>> 0.0 < result.value < 0.5
        True
    """
    return _ber_etamu(rf, fso, sys, mod, opts, pointing=True)


def ber_kappamu_gg(rf: KappaMuParams, fso: FsoChannelParams, sys: SystemConfig, mod: ModulationScheme,
                   tol: float = 1e-6, opts: Optional[GEvalOptions] = None) -> EvalResult:
    """
    BER of the κ-μ / gamma-gamma link with pointing errors, the Poisson mixture of the BERs of
    gamma-faded RF hops of shapes ``mu + i``.
    """
    return _ber_kappamu(rf, fso, sys, mod, tol, opts, pointing=True)


def ber_no_pointing_etamu(rf: EtaMuParams, fso: FsoChannelParams, sys: SystemConfig, mod: ModulationScheme,
                          opts: Optional[GEvalOptions] = None) -> EvalResult:
    """
    BER of the η-μ / gamma-gamma link without pointing errors, ``fso.xi`` is ignored.
    """
    return _ber_etamu(rf, fso, sys, mod, opts, pointing=False)


def ber_no_pointing_kappamu(rf: KappaMuParams, fso: FsoChannelParams, sys: SystemConfig, mod: ModulationScheme,
                            tol: float = 1e-6, opts: Optional[GEvalOptions] = None) -> EvalResult:
    """
    BER of the κ-μ / gamma-gamma link without pointing errors, ``fso.xi`` is ignored.
    """
    return _ber_kappamu(rf, fso, sys, mod, tol, opts, pointing=False)


def ber_mixed(rf: Union[EtaMuParams, KappaMuParams], fso: FsoChannelParams, sys: SystemConfig,
              mod: ModulationScheme, tol: float = 1e-6, opts: Optional[GEvalOptions] = None,
              pointing: bool = True) -> EvalResult:
    if isinstance(rf, EtaMuParams):
        return _ber_etamu(rf, fso, sys, mod, opts, pointing)
    elif isinstance(rf, KappaMuParams):
        return _ber_kappamu(rf, fso, sys, mod, tol, opts, pointing)
    else:
        raise TypeError(f'Unknown RF fading parameters - {rf!r}.')
