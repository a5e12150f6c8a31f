"""
Overview:
    Outage probability of the mixed link and its high-SNR form.

    The asymptote replaces every relay kernel by the leading residues of its pole families, which
    only involves powers of the SNR and gamma-function ratios.
"""
import logging
from typing import Optional, Union

from hbutils.string import plural_word

from .cdf import cdf_mixed, binomial_coefficient
from .kernel import RelayKernel
from .system import SystemConfig, EvalResult
from ..channels import EtaMuParams, KappaMuParams, FsoChannelParams, poisson_series
from ..specfun import GEvalOptions


def outage(rf: Union[EtaMuParams, KappaMuParams], fso: FsoChannelParams, sys: SystemConfig,
           tol: float = 1e-6, opts: Optional[GEvalOptions] = None) -> EvalResult:
    """
    Outage probability ``P(gamma_eq < gamma_th)``, the end-to-end CDF at ``sys.gamma_th``.
    """
    return cdf_mixed(rf, fso, sys, sys.gamma_th, tol, opts)


def _asymptotic_block(kernel: RelayKernel, rate: float, gamma: float, l: int) -> float:
    return sum(binomial_coefficient(rate, gamma, l, j) * kernel.leading_term(rate, gamma, j)
               for j in range(l + 1))


def outage_asymptotic_etamu(rf: EtaMuParams, fso: FsoChannelParams, sys: SystemConfig,
                            opts: Optional[GEvalOptions] = None) -> float:
    """
    High-SNR outage probability of the η-μ / gamma-gamma link, clipped to ``[0, 1]``.

    :raise PoleCollisionError: When entries of ``xi^2, a, b, j`` (``t = 1``) or of their ``t = 2``
        counterparts differ by an integer. Use :func:`outage` in that case.
    """
    kernel = RelayKernel(fso, sys.c, opts)
    gamma = sys.gamma_th
    survival = sum(weight * _asymptotic_block(kernel, rate, gamma, l)
                   for rate, l, weight in rf.exponential_terms())
    return min(max(1.0 - survival, 0.0), 1.0)


def outage_asymptotic_kappamu(rf: KappaMuParams, fso: FsoChannelParams, sys: SystemConfig,
                              tol: float = 1e-6, opts: Optional[GEvalOptions] = None) -> float:
    """
    High-SNR outage probability of the κ-μ / gamma-gamma link, telescoped and truncated the same way
    as :func:`linkmix.endtoend.cdf_kappamu_gg`, clipped to ``[0, 1]``.
    """
    mu = rf.require_integer_mu()
    kernel = RelayKernel(fso, sys.c, opts)
    rate, gamma = rf.rate, sys.gamma_th

    series = poisson_series(rf.poisson_mean, mu, lambda l: (_asymptotic_block(kernel, rate, gamma, l), 0.0),
                            1.0, tol, monotone=False)
    logging.debug(f'Asymptotic κ-μ outage summed over {plural_word(series.terms_used, "Poisson term")}.')
    return min(max(series.value, 0.0), 1.0)


def outage_asymptotic(rf: Union[EtaMuParams, KappaMuParams], fso: FsoChannelParams, sys: SystemConfig,
                      tol: float = 1e-6, opts: Optional[GEvalOptions] = None) -> float:
    if isinstance(rf, EtaMuParams):
        return outage_asymptotic_etamu(rf, fso, sys, opts)
    elif isinstance(rf, KappaMuParams):
        return outage_asymptotic_kappamu(rf, fso, sys, tol, opts)
    else:
        raise TypeError(f'Unknown RF fading parameters - {rf!r}.')
