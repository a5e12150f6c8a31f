import math
from typing import Optional, Tuple, Union

from scipy import special

from .kernel import RelayKernel
from .system import SystemConfig, EvalResult, finish
from ..channels import EtaMuParams, KappaMuParams, FsoChannelParams, poisson_series
from ..specfun import DomainError, GEvalOptions

_EPS = 2.220446049250313e-16


def binomial_coefficient(rate: float, gamma: float, l: int, j: int) -> float:
    """
    ``exp(-A g) (A g)^(l - j) / (j! (l - j)!)``, the weight of :math:`K_j` in the ``l``-th RF term.
    """
    x = rate * gamma
    if l == j:
        log_power = 0.0
    elif x > 0:
        log_power = (l - j) * math.log(x)
    else:
        return 0.0
    return math.exp(-x + log_power - special.gammaln(j + 1) - special.gammaln(l - j + 1))


def survival_block(kernel: RelayKernel, rate: float, gamma: float, l: int) -> Tuple[float, float, float]:
    """
    Average of ``(A g')^l / l! * exp(-A g')`` with ``g' = g (1 + c / g2)`` over the FSO hop.

    :return: ``(value, error, absolute mass)``.
    """
    value, error, mass = 0.0, 0.0, 0.0
    for j in range(l + 1):
        coef = binomial_coefficient(rate, gamma, l, j)
        if coef == 0.0:
            continue
        k_value, k_error = kernel.cdf_term(rate, gamma, j)
        value += coef * k_value
        error += coef * k_error
        mass += abs(coef * k_value)
    return value, error, mass


def _check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not (gamma >= 0 and math.isfinite(gamma)):
        raise DomainError(f'SNR should be non-negative and finite, but {gamma!r} found.')
    return gamma


def cdf_etamu_gg(rf: EtaMuParams, fso: FsoChannelParams, sys: SystemConfig, gamma: float,
                 opts: Optional[GEvalOptions] = None) -> EvalResult:
    """
    CDF of the end-to-end SNR of the η-μ / gamma-gamma relay link.

    :param rf: RF hop.
    :param fso: FSO hop.
    :param sys: Relay configuration, only ``c`` is used.
    :param gamma: SNR at which the CDF is evaluated.
    :param opts: Meijer G evaluation options.
    """
    gamma = _check_gamma(gamma)
    if gamma == 0.0:
        return finish(0.0, 0.0)

    kernel = RelayKernel(fso, sys.c, opts)
    survival, error, mass = 0.0, 0.0, 0.0
    for rate, l, weight in rf.exponential_terms():
        value, err, block_mass = survival_block(kernel, rate, gamma, l)
        survival += weight * value
        error += abs(weight) * err
        mass += abs(weight) * block_mass

    return finish(1.0 - survival, error + 8 * _EPS * (mass + 1.0), diagnostics=kernel.records)


def cdf_kappamu_gg(rf: KappaMuParams, fso: FsoChannelParams, sys: SystemConfig, gamma: float,
                   tol: float = 1e-6, opts: Optional[GEvalOptions] = None) -> EvalResult:
    """
    CDF of the end-to-end SNR of the κ-μ / gamma-gamma relay link.

    The outer Poisson series over the gamma RF hops of shape ``mu + i`` is telescoped into
    ``1 - sum_l P(N >= l - mu + 1) S_l`` with the survival blocks ``S_l`` of :func:`survival_block`,
    the leading Poisson sum being exactly ``1``. The blocks are non-negative and sum to ``1``, so
    truncation stops once the Poisson tail times the unused block mass is below ``tol``.
    """
    gamma = _check_gamma(gamma)
    mu = rf.require_integer_mu()
    if gamma == 0.0:
        return finish(0.0, 0.0, terms_used=1)

    kernel = RelayKernel(fso, sys.c, opts)
    rate = rf.rate
    state = {'mass': 0.0}

    def _block(l: int) -> Tuple[float, float]:
        value, err, mass = survival_block(kernel, rate, gamma, l)
        state['mass'] += mass
        return value, err

    series = poisson_series(rf.poisson_mean, mu, _block, 1.0, tol)
    return finish(
        series.value, series.error + series.tail_bound + 8 * _EPS * (state['mass'] + 1.0),
        terms_used=series.terms_used, diagnostics=kernel.records,
        extra={'tail_bound': series.tail_bound, 'poisson_mass': series.weight_sum},
    )


def cdf_mixed(rf: Union[EtaMuParams, KappaMuParams], fso: FsoChannelParams, sys: SystemConfig, gamma: float,
              tol: float = 1e-6, opts: Optional[GEvalOptions] = None) -> EvalResult:
    if isinstance(rf, EtaMuParams):
        return cdf_etamu_gg(rf, fso, sys, gamma, opts)
    elif isinstance(rf, KappaMuParams):
        return cdf_kappamu_gg(rf, fso, sys, gamma, tol, opts)
    else:
        raise TypeError(f'Unknown RF fading parameters - {rf!r}.')
