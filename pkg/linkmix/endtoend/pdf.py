from typing import Optional, Tuple, Union

from .cdf import binomial_coefficient, _EPS
from .kernel import RelayKernel
from .system import SystemConfig, EvalResult, finish
from ..channels import EtaMuParams, KappaMuParams, FsoChannelParams, poisson_series
from ..specfun import DomainError, GEvalOptions


def _density_block(kernel: RelayKernel, rate: float, gamma: float, l: int) -> Tuple[float, float, float]:
    # derivative of the survival block, with the sign flipped
    value, error, mass = 0.0, 0.0, 0.0
    for j in range(l + 1):
        coef = binomial_coefficient(rate, gamma, l, j)
        if coef == 0.0:
            continue
        k_value, k_error = kernel.cdf_term(rate, gamma, j)
        d_value, d_error = kernel.pdf_term(rate, gamma, j)
        factor = rate - (l - j) / gamma
        term = coef * (factor * k_value - d_value / gamma)
        value += term
        error += coef * (abs(factor) * k_error + d_error / gamma)
        mass += abs(term)
    return value, error, mass


def _check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not gamma > 0:
        raise DomainError(f'SNR of a density should be positive, but {gamma!r} found.')
    return gamma


def pdf_etamu_gg(rf: EtaMuParams, fso: FsoChannelParams, sys: SystemConfig, gamma: float,
                 opts: Optional[GEvalOptions] = None) -> EvalResult:
    """
    Density of the end-to-end SNR of the η-μ / gamma-gamma relay link.
    """
    gamma = _check_gamma(gamma)
    kernel = RelayKernel(fso, sys.c, opts)
    density, error, mass = 0.0, 0.0, 0.0
    for rate, l, weight in rf.exponential_terms():
        value, err, block_mass = _density_block(kernel, rate, gamma, l)
        density += weight * value
        error += abs(weight) * err
        mass += abs(weight) * block_mass
    return finish(density, error + 8 * _EPS * mass, upper=None, diagnostics=kernel.records)


def pdf_kappamu_gg(rf: KappaMuParams, fso: FsoChannelParams, sys: SystemConfig, gamma: float,
                   tol: float = 1e-6, opts: Optional[GEvalOptions] = None) -> EvalResult:
    """
    Density of the end-to-end SNR of the κ-μ / gamma-gamma relay link, the derivative of the telescoped
    series of :func:`linkmix.endtoend.cdf_kappamu_gg`.
    """
    gamma = _check_gamma(gamma)
    mu = rf.require_integer_mu()
    kernel = RelayKernel(fso, sys.c, opts)
    rate = rf.rate
    state = {'mass': 0.0}

    def _block(l: int) -> Tuple[float, float]:
        value, err, mass = _density_block(kernel, rate, gamma, l)
        state['mass'] += mass
        return -value, err

    series = poisson_series(rf.poisson_mean, mu, _block, 0.0, tol, monotone=False)
    return finish(
        series.value, series.error + series.tail_bound + 8 * _EPS * state['mass'], upper=None,
        terms_used=series.terms_used, diagnostics=kernel.records,
        extra={'tail_bound': series.tail_bound, 'poisson_mass': series.weight_sum},
    )


def pdf_mixed(rf: Union[EtaMuParams, KappaMuParams], fso: FsoChannelParams, sys: SystemConfig, gamma: float,
              tol: float = 1e-6, opts: Optional[GEvalOptions] = None) -> EvalResult:
    if isinstance(rf, EtaMuParams):
        return pdf_etamu_gg(rf, fso, sys, gamma, opts)
    elif isinstance(rf, KappaMuParams):
        return pdf_kappamu_gg(rf, fso, sys, gamma, tol, opts)
    else:
        raise TypeError(f'Unknown RF fading parameters - {rf!r}.')
