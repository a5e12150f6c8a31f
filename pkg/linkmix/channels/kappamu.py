import logging
import math
from dataclasses import dataclass
from typing import Callable, Tuple, List

from hbutils.string import plural_word
from scipy import special

from .etamu import _check_positive
from ..specfun import DomainError, log_bessel_i

#: Hard cap on the number of Poisson terms of any κ-μ series.
MAX_POISSON_TERMS = 200


@dataclass(frozen=True)
class KappaMuParams:
    """
    κ-μ fading of the RF hop.

    :param kappa: Dominant-to-scattered power ratio, ``kappa >= 0``.
    :param mu: Number of clusters, integer for the closed forms, any positive real for sampling.
    :param gamma_bar1: Mean SNR of the hop, linear.
    """
    kappa: float
    mu: float
    gamma_bar1: float

    def __post_init__(self):
        kappa = float(self.kappa)
        if not (kappa >= 0 and math.isfinite(kappa)):
            raise DomainError(f'kappa should be non-negative and finite, but {self.kappa!r} found.')
        object.__setattr__(self, 'kappa', kappa)
        mu = _check_positive('mu', self.mu)
        object.__setattr__(self, 'mu', int(mu) if mu.is_integer() else mu)
        object.__setattr__(self, 'gamma_bar1', _check_positive('gamma_bar1', self.gamma_bar1))

    @property
    def rate(self) -> float:
        """
        :math:`A = \\mu (1 + \\kappa) / \\bar\\gamma_1`.
        """
        return self.mu * (1.0 + self.kappa) / self.gamma_bar1

    @property
    def poisson_mean(self) -> float:
        return self.kappa * self.mu

    @property
    def integer_mu(self) -> bool:
        return isinstance(self.mu, int)

    def require_integer_mu(self) -> int:
        if not self.integer_mu:
            raise DomainError(f'Closed forms need an integer mu, but {self.mu!r} found.')
        return self.mu


def kappamu_pdf(rf: KappaMuParams, gamma1: float) -> float:
    """
    Density of the κ-μ SNR, evaluated in log domain so that large ``kappa * mu`` does not overflow
    the Bessel function. ``kappa == 0`` falls back to the gamma density.
    """
    if not gamma1 > 0:
        raise DomainError(f'SNR should be positive, but {gamma1!r} found.')

    kappa, mu, gb, rate = rf.kappa, rf.mu, rf.gamma_bar1, rf.rate
    if kappa == 0.0:
        return math.exp(mu * math.log(rate) + (mu - 1) * math.log(gamma1) - rate * gamma1 - special.gammaln(mu))

    arg = 2.0 * mu * math.sqrt(kappa * (1.0 + kappa) * gamma1 / gb)
    log_value = math.log(mu) + 0.5 * (mu + 1) * math.log1p(kappa) - 0.5 * (mu - 1) * math.log(kappa) \
        - kappa * mu - 0.5 * (mu + 1) * math.log(gb) + 0.5 * (mu - 1) * math.log(gamma1) \
        - rate * gamma1 + log_bessel_i(mu - 1, arg)
    return math.exp(log_value)


def poisson_survival(lam: float, n: int) -> float:
    """
    :math:`P(N \\geq n)` for :math:`N \\sim Poisson(\\lambda)`, ``1`` for ``n <= 0``.

    Examples::
        >>> poisson_survival(6.0, 0)
        1.0
        >>> poisson_survival(0.0, 1)
        0.0
        >>> round(poisson_survival(6.0, 10), 4)
        0.0839
    """
    if n <= 0:
        return 1.0
    if lam <= 0.0:
        return 0.0
    return float(special.pdtrc(n - 1, lam))


@dataclass
class PoissonSeries:
    """
    Truncated κ-μ series ``base - sum_l P(N >= l - mu + 1) S_l``.

    :param value: Truncated sum.
    :param error: Accumulated evaluation error of the blocks.
    :param terms_used: Number of Poisson (outer) terms covered, ``i = 0 .. terms_used - 1``.
    :param tail_bound: Bound of the dropped blocks.
    :param weight_sum: Poisson mass of the covered outer terms.
    :param blocks: The evaluated ``S_l``.
    """
    value: float
    error: float
    terms_used: int
    tail_bound: float
    weight_sum: float
    blocks: List[float]


def poisson_series(lam: float, mu: int, block: Callable[[int], Tuple[float, float]], base: float, tol: float,
                   max_terms: int = MAX_POISSON_TERMS, monotone: bool = True) -> PoissonSeries:
    """
    Poisson mixture :math:`\\sum_i e^{-\\lambda}\\lambda^i/i!\\, (base - \\sum_{l < \\mu + i} S_l)` summed
    in the order of the blocks ``S_l = block(l)[0]``, with the leading :math:`\\sum_i e^{-\\lambda}\\lambda^i/i!`
    taken as exactly ``1``::

        base - sum_l P(N >= l - mu + 1) S_l

    The sum stops at the first ``L`` where :math:`P(N \\geq L - \\mu + 2)\\,(|base - \\sum_{l \\leq L} S_l| + err)`
    is below ``tol``. For non-negative blocks summing to ``base`` this is a bound of the dropped blocks,
    the Poisson weights being non-increasing in ``l``. With ``monotone=False`` the blocks are not known to
    be of one sign, and the series additionally waits until the partial residual stops growing.

    :param lam: Poisson mean ``kappa * mu``.
    :param mu: Integer shape of the leading gamma term.
    :param block: Returns ``(S_l, error_l)``.
    :param base: Limit of the partial sums of the blocks.
    :param tol: Truncation tolerance.
    :param max_terms: Hard cap on the outer terms.
    """
    if not tol > 0:
        raise DomainError(f'Truncation tolerance should be positive, but {tol!r} found.')

    value, error, partial = base, 0.0, 0.0
    blocks = []
    bound, previous = math.inf, math.inf
    last = mu + max_terms - 1
    for l in range(last):
        s, err = block(l)
        blocks.append(s)
        weight = poisson_survival(lam, l - mu + 1)
        value -= weight * s
        partial += s
        error += weight * err

        residual = abs(base - partial) + error
        bound = poisson_survival(lam, l - mu + 2) * residual
        if bound <= tol and (monotone or residual <= previous):
            terms = max(1, l - mu + 2)
            return PoissonSeries(value, error, terms, bound, 1.0 - poisson_survival(lam, terms), blocks)
        previous = residual

    logging.warning(f'Poisson series with mean {lam!r} not converged to {tol!r} after '
                    f'{plural_word(max_terms, "term")}, tail bound {bound!r}.')
    return PoissonSeries(value, error, max_terms, bound, 1.0 - poisson_survival(lam, max_terms), blocks)


def kappamu_cdf(rf: KappaMuParams, gamma1: float, tol: float = 1e-6) -> Tuple[float, int]:
    """
    CDF of the κ-μ SNR as the Poisson mixture of gamma CDFs, ``mu`` may be any positive real.

    The gamma CDFs decrease in the shape, so the dropped terms stay below the last one times the
    Poisson tail.

    :return: ``(value, terms_used)``.

    Examples::
        >>> kappamu_cdf(KappaMuParams(0.0, 2, 10.0), 0.0)
        (0.0, 1)
    """
    if not gamma1 >= 0:
        raise DomainError(f'SNR should be non-negative, but {gamma1!r} found.')
    if not tol > 0:
        raise DomainError(f'Truncation tolerance should be positive, but {tol!r} found.')
    x, lam = rf.rate * gamma1, rf.poisson_mean

    value, bound = 0.0, math.inf
    for i in range(MAX_POISSON_TERMS):
        r = float(special.gammainc(rf.mu + i, x))
        value += math.exp(special.xlogy(i, lam) - lam - special.gammaln(i + 1)) * r
        bound = r * poisson_survival(lam, i + 1)
        if bound <= tol:
            return min(max(value, 0.0), 1.0), i + 1

    logging.warning(f'κ-μ CDF at {gamma1!r} not converged to {tol!r} after '
                    f'{plural_word(MAX_POISSON_TERMS, "term")}, tail bound {bound!r}.')
    return min(max(value, 0.0), 1.0), MAX_POISSON_TERMS
