import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np
from scipy import special

from ..specfun import DomainError, log_bessel_i

_ETA_SINGULAR_WIDTH = 1e-3

ArrayLike = Union[float, np.ndarray]


def _check_positive_int(name: str, value) -> int:
    if isinstance(value, (float, np.floating)) and float(value).is_integer():
        value = int(value)
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool) or value < 1:
        raise DomainError(f'{name} should be a positive integer, but {value!r} found.')
    return int(value)


def _check_positive(name: str, value) -> float:
    value = float(value)
    if not (value > 0 and math.isfinite(value)):
        raise DomainError(f'{name} should be positive and finite, but {value!r} found.')
    return value


@dataclass(frozen=True)
class EtaMuParams:
    """
    η-μ fading of the RF hop (Format 1, integer ``mu``).

    :param eta: Power ratio between in-phase and quadrature components.
    :param mu: Number of multipath clusters, positive integer.
    :param gamma_bar1: Mean SNR of the hop, linear.

    Examples::
        >>> rf = EtaMuParams(0.5, 3, 10.0)
        >>> rf.h, rf.H
        (1.125, 0.375)
    """
    eta: float
    mu: int
    gamma_bar1: float

    def __post_init__(self):
        object.__setattr__(self, 'eta', _check_positive('eta', self.eta))
        object.__setattr__(self, 'mu', _check_positive_int('mu', self.mu))
        object.__setattr__(self, 'gamma_bar1', _check_positive('gamma_bar1', self.gamma_bar1))
        if abs(self.eta - 1.0) <= _ETA_SINGULAR_WIDTH:
            raise DomainError(f'eta={self.eta!r} is too close to 1, where the series representation is singular, '
                              f'use the Nakagami-m distribution with m = 2 * mu = {2 * self.mu!r} instead.')

    @property
    def h(self) -> float:
        return (2.0 + 1.0 / self.eta + self.eta) / 4.0

    @property
    def H(self) -> float:
        return (1.0 / self.eta - self.eta) / 4.0

    @property
    def rates(self) -> Tuple[float, float]:
        """
        Exponential rates ``(A1, A2)``.
        """
        return (2.0 * self.mu * (self.h - self.H) / self.gamma_bar1,
                2.0 * self.mu * (self.h + self.H) / self.gamma_bar1)

    def coefficient(self, n: int, k: int) -> float:
        """
        :math:`a_{n,k}`, where ``a_{1,k}`` carries :math:`(h - H)^{\\mu - k}` in its denominator.
        """
        h, H, mu = self.h, self.H, self.mu
        if n == 1:
            sign, base = (-1.0) ** k, h - H
        elif n == 2:
            sign, base = (-1.0) ** mu, h + H
        else:
            raise DomainError(f'Branch index should be 1 or 2, but {n!r} found.')
        return sign * math.gamma(mu + k) * H ** (-k) / (2.0 ** (mu + k) * math.factorial(k) * base ** (mu - k))

    def exponential_terms(self) -> Tuple[Tuple[float, int, float], ...]:
        """
        The CDF as ``1 - sum(w * (A * g) ** l / l! * exp(-A * g))``, returned as ``(A, l, w)`` triples
        with the ``k`` sum already collapsed into ``w``.
        """
        scale = (self.h / self.H) ** self.mu / math.gamma(self.mu)
        retval = []
        for n, rate in enumerate(self.rates, start=1):
            coefficients = [self.coefficient(n, k) for k in range(self.mu)]
            for l in range(self.mu):
                weight = scale * sum(coefficients[:self.mu - l])
                retval.append((rate, l, weight))
        return tuple(retval)


def _exp_poly(rate: float, order: int, gamma: np.ndarray) -> np.ndarray:
    x = rate * gamma
    with np.errstate(divide='ignore'):
        log_term = order * np.log(np.where(x > 0, x, 1.0)) - x - special.gammaln(order + 1)
    retval = np.exp(log_term)
    if order > 0:
        retval = np.where(x > 0, retval, 0.0)
    return retval


def etamu_cdf(rf: EtaMuParams, gamma1: ArrayLike) -> ArrayLike:
    """
    CDF of the η-μ SNR, a finite sum of exponential-polynomial terms.

    Examples::
        >>> etamu_cdf(EtaMuParams(0.5, 3, 10.0), 0.0)
        0.0
    """
    g = np.asarray(gamma1, dtype=float)
    if np.any(g < 0):
        raise DomainError(f'SNR should be non-negative, but {gamma1!r} found.')

    total = np.zeros_like(g)
    for rate, order, weight in rf.exponential_terms():
        total = total + weight * _exp_poly(rate, order, g)
    value = np.clip(1.0 - total, 0.0, 1.0)
    return float(value) if value.ndim == 0 else value


def etamu_pdf(rf: EtaMuParams, gamma1: ArrayLike) -> ArrayLike:
    """
    Density of the η-μ SNR in its Bessel form::

        2 sqrt(pi) mu^(mu+1/2) h^mu / (Gamma(mu) |H|^(mu-1/2)) * g^(mu-1/2) / gb^(mu+1/2)
            * exp(-2 mu h g / gb) * I_(mu-1/2)(2 mu |H| g / gb)
    """
    g = np.atleast_1d(np.asarray(gamma1, dtype=float))
    if np.any(g < 0):
        raise DomainError(f'SNR should be non-negative, but {gamma1!r} found.')

    mu, h, H, gb = rf.mu, rf.h, abs(rf.H), rf.gamma_bar1
    log_const = math.log(2.0 * math.sqrt(math.pi)) + (mu + 0.5) * math.log(mu) + mu * math.log(h) \
        - math.lgamma(mu) - (mu - 0.5) * math.log(H) - (mu + 0.5) * math.log(gb)
    retval = np.zeros_like(g)
    for i, x in enumerate(g):
        if x > 0:
            retval[i] = math.exp(log_const + (mu - 0.5) * math.log(x) - 2.0 * mu * h * x / gb
                                 + log_bessel_i(mu - 0.5, 2.0 * mu * H * x / gb))
    return float(retval[0]) if np.ndim(gamma1) == 0 else retval
