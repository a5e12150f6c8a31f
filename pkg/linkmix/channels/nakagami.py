from scipy import special

from .etamu import _check_positive_int, _check_positive
from ..specfun import DomainError


def nakagami_cdf(m: int, gamma_bar1: float, gamma1: float) -> float:
    """
    CDF of the Nakagami-m SNR, ``1 - Q(m, m * g / gb)``.

    Examples::
        >>> round(nakagami_cdf(1, 1.0, 1.0), 7)
        0.6321206
    """
    m = _check_positive_int('m', m)
    gamma_bar1 = _check_positive('gamma_bar1', gamma_bar1)
    if not gamma1 >= 0:
        raise DomainError(f'SNR should be non-negative, but {gamma1!r} found.')
    return float(special.gammainc(m, m * gamma1 / gamma_bar1))
