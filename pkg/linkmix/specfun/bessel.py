import math

import numpy as np
from scipy import special

from .exceptions import DomainError


def log_bessel_i(v: float, x: float) -> float:
    """
    :math:`\\ln I_v(x)` through the exponentially scaled Bessel function, finite for any ``x``
    where :math:`I_v(x)` itself would overflow.
    """
    if not x >= 0:
        raise DomainError(f'Argument of modified Bessel function should be non-negative, but {x!r} found.')
    if not v >= 0:
        raise DomainError(f'Order of modified Bessel function should be non-negative, but {v!r} found.')
    scaled = float(special.ive(v, x))
    if scaled <= 0.0:
        return -math.inf
    return math.log(scaled) + float(x)


def bessel_i(v: float, x: float) -> float:
    """
    Modified Bessel function of the first kind :math:`I_v(x)`, ``v >= 0``, ``x >= 0``.

    Returns ``inf`` rather than raising when the value leaves double range.

    Examples::
        >>> bessel_i(0, 0)
        1.0
        >>> bessel_i(1, 0)
        0.0
        >>> round(bessel_i(1, 1), 7)
        0.5651591
    """
    lv = log_bessel_i(v, x)
    if lv == -math.inf:
        return 0.0
    with np.errstate(over='ignore'):
        return float(np.exp(lv))
