import math
from typing import Iterable, Tuple

import numpy as np
from scipy import special

from .exceptions import PoleError, DomainError, PoleCollisionError


def is_nonpositive_integer(x: float, tol: float = 0.0) -> bool:
    x = float(x)
    if x > tol:
        return False
    return abs(x - round(x)) <= tol


def ln_gamma(z) -> complex:
    """
    Principal branch of :math:`\\ln\\Gamma(z)` on the complex plane.

    :param z: Complex (or real) argument, not a non-positive integer.
    :return: Complex log-gamma, ``exp(ln_gamma(z)) == gamma(z)``.
    :raises PoleError: When ``z`` is a non-positive integer.

    Examples::
        >>> ln_gamma(1)
        0j
        >>> round(ln_gamma(0.5).real, 7)
        0.5723649
    """
    z = complex(z)
    if z.imag == 0.0 and is_nonpositive_integer(z.real):
        raise PoleError(f'Gamma function has a pole at {z.real!r}.', location=z.real)
    return complex(special.loggamma(z))


def ln_abs_gamma(x: float) -> Tuple[float, int]:
    """
    Real log-gamma with sign tracking, ``gamma(x) == sign * exp(value)``.
    """
    x = float(x)
    if is_nonpositive_integer(x):
        raise PoleError(f'Gamma function has a pole at {x!r}.', location=x)
    return float(special.gammaln(x)), int(special.gammasgn(x))


def gamma_ratio(numer: Iterable[float], denom: Iterable[float]) -> Tuple[float, int]:
    """
    Product/ratio of gamma functions assembled in log domain.

    Arguments in ``denom`` sitting on a pole make the whole ratio zero (``sign == 0``),
    arguments in ``numer`` sitting on a pole raise :class:`PoleCollisionError`.

    :return: ``(log_abs, sign)`` with ``prod(gamma(numer)) / prod(gamma(denom)) == sign * exp(log_abs)``.
    """
    log_abs, sign = 0.0, 1
    for x in numer:
        if is_nonpositive_integer(x):
            raise PoleCollisionError(f'Gamma function in numerator evaluated at pole {x!r}.', location=x)
        log_abs += float(special.gammaln(x))
        sign *= int(special.gammasgn(x))
    for x in denom:
        if is_nonpositive_integer(x):
            return -math.inf, 0
        log_abs -= float(special.gammaln(x))
        sign *= int(special.gammasgn(x))
    return log_abs, sign


def gamma_upper_reg(p: float, x: float) -> float:
    """
    Regularized upper incomplete gamma function :math:`Q(p, x) = \\Gamma(p, x) / \\Gamma(p)`.

    :raises DomainError: When ``p <= 0`` or ``x < 0``.

    Examples::
        >>> round(gamma_upper_reg(1, 1), 7)
        0.3678794
        >>> gamma_upper_reg(2.5, 0)
        1.0
    """
    if not p > 0:
        raise DomainError(f'Shape of incomplete gamma should be positive, but {p!r} found.')
    if not x >= 0:
        raise DomainError(f'Argument of incomplete gamma should be non-negative, but {x!r} found.')
    return float(special.gammaincc(p, x))


def gamma_upper_reg_array(p, x) -> np.ndarray:
    """
    Vectorised :func:`gamma_upper_reg` without per-element domain checks, for samplers and
    Monte-Carlo estimators which already hold valid arrays.
    """
    return special.gammaincc(p, x)
