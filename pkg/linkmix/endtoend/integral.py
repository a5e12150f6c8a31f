"""
Overview:
    Closed form of the power-exponential-Meijer G integral

    .. math::
        I = \\int_0^\\infty x^{-\\alpha-1} e^{-\\sigma/x}
            G^{m,n}_{p,q}\\left(\\omega x^{u/v} \\middle| a; b\\right) dx,

    the integral every relay kernel reduces to. Splitting the gamma functions of the Mellin-Barnes
    integrand with the multiplication formula gives

    .. math::
        I = \\frac{v^s u^{\\alpha - 1/2} \\sigma^{-\\alpha}}{(2\\pi)^{(u-1)/2 + c^*(v-1)}}
            G^{vm+u, vn}_{vp, vq+u}\\left(\\frac{\\omega^v \\sigma^u}{u^u v^{v(q-p)}}
            \\middle| \\Delta(v, a); \\Delta(u, \\alpha), \\Delta(v, b)\\right),

    where :math:`s = \\sum b - \\sum a + (p - q)/2 + 1` and :math:`c^* = m + n - (p + q)/2`.
"""
import math
from typing import Optional

from .kernel import delta_list
from ..specfun import DomainError, MeijerGSpec, GEvalOptions, meijer_g


def _check_order(name: str, value) -> int:
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise DomainError(f'{name} should be a positive integer, but {value!r} found.')
    return int(value)


def mellin_exp_g_integral_spec(alpha: float, sigma: float, u: int, v: int, spec: MeijerGSpec,
                               omega: float = 1.0):
    """
    The enlarged G-function of the closed form together with its argument and log prefactor.

    :return: ``(spec, argument, log_prefactor)``.
    """
    u, v = _check_order('u', u), _check_order('v', v)
    if math.gcd(u, v) != 1:
        raise DomainError(f'u and v should be coprime, but {u!r} and {v!r} found.')
    if not (sigma > 0 and math.isfinite(sigma)):
        raise DomainError(f'sigma should be positive, but {sigma!r} found.')
    if not omega > 0:
        raise DomainError(f'omega should be positive, but {omega!r} found.')
    if not spec.balance > 0:
        raise DomainError(f'The integrated G-function should decay along its contour, but {spec} found.')
    if spec.n >= 1:
        edge = (u / v) * (max(spec.a_list[:spec.n]) - 1.0)
        if not edge < alpha:
            raise DomainError(f'Integral diverges at infinity, alpha should exceed {edge!r}, '
                              f'but {alpha!r} found.')

    m, n, p, q = spec.orders
    a, b = spec.a_list, spec.b_list
    a_upper = [x for ak in a[:n] for x in delta_list(v, ak)]
    a_lower = [x for ak in a[n:] for x in delta_list(v, ak)]
    b_upper = delta_list(u, alpha) + [x for bj in b[:m] for x in delta_list(v, bj)]
    b_lower = [x for bj in b[m:] for x in delta_list(v, bj)]
    enlarged = MeijerGSpec.of(v * m + u, v * n, a_upper + a_lower, b_upper + b_lower)

    s = sum(b) - sum(a) + (p - q) / 2.0 + 1.0
    log_prefactor = s * math.log(v) + (alpha - 0.5) * math.log(u) - alpha * math.log(sigma) \
        - ((u - 1) / 2.0 + spec.balance * (v - 1)) * math.log(2.0 * math.pi)
    log_argument = v * math.log(omega) + u * math.log(sigma) - u * math.log(u) - v * (q - p) * math.log(v)
    return enlarged, math.exp(log_argument), log_prefactor


def mellin_exp_g_integral(alpha: float, sigma: float, u: int, v: int, spec: MeijerGSpec,
                          omega: float = 1.0, opts: Optional[GEvalOptions] = None) -> float:
    """
    Evaluate the integral through its Meijer G closed form.

    :param alpha: Power of ``x`` is ``-alpha - 1``.
    :param sigma: Exponential rate, ``exp(-sigma / x)``.
    :param u: Numerator of the power of ``x`` inside the G-function.
    :param v: Denominator of that power, coprime with ``u``.
    :param spec: The integrated G-function.
    :param omega: Scale of the G-function argument.
    :raise DomainError: When the integral does not converge.

    Examples::
        >>> spec = MeijerGSpec.of(1, 0, [], [0.0])  # exp(-x)
        >>> round(mellin_exp_g_integral(0.0, 1.0, 1, 1, spec), 10)  # 2 * K_0(2)
        0.2277877455
    """
    enlarged, argument, log_prefactor = mellin_exp_g_integral_spec(alpha, sigma, u, v, spec, omega)
    return math.exp(log_prefactor) * meijer_g(enlarged, argument, opts)
