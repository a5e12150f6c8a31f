"""
Overview:
    Direct numerical evaluation of the defining integrals, independent of every Meijer G closed form.

    The end-to-end CDF is

    .. math::
        F(\\gamma) = \\int_0^\\infty f_{\\gamma_2}(y)\\, F_{\\gamma_1}\\left(\\gamma\\left(1 + \\frac{c}{y}\\right)\\right) dy,

    and the BER integrates the CDF against the modulation kernel. Both are integrated over the log of
    their variable in unit panels that grow outwards until the panels stop contributing.
"""
import logging
import math
from typing import Callable, Tuple

from hbutils.string import plural_word
from scipy import integrate, special

from .montecarlo import Estimate
from ..channels import FsoChannelParams, gg_pdf_reference, gg_pdf_no_pointing_reference
from ..endtoend import SystemConfig, ModulationScheme
from ..specfun import ConvergenceError

#: Reported error estimates above this are treated as failures.
STALL_TOLERANCE = 1e-5

_PANEL_WIDTH = 1.0
_MAX_PANELS = 200


def _panel(func: Callable[[float], float], lo: float, hi: float) -> Tuple[float, float]:
    value, error = integrate.quad(func, lo, hi, epsabs=1e-13, epsrel=1e-10, limit=200)
    return value, error


def log_panel_integral(func: Callable[[float], float], center: float, abs_tol: float = 1e-9,
                       lower: float = -math.inf, upper: float = math.inf) -> Tuple[float, float, int]:
    """
    Integrate ``func`` over ``(lower, upper)`` in unit panels around ``center``, walking each side
    outwards until two successive panels are below ``abs_tol``. The last panel's size is added to
    the error as the tail extrapolation.

    :return: ``(value, error, panels)``.
    :raise ConvergenceError: When the error stalls above :data:`STALL_TOLERANCE`.
    """
    center = min(max(center, lower), upper)
    total, error, panels = 0.0, 0.0, 0
    for direction in (-1.0, 1.0):
        edge, quiet = center, 0
        limit = lower if direction < 0 else upper
        while quiet < 2 and edge != limit:
            nxt = edge + direction * _PANEL_WIDTH
            nxt = max(nxt, limit) if direction < 0 else min(nxt, limit)
            lo, hi = (nxt, edge) if direction < 0 else (edge, nxt)
            value, err = _panel(func, lo, hi)
            total += value
            error += err
            panels += 1
            quiet = quiet + 1 if abs(value) < abs_tol else 0
            edge = nxt
            if panels > _MAX_PANELS:
                raise ConvergenceError(f'Log-panel quadrature not converged after '
                                       f'{plural_word(panels, "panel")}.', partial_value=total,
                                       error_estimate=error)
        if edge != limit:
            error += abs(value)

    if error > STALL_TOLERANCE:
        raise ConvergenceError(f'Quadrature error estimate {error!r} stalled above {STALL_TOLERANCE!r}.',
                               partial_value=total, error_estimate=error)
    return total, error, panels


def quad_cdf(rf_cdf: Callable[[float], float], fso: FsoChannelParams, sys: SystemConfig, gamma: float,
             pointing: bool = True) -> Estimate:
    """
    End-to-end CDF at ``gamma`` by quadrature over ``u = ln(g2)``.

    :param rf_cdf: CDF of the RF hop SNR.
    :param pointing: Use the density with pointing errors, or its ``xi -> inf`` limit.
    """
    if gamma <= 0:
        return Estimate(0.0, 0.0, 0)
    density = gg_pdf_reference if pointing else gg_pdf_no_pointing_reference

    def _integrand(u):
        y = math.exp(u)
        f = density(fso, y)
        if f == 0.0:
            return 0.0
        return f * y * float(rf_cdf(gamma * (1.0 + sys.c / y)))

    center = math.log(fso.kappa_t if pointing else fso.kappa_t_no_pointing)
    value, error, panels = log_panel_integral(_integrand, center, abs_tol=1e-10)
    logging.debug(f'Quadrature CDF at {gamma!r}: {value!r} +/- {error!r}, {plural_word(panels, "panel")}.')
    return Estimate(min(max(value, 0.0), 1.0), error, panels)


def quad_ber(cdf: Callable[[float], float], mod: ModulationScheme) -> Estimate:
    """
    Unified BER ``q^p / (2 Gamma(p)) * Integral exp(-q g) g^(p-1) F(g) dg`` by quadrature over ``ln g``.

    Examples::
        >>> from linkmix.endtoend import MODULATIONS
        >>> round(quad_ber(lambda g: 1.0, MODULATIONS['NBFSK']).value, 8)
        0.5
    """
    p, q = mod.p, mod.q
    log_head = p * math.log(q) - special.gammaln(p) - math.log(2.0)

    def _integrand(u):
        x = q * math.exp(u)
        if x > 745.0:
            return 0.0
        return math.exp(log_head + p * u - x) * float(cdf(math.exp(u)))

    upper = math.log(800.0 / q)
    value, error, panels = log_panel_integral(_integrand, -math.log(q), abs_tol=1e-12, upper=upper)
    logging.debug(f'Quadrature {mod.name} BER: {value!r} +/- {error!r}, {plural_word(panels, "panel")}.')
    return Estimate(min(max(value, 0.0), 0.5), error, panels)
