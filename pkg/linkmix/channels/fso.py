import math
from dataclasses import dataclass, field, replace
from typing import NamedTuple, Optional

import numpy as np
from scipy import integrate, special

from .etamu import _check_positive
from ..specfun import DomainError, MeijerGSpec, GEvalOptions, meijer_g

#: Rytov-variance constant of the turbulence model.
RYTOV_CONSTANT = 0.492

_LOG_TAIL_SPAN = 40.0


class Turbulence(NamedTuple):
    sigma2_sq: float
    d_ap: float
    a: float
    b: float


def derive_turbulence(cn2: float, L: float, D: float, wavelength: float,
                      rytov_constant: float = RYTOV_CONSTANT) -> Turbulence:
    """
    Gamma-gamma shape parameters from the physical link description.

    :param cn2: Refractive-index structure parameter, in m^(-2/3).
    :param L: Link distance in meters.
    :param D: Receiver aperture diameter in meters.
    :param wavelength: Optical wavelength in meters.
    :param rytov_constant: Constant of the Rytov variance ``c * cn2 * k^(7/6) * L^(11/6)``.
    :return: Rytov variance, aperture parameter and the shapes ``a``, ``b``.

    Examples::
        >>> turb = derive_turbulence(1e-15, 4000, 0.01, 1550e-9)
        >>> round(turb.sigma2_sq, 2), round(turb.d_ap, 3)
        (0.1, 0.159)
    """
    cn2 = _check_positive('cn2', cn2)
    L = _check_positive('L', L)
    D = _check_positive('D', D)
    wavelength = _check_positive('wavelength', wavelength)
    rytov_constant = _check_positive('rytov_constant', rytov_constant)

    k = 2.0 * math.pi / wavelength
    sigma2_sq = rytov_constant * cn2 * k ** (7.0 / 6.0) * L ** (11.0 / 6.0)
    d_ap = math.sqrt(k * D ** 2 / (4.0 * L))
    s_pow = sigma2_sq ** (6.0 / 5.0)
    d2 = d_ap ** 2

    a = 1.0 / math.expm1(0.49 * sigma2_sq / (1.0 + 0.18 * d2 + 0.56 * s_pow) ** (7.0 / 6.0))
    b = 1.0 / math.expm1(0.51 * sigma2_sq * (1.0 + 0.69 * s_pow) ** (-5.0 / 6.0)
                         / (1.0 + 0.9 * d2 + 0.62 * d2 * s_pow) ** (5.0 / 6.0))
    return Turbulence(sigma2_sq, d_ap, a, b)


def pointing_fraction(xi: float) -> float:
    """
    ``xi^2 / (xi^2 + 1)``, ``1`` for infinite ``xi``.

    Examples::
        >>> pointing_fraction(1.0)
        0.5
        >>> pointing_fraction(float('inf'))
        1.0
    """
    if not xi > 0:
        raise DomainError(f'Pointing error ratio xi should be positive, but {xi!r} found.')
    if math.isinf(xi):
        return 1.0
    xi2 = xi * xi
    return xi2 / (xi2 + 1.0)


@dataclass(frozen=True)
class FsoChannelParams:
    """
    Gamma-gamma FSO hop with pointing errors.

    :param cn2: Refractive-index structure parameter.
    :param L: Link distance in meters.
    :param D: Receiver aperture diameter in meters.
    :param wavelength: Wavelength in meters.
    :param xi: Ratio of equivalent beam radius to pointing jitter deviation.
    :param t: Detection type, ``1`` heterodyne, ``2`` IM/DD.
    :param gamma_bar2: Mean electrical SNR of the hop, linear.
    :param rytov_constant: Override of the Rytov-variance constant.

    The derived ``sigma2_sq``, ``d_ap``, ``a``, ``b``, ``d`` and ``kappa_t`` are filled on construction.
    ``d`` is the pointing fraction and ``d_ap`` the aperture parameter of the turbulence model.
    """
    cn2: float
    L: float
    D: float
    wavelength: float
    xi: float
    t: int
    gamma_bar2: float
    rytov_constant: float = RYTOV_CONSTANT

    sigma2_sq: float = field(init=False)
    d_ap: float = field(init=False)
    a: float = field(init=False)
    b: float = field(init=False)
    d: float = field(init=False)
    kappa_t: float = field(init=False)

    def __post_init__(self):
        if self.t not in (1, 2):
            raise DomainError(f'Detection type should be 1 or 2, but {self.t!r} found.')
        object.__setattr__(self, 't', int(self.t))
        xi = _check_positive('xi', self.xi)
        object.__setattr__(self, 'xi', xi)
        object.__setattr__(self, 'gamma_bar2', _check_positive('gamma_bar2', self.gamma_bar2))

        turb = derive_turbulence(self.cn2, self.L, self.D, self.wavelength, self.rytov_constant)
        for name, value in turb._asdict().items():
            object.__setattr__(self, name, value)
        object.__setattr__(self, 'd', pointing_fraction(xi))

        if self.t == 1:
            kappa_t = self.gamma_bar2
        else:
            xi2, a, b = xi * xi, turb.a, turb.b
            kappa_t = self.gamma_bar2 * a * b * xi2 * (xi2 + 2.0) / ((a + 1.0) * (b + 1.0) * (xi2 + 1.0) ** 2)
        object.__setattr__(self, 'kappa_t', kappa_t)

    @property
    def xi2(self) -> float:
        return self.xi * self.xi

    @property
    def dab(self) -> float:
        return self.d * self.a * self.b

    @property
    def kappa_t_no_pointing(self) -> float:
        """
        ``kappa_t`` in the limit of vanishing pointing errors, ``xi -> inf``.
        """
        if self.t == 1:
            return self.gamma_bar2
        return self.gamma_bar2 * self.a * self.b / ((self.a + 1.0) * (self.b + 1.0))

    def with_(self, **changes) -> 'FsoChannelParams':
        return replace(self, **changes)

    def irradiance_argument(self, gamma2):
        """
        Normalised irradiance ``x = d * (gamma2 / kappa_t) ** (1 / t)``, so that ``a * b * x`` is the
        argument of the gamma-gamma Meijer G density.
        """
        return self.d * (np.asarray(gamma2, dtype=float) / self.kappa_t) ** (1.0 / self.t)


def gg_pdf(fso: FsoChannelParams, gamma2: float, opts: Optional[GEvalOptions] = None) -> float:
    """
    Gamma-gamma density with pointing errors::

        xi^2 / (t Gamma(a) Gamma(b) g) * G^{3,0}_{1,3}(d a b (g / kappa_t)^(1/t) | xi^2 + 1; xi^2, a, b)
    """
    if not gamma2 > 0:
        raise DomainError(f'SNR should be positive, but {gamma2!r} found.')
    spec = MeijerGSpec.of(3, 0, [fso.xi2 + 1.0], [fso.xi2, fso.a, fso.b])
    z = fso.a * fso.b * float(fso.irradiance_argument(gamma2))
    log_prefactor = 2.0 * math.log(fso.xi) - math.log(fso.t) - special.gammaln(fso.a) - special.gammaln(fso.b) \
        - math.log(gamma2)
    return math.exp(log_prefactor) * meijer_g(spec, z, opts)


def _log_product_density(a: float, b: float, y: float) -> float:
    # density of Y = X1 * X2 with unit-mean gamma variates of shapes a and b
    if y <= 0:
        return -math.inf
    ab = a * b
    arg = 2.0 * math.sqrt(ab * y)
    kve = float(special.kve(a - b, arg))
    if kve <= 0:
        return -math.inf
    return math.log(2.0) + 0.5 * (a + b) * math.log(ab) + (0.5 * (a + b) - 1.0) * math.log(y) \
        + math.log(kve) - arg - special.gammaln(a) - special.gammaln(b)


def irradiance_pdf_reference(a: float, b: float, xi2: float, x: float) -> float:
    """
    Density of ``X1 * X2 * P`` with ``P = W ** (1 / xi2)``, ``W`` uniform, computed by direct quadrature
    of the product law::

        f(x) = xi2 * x^(xi2 - 1) * Integral_x^inf f_Y(y) y^(-xi2) dy
    """
    if x <= 0:
        return 0.0

    lo = math.log(x)

    def _integrand(v):
        # x^(xi2 - 1) folded in
        return math.exp(_log_product_density(a, b, math.exp(v)) + (1.0 - xi2) * (v - lo))

    hi = max(lo, 4.0)
    value = 0.0
    if hi > lo:
        points = [p for p in (-1.0, 0.0, 1.0) if lo < p < hi]
        value += integrate.quad(_integrand, lo, hi, points=points or None,
                                epsabs=0.0, epsrel=1e-11, limit=200)[0]
    # beyond hi + _LOG_TAIL_SPAN the product density is below the smallest double
    tail_points = [hi + p for p in (1.0, 2.0, 4.0, 8.0, 16.0)]
    value += integrate.quad(_integrand, hi, hi + _LOG_TAIL_SPAN, points=tail_points,
                            epsabs=0.0, epsrel=1e-11, limit=200)[0]
    return xi2 * value


def gg_pdf_reference(fso: FsoChannelParams, gamma2: float) -> float:
    """
    Gamma-gamma-with-pointing density built from the Bessel-K product law and the power-law
    pointing factor, without any Meijer G evaluation.
    """
    if not gamma2 > 0:
        raise DomainError(f'SNR should be positive, but {gamma2!r} found.')
    x = float(fso.irradiance_argument(gamma2))
    return irradiance_pdf_reference(fso.a, fso.b, fso.xi2, x) * x / (fso.t * gamma2)


def gg_pdf_no_pointing_reference(fso: FsoChannelParams, gamma2: float) -> float:
    """
    Gamma-gamma density without pointing errors, the Bessel-K product law with ``x = (g / kappa_t)^(1/t)``
    and ``kappa_t`` taken in the limit of vanishing pointing errors. ``fso.xi`` is ignored.
    """
    if not gamma2 > 0:
        raise DomainError(f'SNR should be positive, but {gamma2!r} found.')
    x = (gamma2 / fso.kappa_t_no_pointing) ** (1.0 / fso.t)
    return math.exp(_log_product_density(fso.a, fso.b, x)) * x / (fso.t * gamma2)
