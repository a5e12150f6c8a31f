"""
Overview:
    The relay kernel shared by every closed form of the mixed link.

    Averaging the exponential-polynomial RF terms over the gamma-gamma hop reduces to

    .. math::
        K_j(Z) = E[w^j e^{-w}] = C_t\\, G^{3t+1,0}_{t,3t+1}\\left(\\frac{Z}{t^{2t}} \\middle| \\omega; \\tau, j\\right),
        \\qquad w = \\frac{A c \\gamma}{\\gamma_2},\\quad Z = \\frac{(dab)^t A c \\gamma}{\\kappa_t},

    with :math:`\\omega = \\Delta(t, \\xi^2 + 1)` and :math:`\\tau = \\Delta(t, \\xi^2), \\Delta(t, a), \\Delta(t, b)`.
    Without pointing errors the :math:`\\xi^2` blocks drop out and ``d`` becomes ``1``.
"""
import math
from typing import List, Tuple, Dict, Optional

from scipy import special

from ..channels import FsoChannelParams
from ..specfun import MeijerGSpec, GEvalOptions, GEvalRecord, meijer_g_eval, meijer_g_derivative_spec, \
    meijer_g_leading_residues


def delta_list(t: int, x: float) -> List[float]:
    """
    ``[x / t, (x + 1) / t, ..., (x + t - 1) / t]``.

    Examples::
        >>> delta_list(2, 3.0)
        [1.5, 2.0]
    """
    return [(x + i) / t for i in range(t)]


def relay_kernel_lists(fso: FsoChannelParams, pointing: bool = True) -> Tuple[List[float], List[float]]:
    """
    Upper list ``omega`` and the lower list ``tau`` without the trailing ``j``.
    """
    t = fso.t
    tau = delta_list(t, fso.a) + delta_list(t, fso.b)
    if not pointing:
        return [], tau
    return delta_list(t, fso.xi2 + 1.0), delta_list(t, fso.xi2) + tau


def relay_kernel_spec(fso: FsoChannelParams, j: int, pointing: bool = True) -> MeijerGSpec:
    """
    :math:`G^{3t+1,0}_{t,3t+1}(\\cdot | \\omega; \\tau, j)`, or :math:`G^{2t+1,0}_{0,2t+1}` without pointing errors.
    """
    omega, tau = relay_kernel_lists(fso, pointing)
    return MeijerGSpec.of(len(tau) + 1, 0, omega, tau + [float(j)])


def log_relay_kernel_prefactor(fso: FsoChannelParams, pointing: bool = True) -> float:
    t, a, b = fso.t, fso.a, fso.b
    retval = (a + b - 2.0) * math.log(t) - (t - 1) * math.log(2.0 * math.pi) - special.gammaln(a) - special.gammaln(b)
    if pointing:
        return retval + math.log(fso.xi2)
    else:
        # limit of xi^2 / (xi^2 / t + s) for growing xi
        return retval + math.log(t)


def relay_kernel_prefactor(fso: FsoChannelParams, pointing: bool = True) -> float:
    """
    :math:`C_t = \\xi^2 t^{a+b-2} / ((2\\pi)^{t-1}\\Gamma(a)\\Gamma(b))`, ``t * C_t / xi^2`` without pointing errors.
    """
    return math.exp(log_relay_kernel_prefactor(fso, pointing))


def relay_argument_scale(fso: FsoChannelParams, pointing: bool = True) -> float:
    """
    ``(d a b)^t / (kappa_t t^(2t))``, the G argument per unit of ``A c gamma``.
    """
    t = fso.t
    if pointing:
        return fso.dab ** t / (fso.kappa_t * t ** (2 * t))
    return (fso.a * fso.b) ** t / (fso.kappa_t_no_pointing * t ** (2 * t))


class RelayKernel:
    """
    Memoised evaluator of the relay kernel and its companions for one FSO hop.

    Every G value depends only on the rate and the small integer indices, so the quadruple sums of
    the closed forms reuse them heavily. Instances are cheap and meant to live for one closed-form
    evaluation, every evaluation is appended to :attr:`records`.
    """

    def __init__(self, fso: FsoChannelParams, c: float, opts: Optional[GEvalOptions] = None,
                 pointing: bool = True):
        self.fso = fso
        self.c = c
        self.opts = opts or GEvalOptions()
        self.pointing = pointing
        self.prefactor = relay_kernel_prefactor(fso, pointing)
        self.scale = relay_argument_scale(fso, pointing)
        self.records: List[GEvalRecord] = []
        self._cache: Dict[tuple, GEvalRecord] = {}

    def _eval(self, key: tuple, spec: MeijerGSpec, z: float) -> GEvalRecord:
        if key not in self._cache:
            record = meijer_g_eval(spec, z, self.opts)
            self._cache[key] = record
            self.records.append(record)
        return self._cache[key]

    def cdf_term(self, rate: float, gamma: float, j: int) -> Tuple[float, float]:
        """
        :math:`K_j` at ``Z = scale * rate * c * gamma``, returned as ``(value, abs_error)``.
        """
        spec = relay_kernel_spec(self.fso, j, self.pointing)
        record = self._eval(('cdf', rate, gamma, j), spec, self.scale * rate * self.c * gamma)
        return self.prefactor * record.value, self.prefactor * record.abs_error

    def pdf_term(self, rate: float, gamma: float, j: int) -> Tuple[float, float]:
        """
        :math:`\\gamma\\, dK_j/d\\gamma`, through the ``z dG/dz`` identity.
        """
        spec = meijer_g_derivative_spec(relay_kernel_spec(self.fso, j, self.pointing))
        record = self._eval(('pdf', rate, gamma, j), spec, self.scale * rate * self.c * gamma)
        return self.prefactor * record.value, self.prefactor * record.abs_error

    def ber_term(self, rate: float, q: float, p: float, l: int, j: int) -> Tuple[float, float]:
        """
        :math:`C_t\\, G^{3t+1,1}_{t+1,3t+1}(\\beta / (t^{2t}(q + A)) | 1 + j - p - l, \\omega; \\tau, j)`.
        """
        base = relay_kernel_spec(self.fso, j, self.pointing)
        spec = MeijerGSpec.of(base.m, 1, (1.0 + j - p - l,) + base.a_list, base.b_list)
        record = self._eval(('ber', rate, q, p, l, j), spec, self.scale * rate * self.c / (q + rate))
        return self.prefactor * record.value, self.prefactor * record.abs_error

    def leading_term(self, rate: float, gamma: float, j: int) -> float:
        """
        High-SNR form of :math:`K_j`, the residues of its ``3t + 1`` pole families below the largest leading
        power of the argument, see :func:`linkmix.specfun.meijer_g_leading_residues`.

        :raise PoleCollisionError: When two entries of ``tau`` (``j`` included) differ by an integer.
        """
        spec = relay_kernel_spec(self.fso, j, self.pointing)
        z = self.scale * rate * self.c * gamma
        return self.prefactor * meijer_g_leading_residues(spec, z, self.opts)
