"""
Overview:
    Real-argument Meijer G-function.

    The default evaluator integrates the Mellin-Barnes representation along a vertical line
    :math:`\\Re s = c`, the Slater residue series over the poles of :math:`\\Gamma(b_j - s)` is
    used as cross-check and for the small-argument expansion. All gamma products are assembled
    in log domain.

    Convention used everywhere in this package::

        G(z) = 1/(2 pi i) * Integral prod Gamma(b_j - s) prod Gamma(1 - a_k + s)
                            / (prod_{j>m} Gamma(1 - b_j + s) prod_{k>n} Gamma(a_k - s)) * z^s ds
"""
import logging
import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Tuple, Optional, List, Callable

import numpy as np
from hbutils.string import plural_word
from scipy import optimize, special

from .exceptions import DomainError, PoleCollisionError, ConvergenceError
from .gamma import gamma_ratio, is_nonpositive_integer

try:
    from typing import Literal
except (ImportError, ModuleNotFoundError):
    from typing_extensions import Literal

__all__ = [
    'MeijerGSpec', 'GEvalOptions', 'GEvalRecord', 'MethodTyping',
    'meijer_g', 'meijer_g_eval', 'meijer_g_residue_series',
    'meijer_g_leading_residues', 'meijer_g_derivative_spec',
]

MethodTyping = Literal['contour', 'residue_series', 'auto']

_COARSE_NODES = 24
_FINE_NODES = 48
_MAX_PANEL_WIDTH = 4.0
_MIN_SPAN = 1.0
_MAX_SPAN = 1.0e4
_SEARCH_WIDTH = 8.0
_SERIES_BLOCK = 64
_MAX_REDUCED_SHIFT = 4
_EPS = float(np.finfo(float).eps)


def _is_positive_integer(x: float, tol: float = 1e-12) -> bool:
    return x >= 1.0 - tol and abs(x - round(x)) <= tol


def _integer_distance(x: float) -> float:
    return abs(x - round(x))


@dataclass(frozen=True)
class MeijerGSpec:
    """
    Orders and parameter lists of one :math:`G^{m,n}_{p,q}` instance.

    :param m: Number of ``b`` parameters in the :math:`\\Gamma(b_j - s)` family.
    :param n: Number of ``a`` parameters in the :math:`\\Gamma(1 - a_k + s)` family.
    :param p: Length of ``a_list``.
    :param q: Length of ``b_list``.
    :param a_list: Upper parameters, the first ``n`` belong to the numerator.
    :param b_list: Lower parameters, the first ``m`` belong to the numerator.

    Examples::
        >>> MeijerGSpec.of(1, 0, [], [0.0])
        MeijerGSpec(m=1, n=0, p=0, q=1, a_list=(), b_list=(0.0,))
    """
    m: int
    n: int
    p: int
    q: int
    a_list: Tuple[float, ...]
    b_list: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, 'a_list', tuple(float(x) for x in self.a_list))
        object.__setattr__(self, 'b_list', tuple(float(x) for x in self.b_list))
        for name in ('m', 'n', 'p', 'q'):
            value = getattr(self, name)
            if not isinstance(value, (int, np.integer)) or value < 0:
                raise DomainError(f'Order {name} should be a non-negative integer, but {value!r} found.')
        if len(self.a_list) != self.p:
            raise DomainError(f'Upper list should contain {plural_word(self.p, "parameter")}, '
                              f'but {len(self.a_list)!r} found.')
        if len(self.b_list) != self.q:
            raise DomainError(f'Lower list should contain {plural_word(self.q, "parameter")}, '
                              f'but {len(self.b_list)!r} found.')
        if self.m > self.q or self.n > self.p:
            raise DomainError(f'Orders should satisfy m <= q and n <= p, but {self.orders!r} found.')
        if self.m + self.n == 0:
            raise DomainError('At least one of m and n should be positive.')
        if not all(math.isfinite(x) for x in self.a_list + self.b_list):
            raise DomainError(f'Parameters should be finite, but {self.a_list!r}, {self.b_list!r} found.')

        # poles of Gamma(b_j - s) sit at b_j + l, those of Gamma(1 - a_k + s) at a_k - 1 - l
        for a in self.a_list[:self.n]:
            for b in self.b_list[:self.m]:
                if _is_positive_integer(a - b):
                    raise PoleCollisionError(f'Pole families collide for a={a!r} and b={b!r}, '
                                             f'no separating contour exists.', location=(a, b))

    @classmethod
    def of(cls, m: int, n: int, a_list, b_list) -> 'MeijerGSpec':
        a_list, b_list = tuple(a_list), tuple(b_list)
        return cls(m, n, len(a_list), len(b_list), a_list, b_list)

    @property
    def orders(self) -> Tuple[int, int, int, int]:
        return self.m, self.n, self.p, self.q

    @property
    def balance(self) -> float:
        """
        :math:`c^* = m + n - (p + q) / 2`, the integrand decays like :math:`e^{-\\pi c^* |y|}`.
        """
        return self.m + self.n - 0.5 * (self.p + self.q)

    def __str__(self):
        a_text = ', '.join(f'{x:.6g}' for x in self.a_list) or '-'
        b_text = ', '.join(f'{x:.6g}' for x in self.b_list) or '-'
        return f'G^{{{self.m},{self.n}}}_{{{self.p},{self.q}}}({a_text}; {b_text})'


@dataclass(frozen=True)
class GEvalOptions:
    """
    Evaluation controls of :func:`meijer_g`.

    :param rel_tol: Relative accuracy target.
    :param max_quadrature_nodes: Integrand evaluation budget of the contour method.
    :param pole_separation_min: Smallest distance (modulo integers) tolerated between two
        ``b`` parameters of the residue family.
    :param method: ``contour``, ``residue_series`` or ``auto`` (contour plus residue cross-check).
    :param contour_gap_min: Narrowest strip a vertical contour is placed in, narrower strips are
        left and the crossed residues added back explicitly.
    :param nudge: Parameter displacement used by ``auto`` when the residue cross-check meets
        colliding poles.
    :param max_series_terms: Residue budget per pole family.
    """
    rel_tol: float = 1e-10
    max_quadrature_nodes: int = 200000
    pole_separation_min: float = 1e-6
    method: MethodTyping = 'auto'
    contour_gap_min: float = 1e-3
    nudge: float = 1e-8
    max_series_terms: int = 5000

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError(f'Relative tolerance should be positive, but {self.rel_tol!r} found.')
        if not self.pole_separation_min > 0:
            raise DomainError(f'Pole separation should be positive, but {self.pole_separation_min!r} found.')
        if self.method not in ('contour', 'residue_series', 'auto'):
            raise DomainError(f'Unknown evaluation method - {self.method!r}.')
        if self.max_quadrature_nodes < _COARSE_NODES + _FINE_NODES:
            raise DomainError(f'Quadrature budget too small - {self.max_quadrature_nodes!r}.')


@dataclass
class GEvalRecord:
    """
    Value of one G-function evaluation together with its diagnostics.
    """
    spec: MeijerGSpec
    z: float
    method: str
    value: float
    abs_error: float
    abscissa: Optional[float] = None
    nodes: int = 0
    tail_estimate: float = 0.0
    crossed_residues: int = 0
    terms: int = 0
    nudge: Optional[float] = None
    cross_check: Optional[float] = None


def _check_argument(z) -> float:
    z = float(z)
    if not (z > 0 and math.isfinite(z)):
        raise DomainError(f'Argument of Meijer G should be positive and finite, but {z!r} found.')
    return z


@lru_cache(maxsize=256)
def _kernel_parts(spec: MeijerGSpec) -> Tuple[Tuple[float, ...], Tuple[float, ...], Tuple[Tuple[float, int], ...]]:
    """
    Gamma factors of the kernel with every pair of a numerator ``Gamma(b - s)`` and a denominator
    ``Gamma(a - s)``, ``a - b = k`` a small non-negative integer, reduced to
    ``1 / ((b - s) (b + 1 - s) ... (b + k - 1 - s))``. Large parameters then never meet as a difference
    of two log-gamma values.

    :return: Remaining numerator ``b``, remaining denominator ``a`` and the reduced ``(b, k)`` pairs.
    """
    numer_b = list(spec.b_list[:spec.m])
    denom_a, pairs = [], []
    for a in spec.a_list[spec.n:]:
        best = None
        for i, b in enumerate(numer_b):
            k = a - b
            if -0.5 < k < _MAX_REDUCED_SHIFT + 0.5 and _integer_distance(k) <= 64 * _EPS * max(1.0, abs(a)):
                if best is None or k < a - numer_b[best]:
                    best = i
        if best is None:
            denom_a.append(a)
        else:
            b = numer_b.pop(best)
            pairs.append((b, int(round(a - b))))
    return tuple(numer_b), tuple(denom_a), tuple(pairs)


def _log_kernel(spec: MeijerGSpec, s: np.ndarray) -> np.ndarray:
    s = np.asarray(s, dtype=complex)
    numer_b, denom_a, pairs = _kernel_parts(spec)
    acc = np.zeros(s.shape, dtype=complex)
    for b in numer_b:
        acc += special.loggamma(b - s)
    for a in spec.a_list[:spec.n]:
        acc += special.loggamma(1.0 - a + s)
    for b in spec.b_list[spec.m:]:
        acc -= special.loggamma(1.0 - b + s)
    for a in denom_a:
        acc -= special.loggamma(a - s)
    for b, k in pairs:
        for i in range(k):
            acc -= np.log(b + i - s)
    return acc


def _log_abs_kernel_terms(spec: MeijerGSpec, x: float) -> List[float]:
    numer_b, denom_a, pairs = _kernel_parts(spec)
    terms = [float(special.gammaln(b - x)) for b in numer_b]
    terms.extend(float(special.gammaln(1.0 - a + x)) for a in spec.a_list[:spec.n])
    terms.extend(-float(special.gammaln(1.0 - b + x)) for b in spec.b_list[spec.m:])
    terms.extend(-float(special.gammaln(a - x)) for a in denom_a)
    for b, k in pairs:
        terms.extend(-math.log(abs(b + i - x)) if b + i != x else math.inf for i in range(k))
    return terms


def _log_abs_kernel_real(spec: MeijerGSpec, x: float) -> float:
    return float(sum(_log_abs_kernel_terms(spec, x)))


@lru_cache(maxsize=8)
def _legendre_rule(n: int) -> Tuple[np.ndarray, np.ndarray]:
    return special.roots_legendre(n)


def _gauss_panel(func: Callable[[np.ndarray], np.ndarray], lo: float, hi: float, n: int) -> Tuple[float, float]:
    nodes, weights = _legendre_rule(n)
    half = 0.5 * (hi - lo)
    values = func(half * nodes + 0.5 * (hi + lo))
    return half * float(np.dot(weights, values)), half * float(np.dot(weights, np.abs(values)))


def _integrate_interval(func, lo: float, hi: float, abs_tol: float, budget: int, rounding: float = 0.0) \
        -> Tuple[float, float, float, int]:
    """
    Adaptive Gauss-Legendre on ``[lo, hi]``, a panel is accepted when its 24- and 48-point rules
    agree, otherwise it is bisected. Rules that agree to ``rounding`` times the panel mass are
    accepted as well, the integrand carries no more digits than that.

    :return: ``(value, error, absolute mass, nodes used)``.
    """
    total, error, mass, nodes = 0.0, 0.0, 0.0, 0
    stack = [(lo, hi, abs_tol)]
    while stack:
        a, b, tol = stack.pop()
        coarse, _ = _gauss_panel(func, a, b, _COARSE_NODES)
        fine, fine_mass = _gauss_panel(func, a, b, _FINE_NODES)
        nodes += _COARSE_NODES + _FINE_NODES
        if nodes > budget:
            raise ConvergenceError(f'Quadrature budget exhausted on [{lo!r}, {hi!r}].',
                                   partial_value=total + fine, error_estimate=error + abs(fine - coarse))

        diff = abs(fine - coarse)
        if diff <= max(tol, (16 * _EPS + rounding) * fine_mass) or (b - a) < 1e-9 * max(1.0, abs(a)):
            total += fine
            error += diff
            mass += fine_mass
        else:
            mid = 0.5 * (a + b)
            stack.append((mid, b, 0.5 * tol))
            stack.append((a, mid, 0.5 * tol))

    return total, error, mass, nodes


def _left_poles_above(spec: MeijerGSpec, c: float) -> List[Tuple[int, int, float]]:
    retval = []
    for k, a in enumerate(spec.a_list[:spec.n]):
        ell = 0
        while a - 1.0 - ell > c:
            retval.append((k, ell, a - 1.0 - ell))
            ell += 1
    return retval


def _all_poles_near(spec: MeijerGSpec, c: float, radius: float) -> bool:
    for b in spec.b_list[:spec.m]:
        if b - c < radius and _integer_distance(b - c) < radius:
            return True
    for a in spec.a_list[:spec.n]:
        if c - (a - 1.0) < radius and _integer_distance(a - 1.0 - c) < radius:
            return True
    return False


def _saddle(spec: MeijerGSpec, log_z: float, lo: float, hi: float) -> float:
    def _objective(x):
        v = _log_abs_kernel_real(spec, x) + x * log_z
        return v if math.isfinite(v) else 1e300

    try:
        result = optimize.minimize_scalar(_objective, bounds=(lo, hi), method='bounded',
                                          options={'xatol': 1e-4})
    except (ValueError, FloatingPointError):  # pragma: no cover
        return 0.5 * (lo + hi)
    return float(result.x) if np.isfinite(result.x) else 0.5 * (lo + hi)


def _place_contour(spec: MeijerGSpec, z: float, log_z: float, opts: GEvalOptions) \
        -> Tuple[float, List[Tuple[int, int, float]]]:
    right = min(spec.b_list[:spec.m]) if spec.m else math.inf
    left = max(a - 1.0 for a in spec.a_list[:spec.n]) if spec.n else -math.inf
    gap = right - left

    if gap >= opts.contour_gap_min:
        margin = min(0.25 * gap, 1e-2)
        width = _SEARCH_WIDTH + 2.0 * max(1.0, z) ** (1.0 / max(1, abs(spec.q - spec.p)))
        lo = left + margin if math.isfinite(left) else right - margin - width
        hi = right - margin if math.isfinite(right) else left + margin + width
        return _saddle(spec, log_z, lo, hi), []

    # strip too narrow (or families interleaved), go left of the right family
    # and add back the residues of every left pole passed over
    base = right if math.isfinite(right) else left
    for shift in (0.5, 0.25, 0.75, 0.375, 0.625, 0.125, 0.875):
        c = base - shift
        if not _all_poles_near(spec, c, opts.contour_gap_min):
            break
    else:  # pragma: no cover
        raise ConvergenceError(f'No admissible contour abscissa found for {spec}.')

    crossed = _left_poles_above(spec, c)
    locations = sorted(pole for _, _, pole in crossed)
    for x, y in zip(locations, locations[1:]):
        if y - x < opts.pole_separation_min:
            raise ConvergenceError(f'Crossed left poles of {spec} are not simple near {x!r}.')
    return c, crossed


def _crossed_residue(spec: MeijerGSpec, k: int, ell: int, pole: float, log_z: float) -> float:
    numer = [b - pole for b in spec.b_list[:spec.m]] + \
            [1.0 - a + pole for i, a in enumerate(spec.a_list[:spec.n]) if i != k]
    denom = [1.0 - b + pole for b in spec.b_list[spec.m:]] + [a - pole for a in spec.a_list[spec.n:]]
    log_abs, sign = gamma_ratio(numer, denom)
    if sign == 0:
        return 0.0
    sign *= -1 if ell % 2 else 1
    return sign * math.exp(log_abs - float(special.gammaln(ell + 1)) + pole * log_z)


def _contour_record(spec: MeijerGSpec, z: float, opts: GEvalOptions) -> GEvalRecord:
    rate = spec.balance
    if rate <= 0:
        raise ConvergenceError(f'Contour integral of {spec} does not converge, '
                               f'm + n should exceed (p + q) / 2.')

    log_z = math.log(z)
    c, crossed = _place_contour(spec, z, log_z, opts)
    residues = [_crossed_residue(spec, k, ell, pole, log_z) for k, ell, pole in crossed]

    def _integrand(y):
        s = c + 1j * y
        return np.exp(_log_kernel(spec, s) + s * log_z).real

    def _log_envelope(y):
        return float(_log_kernel(spec, np.asarray([c + 1j * y])).real[0]) + c * log_z

    distances = [b - c for b in spec.b_list[:spec.m]] + [abs(c - a + 1.0) for a in spec.a_list[:spec.n]]
    width = min(max(min(distances), 0.05), 1.0)
    # relative rounding level of the integrand
    magnitude = sum(abs(x) for x in _log_abs_kernel_terms(spec, c)) + abs(c * log_z)
    rounding = _EPS * magnitude if math.isfinite(magnitude) else 0.0

    total, error, mass, nodes = 0.0, 0.0, 0.0, 0
    lo = 0.0
    while True:
        hi = lo + width
        scale = max(abs(total), abs(_gauss_panel(_integrand, lo, hi, _FINE_NODES)[0]))
        value, err, part_mass, used = _integrate_interval(
            _integrand, lo, hi, 0.1 * opts.rel_tol * scale, opts.max_quadrature_nodes - nodes, rounding)
        total, error, mass, nodes = total + value, error + err, mass + part_mass, nodes + used
        lo = hi

        step = 1e-3 * max(1.0, lo)
        level = _log_envelope(lo)
        decay = min((_log_envelope(lo - step) - level) / step, math.pi * rate)
        if level > 700 or decay <= 0:
            tail = math.inf
        else:
            tail = math.exp(level) / decay
        if lo >= _MIN_SPAN and tail <= max(0.1 * opts.rel_tol * abs(total), _EPS * 1e-1 * mass):
            break
        if lo > _MAX_SPAN:
            raise ConvergenceError(f'Tail estimate of {spec} stalls at {tail!r}.',
                                   partial_value=total / math.pi + sum(residues),
                                   error_estimate=(error + tail) / math.pi)
        width = min(2.0 * width, _MAX_PANEL_WIDTH)

    value = total / math.pi + sum(residues)
    abs_error = (error + tail + (16 * _EPS + rounding) * mass) / math.pi + 16 * _EPS * sum(abs(r) for r in residues)
    return GEvalRecord(
        spec=spec, z=z, method='contour', value=value, abs_error=abs_error,
        abscissa=c, nodes=nodes, tail_estimate=tail / math.pi, crossed_residues=len(crossed),
    )


def _check_separation(values, separation: float):
    for i, x in enumerate(values):
        for y in values[i + 1:]:
            if _integer_distance(x - y) < separation:
                raise PoleCollisionError(f'Residue poles at {x!r} and {y!r} are closer than {separation!r}.',
                                         location=(x, y))


def _series_applicable(spec: MeijerGSpec, z: float) -> bool:
    return spec.m >= 1 and (spec.p < spec.q or (spec.p == spec.q and z < 1.0))


def _residue_family(spec: MeijerGSpec, h: int, log_z: float, opts: GEvalOptions) \
        -> Tuple[float, float, int]:
    bh = spec.b_list[h]
    others = [b for j, b in enumerate(spec.b_list[:spec.m]) if j != h]
    total, abs_sum, start = 0.0, 0.0, 0
    while True:
        ells = np.arange(start, start + _SERIES_BLOCK, dtype=float)
        poles = bh + ells
        log_abs = -special.gammaln(ells + 1.0) + poles * log_z
        sign = np.where(ells % 2 == 0, 1.0, -1.0)
        for b in others:
            log_abs += special.gammaln(b - poles)
            sign *= special.gammasgn(b - poles)
        for a in spec.a_list[:spec.n]:
            log_abs += special.gammaln(1.0 - a + poles)
            sign *= special.gammasgn(1.0 - a + poles)
        for b in spec.b_list[spec.m:]:
            log_abs -= special.gammaln(1.0 - b + poles)
            sign *= special.gammasgn(1.0 - b + poles)
        for a in spec.a_list[spec.n:]:
            log_abs -= special.gammaln(a - poles)
            sign *= special.gammasgn(a - poles)

        if np.any(log_abs > 700):
            raise ConvergenceError(f'Residue terms of {spec} overflow, argument too large for the series.')
        with np.errstate(invalid='ignore'):
            terms = np.where(np.isfinite(log_abs), sign * np.exp(log_abs), 0.0)
        terms = np.nan_to_num(terms, nan=0.0)

        total += float(np.sum(terms))
        abs_sum += float(np.sum(np.abs(terms)))
        start += _SERIES_BLOCK

        block_size = float(np.max(np.abs(terms)))
        decreasing = abs(terms[-1]) <= abs(terms[0])
        past_peak = spec.q == spec.p or start ** (spec.q - spec.p) > 2.0 * math.exp(log_z)
        if decreasing and past_peak and block_size <= 0.1 * opts.rel_tol * abs(total):
            return total, abs_sum + block_size, start
        if decreasing and past_peak and abs_sum == 0.0:
            return total, 0.0, start
        if start >= opts.max_series_terms:
            raise ConvergenceError(f'Residue series of {spec} not converged after '
                                   f'{plural_word(start, "term")}.', partial_value=total,
                                   error_estimate=block_size)


def _residue_record(spec: MeijerGSpec, z: float, opts: GEvalOptions,
                    separation_min: Optional[float] = None) -> GEvalRecord:
    if not _series_applicable(spec, z):
        raise ConvergenceError(f'Residue series of {spec} does not converge at z={z!r}.')
    _check_separation(spec.b_list[:spec.m], separation_min or opts.pole_separation_min)

    log_z = math.log(z)
    value, abs_sum, terms = 0.0, 0.0, 0
    for h in range(spec.m):
        family_value, family_abs, family_terms = _residue_family(spec, h, log_z, opts)
        value += family_value
        abs_sum += family_abs
        terms += family_terms

    return GEvalRecord(
        spec=spec, z=z, method='residue_series', value=value,
        abs_error=max(0.1 * opts.rel_tol * abs(value), 0.0) + 8 * _EPS * abs_sum * math.sqrt(terms),
        terms=terms,
    )


def _nudged(spec: MeijerGSpec, opts: GEvalOptions) -> MeijerGSpec:
    steps = [0]
    for i in range(1, 2 * spec.m + 1):
        steps.extend([i, -i])

    b_list = list(spec.b_list)
    for h in range(spec.m):
        for step in steps:
            candidate = spec.b_list[h] + step * opts.nudge
            if all(_integer_distance(candidate - b_list[j]) >= 0.25 * opts.nudge for j in range(h)):
                b_list[h] = candidate
                break
    return replace(spec, b_list=tuple(b_list))


def _cross_check(record: GEvalRecord, opts: GEvalOptions):
    spec, z = record.spec, record.z
    if not _series_applicable(spec, z):
        return

    target, nudge = spec, None
    try:
        _check_separation(spec.b_list[:spec.m], opts.pole_separation_min)
    except PoleCollisionError:
        target, nudge = _nudged(spec, opts), opts.nudge

    try:
        series = _residue_record(target, z, opts, separation_min=0.25 * opts.nudge if nudge else None)
    except (ConvergenceError, PoleCollisionError) as err:
        logging.debug(f'Residue cross-check of {spec} at z={z!r} skipped: {err}')
        return

    scale = max(abs(record.value), abs(series.value), 1e-300)
    diff = abs(series.value - record.value)
    record.nudge = nudge
    record.cross_check = diff / scale
    allowed = record.abs_error + series.abs_error + 1e-8 * scale
    if diff > allowed:
        logging.warning(f'Contour and residue values of {spec} at z={z!r} disagree: '
                        f'{record.value!r} vs {series.value!r}'
                        f'{f" (nudged by {nudge!r})" if nudge else ""}.')


def meijer_g_eval(spec: MeijerGSpec, z: float, opts: Optional[GEvalOptions] = None) -> GEvalRecord:
    """
    Evaluate :math:`G^{m,n}_{p,q}(z)` for real ``z > 0`` and return value plus diagnostics.

    :param spec: Orders and parameters.
    :param z: Positive argument.
    :param opts: Evaluation options, defaults to :class:`GEvalOptions`.
    :raises ConvergenceError: When the contour tail or residue series fails to converge.
    :raises PoleCollisionError: Only with ``method='residue_series'``.
    """
    opts = opts or GEvalOptions()
    z = _check_argument(z)
    if opts.method == 'residue_series':
        record = _residue_record(spec, z, opts)
    else:
        record = _contour_record(spec, z, opts)
        if opts.method == 'auto':
            _cross_check(record, opts)

    logging.debug(f'{spec} at z={z!r}: {record.value!r} +/- {record.abs_error!r} by {record.method}, '
                  f'abscissa {record.abscissa!r}, {plural_word(record.nodes, "node")}, '
                  f'{plural_word(record.terms, "term")}, tail {record.tail_estimate!r}, '
                  f'{plural_word(record.crossed_residues, "crossed residue")}, nudge {record.nudge!r}')
    return record


def meijer_g(spec: MeijerGSpec, z: float, opts: Optional[GEvalOptions] = None) -> float:
    """
    Value of :math:`G^{m,n}_{p,q}(z)`, see :func:`meijer_g_eval`.

    Examples::
        >>> round(meijer_g(MeijerGSpec.of(1, 0, [], [0.0]), 1.0), 7)  # exp(-z)
        0.3678794
    """
    return meijer_g_eval(spec, z, opts).value


def meijer_g_residue_series(spec: MeijerGSpec, z: float, opts: Optional[GEvalOptions] = None) -> float:
    """
    Slater residue sum over the poles :math:`s = b_h + \\ell` of :math:`\\Gamma(b_h - s)`, ``h <= m``.

    :raises PoleCollisionError: When two of ``b_1 .. b_m`` differ by an integer up to
        ``opts.pole_separation_min``.
    """
    opts = opts or GEvalOptions()
    return _residue_record(spec, _check_argument(z), opts).value


def _check_family_overlap(spec: MeijerGSpec, h: int, pole: float, separation: float):
    for j, b in enumerate(spec.b_list[:spec.m]):
        if j != h and pole - b > -separation and _integer_distance(pole - b) < separation:
            raise PoleCollisionError(f'Residue poles at {pole!r} and {b!r} of {spec} coincide.', location=(pole, b))


def meijer_g_leading_residues(spec: MeijerGSpec, z: float, opts: Optional[GEvalOptions] = None) -> float:
    """
    Dominant part of the small-``z`` expansion: every residue at :math:`s = b_h + \\ell` whose power of
    ``z`` lies below the largest leading power :math:`\\max_h b_h`, the leading (``l = 0``) residues
    themselves included::

        sum_h sum_l (-1)^l / l! z^{b_h + l} prod_{j != h} Gamma(b_j - b_h - l) prod Gamma(1 - a_k + b_h + l)
              / (prod_{j>m} Gamma(1 - b_j + b_h + l) prod_{k>n} Gamma(a_k - b_h - l))

    :raises PoleCollisionError: When one of the kept poles meets a pole of another family.
    """
    opts = opts or GEvalOptions()
    z = _check_argument(z)
    if spec.m < 1:
        raise DomainError(f'Leading residues need m >= 1, but {spec} found.')

    bm = spec.b_list[:spec.m]
    cap = max(bm)
    log_z = math.log(z)
    total = 0.0
    for h, bh in enumerate(bm):
        others = [b for j, b in enumerate(bm) if j != h]
        previous = math.inf
        for ell in range(opts.max_series_terms):
            pole = bh + ell
            if ell > 0 and pole >= cap:
                break
            _check_family_overlap(spec, h, pole, opts.pole_separation_min)
            # Gamma(a_k - s) of the denominator stays on its poles from here on
            if any(is_nonpositive_integer(a - pole, 64 * _EPS * max(1.0, abs(a))) for a in spec.a_list[spec.n:]):
                break

            numer = [b - pole for b in others] + [1.0 - a + pole for a in spec.a_list[:spec.n]]
            denom = [1.0 - b + pole for b in spec.b_list[spec.m:]] + [a - pole for a in spec.a_list[spec.n:]]
            log_abs, sign = gamma_ratio(numer, denom)
            term = 0.0
            if sign:
                sign *= -1 if ell % 2 else 1
                term = sign * math.exp(log_abs - float(special.gammaln(ell + 1)) + pole * log_z)
            total += term
            if ell > 0 and term != 0.0 and abs(term) <= min(previous, 0.1 * opts.rel_tol * abs(total)):
                break
            if term != 0.0:
                previous = abs(term)
        else:
            raise ConvergenceError(f'Leading residues of {spec} not settled after '
                                   f'{plural_word(opts.max_series_terms, "term")}.', partial_value=total)
    return total


def meijer_g_derivative_spec(spec: MeijerGSpec) -> MeijerGSpec:
    """
    Spec of :math:`z \\frac{d}{dz} G`, which is :math:`G^{m,n+1}_{p+1,q+1}(z | 0, a; b, 1)`.
    """
    return MeijerGSpec(spec.m, spec.n + 1, spec.p + 1, spec.q + 1,
                       (0.0,) + spec.a_list, spec.b_list + (1.0,))
