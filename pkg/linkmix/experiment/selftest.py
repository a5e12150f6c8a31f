"""
Overview:
    Full-size acceptance suites, run by ``linkmix selftest``.

    Every check returns a :class:`CheckResult`, failing checks never raise.
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Callable, Dict, Optional, Iterable

import numpy as np
from hbutils.string import plural_word
from scipy import integrate, special, stats
from scipy.interpolate import PchipInterpolator
from tqdm import tqdm

from .presets import preset_config
from .sweep import rf_cdf_function
from ..channels import EtaMuParams, KappaMuParams, FsoChannelParams, etamu_cdf, kappamu_cdf, gg_pdf_reference
from ..endtoend import SystemConfig, ModulationScheme, outage, outage_asymptotic, ber_mixed, cdf_mixed, \
    pdf_mixed, cdf_kappamu_gg, cdf_nakagami_gg, cdf_rayleigh_gg, mellin_exp_g_integral
from ..oracles import McConfig, mc_outage, quad_cdf, sample_etamu, sample_kappamu, sample_gg_pointing
from ..specfun import MeijerGSpec, SpecFunError, meijer_g
from ..utils import db_to_linear

_LINK = dict(L=4000.0, D=0.01, wavelength=1550e-9)

#: FSO SNR from which ten Poisson terms reach a ``1e-6`` tail bound on the κ-μ figure grid.
TEN_TERM_SNR_DB = 40.0


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one acceptance suite.

    :param name: Suite name.
    :param passed: Whether every case passed.
    :param detail: Worst case or first failure, human readable.
    """
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class SelftestContext:
    mc: McConfig
    quick: bool = False


def _fso(cn2: float, t: int, gamma_bar2_db: float, xi: float = 1.1) -> FsoChannelParams:
    return FsoChannelParams(cn2=cn2, xi=xi, t=t, gamma_bar2=db_to_linear(gamma_bar2_db), **_LINK)


def check_triple_agreement(ctx: SelftestContext) -> CheckResult:
    """
    Closed-form outage against the quadrature oracle (``1e-5`` absolute) and Monte-Carlo (3 SE).
    """
    rfs = [EtaMuParams(0.5, 3, 10.0), KappaMuParams(3.0, 2, 10.0), KappaMuParams(1.5, 1, 10.0)]
    cn2s, ts, snrs = [1e-15, 9e-15, 3e-14], [1, 2], [0.0, 10.0, 20.0, 30.0, 40.0]
    if ctx.quick:
        rfs, cn2s, ts, snrs = rfs[:2], cn2s[:1], [1], [0.0, 20.0]
    sys = SystemConfig()
    cases = [(rf, cn2, t, snr) for rf in rfs for cn2 in cn2s for t in ts for snr in snrs]

    worst_quad, worst_mc, failures = 0.0, 0.0, []
    for rf, cn2, t, snr in tqdm(cases, desc='triple agreement'):
        fso = _fso(cn2, t, snr)
        closed = outage(rf, fso, sys)
        quad = quad_cdf(rf_cdf_function(rf), fso, sys, sys.gamma_th)
        mc = mc_outage(rf, fso, sys, ctx.mc)
        quad_gap = abs(closed.value - quad.value)
        mc_gap = abs(closed.value - mc.value) / max(mc.std_error, 1.0 / mc.n)
        worst_quad, worst_mc = max(worst_quad, quad_gap), max(worst_mc, mc_gap)
        if quad_gap > 1e-5 + closed.abs_error_est + quad.std_error or mc_gap > 3.0:
            failures.append(f'{rf!r}, cn2={cn2!r}, t={t}, {snr:g} dB: closed={closed.value!r}, '
                            f'quad={quad.value!r}, mc={mc.value!r}+/-{mc.std_error!r}')

    detail = f'{plural_word(len(cases), "case")}, worst quadrature gap {worst_quad:.3g}, ' \
             f'worst Monte-Carlo gap {worst_mc:.2f} SE'
    return CheckResult('triple_agreement', not failures, failures[0] if failures else detail)


def check_truncation(ctx: SelftestContext) -> CheckResult:
    """
    κ-μ truncation on the figure grid: a ``1e-6`` tail bound at every point that really covers the
    dropped terms, and ten Poisson terms at most from :data:`TEN_TERM_SNR_DB` up.
    """
    cfg = preset_config('fig3')
    worst_terms, worst_tail, failures = 0, 0.0, []
    for curve in cfg.curves:
        for snr, linear in cfg.axis.points:
            if ctx.quick and snr % 10:
                continue
            rf, fso, sys = curve.build(cfg.axis.name, linear, cfg.system)
            result = cdf_kappamu_gg(rf, fso, sys, sys.gamma_th, 1e-6)
            tight = cdf_kappamu_gg(rf, fso, sys, sys.gamma_th, 1e-11)
            tail = result.extra['tail_bound']
            worst_tail = max(worst_tail, tail)
            if snr >= TEN_TERM_SNR_DB:
                worst_terms = max(worst_terms, result.terms_used)
            if tail > 1e-6 or abs(result.value - tight.value) > tail + 1e-9:
                failures.append(f'{curve.label} at {snr:g} dB: tail bound {tail!r}, '
                                f'dropped terms {result.value - tight.value!r}')
    if worst_terms > 10:
        failures.append(f'{plural_word(worst_terms, "term")} needed above {TEN_TERM_SNR_DB:g} dB')
    detail = f'at most {plural_word(worst_terms, "term")} from {TEN_TERM_SNR_DB:g} dB, ' \
             f'worst tail bound {worst_tail:.3g}'
    return CheckResult('truncation', not failures, failures[0] if failures else detail)


def check_asymptote(ctx: SelftestContext) -> CheckResult:
    """
    High-SNR outage within 5% at 60 dB, with a shrinking deviation from 40 dB to 80 dB.
    """
    cfg = preset_config('fig2')
    details, passed = [], True
    for curve in cfg.curves:
        deviations = []
        for snr in (40.0, 50.0, 60.0, 70.0, 80.0):
            rf, fso, sys = curve.build(cfg.axis.name, db_to_linear(snr), cfg.system)
            exact = outage(rf, fso, sys).value
            deviations.append(abs(outage_asymptotic(rf, fso, sys) - exact) / exact)
        shrinking = all(b <= a for a, b in zip(deviations, deviations[1:]))
        passed = passed and deviations[2] < 0.05 and shrinking
        details.append(f'{curve.label}: {deviations[2]:.3%} at 60 dB')
    return CheckResult('asymptote', passed, ', '.join(details))


def _strictly_decreasing(results) -> bool:
    return all(b.value + b.abs_error_est < a.value - a.abs_error_est for a, b in zip(results, results[1:]))


def check_monotonicity(ctx: SelftestContext) -> CheckResult:
    """
    Outage decreasing in the FSO SNR and in the fading parameters, CBFSK below NBFSK.
    """
    failures = []
    fig2 = preset_config('fig2')
    by_curve = {}
    for curve in fig2.curves:
        results = []
        for snr in range(0, 55, 5):
            rf, fso, sys = curve.build(fig2.axis.name, db_to_linear(snr), fig2.system)
            results.append(outage(rf, fso, sys))
        by_curve[curve.label] = results
        if not _strictly_decreasing(results):
            failures.append(f'outage of {curve.label} is not decreasing in gamma_bar2')
    # curves are ordered by growing eta, then growing mu
    for index in range(len(by_curve[fig2.curves[0].label])):
        column = [by_curve[curve.label][index] for curve in fig2.curves]
        if not _strictly_decreasing(column):
            failures.append(f'outage is not decreasing in eta and mu at point {index}')
            break

    fig5 = preset_config('fig5')
    cbfsk, nbfsk = ModulationScheme.named('CBFSK'), ModulationScheme.named('NBFSK')
    for curve in fig5.curves:
        for _, linear in fig5.axis.points:
            rf, fso, sys = curve.build(fig5.axis.name, linear, fig5.system)
            coherent, noncoherent = ber_mixed(rf, fso, sys, cbfsk), ber_mixed(rf, fso, sys, nbfsk)
            if not coherent.value + coherent.abs_error_est < noncoherent.value - noncoherent.abs_error_est:
                failures.append(f'CBFSK is not below NBFSK for {curve.label} at gamma_bar1={linear!r}')
                break

    return CheckResult('monotonicity', not failures, failures[0] if failures else 'all orderings hold')


def check_reductions(ctx: SelftestContext) -> CheckResult:
    """
    κ-μ with vanishing κ against the Nakagami-m and Rayleigh forms.
    """
    sys, worst = SystemConfig(), 0.0
    for t in (1, 2):
        fso = _fso(9e-15, t, 10.0)
        for m in (1, 2, 3):
            for gamma in (0.5, 2.0):
                reduced = cdf_kappamu_gg(KappaMuParams(1e-9, m, 10.0), fso, sys, gamma).value
                worst = max(worst, abs(reduced / cdf_nakagami_gg(m, 10.0, fso, sys, gamma).value - 1.0))
                if m == 1:
                    worst = max(worst, abs(reduced / cdf_rayleigh_gg(10.0, fso, sys, gamma).value - 1.0))
    return CheckResult('reductions', worst <= 1e-8, f'worst relative gap {worst:.3g}')


def check_kernel_identities(ctx: SelftestContext) -> CheckResult:
    """
    Elementary Meijer G cases, the integral closed form against Bessel-K, and the PDF against a
    central difference of the CDF.
    """
    worst = 0.0
    for z in (0.1, 1.0, 5.0):
        worst = max(worst, abs(meijer_g(MeijerGSpec.of(1, 0, [], [0.0]), z) / math.exp(-z) - 1.0))
        for nu in (0.0, 0.5, 1.3):
            expected = 2.0 * special.kv(nu, 2.0 * math.sqrt(z))
            worst = max(worst, abs(meijer_g(MeijerGSpec.of(2, 0, [], [nu / 2, -nu / 2]), z) / expected - 1.0))
    for alpha, sigma, omega in ((0.0, 1.0, 1.0), (0.5, 2.0, 0.3), (2.0, 0.4, 3.0)):
        expected = 2.0 * (omega / sigma) ** (alpha / 2) * special.kv(alpha, 2.0 * math.sqrt(sigma * omega))
        actual = mellin_exp_g_integral(alpha, sigma, 1, 1, MeijerGSpec.of(1, 0, [], [0.0]), omega)
        worst = max(worst, abs(actual / expected - 1.0))
    passed = worst <= 1e-10

    rf, fso, sys = EtaMuParams(0.5, 3, 10.0), _fso(1e-15, 1, 10.0), SystemConfig()
    gap = 0.0
    for gamma in (0.5, 2.0, 8.0):
        h = gamma * 1e-4
        slope = (cdf_mixed(rf, fso, sys, gamma + h).value - cdf_mixed(rf, fso, sys, gamma - h).value) / (2 * h)
        density = pdf_mixed(rf, fso, sys, gamma).value
        gap = max(gap, abs(slope - density) / max(1e-6, 1e-4 * density))
    passed = passed and gap <= 1.0
    return CheckResult('kernel_identities', passed,
                       f'worst relative gap {worst:.3g}, derivative gap {gap:.3g} of its tolerance')


def _direct_exp_g_integral(alpha: float, sigma: float, ratio: float, log_g: Callable[[float], float]) -> float:
    # integral of x^(-alpha - 1) exp(-sigma / x) G(x^ratio) dx over y = ln(x), G given in log domain
    def _integrand(y):
        if -y > 700:
            return 0.0
        log_value = -alpha * y - sigma * math.exp(-y) + log_g(ratio * y)
        return math.exp(log_value) if log_value > -700 else 0.0

    lower, _ = integrate.quad(_integrand, -np.inf, 0.0, epsabs=0.0, epsrel=1e-12, limit=400)
    upper, _ = integrate.quad(_integrand, 0.0, np.inf, epsabs=0.0, epsrel=1e-12, limit=400)
    return lower + upper


def _direct_relay_kernel(fso: FsoChannelParams, sigma: float, j: int) -> float:
    # E[w^j exp(-w)], w = sigma / g2, with the Bessel-K reference density of the FSO hop
    def _integrand(u):
        y = math.exp(u)
        w = sigma / y
        return gg_pdf_reference(fso, y) * y * w ** j * math.exp(-w)

    center = math.log(fso.kappa_t)
    value, _ = integrate.quad(_integrand, center - 45, center + 12, points=[center - 3, center, center + 3],
                              epsabs=1e-13, epsrel=1e-10, limit=400)
    return value


def check_integral_identity(ctx: SelftestContext) -> CheckResult:
    """
    Closed form of the power-exponential-Meijer G integral against direct quadrature, ``1e-6`` relative
    on randomized convergent sets. The ``t = 1`` and ``t = 2`` relay kernel instances are held to ``1e-5``
    against the Bessel-K reference density.
    """
    rng = np.random.default_rng(ctx.mc.seed)
    orders = [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)]
    worst, failures = 0.0, []
    for i in range(5 if ctx.quick else 20):
        u, v = orders[i % len(orders)]
        a, b = rng.uniform(0.1, 0.9), rng.uniform(0.05, 0.45)
        alpha = (u / v) * (a - 1.0) + rng.uniform(0.3, 2.0)
        sigma, omega = rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0)

        def _log_g(log_z, a=a, b=b, omega=omega):
            # G^{1,1}_{1,1}(w | a; b) = Gamma(1 - a + b) w^b (1 + w)^(a - b - 1)
            log_wz = math.log(omega) + log_z
            return special.gammaln(1 - a + b) + b * log_wz + (a - b - 1) * np.logaddexp(0.0, log_wz)

        expected = _direct_exp_g_integral(alpha, sigma, u / v, _log_g)
        actual = mellin_exp_g_integral(alpha, sigma, u, v, MeijerGSpec.of(1, 1, [a], [b]), omega)
        gap = abs(actual / expected - 1.0)
        worst = max(worst, gap)
        if gap > 1e-6:
            failures.append(f'u={u}, v={v}, a={a!r}, b={b!r}, alpha={alpha!r}: {actual!r} vs {expected!r}')

    for t in (1, 2):
        fso = _fso(1e-15, t, 10.0)
        spec = MeijerGSpec.of(3, 0, [fso.xi2 + 1.0], [fso.xi2, fso.a, fso.b])
        omega = fso.dab / fso.kappa_t ** (1.0 / t)
        for j in (0, 1, 2):
            sigma = 1.5
            log_scale = j * math.log(sigma) + math.log(fso.xi2) - math.log(t) \
                - special.gammaln(fso.a) - special.gammaln(fso.b)
            actual = math.exp(log_scale) * mellin_exp_g_integral(float(j), sigma, 1, t, spec, omega)
            expected = _direct_relay_kernel(fso, sigma, j)
            gap = abs(actual / expected - 1.0)
            worst = max(worst, gap)
            # the reference density carries its own nested quadrature error
            if gap > 1e-5:
                failures.append(f'relay kernel t={t}, j={j}: {actual!r} vs {expected!r}')

    return CheckResult('integral_identity', not failures,
                       failures[0] if failures else f'worst relative gap {worst:.3g}')


def _irradiance_cdf(fso: FsoChannelParams, grid: np.ndarray) -> PchipInterpolator:
    # CDF of the normalised irradiance, xi^2 / (Gamma(a) Gamma(b)) G^{3,1}_{2,4}(a b x | 1, xi^2 + 1; xi^2, a, b, 0)
    spec = MeijerGSpec.of(3, 1, [1.0, fso.xi2 + 1.0], [fso.xi2, fso.a, fso.b, 0.0])
    log_head = math.log(fso.xi2) - special.gammaln(fso.a) - special.gammaln(fso.b)
    values = [math.exp(log_head) * meijer_g(spec, fso.a * fso.b * float(x)) for x in grid]
    return PchipInterpolator(np.log(grid), np.clip(values, 0.0, 1.0))


def check_sampler_ks(ctx: SelftestContext) -> CheckResult:
    """
    Kolmogorov-Smirnov distance of every sampler from its marginal CDF, below the 1% critical value.
    """
    n = min(ctx.mc.n_samples, 100000) if ctx.quick else ctx.mc.n_samples
    critical = 1.63 / math.sqrt(n)
    rng = np.random.Generator(np.random.Philox(ctx.mc.seed))
    distances = {}

    for rf in (EtaMuParams(0.5, 3, 10.0), EtaMuParams(0.9, 1, 10.0)):
        samples = sample_etamu(rf, rng, n)
        distances[repr(rf)] = stats.kstest(samples, lambda x: etamu_cdf(rf, x)).statistic

    for rf in (KappaMuParams(3.0, 2, 10.0), KappaMuParams(1.5, 1, 10.0)):
        # the κ-μ SNR is a scaled noncentral chi-square, checked against the series on a grid
        def _cdf(x, rf=rf):
            return stats.ncx2.cdf(2.0 * rf.rate * np.asarray(x), 2.0 * rf.mu, 2.0 * rf.poisson_mean)

        grid = np.logspace(-3, 2, 60) * rf.gamma_bar1
        series_gap = max(abs(kappamu_cdf(rf, g, tol=1e-10)[0] - float(_cdf(g))) for g in grid)
        if series_gap > 1e-6:
            return CheckResult('sampler_ks', False, f'κ-μ series of {rf!r} off by {series_gap!r}')
        samples = sample_kappamu(rf, rng, n)
        distances[repr(rf)] = stats.kstest(samples, _cdf).statistic

    for t in (1, 2):
        fso = _fso(1e-15, t, 10.0)
        x = fso.irradiance_argument(sample_gg_pointing(fso, rng, n))
        grid = np.logspace(math.log10(x.min()) - 0.1, math.log10(x.max()) + 0.1, 400)
        cdf = _irradiance_cdf(fso, grid)
        distances[f'gamma-gamma t={t}'] = stats.kstest(x, lambda y: np.clip(cdf(np.log(y)), 0.0, 1.0)).statistic

    name, worst = max(distances.items(), key=lambda item: item[1])
    return CheckResult('sampler_ks', worst < critical,
                       f'worst distance {worst:.3g} ({name}), critical {critical:.3g} at '
                       f'{plural_word(n, "sample")}')


def check_reproducibility(ctx: SelftestContext) -> CheckResult:
    """
    Identical Monte-Carlo configurations give bit-identical estimates, whatever the worker count.
    """
    rf, fso, sys = EtaMuParams(0.5, 3, 10.0), _fso(1e-15, 1, 10.0), SystemConfig()
    first = mc_outage(rf, fso, sys, ctx.mc)
    second = mc_outage(rf, fso, sys, McConfig(ctx.mc.seed, ctx.mc.n_samples, n_streams=1))
    return CheckResult('reproducibility', first == second, f'{first!r} vs {second!r}')


SELFTEST_CHECKS: Dict[str, Callable[[SelftestContext], CheckResult]] = {
    'triple_agreement': check_triple_agreement,
    'truncation': check_truncation,
    'asymptote': check_asymptote,
    'monotonicity': check_monotonicity,
    'reductions': check_reductions,
    'kernel_identities': check_kernel_identities,
    'integral_identity': check_integral_identity,
    'sampler_ks': check_sampler_ks,
    'reproducibility': check_reproducibility,
}


def run_selftest(mc: Optional[McConfig] = None, quick: bool = False,
                 names: Optional[Iterable[str]] = None) -> List[CheckResult]:
    """
    Run the acceptance suites.

    :param mc: Monte-Carlo configuration, ``10^6`` samples with seed ``42`` by default.
    :param quick: Shrink the triple-agreement grid.
    :param names: Suites to run, all of :data:`SELFTEST_CHECKS` by default.
    """
    ctx = SelftestContext(mc or McConfig(), quick)
    names = list(names) if names is not None else list(SELFTEST_CHECKS)
    results = []
    for name in names:
        if name not in SELFTEST_CHECKS:
            raise KeyError(f'Unknown selftest suite {name!r}, one of {sorted(SELFTEST_CHECKS)!r} expected.')
        logging.info(f'Running selftest suite {name!r} ...')
        try:
            result = SELFTEST_CHECKS[name](ctx)
        except (SpecFunError, ArithmeticError, ValueError) as err:
            result = CheckResult(name, False, f'{type(err).__name__}: {err}')
        (logging.info if result.passed else logging.error)(
            f'Selftest {name!r} {"passed" if result.passed else "FAILED"}: {result.detail}')
        results.append(result)
    return results
