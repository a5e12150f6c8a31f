import math

import numpy as np
import pytest
from scipy import integrate, special

from linkmix.endtoend import mellin_exp_g_integral, mellin_exp_g_integral_spec, RelayKernel
from linkmix.specfun import MeijerGSpec, DomainError
from .conftest import make_fso


def _direct(alpha, sigma, ratio, log_func):
    # integral over y = ln(x) of x^(-alpha) exp(-sigma / x) exp(log_func(ln(x^ratio)))
    def _integrand(y):
        if -y > 700:
            return 0.0
        log_value = -alpha * y - sigma * math.exp(-y) + log_func(ratio * y)
        return math.exp(log_value) if log_value > -700 else 0.0

    lower, _ = integrate.quad(_integrand, -np.inf, 0.0, epsabs=0.0, epsrel=1e-12, limit=400)
    upper, _ = integrate.quad(_integrand, 0.0, np.inf, epsabs=0.0, epsrel=1e-12, limit=400)
    return lower + upper


@pytest.mark.unittest
class TestEndtoendIntegral:
    @pytest.mark.parametrize(['alpha', 'sigma', 'omega'], [
        (0.0, 1.0, 1.0),
        (0.5, 2.0, 0.3),
        (2.0, 0.4, 3.0),
        (-1.3, 1.5, 0.7),
    ])
    def test_bessel_identity(self, alpha, sigma, omega):
        spec = MeijerGSpec.of(1, 0, [], [0.0])
        expected = 2 * (omega / sigma) ** (alpha / 2) * special.kv(alpha, 2 * math.sqrt(sigma * omega))
        actual = mellin_exp_g_integral(alpha, sigma, 1, 1, spec, omega)
        assert actual == pytest.approx(expected, rel=1e-10)
        direct = _direct(alpha, sigma, 1.0, lambda log_z: -omega * math.exp(min(log_z, 700.0)))
        assert actual == pytest.approx(direct, rel=1e-8)

    def test_enlarged_orders(self):
        spec = MeijerGSpec.of(3, 0, [2.21], [1.21, 20.0, 19.0])
        enlarged, _, _ = mellin_exp_g_integral_spec(1.0, 2.0, 1, 2, spec)
        assert enlarged.orders == (7, 0, 2, 7)
        assert enlarged.b_list[0] == 1.0
        enlarged, _, _ = mellin_exp_g_integral_spec(1.0, 2.0, 3, 2, spec)
        assert enlarged.orders == (9, 0, 2, 9)
        assert enlarged.b_list[:3] == pytest.approx((1 / 3, 2 / 3, 1.0))

    @pytest.mark.parametrize(['t', 'j'], [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1)])
    def test_relay_kernel_instance(self, t, j):
        fso = make_fso(t=t)
        rate, c, gamma = 0.3, 1.0, 1.5
        sigma = rate * c * gamma
        spec = MeijerGSpec.of(3, 0, [fso.xi2 + 1.0], [fso.xi2, fso.a, fso.b])
        omega = fso.dab / fso.kappa_t ** (1.0 / t)
        integral = mellin_exp_g_integral(float(j), sigma, 1, t, spec, omega)
        log_scale = j * math.log(sigma) + math.log(fso.xi2) - math.log(t) \
            - special.gammaln(fso.a) - special.gammaln(fso.b)
        expected, _ = RelayKernel(fso, c).cdf_term(rate, gamma, j)
        assert math.exp(log_scale) * integral == pytest.approx(expected, rel=1e-8)

    def test_random_against_quadrature(self):
        rng = np.random.default_rng(20240601)
        orders = [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)]
        for i in range(20):
            u, v = orders[i % len(orders)]
            ratio = u / v
            a, b = rng.uniform(0.1, 0.9), rng.uniform(0.05, 0.45)
            alpha = ratio * (a - 1.0) + rng.uniform(0.3, 2.0)
            sigma, omega = rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0)
            spec = MeijerGSpec.of(1, 1, [a], [b])

            def _log_g(log_z):
                log_wz = math.log(omega) + log_z
                return special.gammaln(1 - a + b) + b * log_wz + (a - b - 1) * np.logaddexp(0.0, log_wz)

            expected = _direct(alpha, sigma, ratio, _log_g)
            actual = mellin_exp_g_integral(alpha, sigma, u, v, spec, omega)
            assert actual == pytest.approx(expected, rel=1e-6), (u, v, a, b, alpha, sigma, omega)

    def test_mellin_limit(self):
        # alpha = -s with sigma -> 0 leaves the Mellin transform of exp(-x), which is Gamma(s)
        spec = MeijerGSpec.of(1, 0, [], [0.0])
        for s in (0.5, 1.0, 2.5):
            assert mellin_exp_g_integral(-s, 1e-12, 1, 1, spec) == pytest.approx(math.gamma(s), rel=1e-5)

    @pytest.mark.parametrize(['args'], [
        ((1.0, 1.0, 2, 4),),
        ((1.0, 0.0, 1, 1),),
        ((1.0, -1.0, 1, 1),),
        ((1.0, 1.0, 0, 1),),
        ((1.0, 1.0, 1.5, 1),),
    ])
    def test_invalid(self, args):
        with pytest.raises(DomainError):
            mellin_exp_g_integral(*args, MeijerGSpec.of(1, 0, [], [0.0]))

    def test_divergent(self):
        spec = MeijerGSpec.of(1, 1, [0.5], [0.0])
        with pytest.raises(DomainError):
            mellin_exp_g_integral(-1.0, 1.0, 1, 1, spec)
        assert mellin_exp_g_integral(-0.4, 1.0, 1, 1, spec) > 0
        with pytest.raises(DomainError):
            mellin_exp_g_integral(1.0, 1.0, 1, 1, spec, omega=0.0)
