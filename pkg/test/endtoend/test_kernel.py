import math

import pytest
from scipy import integrate

from linkmix.channels import gg_pdf_reference, gg_pdf_no_pointing_reference
from linkmix.endtoend import RelayKernel, delta_list, relay_kernel_spec, relay_kernel_prefactor, \
    relay_argument_scale
from linkmix.specfun import PoleCollisionError
from .conftest import make_fso


def _direct_kernel(fso, rate, c, gamma, j, pointing=True):
    # E[w^j exp(-w)], w = A c g / g2, averaged with the reference density over ln(g2)
    density = gg_pdf_reference if pointing else gg_pdf_no_pointing_reference
    s = rate * c * gamma

    def _integrand(u):
        y = math.exp(u)
        w = s / y
        return density(fso, y) * y * w ** j * math.exp(-w)

    center = math.log(fso.kappa_t)
    value, _ = integrate.quad(_integrand, center - 45, center + 6, points=[center - 3, center, center + 3],
                              epsabs=1e-13, epsrel=1e-10, limit=400)
    return value


@pytest.mark.unittest
class TestEndtoendKernel:
    def test_delta_list(self):
        assert delta_list(1, 2.5) == [2.5]
        assert delta_list(2, 3.0) == [1.5, 2.0]

    def test_spec_layout(self):
        fso = make_fso()
        spec = relay_kernel_spec(fso, 2)
        assert spec.orders == (4, 0, 1, 4)
        assert spec.b_list == pytest.approx((fso.xi2, fso.a, fso.b, 2.0))
        assert spec.a_list == pytest.approx((fso.xi2 + 1.0,))

        spec = relay_kernel_spec(make_fso(t=2), 0)
        assert spec.orders == (7, 0, 2, 7)
        assert len(spec.b_list) == 3 * 2 + 1

        spec = relay_kernel_spec(make_fso(t=2), 1, pointing=False)
        assert spec.orders == (5, 0, 0, 5)

    def test_prefactor(self):
        fso = make_fso()
        expected = fso.xi2 / (math.gamma(fso.a) * math.gamma(fso.b))
        assert relay_kernel_prefactor(fso) == pytest.approx(expected, rel=1e-12)
        assert relay_kernel_prefactor(fso, pointing=False) == pytest.approx(expected / fso.xi2, rel=1e-12)

        fso = make_fso(t=2)
        expected = fso.xi2 * 2 ** (fso.a + fso.b - 2) / (2 * math.pi * math.gamma(fso.a) * math.gamma(fso.b))
        assert relay_kernel_prefactor(fso) == pytest.approx(expected, rel=1e-10)
        assert relay_kernel_prefactor(fso, pointing=False) == pytest.approx(2 * expected / fso.xi2, rel=1e-10)

    def test_argument_scale(self):
        fso = make_fso()
        assert relay_argument_scale(fso) == pytest.approx(fso.dab / fso.kappa_t)
        assert relay_argument_scale(fso, pointing=False) == pytest.approx(fso.a * fso.b / fso.gamma_bar2)

    @pytest.mark.parametrize(['t'], [(1,), (2,)])
    def test_small_argument(self, t):
        kernel = RelayKernel(make_fso(t=t), 1.0)
        value, error = kernel.cdf_term(1e-15, 1.0, 0)
        assert value == pytest.approx(1.0, abs=1e-6)
        assert error >= 0.0
        value, _ = kernel.cdf_term(1e-15, 1.0, 1)
        assert 0.0 < value < 1e-6

    def test_cache(self):
        kernel = RelayKernel(make_fso(), 1.0)
        first = kernel.cdf_term(0.2, 1.0, 1)
        assert kernel.cdf_term(0.2, 1.0, 1) == first
        assert len(kernel.records) == 1
        kernel.pdf_term(0.2, 1.0, 1)
        assert len(kernel.records) == 2

    @pytest.mark.parametrize(['t', 'j', 'rate'], [
        (1, 0, 0.2),
        (1, 1, 0.2),
        (1, 2, 0.05),
        (2, 0, 0.2),
        (2, 1, 0.5),
    ])
    def test_against_direct_average(self, t, j, rate):
        fso = make_fso(t=t)
        kernel = RelayKernel(fso, 1.0)
        value, _ = kernel.cdf_term(rate, 1.0, j)
        assert value == pytest.approx(_direct_kernel(fso, rate, 1.0, 1.0, j), rel=1e-6)

    @pytest.mark.parametrize(['t'], [(1,), (2,)])
    def test_no_pointing_against_direct_average(self, t):
        fso = make_fso(t=t)
        kernel = RelayKernel(fso, 1.0, pointing=False)
        for j in (0, 1):
            value, _ = kernel.cdf_term(0.3, 1.0, j)
            assert value == pytest.approx(_direct_kernel(fso, 0.3, 1.0, 1.0, j, pointing=False), rel=1e-6)

    @pytest.mark.parametrize(['t'], [(1,), (2,)])
    def test_large_xi_limit(self, t):
        loose = RelayKernel(make_fso(t=t, xi=1e3), 1.0)
        limit = RelayKernel(make_fso(t=t), 1.0, pointing=False)
        for j in (0, 1, 2):
            assert loose.cdf_term(0.3, 1.0, j)[0] == pytest.approx(limit.cdf_term(0.3, 1.0, j)[0], rel=1e-4)

    def test_pdf_term_derivative(self):
        kernel = RelayKernel(make_fso(), 1.0)
        gamma, h = 2.0, 1e-4
        up = kernel.cdf_term(0.3, gamma * (1 + h), 1)[0]
        down = kernel.cdf_term(0.3, gamma * (1 - h), 1)[0]
        assert kernel.pdf_term(0.3, gamma, 1)[0] == pytest.approx((up - down) / (2 * h), rel=1e-5)

    def test_leading_term(self):
        kernel = RelayKernel(make_fso(gamma_bar2=1e6), 1.0)
        exact, _ = kernel.cdf_term(0.1, 1.0, 0)
        assert kernel.leading_term(0.1, 1.0, 0) == pytest.approx(exact, rel=1e-3)

    def test_leading_term_collision(self):
        fso = make_fso(xi=2 ** 0.5)
        kernel = RelayKernel(fso, 1.0)
        with pytest.raises(PoleCollisionError):
            kernel.leading_term(0.1, 1.0, 2)
