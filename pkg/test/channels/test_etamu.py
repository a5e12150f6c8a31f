import math

import numpy as np
import pytest
from scipy import integrate

from linkmix.channels import EtaMuParams, etamu_cdf, etamu_pdf, nakagami_cdf
from linkmix.specfun import DomainError


@pytest.mark.unittest
class TestChannelsEtamu:
    def test_params(self):
        rf = EtaMuParams(0.5, 3, 10.0)
        assert rf.h == pytest.approx(1.125)
        assert rf.H == pytest.approx(0.375)
        a1, a2 = rf.rates
        assert a1 == pytest.approx(2 * 3 * 0.75 / 10)
        assert a2 == pytest.approx(2 * 3 * 1.5 / 10)
        assert len(rf.exponential_terms()) == 6
        assert EtaMuParams(0.5, 3.0, 10.0).mu == 3

    @pytest.mark.parametrize(['args'], [
        ((1.0, 1, 10.0),),
        ((1.0005, 2, 10.0),),
        ((0.5, 0, 10.0),),
        ((0.5, 1.5, 10.0),),
        ((-0.5, 1, 10.0),),
        ((0.5, 1, 0.0),),
    ])
    def test_invalid(self, args):
        with pytest.raises(DomainError):
            EtaMuParams(*args)

    def test_near_one_hint(self):
        with pytest.raises(DomainError, match='m = 2 \\* mu = 4'):
            EtaMuParams(1.0, 2, 10.0)

    def test_cdf_limits(self):
        rf = EtaMuParams(0.9, 2, 10.0)
        assert etamu_cdf(rf, 0.0) == 0.0
        assert etamu_cdf(rf, 1e-9) < 1e-12
        assert etamu_cdf(rf, 1e4) == pytest.approx(1.0)
        with pytest.raises(DomainError):
            etamu_cdf(rf, -1.0)

    def test_cdf_vectorized(self):
        rf = EtaMuParams(0.5, 3, 10.0)
        gammas = np.logspace(-2, 2, 9)
        values = etamu_cdf(rf, gammas)
        assert values.shape == (9,)
        assert np.all(np.diff(values) > 0)
        for g, v in zip(gammas, values):
            assert etamu_cdf(rf, g) == pytest.approx(v, abs=1e-15)

    @pytest.mark.parametrize(['eta', 'mu'], [(0.5, 1), (0.5, 3), (0.1, 2), (0.9, 1)])
    def test_reciprocal_eta(self, eta, mu):
        rf, rf_inv = EtaMuParams(eta, mu, 10.0), EtaMuParams(1 / eta, mu, 10.0)
        for g in [0.1, 1.0, 5.0, 30.0]:
            assert etamu_cdf(rf, g) == pytest.approx(etamu_cdf(rf_inv, g), abs=1e-11)
            assert etamu_pdf(rf, g) == pytest.approx(etamu_pdf(rf_inv, g), rel=1e-10)

    @pytest.mark.parametrize(['eta', 'mu', 'gamma_bar1'], [
        (0.5, 3, 10.0),
        (0.9, 1, 10.0),
        (0.2, 2, 3.0),
        (3.0, 2, 100.0),
    ])
    def test_cdf_is_integral_of_pdf(self, eta, mu, gamma_bar1):
        rf = EtaMuParams(eta, mu, gamma_bar1)
        for g in [0.3, 1.0, gamma_bar1]:
            value, _ = integrate.quad(lambda x: etamu_pdf(rf, x), 0, g, epsabs=1e-13, epsrel=1e-11, limit=200)
            assert etamu_cdf(rf, g) == pytest.approx(value, abs=1e-9)

    def test_pdf_normalized_with_mean(self):
        rf = EtaMuParams(0.5, 3, 10.0)
        total, _ = integrate.quad(lambda x: etamu_pdf(rf, x), 0, np.inf, limit=200)
        mean, _ = integrate.quad(lambda x: x * etamu_pdf(rf, x), 0, np.inf, limit=200)
        assert total == pytest.approx(1.0, abs=1e-8)
        assert mean == pytest.approx(10.0, rel=1e-7)

    def test_pdf_array(self):
        rf = EtaMuParams(0.5, 1, 10.0)
        values = etamu_pdf(rf, np.array([0.0, 1.0, 10.0]))
        assert values[0] == 0.0
        assert 0.0 < values[1] < values[2]
        assert values[1] == pytest.approx(0.03597, rel=1e-3)
        assert values[2] == pytest.approx(0.05200, rel=1e-3)

    def test_nakagami(self):
        assert nakagami_cdf(1, 1.0, 1.0) == pytest.approx(1 - math.exp(-1))
        assert nakagami_cdf(2, 10.0, 0.0) == 0.0
        with pytest.raises(DomainError):
            nakagami_cdf(0, 1.0, 1.0)
        with pytest.raises(DomainError):
            nakagami_cdf(1, 1.0, -1.0)
