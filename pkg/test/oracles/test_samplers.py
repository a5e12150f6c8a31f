import math

import numpy as np
import pytest
from scipy import stats, integrate

from linkmix.channels import EtaMuParams, KappaMuParams, FsoChannelParams, etamu_cdf, kappamu_cdf, gg_pdf
from linkmix.oracles import sample_etamu, sample_kappamu, sample_gg_pointing, sample_irradiance, sample_rf

_N = 200000


def _rng(seed=0):
    return np.random.Generator(np.random.Philox(seed))


def _fso(xi=1.1, t=1, cn2=1e-15):
    return FsoChannelParams(cn2, 4000, 0.01, 1550e-9, xi, t, 10.0)


@pytest.mark.unittest
class TestOraclesSamplers:
    def test_scalar(self):
        assert isinstance(float(sample_etamu(EtaMuParams(0.5, 2, 10.0), _rng())), float)
        assert np.ndim(sample_kappamu(KappaMuParams(1.0, 2, 10.0), _rng())) == 0
        with pytest.raises(TypeError):
            sample_rf('rf', _rng())

    @pytest.mark.parametrize(['rf'], [
        (EtaMuParams(0.5, 3, 10.0),),
        (EtaMuParams(0.9, 1, 3.0),),
        (KappaMuParams(3.0, 2, 10.0),),
        (KappaMuParams(0.0, 1, 5.0),),
        (KappaMuParams(2.0, 1.5, 20.0),),
    ])
    def test_rf_mean(self, rf):
        samples = sample_rf(rf, _rng(1), _N)
        se = samples.std(ddof=1) / math.sqrt(_N)
        assert abs(samples.mean() - rf.gamma_bar1) < 4 * se

    @pytest.mark.parametrize(['rf'], [(EtaMuParams(0.5, 3, 10.0),), (EtaMuParams(0.2, 1, 10.0),)])
    def test_etamu_ks(self, rf):
        samples = sample_etamu(rf, _rng(2), _N)
        distance = stats.kstest(samples, lambda x: etamu_cdf(rf, x)).statistic
        assert distance < 1.63 / math.sqrt(_N)

    def test_etamu_reciprocal(self):
        x = sample_etamu(EtaMuParams(0.3, 2, 10.0), _rng(3), _N)
        y = sample_etamu(EtaMuParams(1 / 0.3, 2, 10.0), _rng(4), _N)
        assert stats.ks_2samp(x, y).pvalue > 0.01

    @pytest.mark.parametrize(['rf'], [(KappaMuParams(3.0, 2, 10.0),), (KappaMuParams(1.5, 1, 10.0),)])
    def test_kappamu_ks(self, rf):
        samples = sample_kappamu(rf, _rng(5), _N)
        cdf = np.vectorize(lambda x: kappamu_cdf(rf, x, tol=1e-10)[0])
        distance = stats.kstest(samples, cdf).statistic
        assert distance < 1.63 / math.sqrt(_N)

    def test_kappamu_zero_kappa(self):
        rf = KappaMuParams(0.0, 2, 10.0)
        samples = sample_kappamu(rf, _rng(6), _N)
        distance = stats.kstest(samples, stats.gamma(2, scale=1 / rf.rate).cdf).statistic
        assert distance < 1.63 / math.sqrt(_N)

    def test_gg_mean(self):
        fso = _fso()
        samples = sample_gg_pointing(fso, _rng(7), _N)
        se = samples.std(ddof=1) / math.sqrt(_N)
        assert abs(samples.mean() - fso.gamma_bar2) < 4 * se

        fso = _fso(t=2)
        samples = sample_gg_pointing(fso, _rng(8), _N)
        se = samples.std(ddof=1) / math.sqrt(_N)
        assert abs(samples.mean() - fso.gamma_bar2) < 4 * se

    def test_irradiance_mean(self):
        fso = _fso()
        samples = sample_irradiance(fso, _rng(9), _N)
        se = samples.std(ddof=1) / math.sqrt(_N)
        assert abs(samples.mean() - fso.d) < 4 * se
        samples = sample_irradiance(fso, _rng(9), _N, pointing=False)
        assert abs(samples.mean() - 1.0) < 4 * samples.std(ddof=1) / math.sqrt(_N)

    @pytest.mark.slow
    @pytest.mark.parametrize(['t'], [(1,), (2,)])
    def test_gg_histogram(self, t):
        fso = _fso(t=t)
        samples = sample_gg_pointing(fso, _rng(10), _N)
        edges = np.quantile(samples, np.linspace(0, 1, 51))
        edges[0], edges[-1] = edges[1] * 1e-12, np.inf
        observed, _ = np.histogram(samples, bins=edges)
        expected = np.array([
            integrate.quad(lambda u: gg_pdf(fso, math.exp(u)) * math.exp(u), math.log(lo), min(math.log(hi), 20.0),
                           limit=200)[0]
            for lo, hi in zip(edges[:-1], edges[1:])
        ]) * _N
        _, pvalue = stats.chisquare(observed, expected * observed.sum() / expected.sum())
        assert pvalue > 0.01

    def test_large_xi(self):
        fso = _fso(xi=1e3)
        with_pointing = sample_gg_pointing(fso, _rng(11), _N)
        without = sample_gg_pointing(fso, _rng(11), _N, pointing=False)
        assert stats.ks_2samp(with_pointing, without).pvalue > 0.01
