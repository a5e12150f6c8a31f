import pytest

from linkmix.channels import EtaMuParams, KappaMuParams, FsoChannelParams, etamu_cdf
from linkmix.endtoend import SystemConfig, MODULATIONS, cdf_etamu_gg, cdf_kappamu_gg, outage, ber_etamu_gg
from linkmix.oracles import McConfig, mc_outage, mc_cdf, mc_ber, equivalent_snr
from linkmix.utils import db_to_linear

_MC = McConfig(seed=42, n_samples=200000, n_streams=4)


def _fso(xi=1.1, t=1, cn2=1e-15, gamma_bar2=10.0):
    return FsoChannelParams(cn2, 4000, 0.01, 1550e-9, xi, t, gamma_bar2)


@pytest.mark.unittest
class TestOraclesMontecarlo:
    def test_equivalent_snr(self):
        assert equivalent_snr(2.0, 3.0, 1.0) == pytest.approx(1.5)
        assert equivalent_snr(2.0, 3.0, 1e-12) == pytest.approx(2.0)

    def test_reproducible(self):
        rf, fso, sys = EtaMuParams(0.5, 3, 10.0), _fso(), SystemConfig()
        first = mc_outage(rf, fso, sys, _MC)
        assert mc_outage(rf, fso, sys, _MC) == first
        assert mc_outage(rf, fso, sys, McConfig(seed=42, n_samples=200000, n_streams=1)) == first
        assert mc_outage(rf, fso, sys, McConfig(seed=43, n_samples=200000)) != first

    def test_infinite_threshold(self):
        estimate = mc_outage(EtaMuParams(0.5, 3, 10.0), _fso(), SystemConfig(gamma_th=1e300), _MC)
        assert estimate.value == 1.0
        assert estimate.std_error == 0.0
        assert estimate.n == 200000

    def test_transparent_relay(self):
        rf = EtaMuParams(0.5, 3, 10.0)
        estimate = mc_outage(rf, _fso(), SystemConfig(c=1e-9), _MC)
        assert abs(estimate.value - etamu_cdf(rf, 1.0)) < 3 * estimate.std_error

    def test_fig4_point(self):
        rf, fso, sys = EtaMuParams(0.5, 3, 100.0), _fso(cn2=9e-15), SystemConfig()
        estimate = mc_outage(rf, fso, sys, _MC)
        assert abs(estimate.value - cdf_etamu_gg(rf, fso, sys, 1.0).value) < 3 * estimate.std_error

    def test_fig2_point(self):
        rf, fso, sys = EtaMuParams(0.9, 2, 10.0), _fso(gamma_bar2=db_to_linear(30)), SystemConfig()
        estimate = mc_outage(rf, fso, sys, _MC)
        assert abs(estimate.value - outage(rf, fso, sys).value) < 3 * estimate.std_error

    @pytest.mark.parametrize(['t'], [(1,), (2,)])
    def test_cdf_grid(self, t):
        rf, fso, sys = KappaMuParams(3.0, 2, 10.0), _fso(t=t), SystemConfig()
        gammas = [0.5, 2.0, 8.0]
        estimates = mc_cdf(rf, fso, sys, gammas, _MC)
        assert [e.value for e in estimates] == sorted(e.value for e in estimates)
        for gamma, estimate in zip(gammas, estimates):
            assert abs(estimate.value - cdf_kappamu_gg(rf, fso, sys, gamma).value) < 3 * estimate.std_error

    def test_ber(self):
        rf, fso, sys = EtaMuParams(0.5, 3, 100.0), _fso(cn2=9e-15), SystemConfig()
        for name in ('CBFSK', 'NBFSK'):
            mod = MODULATIONS[name]
            estimate = mc_ber(rf, fso, sys, mod, _MC)
            assert 0 < estimate.std_error
            assert abs(estimate.value - ber_etamu_gg(rf, fso, sys, mod).value) < 3 * estimate.std_error

    def test_ber_worst_case(self):
        estimate = mc_ber(EtaMuParams(0.5, 3, 1e-9), _fso(), SystemConfig(), MODULATIONS['DBPSK'], _MC)
        assert estimate.value == pytest.approx(0.5, abs=1e-6)
