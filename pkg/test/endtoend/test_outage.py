import pytest

from linkmix.channels import EtaMuParams, KappaMuParams
from linkmix.endtoend import outage, outage_asymptotic, outage_asymptotic_etamu, outage_asymptotic_kappamu, \
    cdf_etamu_gg, SystemConfig
from linkmix.specfun import PoleCollisionError
from linkmix.utils import db_to_linear
from .conftest import make_fso


@pytest.mark.unittest
class TestEndtoendOutage:
    def test_is_cdf_at_threshold(self, etamu_fig4, fso_weak):
        sys = SystemConfig(gamma_th=2.0)
        assert outage(etamu_fig4, fso_weak, sys).value == cdf_etamu_gg(etamu_fig4, fso_weak, sys, 2.0).value

    def test_small_threshold(self, etamu_fig4, kappamu_fig3, fso_weak):
        sys = SystemConfig(gamma_th=1e-9)
        assert outage(etamu_fig4, fso_weak, sys).value < 1e-6
        assert outage(kappamu_fig3, fso_weak, sys).value < 1e-6

    def test_decreasing_in_fso_snr(self):
        rf = EtaMuParams(0.9, 2, 10.0)
        values = [outage(rf, make_fso(gamma_bar2=db_to_linear(x)), SystemConfig()).value
                  for x in range(0, 51, 10)]
        assert all(x > y for x, y in zip(values, values[1:]))

    def test_decreasing_in_rf(self, fso_weak, sys_default):
        by_snr = [outage(EtaMuParams(0.5, 2, db_to_linear(x)), fso_weak, sys_default).value for x in (0, 10, 20)]
        assert by_snr[0] > by_snr[1] > by_snr[2]
        by_mu = [outage(EtaMuParams(0.5, mu, 10.0), fso_weak, sys_default).value for mu in (1, 2, 3)]
        assert by_mu[0] > by_mu[1] > by_mu[2]
        by_eta = [outage(EtaMuParams(eta, 1, 10.0), fso_weak, sys_default).value for eta in (0.1, 0.5, 0.9)]
        assert by_eta[0] > by_eta[1] > by_eta[2]

    @pytest.mark.parametrize(['eta', 'mu'], [(0.9, 1), (0.9, 2), (0.5, 2)])
    def test_etamu_asymptote(self, eta, mu):
        rf, sys = EtaMuParams(eta, mu, 10.0), SystemConfig()
        deviations = []
        for x in (40, 50, 60, 70, 80):
            fso = make_fso(gamma_bar2=db_to_linear(x))
            exact = outage(rf, fso, sys).value
            deviations.append(abs(outage_asymptotic_etamu(rf, fso, sys) / exact - 1.0))
        assert deviations[2] < 0.05
        assert all(x >= y for x, y in zip(deviations, deviations[1:]))

    def test_kappamu_asymptote(self):
        rf, sys = KappaMuParams(3.0, 2, 10.0), SystemConfig()
        fso = make_fso(gamma_bar2=1e6)
        exact = outage(rf, fso, sys).value
        assert outage_asymptotic_kappamu(rf, fso, sys) == pytest.approx(exact, rel=0.05)
        assert outage_asymptotic(rf, fso, sys) == outage_asymptotic_kappamu(rf, fso, sys)

    def test_asymptote_imdd(self, etamu_fig2):
        fso = make_fso(t=2, gamma_bar2=1e6)
        exact = outage(etamu_fig2, fso, SystemConfig()).value
        assert outage_asymptotic(etamu_fig2, fso, SystemConfig()) == pytest.approx(exact, rel=0.05)

    def test_asymptote_collision(self):
        fso = make_fso(xi=2 ** 0.5, gamma_bar2=1e6)
        with pytest.raises(PoleCollisionError):
            outage_asymptotic_etamu(EtaMuParams(0.5, 3, 10.0), fso, SystemConfig())
        with pytest.raises(TypeError):
            outage_asymptotic(None, fso, SystemConfig())

    def test_asymptote_is_probability(self):
        rf, sys = EtaMuParams(0.9, 2, 10.0), SystemConfig()
        for x in (0, 20, 40):
            value = outage_asymptotic_etamu(rf, make_fso(gamma_bar2=db_to_linear(x)), sys)
            assert 0.0 <= value <= 1.0
        fso = make_fso(gamma_bar2=db_to_linear(40))
        assert outage_asymptotic_etamu(rf, fso, sys) > 0.0
        assert outage_asymptotic_etamu(rf, fso, sys) == pytest.approx(outage(rf, fso, sys).value, rel=0.5)
