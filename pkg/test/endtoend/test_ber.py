import pytest

from linkmix.channels import EtaMuParams, KappaMuParams, etamu_cdf
from linkmix.endtoend import ber_etamu_gg, ber_kappamu_gg, ber_no_pointing_etamu, ber_no_pointing_kappamu, \
    ber_mixed, cdf_etamu_gg, cdf_kappamu_gg, MODULATIONS, SystemConfig
from linkmix.oracles import quad_ber
from linkmix.utils import db_to_linear
from .conftest import make_fso

_CBFSK, _NBFSK, _DBPSK = MODULATIONS['CBFSK'], MODULATIONS['NBFSK'], MODULATIONS['DBPSK']


def _fig5_fso(xi=1.1, t=1):
    return make_fso(xi=xi, t=t, cn2=9e-15, gamma_bar2=10.0)


@pytest.mark.unittest
class TestEndtoendBer:
    def test_range(self, sys_default):
        fso = _fig5_fso()
        result = ber_etamu_gg(EtaMuParams(0.5, 3, 100.0), fso, sys_default, _CBFSK)
        assert 0.0 < result.value < 0.5
        assert result.abs_error_est >= 0
        assert result.extra['modulation'] == 'CBFSK'

    def test_worst_case(self, sys_default):
        fso = _fig5_fso()
        assert ber_etamu_gg(EtaMuParams(0.5, 3, 1e-6), fso, sys_default, _NBFSK).value == \
               pytest.approx(0.5, abs=1e-4)
        assert ber_kappamu_gg(KappaMuParams(3.0, 2, 1e-6), fso, sys_default, _NBFSK).value == \
               pytest.approx(0.5, abs=1e-4)

    def test_cbfsk_below_nbfsk(self, sys_default):
        fso = _fig5_fso()
        for x in (0, 10, 20, 30):
            rf = EtaMuParams(0.5, 3, db_to_linear(x))
            cbfsk = ber_etamu_gg(rf, fso, sys_default, _CBFSK)
            nbfsk = ber_etamu_gg(rf, fso, sys_default, _NBFSK)
            assert cbfsk.value + cbfsk.abs_error_est < nbfsk.value - nbfsk.abs_error_est

    def test_decreasing_in_rf_snr(self, sys_default):
        fso = _fig5_fso()
        values = [ber_etamu_gg(EtaMuParams(0.5, 3, db_to_linear(x)), fso, sys_default, _CBFSK).value
                  for x in (0, 10, 20, 30)]
        assert all(x > y for x, y in zip(values, values[1:]))

    def test_kappamu(self, sys_default):
        fso = _fig5_fso()
        result = ber_kappamu_gg(KappaMuParams(3.0, 2, 100.0), fso, sys_default, _DBPSK)
        assert 0.0 < result.value < 0.5
        assert result.terms_used >= 1
        assert result.extra['tail_bound'] <= 1e-6

    @pytest.mark.parametrize(['t'], [(1,), (2,)])
    def test_no_pointing_limit(self, sys_default, t):
        rf = EtaMuParams(0.5, 3, 100.0)
        limit = ber_no_pointing_etamu(rf, _fig5_fso(t=t), sys_default, _CBFSK).value
        assert ber_etamu_gg(rf, _fig5_fso(xi=1e3, t=t), sys_default, _CBFSK).value == pytest.approx(limit, rel=1e-3)

        rf = KappaMuParams(3.0, 2, 100.0)
        limit = ber_no_pointing_kappamu(rf, _fig5_fso(t=t), sys_default, _CBFSK).value
        assert ber_kappamu_gg(rf, _fig5_fso(xi=1e3, t=t), sys_default, _CBFSK).value == pytest.approx(limit, rel=1e-3)

    def test_pointing_hurts(self, sys_default):
        for x in (0, 10, 20, 30):
            rf = EtaMuParams(0.5, 3, db_to_linear(x))
            assert ber_no_pointing_etamu(rf, _fig5_fso(), sys_default, _CBFSK).value <= \
                   ber_etamu_gg(rf, _fig5_fso(), sys_default, _CBFSK).value

    def test_dispatch(self, sys_default):
        rf = KappaMuParams(1.5, 1, 10.0)
        fso = _fig5_fso()
        assert ber_mixed(rf, fso, sys_default, _DBPSK).value == ber_kappamu_gg(rf, fso, sys_default, _DBPSK).value
        assert ber_mixed(rf, fso, sys_default, _DBPSK, pointing=False).value == \
               ber_no_pointing_kappamu(rf, fso, sys_default, _DBPSK).value
        with pytest.raises(TypeError):
            ber_mixed('rf', fso, sys_default, _DBPSK)

    @pytest.mark.slow
    def test_etamu_quadrature(self, sys_default):
        rf, fso = EtaMuParams(0.5, 3, 100.0), _fig5_fso()
        expected = quad_ber(lambda g: cdf_etamu_gg(rf, fso, sys_default, g).value, _CBFSK)
        assert ber_etamu_gg(rf, fso, sys_default, _CBFSK).value == pytest.approx(expected.value, abs=1e-5)

    @pytest.mark.slow
    def test_kappamu_quadrature(self, sys_default):
        rf, fso = KappaMuParams(3.0, 2, 100.0), _fig5_fso()
        expected = quad_ber(lambda g: cdf_kappamu_gg(rf, fso, sys_default, g, tol=1e-10).value, _NBFSK)
        assert ber_kappamu_gg(rf, fso, sys_default, _NBFSK).value == pytest.approx(expected.value, abs=1e-5)

    def test_quadrature_of_rf_only(self):
        # c -> 0 makes the relay transparent, the BER is the one of the RF hop alone
        rf, fso = EtaMuParams(0.5, 2, 10.0), _fig5_fso()
        expected = quad_ber(lambda g: etamu_cdf(rf, g), _DBPSK)
        assert ber_etamu_gg(rf, fso, SystemConfig(c=1e-9), _DBPSK).value == pytest.approx(expected.value, abs=1e-6)
