import math

import pytest

from linkmix.endtoend import SystemConfig, ModulationScheme, MODULATIONS, EvalResult
from linkmix.endtoend.system import finish
from linkmix.specfun import DomainError


@pytest.mark.unittest
class TestEndtoendSystem:
    def test_system_config(self):
        sys = SystemConfig()
        assert (sys.c, sys.gamma_th) == (1.0, 1.0)
        assert SystemConfig(c=2, gamma_th=3).c == 2.0
        with pytest.raises(DomainError):
            SystemConfig(c=0.0)
        with pytest.raises(DomainError):
            SystemConfig(gamma_th=math.inf)

    def test_modulations(self):
        assert (MODULATIONS['CBFSK'].p, MODULATIONS['CBFSK'].q) == (0.5, 0.5)
        assert (MODULATIONS['NBFSK'].p, MODULATIONS['NBFSK'].q) == (1.0, 0.5)
        assert (MODULATIONS['CBPSK'].p, MODULATIONS['CBPSK'].q) == (0.5, 1.0)
        assert (MODULATIONS['DBPSK'].p, MODULATIONS['DBPSK'].q) == (1.0, 1.0)
        assert ModulationScheme.named(' dbpsk ') is MODULATIONS['DBPSK']
        assert ModulationScheme(2, 3).name == 'custom'
        with pytest.raises(DomainError):
            ModulationScheme.named('qpsk')
        with pytest.raises(DomainError):
            ModulationScheme(0.0, 1.0)

    def test_finish(self):
        result = finish(-1e-12, 1e-11)
        assert isinstance(result, EvalResult)
        assert result.value == 0.0 and result.raw_value == -1e-12
        assert finish(1.0 + 1e-12, 1e-11).value == 1.0
        assert finish(0.5 + 1e-12, 1e-11, upper=0.5).value == 0.5
        assert finish(-1e-3, 1e-11).value == -1e-3
        assert finish(2.0, 1e-11, upper=None).value == 2.0
        assert finish(0.3, -1e-9).abs_error_est == 1e-9
        assert finish(0.3, 0.0, terms_used=4).terms_used == 4
