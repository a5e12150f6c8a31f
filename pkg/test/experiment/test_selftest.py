import pytest

from linkmix.experiment import SELFTEST_CHECKS, SelftestContext, run_selftest
from linkmix.oracles import McConfig


@pytest.mark.unittest
class TestSelftest:
    def test_suites_registered(self):
        assert {'integral_identity', 'sampler_ks', 'truncation'} <= set(SELFTEST_CHECKS)

    def test_unknown_suite(self):
        with pytest.raises(KeyError):
            run_selftest(McConfig(seed=1, n_samples=1000), quick=True, names=['nothing'])

    @pytest.mark.slow
    def test_integral_identity(self):
        result = SELFTEST_CHECKS['integral_identity'](SelftestContext(McConfig(seed=7, n_samples=1000), quick=True))
        assert result.passed, result.detail

    @pytest.mark.slow
    def test_sampler_ks(self):
        result = SELFTEST_CHECKS['sampler_ks'](SelftestContext(McConfig(seed=7, n_samples=100000), quick=True))
        assert result.passed, result.detail

    @pytest.mark.slow
    def test_truncation(self):
        result = SELFTEST_CHECKS['truncation'](SelftestContext(McConfig(seed=7, n_samples=1000), quick=True))
        assert result.passed, result.detail
