import pytest

from linkmix.utils import db_to_linear, linear_to_db


@pytest.mark.unittest
class TestUtilsUnits:
    def test_conversion(self):
        assert db_to_linear(0.0) == 1.0
        assert db_to_linear(10.0) == pytest.approx(10.0)
        assert db_to_linear(-30.0) == pytest.approx(1e-3)
        assert linear_to_db(100.0) == pytest.approx(20.0)
        assert linear_to_db(db_to_linear(7.3)) == pytest.approx(7.3)

    def test_invalid(self):
        with pytest.raises(ValueError):
            linear_to_db(0.0)
