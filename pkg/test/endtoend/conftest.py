import pytest

from linkmix.channels import FsoChannelParams, EtaMuParams, KappaMuParams
from linkmix.endtoend import SystemConfig


def make_fso(xi=1.1, t=1, cn2=1e-15, gamma_bar2=10.0):
    return FsoChannelParams(cn2, 4000, 0.01, 1550e-9, xi, t, gamma_bar2)


@pytest.fixture()
def fso_weak():
    return make_fso()


@pytest.fixture()
def fso_weak_imdd():
    return make_fso(t=2)


@pytest.fixture()
def etamu_fig2():
    return EtaMuParams(0.9, 1, 10.0)


@pytest.fixture()
def etamu_fig4():
    return EtaMuParams(0.5, 3, 10.0)


@pytest.fixture()
def kappamu_fig3():
    return KappaMuParams(3.0, 2, 10.0)


@pytest.fixture()
def sys_default():
    return SystemConfig()
