import pytest

from linkmix.channels import EtaMuParams, KappaMuParams
from linkmix.experiment import preset_config, preset_dict, PRESETS, ConfigError, FIG5_XI


@pytest.mark.unittest
class TestExperimentPresets:
    @pytest.mark.parametrize(['name'], [(name,) for name in sorted(PRESETS)])
    def test_link_defaults(self, name):
        cfg = preset_config(name)
        assert cfg.system.c == 1.0 and cfg.system.gamma_th == 1.0
        assert cfg.mc is not None and cfg.mc.n_samples == 1000000 and cfg.mc.seed == 42
        for curve in cfg.curves:
            _, fso, _ = curve.build(cfg.axis.name, cfg.axis.points[0][1], cfg.system)
            assert (fso.L, fso.D, fso.wavelength, fso.t) == (4000.0, 0.01, 1550e-9, 1)

    def test_fig2(self):
        cfg = preset_config('fig2')
        assert cfg.axis.name == 'gamma_bar2_db'
        assert cfg.axis.points[0][0] == 0.0 and cfg.axis.points[-1][0] == 50.0
        assert cfg.outputs == ('outage', 'outage_asym')
        rfs = [c.build(cfg.axis.name, 10.0, cfg.system)[0] for c in cfg.curves]
        assert all(isinstance(rf, EtaMuParams) for rf in rfs)
        assert [(rf.eta, rf.mu) for rf in rfs] == [(0.5, 1), (0.9, 1), (0.9, 2)]
        assert all(rf.gamma_bar1 == pytest.approx(10.0) for rf in rfs)
        _, fso, _ = cfg.curves[0].build(cfg.axis.name, 10.0, cfg.system)
        assert fso.cn2 == 1e-15 and fso.xi == 1.1

    def test_fig3(self):
        cfg = preset_config('fig3')
        rfs = [c.build(cfg.axis.name, 10.0, cfg.system)[0] for c in cfg.curves]
        assert all(isinstance(rf, KappaMuParams) for rf in rfs)
        assert [(rf.kappa, rf.mu) for rf in rfs] == [(1.0, 1), (3.0, 1), (3.0, 2)]

    def test_fig4(self):
        cfg = preset_config('fig4')
        assert cfg.axis.name == 'gamma_bar1_db'
        fsos = [c.build(cfg.axis.name, 10.0, cfg.system)[1] for c in cfg.curves]
        assert [fso.cn2 for fso in fsos] == [1e-15, 9e-15, 3e-14]
        assert all(fso.gamma_bar2 == pytest.approx(10.0) and fso.xi == 1.1 for fso in fsos)
        rf = cfg.curves[0].build(cfg.axis.name, 10.0, cfg.system)[0]
        assert (rf.eta, rf.mu) == (0.5, 3)

    def test_fig5(self):
        cfg = preset_config('fig5')
        assert cfg.outputs == ('ber:CBFSK', 'ber:NBFSK')
        fsos = [c.build(cfg.axis.name, 10.0, cfg.system)[1] for c in cfg.curves]
        assert tuple(fso.xi for fso in fsos) == FIG5_XI
        assert all(fso.cn2 == 9e-15 for fso in fsos)
        cfg = preset_config('fig5', xis=[1.1, 2.0, 6.7])
        assert [c.label for c in cfg.curves] == ['xi=1.1', 'xi=2', 'xi=6.7']

    def test_fresh_copies(self):
        data = preset_dict('fig2')
        data['rf']['family'] = 'kappamu'
        assert preset_dict('fig2')['rf']['family'] == 'etamu'

    def test_overrides(self):
        cfg = preset_config('fig2', overrides=[('oracles', 'mc', 'no'), ('fso', 't', '2')])
        assert cfg.mc is None
        assert cfg.curves[0].build(cfg.axis.name, 10.0, cfg.system)[1].t == 2

    def test_invalid(self):
        with pytest.raises(ConfigError):
            preset_config('fig9')
        with pytest.raises(ConfigError):
            preset_config('fig2', xis=[1.1])
