from .config import AXES, SweepAxis, SweepCurve, SweepConfig, parse_config, load_config, config_from_dict, \
    apply_overrides, read_config_dict, config_lines, single_point
from .exceptions import ConfigError
from .presets import PRESETS, FIG5_XI, preset_dict, preset_config
from .selftest import CheckResult, SelftestContext, SELFTEST_CHECKS, run_selftest
from .sweep import CONVERGENCE_TOLERANCES, sweep_columns, provenance_lines, run_sweep, convergence_report, \
    rf_cdf_function, quad_cdf_interpolant
from .table import REASON_COLUMN, ResultTable, write_csv, read_csv, git_describe
