from .bessel import bessel_i, log_bessel_i
from .exceptions import SpecFunError, DomainError, PoleError, PoleCollisionError, ConvergenceError
from .gamma import ln_gamma, ln_abs_gamma, gamma_ratio, gamma_upper_reg, gamma_upper_reg_array, \
    is_nonpositive_integer
from .meijer import MeijerGSpec, GEvalOptions, GEvalRecord, meijer_g, meijer_g_eval, meijer_g_residue_series, \
    meijer_g_leading_residues, meijer_g_derivative_spec
