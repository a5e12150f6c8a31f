from .ber import ber_etamu_gg, ber_kappamu_gg, ber_no_pointing_etamu, ber_no_pointing_kappamu, ber_mixed
from .cdf import cdf_etamu_gg, cdf_kappamu_gg, cdf_mixed
from .integral import mellin_exp_g_integral, mellin_exp_g_integral_spec
from .kernel import RelayKernel, delta_list, relay_kernel_spec, relay_kernel_prefactor, relay_kernel_lists, \
    relay_argument_scale
from .outage import outage, outage_asymptotic, outage_asymptotic_etamu, outage_asymptotic_kappamu
from .pdf import pdf_etamu_gg, pdf_kappamu_gg, pdf_mixed
from .reductions import cdf_nakagami_gg, cdf_rayleigh_gg
from .system import SystemConfig, ModulationScheme, MODULATIONS, EvalResult
