from .montecarlo import Estimate, equivalent_snr, mc_cdf, mc_outage, mc_ber
from .quadrature import STALL_TOLERANCE, quad_cdf, quad_ber, log_panel_integral
from .samplers import sample_etamu, sample_kappamu, sample_rf, sample_irradiance, sample_gg_pointing
from .streams import BLOCK_SIZE, McConfig, block_generators, run_blocks
