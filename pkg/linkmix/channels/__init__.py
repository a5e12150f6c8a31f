from .etamu import EtaMuParams, etamu_cdf, etamu_pdf
from .fso import RYTOV_CONSTANT, Turbulence, FsoChannelParams, derive_turbulence, pointing_fraction, gg_pdf, \
    gg_pdf_reference, gg_pdf_no_pointing_reference, irradiance_pdf_reference
from .kappamu import KappaMuParams, PoissonSeries, MAX_POISSON_TERMS, kappamu_pdf, kappamu_cdf, \
    poisson_survival, poisson_series
from .nakagami import nakagami_cdf
