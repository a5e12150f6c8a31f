import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Union

import numpy as np
from hbutils.string import plural_word
from scipy import special

from .samplers import sample_rf, sample_gg_pointing
from .streams import McConfig, run_blocks
from ..channels import EtaMuParams, KappaMuParams, FsoChannelParams
from ..endtoend import SystemConfig, ModulationScheme

RfParams = Union[EtaMuParams, KappaMuParams]


@dataclass(frozen=True)
class Estimate:
    """
    Oracle estimate.

    :param value: Estimated value.
    :param std_error: Standard error of Monte-Carlo estimates, error estimate of quadratures.
    :param n: Sample count, or the number of quadrature panels.
    """
    value: float
    std_error: float
    n: int


def equivalent_snr(gamma1, gamma2, c: float):
    """
    End-to-end SNR of the fixed-gain relay, ``g1 g2 / (c + g2)``.
    """
    return gamma1 * gamma2 / (c + gamma2)


def _equivalent_block(rf: RfParams, fso: FsoChannelParams, sys: SystemConfig, rng: np.random.Generator,
                      size: int, pointing: bool) -> np.ndarray:
    gamma1 = sample_rf(rf, rng, size)
    gamma2 = sample_gg_pointing(fso, rng, size, pointing)
    return equivalent_snr(gamma1, gamma2, sys.c)


def _proportion(count: int, n: int) -> Estimate:
    p = count / n
    return Estimate(p, math.sqrt(p * (1.0 - p) / n), n)


def mc_cdf(rf: RfParams, fso: FsoChannelParams, sys: SystemConfig, gammas: Sequence[float], mc: McConfig,
           pointing: bool = True) -> List[Estimate]:
    """
    Empirical CDF of the end-to-end SNR at every entry of ``gammas``, all from one sample set.
    """
    thresholds = np.asarray(gammas, dtype=float)

    def _block(rng, size):
        samples = _equivalent_block(rf, fso, sys, rng, size, pointing)
        return (samples[:, None] < thresholds[None, :]).sum(axis=0)

    counts = np.zeros(thresholds.shape, dtype=np.int64)
    for block_counts in run_blocks(mc, _block):
        counts += block_counts
    logging.info(f'Monte-Carlo CDF at {plural_word(len(thresholds), "threshold")} '
                 f'from {plural_word(mc.n_samples, "sample")}.')
    return [_proportion(int(count), mc.n_samples) for count in counts]


def mc_outage(rf: RfParams, fso: FsoChannelParams, sys: SystemConfig, mc: McConfig,
              pointing: bool = True) -> Estimate:
    """
    Fraction of end-to-end SNR samples below ``sys.gamma_th`` with its binomial standard error.
    """
    return mc_cdf(rf, fso, sys, [sys.gamma_th], mc, pointing)[0]


def mc_ber(rf: RfParams, fso: FsoChannelParams, sys: SystemConfig, mod: ModulationScheme, mc: McConfig,
           pointing: bool = True) -> Estimate:
    """
    BER as the sample mean of the conditional error probability ``Q(p, q g) / 2``, where ``Q`` is the
    regularized upper incomplete gamma function.
    """

    def _block(rng, size):
        samples = _equivalent_block(rf, fso, sys, rng, size, pointing)
        errors = 0.5 * special.gammaincc(mod.p, mod.q * samples)
        return float(np.sum(errors)), float(np.sum(errors * errors))

    total, total_sq = 0.0, 0.0
    for block_sum, block_sq in run_blocks(mc, _block):
        total += block_sum
        total_sq += block_sq

    n = mc.n_samples
    mean = total / n
    variance = max(total_sq / n - mean * mean, 0.0) * n / (n - 1)
    logging.info(f'Monte-Carlo {mod.name} BER from {plural_word(n, "sample")}: {mean!r}.')
    return Estimate(mean, math.sqrt(variance / n), n)
