import numpy as np

from .rng import RngStream
from .schema import ChannelRealization, SystemParams

# Alice->Bob and Charlie->Bob gains are unit variance
UNIT_VARIANCE = 1.0


def complex_normal(rng: RngStream, variance: float, size=None):
    """CN(0, variance) draws: re and im independent N(0, variance/2)"""
    if not variance > 0.0:
        raise ValueError(f"variance must be positive, got {variance}")
    scale = np.sqrt(variance / 2.0)
    if size is None:
        re, im = rng.standard_normal(2)
        return complex(scale * re, scale * im)
    re = rng.standard_normal(size)
    im = rng.standard_normal(size)
    return scale * (re + 1j * im)


def draw_noise(variance: float, rng: RngStream) -> complex:
    return complex_normal(rng, variance)


def draw_channel(params: SystemParams, rng: RngStream) -> ChannelRealization:
    """Independent draws of h_AC ~ CN(0, sigma_AC^2), h_CB ~ CN(0,1), h_AB ~ CN(0,1)"""
    return ChannelRealization(
        h_ac=complex_normal(rng, params.sigma_ac2),
        h_cb=complex_normal(rng, UNIT_VARIANCE),
        h_ab=complex_normal(rng, UNIT_VARIANCE),
    )


def draw_channels(params: SystemParams, rng: RngStream, size: int) -> ChannelRealization:
    # fading is i.i.d. per symbol
    return ChannelRealization(
        h_ac=complex_normal(rng, params.sigma_ac2, size),
        h_cb=complex_normal(rng, UNIT_VARIANCE, size),
        h_ab=complex_normal(rng, UNIT_VARIANCE, size),
    )
