from .schema import ChannelRealization, ComplexSample, SymbolPair, SystemParams
from .constellation import (
    charlie_tx_point,
    charlie_tx_points,
    psk_point,
    psk_points,
    rotated_points,
    rotation,
)
from .rng import RngStream
from .channel import complex_normal, draw_channel, draw_channels, draw_noise

__all__ = [
    "ChannelRealization",
    "ComplexSample",
    "RngStream",
    "SymbolPair",
    "SystemParams",
    "charlie_tx_point",
    "charlie_tx_points",
    "complex_normal",
    "draw_channel",
    "draw_channels",
    "draw_noise",
    "psk_point",
    "psk_points",
    "rotated_points",
    "rotation",
]
