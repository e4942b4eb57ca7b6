from .schema import DecoderKind, NoiseVariances
from .decoders import (
    decode_many,
    ffhd_decode,
    ffhd_decode_many,
    ffhd_log_metrics,
    jd_decode,
    jmap_decode,
    jmax_decode,
    log_metrics,
    mixture_density,
)

__all__ = [
    "DecoderKind",
    "NoiseVariances",
    "decode_many",
    "ffhd_decode",
    "ffhd_decode_many",
    "ffhd_log_metrics",
    "jd_decode",
    "jmap_decode",
    "jmax_decode",
    "log_metrics",
    "mixture_density",
]
