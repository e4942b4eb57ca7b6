import numpy as np


class RngStream:
    """
    Seeded random stream on a counter-based Philox generator.

    The stream is identified by (seed, *key). Streams with distinct keys come
    from independent SeedSequence children, so per-block and per-point streams
    never overlap and do not depend on which worker consumes them.
    """

    def __init__(self, seed: int, *key: int) -> None:
        if seed < 0:
            raise ValueError(f"seed must be non-negative, got {seed}")
        self.seed = int(seed)
        self.key = tuple(int(k) for k in key)
        sequence = np.random.SeedSequence(self.seed, spawn_key=self.key)
        self.generator = np.random.Generator(np.random.Philox(sequence))

    def child(self, *key: int) -> "RngStream":
        return RngStream(self.seed, *self.key, *key)

    def standard_normal(self, size=None):
        return self.generator.standard_normal(size)

    def integers(self, low: int, high: int, size=None):
        return self.generator.integers(low, high, size=size)

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, key={self.key})"
