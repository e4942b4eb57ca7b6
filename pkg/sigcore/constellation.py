import numpy as np

from .schema import is_power_of_two


def _check_order(M: int) -> None:
    if not is_power_of_two(M):
        raise ValueError(f"PSK order must be a power of two >= 2, got {M}")


def _check_index(M: int, j: int) -> None:
    if not 0 <= j < M:
        raise ValueError(f"PSK index {j} out of range for M={M}")


def psk_points(M: int) -> np.ndarray:
    """All M points e^{i 2pi (j + 0.5)/M}, j = 0..M-1"""
    _check_order(M)
    return np.exp(2j * np.pi * (np.arange(M) + 0.5) / M)


def psk_point(M: int, j: int) -> complex:
    _check_order(M)
    _check_index(M, j)
    return complex(np.exp(2j * np.pi * (j + 0.5) / M))


def rotation(M: int) -> complex:
    """e^{i pi/M}, the offset between Charlie's two constellations"""
    _check_order(M)
    return complex(np.exp(1j * np.pi / M))


def rotated_points(M: int, alpha: float) -> np.ndarray:
    """sqrt(alpha) e^{i pi/M} S_C, what Charlie sends after detecting a 1"""
    return np.sqrt(alpha) * rotation(M) * psk_points(M)


def charlie_tx_point(M: int, j: int, decoded_bit: int, alpha: float) -> complex:
    """Charlie's transmitted symbol given his PSK index and the bit he decoded from Alice."""
    _check_index(M, j)
    if decoded_bit not in (0, 1):
        raise ValueError(f"decoded_bit must be 0 or 1, got {decoded_bit}")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    y = psk_point(M, j)
    if decoded_bit == 0:
        return y
    return complex(np.sqrt(alpha) * rotation(M) * y)


def charlie_tx_points(
    M: int, j: np.ndarray, decoded_bits: np.ndarray, alpha: float
) -> np.ndarray:
    """Vectorized charlie_tx_point over arrays of indices and decoded bits."""
    y = psk_points(M)[j]
    scaled = np.sqrt(alpha) * rotation(M) * y
    return np.where(np.asarray(decoded_bits) == 1, scaled, y)
