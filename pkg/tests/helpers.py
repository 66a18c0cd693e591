"""
    QCoherentPy/helpers.py

"""
# Python Dependencies
import math
import numpy as np
import pytest

from QCoherentPy.utils import SplitMix64


# Global Variable
FAILURE = pytest.mark.xfail(raises=ValueError)


def random_complex(seed: int, count: int, r_lo: float = 0.1, r_hi: float = 2.0,
                   arg_lo: float = math.pi / 3, arg_hi: float = 2 * math.pi / 3) -> list:
    """Seeded complex draws away from the positive real axis."""
    rng = SplitMix64(seed)
    return [rng.complex_polar(r_lo, r_hi, arg_lo, arg_hi) for _ in range(count)]


def rel_error(value, expected, scale: float = 1.0) -> float:
    value = np.asarray(value, dtype=complex)
    expected = np.asarray(expected, dtype=complex)
    return float(np.max(np.abs(value - expected) / np.maximum(np.abs(expected), scale)))
