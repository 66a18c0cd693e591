# MIT License
#
# Copyright (c) 2022 Spill-Tea
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
"""
    QCoherentPy/utils.py

"""
# Python Dependencies
import cmath
import math
import numpy as np

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, List, Sequence, Tuple, TypeVar

from .config import worker_count
from .errors import DomainError


T = TypeVar("T")
R = TypeVar("R")

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class Constants:
    """Fixed numbers shared across modules."""
    sqrt_pi = math.sqrt(math.pi)
    pi_quarter = math.pi ** -0.25
    limit_sweep = (0.9, 0.99, 0.999)
    golden_gamma = 0x9E3779B97F4A7C15


def check_q(q: float) -> float:
    """Validates a deformation parameter.

    Args:
        q (float): deformation parameter

    Returns:
        (float) q, unchanged.

    Raises:
        DomainError: q is not a real number strictly inside (0, 1).

    """
    if isinstance(q, complex) or not 0.0 < float(q) < 1.0:
        raise DomainError(f"Deformation parameter must satisfy 0 < q < 1: {q}")
    return float(q)


def check_index(n: int, name: str = "n") -> int:
    """Validates a non-negative integer index."""
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise ValueError(f"{name} must be a non-negative integer: {n}")
    return int(n)


def arg(z):
    """Principal argument with arg(0) := 0, for scalar or array z (signed zeros included)."""
    z = np.asarray(z, dtype=complex)
    value = np.where(z == 0, 0.0, np.angle(z))
    return value if np.ndim(value) else float(value)


def parcels(iterable: Sequence[T], chunks: int = 10) -> Iterator[Sequence[T]]:
    """Meters out a sequence by a defined chunk size (i.e. thread work units)."""
    if chunks < 1:
        raise ValueError(f"Chunk size must be positive: {chunks}")
    for i in range(0, len(iterable), chunks):
        yield iterable[i: i + chunks]


def pairwise_sum(values) -> complex:
    """Fixed-order pairwise reduction of a 1-D array."""
    return np.sum(np.ascontiguousarray(values))


def parallel_map(fn: Callable[[T], R], items: Sequence[T], chunks: int = 4) -> List[R]:
    """Maps fn over items on a thread pool; results keep the input order."""
    workers = worker_count()
    if workers == 1 or len(items) <= 1:
        return [fn(i) for i in items]

    def run(chunk: Sequence[T]) -> List[R]:
        return [fn(i) for i in chunk]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = pool.map(run, list(parcels(items, chunks)))

    return [r for chunk in results for r in chunk]


class SplitMix64:
    """The splitmix64 generator: 64-bit state, golden-ratio increment, two xor-shift-multiply rounds.

    Args:
        seed (int): any integer; reduced modulo 2**64.

    """

    def __init__(self, seed: int) -> None:
        self.state = int(seed) & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + Constants.golden_gamma) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform double in [0, 1) built from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range [lo, hi]."""
        if hi < lo:
            raise ValueError(f"Empty integer range: [{lo}, {hi}]")
        return lo + self.next_u64() % (hi - lo + 1)

    def complex_polar(self, r_lo: float, r_hi: float,
                      arg_lo: float = -math.pi, arg_hi: float = math.pi) -> complex:
        """Complex number with modulus in [r_lo, r_hi] and argument in [arg_lo, arg_hi]."""
        return cmath.rect(self.uniform(r_lo, r_hi), self.uniform(arg_lo, arg_hi))

    def fork(self, label: str) -> "SplitMix64":
        """Independent stream derived from this seed and a label (stable across runs)."""
        h = 1469598103934665603
        for c in label.encode("utf-8"):
            h = ((h ^ c) * 1099511628211) & _MASK64
        return SplitMix64(self.state ^ h)


def format_complex(value: complex, digits: int = 15) -> str:
    """Formats a complex value with a fixed number of significant digits."""
    value = complex(value)
    if value.imag == 0.0:
        return f"{value.real:.{digits}g}"
    return f"{value.real:.{digits}g}{value.imag:+.{digits}g}j"


def parse_complex(text: str) -> complex:
    """Parses '1', '0.5+0.2j', '0.5+0.2i' or '(1,2)'."""
    text = text.strip().replace(" ", "")
    if text.startswith("(") and text.endswith(")") and "," in text:
        re_part, im_part = text[1:-1].split(",", 1)
        return complex(float(re_part), float(im_part))
    try:
        return complex(text.replace("i", "j"))
    except ValueError as e:
        raise ValueError(f"Not a complex number: {text!r}") from e


def split_complex(name: str, value: complex) -> Tuple[Tuple[str, float], Tuple[str, float]]:
    """Column pairs (name_re, real), (name_im, imag)."""
    value = complex(value)
    return (f"{name}_re", value.real), (f"{name}_im", value.imag)
