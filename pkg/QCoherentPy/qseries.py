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
    QCoherentPy/qseries.py

    Basic hypergeometric series 2phi1 and 3phi2.

"""
# Python Dependencies
import logging
import math
import numpy as np

from typing import Optional, Sequence

from .config import setting
from .errors import DivergentSeriesError, PoleError, TruncationError
from .qcore import DEFAULT_TRUNCATION, EPS, Number, SeriesValue, Truncation
from .utils import check_index, check_q


logger = logging.getLogger(__name__)


def terminating_index(p: Number, q: float, rtol: Optional[float] = None, n_max: Optional[int] = None) -> Optional[int]:
    """Returns n if p equals q**-n within relative tolerance, otherwise None."""
    rtol = setting("termination", "rtol") if rtol is None else rtol
    n_max = setting("termination", "n_max") if n_max is None else n_max
    p = complex(p)
    if p == 0:
        return None

    n = round(math.log(abs(p)) / -math.log(q))
    if n < 0 or n > n_max:
        return None

    target = q ** -n
    return n if abs(p - target) <= rtol * target else None


def _check_poles(denominators: Sequence[Number], q: float, count: int) -> None:
    atol = setting("pochhammer", "pole_atol")
    for b in denominators:
        factors = 1.0 - np.multiply.outer(np.asarray(b, dtype=complex), q ** np.arange(count))
        if np.any(np.abs(factors) <= atol):
            raise PoleError(f"Pole in denominator parameters: b={b}, q={q}, first {count} factors")


def _terminating_sum(n: int, numerators, denominators, q: float, z):
    """Sums exactly n+1 terms; the first numerator is q**-n and is handled exactly."""
    total = np.ones(np.broadcast(*numerators, *denominators, z).shape, dtype=complex)
    term = np.ones_like(total)
    for k in range(n):
        ratio = (1.0 - q ** (k - n)) * np.asarray(z, dtype=complex) / (1.0 - q ** (k + 1))
        for a in numerators:
            ratio = ratio * (1.0 - a * q ** k)
        for b in denominators:
            ratio = ratio / (1.0 - b * q ** k)
        term = term * ratio
        total = total + term
    return total if total.ndim else complex(total)


def _series(numerators: Sequence[Number], denominators: Sequence[Number], q: float, z: Number,
            trunc: Optional[Truncation]) -> SeriesValue:
    check_q(q)
    trunc = trunc or DEFAULT_TRUNCATION
    numerators = [complex(a) for a in numerators]
    denominators = [complex(b) for b in denominators]
    z = complex(z)

    indices = [n for n in (terminating_index(a, q) for a in numerators) if n is not None]
    if indices:
        n = min(indices)
        position = [terminating_index(a, q) for a in numerators].index(n)
        _check_poles(denominators, q, n)
        rest = numerators[:position] + numerators[position + 1:]
        value = _terminating_sum(n, rest, denominators, q, z)
        logger.debug("terminating series: %d terms", n + 1)
        return SeriesValue(value, 0.0, n + 1)

    if abs(z) >= 1.0:
        raise DivergentSeriesError(f"Non-terminating series diverges for |z| >= 1: z={z}")

    total = 0j
    magnitude = 0.0
    term = 1.0 + 0j
    k = 0
    while True:
        if any(abs(1.0 - b * q ** k) <= setting("pochhammer", "pole_atol") for b in denominators):
            raise PoleError(f"Pole in denominator parameters at k={k}: {denominators}")
        total += term
        magnitude += abs(term)
        if k >= trunc.max_terms:
            raise TruncationError(f"Series did not converge within {trunc.max_terms} terms (z={z})")

        ratio = z / (1.0 - q ** (k + 1))
        for a in numerators:
            ratio *= 1.0 - a * q ** k
        for b in denominators:
            ratio /= 1.0 - b * q ** k
        term *= ratio
        k += 1

        qk = q ** k
        smallest = min((1.0 - abs(b) * qk for b in denominators), default=1.0)
        if smallest > 0:
            growth = math.prod(1.0 + abs(a) * qk for a in numerators) / (smallest * (1.0 - q * qk))
            contraction = abs(z) * growth
            if contraction < 1.0 and abs(term) / (1.0 - contraction) <= trunc.tol * max(1.0, abs(total)):
                tail = abs(term) / (1.0 - contraction)
                break

    logger.debug("convergent series: %d terms", k)
    return SeriesValue(total + term, tail + 4 * EPS * magnitude, k + 1)


def phi21(a: Number, b: Number, c: Number, q: float, z: Number, trunc: Optional[Truncation] = None) -> SeriesValue:
    """Evaluates 2phi1(a, b; c; q, z).

    Args:
        a (complex): numerator parameter
        b (complex): numerator parameter
        c (complex): denominator parameter
        q (float): deformation parameter
        z (complex): argument
        trunc (Truncation): stopping rule for the non-terminating case

    Returns:
        (SeriesValue) the sum; a terminating sum has zero error estimate.

    Raises:
        DivergentSeriesError: non-terminating with |z| >= 1.
        PoleError: (c;q)_k vanishes before termination.

    """
    return _series([a, b], [c], q, z, trunc)


def phi32(a1: Number, a2: Number, a3: Number, b1: Number, b2: Number, q: float, z: Number,
          trunc: Optional[Truncation] = None) -> SeriesValue:
    """Evaluates 3phi2(a1, a2, a3; b1, b2; q, z); termination is detected on a1, a2 and a3."""
    return _series([a1, a2, a3], [b1, b2], q, z, trunc)


def phi21_terminating(n: int, b, c, q: float, z):
    """2phi1(q**-n, b; c; q, z) summed to exactly n+1 terms, elementwise over arrays."""
    check_q(q)
    check_index(n)
    _check_poles([c], q, n)
    return _terminating_sum(n, [b], [c], q, z)


def phi32_terminating(n: int, a2, a3, b1, b2, q: float, z):
    """3phi2(q**-n, a2, a3; b1, b2; q, z) summed to exactly n+1 terms, elementwise over arrays."""
    check_q(q)
    check_index(n)
    _check_poles([b1, b2], q, n)
    return _terminating_sum(n, [a2, a3], [b1, b2], q, z)


def phi10(a: Number, q: float, z: Number, trunc: Optional[Truncation] = None) -> SeriesValue:
    """Evaluates 1phi0(a; -; q, z) = sum_k (a;q)_k z**k/(q;q)_k."""
    return _series([a], [], q, z, trunc)


def terminating_terms(n: int, numerators: Sequence[Number], denominators: Sequence[Number], q: float,
                      z: Number) -> np.ndarray:
    """The n+1 terms of a series whose first numerator is q**-n, for conditioning estimates."""
    check_q(q)
    check_index(n)
    terms = np.ones(n + 1, dtype=complex)
    for k in range(n):
        ratio = (1.0 - q ** (k - n)) * complex(z) / (1.0 - q ** (k + 1))
        for a in numerators:
            ratio *= 1.0 - a * q ** k
        for b in denominators:
            ratio /= 1.0 - b * q ** k
        terms[k + 1] = terms[k] * ratio
    return terms
