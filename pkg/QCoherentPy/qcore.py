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
    QCoherentPy/qcore.py

    q-calculus primitives: Pochhammer symbols, q-numbers, q-binomials and the q-exponential.

"""
# Python Dependencies
import logging
import math
import numpy as np

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .config import setting
from .errors import DomainError, PoleError, QCoherentError, TruncationError
from .utils import check_index, check_q


logger = logging.getLogger(__name__)

INF = math.inf
EPS = np.finfo(float).eps

Number = Union[int, float, complex]
ExtendedInt = Union[int, float]


@dataclass(frozen=True)
class QDeformation:
    """The pair (q, kappa) tied by q = exp(-2 kappa**2).

    Args:
        q (float): deformation parameter in (0, 1)
        kappa (float): finite-difference step, kappa > 0

    Raises:
        DomainError: q outside (0, 1), kappa not positive, or the pair is inconsistent.

    """
    q: float
    kappa: float

    def __post_init__(self):
        check_q(self.q)
        if not self.kappa > 0:
            raise DomainError(f"kappa must be positive: {self.kappa}")
        if not math.isclose(self.q, math.exp(-2.0 * self.kappa ** 2), rel_tol=1e-14):
            raise DomainError(f"Inconsistent deformation: q={self.q}, kappa={self.kappa}")

    @classmethod
    def from_q(cls, q: float) -> "QDeformation":
        q = check_q(q)
        return cls(q, math.sqrt(-math.log(q) / 2.0))

    @classmethod
    def from_kappa(cls, kappa: float) -> "QDeformation":
        if not kappa > 0:
            raise DomainError(f"kappa must be positive: {kappa}")
        return cls(math.exp(-2.0 * kappa ** 2), float(kappa))


@dataclass(frozen=True)
class SeriesValue:
    """A value with its truncation error bound and the number of terms that produced it."""
    value: complex
    abs_error_estimate: float = 0.0
    terms_used: int = 0

    def __post_init__(self):
        if not self.abs_error_estimate >= 0:
            raise ValueError(f"Error estimate must be non-negative: {self.abs_error_estimate}")
        if self.terms_used < 0:
            raise ValueError(f"Term count must be non-negative: {self.terms_used}")


@dataclass(frozen=True)
class Truncation:
    """Stopping rule for series: tail bound below tol, or fail at max_terms."""
    tol: float = setting("truncation", "tol")
    max_terms: int = setting("truncation", "max_terms")

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"Truncation tolerance must be positive: {self.tol}")
        if not self.max_terms > 0:
            raise ValueError(f"max_terms must be positive: {self.max_terms}")


DEFAULT_TRUNCATION = Truncation()


def _is_real_nonnegative(a) -> bool:
    a = np.asarray(a)
    return bool(np.all(np.imag(a) == 0) and np.all(np.real(a) >= 0))


def pochhammer_value(a, q: float, n: int):
    """Finite (a;q)_n for n >= 0, elementwise over array a.

    Real positive products with q at or above the log-space threshold are accumulated as a
    sum of log1p terms.

    """
    if n == 0:
        return np.ones_like(np.asarray(a, dtype=complex)) if np.ndim(a) else 1.0 + 0j

    a = np.asarray(a, dtype=complex)
    qk = q ** np.arange(n)
    terms = np.multiply.outer(a, qk)
    if q >= setting("pochhammer", "log_space_q") and _is_real_nonnegative(a) and np.all(terms.real < 1):
        value = np.exp(np.sum(np.log1p(-terms.real), axis=-1)).astype(complex)
    else:
        value = np.prod(1.0 - terms, axis=-1)

    return value if value.ndim else complex(value)


def log_qpochhammer_real(a: float, q: float, n: ExtendedInt) -> float:
    """log (a;q)_n for real a with a*q**k < 1, including n = INF."""
    check_q(q)
    if n == INF:
        tol = setting("truncation", "tol")
        n = _direct_factor_count(abs(a), q, tol)
    k = np.arange(int(n))
    terms = a * q ** k
    if np.any(terms >= 1):
        raise DomainError(f"log (a;q)_n requires a*q**k < 1: a={a}, q={q}")
    return float(np.sum(np.log1p(-terms)))


def _direct_factor_count(amax: float, q: float, tol: float) -> int:
    """Smallest K with amax*q**K < tol*(1-q)."""
    if amax == 0:
        return 0
    target = tol * (1.0 - q)
    if amax < target:
        return 0
    return int(math.ceil(math.log(target / amax) / math.log(q)))


def qpochhammer_inf_array(a, q: float, trunc: Optional[Truncation] = None) -> Tuple[np.ndarray, np.ndarray, int]:
    """Infinite (a;q)_inf elementwise.

    Args:
        a (array_like): complex arguments
        q (float): deformation parameter
        trunc (Truncation): stopping rule

    Returns:
        (tuple) values, absolute error bounds, and factors used.

    Raises:
        TruncationError: the number of factors needed exceeds max_terms.

    """
    trunc = trunc or DEFAULT_TRUNCATION
    a = np.asarray(a, dtype=complex)
    amax = float(np.max(np.abs(a))) if a.size else 0.0
    if amax == 0.0:
        return np.ones_like(a), np.zeros(a.shape), 0

    count = _direct_factor_count(amax, q, trunc.tol)
    if amax <= setting("pochhammer", "log_series_abs") and count > 256:
        return _log_series(a, amax, q, trunc)

    if count > trunc.max_terms:
        raise TruncationError(f"(a;q)_inf needs {count} factors > max_terms={trunc.max_terms} (|a|={amax}, q={q})")

    log_space = q >= setting("pochhammer", "log_space_q") and _is_real_nonnegative(a) and amax < 1
    acc = np.zeros(a.shape) if log_space else np.ones(a.shape, dtype=complex)
    for start in range(0, count, 128):
        qk = q ** np.arange(start, min(start + 128, count))
        terms = np.multiply.outer(a, qk)
        if log_space:
            acc = acc + np.sum(np.log1p(-terms.real), axis=-1)
        else:
            acc = acc * np.prod(1.0 - terms, axis=-1)

    value = np.exp(acc).astype(complex) if log_space else acc
    remainder = 2.0 * amax * q ** count / (1.0 - q)
    error = np.abs(value) * math.expm1(remainder)
    logger.debug("(a;q)_inf direct product: %d factors, |a|max=%.3g", count, amax)
    return value, error, count


def _log_series(a: np.ndarray, amax: float, q: float, trunc: Truncation) -> Tuple[np.ndarray, np.ndarray, int]:
    """log (a;q)_inf = -sum_{n>=1} a**n / (n (1 - q**n)) for |a| < 1."""
    total = np.zeros(a.shape, dtype=complex)
    power = np.ones(a.shape, dtype=complex)
    n = 0
    bound = INF
    while bound > trunc.tol:
        n += 1
        if n > trunc.max_terms:
            raise TruncationError(f"log-series for (a;q)_inf exceeded max_terms={trunc.max_terms}")
        power = power * a
        total = total - power / (n * -math.expm1(n * math.log(q)))
        nxt = n + 1
        bound = amax ** nxt / (nxt * -math.expm1(nxt * math.log(q)) * (1.0 - amax))

    value = np.exp(total)
    logger.debug("(a;q)_inf log-series: %d terms, |a|max=%.3g", n, amax)
    return value, np.abs(value) * math.expm1(bound), n


def qpochhammer(a: Number, q: float, n: ExtendedInt = INF, trunc: Optional[Truncation] = None) -> SeriesValue:
    """The q-Pochhammer symbol (a;q)_n.

    Args:
        a (complex): base argument
        q (float): deformation parameter in (0, 1)
        n (int | INF): non-negative or negative integer, or INF for the infinite product
        trunc (Truncation): stopping rule of the infinite product

    Returns:
        (SeriesValue) the product; finite n carries a zero error estimate.

    Raises:
        DomainError: q outside (0, 1).
        PoleError: negative n with a vanishing factor in (a q**n; q)_{-n}.

    """
    check_q(q)
    if n == INF:
        value, error, count = qpochhammer_inf_array(a, q, trunc)
        return SeriesValue(complex(value), float(error), count)

    if int(n) != n:
        raise ValueError(f"Pochhammer index must be an integer or INF: {n}")
    n = int(n)
    if n >= 0:
        return SeriesValue(pochhammer_value(a, q, n), 0.0, n)

    m = -n
    denominator = pochhammer_value(a * q ** (-m), q, m)
    if abs(denominator) <= setting("pochhammer", "pole_atol"):
        raise PoleError(f"(a;q)_{n} has a pole: a={a}, q={q}")
    return SeriesValue(1.0 / denominator, 0.0, m)


def qpochhammer_multi(args: Sequence[Number], q: float, n: ExtendedInt = INF,
                      trunc: Optional[Truncation] = None) -> SeriesValue:
    """The multi-argument symbol (a1, ..., ar; q)_n as a product of single symbols."""
    value = 1.0 + 0j
    error = 0.0
    terms = 0
    for a in args:
        part = qpochhammer(a, q, n, trunc)
        error = abs(value) * part.abs_error_estimate + abs(part.value) * error + error * part.abs_error_estimate
        value *= part.value
        terms = max(terms, part.terms_used)
    return SeriesValue(value, error, terms)


def qcoeff_recip(n: int, q: float) -> float:
    """1/(q;q)_n with the convention 1/(q;q)_n = 0 for n < 0."""
    check_q(q)
    if n < 0:
        return 0.0
    return 1.0 / pochhammer_value(q, q, int(n)).real


def qnumber(n: int, q: float) -> float:
    """[n]_q = (1 - q**n)/(1 - q)."""
    check_q(q)
    check_index(n)
    return math.expm1(n * math.log(q)) / math.expm1(math.log(q))


def qfactorial(n: int, q: float) -> float:
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    check_index(n)
    return math.prod(qnumber(k, q) for k in range(1, n + 1))


def qbinomial(n: int, k: int, q: float) -> float:
    """Gaussian binomial [n choose k]_q for 0 <= k <= n."""
    check_index(n)
    check_index(k, "k")
    if k > n:
        raise ValueError(f"q-binomial needs 0 <= k <= n: n={n}, k={k}")
    return math.prod(qnumber(n - k + i, q) / qnumber(i, q) for i in range(1, k + 1))


def qbinomial_table(n_max: int, q: float) -> np.ndarray:
    """Lower-triangular table T[n, k] = [n choose k]_q built by the q-Pascal rule."""
    check_q(q)
    table = np.zeros((n_max + 1, n_max + 1))
    table[:, 0] = 1.0
    for n in range(1, n_max + 1):
        k = np.arange(1, n + 1)
        table[n, 1:n + 1] = table[n - 1, 0:n] + q ** k * table[n - 1, 1:n + 1]
    return table


def qbinomial_general(s: Number, k: int, q: float) -> complex:
    """[s choose k]_q = (-1)**k q**(k s - k(k-1)/2) (q**-s;q)_k/(q;q)_k for complex s."""
    check_index(k, "k")
    check_q(q)
    return ((-1) ** k * q ** (k * s - k * (k - 1) / 2)
            * pochhammer_value(q ** (-s), q, k) / pochhammer_value(q, q, k))


def qexp(xi: Number, q: float, trunc: Optional[Truncation] = None) -> SeriesValue:
    """The q-exponential e_q(xi) = sum xi**n/[n]_q! = 1/((1-q)xi;q)_inf.

    Both representations are evaluated and must agree within their combined error bounds.

    Args:
        xi (complex): argument with |xi| < 1/(1-q)
        q (float): deformation parameter in (0, 1)
        trunc (Truncation): stopping rule for both representations

    Returns:
        (SeriesValue) the series value.

    Raises:
        DomainError: xi outside the disk of convergence.
        TruncationError: the series did not settle within max_terms.

    """
    check_q(q)
    trunc = trunc or DEFAULT_TRUNCATION
    xi = complex(xi)
    ratio_limit = (1.0 - q) * abs(xi)
    if ratio_limit >= 1.0:
        raise DomainError(f"e_q(xi) outside domain of convergence: |xi|={abs(xi)} >= 1/(1-q)={1 / (1 - q)}")

    total = 0j
    magnitude = 0.0
    term = 1.0 + 0j
    n = 0
    while True:
        total += term
        magnitude += abs(term)
        n += 1
        if n > trunc.max_terms:
            raise TruncationError(f"e_q({xi}) did not converge within {trunc.max_terms} terms")
        term = term * xi / qnumber(n, q)
        ratio = abs(xi) / qnumber(n + 1, q)
        if ratio < 1.0:
            tail = abs(term) / (1.0 - ratio)
            if tail <= trunc.tol * max(1.0, abs(total)):
                break

    series_error = tail + 4 * EPS * magnitude
    product = qpochhammer((1.0 - q) * xi, q, INF, trunc)
    if product.value == 0:
        raise PoleError(f"e_q({xi}) product form vanishes")
    product_value = 1.0 / product.value
    product_error = (product.abs_error_estimate / abs(product.value) ** 2
                     + 4 * EPS * (product.terms_used + 8 + abs(xi)) * abs(product_value))

    if abs(total - product_value) > series_error + product_error + 64 * EPS * max(1.0, abs(total)):
        logger.warning("e_q series/product disagreement at xi=%s: %s vs %s", xi, total, product_value)
        raise QCoherentError(f"e_q({xi}) series and product forms disagree: {total} vs {product_value}")

    logger.debug("e_q(%s): %d terms", xi, n)
    return SeriesValue(total, series_error, n)
