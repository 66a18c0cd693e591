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
    QCoherentPy/transforms.py

    Coherent-state transforms by real-line quadrature, their expansion form on the
    coefficient space, and the classical Bargmann targets.

"""
# Python Dependencies
import logging
import math
import numpy as np

from collections import OrderedDict
from threading import Lock
from typing import Callable, Optional, Sequence, Tuple, Union

from .config import setting
from .cstates import (
    PhaseSpacePoint, coeff_growth_constant, coefficient, g_factor, phi_bound, series_length, state_kernel
)
from .errors import TruncationError
from .oscillator import (
    AnalyticFunction, QuadratureRule, integrate_real_line, integrate_sampled, quadrature_rule, rs_eigenfunctions
)
from .qcore import DEFAULT_TRUNCATION, QDeformation, SeriesValue, Truncation, qpochhammer, qpochhammer_inf_array
from .qpoly import hermite
from .utils import Constants, check_index, pairwise_sum


logger = logging.getLogger(__name__)

LineFunction = Union[AnalyticFunction, Callable]

_cache: "OrderedDict[Tuple, Tuple[np.ndarray, np.ndarray]]" = OrderedDict()
_cache_lock = Lock()


def clear_cache() -> None:
    """Drops every cached node-level transform kernel."""
    with _cache_lock:
        _cache.clear()


def _kernel_on_nodes(p: PhaseSpacePoint, rule: QuadratureRule) -> Tuple[np.ndarray, np.ndarray]:
    key = (p.z, p.m, p.q, rule.key)
    with _cache_lock:
        if key in _cache:
            _cache.move_to_end(key)
            return _cache[key]

    entry = (state_kernel(p.z, rule.nodes, p.m, p.qd), state_kernel(p.z, rule.companion_nodes, p.m, p.qd))
    with _cache_lock:
        _cache[key] = entry
        while len(_cache) > setting("cache", "max_entries"):
            _cache.popitem(last=False)
    return entry


def cst(f: LineFunction, p: PhaseSpacePoint, rule: QuadratureRule) -> complex:
    """The coherent-state transform B_m f(z) as an integral against the closed kernel.

    Args:
        f (AnalyticFunction | Callable): vectorized function on the real line with Gaussian decay
        p (PhaseSpacePoint): label inside C_(q,m)
        rule (QuadratureRule): real-line quadrature

    Returns:
        (complex) the transform value.

    Raises:
        DomainError: z outside C_(q,m).
        QuadratureError: the rule and its companion disagree.

    """
    p.check_domain()
    kernel, companion = _kernel_on_nodes(p, rule)
    return integrate_sampled(kernel * f(rule.nodes), companion * f(rule.companion_nodes), rule).value


def cst0(f: LineFunction, z: complex, qd: QDeformation, rule: QuadratureRule) -> complex:
    """The m = 0 transform with its own integrand.

    pi**-1/4 / (iz sqrt(q(1-q));q)_inf * int exp(-xi**2/2) f(xi) / (-iz sqrt(1-q) exp(2i kappa xi);q)_inf

    """
    PhaseSpacePoint(z, 0, qd).check_domain()
    q, kappa = qd.q, qd.kappa
    fixed = qpochhammer(1j * z * math.sqrt(q * (1.0 - q)), q).value

    def integrand(xi):
        moving, _, _ = qpochhammer_inf_array(-1j * z * math.sqrt(1.0 - q) * np.exp(2j * kappa * xi), q)
        return np.exp(-xi * xi / 2) * f(xi) / moving

    return Constants.pi_quarter / fixed * integrate_real_line(integrand, rule).value


def bargmann_classical(f: Callable, z: complex, rule: QuadratureRule) -> complex:
    """pi**-1/4 int exp(-xi**2/2 + sqrt(2) xi z - z**2/2) f(xi) dxi."""
    z = complex(z)
    value = integrate_real_line(lambda xi: np.exp(-xi * xi / 2 + math.sqrt(2) * xi * z - z * z / 2) * f(xi), rule)
    return Constants.pi_quarter * value.value


def polyanalytic_bargmann(f: Callable, z: complex, m: int, rule: QuadratureRule, convention: str = "sqrt2") -> complex:
    """The m-true-polyanalytic Bargmann transform.

    (-1)**m (2**m m! sqrt(pi))**-1/2 int exp(-z**2/2 - xi**2/2 + sqrt(2) xi z) H_m(xi - s) f(xi) dxi
    where s = (z + conj(z))/sqrt(2), or (z + conj(z))/2 with convention="half".

    Raises:
        ValueError: unknown convention.

    """
    check_index(m, "m")
    z = complex(z)
    if convention == "sqrt2":
        shift = 2 * z.real / math.sqrt(2)
    elif convention == "half":
        shift = z.real
    else:
        raise ValueError(f"Unknown argument convention: {convention!r}")

    def integrand(xi):
        return np.exp(-z * z / 2 - xi * xi / 2 + math.sqrt(2) * xi * z) * hermite(m, xi - shift) * f(xi)

    norm = (-1) ** m * (2.0 ** m * math.factorial(m) * Constants.sqrt_pi) ** -0.5
    return norm * integrate_real_line(integrand, rule).value


def range_function(coeffs: Sequence[complex], m: int, q: float) -> Callable:
    """z -> sum_j c_j Phi_j^(q,m)(z), vectorized over z."""
    coeffs = np.asarray(coeffs, dtype=complex)

    def fn(z):
        z = np.asarray(z, dtype=complex)
        total = np.zeros(z.shape, dtype=complex)
        for j, c in enumerate(coeffs):
            if c != 0:
                total = total + c * coefficient(j, m, z, q)
        return total

    return fn


def cst_expansion(coeffs: Sequence[complex], p: PhaseSpacePoint) -> complex:
    """sum_j c_j Phi_j(z); the transform of a function whose pairings with phi_j are c_j."""
    return complex(range_function(coeffs, p.m, p.q)(p.z))


def expansion_coefficients(f: Callable, rule: QuadratureRule, j_max: int, qd: QDeformation,
                           conjugate: bool = False) -> np.ndarray:
    """The pairings (int f phi_j dxi) for j <= j_max from one evaluation on the nodes.

    With conjugate set, the sesquilinear pairings (int f conj(phi_j) dxi), which recover c_j from
    sum_k c_k phi_k.

    """
    check_index(j_max, "j_max")
    values = np.asarray(f(rule.nodes), dtype=complex)
    companion = np.asarray(f(rule.companion_nodes), dtype=complex)
    rows = rs_eigenfunctions(j_max, rule.nodes, qd)
    companion_rows = rs_eigenfunctions(j_max, rule.companion_nodes, qd)
    if conjugate:
        rows, companion_rows = np.conj(rows), np.conj(companion_rows)
    return np.array([integrate_sampled(rows[j] * values, companion_rows[j] * companion, rule).value
                     for j in range(j_max + 1)])


def cst_series(f: Callable, p: PhaseSpacePoint, rule: Optional[QuadratureRule] = None,
               trunc: Optional[Truncation] = None) -> SeriesValue:
    """sum_j (int f phi_j) Phi_j(z), the cross-check path of cst.

    The number of levels follows from |int f phi_j| <= B int |f| and |Phi_j| <= C rho**j. Without
    a rule, one resolving every level used is built.

    """
    p.check_domain()
    trunc = trunc or DEFAULT_TRUNCATION
    probe = rule or quadrature_rule(p.qd, 0, p.m)
    mass = float(pairwise_sum(probe.weights * np.abs(f(probe.nodes))))
    c = coeff_growth_constant(p) * phi_bound(0.0, p.q) * mass
    count = series_length(p, c, trunc.tol) if c > 0 else p.m + 1
    if count > trunc.max_terms:
        raise TruncationError(f"Transform series needs {count} terms > max_terms={trunc.max_terms}")
    rule = rule or quadrature_rule(p.qd, count, p.m)
    pairings = expansion_coefficients(f, rule, count - 1, p.qd)
    terms = pairings * np.array([coefficient(j, p.m, p.z, p.q) for j in range(count)])
    tail = 0.0 if p.growth_ratio == 0 else c * p.growth_ratio ** count / (1.0 - p.growth_ratio)
    logger.debug("transform series: %d levels at z=%s", count, p.z)
    return SeriesValue(complex(pairwise_sum(terms)), tail, count)
