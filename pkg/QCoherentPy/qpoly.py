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
    QCoherentPy/qpoly.py

    Polynomial families: Wall, Rogers-Szego, Stieltjes-Wigert, Al-Salam-Chihara,
    2D q-Hermite and their classical counterparts.

"""
# Python Dependencies
import logging
import math
import numpy as np

from dataclasses import dataclass
from scipy.special import comb, factorial

from .config import setting
from .errors import PoleError
from .qcore import Number, pochhammer_value, qbinomial, qbinomial_table
from .qseries import phi21_terminating, phi32_terminating
from .utils import check_index, check_q


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolynomialEval:
    """A polynomial value together with its degree."""
    value: complex
    degree: int

    def __post_init__(self):
        check_index(self.degree, "degree")


def _pole_free(value, q: float, count: int, message: str) -> None:
    factors = 1.0 - np.multiply.outer(np.asarray(value, dtype=complex), q ** np.arange(count))
    if np.any(np.abs(factors) <= setting("pochhammer", "pole_atol")):
        raise PoleError(message)


def wall(n: int, x, a: Number, q: float):
    """Wall polynomial P_n(x;a|q) = 2phi1(q**-n, 0; aq; q, qx).

    Args:
        n (int): degree
        x (complex | ndarray): argument
        a (complex): parameter
        q (float): deformation parameter

    Returns:
        (complex | ndarray) P_n(x;a|q)

    Raises:
        PoleError: aq*q**k = 1 for some k < n (invalid Wall parameter).

    """
    check_q(q)
    check_index(n)
    _pole_free(a * q, q, n, f"Invalid Wall parameter: a={a}, q={q}, n={n}")
    return phi21_terminating(n, 0.0, a * q, q, q * np.asarray(x, dtype=complex))


def wall_eval(n: int, x, a: Number, q: float) -> PolynomialEval:
    """wall() bundled as a PolynomialEval."""
    return PolynomialEval(complex(wall(n, x, a, q)), n)


def wall_reduced(n: int, x, a: Number, q: float):
    """P_n(x;a|q) through ((x q**(1-n);q)_n/(aq;q)_n) 2phi1(q**-n, 0; x q**(1-n); q, a q**(n+1)).

    Raises:
        PoleError: x q**(1-n+k) = 1 for some k < n, or aq is an invalid Wall parameter.

    """
    check_q(q)
    check_index(n)
    x = np.asarray(x, dtype=complex)
    c = x * q ** (1 - n)
    _pole_free(c, q, n, f"Reduced Wall form has a pole: x={x}, q={q}, n={n}")
    _pole_free(a * q, q, n, f"Invalid Wall parameter: a={a}, q={q}, n={n}")
    prefactor = pochhammer_value(c, q, n) / pochhammer_value(a * q, q, n)
    return prefactor * phi21_terminating(n, 0.0, c, q, a * q ** (n + 1))


def wall_lattice(n: int, l: int, a: Number, q: float) -> complex:
    """P_n(q**l;a|q) on the lattice, free of the removable poles of the reduced form.

    Only the terms k >= n - l survive, and each is a product of factors in (0, 1) times a
    rapidly decaying power, so the sum does not cancel catastrophically at small l.

    """
    check_q(q)
    check_index(n)
    check_index(l, "l")
    _pole_free(a * q, q, n, f"Invalid Wall parameter: a={a}, q={q}, n={n}")
    total = 0j
    for k in range(max(0, n - l), n + 1):
        total += (pochhammer_value(q ** -n, q, k) * pochhammer_value(q ** (l + 1 - n + k), q, n - k)
                  * (a * q ** (n + 1)) ** k / pochhammer_value(q, q, k))
    return total / pochhammer_value(a * q, q, n)


def wall_regularized(n: int, x, a: Number, q: float):
    """(aq;q)_n P_n(x;a|q), a polynomial in both x and a with no poles."""
    check_q(q)
    check_index(n)
    x = np.asarray(x, dtype=complex)
    total = np.zeros(x.shape, dtype=complex)
    for k in range(n + 1):
        total = total + (pochhammer_value(q ** -n, q, k) * (q * x) ** k
                         * pochhammer_value(a * q ** (k + 1), q, n - k) / pochhammer_value(q, q, k))
    return total if total.ndim else complex(total)


def wall_negative_parameter(n: int, big_n: int, x, q: float):
    """Right side of the P_n(x; q**-N|q) relation, regularized by (q**(1-N);q)_n.

    Equals wall_regularized(n, x, q**-N, q) for 0 <= N <= n:
    x**N (-1)**N q**(N(N+1-2n)/2) (q**(N+1);q)_{n-N} P_{n-N}(x; q**N|q).

    """
    check_index(big_n, "N")
    if big_n > n:
        raise ValueError(f"Relation requires N <= n: N={big_n}, n={n}")
    x = np.asarray(x, dtype=complex)
    return (x ** big_n * (-1) ** big_n * q ** (big_n * (big_n + 1 - 2 * n) / 2)
            * pochhammer_value(q ** (big_n + 1), q, n - big_n) * wall(n - big_n, x, q ** big_n, q))


def rogers_szego(n: int, xi, q: float):
    """Rogers-Szego polynomial H_n(xi;q) = sum_k [n choose k]_q (q**-1/2 xi)**k."""
    check_q(q)
    check_index(n)
    t = np.asarray(xi, dtype=complex) / math.sqrt(q)
    total = np.zeros(t.shape, dtype=complex)
    for k in range(n, -1, -1):
        total = total * t + qbinomial(n, k, q)
    return total if total.ndim else complex(total)


def rogers_szego_all(n_max: int, xi, q: float) -> np.ndarray:
    """Rows H_0 .. H_{n_max} evaluated at every xi; shape (n_max + 1, *xi.shape)."""
    check_q(q)
    t = np.asarray(xi, dtype=complex) / math.sqrt(q)
    powers = np.power.outer(t, np.arange(n_max + 1))
    return np.moveaxis(powers @ qbinomial_table(n_max, q).T, -1, 0)


def stieltjes_wigert(n: int, x, q: float):
    """Stieltjes-Wigert polynomial s_n(x;q) = sum_k [n choose k]_q q**(k**2) x**k."""
    check_q(q)
    check_index(n)
    x = np.asarray(x, dtype=complex)
    total = sum(qbinomial(n, k, q) * q ** (k * k) * x ** k for k in range(n + 1))
    return complex(total) if np.ndim(total) == 0 else total


def stieltjes_wigert_inverse(n: int, x, q: float):
    """s_n(x;1/q) written with q in (0, 1): sum_k [n choose k]_q q**(-n k) x**k."""
    check_q(q)
    check_index(n)
    x = np.asarray(x, dtype=complex)
    total = sum(qbinomial(n, k, q) * q ** (-n * k) * x ** k for k in range(n + 1))
    return complex(total) if np.ndim(total) == 0 else total


def al_salam_chihara_expanded(m: int, u, alpha, beta, q: float):
    """Q_m(x;alpha,beta|q), x = (u + 1/u)/2, from the generating function; no division by alpha.

    Q_m = (q;q)_m sum_{k+l+r+s=m} u**(k-l) (-1)**(r+s) q**(C(r,2)+C(s,2)) alpha**r beta**s
    / ((q;q)_k (q;q)_l (q;q)_r (q;q)_s).

    """
    check_q(q)
    check_index(m, "m")
    u = np.asarray(u, dtype=complex)
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.asarray(beta, dtype=complex)
    recip = [1.0 / pochhammer_value(q, q, k).real for k in range(m + 1)]
    shape = np.broadcast(u, alpha, beta).shape

    oscillating = []
    weights = []
    for p in range(m + 1):
        osc = np.zeros(shape, dtype=complex)
        wgt = np.zeros(shape, dtype=complex)
        for k in range(p + 1):
            osc = osc + u ** (2 * k - p) * recip[k] * recip[p - k]
            wgt = wgt + (q ** (k * (k - 1) / 2 + (p - k) * (p - k - 1) / 2)
                         * alpha ** k * beta ** (p - k) * recip[k] * recip[p - k])
        oscillating.append(osc)
        weights.append((-1) ** p * wgt)

    total = sum(oscillating[p] * weights[m - p] for p in range(m + 1))
    total = pochhammer_value(q, q, m).real * total
    return total if np.ndim(total) else complex(total)


def al_salam_chihara(m: int, u, alpha, beta, q: float):
    """Al-Salam-Chihara polynomial Q_m(x;alpha,beta|q) with x = (u + 1/u)/2.

    Uses ((alpha beta;q)_m/alpha**m) 3phi2(q**-m, alpha u, alpha/u; alpha beta, 0; q, q) when
    |alpha| is at least the configured threshold, and the division-free expansion otherwise.

    Args:
        m (int): degree
        u (complex | ndarray): nonzero, with x = (u + 1/u)/2
        alpha (complex | ndarray): parameter
        beta (complex | ndarray): parameter
        q (float): deformation parameter

    Returns:
        (complex | ndarray) Q_m

    Raises:
        ValueError: u = 0.
        PoleError: alpha*beta*q**k = 1 for some k < m.

    """
    check_q(q)
    check_index(m, "m")
    u = np.asarray(u, dtype=complex)
    alpha = np.asarray(alpha, dtype=complex)
    beta = np.asarray(beta, dtype=complex)
    if np.any(u == 0):
        raise ValueError("Al-Salam-Chihara parameter u must be nonzero")
    if m == 0:
        shape = np.broadcast(u, alpha, beta).shape
        return np.ones(shape, dtype=complex) if shape else 1.0 + 0j

    small = np.abs(alpha) < setting("asc", "expanded_below")
    result = None
    if np.any(small):
        result = al_salam_chihara_expanded(m, u, alpha, beta, q)
    if not np.all(small):
        safe = np.where(small, 1.0, alpha)
        ab = safe * beta
        _pole_free(ab, q, m, f"Al-Salam-Chihara pole: alpha*beta={ab}, q={q}, m={m}")
        series = phi32_terminating(m, safe * u, safe / u, ab, 0.0, q, q)
        value = pochhammer_value(ab, q, m) / safe ** m * series
        result = value if result is None else np.where(small, result, value)

    return result if np.ndim(result) else complex(result)


def al_salam_chihara_scaled(m: int, s, alpha, beta, q: float):
    """tau**-m Q_m(tau s; 2 tau alpha, 2 tau beta|q) with tau = sqrt((1-q)/(2 q**(m-1))).

    Tends to the Hermite polynomial H_m(s - alpha - beta) as q -> 1.

    """
    check_q(q)
    tau = math.sqrt((1.0 - q) / (2.0 * q ** (m - 1)))
    x = tau * np.asarray(s, dtype=complex)
    u = x + 1j * np.sqrt(1.0 - x * x + 0j)
    return al_salam_chihara(m, u, 2 * tau * np.asarray(alpha), 2 * tau * np.asarray(beta), q) / tau ** m


def qhermite2d(m: int, j: int, z, zeta, q: float):
    """2D q-Hermite polynomial H_{m,j}(z, zeta|q).

    sum_{k <= min(m, j)} [m,k]_q [j,k]_q (-1)**k q**(k(k-1)/2) (q;q)_k z**(m-k) zeta**(j-k)

    """
    check_q(q)
    check_index(m, "m")
    check_index(j, "j")
    z = np.asarray(z, dtype=complex)
    zeta = np.asarray(zeta, dtype=complex)
    total = 0j
    for k in range(min(m, j) + 1):
        total = total + (qbinomial(m, k, q) * qbinomial(j, k, q) * (-1) ** k * q ** (k * (k - 1) / 2)
                         * pochhammer_value(q, q, k).real * z ** (m - k) * zeta ** (j - k))
    return total if np.ndim(total) else complex(total)


def hermite(n: int, xi):
    """Physicists' Hermite polynomial H_n(xi) = n! sum_k (-1)**k (2 xi)**(n-2k)/(k!(n-2k)!)."""
    check_index(n)
    xi = np.asarray(xi, dtype=complex)
    total = sum((-1) ** k * (2 * xi) ** (n - 2 * k) / (factorial(k, exact=True) * factorial(n - 2 * k, exact=True))
                for k in range(n // 2 + 1))
    total = factorial(n, exact=True) * total
    return total if np.ndim(total) else complex(total)


def hermite_function(j: int, x):
    """Classical oscillator eigenfunction (sqrt(pi) 2**j j!)**-1/2 H_j(x) exp(-x**2/2)."""
    check_index(j, "j")
    x = np.asarray(x, dtype=complex)
    norm = (math.sqrt(math.pi) * 2.0 ** j * math.factorial(j)) ** -0.5
    return norm * hermite(j, x) * np.exp(-x * x / 2)


def laguerre0(m: int, x):
    """Laguerre polynomial L_m^(0)(x) = sum_k (-1)**k C(m,k) x**k/k!."""
    check_index(m, "m")
    x = np.asarray(x, dtype=complex)
    total = sum((-1) ** k * comb(m, k, exact=True) * x ** k / math.factorial(k) for k in range(m + 1))
    return total if np.ndim(total) else complex(total)


def complex_hermite(m: int, j: int, z, zeta):
    """Classical 2D complex Hermite polynomial H_{m,j}(z, zeta)."""
    check_index(m, "m")
    check_index(j, "j")
    z = np.asarray(z, dtype=complex)
    zeta = np.asarray(zeta, dtype=complex)
    total = sum((-1) ** k * math.factorial(k) * comb(m, k, exact=True) * comb(j, k, exact=True)
                * z ** (m - k) * zeta ** (j - k) for k in range(min(m, j) + 1))
    return total if np.ndim(total) else complex(total)
