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
    QCoherentPy/kernels.py

    Reproducing kernels of the coefficient spaces: truncated series, the pre-Heine
    intermediate form, the closed form, the Arik-Coon kernel and the classical limit.

"""
# Python Dependencies
import logging
import math
import numpy as np

from scipy.linalg import eigvalsh
from typing import Optional, Sequence

from .config import setting
from .cstates import PhaseSpacePoint, coeff_growth_constant, coefficient
from .errors import DomainError, TruncationError
from .qcore import (
    DEFAULT_TRUNCATION, EPS, QDeformation, SeriesValue, Truncation, pochhammer_value, qexp, qpochhammer,
    qpochhammer_inf_array
)
from .qpoly import laguerre0
from .qseries import phi32_terminating
from .utils import check_index, pairwise_sum


logger = logging.getLogger(__name__)


def _points(z: complex, w: complex, m: int, q: float):
    qd = QDeformation.from_q(q)
    return PhaseSpacePoint(z, m, qd).check_domain(), PhaseSpacePoint(w, m, qd).check_domain()


def kernel_qm_series(z: complex, w: complex, m: int, q: float, trunc: Optional[Truncation] = None) -> SeriesValue:
    """K_(q,m)(z, w) = sum_j Phi_j(z) conj(Phi_j(w)), truncated by the product of growth bounds.

    Args:
        z (complex): first label, inside C_(q,m)
        w (complex): second label, inside C_(q,m)
        m (int): Landau-level index
        q (float): deformation parameter
        trunc (Truncation): stopping rule

    Returns:
        (SeriesValue) the kernel value.

    Raises:
        DomainError: z or w outside C_(q,m).
        TruncationError: more than max_terms terms would be needed.

    """
    check_index(m, "m")
    trunc = trunc or DEFAULT_TRUNCATION
    pz, pw = _points(z, w, m, q)
    rho = pz.growth_ratio * pw.growth_ratio
    if rho == 0.0:
        count = m + 1
        tail = 0.0
    else:
        c = coeff_growth_constant(pz) * coeff_growth_constant(pw)
        count = m + 1
        if c > trunc.tol * (1.0 - rho):
            count = max(count, int(math.ceil(math.log(trunc.tol * (1.0 - rho) / c) / math.log(rho))))
        tail = c * rho ** count / (1.0 - rho)
    if count > trunc.max_terms:
        raise TruncationError(f"Kernel series needs {count} terms > max_terms={trunc.max_terms}")

    terms = np.array([coefficient(j, m, z, q) * np.conj(coefficient(j, m, w, q)) for j in range(count)])
    logger.debug("kernel series: %d terms, m=%d", count, m)
    return SeriesValue(complex(pairwise_sum(terms)), tail + 4 * EPS * float(np.sum(np.abs(terms))), count)


def kernel_qm_closed(z: complex, w: complex, m: int, q: float) -> complex:
    """Closed form of K_(q,m)(z, w) with a terminating 3phi2.

    (q**(1-m) a;q)_m / (q**m (q**-m l;q)_inf)
        * 3phi2(q**-m, z/w, q conj(z)/conj(w); q**(1-m) a, q; q, q(1-q)|w|**2)
    with a = (1-q)|z|**2 and l = (1-q) z conj(w). For |w| below w_min max(1, |z|) the series is used.

    """
    check_index(m, "m")
    z = complex(z)
    w = np.asarray(w, dtype=complex)
    small = np.abs(w) < setting("kernel", "w_min") * max(1.0, abs(z))
    if w.ndim == 0 and small:
        return kernel_qm_series(z, complex(w), m, q).value

    safe = np.where(small, 1.0, w)
    alpha = (1.0 - q) * abs(z) ** 2
    infinite, _, _ = qpochhammer_inf_array(q ** -m * (1.0 - q) * z * np.conj(safe), q)
    prefactor = pochhammer_value(q ** (1 - m) * alpha, q, m) / (q ** m * infinite)
    ratio = z / safe
    series = phi32_terminating(m, ratio, q * np.conj(ratio), q ** (1 - m) * alpha, q, q,
                               q * (1.0 - q) * np.abs(safe) ** 2)
    value = np.asarray(prefactor * series, dtype=complex)
    for index in np.argwhere(small):
        value[tuple(index)] = kernel_qm_series(z, complex(w[tuple(index)]), m, q).value
    return value if value.ndim else complex(value)


def kernel_qm_intermediate(z: complex, w: complex, m: int, q: float) -> complex:
    """The form of K_(q,m)(z, w) before the finite Heine transformation.

    (q**(1-m) a;q)_m (q w/z;q)_m / (q**m (q**-m l;q)_inf (q;q)_m)
        * 3phi2(q**-m, q**-m l, z/w; q**(1-m) a, q**-m z/w; q, q)

    Raises:
        DomainError: z or w is zero.
        PoleError: q**(k-m) z/w = 1 for some k < m.

    """
    check_index(m, "m")
    if z == 0 or w == 0:
        raise DomainError(f"Intermediate kernel form needs nonzero labels: z={z}, w={w}")
    alpha = (1.0 - q) * abs(z) ** 2
    lam = (1.0 - q) * z * complex(w).conjugate()
    ratio = z / w
    prefactor = (pochhammer_value(q ** (1 - m) * alpha, q, m) * pochhammer_value(q / ratio, q, m)
                 / (q ** m * qpochhammer(q ** -m * lam, q).value * pochhammer_value(q, q, m).real))
    series = phi32_terminating(m, q ** -m * lam, ratio, q ** (1 - m) * alpha, q ** -m * ratio, q, q)
    return complex(prefactor * series)


def kernel_classical(z, w, m: int):
    """K_m(z, w) = exp(z conj(w)) L_m(|z - w|**2)."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    value = np.exp(z * np.conj(w)) * laguerre0(m, np.abs(z - w) ** 2)
    return value if np.ndim(value) else complex(value)


def arik_coon_kernel(z: complex, w: complex, q: float) -> complex:
    """e_q(z conj(w)), the m = 0 kernel."""
    return qexp(z * complex(w).conjugate(), q).value


def gram_matrix(points: Sequence[complex], m: int, q: float) -> np.ndarray:
    """Matrix [K(z_i, z_k)] of the closed kernel on a list of labels."""
    size = len(points)
    gram = np.empty((size, size), dtype=complex)
    for i, zi in enumerate(points):
        for k, zk in enumerate(points):
            gram[i, k] = kernel_qm_closed(zi, zk, m, q)
    return gram


def min_eigenvalue(gram: np.ndarray) -> float:
    """Smallest eigenvalue of the hermitian part of a Gram matrix."""
    return float(eigvalsh((gram + gram.conj().T) / 2)[0])
