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
    QCoherentPy/cstates.py

    Generalized q-coherent states: the coefficients Phi_j, the normalization factor, the
    wavefunction in series and closed form, the discrete radial measure and inner products
    on the label domain.

"""
# Python Dependencies
import logging
import math
import numpy as np

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .config import setting
from .errors import DomainError, TruncationError
from .oscillator import rs_eigenfunctions
from .qcore import (
    DEFAULT_TRUNCATION, EPS, INF, QDeformation, SeriesValue, Truncation,
    log_qpochhammer_real, pochhammer_value, qexp, qpochhammer, qpochhammer_inf_array
)
from .qpoly import al_salam_chihara, complex_hermite, qhermite2d, wall, wall_lattice
from .utils import Constants, arg, check_index, pairwise_sum


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhaseSpacePoint:
    """A label z with its Landau-level index m.

    The domain (1-q)|z|**2 < q**m is checked by the operations that construct states, not
    here, so coefficients can still be studied outside it.

    """
    z: complex
    m: int
    qd: QDeformation

    def __post_init__(self):
        check_index(self.m, "m")
        object.__setattr__(self, "z", complex(self.z))

    @property
    def q(self) -> float:
        return self.qd.q

    def in_domain(self) -> bool:
        return (1.0 - self.q) * abs(self.z) ** 2 < self.q ** self.m

    def check_domain(self) -> "PhaseSpacePoint":
        if not self.in_domain():
            raise DomainError(f"z={self.z} is outside C_(q,m): (1-q)|z|^2 >= q^m for q={self.q}, m={self.m}")
        return self

    @property
    def growth_ratio(self) -> float:
        """rho = sqrt((1-q)|z|**2/q**m); below 1 exactly on the domain."""
        return math.sqrt((1.0 - self.q) * abs(self.z) ** 2 / self.q ** self.m)


@dataclass(frozen=True)
class RadialMeasure:
    """Discrete radial measure: masses w_l at radii r_l = q**(l/2)/sqrt(1-q), l < count."""
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    count: int
    q: float
    tail_bound: float = 0.0


def _wall_values(n: int, x, a: float, q: float):
    """P_n(x;a|q), switching to the lattice form wherever x sits on the lattice q**l."""
    x = np.asarray(x, dtype=float)
    values = np.asarray(wall(n, x, a, q), dtype=complex)
    if n == 0 or x.size == 0:
        return values
    with np.errstate(divide="ignore", invalid="ignore"):
        level = np.rint(np.log(x) / math.log(q))
    on_lattice = np.isfinite(level) & (level >= 0)
    on_lattice &= np.abs(x - q ** np.where(on_lattice, level, 0)) <= 1e-12 * q ** np.where(on_lattice, level, 0)
    if np.any(on_lattice):
        values = np.array(values, dtype=complex)
        for l in np.unique(level[on_lattice]).astype(int):
            values[on_lattice & (level == l)] = wall_lattice(n, int(l), a, q)
    return values


def coefficient(j: int, m: int, z, q: float):
    """Phi_j^(q,m)(z) for scalar or array z.

    (-1)**n q**C(n,2) (sqrt(1-q)|z|)**d exp(-i(m-j) arg z) (q;q)_M
        / ((q;q)_d sqrt(q**(mj) (q;q)_m (q;q)_j)) P_n((1-q)|z|**2; q**d|q)
    with n = min(m, j), M = max(m, j), d = |m - j| and arg 0 = 0.

    """
    check_index(j, "j")
    check_index(m, "m")
    z = np.asarray(z, dtype=complex)
    n, big, d = min(m, j), max(m, j), abs(m - j)
    modulus = np.abs(z)
    phase = np.exp(-1j * (m - j) * arg(z))
    scale = ((-1) ** n * q ** (n * (n - 1) / 2) * pochhammer_value(q, q, big).real
             / (pochhammer_value(q, q, d).real
                * math.sqrt(q ** (m * j) * pochhammer_value(q, q, m).real * pochhammer_value(q, q, j).real)))
    radial = (math.sqrt(1.0 - q) * modulus) ** d * _wall_values(n, (1.0 - q) * modulus ** 2, q ** d, q)
    value = scale * radial * phase
    return value if np.ndim(value) else complex(value)


def coeff_phi(j: int, p: PhaseSpacePoint) -> complex:
    """Phi_j^(q,m)(z) through the Wall polynomial representation.

    Args:
        j (int): level index
        p (PhaseSpacePoint): label and Landau-level index

    Returns:
        (complex) Phi_j^(q,m)(z)

    """
    return coefficient(j, p.m, p.z, p.q)


def coeff_phi_hermite(j: int, p: PhaseSpacePoint) -> complex:
    """H_{m,j}(sqrt(1-q) z, sqrt(1-q) conj(z)|q)/sqrt(q**(mj) (q;q)_j (q;q)_m).

    This is the complex conjugate of coeff_phi.

    """
    q, m = p.q, p.m
    s = math.sqrt(1.0 - q)
    norm = math.sqrt(q ** (m * j) * pochhammer_value(q, q, j).real * pochhammer_value(q, q, m).real)
    return complex(qhermite2d(m, j, s * p.z, s * p.z.conjugate(), q)) / norm


def coeff_classical(j: int, m: int, z):
    """The q -> 1 target (m! j!)**-1/2 H_{m,j}(conj(z), z)."""
    z = np.asarray(z, dtype=complex)
    return complex_hermite(m, j, np.conj(z), z) / math.sqrt(math.factorial(m) * math.factorial(j))


def coeff_growth_constant(p: PhaseSpacePoint) -> float:
    """Measured C with |Phi_j(z)| <= C rho**j, taken over j <= m + probe with a safety factor."""
    rho = p.growth_ratio
    if rho == 0.0:
        return abs(coeff_phi(p.m, p))
    probe = p.m + setting("series", "growth_probe")
    ratios = [abs(coeff_phi(j, p)) / rho ** j for j in range(probe + 1)]
    return setting("series", "growth_safety") * max(ratios)


def normalization(m: int, x: float, q: float) -> float:
    """N_(q,m)(x) = q**-m (q**(1-m)(1-q)x;q)_m / (q**-m (1-q)x;q)_inf.

    Args:
        m (int): Landau-level index
        x (float): |z|**2, non-negative
        q (float): deformation parameter

    Returns:
        (float) the strictly positive normalization factor.

    Raises:
        DomainError: (1-q)x >= q**m.

    """
    check_index(m, "m")
    if x < 0 or (1.0 - q) * x >= q ** m:
        raise DomainError(f"|z|^2={x} is outside C_(q,m) for q={q}, m={m}")
    lam = (1.0 - q) * x
    finite = pochhammer_value(q ** (1 - m) * lam, q, m).real
    infinite = math.exp(log_qpochhammer_real(q ** -m * lam, q, INF))
    return q ** -m * finite / infinite


def phi_bound(xi: float, q: float) -> float:
    """Bound on |phi_j(xi)| uniform in j for real xi."""
    denominator = qpochhammer(math.sqrt(q), q).value.real * math.sqrt(qpochhammer(q, q).value.real)
    return Constants.pi_quarter * math.exp(-xi * xi / 2) / denominator


def series_length(p: PhaseSpacePoint, c: float, tol: float) -> int:
    """Smallest J > m whose tail c rho**J/(1-rho) is at most tol."""
    rho = p.growth_ratio
    if rho == 0.0:
        return p.m + 1
    if c <= tol * (1.0 - rho):
        return p.m + 1
    return max(p.m + 1, int(math.ceil(math.log(tol * (1.0 - rho) / c) / math.log(rho))))


def cs_wavefunction_series(p: PhaseSpacePoint, xi: float, trunc: Optional[Truncation] = None,
                           conjugate: bool = True) -> SeriesValue:
    """N**-1/2 sum_j conj(Phi_j(z)) phi_j(xi), truncated by the coefficient growth bound.

    Args:
        p (PhaseSpacePoint): label inside C_(q,m)
        xi (float): position
        trunc (Truncation): stopping rule
        conjugate (bool): when False, sum Phi_j(z) phi_j(xi) instead

    Returns:
        (SeriesValue) the wavefunction value.

    Raises:
        DomainError: z outside C_(q,m).
        TruncationError: the tail bound needs more than max_terms terms.

    """
    p.check_domain()
    trunc = trunc or DEFAULT_TRUNCATION
    xi = float(xi)
    c = coeff_growth_constant(p) * phi_bound(xi, p.q)
    count = series_length(p, c, trunc.tol)
    if count > trunc.max_terms:
        raise TruncationError(f"Wavefunction series needs {count} terms > max_terms={trunc.max_terms}")

    coeffs = np.array([coeff_phi(j, p) for j in range(count)])
    if conjugate:
        coeffs = np.conj(coeffs)
    terms = coeffs * rs_eigenfunctions(count - 1, xi, p.qd)
    scale = normalization(p.m, abs(p.z) ** 2, p.q) ** -0.5
    tail = 0.0 if p.growth_ratio == 0 else c * p.growth_ratio ** count / (1.0 - p.growth_ratio)
    logger.debug("wavefunction series: %d terms at z=%s, m=%d", count, p.z, p.m)
    return SeriesValue(complex(scale * pairwise_sum(terms)),
                       scale * (tail + 4 * EPS * float(np.sum(np.abs(terms)))), count)


def g_factor(z: complex, xi, m: int, qd: QDeformation):
    """1/((y, -iz sqrt((1-q)/q**m) exp(2i kappa xi); q)_inf) with y = iz sqrt((1-q)/q**(m-1))."""
    q, kappa = qd.q, qd.kappa
    xi = np.asarray(xi, dtype=complex)
    y = 1j * z * math.sqrt((1.0 - q) / q ** (m - 1))
    moving = -1j * z * math.sqrt((1.0 - q) / q ** m) * np.exp(2j * kappa * xi)
    fixed, _, _ = qpochhammer_inf_array(y, q)
    values, _, _ = qpochhammer_inf_array(moving, q)
    result = 1.0 / (complex(fixed) * values)
    return result if np.ndim(result) else complex(result)


def state_kernel(z: complex, xi, m: int, qd: QDeformation):
    """The integral kernel of the coherent-state transform, N**1/2 times the closed wavefunction.

    (q**(-m/2)/(sqrt(pi)(q;q)_m))**1/2 (-1)**m exp(i m kappa xi) exp(-xi**2/2) g Q_m(u; alpha, beta|q)
    with u = i q**1/4 exp(-i kappa xi).

    """
    check_index(m, "m")
    q, kappa = qd.q, qd.kappa
    xi = np.asarray(xi, dtype=complex)
    e = np.exp(1j * kappa * xi)
    s = math.sqrt((1.0 - q) / q ** (m - 1))
    alpha = z * q ** -0.25 * s * e
    beta = complex(z).conjugate() * q ** 0.25 * s / e
    u = 1j * q ** 0.25 / e
    prefactor = (-1) ** m * math.sqrt(q ** (-m / 2) / (Constants.sqrt_pi * pochhammer_value(q, q, m).real))
    value = (prefactor * e ** m * np.exp(-xi * xi / 2) * g_factor(z, xi, m, qd)
             * al_salam_chihara(m, u, alpha, beta, q))
    return value if np.ndim(value) else complex(value)


def cs_wavefunction_closed(p: PhaseSpacePoint, xi):
    """Closed form of the wavefunction through Al-Salam-Chihara polynomials.

    Equals N**-1/2 sum_j Phi_j(z) phi_j(xi), the series with conjugate=False.

    Raises:
        DomainError: z outside C_(q,m).

    """
    p.check_domain()
    scale = normalization(p.m, abs(p.z) ** 2, p.q) ** -0.5
    return scale * state_kernel(p.z, xi, p.m, p.qd)


def cs_wavefunction_m0(z: complex, xi, qd: QDeformation):
    """e_q(|z|**2)**-1/2 pi**-1/4 exp(-xi**2/2) / ((-iz sqrt(1-q) exp(2i kappa xi);q)_inf (iz sqrt(q(1-q));q)_inf)."""
    q, kappa = qd.q, qd.kappa
    PhaseSpacePoint(z, 0, qd).check_domain()
    xi = np.asarray(xi, dtype=complex)
    moving, _, _ = qpochhammer_inf_array(-1j * z * math.sqrt(1.0 - q) * np.exp(2j * kappa * xi), q)
    fixed = qpochhammer(1j * z * math.sqrt(q * (1.0 - q)), q).value
    value = (qexp(abs(z) ** 2, q).value.real ** -0.5 * Constants.pi_quarter * np.exp(-xi * xi / 2)
             / (moving * fixed))
    return value if np.ndim(value) else complex(value)


def measure(qd: QDeformation, tail_tol: Optional[float] = None) -> RadialMeasure:
    """The discrete radial measure with masses w_l = q**l (q;q)_inf/(q;q)_l.

    Args:
        qd (QDeformation): deformation
        tail_tol (float): bound on the dropped mass; w_l <= q**l gives the geometric tail q**L/(1-q)

    Returns:
        (RadialMeasure) nodes, weights and node count.

    """
    q = qd.q
    tail_tol = setting("measure", "tail_tol") if tail_tol is None else tail_tol
    if not tail_tol > 0:
        raise ValueError(f"tail_tol must be positive: {tail_tol}")
    count = max(1, int(math.ceil(math.log(tail_tol * (1.0 - q)) / math.log(q))))
    levels = np.arange(count)
    log_factorials = np.concatenate([[0.0], np.cumsum(np.log1p(-q ** np.arange(1, count)))])
    weights = np.exp(levels * math.log(q) + log_qpochhammer_real(q, q, INF) - log_factorials)
    nodes = q ** (levels / 2) / math.sqrt(1.0 - q)
    logger.debug("radial measure: %d nodes for q=%s", count, q)
    return RadialMeasure(nodes, weights, count, q, q ** count / (1.0 - q))


def fock_inner(f: Callable, g: Callable, meas: RadialMeasure, n_max: int) -> complex:
    """sum_l w_l (1/2pi) int f(r_l e^(it)) conj(g(r_l e^(it))) dt with an exact trapezoid rule.

    Args:
        f (Callable): vectorized function of complex z
        g (Callable): vectorized function of complex z
        meas (RadialMeasure): the radial measure
        n_max (int): bound on the angular frequencies of f and g

    Returns:
        (complex) the inner product.

    """
    check_index(n_max, "n_max")
    points = 2 * n_max + setting("measure", "angular_extra_points")
    angles = np.exp(2j * math.pi * np.arange(points) / points)
    grid = np.multiply.outer(meas.nodes, angles)
    values = np.asarray(f(grid), dtype=complex) * np.conj(np.asarray(g(grid), dtype=complex))
    radial = np.mean(values, axis=1)
    return complex(pairwise_sum(meas.weights * radial))


def fock_gram(functions: Sequence[Callable], meas: RadialMeasure, n_max: int) -> np.ndarray:
    """Matrix of fock_inner over a list of functions, each evaluated once on the grid."""
    check_index(n_max, "n_max")
    points = 2 * n_max + setting("measure", "angular_extra_points")
    angles = np.exp(2j * math.pi * np.arange(points) / points)
    grid = np.multiply.outer(meas.nodes, angles)
    rows = np.array([np.asarray(f(grid), dtype=complex).ravel() for f in functions])
    weights = np.repeat(meas.weights / points, points)
    return (rows * weights) @ np.conj(rows).T
