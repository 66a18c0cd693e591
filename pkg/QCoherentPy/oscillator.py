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
    QCoherentPy/oscillator.py

    Rogers-Szego oscillator: eigenfunctions, ladder operators realized as complex shifts,
    the Hamiltonian, energy levels and real-line quadrature.

"""
# Python Dependencies
import logging
import math
import numpy as np

from dataclasses import dataclass, field
from numpy.polynomial.legendre import leggauss
from typing import Callable, Optional, Sequence, Tuple

from .config import setting
from .errors import QuadratureError, ShiftDomainError
from .qcore import EPS, QDeformation, SeriesValue, pochhammer_value, qnumber
from .qpoly import rogers_szego, rogers_szego_all
from .utils import Constants, check_index, pairwise_sum


logger = logging.getLogger(__name__)

INF = math.inf


@dataclass(frozen=True)
class AnalyticFunction:
    """A function evaluable at complex x with |Im x| <= strip_halfwidth.

    Args:
        fn (Callable): vectorized evaluation x -> f(x)
        strip_halfwidth (float): half-width of the horizontal strip of analyticity
        label (str): short description used in logs and reports

    """
    fn: Callable
    strip_halfwidth: float = INF
    label: str = "f"

    def __call__(self, x):
        x = np.asarray(x, dtype=complex)
        if self.strip_halfwidth < INF and np.any(np.abs(x.imag) > self.strip_halfwidth * (1 + 1e-12)):
            raise ShiftDomainError(f"{self.label} evaluated outside its strip |Im x| <= {self.strip_halfwidth}: "
                                   f"max |Im x| = {np.max(np.abs(x.imag))}")
        value = self.fn(x)
        return value if np.ndim(value) else complex(value)


def _norm(j: int, q: float) -> complex:
    return (1j * math.sqrt(q)) ** j * Constants.pi_quarter / math.sqrt(pochhammer_value(q, q, j).real)


def rs_eigenfunction(j: int, x, qd: QDeformation):
    """Eigenfunction phi_j(x) = (i sqrt q)**j H_j(-exp(2i kappa x);q) exp(-x**2/2) / (pi**1/4 sqrt((q;q)_j)).

    Args:
        j (int): level
        x (complex | ndarray): evaluation point(s); the function is entire
        qd (QDeformation): deformation

    Returns:
        (complex | ndarray) phi_j(x)

    """
    check_index(j, "j")
    x = np.asarray(x, dtype=complex)
    value = _norm(j, qd.q) * rogers_szego(j, -np.exp(2j * qd.kappa * x), qd.q) * np.exp(-x * x / 2)
    return value if np.ndim(value) else complex(value)


def rs_eigenfunctions(j_max: int, x, qd: QDeformation) -> np.ndarray:
    """Rows phi_0 .. phi_{j_max} at every x; shape (j_max + 1, *x.shape)."""
    check_index(j_max, "j_max")
    x = np.asarray(x, dtype=complex)
    rows = rogers_szego_all(j_max, -np.exp(2j * qd.kappa * x), qd.q)
    norms = np.array([_norm(j, qd.q) for j in range(j_max + 1)])
    return norms.reshape((-1,) + (1,) * x.ndim) * rows * np.exp(-x * x / 2)


def rs_function(j: int, qd: QDeformation) -> AnalyticFunction:
    return AnalyticFunction(lambda x: rs_eigenfunction(j, x, qd), INF, f"phi_{j}")


def reflected_conjugate(f: AnalyticFunction) -> AnalyticFunction:
    """x -> conj(f(conj x)); for phi_j this equals (-1)**j phi_j(-x)."""
    return AnalyticFunction(lambda x: np.conj(f(np.conj(x))), f.strip_halfwidth, f"conj({f.label})")


def combination(coeffs: Sequence[complex], qd: QDeformation, conjugate_basis: bool = False) -> AnalyticFunction:
    """Finite combination sum_k c_k phi_k, or sum_k c_k conj(phi_k) when conjugate_basis is set."""
    coeffs = np.asarray(coeffs, dtype=complex)
    signs = np.array([(-1) ** k for k in range(len(coeffs))])

    def fn(x):
        x = np.asarray(x, dtype=complex)
        if len(coeffs) == 0:
            return np.zeros(x.shape, dtype=complex)
        if conjugate_basis:
            rows = rs_eigenfunctions(len(coeffs) - 1, -x, qd) * signs.reshape((-1,) + (1,) * x.ndim)
        else:
            rows = rs_eigenfunctions(len(coeffs) - 1, x, qd)
        return np.tensordot(coeffs, rows, axes=1)

    label = "sum c_k conj(phi_k)" if conjugate_basis else "sum c_k phi_k"
    return AnalyticFunction(fn, INF, label)


def gaussian(center: complex = 0.0, width: float = 1.0, frequency: float = 0.0) -> AnalyticFunction:
    """Entire test function exp(-(x - center)**2 / (2 width**2) + i frequency x)."""
    return AnalyticFunction(lambda x: np.exp(-(x - center) ** 2 / (2 * width ** 2) + 1j * frequency * x),
                            INF, f"gaussian({center}, {width}, {frequency})")


def _shift(f: AnalyticFunction, qd: QDeformation, steps: int) -> float:
    return f.strip_halfwidth - steps * qd.kappa


def creation(f: AnalyticFunction, qd: QDeformation) -> AnalyticFunction:
    """B* f(x) = (e(x)/(i sqrt(1-q))) (e(x) f(x) - q**3/4 f(x + i kappa)), e(x) = exp(i kappa x)."""
    q, kappa = qd.q, qd.kappa
    c = 1.0 / (1j * math.sqrt(1.0 - q))

    def fn(x):
        e = np.exp(1j * kappa * x)
        return c * e * (e * f(x) - q ** 0.75 * f(x + 1j * kappa))

    return AnalyticFunction(fn, _shift(f, qd, 1), f"B*({f.label})")


def annihilation(f: AnalyticFunction, qd: QDeformation) -> AnalyticFunction:
    """B f(x) = (-1/(e(x) i sqrt(1-q))) (f(x)/e(x) - q**1/4 f(x + i kappa))."""
    q, kappa = qd.q, qd.kappa
    c = 1.0 / (1j * math.sqrt(1.0 - q))

    def fn(x):
        e_inv = np.exp(-1j * kappa * x)
        return -c * e_inv * (e_inv * f(x) - q ** 0.25 * f(x + 1j * kappa))

    return AnalyticFunction(fn, _shift(f, qd, 1), f"B({f.label})")


def hamiltonian(f: AnalyticFunction, qd: QDeformation, as_printed: bool = False) -> AnalyticFunction:
    """The explicit four-term shift form of H = (B B* + B* B)/2.

    The default form is the one equal to the composed ladder operators. With as_printed set,
    the alternative display with prefactor 1/(2(q-1)) and a positive shift-by-2i kappa term is
    used; that form carries the opposite sign on the double shift.

    """
    q, kappa = qd.q, qd.kappa
    single_up = q ** 1.25 + q ** 0.25
    single_down = q ** 0.75 + q ** -0.25
    double = q ** 1.5 + q ** 0.5

    def fn(x):
        e = np.exp(1j * kappa * x)
        f0, f1, f2 = f(x), f(x + 1j * kappa), f(x + 2j * kappa)
        if as_printed:
            return (-2 * f0 + single_up * e * f1 + single_down * f1 / e + double * f2) / (2 * (q - 1))
        return (2 * f0 - single_up * e * f1 - single_down * f1 / e + double * f2) / (2 * (1 - q))

    return AnalyticFunction(fn, _shift(f, qd, 2), f"H({f.label})")


def hamiltonian_composed(f: AnalyticFunction, qd: QDeformation) -> AnalyticFunction:
    """(B B* f + B* B f)/2 by nested shift evaluation."""
    up_down = annihilation(creation(f, qd), qd)
    down_up = creation(annihilation(f, qd), qd)
    return AnalyticFunction(lambda x: (up_down(x) + down_up(x)) / 2, _shift(f, qd, 2), f"(BB*+B*B)({f.label})/2")


def q_commutator(f: AnalyticFunction, qd: QDeformation) -> AnalyticFunction:
    """(B B* - q B* B) f, which equals f."""
    up_down = annihilation(creation(f, qd), qd)
    down_up = creation(annihilation(f, qd), qd)
    return AnalyticFunction(lambda x: up_down(x) - qd.q * down_up(x), _shift(f, qd, 2), f"[B,B*]_q({f.label})")


def apply_creation(f: AnalyticFunction, x, qd: QDeformation):
    """Evaluates B* f at x.

    Raises:
        ShiftDomainError: x + i kappa leaves the strip of f.

    """
    return creation(f, qd)(x)


def apply_annihilation(f: AnalyticFunction, x, qd: QDeformation):
    """Evaluates B f at x."""
    return annihilation(f, qd)(x)


def apply_hamiltonian(f: AnalyticFunction, x, qd: QDeformation, as_printed: bool = False):
    """Evaluates H f at x through the explicit shift form."""
    return hamiltonian(f, qd, as_printed)(x)


def iterated_creation(j: int, qd: QDeformation) -> AnalyticFunction:
    """(B*)**j applied to pi**-1/4 exp(-x**2/2); equals sqrt([j]_q!) phi_j."""
    f = AnalyticFunction(lambda x: Constants.pi_quarter * np.exp(-x * x / 2), INF, "phi_0 seed")
    for _ in range(check_index(j, "j")):
        f = creation(f, qd)
    return f


def energy(j: int, q: float) -> float:
    """Energy level ([j+1]_q + [j]_q)/2."""
    check_index(j, "j")
    return (qnumber(j + 1, q) + qnumber(j, q)) / 2


@dataclass(frozen=True)
class QuadratureRule:
    """Composite Gauss-Legendre rule on [-R, R] with a coarser companion on the same panels."""
    radius: float
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    est_error: float
    companion_nodes: np.ndarray = field(repr=False)
    companion_weights: np.ndarray = field(repr=False)
    tol: float = setting("quadrature", "tol")
    key: Tuple = ()


def _panels(edges: np.ndarray, order: int) -> Tuple[np.ndarray, np.ndarray]:
    y, w = leggauss(order)
    half = np.diff(edges) / 2
    mid = (edges[1:] + edges[:-1]) / 2
    nodes = (mid[:, None] + half[:, None] * y[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def quadrature_rule(qd: QDeformation, j_max: int = 8, m: int = 0,
                    tol: Optional[float] = None, order: Optional[int] = None) -> QuadratureRule:
    """Builds a rule for Gaussian-damped trigonometric integrands.

    R = max(min_radius, sqrt(2 ln(1/tol)) + 2 kappa j_max), capped at max_radius, and the panel
    width is at most pi/(4 kappa (2 j_max + m)) to resolve the fastest oscillation.

    Args:
        qd (QDeformation): deformation; sets the oscillation frequency
        j_max (int): highest eigenfunction index in the integrands
        m (int): extra phase index of coherent-state integrands
        tol (float): target accuracy
        order (int): Gauss-Legendre points per panel

    Returns:
        (QuadratureRule) the rule and its companion.

    """
    tol = setting("quadrature", "tol") if tol is None else tol
    order = setting("quadrature", "order") if order is None else order
    radius = max(setting("quadrature", "min_radius"), math.sqrt(2 * math.log(1 / tol)) + 2 * qd.kappa * j_max)
    radius = min(radius, setting("quadrature", "max_radius"))
    width = min(math.pi / (4 * qd.kappa * max(2 * j_max + m, 1)), setting("quadrature", "max_panel_width"))
    count = int(math.ceil(2 * radius / width))
    edges = np.linspace(-radius, radius, count + 1)

    nodes, weights = _panels(edges, order)
    companion_nodes, companion_weights = _panels(edges, setting("quadrature", "companion_order"))
    gauss = pairwise_sum(weights * np.exp(-nodes ** 2))
    est_error = abs(gauss - Constants.sqrt_pi) + 4 * EPS * Constants.sqrt_pi
    logger.debug("quadrature rule: R=%.3g, %d panels of order %d", radius, count, order)
    return QuadratureRule(radius, nodes, weights, est_error, companion_nodes, companion_weights,
                          tol, (round(radius, 12), count, order))


def integrate_real_line(g: Callable, rule: QuadratureRule) -> SeriesValue:
    """Integral of g over the real line.

    Args:
        g (Callable): vectorized integrand on real nodes
        rule (QuadratureRule): the rule

    Returns:
        (SeriesValue) value with the rule/companion discrepancy as error estimate.

    Raises:
        QuadratureError: rule and companion differ by more than tol (relative to the integrand scale).

    """
    return integrate_sampled(g(rule.nodes), g(rule.companion_nodes), rule)


def integrate_sampled(values, companion_values, rule: QuadratureRule) -> SeriesValue:
    """Same as integrate_real_line for an integrand already sampled on both node sets."""
    values = np.asarray(values, dtype=complex)
    value = pairwise_sum(rule.weights * values)
    check = pairwise_sum(rule.companion_weights * np.asarray(companion_values, dtype=complex))
    scale = float(pairwise_sum(rule.weights * np.abs(values)).real)
    difference = abs(value - check)
    if difference > rule.tol * max(1.0, scale):
        logger.warning("quadrature refinement disagreement: %.3g (scale %.3g)", difference, scale)
        raise QuadratureError(f"Quadrature failure: rule and companion differ by {difference:.3g}")
    return SeriesValue(complex(value), difference + 64 * EPS * scale, len(rule.nodes))


def pair_bilinear(f: Callable, g: Callable, rule: QuadratureRule) -> SeriesValue:
    """Integral of f g over the real line, with no conjugation."""
    return integrate_real_line(lambda x: f(x) * g(x), rule)


def pair_sesquilinear(f: Callable, g: Callable, rule: QuadratureRule) -> SeriesValue:
    """Integral of f conj(g) over the real line."""
    return integrate_real_line(lambda x: f(x) * np.conj(g(x)), rule)


def gram_matrices(j_max: int, qd: QDeformation, rule: QuadratureRule) -> Tuple[np.ndarray, np.ndarray]:
    """Bilinear and sesquilinear Gram matrices of phi_0 .. phi_{j_max} from one node evaluation."""
    rows = rs_eigenfunctions(j_max, rule.nodes, qd)
    weighted = rows * rule.weights
    return weighted @ rows.T, weighted @ np.conj(rows).T
