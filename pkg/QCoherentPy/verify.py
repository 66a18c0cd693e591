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
    QCoherentPy/verify.py

    Seeded verification suites. Every suite expands into independent tasks that run on the
    worker pool; each task yields one case (params, residual, tolerance) and, where a printed
    convention was put to the test, a finding.

"""
# Python Dependencies
import json
import logging
import math
import numpy as np
import time

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .config import setting, tolerance
from .cstates import (
    PhaseSpacePoint, coeff_classical, coeff_phi, coeff_phi_hermite, coefficient, cs_wavefunction_closed,
    cs_wavefunction_m0, cs_wavefunction_series, fock_gram, fock_inner, measure
)
from .errors import QCoherentError
from .kernels import (
    arik_coon_kernel, gram_matrix, kernel_classical, kernel_qm_closed, kernel_qm_intermediate,
    kernel_qm_series, min_eigenvalue
)
from .oscillator import (
    apply_annihilation, apply_creation, apply_hamiltonian, combination, energy, gaussian, gram_matrices,
    hamiltonian, hamiltonian_composed, iterated_creation, q_commutator, quadrature_rule, reflected_conjugate,
    rs_eigenfunction, rs_function
)
from .qcore import QDeformation, pochhammer_value, qbinomial, qexp, qfactorial, qnumber, qpochhammer
from .qpoly import (
    al_salam_chihara, al_salam_chihara_expanded, al_salam_chihara_scaled, complex_hermite, hermite,
    hermite_function, qhermite2d, rogers_szego, rogers_szego_all, stieltjes_wigert_inverse, wall,
    wall_lattice, wall_negative_parameter, wall_reduced, wall_regularized
)
from .qseries import phi10, phi21_terminating, phi32_terminating, terminating_terms
from .transforms import (
    bargmann_classical, cst, cst0, expansion_coefficients, polyanalytic_bargmann, range_function
)
from .utils import SplitMix64, check_q, parallel_map


logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

# Arguments of random complex parameters stay this far from the positive real axis, where
# Pochhammer factors 1 - a q**k can vanish.
_PHASE = (math.pi / 3, 2 * math.pi / 3)


@dataclass(frozen=True)
class SuiteOptions:
    """Knobs shared by every suite.

    Args:
        q_list (tuple): deformation parameters to sweep
        m_max (int): highest Landau-level index
        j_max (int): highest oscillator level
        seed (int): PRNG seed for randomized cases
        draws (int): random draws per identity
        tol (float): when set, overrides every per-check tolerance
        m_values (tuple): explicit Landau-level indices instead of 0..m_max
        limit_q (tuple): q sweep for the classical limits

    """
    q_list: Tuple[float, ...] = tuple(setting("cli", "q_list"))
    m_max: int = setting("cli", "m_max")
    j_max: int = setting("cli", "j_max")
    seed: int = setting("cli", "seed")
    draws: int = setting("cli", "draws")
    tol: Optional[float] = None
    m_values: Optional[Tuple[int, ...]] = None
    limit_q: Tuple[float, ...] = tuple(setting("cli", "limit_q"))

    def __post_init__(self):
        for q in self.q_list + self.limit_q:
            check_q(q)
        if self.m_max < 0 or self.j_max < 0 or self.draws < 1:
            raise ValueError(f"Invalid suite options: m_max={self.m_max}, j_max={self.j_max}, draws={self.draws}")

    def tolerance(self, check: str) -> float:
        return tolerance(check) if self.tol is None else float(self.tol)

    def rng(self, label: str) -> SplitMix64:
        return SplitMix64(self.seed).fork(label)

    def levels(self, cap: Optional[int] = None) -> List[int]:
        """Landau-level indices to sweep, optionally capped."""
        values = list(self.m_values) if self.m_values is not None else list(range(self.m_max + 1))
        return [m for m in values if cap is None or m <= cap]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q_list": list(self.q_list), "m_max": self.m_max, "j_max": self.j_max, "draws": self.draws,
            "tol": self.tol, "m_values": None if self.m_values is None else list(self.m_values),
            "limit_q": list(self.limit_q),
        }


@dataclass(frozen=True)
class Outcome:
    """What a task measured: the graded residual, evidence, and convention findings."""
    residual: float
    observed: Optional[Dict[str, Any]] = None
    findings: Optional[Dict[str, Any]] = None


@dataclass(frozen=True)
class Task:
    check: str
    params: Dict[str, Any]
    run: Callable[[], Outcome] = field(repr=False)


@dataclass(frozen=True)
class Case:
    """One graded comparison; passes iff residual <= tolerance (a missing residual fails)."""
    params: Dict[str, Any]
    residual: Optional[float]
    tolerance: float
    observed: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.residual is not None and self.residual <= self.tolerance

    @property
    def key(self) -> str:
        return canonical_json(self.params)

    def to_dict(self) -> Dict[str, Any]:
        record = {"params": self.params, "residual": self.residual, "tolerance": self.tolerance, "pass": self.passed}
        if self.observed:
            record["observed"] = self.observed
        return record


@dataclass
class VerificationReport:
    """Cases of one suite run, sorted by their canonical parameter encoding."""
    suite: str
    seed: int
    cases: List[Case]
    findings: Dict[str, Any] = field(default_factory=dict)
    wall_time_ms: int = 0
    options: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.cases)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def summary(self) -> Dict[str, int]:
        return {"passed": self.passed, "failed": self.failed, "wall_time_ms": self.wall_time_ms}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "seed": self.seed,
            "options": self.options,
            "cases": [c.to_dict() for c in self.cases],
            "summary": self.summary(),
            "findings": self.findings,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _plain(value: Any) -> Any:
    """JSON-safe copy: numpy scalars to Python, non-finite floats to None, complex to [re, im]."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [_plain(float(value.real)), _plain(float(value.imag))]
    if isinstance(value, (float, np.floating)):
        return float(value) if math.isfinite(value) else None
    return value


def relative_residual(lhs, rhs, scale: float = 0.0) -> float:
    """max |lhs - rhs| / max(1, |lhs|, |rhs|, scale), elementwise over arrays.

    scale carries the magnitude of the summands behind either side, so identities whose terms
    cancel are graded relative to what floating point can resolve.

    """
    lhs = np.asarray(lhs, dtype=complex)
    rhs = np.asarray(rhs, dtype=complex)
    denominator = np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), max(1.0, scale))
    return float(np.max(np.abs(lhs - rhs) / denominator))


def _param(rng: SplitMix64, r_lo: float = 0.1, r_hi: float = 2.0) -> complex:
    return rng.complex_polar(r_lo, r_hi, *_PHASE)


def _mass(n: int, numerators: Sequence, denominators: Sequence, q: float, z) -> float:
    return float(np.sum(np.abs(terminating_terms(n, numerators, denominators, q, z))))


def _domain_radius(m: int, q: float) -> float:
    return q ** (m / 2) / math.sqrt(1.0 - q)


# q-identities: each draw returns (lhs, rhs, scale)


def _split_finite(rng: SplitMix64, q: float):
    a, n, k = _param(rng), rng.integer(0, 12), rng.integer(0, 12)
    return pochhammer_value(a, q, n + k), pochhammer_value(a, q, n) * pochhammer_value(a * q ** n, q, k), 0.0


def _inversion(rng: SplitMix64, q: float):
    a, n = _param(rng), rng.integer(0, 12)
    rhs = pochhammer_value(q ** (1 - n) / a, q, n) * (-a) ** n * q ** (n * (n - 1) / 2)
    return pochhammer_value(a, q, n), rhs, 0.0


def _split_infinite(rng: SplitMix64, q: float):
    a, s = _param(rng), rng.integer(0, 12)
    return qpochhammer(a, q).value, pochhammer_value(a, q, s) * qpochhammer(a * q ** s, q).value, 0.0


def _shifted(rng: SplitMix64, q: float):
    a, n, k = _param(rng), rng.integer(0, 8), rng.integer(0, 8)
    rhs = (pochhammer_value(q / a, q, n) / pochhammer_value(q ** (1 - k) / a, q, n)
           * pochhammer_value(a, q, k) * q ** (-n * k))
    return pochhammer_value(a * q ** -n, q, k), rhs, 0.0


def _binomial_theorem(rng: SplitMix64, q: float):
    a, xi = _param(rng, 0.1, 1.0), _param(rng, 0.1, 0.9)
    rhs = qpochhammer(a * xi, q).value / qpochhammer(xi, q).value
    # (-|a|;q)_k dominates |(a;q)_k| termwise
    scale = phi10(-abs(a), q, abs(xi)).value.real
    return phi10(a, q, xi).value, rhs, scale


def _chu_vandermonde(rng: SplitMix64, q: float):
    b, c, n = _param(rng), _param(rng), rng.integer(0, 8)
    rhs = pochhammer_value(c / b, q, n) * b ** n / pochhammer_value(c, q, n)
    return phi21_terminating(n, b, c, q, q), rhs, _mass(n, [b], [c], q, q)


def _finite_heine(rng: SplitMix64, q: float):
    xi, beta, gamma, tau = (_param(rng) for _ in range(4))
    n = rng.integer(0, 6)
    lhs = phi32_terminating(n, xi, beta, gamma, q ** (1 - n) / tau, q, q)
    prefactor = pochhammer_value(xi * tau, q, n) / pochhammer_value(tau, q, n)
    rhs = prefactor * phi32_terminating(n, gamma / beta, xi, gamma, xi * tau, q, beta * tau * q ** n)
    scale = max(_mass(n, [xi, beta], [gamma, q ** (1 - n) / tau], q, q),
                abs(prefactor) * _mass(n, [gamma / beta, xi], [gamma, xi * tau], q, beta * tau * q ** n))
    return lhs, rhs, scale


def _wall_reduction(rng: SplitMix64, q: float):
    x, a, n = _param(rng), _param(rng), rng.integer(0, 8)
    c = x * q ** (1 - n)
    prefactor = pochhammer_value(c, q, n) / pochhammer_value(a * q, q, n)
    scale = max(_mass(n, [0.0], [a * q], q, q * x), abs(prefactor) * _mass(n, [0.0], [c], q, a * q ** (n + 1)))
    return wall(n, x, a, q), wall_reduced(n, x, a, q), scale


def _wall_negative(rng: SplitMix64, q: float):
    x, n = _param(rng), rng.integer(0, 6)
    big_n = rng.integer(0, n)
    terms = [abs(pochhammer_value(q ** -n, q, k) * (q * x) ** k * pochhammer_value(q ** (k + 1 - big_n), q, n - k)
                 / pochhammer_value(q, q, k)) for k in range(n + 1)]
    prefactor = abs(x) ** big_n * q ** (big_n * (big_n + 1 - 2 * n) / 2)
    prefactor *= pochhammer_value(q ** (big_n + 1), q, n - big_n).real
    scale = max(sum(terms), prefactor * _mass(n - big_n, [0.0], [q ** (big_n + 1)], q, q * x))
    return wall_regularized(n, x, q ** -big_n, q), wall_negative_parameter(n, big_n, x, q), scale


def _rs_generating(rng: SplitMix64, q: float):
    t, x = _param(rng, 0.05, 0.5), _param(rng, 0.1, math.sqrt(q))
    count = 80
    weights = t ** np.arange(count + 1) / np.array([pochhammer_value(q, q, j).real for j in range(count + 1)])
    terms = rogers_szego_all(count, x, q) * weights
    rhs = 1.0 / (qpochhammer(t, q).value * qpochhammer(x * t / math.sqrt(q), q).value)
    return complex(np.sum(terms)), rhs, float(np.sum(np.abs(terms)))


def _stieltjes_wigert(rng: SplitMix64, q: float):
    x, n = _param(rng), rng.integer(0, 6)
    scale = sum(qbinomial(n, k, q) * q ** (-n * k) * abs(x) ** k for k in range(n + 1))
    return stieltjes_wigert_inverse(n, x, q), rogers_szego(n, x * q ** (0.5 - n), q), scale


def _qexp_product(rng: SplitMix64, q: float):
    xi = _param(rng, 0.1, 0.5 / (1.0 - q))
    scale = 1.0 / qpochhammer((1.0 - q) * abs(xi), q).value.real
    return qexp(xi, q).value, 1.0 / qpochhammer((1.0 - q) * xi, q).value, scale


def _asc_symmetry(rng: SplitMix64, q: float):
    u = _param(rng, 0.5, 2.0)
    alpha, beta = rng.complex_polar(0.01, 0.2), rng.complex_polar(0.01, 0.9)
    m = rng.integer(0, 4)
    return al_salam_chihara(m, u, alpha, beta, q), al_salam_chihara(m, 1 / u, alpha, beta, q), 0.0


def _asc_expanded(rng: SplitMix64, q: float):
    u = _param(rng, 0.5, 2.0)
    alpha, beta = rng.complex_polar(0.3, 0.9), rng.complex_polar(0.01, 0.9)
    m = rng.integer(0, 4)
    scale = (abs(pochhammer_value(alpha * beta, q, m) / alpha ** m)
             * _mass(m, [alpha * u, alpha / u], [alpha * beta, 0.0], q, q))
    return al_salam_chihara(m, u, alpha, beta, q), al_salam_chihara_expanded(m, u, alpha, beta, q), scale


def _qhermite_symmetry(rng: SplitMix64, q: float):
    z, zeta = rng.complex_polar(0.1, 2.0), rng.complex_polar(0.1, 2.0)
    r, s = rng.integer(0, 6), rng.integer(0, 6)
    return qhermite2d(r, s, z, zeta, q), qhermite2d(s, r, zeta, z, q), 0.0


IDENTITIES: Dict[str, Callable[[SplitMix64, float], Tuple[complex, complex, float]]] = {
    "pochhammer-split": _split_finite,
    "pochhammer-inversion": _inversion,
    "pochhammer-infinite-split": _split_infinite,
    "pochhammer-shift": _shifted,
    "q-binomial-theorem": _binomial_theorem,
    "chu-vandermonde": _chu_vandermonde,
    "finite-heine": _finite_heine,
    "wall-reduction": _wall_reduction,
    "wall-negative-parameter": _wall_negative,
    "rogers-szego-generating": _rs_generating,
    "stieltjes-wigert-connection": _stieltjes_wigert,
    "qexp-product": _qexp_product,
    "asc-symmetry": _asc_symmetry,
    "asc-expanded": _asc_expanded,
    "qhermite2d-symmetry": _qhermite_symmetry,
}


def qidentity_tasks(opts: SuiteOptions) -> List[Task]:
    """One task per (identity, q); the residual is the worst of opts.draws seeded draws."""

    def run(name: str, q: float) -> Outcome:
        rng = opts.rng(f"qidentities:{name}:{q!r}")
        worst, where = 0.0, 0
        for i in range(opts.draws):
            lhs, rhs, scale = IDENTITIES[name](rng, q)
            residual = relative_residual(lhs, rhs, scale)
            if not residual <= worst:
                worst, where = residual, i
        return Outcome(worst, {"draws": opts.draws, "worst_draw": where})

    return [Task("qidentities", {"identity": name, "q": q}, lambda name=name, q=q: run(name, q))
            for name in IDENTITIES for q in opts.q_list]


def wall_orthogonality_residual(q: float, d: int, n_max: int = 6) -> float:
    """Worst entry of the normalized Wall Gram matrix minus the identity on the lattice q**l.

    Uses parameter tau = q**d and weights (tau q)**l/(q;q)_l; the sum stops once the dropped
    mass is below 1e-18 of the smallest norm.

    """
    tau = q ** d
    a = tau * q
    poch_q = qpochhammer(q, q).value.real
    floor = 1e-18 * a ** n_max * poch_q ** 2 * (1.0 - a)
    count = int(math.ceil(math.log(floor) / math.log(a)))
    values = np.array([[wall_lattice(n, l, tau, q) for l in range(count)] for n in range(n_max + 1)])
    log_factorials = np.concatenate([[0.0], np.cumsum(np.log1p(-q ** np.arange(1, count)))])
    weights = np.exp(np.arange(count) * math.log(a) - log_factorials)
    gram = (values * weights) @ values.T
    norms = np.array([a ** n / qpochhammer(a, q).value.real * pochhammer_value(q, q, n).real
                      / pochhammer_value(a, q, n).real for n in range(n_max + 1)])
    normalized = gram / np.sqrt(np.outer(norms, norms))
    return float(np.max(np.abs(normalized - np.eye(n_max + 1))))


def wall_orthogonality_tasks(opts: SuiteOptions) -> List[Task]:
    return [Task("wall-orthogonality", {"q": q, "m_minus_j": d},
                 lambda q=q, d=d: Outcome(wall_orthogonality_residual(q, d)))
            for q in opts.q_list for d in range(5)]


def coeff_orthonormality_tasks(opts: SuiteOptions) -> List[Task]:

    def run(q: float, m: int) -> Outcome:
        qd = QDeformation.from_q(q)
        functions = [lambda z, j=j: coefficient(j, m, z, q) for j in range(opts.j_max + 1)]
        gram = fock_gram(functions, measure(qd), opts.j_max + m)
        residual = float(np.max(np.abs(gram - np.eye(opts.j_max + 1))))

        p = PhaseSpacePoint(0.3 * _domain_radius(m, q) * np.exp(0.4j), m, qd)
        hermite_form = np.array([coeff_phi_hermite(j, p) for j in range(opts.j_max + 1)])
        wall_form = np.array([coeff_phi(j, p) for j in range(opts.j_max + 1)])
        conjugated = relative_residual(hermite_form, np.conj(wall_form))
        plain = relative_residual(hermite_form, wall_form)
        if conjugated <= opts.tolerance("coeff-orthonormality"):
            verdict = "hermite form is the conjugate of the wall form"
        elif plain <= opts.tolerance("coeff-orthonormality"):
            verdict = "hermite form equals the wall form"
        else:
            verdict = "forms disagree"
        observed = {"hermite_vs_conjugate": conjugated, "hermite_vs_plain": plain}
        return Outcome(residual, observed, {"coefficient_forms": verdict})

    return [Task("coeff-orthonormality", {"q": q, "m": m}, lambda q=q, m=m: run(q, m))
            for q in opts.q_list for m in opts.levels()]


def rs_orthonormality_tasks(opts: SuiteOptions) -> List[Task]:

    def run(q: float) -> Outcome:
        qd = QDeformation.from_q(q)
        bilinear, sesquilinear = gram_matrices(opts.j_max, qd, quadrature_rule(qd, opts.j_max))
        identity = np.eye(opts.j_max + 1)
        ses = float(np.max(np.abs(sesquilinear - identity)))
        bil = float(np.max(np.abs(bilinear - identity)))
        edge = float(max(np.max(np.abs(bilinear[0] - identity[0])), np.max(np.abs(bilinear[:, 0] - identity[0]))))
        tol = opts.tolerance("rs-orthonormality")
        if ses <= tol and bil > tol:
            verdict = "sesquilinear"
        elif bil <= tol and ses > tol:
            verdict = "bilinear"
        else:
            verdict = "both" if ses <= tol else "neither"
        observed = {"bilinear_deviation": bil, "bilinear_first_row_deviation": edge,
                    "bilinear_phi1_phi1": bilinear[1, 1] if opts.j_max >= 1 else None}
        return Outcome(ses, observed, {"pairing": verdict})

    return [Task("rs-orthonormality", {"q": q, "pairing": "sesquilinear"}, lambda q=q: run(q)) for q in opts.q_list]


def _ladder_points(qd: QDeformation) -> np.ndarray:
    grid = np.linspace(-2.0, 2.0, 5)
    return np.concatenate([np.linspace(-3.0, 3.0, 20), grid + 0.7j * qd.kappa, grid - 0.4j * qd.kappa])


def ladder_tasks(opts: SuiteOptions) -> List[Task]:

    def creation_check(q: float) -> Outcome:
        qd = QDeformation.from_q(q)
        x = _ladder_points(qd)
        worst, printed = 0.0, 0.0
        for j in range(opts.j_max + 1):
            up = apply_creation(rs_function(j, qd), x, qd)
            following = rs_eigenfunction(j + 1, x, qd)
            worst = max(worst, relative_residual(up, math.sqrt(qnumber(j + 1, q)) * following))
            printed = max(printed, relative_residual(up, following))
        verdict = "holds" if printed <= opts.tolerance("ladder") else "holds only at j=0"
        return Outcome(worst, {"printed_form_residual": printed}, {"ladder_printed_form": verdict})

    def annihilation_check(q: float) -> Outcome:
        qd = QDeformation.from_q(q)
        x = _ladder_points(qd)
        worst = float(np.max(np.abs(apply_annihilation(rs_function(0, qd), x, qd))))
        for j in range(1, opts.j_max + 1):
            down = apply_annihilation(rs_function(j, qd), x, qd)
            worst = max(worst, relative_residual(down, math.sqrt(qnumber(j, q)) * rs_eigenfunction(j - 1, x, qd)))
        return Outcome(worst)

    def iterated_check(q: float) -> Outcome:
        qd = QDeformation.from_q(q)
        x = np.linspace(-3.0, 3.0, 20)
        worst = 0.0
        for j in range(min(6, opts.j_max) + 1):
            built = iterated_creation(j, qd)(x)
            worst = max(worst, relative_residual(built, math.sqrt(qfactorial(j, q)) * rs_eigenfunction(j, x, qd)))
        return Outcome(worst)

    tasks = []
    for q in opts.q_list:
        tasks.append(Task("ladder", {"q": q, "operator": "creation"}, lambda q=q: creation_check(q)))
        tasks.append(Task("ladder", {"q": q, "operator": "annihilation"}, lambda q=q: annihilation_check(q)))
        tasks.append(Task("iterated-creation", {"q": q}, lambda q=q: iterated_check(q)))
    return tasks


def _test_functions(qd: QDeformation):
    return [gaussian(0.3, 1.1, 0.4), gaussian(-0.5 + 0.2j, 0.8, -0.3),
            combination([1.0, 0.5j, -0.25, 0.1], qd), rs_function(2, qd)]


def hamiltonian_tasks(opts: SuiteOptions) -> List[Task]:

    def eigen_check(q: float) -> Outcome:
        qd = QDeformation.from_q(q)
        x = _ladder_points(qd)
        worst, printed = 0.0, 0.0
        for j in range(opts.j_max + 1):
            phi = rs_function(j, qd)
            target = energy(j, q) * phi(x)
            worst = max(worst, relative_residual(apply_hamiltonian(phi, x, qd), target))
            printed = max(printed, relative_residual(apply_hamiltonian(phi, x, qd, as_printed=True), target))
        verdict = "opposite sign on the double shift"
        if printed <= opts.tolerance("hamiltonian"):
            verdict = "eigen-relation holds"
        return Outcome(worst, {"printed_form_residual": printed}, {"hamiltonian_printed_form": verdict})

    def composed_check(q: float) -> Outcome:
        qd = QDeformation.from_q(q)
        x = _ladder_points(qd)
        return Outcome(max(relative_residual(hamiltonian(f, qd)(x), hamiltonian_composed(f, qd)(x))
                           for f in _test_functions(qd)))

    def commutator_check(q: float) -> Outcome:
        qd = QDeformation.from_q(q)
        x = _ladder_points(qd)
        return Outcome(max(relative_residual(q_commutator(f, qd)(x), f(x)) for f in _test_functions(qd)))

    tasks = []
    for q in opts.q_list:
        tasks.append(Task("hamiltonian", {"q": q}, lambda q=q: eigen_check(q)))
        tasks.append(Task("hamiltonian-composed", {"q": q}, lambda q=q: composed_check(q)))
        tasks.append(Task("q-commutator", {"q": q}, lambda q=q: commutator_check(q)))
    return tasks


def wavefunction_tasks(opts: SuiteOptions) -> List[Task]:
    draws = max(50, opts.draws // 4)

    def run(q: float, m: int) -> Outcome:
        qd = QDeformation.from_q(q)
        rng = opts.rng(f"wavefunction:{q!r}:{m}")
        radius = 0.6 * _domain_radius(m, q)
        worst, worst_m0, conjugated = 0.0, 0.0, 0.0
        for i in range(draws):
            p = PhaseSpacePoint(rng.complex_polar(0.0, radius), m, qd)
            xi = rng.uniform(-3.0, 3.0)
            closed = cs_wavefunction_closed(p, xi)
            worst = max(worst, relative_residual(closed, cs_wavefunction_series(p, xi, conjugate=False).value))
            if m == 0:
                worst_m0 = max(worst_m0, relative_residual(closed, cs_wavefunction_m0(p.z, xi, qd)))
            if i == 0:
                conjugated = relative_residual(closed, cs_wavefunction_series(p, xi).value)
        tol = opts.tolerance("wavefunction-closed-vs-series")
        verdict = "matches unconjugated series" if worst <= tol < conjugated else (
            "matches conjugated series" if conjugated <= tol else "matches neither")
        observed = {"draws": draws, "conjugated_series_residual": conjugated}
        if m == 0:
            observed["m0_form_residual"] = worst_m0
        return Outcome(max(worst, worst_m0), observed, {"wavefunction_closed_form": verdict})

    return [Task("wavefunction-closed-vs-series", {"q": q, "m": m}, lambda q=q, m=m: run(q, m))
            for q in opts.q_list for m in opts.levels(3)]


def kernel_tasks(opts: SuiteOptions) -> List[Task]:
    draws = max(20, opts.draws // 10)

    def forms(q: float, m: int) -> Outcome:
        rng = opts.rng(f"kernel:{q!r}:{m}")
        radius = _domain_radius(m, q)
        worst = {"series_vs_closed": 0.0, "closed_vs_intermediate": 0.0, "closed_vs_arik_coon": 0.0}
        for _ in range(draws):
            z = rng.complex_polar(0.2 * radius, 0.6 * radius)
            w = rng.complex_polar(0.2 * radius, 0.6 * radius)
            closed = kernel_qm_closed(z, w, m, q)
            worst["series_vs_closed"] = max(worst["series_vs_closed"],
                                            relative_residual(kernel_qm_series(z, w, m, q).value, closed))
            worst["closed_vs_intermediate"] = max(worst["closed_vs_intermediate"],
                                                  relative_residual(closed, kernel_qm_intermediate(z, w, m, q)))
            if m == 0:
                worst["closed_vs_arik_coon"] = max(worst["closed_vs_arik_coon"],
                                                   relative_residual(closed, arik_coon_kernel(z, w, q)))
        return Outcome(max(worst.values()), dict(worst, draws=draws))

    def positivity(q: float, m: int) -> Outcome:
        rng = opts.rng(f"gram:{q!r}:{m}")
        radius = 0.6 * _domain_radius(m, q)
        points = [rng.complex_polar(0.0, radius) for _ in range(4)]
        smallest = min_eigenvalue(gram_matrix(points, m, q))
        return Outcome(max(0.0, -smallest), {"min_eigenvalue": smallest})

    tasks = []
    for q in opts.q_list:
        for m in opts.levels():
            tasks.append(Task("kernel-three-forms", {"q": q, "m": m}, lambda q=q, m=m: forms(q, m)))
            tasks.append(Task("gram-psd", {"q": q, "m": m}, lambda q=q, m=m: positivity(q, m)))
    return tasks


def reproducing_tasks(opts: SuiteOptions) -> List[Task]:

    def run(q: float, m: int) -> Outcome:
        qd = QDeformation.from_q(q)
        meas = measure(qd)
        z = 0.5 * q ** m / math.sqrt(1.0 - q) * np.exp(0.7j)

        def conj_kernel(w):
            return np.conj(kernel_qm_closed(z, w, m, q))

        worst = 0.0
        for j in range(min(6, opts.j_max) + 1):
            reproduced = fock_inner(lambda w: coefficient(j, m, w, q), conj_kernel, meas, 40)
            worst = max(worst, relative_residual(reproduced, coefficient(j, m, z, q)))
        return Outcome(worst)

    return [Task("reproducing", {"q": q, "m": m}, lambda q=q, m=m: run(q, m))
            for q in opts.q_list for m in opts.levels(3)]


# classical limits: one error per q in the sweep; the graded residual is the largest increase


_LIMIT_Z = 0.3 + 0.2j
_LIMIT_W = -0.2 + 0.4j
_LIMIT_F = gaussian(0.2, 1.0, 0.3)


def _limit_qexp(q: float, m: int) -> float:
    xi = 0.5 + 0.2j
    return abs(qexp(xi, q).value - np.exp(xi))


def _limit_energy(q: float, m: int) -> float:
    return max(abs(energy(j, q) - (j + 0.5)) for j in range(6))


def _limit_eigenfunction(q: float, m: int) -> float:
    x = np.array([-1.0, 0.3, 1.2])
    qd = QDeformation.from_q(q)
    return max(float(np.max(np.abs(rs_eigenfunction(j, x, qd) - hermite_function(j, x)))) for j in range(6))


def _limit_asc(q: float, m: int) -> float:
    s, alpha, beta = 0.7, 0.2, -0.1
    return abs(al_salam_chihara_scaled(m, s, alpha, beta, q) - hermite(m, s - alpha - beta))


def _limit_qhermite(q: float, m: int) -> float:
    z, zeta = 0.4 + 0.3j, 0.2 - 0.5j
    r = math.sqrt(1.0 - q)
    return max(abs(qhermite2d(m, j, r * z, r * zeta, q) / r ** (m + j) - complex_hermite(m, j, z, zeta))
               for j in range(6))


def _limit_coefficient(q: float, m: int) -> float:
    return max(abs(coefficient(j, m, _LIMIT_Z, q) - coeff_classical(j, m, _LIMIT_Z)) for j in range(6))


def _limit_kernel(q: float, m: int) -> float:
    return abs(kernel_qm_closed(_LIMIT_Z, _LIMIT_W, m, q) - kernel_classical(_LIMIT_Z, _LIMIT_W, m))


def _limit_cst0(q: float, m: int) -> float:
    qd = QDeformation.from_q(q)
    rule = quadrature_rule(qd)
    return abs(cst0(_LIMIT_F, _LIMIT_Z, qd, rule) - bargmann_classical(_LIMIT_F, _LIMIT_Z, rule))


def _limit_cst(q: float, m: int, convention: str = "sqrt2") -> float:
    qd = QDeformation.from_q(q)
    rule = quadrature_rule(qd, setting("cli", "j_max"), m)
    value = cst(_LIMIT_F, PhaseSpacePoint(_LIMIT_Z, m, qd), rule)
    return abs(value - polyanalytic_bargmann(_LIMIT_F, _LIMIT_Z, m, rule, convention))


LIMITS: Dict[str, Tuple[Callable[[float, int], float], bool]] = {
    "qexp": (_limit_qexp, False),
    "energy": (_limit_energy, False),
    "rs-eigenfunction": (_limit_eigenfunction, False),
    "cst0-bargmann": (_limit_cst0, False),
    "asc-hermite": (_limit_asc, True),
    "qhermite2d": (_limit_qhermite, True),
    "coefficient": (_limit_coefficient, True),
    "kernel": (_limit_kernel, True),
    "cst-polyanalytic": (_limit_cst, True),
}


def limit_errors(quantity: str, m: int, q_values: Sequence[float]) -> List[float]:
    """Errors against the classical target for every q of a sweep.

    Raises:
        ValueError: unknown quantity.

    """
    if quantity not in LIMITS:
        raise ValueError(f"Unknown limit quantity: {quantity!r}")
    return [float(LIMITS[quantity][0](q, m)) for q in q_values]


def limit_increase(errors: Sequence[float], floor: Optional[float] = None) -> float:
    """Largest step-to-step growth of a limit sweep; errors at or below the noise floor count as converged."""
    floor = setting("limits", "noise_floor") if floor is None else floor
    clipped = [max(float(e), floor) for e in errors]
    return max([0.0] + [b - a for a, b in zip(clipped, clipped[1:])])


def limit_tasks(opts: SuiteOptions) -> List[Task]:

    def run(quantity: str, m: int) -> Outcome:
        errors = limit_errors(quantity, m, opts.limit_q)
        observed = {"q": list(opts.limit_q), "errors": errors}
        findings = None
        # both argument conventions coincide at m = 0
        if quantity == "cst-polyanalytic" and m > 0:
            half = _limit_cst(opts.limit_q[-1], m, "half")
            observed["half_convention_error"] = half
            findings = {"polyanalytic_argument": "sqrt2" if errors[-1] < half else "half"}
        return Outcome(limit_increase(errors), observed, findings)

    tasks = []
    for quantity, (_, per_level) in LIMITS.items():
        for m in (opts.levels(3) if per_level else [0]):
            params = {"quantity": quantity, "m": m} if per_level else {"quantity": quantity}
            tasks.append(Task("limits-q1", params, lambda quantity=quantity, m=m: run(quantity, m)))
    return tasks


def transform_tasks(opts: SuiteOptions) -> List[Task]:
    count = min(6, opts.j_max) + 1

    def basis_mapping(q: float, m: int) -> Outcome:
        qd = QDeformation.from_q(q)
        p = PhaseSpacePoint(0.4 * _domain_radius(m, q) * np.exp(0.9j), m, qd)
        rule = quadrature_rule(qd, opts.j_max, m)
        worst, literal = 0.0, 0.0
        for k in range(count):
            target = coefficient(k, m, p.z, q)
            worst = max(worst, relative_residual(cst(reflected_conjugate(rs_function(k, qd)), p, rule), target))
            literal = max(literal, relative_residual(cst(rs_function(k, qd), p, rule), target))
        verdict = "conj(phi_k) -> Phi_k" if worst < literal else "phi_k -> Phi_k"
        return Outcome(worst, {"phi_k_residual": literal}, {"basis_mapping": verdict})

    def m0(q: float) -> Outcome:
        qd = QDeformation.from_q(q)
        rule = quadrature_rule(qd, opts.j_max, 0)
        f = gaussian(0.1, 1.0, 0.2)
        z = 0.4 * _domain_radius(0, q) * np.exp(-1.1j)
        return Outcome(relative_residual(cst(f, PhaseSpacePoint(z, 0, qd), rule), cst0(f, z, qd, rule)))

    def isometry(q: float, m: int) -> Outcome:
        qd = QDeformation.from_q(q)
        rng = opts.rng(f"isometry:{q!r}:{m}")
        c = np.array([rng.complex_polar(0.0, 1.0) for _ in range(count)])
        d = np.array([rng.complex_polar(0.0, 1.0) for _ in range(count)])
        inner = fock_inner(range_function(c, m, q), range_function(d, m, q), measure(qd), count - 1 + m)
        return Outcome(relative_residual(inner, np.sum(c * np.conj(d))))

    def expansion(q: float, m: int) -> Outcome:
        qd = QDeformation.from_q(q)
        rng = opts.rng(f"expansion:{q!r}:{m}")
        c = np.array([rng.complex_polar(0.0, 1.0) for _ in range(count)])
        node = q ** ((m + 2) / 2) / math.sqrt(1.0 - q) * np.exp(0.3j)
        rule = quadrature_rule(qd, opts.j_max, m)
        value = cst(combination(c, qd, conjugate_basis=True), PhaseSpacePoint(node, m, qd), rule)
        return Outcome(relative_residual(value, range_function(c, m, q)(node)))

    def parseval(q: float) -> Outcome:
        qd = QDeformation.from_q(q)
        rng = opts.rng(f"parseval:{q!r}")
        c = np.array([rng.complex_polar(0.0, 1.0) for _ in range(count)])
        levels = int(math.ceil(math.log(1e-9) / math.log(q)))
        rule = quadrature_rule(qd, levels)
        pairings = expansion_coefficients(combination(c, qd), rule, levels - 1, qd, conjugate=True)
        norm = float(np.sum(np.abs(c) ** 2))
        return Outcome(relative_residual(np.sum(np.abs(pairings) ** 2), norm), {"levels": levels})

    tasks = []
    for q in opts.q_list:
        for m in opts.levels(3):
            tasks.append(Task("basis-mapping", {"q": q, "m": m}, lambda q=q, m=m: basis_mapping(q, m)))
            tasks.append(Task("transform-isometry", {"q": q, "m": m, "form": "range"},
                              lambda q=q, m=m: isometry(q, m)))
            tasks.append(Task("basis-mapping", {"q": q, "m": m, "form": "expansion"},
                              lambda q=q, m=m: expansion(q, m)))
        if 0 in opts.levels(3):
            tasks.append(Task("transform-m0", {"q": q}, lambda q=q: m0(q)))
        tasks.append(Task("transform-isometry", {"q": q, "form": "parseval"}, lambda q=q: parseval(q)))
    return tasks


SUITES: Dict[str, Callable[[SuiteOptions], List[Task]]] = {
    "qidentities": qidentity_tasks,
    "wall-orthogonality": wall_orthogonality_tasks,
    "coeff-orthonormality": coeff_orthonormality_tasks,
    "rs-orthonormality": rs_orthonormality_tasks,
    "ladder": ladder_tasks,
    "hamiltonian": hamiltonian_tasks,
    "wavefunction-closed-vs-series": wavefunction_tasks,
    "kernel-three-forms": kernel_tasks,
    "reproducing": reproducing_tasks,
    "limits-q1": limit_tasks,
    "transform-isometry": transform_tasks,
}


def suite_names() -> List[str]:
    return list(SUITES) + ["all"]


def _execute(task: Task, opts: SuiteOptions) -> Tuple[Case, Dict[str, Any]]:
    params = dict(task.params, check=task.check)
    tol = opts.tolerance(task.check)
    try:
        outcome = task.run()
    except QCoherentError as e:
        logger.warning("case %s raised %s: %s", canonical_json(params), type(e).__name__, e)
        return Case(params, None, tol, {"error": f"{type(e).__name__}: {e}"}), {}

    residual = float(outcome.residual)
    observed = _plain(outcome.observed) if outcome.observed else None
    return Case(params, residual if math.isfinite(residual) else None, tol, observed), outcome.findings or {}


def _merge_findings(parts: Sequence[Dict[str, Any]]) -> Dict[str, Any]:
    """Keeps a finding as a single value when every task agrees, else the sorted distinct values."""
    collected: Dict[str, List[Any]] = {}
    for part in parts:
        for key, value in part.items():
            values = collected.setdefault(key, [])
            if value not in values:
                values.append(value)
    return {key: values[0] if len(values) == 1 else sorted(values, key=canonical_json)
            for key, values in collected.items()}


def run_suite(name: str, opts: Optional[SuiteOptions] = None, timing: bool = False) -> VerificationReport:
    """Runs a suite (or "all") and assembles its report.

    Args:
        name (str): suite name, see suite_names()
        opts (SuiteOptions): sweep parameters; packaged defaults when omitted
        timing (bool): record the measured wall time instead of 0

    Returns:
        (VerificationReport) cases sorted by canonical params, plus merged findings.

    Raises:
        ValueError: unknown suite name.

    """
    opts = opts or SuiteOptions()
    if name != "all" and name not in SUITES:
        raise ValueError(f"Unknown suite: {name!r}; choose from {', '.join(suite_names())}")

    start = time.perf_counter()
    if name == "all":
        tasks = [Task(t.check, dict(t.params, suite=suite), t.run) for suite, build in SUITES.items()
                 for t in build(opts)]
    else:
        tasks = SUITES[name](opts)

    logger.info("suite %s: %d tasks", name, len(tasks))
    results = parallel_map(lambda t: _execute(t, opts), tasks, chunks=1)
    cases = sorted((case for case, _ in results), key=lambda c: c.key)
    findings = _merge_findings([f for _, f in results])
    elapsed = int(round((time.perf_counter() - start) * 1000)) if timing else 0

    report = VerificationReport(name, opts.seed, cases, findings, elapsed, opts.to_dict())
    for case in cases:
        if not case.passed:
            logger.warning("failed: %s residual=%s tolerance=%s", case.key, case.residual, case.tolerance)
    logger.info("suite %s: %d passed, %d failed", name, report.passed, report.failed)
    return report
