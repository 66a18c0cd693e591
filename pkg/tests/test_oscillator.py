"""
    QCoherentPy/test_oscillator.py

"""
# Python Dependencies
import math
import numpy as np
import pytest

from .helpers import FAILURE

from QCoherentPy import oscillator
from QCoherentPy.qcore import QDeformation, qfactorial, qnumber
from QCoherentPy.errors import QuadratureError, ShiftDomainError


POINTS = np.array([-1.3, -0.2, 0.0, 0.4, 1.7])


@pytest.fixture(scope="module")
def qd():
    return QDeformation.from_q(0.5)


@pytest.mark.parametrize("j, q, expected", [
    (0, 0.5, 0.5),
    (1, 0.5, 1.25),
    (2, 0.3, (1.39 + 1.3) / 2),
    pytest.param(-1, 0.5, 0.0, marks=FAILURE),
])
def test_energy(j, q, expected):
    assert oscillator.energy(j, q) == pytest.approx(expected, rel=1e-14)


def test_eigenfunctions_rows(qd):
    rows = oscillator.rs_eigenfunctions(5, POINTS, qd)
    assert rows.shape == (6, len(POINTS))
    for j in range(6):
        assert np.allclose(rows[j], oscillator.rs_eigenfunction(j, POINTS, qd), rtol=1e-13, atol=1e-15)


@pytest.mark.parametrize("j", [0, 1, 2, 5])
def test_ladder(qd, j):
    phi = oscillator.rs_function(j, qd)
    up = oscillator.apply_creation(phi, POINTS, qd)
    assert np.allclose(up, math.sqrt(qnumber(j + 1, qd.q)) * oscillator.rs_eigenfunction(j + 1, POINTS, qd),
                       rtol=1e-10, atol=1e-12)
    down = oscillator.apply_annihilation(phi, POINTS, qd)
    expected = 0.0 if j == 0 else math.sqrt(qnumber(j, qd.q)) * oscillator.rs_eigenfunction(j - 1, POINTS, qd)
    assert np.allclose(down, expected, rtol=1e-10, atol=1e-12)


@pytest.mark.parametrize("j", [0, 1, 3, 6])
def test_hamiltonian_eigenvalue(qd, j):
    phi = oscillator.rs_function(j, qd)
    value = oscillator.apply_hamiltonian(phi, POINTS, qd)
    assert np.allclose(value, oscillator.energy(j, qd.q) * phi(POINTS), rtol=1e-9, atol=1e-11)


def test_hamiltonian_printed_sign(qd):
    phi = oscillator.rs_function(0, qd)
    correct = oscillator.apply_hamiltonian(phi, 0.3, qd)
    printed = oscillator.apply_hamiltonian(phi, 0.3, qd, as_printed=True)
    assert abs(correct - printed) > 1e-3


@pytest.mark.parametrize("center, width, frequency", [
    (0.0, 1.0, 0.0),
    (0.5, 0.8, 1.5),
    (-1.0 + 0.2j, 1.3, -0.7),
])
def test_composed_operators(qd, center, width, frequency):
    f = oscillator.gaussian(center, width, frequency)
    explicit = oscillator.hamiltonian(f, qd)(POINTS)
    composed = oscillator.hamiltonian_composed(f, qd)(POINTS)
    scale = max(1.0, float(np.max(np.abs(explicit))))
    assert np.max(np.abs(explicit - composed)) <= 1e-10 * scale
    assert np.allclose(oscillator.q_commutator(f, qd)(POINTS), f(POINTS), rtol=1e-9, atol=1e-11)


@pytest.mark.parametrize("j", [0, 1, 2, 4])
def test_iterated_creation(qd, j):
    value = oscillator.iterated_creation(j, qd)(POINTS)
    expected = math.sqrt(qfactorial(j, qd.q)) * oscillator.rs_eigenfunction(j, POINTS, qd)
    assert np.allclose(value, expected, rtol=1e-9, atol=1e-12)


def test_reflected_conjugate(qd):
    for j in range(4):
        phi = oscillator.rs_function(j, qd)
        reflected = oscillator.reflected_conjugate(phi)(POINTS + 0.1j)
        assert np.allclose(reflected, (-1) ** j * phi(-POINTS - 0.1j), rtol=1e-12, atol=1e-14)


def test_combination(qd):
    coeffs = [0.5, -1j, 0.25 + 0.25j]
    rows = oscillator.rs_eigenfunctions(2, POINTS, qd)
    plain = oscillator.combination(coeffs, qd)(POINTS)
    conjugated = oscillator.combination(coeffs, qd, conjugate_basis=True)(POINTS)
    assert np.allclose(plain, np.tensordot(coeffs, rows, axes=1), rtol=1e-13)
    assert np.allclose(conjugated, np.tensordot(coeffs, np.conj(rows), axes=1), rtol=1e-12, atol=1e-14)
    assert np.all(oscillator.combination([], qd)(POINTS) == 0)


def test_shift_outside_strip(qd):
    narrow = oscillator.AnalyticFunction(lambda x: np.exp(-x * x), strip_halfwidth=0.1, label="narrow")
    assert narrow(0.05j) == pytest.approx(np.exp(0.0025), rel=1e-14)
    with pytest.raises(ShiftDomainError):
        oscillator.apply_creation(narrow, 0.0, qd)
    with pytest.raises(ShiftDomainError):
        narrow(0.5j)


@pytest.mark.parametrize("q", [0.3, 0.5, 0.8])
def test_orthonormality(q):
    qd = QDeformation.from_q(q)
    rule = oscillator.quadrature_rule(qd, 6)
    bilinear, sesquilinear = oscillator.gram_matrices(6, qd, rule)
    assert np.max(np.abs(sesquilinear - np.eye(7))) <= 1e-8
    assert bilinear[1, 1] == pytest.approx(q, rel=1e-8)
    assert bilinear[0, 0] == pytest.approx(1.0, rel=1e-8)


def test_pairings(qd):
    rule = oscillator.quadrature_rule(qd, 2)
    phi1 = oscillator.rs_function(1, qd)
    assert oscillator.pair_sesquilinear(phi1, phi1, rule).value == pytest.approx(1.0, rel=1e-9)
    assert oscillator.pair_bilinear(phi1, phi1, rule).value == pytest.approx(qd.q, rel=1e-9)


def test_integrate_gaussian(qd):
    rule = oscillator.quadrature_rule(qd)
    result = oscillator.integrate_real_line(lambda x: np.exp(-x * x), rule)
    assert result.value == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert result.terms_used == len(rule.nodes)
    assert rule.est_error < 1e-12


def test_integrate_unresolved(qd):
    rule = oscillator.quadrature_rule(qd, 1)
    with pytest.raises(QuadratureError):
        oscillator.integrate_real_line(lambda x: np.exp(200j * x), rule)


def test_quadrature_rule_shape(qd):
    rule = oscillator.quadrature_rule(qd, 8, 2)
    assert rule.radius <= 12.0
    assert rule.nodes.shape == rule.weights.shape
    assert np.all(np.abs(rule.nodes) <= rule.radius)
    assert np.sum(rule.weights) == pytest.approx(2 * rule.radius, rel=1e-13)
    assert rule.key == oscillator.quadrature_rule(qd, 8, 2).key
