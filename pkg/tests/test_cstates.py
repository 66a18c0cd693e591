"""
    QCoherentPy/test_cstates.py

"""
# Python Dependencies
import math
import numpy as np
import pytest

from .helpers import FAILURE, random_complex

from QCoherentPy import cstates
from QCoherentPy.oscillator import integrate_real_line, quadrature_rule
from QCoherentPy.qcore import QDeformation, qexp, qfactorial
from QCoherentPy.errors import DomainError


def radius(m: int, q: float) -> float:
    return math.sqrt(q ** m / (1.0 - q))


@pytest.mark.parametrize("z, m, q, inside", [
    (0.5, 0, 0.5, True),
    (1.5, 0, 0.5, False),
    (0.6j, 2, 0.5, True),
    (0.75, 2, 0.5, False),
    (0.0, 5, 0.9, True),
])
def test_domain(z, m, q, inside):
    p = cstates.PhaseSpacePoint(z, m, QDeformation.from_q(q))
    assert p.in_domain() is inside
    assert (p.growth_ratio < 1) is inside
    if inside:
        assert p.check_domain() is p
    else:
        with pytest.raises(DomainError):
            p.check_domain()


@pytest.mark.parametrize("m", [
    0,
    3,
    pytest.param(-1, marks=FAILURE),
])
def test_point_coerces(m):
    p = cstates.PhaseSpacePoint(1, m, QDeformation.from_q(0.5))
    assert isinstance(p.z, complex)
    assert p.q == 0.5


@pytest.mark.parametrize("q", [0.3, 0.7])
def test_coefficient_lowest_level(q):
    for z in random_complex(4, 3, 0.1, 1.0):
        for j in range(5):
            assert cstates.coefficient(j, 0, z, q) == pytest.approx(z ** j / math.sqrt(qfactorial(j, q)), rel=1e-12)


@pytest.mark.parametrize("m", [0, 1, 2, 4])
def test_coefficient_forms(m):
    q = 0.5
    p = cstates.PhaseSpacePoint(0.4 * radius(m, q) * np.exp(0.7j), m, QDeformation.from_q(q))
    for j in range(7):
        wall_form = cstates.coeff_phi(j, p)
        assert cstates.coeff_phi_hermite(j, p) == pytest.approx(np.conj(wall_form), rel=1e-10, abs=1e-13)


def test_coefficient_vectorized():
    z = np.array([0.0, 0.2, 0.3 - 0.1j, 0.5j])
    values = cstates.coefficient(3, 2, z, 0.5)
    for i in range(len(z)):
        assert values[i] == pytest.approx(cstates.coefficient(3, 2, z[i], 0.5), rel=1e-13, abs=1e-15)


def test_coefficient_on_lattice():
    q, m = 0.5, 2
    r = cstates.measure(QDeformation.from_q(q)).nodes[3]
    on = cstates.coefficient(1, m, r, q)
    near = cstates.coefficient(1, m, r * (1 + 1e-9), q)
    assert on == pytest.approx(near, rel=1e-6, abs=1e-9)


@pytest.mark.parametrize("m, q", [(0, 0.5), (1, 0.5), (3, 0.7), (2, 0.3)])
def test_coefficient_sum_is_normalization(m, q):
    z = 0.5 * radius(m, q) * np.exp(1.1j)
    total = sum(abs(cstates.coefficient(j, m, z, q)) ** 2 for j in range(160))
    assert total == pytest.approx(cstates.normalization(m, abs(z) ** 2, q), rel=1e-10)


@pytest.mark.parametrize("q", [0.3, 0.6])
def test_coefficient_orthonormality(q):
    meas = cstates.measure(QDeformation.from_q(q))
    m, j_max = 2, 5
    functions = [lambda z, j=j: cstates.coefficient(j, m, z, q) for j in range(j_max + 1)]
    gram = cstates.fock_gram(functions, meas, j_max + m)
    assert np.max(np.abs(gram - np.eye(j_max + 1))) <= 1e-8
    assert cstates.fock_inner(functions[1], functions[1], meas, j_max + m) == pytest.approx(gram[1, 1], rel=1e-12)


@pytest.mark.parametrize("q", [0.2, 0.5, 0.9])
def test_measure(q):
    meas = cstates.measure(QDeformation.from_q(q))
    assert np.sum(meas.weights) == pytest.approx(1.0, abs=1e-12)
    assert meas.nodes[0] == pytest.approx(1 / math.sqrt(1 - q), rel=1e-14)
    assert meas.count == len(meas.nodes)
    assert meas.tail_bound <= 1e-14


def test_measure_rejects_tolerance():
    with pytest.raises(ValueError):
        cstates.measure(QDeformation.from_q(0.5), tail_tol=0.0)


@pytest.mark.parametrize("x, q", [(0.0, 0.5), (0.9, 0.5), (2.5, 0.7)])
def test_normalization_lowest_level(x, q):
    assert cstates.normalization(0, x, q) == pytest.approx(qexp(x, q).value.real, rel=1e-11)


@pytest.mark.parametrize("m, x, q", [
    (0, 2.0, 0.5),
    (2, 0.5, 0.5),
    (1, -0.1, 0.5),
])
def test_normalization_domain(m, x, q):
    with pytest.raises(DomainError):
        cstates.normalization(m, x, q)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_wavefunction_closed_matches_series(m):
    qd = QDeformation.from_q(0.5)
    for z in random_complex(10 + m, 2, 0.1 * radius(m, 0.5), 0.6 * radius(m, 0.5)):
        p = cstates.PhaseSpacePoint(z, m, qd)
        for xi in (-1.1, 0.0, 0.8):
            series = cstates.cs_wavefunction_series(p, xi, conjugate=False)
            closed = cstates.cs_wavefunction_closed(p, xi)
            assert abs(closed - series.value) <= 1e-9 * max(1.0, abs(series.value))


def test_wavefunction_lowest_level_form():
    qd = QDeformation.from_q(0.6)
    z = 0.4 * np.exp(2.0j)
    xi = np.array([-0.7, 0.1, 1.4])
    closed = cstates.cs_wavefunction_closed(cstates.PhaseSpacePoint(z, 0, qd), xi)
    assert np.allclose(cstates.cs_wavefunction_m0(z, xi, qd), closed, rtol=1e-11, atol=1e-14)


@pytest.mark.parametrize("m", [0, 2])
def test_wavefunction_normalized(m):
    qd = QDeformation.from_q(0.5)
    p = cstates.PhaseSpacePoint(0.5 * radius(m, 0.5) * np.exp(0.9j), m, qd)
    rule = quadrature_rule(qd, 8, m)
    norm = integrate_real_line(lambda xi: np.abs(cstates.cs_wavefunction_closed(p, xi)) ** 2, rule)
    assert norm.value == pytest.approx(1.0, rel=1e-7)


def test_wavefunction_outside_domain():
    p = cstates.PhaseSpacePoint(3.0, 0, QDeformation.from_q(0.5))
    with pytest.raises(DomainError):
        cstates.cs_wavefunction_series(p, 0.0)
    with pytest.raises(DomainError):
        cstates.cs_wavefunction_closed(p, 0.0)
