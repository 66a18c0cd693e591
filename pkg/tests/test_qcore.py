"""
    QCoherentPy/test_qcore.py

"""
# Python Dependencies
import math
import numpy as np
import pytest

from .helpers import FAILURE, random_complex

from QCoherentPy import qcore
from QCoherentPy.errors import DomainError, PoleError


@pytest.mark.parametrize("n, q, expected", [
    (0, 0.5, 0.0),
    (1, 0.5, 1.0),
    (3, 0.5, 1.75),
    (2, 0.9, 1.9),
    pytest.param(-1, 0.5, 0.0, marks=FAILURE),
    pytest.param(2, 1.0, 2.0, marks=FAILURE),
])
def test_qnumber(n, q, expected):
    assert qcore.qnumber(n, q) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("n, q, expected", [
    (0, 0.5, 1.0),
    (3, 0.5, 2.625),
    (2, 0.2, 1.2),
])
def test_qfactorial(n, q, expected):
    assert qcore.qfactorial(n, q) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("n, k, q, expected", [
    (4, 2, 0.5, 2.1875),
    (5, 0, 0.3, 1.0),
    (5, 5, 0.3, 1.0),
    (3, 1, 0.5, 1.75),
    pytest.param(2, 3, 0.5, 0.0, marks=FAILURE),
])
def test_qbinomial(n, k, q, expected):
    assert qcore.qbinomial(n, k, q) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("q", [0.3, 0.5, 0.8])
def test_qbinomial_table_and_general(q):
    table = qcore.qbinomial_table(7, q)
    for n in range(8):
        for k in range(n + 1):
            assert table[n, k] == pytest.approx(qcore.qbinomial(n, k, q), rel=1e-12)
            assert qcore.qbinomial_general(n, k, q) == pytest.approx(qcore.qbinomial(n, k, q), rel=1e-10)
    assert np.all(np.triu(table, 1) == 0)


@pytest.mark.parametrize("a, q, n, expected", [
    (0.5, 0.5, 0, 1.0),
    (0.5, 0.5, 2, 0.375),
    (0.25, 0.5, -1, 2.0),
    (2.0, 0.5, 3, 0.0),
])
def test_qpochhammer_finite(a, q, n, expected):
    result = qcore.qpochhammer(a, q, n)
    assert result.value == pytest.approx(expected, abs=1e-15)
    assert result.abs_error_estimate == 0.0


def test_qpochhammer_negative_pole():
    with pytest.raises(PoleError):
        qcore.qpochhammer(0.5, 0.5, -1)


@pytest.mark.parametrize("q", [0.1, 0.5, 0.9])
def test_qpochhammer_euler_pentagonal(q):
    expected = sum((-1) ** k * q ** (k * (3 * k - 1) / 2) for k in range(-60, 61))
    result = qcore.qpochhammer(q, q)
    assert result.value == pytest.approx(expected, rel=1e-7, abs=1e-14)
    assert result.terms_used > 0


def test_qpochhammer_split():
    q = 0.6
    for a in random_complex(5, 6, 0.1, 1.5):
        for n in range(5):
            left = qcore.qpochhammer(a, q).value
            right = qcore.qpochhammer(a, q, n).value * qcore.qpochhammer(a * q ** n, q).value
            assert abs(left - right) <= 1e-12 * max(1.0, abs(left))


def test_qpochhammer_near_one_log_space():
    value = qcore.qpochhammer(0.5, 0.999).value
    expected = math.exp(qcore.log_qpochhammer_real(0.5, 0.999, qcore.INF))
    assert value.real == pytest.approx(expected, rel=1e-9)
    assert value.imag == 0.0


def test_qpochhammer_multi():
    result = qcore.qpochhammer_multi([0.2, -0.3j, 0.7], 0.5, 3)
    expected = np.prod([qcore.qpochhammer(a, 0.5, 3).value for a in (0.2, -0.3j, 0.7)])
    assert result.value == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("n, q, expected", [
    (-1, 0.5, 0.0),
    (0, 0.5, 1.0),
    (2, 0.5, 1 / 0.375),
])
def test_qcoeff_recip(n, q, expected):
    assert qcore.qcoeff_recip(n, q) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("xi, q", [
    (0.0, 0.5),
    (1.2, 0.5),
    (-1.5, 0.5),
    (0.5 + 0.9j, 0.3),
    (5.0, 0.9),
])
def test_qexp(xi, q):
    expected = 0j
    term = 1.0 + 0j
    for n in range(400):
        expected += term
        term *= xi / qcore.qnumber(n + 1, q)
    result = qcore.qexp(xi, q)
    assert abs(result.value - expected) <= 1e-12 * max(1.0, abs(expected))
    assert result.abs_error_estimate >= 0.0


@pytest.mark.parametrize("xi, q", [
    (2.0, 0.5),
    (-2.5, 0.5),
    (12.0, 0.9),
])
def test_qexp_outside_disk(xi, q):
    with pytest.raises(DomainError):
        qcore.qexp(xi, q)


def test_deformation_constructors():
    d = qcore.QDeformation.from_q(0.5)
    assert d.kappa ** 2 == pytest.approx(math.log(2) / 2, rel=1e-14)
    e = qcore.QDeformation.from_kappa(d.kappa)
    assert e.q == pytest.approx(0.5, rel=1e-14)


@pytest.mark.parametrize("q, kappa", [
    (0.5, 0.1),
    (0.5, -0.5887),
    (1.5, 0.3),
])
def test_deformation_rejected(q, kappa):
    with pytest.raises(DomainError):
        qcore.QDeformation(q, kappa)


@pytest.mark.parametrize("tol, max_terms", [
    (1e-12, 100),
    pytest.param(0.0, 100, marks=FAILURE),
    pytest.param(1e-12, 0, marks=FAILURE),
])
def test_truncation(tol, max_terms):
    assert qcore.Truncation(tol, max_terms).tol == tol


@pytest.mark.parametrize("error, terms", [
    (0.0, 0),
    pytest.param(-1.0, 0, marks=FAILURE),
    pytest.param(0.0, -2, marks=FAILURE),
])
def test_series_value(error, terms):
    assert qcore.SeriesValue(1.0, error, terms).value == 1.0
