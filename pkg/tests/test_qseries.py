"""
    QCoherentPy/test_qseries.py

"""
# Python Dependencies
import numpy as np
import pytest

from .helpers import random_complex

from QCoherentPy import qseries
from QCoherentPy.qcore import qpochhammer, qpochhammer_multi
from QCoherentPy.errors import DivergentSeriesError, PoleError


@pytest.mark.parametrize("p, q, expected", [
    (8.0, 0.5, 3),
    (1.0, 0.5, 0),
    (0.3, 0.5, None),
    (4.0 + 1e-3, 0.5, None),
    (0.0, 0.5, None),
])
def test_terminating_index(p, q, expected):
    assert qseries.terminating_index(p, q) == expected


@pytest.mark.parametrize("q", [0.3, 0.5, 0.8])
def test_qbinomial_theorem(q):
    for a, z in zip(random_complex(1, 5, 0.1, 2.0), random_complex(2, 5, 0.05, 0.7)):
        left = qseries.phi10(a, q, z).value
        right = qpochhammer(a * z, q).value / qpochhammer(z, q).value
        assert abs(left - right) <= 1e-11 * max(1.0, abs(right))


@pytest.mark.parametrize("a, b, c, q", [
    (0.3, 0.4, 0.1, 0.5),
    (-0.5, 0.7, 0.2, 0.3),
    (2.0, -1.5, 0.4, 0.6),
])
def test_qgauss_sum(a, b, c, q):
    left = qseries.phi21(a, b, c, q, c / (a * b)).value
    right = (qpochhammer_multi([c / a, c / b], q).value / qpochhammer_multi([c, c / (a * b)], q).value)
    assert abs(left - right) <= 1e-10 * max(1.0, abs(right))


@pytest.mark.parametrize("n", [0, 1, 4, 7])
def test_chu_vandermonde(n):
    q, b, c = 0.5, 0.3 + 0.4j, -0.6 + 0.2j
    result = qseries.phi21(q ** -n, b, c, q, q)
    expected = qpochhammer(c / b, q, n).value / qpochhammer(c, q, n).value * b ** n
    assert result.terms_used == n + 1
    assert result.abs_error_estimate == 0.0
    scale = float(np.sum(np.abs(qseries.terminating_terms(n, [b], [c], q, q))))
    assert abs(result.value - expected) <= 1e-12 * max(1.0, abs(expected), scale)


def test_terminating_array_forms():
    q, n = 0.4, 5
    args = (0.2 + 0.1j, -0.3, 0.6j, 0.7)
    z = 0.9
    full = qseries.phi32(q ** -n, *args, q, z).value
    assert qseries.phi32_terminating(n, *args, q, z) == pytest.approx(full, rel=1e-13)
    assert sum(qseries.terminating_terms(n, args[:2], args[2:], q, z)) == pytest.approx(full, rel=1e-13)
    assert qseries.phi21_terminating(n, 0.3, 0.2, q, z) == pytest.approx(
        qseries.phi21(q ** -n, 0.3, 0.2, q, z).value, rel=1e-13)


def test_divergent_series():
    with pytest.raises(DivergentSeriesError):
        qseries.phi21(0.5, 0.5, 0.3, 0.5, 1.2)


@pytest.mark.parametrize("a, c, q", [
    (0.3, 2.0, 0.5),
    (0.5 ** -4, 4.0, 0.5),
])
def test_pole(a, c, q):
    with pytest.raises(PoleError):
        qseries.phi21(a, 0.4, c, q, 0.5)
