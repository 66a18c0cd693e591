"""
    QCoherentPy/test_config.py

"""
# Python Dependencies
import pytest

from .helpers import FAILURE

from QCoherentPy import config


@pytest.mark.parametrize("section, key, expected", [
    ("quadrature", "order", 20),
    ("truncation", "tol", 1e-15),
    ("cli", "q_list", [0.3, 0.5, 0.8]),
    ("cli", "seed", 7),
    pytest.param("quadrature", "nope", None, marks=FAILURE),
    pytest.param("nope", "order", None, marks=FAILURE),
])
def test_setting(section, key, expected):
    assert config.setting(section, key) == expected


@pytest.mark.parametrize("suite, expected", [
    ("qidentities", 1e-11),
    ("reproducing", 1e-7),
    ("limits-q1", 0.0),
    ("hamiltonian-composed", 1e-10),
])
def test_tolerance(suite, expected):
    assert config.tolerance(suite) == expected


def test_get_defaults_is_a_copy():
    defaults = config.get_defaults()
    defaults["quadrature"]["order"] = 3
    assert config.setting("quadrature", "order") == 20


@pytest.mark.parametrize("value, expected", [
    ("1", 1),
    ("6", 6),
    (" 2 ", 2),
    pytest.param("0", None, marks=FAILURE),
    pytest.param("-3", None, marks=FAILURE),
    pytest.param("many", None, marks=FAILURE),
])
def test_worker_count_env(monkeypatch, value, expected):
    monkeypatch.setenv(config.THREADS_ENV, value)
    assert config.worker_count() == expected


def test_worker_count_default(monkeypatch):
    monkeypatch.delenv(config.THREADS_ENV, raising=False)
    assert 1 <= config.worker_count() <= 4
