"""
    QCoherentPy/test_verify.py

"""
# Python Dependencies
import json
import math
import numpy as np
import pytest

from .helpers import FAILURE

from QCoherentPy import verify
from QCoherentPy.oscillator import energy


SMALL = verify.SuiteOptions(q_list=(0.5,), m_max=1, j_max=4, draws=5)


@pytest.mark.parametrize("kwargs", [
    {},
    {"q_list": (0.3, 0.8), "m_values": (2,)},
    pytest.param({"q_list": (1.2,)}, marks=FAILURE),
    pytest.param({"limit_q": (0.9, 1.0)}, marks=FAILURE),
    pytest.param({"draws": 0}, marks=FAILURE),
    pytest.param({"m_max": -1}, marks=FAILURE),
])
def test_suite_options(kwargs):
    opts = verify.SuiteOptions(**kwargs)
    assert json.loads(json.dumps(opts.to_dict()))["j_max"] == opts.j_max


def test_suite_options_levels_and_tolerance():
    opts = verify.SuiteOptions(m_max=5)
    assert opts.levels() == [0, 1, 2, 3, 4, 5]
    assert opts.levels(3) == [0, 1, 2, 3]
    assert verify.SuiteOptions(m_values=(4, 1)).levels(3) == [1]
    assert opts.tolerance("ladder") == 1e-9
    assert verify.SuiteOptions(tol=0.5).tolerance("ladder") == 0.5


def test_suite_options_rng_is_seeded():
    a = verify.SuiteOptions(seed=3).rng("label").random()
    assert a == verify.SuiteOptions(seed=3).rng("label").random()
    assert a != verify.SuiteOptions(seed=4).rng("label").random()


@pytest.mark.parametrize("residual, tolerance, passed", [
    (0.0, 0.0, True),
    (1e-12, 1e-10, True),
    (1e-9, 1e-10, False),
    (None, 1.0, False),
])
def test_case_passed(residual, tolerance, passed):
    case = verify.Case({"q": 0.5, "check": "x"}, residual, tolerance)
    assert case.passed is passed
    assert case.to_dict()["pass"] is passed
    assert "observed" not in case.to_dict()


def test_case_key_is_canonical():
    case = verify.Case({"q": 0.5, "check": "ladder"}, 0.0, 1.0)
    assert case.key == '{"check":"ladder","q":0.5}'


def test_report_layout():
    cases = [verify.Case({"q": 0.3}, 0.0, 1.0), verify.Case({"q": 0.5}, 2.0, 1.0)]
    report = verify.VerificationReport("ladder", 7, cases, {"note": "x"}, 0, {"draws": 1})
    assert (report.passed, report.failed, report.all_passed) == (1, 1, False)
    document = json.loads(report.to_json())
    assert document["schema_version"] == verify.SCHEMA_VERSION
    assert document["summary"] == {"passed": 1, "failed": 1, "wall_time_ms": 0}
    assert sorted(document) == ["cases", "findings", "options", "schema_version", "seed", "suite", "summary"]
    assert report.to_json().endswith("}\n")


@pytest.mark.parametrize("lhs, rhs, scale, expected", [
    (1.0, 1.0, 0.0, 0.0),
    (2.0, 1.0, 0.0, 0.5),
    (1e-3, 0.0, 0.0, 1e-3),
    (1e-3, 0.0, 10.0, 1e-4),
    ([1.0, 4.0], [1.0, 2.0], 0.0, 0.5),
])
def test_relative_residual(lhs, rhs, scale, expected):
    assert verify.relative_residual(lhs, rhs, scale) == pytest.approx(expected, rel=1e-14)


def test_plain():
    value = verify._plain({"a": np.float64(1.5), "b": 1 + 2j, "c": [np.int64(3), math.inf], "d": np.bool_(True)})
    assert value == {"a": 1.5, "b": [1.0, 2.0], "c": [3, None], "d": True}


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify.run_suite("nope", SMALL)


def test_suite_names():
    names = verify.suite_names()
    assert names[-1] == "all"
    assert set(names[:-1]) == set(verify.SUITES)


def test_qidentities_pass_and_reproduce():
    report = verify.run_suite("qidentities", SMALL)
    assert len(report.cases) == len(verify.IDENTITIES)
    assert report.all_passed, [c.to_dict() for c in report.cases if not c.passed]
    assert [c.key for c in report.cases] == sorted(c.key for c in report.cases)
    assert all(c.params["check"] == "qidentities" for c in report.cases)
    assert report.to_json() == verify.run_suite("qidentities", SMALL).to_json()


@pytest.mark.parametrize("d", [0, 1, 3])
def test_wall_orthogonality(d):
    assert verify.wall_orthogonality_residual(0.5, d) <= 1e-10


def test_ladder_findings():
    report = verify.run_suite("ladder", SMALL)
    assert report.all_passed
    assert report.findings["ladder_printed_form"] == "holds only at j=0"


def test_hamiltonian_findings():
    report = verify.run_suite("hamiltonian", SMALL)
    assert report.all_passed
    assert report.findings["hamiltonian_printed_form"] == "opposite sign on the double shift"


def test_pairing_finding():
    report = verify.run_suite("rs-orthonormality", SMALL)
    assert report.all_passed
    assert report.findings["pairing"] == "sesquilinear"


def test_kernel_suite():
    report = verify.run_suite("kernel-three-forms", SMALL)
    assert report.all_passed
    assert {c.params["check"] for c in report.cases} == {"kernel-three-forms", "gram-psd"}


def test_tolerance_override_fails():
    opts = verify.SuiteOptions(q_list=(0.5,), m_max=0, j_max=3, draws=5, tol=0.0)
    assert not verify.run_suite("ladder", opts).all_passed


def test_timing():
    assert verify.run_suite("wall-orthogonality", SMALL).wall_time_ms == 0
    assert verify.run_suite("wall-orthogonality", SMALL, timing=True).wall_time_ms >= 0


@pytest.mark.parametrize("quantity", ["qexp", "energy", "rs-eigenfunction"])
def test_limits_decrease(quantity):
    errors = verify.limit_errors(quantity, 0, (0.9, 0.99, 0.999))
    assert errors[0] > errors[1] > errors[2]


def test_energy_limit_value():
    errors = verify.limit_errors("energy", 0, (0.9,))
    assert errors[0] == pytest.approx(max(abs(energy(j, 0.9) - j - 0.5) for j in range(6)), rel=1e-14)


def test_unknown_limit():
    with pytest.raises(ValueError):
        verify.limit_errors("nope", 0, (0.9,))


@pytest.mark.parametrize("errors, expected", [
    ([2.8e-17, 3.9e-17, 2.8e-17], 0.0),
    ([0.0, 4.0e-15, 5.1e-15], 0.0),
    ([1e-3, 1e-5, 1e-7], 0.0),
    ([1e-5, 1e-3, 1e-6], 1e-3 - 1e-5),
    ([1e-14, 1e-9], 1e-9 - 1e-12),
])
def test_limit_increase(errors, expected):
    assert verify.limit_increase(errors, 1e-12) == pytest.approx(expected, abs=1e-20)


@pytest.mark.parametrize("m, expected", [(0, None), (1, "sqrt2")])
def test_polyanalytic_finding(m, expected):
    report = verify.run_suite("limits-q1", verify.SuiteOptions(m_values=(m,)))
    assert report.all_passed, [c.to_dict() for c in report.cases if not c.passed]
    assert report.findings.get("polyanalytic_argument") == expected


@pytest.mark.parametrize("suite", sorted(verify.SUITES))
def test_default_sweep_passes(suite):
    report = verify.run_suite(suite)
    assert report.all_passed, [c.to_dict() for c in report.cases if not c.passed]


def test_failing_case_is_recorded(monkeypatch):
    from QCoherentPy.errors import DomainError

    def broken(opts):
        def run():
            raise DomainError("outside")
        return [verify.Task("ladder", {"q": 0.5}, run)]

    monkeypatch.setitem(verify.SUITES, "ladder", broken)
    report = verify.run_suite("ladder", SMALL)
    assert report.failed == 1
    assert report.cases[0].residual is None
    assert report.cases[0].observed["error"].startswith("DomainError")
