import pytest

from trabound.polynomials import identities
from trabound.polynomials.identities import BESSEL_SUITE, JACOBI_SUITE, run_polynomial_suite


@pytest.fixture(scope="module")
def suite():
    return run_polynomial_suite(seed=20240607, draws=12)


def test_every_identity_holds(suite):
    assert len(suite) == len(BESSEL_SUITE) + len(JACOBI_SUITE)
    bad = [r.to_dict() for r in suite if not r.passed]
    assert not bad


@pytest.mark.parametrize("seed", [1, 7, 99])
def test_other_seeds(seed):
    assert all(r.passed for r in run_polynomial_suite(seed=seed, draws=5))


def test_results_are_reproducible():
    a = [r.to_dict() for r in run_polynomial_suite(seed=3, draws=3)]
    b = [r.to_dict() for r in run_polynomial_suite(seed=3, draws=3)]
    assert a == b


def test_checks_detect_a_broken_recursion(monkeypatch):
    from trabound.polynomials import families

    real = families.rjacobi_coefficients

    def broken(mu, nu, n):
        b, c, d = real(mu, nu, n)
        return b * 1.01, c, d

    monkeypatch.setattr(families, "rjacobi_coefficients", broken)
    import numpy as np

    result = identities.check_jacobi_recursion_vs_series(np.random.default_rng(0), 5)
    assert not result.passed


def test_tracker_flags_nan():
    tr = identities._Tracker("x", 1e-10)
    tr.add(float("nan"), "here")
    assert not tr.result().passed
