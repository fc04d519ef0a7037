import math

import pytest
from hypothesis import given, strategies as st

from trabound.errors import NoSignChangeError, NonFiniteError, QuadratureError
from trabound.numerics.quadrature import integrate
from trabound.numerics.roots import find_root_bracketed


@given(st.floats(-50, 50), st.floats(0.1, 10))
def test_root_of_shifted_cubic(c, width):
    f = lambda x: (x - c) ** 3 + 0.1 * (x - c)
    root = find_root_bracketed(f, c - width, c + 0.7 * width)
    assert root == pytest.approx(c, abs=1e-12 * (1 + abs(c)))


def test_root_transcendental():
    assert find_root_bracketed(math.cos, 1.0, 2.0) == pytest.approx(math.pi / 2, abs=1e-14)


def test_root_endpoints_and_swapped_bracket():
    assert find_root_bracketed(lambda x: x, 0.0, 1.0) == 0.0
    assert find_root_bracketed(lambda x: x - 1.0, 2.0, -1.0) == pytest.approx(1.0, abs=1e-14)


def test_root_requires_sign_change():
    with pytest.raises(NoSignChangeError):
        find_root_bracketed(lambda x: x * x + 1.0, -1.0, 1.0)


def test_root_non_finite():
    with pytest.raises(NonFiniteError):
        find_root_bracketed(lambda x: float("nan"), 0.0, 1.0)


@pytest.mark.parametrize(
    "f, a, b, exact",
    [
        (math.exp, 0.0, 1.0, math.e - 1.0),
        (lambda x: math.exp(-x * x), -math.inf, math.inf, math.sqrt(math.pi)),
        (lambda x: math.exp(-x), 0.0, math.inf, 1.0),
        (lambda x: 1.0 / (1.0 + x * x), -math.inf, 0.0, math.pi / 2),
        (lambda x: 1.0 / math.sqrt(x), 0.0, 1.0, 2.0),
        (lambda x: math.sin(x) ** 2, 0.0, math.pi, math.pi / 2),
    ],
)
def test_integrals(f, a, b, exact):
    assert integrate(f, a, b, tol=1e-12) == pytest.approx(exact, rel=1e-9)


def test_integral_orientation():
    assert integrate(math.exp, 1.0, 0.0) == pytest.approx(1.0 - math.e, rel=1e-12)
    assert integrate(math.exp, 2.0, 2.0) == 0.0


@given(st.integers(0, 8), st.floats(0.5, 3.0))
def test_polynomial_moments(k, b):
    assert integrate(lambda x: x**k, 0.0, b) == pytest.approx(b ** (k + 1) / (k + 1), rel=1e-11)


def test_quadrature_gives_up():
    with pytest.raises(QuadratureError) as info:
        integrate(lambda x: math.sin(1.0 / x) / x, 1e-6, 1.0, tol=1e-15, max_intervals=20)
    assert math.isfinite(info.value.estimate) and info.value.error > 0.0
