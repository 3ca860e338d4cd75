import math

import pytest

from rectmod.errors import ConvergenceError, DomainError
from rectmod.roots import newton_bisect


def test_cube_root():
    x = newton_bisect(lambda x: x**3 - 2, lambda x: 3 * x * x, 0.0, 2.0)
    assert x == pytest.approx(2 ** (1 / 3), rel=4e-16)


def test_decreasing_function():
    x = newton_bisect(lambda x: math.exp(-x) - 0.5, lambda x: -math.exp(-x), 0.0, 5.0)
    assert x == pytest.approx(math.log(2), rel=4e-16)


def test_bad_derivative_falls_back_to_bisection():
    # derivative is garbage; bisection still converges
    x = newton_bisect(lambda x: x - 0.3, lambda x: 1e-30, 0.0, 1.0)
    assert x == pytest.approx(0.3, abs=1e-15)


def test_endpoint_root():
    assert newton_bisect(lambda x: x - 1.0, lambda x: 1.0, 1.0, 2.0) == 1.0


def test_no_bracket():
    with pytest.raises(DomainError):
        newton_bisect(lambda x: x * x + 1, lambda x: 2 * x, -1.0, 1.0)


def test_maxiter():
    with pytest.raises(ConvergenceError):
        newton_bisect(lambda x: x - 0.3, lambda x: 0.0, 0.0, 1.0, maxiter=3)


def test_adjacent_float_termination():
    # root of a function with a kink; tolerance too tight to meet except by exhausting floats
    x = newton_bisect(lambda x: math.copysign(1.0, x - 0.7), lambda x: 0.0, 0.0, 1.0, xtol=0.0)
    assert abs(x - 0.7) <= 2 * math.ulp(0.7)
