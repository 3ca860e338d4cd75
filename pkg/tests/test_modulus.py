import math

import numpy as np
import pytest

from rectmod import modulus, psimu
from rectmod.errors import DomainError


def test_unit_square():
    assert modulus.exterior_modulus(1.0) == pytest.approx(1.0, abs=1e-12)


def test_interior():
    assert modulus.interior_modulus(3.5) == 3.5
    with pytest.raises(DomainError):
        modulus.interior_modulus(0.0)


@pytest.mark.parametrize("b", [0.0, -1.0, 1e-9, 1e9, math.nan])
def test_range_guard(b):
    with pytest.raises(DomainError):
        modulus.exterior_modulus(b)


def test_known_values():
    assert modulus.exterior_modulus(0.5) == pytest.approx(0.8658571, rel=1e-6)
    assert modulus.exterior_modulus(2.0) == pytest.approx(1.1549249, rel=1e-6)


def test_bounds_at_one():
    mb = modulus.modulus_bounds(1.0)
    assert mb.lower == pytest.approx(0.910703171343236, rel=1e-14)
    assert mb.upper == pytest.approx(1.0890977377032844, rel=1e-14)
    assert 1.0 in mb.pair


@pytest.mark.parametrize("b", [1e-8, 1e-3, 0.25, 1.0, 10.0, 100.0, 1e3, 1e8])
def test_bracket_and_relaxations(b):
    mb = modulus.modulus_bounds(b)
    m = modulus.exterior_modulus(b)
    assert mb.lower_relaxed < mb.lower < m < mb.upper < mb.upper_relaxed


def test_reciprocity_of_moduli():
    for b in np.logspace(-3, 3, 25):
        assert modulus.exterior_modulus(float(b)) * modulus.exterior_modulus(1 / float(b)) == pytest.approx(1.0, rel=1e-12)


def test_reciprocity_residuals():
    for r in (1e-6, 0.1, 0.5, 0.9, 1 - 1e-6):
        a, b = modulus.reciprocity_residual(r)
        assert a < 1e-13 and b < 1e-13


def test_rectangle_record():
    res = modulus.rectangle(100.0)
    assert res.exterior < 100 and res.lower < res.exterior < res.upper
    assert psimu.psi(res.r) == pytest.approx(0.01, rel=1e-13)


def test_logarithmic_growth_normalisation():
    # M, L and U all grow like log(b)/pi; the ratio approaches 1 slowly from above
    ratios = []
    for b in (1e4, 1e6, 1e8):
        mb = modulus.modulus_bounds(b)
        m = modulus.exterior_modulus(b)
        for x in (mb.lower, m, mb.upper):
            assert 1.0 < math.pi * x / math.log(b) < 1.3
        ratios.append(math.pi * m / math.log(b))
    assert ratios[0] > ratios[1] > ratios[2]


def test_comparison_gap_sign_and_zero():
    assert abs(modulus.comparison_gap(1.0)) < 1e-12
    assert modulus.comparison_gap(0.5) < 0 < modulus.comparison_gap(2.0)


def test_r0_and_argmax():
    r0 = modulus.r0_constant()
    assert r0 == pytest.approx(8.246386384038784, rel=1e-13)
    assert abs(modulus.comparison_gap_argmax() - r0) < 1e-6


def test_comparison_gap_decays_logarithmically():
    # the gap tends to zero only like (pi/2)/log(4 sqrt r); at 1e6 it is still ~0.19
    for r in (1e4, 1e6, 1e8):
        g = modulus.comparison_gap(r)
        assert g * math.log(4 * math.sqrt(r)) == pytest.approx(math.pi / 2, rel=0.03)
    assert 0.15 < modulus.comparison_gap(1e6) < 0.25


def test_power_mean_checks():
    assert modulus.modulus_power_mean_check(0.5, 2.0).passed
    rep = modulus.modulus_power_mean_check(2.0, 2.0, 2)
    assert rep.passed and rep.worst_margin <= 1e-10
    for p in (-2, -1, 1, 2):
        assert modulus.modulus_power_mean_check(0.3, 7.0, p).passed
    with pytest.raises(DomainError):
        modulus.modulus_power_mean_check(1.0, 2.0, 0.5)


def test_exterior_increasing_in_b():
    ms = [modulus.exterior_modulus(float(b)) for b in np.logspace(-8, 8, 200)]
    assert all(a < b for a, b in zip(ms, ms[1:]))


def test_gap_either_side_of_r0():
    r0 = modulus.r0_constant()
    top = modulus.comparison_gap(r0)
    assert modulus.comparison_gap(r0 - 0.5) < top
    assert modulus.comparison_gap(r0 + 0.5) < top
