import pytest

from rectmod import landen
from rectmod.errors import DomainError
from rectmod.report import GridSpec

GRID = [float(r) for r in GridSpec(1e-6, 1 - 1e-6, 200, "endpoint_refined").points()]


@pytest.mark.parametrize("r", GRID[::10] + [GRID[-1]])
def test_landen_residuals(r):
    rows = landen.landen_residuals(r)
    assert [x.identity_id for x in rows] == list(landen.LANDEN_IDS)
    assert max(x.residual for x in rows) < 1e-13


@pytest.mark.parametrize("r", GRID[::10] + [GRID[-1]])
def test_quadratic_residuals(r):
    rows = landen.quadratic_residuals(r)
    assert [x.identity_id for x in rows] == list(landen.QUADRATIC_IDS)
    assert max(x.residual for x in rows) < 1e-13


def test_composition():
    assert max(landen.composed_k_residual(r) for r in GRID) < 1e-14


def test_residual_detects_mismatch():
    row = landen.IdentityResidual("x", 1.0, 1.0 + 1e-6)
    assert row.residual == pytest.approx(1e-6, rel=1e-5)


@pytest.mark.parametrize("r", [0.0, 1.0, -0.5])
def test_domain(r):
    with pytest.raises(DomainError):
        landen.landen_residuals(r)


def test_second_identity_at_inverse_sqrt2():
    import math

    from rectmod.elliptic import EllipticState

    r = 1 / math.sqrt(2)
    lhs = EllipticState(3 - 2 * math.sqrt(2)).k
    rhs = 0.5 * (1 + r) * EllipticState(r).k
    assert lhs == pytest.approx(rhs, rel=1e-15)
    assert max(x.residual for x in landen.quadratic_residuals(r)) < 1e-14
