"""Property-based checks over random moduli and aspect ratios."""

import math

from hypothesis import assume, given
from hypothesis import strategies as st

from rectmod import elliptic, modulus, psimu
from rectmod.report import CheckReport, GridSpec, from_jsonl, to_jsonl

moduli = st.floats(min_value=1e-6, max_value=1 - 1e-6)
ratios = st.floats(min_value=1e-6, max_value=1e6)
aspects = st.floats(min_value=1e-3, max_value=1e3)
positive = st.floats(min_value=1e-3, max_value=1e3)


@given(positive, positive)
def test_agm_between_means(a, b):
    m = elliptic.agm(a, b)
    assert math.sqrt(a * b) * (1 - 1e-15) <= m <= 0.5 * (a + b) * (1 + 1e-15)
    assert m == elliptic.agm(b, a) or abs(m / elliptic.agm(b, a) - 1) < 1e-15


@given(moduli)
def test_legendre(r):
    assert abs(elliptic.legendre_residual(r)) < 1e-13 * max(1.0, elliptic.ellip_k(r))


@given(moduli, moduli)
def test_psi_increasing(r, s):
    assume(abs(r - s) > 1e-12 * max(r, s))
    r, s = min(r, s), max(r, s)
    assert psimu.psi(r) < psimu.psi(s)


@given(ratios)
def test_psi_round_trip(y):
    assert abs(psimu.psi(psimu.psi_inv(y)) / y - 1) < 1e-10


@given(moduli)
def test_psi_reciprocal(r):
    s, sc = psimu.reciprocal_partner(r)
    assert abs(psimu.psi(r) * psimu.psi(s, sc) - 1) < 1e-12


@given(moduli)
def test_psi_identities(r):
    a, b = psimu.psi_identity_residuals(r)
    assert a < 1e-12 and b < 1e-12


@given(moduli)
def test_psi_bounds(r):
    assert psimu.psi(r) in psimu.psi_bounds(r)


@given(moduli, moduli)
def test_geometric_mean_inequality(r, s):
    lhs = psimu.psi(math.sqrt(r * s))
    rhs = math.sqrt(psimu.psi(r) * psimu.psi(s))
    assert lhs <= rhs * (1 + 1e-13)


@given(st.floats(min_value=-3, max_value=3), positive, positive)
def test_power_mean_between_extremes(p, x, y):
    m = psimu.power_mean(p, x, y)
    assert min(x, y) * (1 - 1e-14) <= m <= max(x, y) * (1 + 1e-14)


@given(aspects)
def test_modulus_reciprocity(b):
    assert abs(modulus.exterior_modulus(b) * modulus.exterior_modulus(1 / b) - 1) < 1e-11


@given(aspects)
def test_modulus_bracket(b):
    mb = modulus.modulus_bounds(b)
    assert mb.lower < modulus.exterior_modulus(b) < mb.upper


@given(st.floats(min_value=1e-3, max_value=0.5), st.floats(min_value=1.0, max_value=10.0),
       st.integers(min_value=2, max_value=500), st.sampled_from(["uniform", "endpoint_refined", "logarithmic"]))
def test_grid_points(lo, width, n, law):
    g = GridSpec(lo, lo + width, n, law)
    pts = g.points()
    assert len(pts) == n
    assert pts[0] == lo and pts[-1] == lo + width
    assert all(a < b for a, b in zip(pts, pts[1:]))


@given(st.text(min_size=1, max_size=20), st.booleans(), st.floats(allow_nan=False),
       st.one_of(st.none(), st.floats(allow_nan=False), st.tuples(st.floats(allow_nan=False), st.floats(allow_nan=False))),
       st.integers(min_value=0, max_value=10**6))
def test_report_round_trip(cid, ok, margin, point, n):
    rep = CheckReport(cid, "pass" if ok else "fail", margin, point, n)
    assert from_jsonl(to_jsonl([rep])) == [rep]
