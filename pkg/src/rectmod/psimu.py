"""The function psi, Groetzsch's ring modulus mu, their derivatives and inverses.

    psi(r) = 2 (E - (1-r) K) / (E' - r K'),     r in (0, 1)
    mu(r)  = (pi/2) K' / K

psi is an increasing convex homeomorphism of (0,1) onto (0,inf); mu is a
decreasing one onto (inf, 0). Both numerator and denominator of psi are
taken from the cancellation-free combinations in ``elliptic``, so psi keeps
full relative accuracy up to both endpoints without switching formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .elliptic import EllipticState, complement
from .errors import DomainError
from .roots import newton_bisect

PI = math.pi
PI2 = PI * PI
SQRT2 = math.sqrt(2.0)
#: the point where psi equals 1 (and mu equals pi)
R_UNIT = 3.0 - 2.0 * SQRT2


def _check_open(r: float) -> None:
    if not (0.0 < r < 1.0):
        raise DomainError(f"r={r!r} outside (0,1); domain is (0,1)")


def psi(r: float, rc: float | None = None) -> float:
    _check_open(r)
    st = EllipticState(r, rc)
    return 2.0 * st.e_minus_1mr_k / st.ec_minus_r_kc


def psi_prime(r: float, rc: float | None = None) -> float:
    """d psi/dr = pi/(1-r^2) * ((1-r)/(E' - r K'))^2."""
    _check_open(r)
    st = EllipticState(r, rc)
    q = st.one_minus_r / st.ec_minus_r_kc
    return PI * q * q / (st.one_minus_r * (1.0 + st.r))


def mu(r: float, rc: float | None = None) -> float:
    _check_open(r)
    st = EllipticState(r, rc)
    return 0.5 * PI * st.kc / st.k


def mu_prime(r: float, rc: float | None = None) -> float:
    """d mu/dr = -pi^2 / (4 r r'^2 K^2)."""
    _check_open(r)
    st = EllipticState(r, rc)
    return -PI2 / (4.0 * st.r * st.rcsq * st.k * st.k)


class _Memo:
    """Keeps the last EllipticState so f and f' at the same point share sweeps."""

    def __init__(self):
        self.r = None
        self.st = None

    def __call__(self, r: float) -> EllipticState:
        if r != self.r:
            self.r, self.st = r, EllipticState(r)
        return self.st


def psi_bracket(y: float) -> tuple[float, float]:
    """Enclosure of psi^-1(y) from 4r/(pi(1-sqrt r)^2) < psi(r) < pi r/(1-sqrt r)^2."""
    sy = math.sqrt(y)
    lo = (sy / (math.sqrt(PI) + sy)) ** 2
    hi = (sy / (math.sqrt(4.0 / PI) + sy)) ** 2
    return lo, hi


def psi_inv(y: float) -> float:
    """The r in (0,1) with psi(r) = y.

    Newton on log psi(r) - log y, started inside the elementary bracket and
    kept there by bisection.
    """
    if not (y > 0.0) or math.isinf(y):
        raise DomainError(f"psi^-1 needs 0 < y < inf, got {y!r}")
    lo, hi = psi_bracket(y)
    if not (0.0 < lo and hi < 1.0):
        raise DomainError(f"psi^-1({y}) is not representable in binary64")
    memo = _Memo()
    log_y = math.log(y)

    def g(r):
        st = memo(r)
        return math.log(2.0 * st.e_minus_1mr_k / st.ec_minus_r_kc) - log_y

    def dg(r):
        st = memo(r)
        f1, f3 = st.e_minus_1mr_k, st.ec_minus_r_kc
        # psi'/psi = pi (1-r) / (2 (1+r) f1 f3)
        return PI * st.one_minus_r / (2.0 * (1.0 + r) * f1 * f3)

    # conditioning of psi grows like 2/(1-r): resolve r to the last ulp
    return newton_bisect(g, dg, lo, hi, xtol=1e-18)


def mu_inv(m: float) -> float:
    """The r in (0,1) with mu(r) = m."""
    if not (m > 0.0) or math.isinf(m):
        raise DomainError(f"mu^-1 needs 0 < m < inf, got {m!r}")
    if m < 0.5 * PI:
        # mu(r) mu(r') = pi^2/4
        rc = _mu_inv_small_r(PI2 / (4.0 * m))
        return complement(rc)
    return _mu_inv_small_r(m)


def _mu_inv_small_r(m: float) -> float:
    # m >= pi/2, so r <= 1/sqrt(2); solve in t = log r.
    # sqrt(r') log(4/r) < mu(r) < log(4/r) brackets r.
    lo = math.log(4.0) - 2.0 ** 0.25 * m - 1e-3
    hi = min(math.log(4.0) - m + 1e-3, -0.5 * math.log(2.0))
    if lo < math.log(5e-324) + 1.0:
        raise DomainError(f"mu^-1({m}) underflows")
    memo = _Memo()

    def g(t):
        st = memo(math.exp(t))
        return 0.5 * PI * st.kc / st.k - m

    def dg(t):
        st = memo(math.exp(t))
        return -PI2 / (4.0 * st.rcsq * st.k * st.k)

    return math.exp(newton_bisect(g, dg, lo, hi, xtol=1e-16))


def psi_identity_residuals(r: float) -> tuple[float, float]:
    """Relative residuals of the two product identities

        psi(r^2) psi(((1-r)/(1+r))^2) = 1
        psi((1-r)/(1+r)) psi((1-r')/(1+r')) = 1

    Every argument is paired with its exactly formed complement.
    """
    _check_open(r)
    rc = complement(r)
    x, xc = r * r, math.sqrt((1.0 - r) * (1.0 + r) * (1.0 + r * r))
    t = (1.0 - r) / (1.0 + r)
    one_minus_t2 = 4.0 * r / (1.0 + r) ** 2
    y, yc = t * t, math.sqrt(one_minus_t2 * (1.0 + t * t))
    first = psi(x, xc) * psi(y, yc)

    u, uc = t, 2.0 * math.sqrt(r) / (1.0 + r)
    v = r * r / (1.0 + rc) ** 2  # (1-r')/(1+r')
    vc = 2.0 * math.sqrt(rc) / (1.0 + rc)
    second = psi(u, uc) * psi(v, vc)
    return _rel(first, 1.0), _rel(second, 1.0)


def reciprocal_partner(r: float) -> tuple[float, float]:
    """s = ((1 - sqrt r)/(1 + sqrt r))^2 and its complement; psi(r) psi(s) = 1."""
    sr = math.sqrt(r)
    w = (1.0 - r) / (1.0 + sr) ** 2  # 1 - sqrt r without the cancellation
    one_minus_w2 = 4.0 * sr / (1.0 + sr) ** 2
    return w * w, math.sqrt(one_minus_w2 * (1.0 + w * w))


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b))


@dataclass(frozen=True)
class BoundPair:
    lower: float
    upper: float
    lower_source: str
    upper_source: str

    def __contains__(self, value: float) -> bool:
        return self.lower < value < self.upper


def psi_bounds(r: float) -> BoundPair:
    """Elementary two-sided enclosure of psi(r).

    lower = max(pi r/(1-r)^2, 4r/(pi (1-sqrt r)^2))
    upper = min(16r/(pi (1-r)^2), pi r/(1-sqrt r)^2)
    """
    _check_open(r)
    a = (1.0 - r) ** 2
    b = ((1.0 - r) / (1.0 + math.sqrt(r))) ** 2  # (1 - sqrt r)^2
    lows = {"pi*r/(1-r)^2": PI * r / a, "4r/(pi*(1-sqrt(r))^2)": 4.0 * r / (PI * b)}
    ups = {"16r/(pi*(1-r)^2)": 16.0 * r / (PI * a), "pi*r/(1-sqrt(r))^2": PI * r / b}
    lo_src = max(lows, key=lows.get)
    up_src = min(ups, key=ups.get)
    return BoundPair(lows[lo_src], ups[up_src], lo_src, up_src)


def f8(r: float) -> float:
    """(E - (1-r) K) / (sqrt(r) (1-r) K), increasing from 0 to inf on (0,1)."""
    _check_open(r)
    st = EllipticState(r)
    return st.e_minus_1mr_k / (math.sqrt(r) * st.one_minus_r * st.k)


def f8_prime(r: float) -> float:
    _check_open(r)
    st = EllipticState(r)
    k, e = st.k, st.e
    a = r * k + st.k_minus_e  # (1+r)K - E
    b = e + st.e_minus_rc2k  # 2E - r'^2 K
    omr = st.one_minus_r
    return a * b / (2.0 * r ** 1.5 * (1.0 + r) * omr * omr * k * k)


def f8_root() -> float:
    """The unique r with f8(r) = 1 (about 0.479047)."""
    return newton_bisect(lambda r: f8(r) - 1.0, f8_prime, 0.1, 0.9)


def power_mean(p: float, x: float, y: float) -> float:
    """H_p(x, y) = ((x^p + y^p)/2)^(1/p), and sqrt(xy) at p = 0."""
    if not (x > 0 and y > 0):
        raise DomainError(f"power mean needs positive arguments, got ({x}, {y})")
    if p == 0:
        return math.sqrt(x) * math.sqrt(y)
    # factor out the term that dominates x^p + y^p so nothing overflows
    m = max(x, y) if p > 0 else min(x, y)
    s = 0.5 * ((x / m) ** p + (y / m) ** p)
    return m * math.exp(math.log(s) / p)
