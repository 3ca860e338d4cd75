"""Complete elliptic integrals K, E and their cancellation-free combinations.

Evaluation runs the arithmetic-geometric mean on (1, r') and carries the
sums of the c_n terms along. With c_{n+1} = c_n^2 / (4 a_{n+1}) every
quantity in the sweep is formed without subtraction, and

    K          = pi / (2 a_N)
    K - E      = K * (c_0^2/2 + c_1^2 + 2 c_2^2 + 4 c_3^2 + ...)
    E - r'^2 K = K * (c_0^2/2 - c_1^2 - 2 c_2^2 - ...)
    E - r' K   = K * (c_1^2 - 2 c_2^2 - 4 c_3^2 - ...)

The last two brackets never cancel badly (the leading term dominates by
a wide margin except where K itself is large), so differences that go to
zero at an endpoint keep full relative accuracy there.

Every evaluator accepts an optional complementary modulus ``rc``. When a
caller knows sqrt(1 - r^2) more precisely than it can be recovered from
the rounded ``r`` (e.g. r = 2 sqrt(x)/(1 + x) with x near 1), passing it
keeps the near-one behaviour exact.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Literal, NamedTuple

from .errors import ConvergenceError, DomainError

HALF_PI = 0.5 * math.pi
EPS = sys.float_info.epsilon
AGM_MAX_ITER = 64

Combination = Literal["e_minus_rc2k", "k_minus_e", "e_minus_1mr_k", "ec_minus_r_kc"]
COMBINATIONS = ("e_minus_rc2k", "k_minus_e", "e_minus_1mr_k", "ec_minus_r_kc")


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    if not (a > 0 and b > 0):
        raise DomainError(f"agm needs positive arguments, got ({a}, {b})")
    for _ in range(AGM_MAX_ITER):
        if abs(a - b) <= 4 * EPS * a:
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    raise ConvergenceError(f"agm({a}, {b}) did not settle in {AGM_MAX_ITER} steps")


def complement(r: float) -> float:
    """r' = sqrt(1 - r^2), formed as sqrt((1-r)(1+r))."""
    return math.sqrt((1.0 - r) * (1.0 + r))


class _Sweep(NamedTuple):
    k: float
    c0sq: float
    c1sq: float
    tail: float  # sum_{n>=2} 2^(n-1) c_n^2


def _sweep(xc: float, xsq: float) -> _Sweep:
    # AGM on (1, xc); xsq = 1 - xc^2 supplied separately so it keeps full precision.
    a, b = 1.0, xc
    csq = xsq
    c1sq = 0.0
    tail = 0.0
    weight = 1.0
    for n in range(1, AGM_MAX_ITER + 1):
        a_next = 0.5 * (a + b)
        b = math.sqrt(a * b)
        c = csq / (4.0 * a_next)
        csq = c * c
        a = a_next
        if n == 1:
            c1sq = csq
        else:
            weight *= 2.0
            tail += weight * csq
        if c <= 2 * EPS * a:
            return _Sweep(math.pi / (2.0 * a), xsq, c1sq, tail)
    raise ConvergenceError("AGM sweep did not converge")


def _pair(r: float, rc: float | None, *, closed_low: bool = False) -> tuple[float, float, float]:
    """Validate ``r`` and return (r, r', r'^2)."""
    lo_ok = r >= 0.0 if closed_low else r > 0.0
    if not (lo_ok and r < 1.0):
        dom = "[0,1)" if closed_low else "(0,1)"
        raise DomainError(f"modulus r={r!r} outside {dom}; domain is {dom}")
    if rc is None:
        rcsq = (1.0 - r) * (1.0 + r)
        return r, math.sqrt(rcsq), rcsq
    if not (0.0 < rc <= 1.0):
        raise DomainError(f"complementary modulus {rc!r} outside (0,1]")
    return r, rc, rc * rc


@dataclass(frozen=True)
class EllipticValues:
    """K, E at r together with K' = K(r') and E' = E(r')."""

    k: float
    e: float
    kc: float
    ec: float


class EllipticState:
    """Both AGM sweeps at one modulus, exposing the stable combinations.

    Attribute names: ``rc`` is r', the ``c`` suffix on k/e marks the
    complementary integrals K' and E'.
    """

    __slots__ = ("r", "rc", "rcsq", "one_minus_r", "_s", "_sc")

    def __init__(self, r: float, rc: float | None = None):
        given = rc is not None
        self.r, self.rc, self.rcsq = _pair(r, rc)
        # 1 - r from r'^2 when r' is authoritative (r itself may be rounded near 1)
        self.one_minus_r = self.rcsq / (1.0 + self.r) if given else 1.0 - self.r
        self._s = _sweep(self.rc, self.r * self.r)
        self._sc = _sweep(self.r, self.rcsq)

    @property
    def k(self) -> float:
        return self._s.k

    @property
    def kc(self) -> float:
        return self._sc.k

    @property
    def e(self) -> float:
        s = self._s
        return s.k * (1.0 - 0.5 * s.c0sq - s.c1sq - s.tail)

    @property
    def ec(self) -> float:
        s = self._sc
        return s.k * (1.0 - 0.5 * s.c0sq - s.c1sq - s.tail)

    @property
    def k_minus_e(self) -> float:
        s = self._s
        return s.k * (0.5 * s.c0sq + s.c1sq + s.tail)

    @property
    def kc_minus_ec(self) -> float:
        s = self._sc
        return s.k * (0.5 * s.c0sq + s.c1sq + s.tail)

    @property
    def e_minus_rc2k(self) -> float:
        """E - r'^2 K."""
        s = self._s
        return s.k * (0.5 * s.c0sq - s.c1sq - s.tail)

    @property
    def e_minus_rck(self) -> float:
        """E - r' K."""
        s = self._s
        return s.k * (s.c1sq - s.tail)

    @property
    def ec_minus_r_kc(self) -> float:
        """E' - r K'."""
        s = self._sc
        return s.k * (s.c1sq - s.tail)

    @property
    def e_minus_1mr_k(self) -> float:
        """E - (1-r) K, as (E - r'^2 K) + r(1-r) K: both terms positive."""
        return self.e_minus_rc2k + self.r * self.one_minus_r * self.k

    def values(self) -> EllipticValues:
        return EllipticValues(self.k, self.e, self.kc, self.ec)


def ellip_k(r: float, rc: float | None = None) -> float:
    """K(r) for r in [0, 1). Raises DomainError at r = 1 where K diverges."""
    if r == 1.0 and rc is None:
        raise DomainError("K(1-) = inf; domain is [0,1)")
    r, rc, rcsq = _pair(r, rc, closed_low=True)
    return _sweep(rc, r * r).k


def ellip_e(r: float, rc: float | None = None) -> float:
    """E(r) for r in [0, 1], with E(1) = 1."""
    if r == 1.0:
        return 1.0
    r, rc, rcsq = _pair(r, rc, closed_low=True)
    s = _sweep(rc, r * r)
    return s.k * (1.0 - 0.5 * s.c0sq - s.c1sq - s.tail)


def elliptic_values(r: float, rc: float | None = None) -> EllipticValues:
    return EllipticState(r, rc).values()


def elliptic_combination(kind: Combination, r: float, rc: float | None = None) -> float:
    """One of E - r'^2 K, K - E, E - (1-r) K, E' - r K' at full relative accuracy."""
    if kind not in COMBINATIONS:
        raise ValueError(f"unknown combination {kind!r}; expected one of {COMBINATIONS}")
    return getattr(EllipticState(r, rc), kind)


def legendre_residual(r: float, rc: float | None = None) -> float:
    """E K' + E' K - K K' - pi/2, which vanishes identically."""
    st = EllipticState(r, rc)
    # E' K - K K' = -K (K' - E'); keeps one large cancellation instead of two
    return st.e * st.kc - st.k * st.kc_minus_ec - HALF_PI


def series_oracle(which: Literal["K", "E"], r: float, tol: float = 1e-16) -> float:
    """K or E from the hypergeometric Maclaurin series in r^2.

    Independent of the AGM path; slow near r = 1 and refused above 0.99.
    Summation stops once the current term, times the geometric bound on the
    remaining tail, is below ``tol`` relative to the partial sum.
    """
    if which not in ("K", "E"):
        raise ValueError("which must be 'K' or 'E'")
    if not (0.0 <= r <= 0.99):
        raise DomainError(f"series oracle needs 0 <= r <= 0.99, got {r}")
    m = r * r
    coef = 1.0  # ((2n-1)!! / (2n)!!)^2
    power = 1.0
    terms = [1.0]
    running = 1.0
    tail_factor = 1.0 / (1.0 - m) if m > 0 else 0.0
    for n in range(1, 200_000):
        coef *= ((2 * n - 1) / (2 * n)) ** 2
        power *= m
        t = coef * power
        if which == "E":
            t /= 1 - 2 * n
        terms.append(t)
        running += t
        if abs(t) * tail_factor <= tol * abs(running) or t == 0.0:
            return HALF_PI * math.fsum(terms)
    raise ConvergenceError(f"series for {which}({r}) did not converge")
