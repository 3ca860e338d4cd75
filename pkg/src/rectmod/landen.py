"""Landen's transformations and the quadratic identities derived from them.

Each identity is returned as both sides evaluated independently plus their
relative residual |lhs - rhs| / max(|lhs|, |rhs|). Transformed moduli are
always passed with their complements formed in closed form, e.g.

    k = 2 sqrt(r)/(1+r)   has   k' = (1-r)/(1+r)

so the near-one side of each identity is exact and the residuals stay at
rounding level across the whole of (0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .elliptic import EllipticState
from .errors import DomainError

IdentityId = Literal[
    "transfk1", "transfk2", "transfe1", "transfe2",
    "mytransfk", "mytransfkk", "mytransfe", "mytransfee",
]
LANDEN_IDS = ("transfk1", "transfk2", "transfe1", "transfe2")
QUADRATIC_IDS = ("mytransfk", "mytransfkk", "mytransfe", "mytransfee")


@dataclass(frozen=True)
class IdentityResidual:
    identity_id: str
    lhs: float
    rhs: float

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs) / max(abs(self.lhs), abs(self.rhs))


def _check(r: float) -> None:
    if not (0.0 < r < 1.0):
        raise DomainError(f"r={r!r} outside (0,1); domain is (0,1)")


def landen_residuals(r: float) -> list[IdentityResidual]:
    """The four Landen identities at r:

    K(2 sqrt r/(1+r)) = (1+r) K(r)
    K((1-r)/(1+r))    = (1+r) K'(r) / 2
    E(2 sqrt r/(1+r)) = (2E(r) - r'^2 K(r)) / (1+r)
    E((1-r)/(1+r))    = (E'(r) + r K'(r)) / (1+r)
    """
    _check(r)
    up = 2.0 * math.sqrt(r) / (1.0 + r)
    down = (1.0 - r) / (1.0 + r)
    at_up = EllipticState(up, down)
    at_down = EllipticState(down, up)
    st = EllipticState(r)
    return [
        IdentityResidual("transfk1", at_up.k, (1.0 + r) * st.k),
        IdentityResidual("transfk2", at_down.k, 0.5 * (1.0 + r) * st.kc),
        IdentityResidual("transfe1", at_up.e, (st.e + st.e_minus_rc2k) / (1.0 + r)),
        IdentityResidual("transfe2", at_down.e, (st.ec + r * st.kc) / (1.0 + r)),
    ]


def quadratic_residuals(r: float) -> list[IdentityResidual]:
    """With t = (1-r)/(1+r):

    K(t^2)  = (1+r)^2 K'(r^2) / 4
    K'(t^2) = (1+r)^2 K(r^2)
    E(t^2)  = (E'(r^2) + (r + r^2 + r^3) K'(r^2)) / (1+r)^2
    E'(t^2) = (4 E(r^2) - (3 - 2r^2 - r^4) K(r^2)) / (1+r)^2
    """
    _check(r)
    t = (1.0 - r) / (1.0 + r)
    t2 = t * t
    t2c = math.sqrt(4.0 * r / (1.0 + r) ** 2 * (1.0 + t2))
    r2 = r * r
    r2c = math.sqrt((1.0 - r) * (1.0 + r) * (1.0 + r2))
    lhs = EllipticState(t2, t2c)
    st = EllipticState(r2, r2c)
    s2 = (1.0 + r) ** 2
    x = r2  # 3 - 2x - x^2 = (1-x)(3+x)
    rhs_ee = (4.0 * st.e - (1.0 - x) * (3.0 + x) * st.k) / s2
    return [
        IdentityResidual("mytransfk", lhs.k, 0.25 * s2 * st.kc),
        IdentityResidual("mytransfkk", lhs.kc, s2 * st.k),
        IdentityResidual("mytransfe", lhs.e, (st.ec + (r + r2 + r2 * r) * st.kc) / s2),
        IdentityResidual("mytransfee", lhs.ec, rhs_ee),
    ]


def composed_k_residual(r: float) -> float:
    """Route K(t^2) through the intermediate modulus (1-r^2)/(1+r^2).

    One application of each Landen K-transformation gives
        2 (1+r^2)/(1+r)^2 K(t^2) = K((1-r^2)/(1+r^2)) = (1+r^2) K'(r^2) / 2
    and the residual compares the outer two members.
    """
    _check(r)
    t = (1.0 - r) / (1.0 + r)
    t2 = t * t
    t2c = math.sqrt(4.0 * r / (1.0 + r) ** 2 * (1.0 + t2))
    r2 = r * r
    mid = (1.0 - r2) / (1.0 + r2)
    mid_c = 2.0 * r / (1.0 + r2)
    a = 2.0 * (1.0 + r2) / (1.0 + r) ** 2 * EllipticState(t2, t2c).k
    b = EllipticState(mid, mid_c).k
    c = 0.5 * (1.0 + r2) * EllipticState(r2, math.sqrt((1.0 - r) * (1.0 + r) * (1.0 + r2))).kc
    return max(abs(a - b), abs(b - c)) / max(a, b, c)
