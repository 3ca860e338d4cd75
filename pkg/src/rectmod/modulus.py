"""Exterior and interior moduli of the rectangle [0,1] x [0,b].

The curve family joining the two sides of length b through the exterior
of the rectangle has modulus

    M(Gamma_b) = mu(psi^-1(1/b)) / pi

while the interior family has modulus b. The exterior modulus grows only
logarithmically in b; ``modulus_bounds`` gives the closed-form envelope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import psimu
from .errors import DomainError
from .psimu import BoundPair, power_mean
from .report import CheckReport

PI = math.pi
B_MIN, B_MAX = 1e-8, 1e8
STRICT_MARGIN = 1e-12
EQUALITY_RESIDUAL = 1e-10


def _check_b(b: float, name: str = "b") -> None:
    if not (b > 0):
        raise DomainError(f"{name}={b!r} must be positive")
    if not (B_MIN <= b <= B_MAX):
        raise DomainError(f"{name}={b!r} outside the supported range [{B_MIN:g}, {B_MAX:g}]")


def exterior_modulus(b: float) -> float:
    _check_b(b)
    return psimu.mu(psimu.psi_inv(1.0 / b)) / PI


def interior_modulus(b: float) -> float:
    if not (b > 0):
        raise DomainError(f"b={b!r} must be positive")
    return b


@dataclass(frozen=True)
class ModulusBounds:
    """L(b) < M(Gamma_b) < U(b), with the looser one-line forms

    lower_relaxed < L(b)   and   U(b) < upper_relaxed.
    """

    lower: float
    upper: float
    lower_relaxed: float
    upper_relaxed: float

    @property
    def pair(self) -> BoundPair:
        return BoundPair(self.lower, self.upper, "L(b)", "U(b)")


def modulus_bounds(b: float) -> ModulusBounds:
    _check_b(b)
    a = 1.0 + math.sqrt(4.0 * b / PI)
    log_a = math.log(2.0 * a)
    lower = 2.0 / PI * (-math.expm1(-4.0 * math.log(a))) ** 0.25 * log_a
    lower_relaxed = 2.0 / PI * (1.0 - 1.0 / a) * log_a
    c = 1.0 + math.sqrt(PI * b)
    upper = (math.log(2.0) + 2.0 * math.log(c) + math.log1p(math.sqrt(-math.expm1(-4.0 * math.log(c))))) / PI
    upper_relaxed = 2.0 / PI * math.log(2.0 * c)
    return ModulusBounds(lower, upper, lower_relaxed, upper_relaxed)


@dataclass(frozen=True)
class ModulusResult:
    b: float
    r: float  # psi^-1(1/b)
    exterior: float
    interior: float
    lower: float
    upper: float


def rectangle(b: float) -> ModulusResult:
    _check_b(b)
    r = psimu.psi_inv(1.0 / b)
    bounds = modulus_bounds(b)
    return ModulusResult(b, r, psimu.mu(r) / PI, b, bounds.lower, bounds.upper)


def comparison_gap(r: float) -> float:
    """mu(psi^-1(r))/pi - 1/r: negative below 1, zero at 1, positive above."""
    _check_b(r, "r")
    return psimu.mu(psimu.psi_inv(r)) / PI - 1.0 / r


def r0_constant() -> float:
    """Turning point of ``comparison_gap``: psi at the root of f8 (8.24639...)."""
    return psimu.psi(psimu.f8_root())


def comparison_gap_argmax(lo: float = 1.0, hi: float = 100.0, n: int = 401, rounds: int = 8) -> float:
    """Maximiser of ``comparison_gap`` by repeated grid zooming.

    Deliberately independent of the f8 root that defines r0.
    """
    for _ in range(rounds):
        xs = np.linspace(lo, hi, n)
        ys = [comparison_gap(float(x)) for x in xs]
        i = int(np.argmax(ys))
        lo, hi = xs[max(i - 2, 0)], xs[min(i + 2, n - 1)]
    return 0.5 * (lo + hi)


def reciprocity_residual(r: float) -> tuple[float, float]:
    """Residuals of the reciprocity chain behind M(Gamma) M(Delta) = 1.

    With s = ((1 - sqrt r)/(1 + sqrt r))^2 returns
    (|psi(r) psi(s) - 1|, |mu(x^2) mu(((1-x)/(1+x))^2) - pi^2| / pi^2) at x = sqrt r.
    """
    if not (0.0 < r < 1.0):
        raise DomainError(f"r={r!r} outside (0,1); domain is (0,1)")
    s, sc = psimu.reciprocal_partner(r)
    first = abs(psimu.psi(r) * psimu.psi(s, sc) - 1.0)
    # mu(x^2) with x = sqrt(r) is mu(r); its partner is s with the same complement
    second = abs(psimu.mu(r) * psimu.mu(s, sc) - PI * PI) / (PI * PI)
    return first, second


def modulus_power_mean_check(a: float, b: float, p: float | None = None) -> CheckReport:
    """Mean inequalities for M(x) = M(Gamma_x).

    p=None checks the chain
        M(2ab/(a+b)) <= sqrt(M(a) M(b)) <= (M(a)+M(b))/2 <= M((a+b)/2);
    otherwise M(H_p(a,b)) <= H_p(M(a), M(b)) for p <= -1 and the reverse for p >= 1.
    Equality holds exactly when a = b.
    """
    _check_b(a, "a")
    _check_b(b, "b")
    ma, mb = exterior_modulus(a), exterior_modulus(b)
    if p is None:
        claim = "thm4.3-part1"
        chain = [
            exterior_modulus(2 * a * b / (a + b)),
            math.sqrt(ma * mb),
            0.5 * (ma + mb),
            exterior_modulus(0.5 * (a + b)),
        ]
        slacks = [chain[i + 1] - chain[i] for i in range(3)]
        scale = max(chain)
    else:
        if -1 < p < 1:
            raise DomainError(f"the modulus mean inequality is stated for p <= -1 or p >= 1, got {p}")
        claim = f"thm4.3-part2-p{p:g}"
        lhs = exterior_modulus(power_mean(p, a, b))
        rhs = power_mean(p, ma, mb)
        slacks = [rhs - lhs if p <= -1 else lhs - rhs]
        scale = max(abs(lhs), abs(rhs))
    worst = min(slacks)
    if a == b:
        resid = max(abs(s) for s in slacks) / scale
        ok = resid <= EQUALITY_RESIDUAL
        return CheckReport(claim, "pass" if ok else "fail", resid, (a, b), 1, "equality case")
    ok = worst > STRICT_MARGIN
    return CheckReport(claim, "pass" if ok else "fail", worst, (a, b), 1, "strict case")
