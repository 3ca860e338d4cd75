"""Safeguarded Newton iteration for monotone functions on a bracket."""

from __future__ import annotations

import math
from typing import Callable

from .errors import ConvergenceError, DomainError

EPS = 2.220446049250313e-16


def newton_bisect(
    f: Callable[[float], float],
    fprime: Callable[[float], float],
    lo: float,
    hi: float,
    *,
    xtol: float = 4 * EPS,
    maxiter: int = 100,
) -> float:
    """Root of ``f`` in [lo, hi], where f(lo) and f(hi) differ in sign.

    Newton steps are taken from the current iterate; any step that leaves
    the shrinking bracket, or fails to halve |f| compared with two steps
    back, is replaced by bisection. ``xtol`` is relative to |x|; with a
    tiny ``xtol`` the iteration runs until the bracket holds adjacent floats.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise DomainError(f"[{lo}, {hi}] does not bracket a root (f = {flo}, {fhi})")
    # orient so that f(neg) < 0 < f(pos)
    neg, pos = (lo, hi) if flo < 0 else (hi, lo)

    x = 0.5 * (lo + hi)
    dx_old = abs(hi - lo)
    dx = dx_old
    fx = f(x)
    for _ in range(maxiter):
        if fx == 0.0:
            return x
        if fx < 0:
            neg = x
        else:
            pos = x
        d = fprime(x)
        a, b = min(neg, pos), max(neg, pos)
        newton_ok = d != 0.0
        if newton_ok:
            x_new = x - fx / d
            newton_ok = a < x_new < b and abs(2 * fx) < abs(dx_old * d)
        dx_old = dx
        if newton_ok:
            dx = x_new - x
            x = x_new
        else:
            x_new = 0.5 * (a + b)
            dx = x_new - x
            x = x_new
        if abs(dx) <= xtol * abs(x) or b - a <= xtol * abs(x) or math.nextafter(a, b) >= b:
            return x
        fx = f(x)
    raise ConvergenceError(f"no convergence in {maxiter} iterations on [{lo}, {hi}]")
