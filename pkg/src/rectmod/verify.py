"""Grid certifier for the identities, inequalities and shape claims about psi.

Each registered claim evaluates one statement on a grid and returns a
CheckReport. The kinds of check:

* identity     relative residual <= 1e-10 at every point
* ordering     consecutive values strictly increasing/decreasing
* shape        convexity/concavity via chords through consecutive triples
* range        every value strictly inside the stated open interval
* limit        value at distance 1e-6 from the endpoint within 1e-3 of the limit
* pair         two-variable inequality: residual <= 1e-10 on the diagonal,
               slack > 1e-12 off it

Orderings and shapes cannot be witnessed where the function is flat to
working precision (e.g. r'^(1/2) K(r) = pi/2 (1 - r^4/64 + ...) near 0).
Consecutive values closer than a few ulps are counted as unresolved rather
than as violations; the report says how many there were.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Literal, Sequence

import numpy as np

from . import elliptic, landen, modulus, psimu
from .elliptic import EllipticState
from .report import CheckReport, GridSpec

PI = math.pi
EPS = elliptic.EPS

IDENTITY_TOL = 1e-10
STRICT_MARGIN = 1e-12
LIMIT_OFFSET = 1e-6
LIMIT_TOL = 1e-3
TIE_ULPS = 8.0

Domain = Literal["r", "identity", "deriv", "pair", "b", "bpair", "x", "point"]


@dataclass(frozen=True)
class GridDefaults:
    """Default grid for each kind of claim domain."""

    r: GridSpec = GridSpec(1e-6, 1 - 1e-6, 10_000, "endpoint_refined")
    identity: GridSpec = GridSpec(1e-6, 1 - 1e-6, 1_000, "endpoint_refined")
    deriv: GridSpec = GridSpec(0.01, 0.95, 1_000, "uniform")
    pair: GridSpec = GridSpec(0.02, 0.98, 100, "uniform")
    b: GridSpec = GridSpec(1e-3, 1e3, 1_000, "logarithmic")
    bpair: GridSpec = GridSpec(0.1, 10.0, 20, "logarithmic")
    x: GridSpec = GridSpec(0.05, 10.0, 10_000, "uniform")

    def for_domain(self, domain: Domain) -> GridSpec | None:
        return getattr(self, domain, None)


@dataclass(frozen=True)
class Claim:
    claim_id: str
    statement: str
    domain: Domain
    check: Callable[[GridSpec | None], CheckReport]


# ---------------------------------------------------------------- check kinds


def _report(claim_id, ok, margin, point, n, detail=""):
    return CheckReport(claim_id, "pass" if ok else "fail", float(margin), point, int(n), detail)


def _identity(claim_id: str, resid: Callable[[float], float], tol: float = IDENTITY_TOL):
    def check(grid):
        xs = grid.points()
        res = np.array([resid(float(x)) for x in xs])
        i = int(np.argmax(res))
        return _report(claim_id, res[i] <= tol, res[i], float(xs[i]), len(xs), f"max residual, tol {tol:g}")

    return check


def _tie(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return TIE_ULPS * EPS * np.maximum(np.abs(a), np.abs(b))


def ordering_report(claim_id: str, xs: np.ndarray, fs: np.ndarray, direction: int) -> CheckReport:
    """Strict monotonicity along sorted ``xs``; direction +1 increasing, -1 decreasing."""
    d = direction * np.diff(fs)
    tie = _tie(fs[:-1], fs[1:])
    bad = d < -tie
    unresolved = int(np.count_nonzero((d <= 0) & ~bad))
    scale = np.maximum(np.abs(fs[:-1]), np.abs(fs[1:]))
    rel = np.where(scale > 0, d / np.where(scale > 0, scale, 1.0), d)
    i = int(np.argmin(rel))
    overall = direction * (fs[-1] - fs[0]) > 0
    ok = not bad.any() and overall and np.all(np.isfinite(fs))
    detail = f"min relative step; {unresolved} pairs unresolved at working precision"
    return _report(claim_id, ok, rel[i], float(xs[i]), len(xs), detail)


def shape_report(claim_id: str, xs: np.ndarray, fs: np.ndarray, sign: int) -> CheckReport:
    """Convexity (sign +1) or concavity (sign -1) on consecutive triples."""
    x0, x1, x2 = xs[:-2], xs[1:-1], xs[2:]
    f0, f1, f2 = fs[:-2], fs[1:-1], fs[2:]
    chord = f0 + (f2 - f0) * (x1 - x0) / (x2 - x0)
    slack = sign * (chord - f1)
    tie = 2 * _tie(np.maximum(np.abs(f0), np.abs(f2)), f1)
    bad = slack < -tie
    unresolved = int(np.count_nonzero((slack <= 0) & ~bad))
    scale = np.maximum(np.abs(f1), 1e-300)
    rel = slack / scale
    i = int(np.argmin(rel))
    ok = not bad.any() and np.all(np.isfinite(fs))
    detail = f"min relative chord slack; {unresolved} triples unresolved at working precision"
    return _report(claim_id, ok, rel[i], float(xs[i + 1]), len(xs), detail)


def _ordering(claim_id, fn, direction):
    def check(grid):
        xs = grid.points()
        return ordering_report(claim_id, xs, np.array([fn(float(x)) for x in xs]), direction)

    return check


def _shape(claim_id, fn, sign):
    def check(grid):
        xs = grid.points()
        return shape_report(claim_id, xs, np.array([fn(float(x)) for x in xs]), sign)

    return check


def _range(claim_id, fn, lo=-math.inf, hi=math.inf, hi_closed=False):
    def check(grid):
        xs = grid.points()
        fs = np.array([fn(float(x)) for x in xs])
        slack = np.minimum(fs - lo, hi - fs)
        # a value within a few ulps of a finite endpoint is unresolved, not outside
        tie = TIE_ULPS * EPS * np.abs(fs)
        outside = (fs - lo < -tie) | (hi - fs < -tie) | ~np.isfinite(fs)
        unresolved = int(np.count_nonzero((slack <= 0) & ~outside))
        i = int(np.argmin(slack))
        span = f"({lo:g}, {hi:g}{']' if hi_closed else ')'}"
        detail = f"values in {span}; {unresolved} points within rounding of an endpoint"
        return _report(claim_id, not outside.any(), slack[i], float(xs[i]), len(xs), detail)

    return check


def _limit(claim_id, fn, end: Literal[0, 1], value: float):
    def check(grid):
        x = LIMIT_OFFSET if end == 0 else 1.0 - LIMIT_OFFSET
        gap = abs(fn(x) - value)
        return _report(claim_id, gap <= LIMIT_TOL, gap, x, 1, f"|f - {value:.6g}| at offset {LIMIT_OFFSET:g}, tol {LIMIT_TOL:g}")

    return check


def _pair(claim_id, lhs_rhs, equality_on_diagonal=True):
    """lhs_rhs(r, s) -> (small, large); the claim is small <= large."""

    def check(grid):
        xs = grid.points()
        worst_off, worst_off_pt = math.inf, None
        worst_diag, worst_diag_pt = 0.0, None
        n = 0
        for i, r in enumerate(xs):
            for s in xs[i:]:
                r_, s_ = float(r), float(s)
                small, large = lhs_rhs(r_, s_)
                n += 1
                if r_ == s_ and equality_on_diagonal:
                    res = abs(large - small) / max(abs(large), abs(small))
                    if res >= worst_diag:
                        worst_diag, worst_diag_pt = res, (r_, s_)
                else:
                    slack = large - small
                    if slack < worst_off:
                        worst_off, worst_off_pt = slack, (r_, s_)
        ok = worst_off > STRICT_MARGIN and worst_diag <= IDENTITY_TOL
        detail = f"min off-diagonal slack; max diagonal residual {worst_diag:.3g}"
        if not equality_on_diagonal:
            detail = "min slack, strict everywhere"
        return _report(claim_id, ok, worst_off, worst_off_pt, n, detail)

    return check


def _point(claim_id, fn: Callable[[], tuple[bool, float, object]], detail=""):
    def check(grid):
        ok, margin, pt = fn()
        return _report(claim_id, ok, margin, pt, 1, detail)

    return check


# ------------------------------------------------------------- the functions


def _st(r):
    return EllipticState(r)


def _psi(r):
    return psimu.psi(r)


def _one_minus_sqrt_sq(r):
    return ((1.0 - r) / (1.0 + math.sqrt(r))) ** 2


def _f1(r):
    return _st(r).e_minus_1mr_k


def _f2(r):
    return _st(r).e_minus_1mr_k / r


def _f3(r):
    return _st(r).ec_minus_r_kc


def _f4(r):
    st = _st(r)
    return st.ec_minus_r_kc / st.one_minus_r


def _f5(r):
    st = _st(r)
    one_minus_sqrt_rc = (r * r / (1.0 + st.rc)) / (1.0 + math.sqrt(st.rc))
    return st.e_minus_rck / one_minus_sqrt_rc ** 2


def _f6(r):
    st = _st(r)
    # (3-r)E' - (1+r)K' = 2(E' - rK') - (1-r)(K' - E')
    return 2.0 * st.ec_minus_r_kc - st.one_minus_r * st.kc_minus_ec


def _f7(r):
    st = _st(r)
    return (1.0 + r) * st.ec_minus_r_kc / st.one_minus_r


def _f8(r):
    return psimu.f8(r)


def _growth_ratio(r):
    """(1 - sqrt r)^2 psi(r) / r."""
    return _one_minus_sqrt_sq(r) * _psi(r) / r


def _atanh_ratio(r):
    u = 1.0 - math.sqrt(r)
    return u * math.atanh(u) * _psi(r) / r


def _e_minus_rc2k_over_r2(r):
    return _st(r).e_minus_rc2k / (r * r)


def _rc_power_k(c):
    def fn(r):
        st = _st(r)
        return st.rc ** c * st.k

    return fn


def _mu_psi(r):
    return psimu.mu(r) * _psi(r)


def _psi_cosh(x):
    return psimu.psi(1.0 / math.cosh(x), math.tanh(x))


def _legendre(r):
    return abs(elliptic.legendre_residual(r)) / (0.5 * PI)


def _landen(identity_id):
    def resid(r):
        rows = landen.landen_residuals(r) if identity_id in landen.LANDEN_IDS else landen.quadratic_residuals(r)
        return next(x.residual for x in rows if x.identity_id == identity_id)

    return resid


def _product_identity(k):
    return lambda r: psimu.psi_identity_residuals(r)[k]


def _reciprocal_psi(r):
    s, sc = psimu.reciprocal_partner(r)
    prod = psimu.psi(r) * psimu.psi(s, sc)
    return abs(prod - 1.0) / max(prod, 1.0)


def _reciprocal_mu(r):
    return modulus.reciprocity_residual(r)[1]


def _fd_residual(fn, dfn, h=1e-5):
    def resid(r):
        if not (h < r < 1.0 - h):
            raise ValueError(f"finite-difference stencil at r={r} leaves (0,1)")
        fd = (fn(r + h) - fn(r - h)) / (2 * h)
        d = dfn(r)
        return abs(fd - d) / abs(d)

    return resid


# two-variable statements, each returning (smaller side, larger side)


def _cosh_mean(r, s):
    rc, sc = elliptic.complement(r), elliptic.complement(s)
    arg = math.sqrt(2 * r * s) / math.sqrt(1 + r * s + rc * sc)
    return 2 * psimu.psi(arg), psimu.psi(r) + psimu.psi(s)


def _cosh_mean_weaker(r, s):
    rc, sc = elliptic.complement(r), elliptic.complement(s)
    weak = 2 * psimu.psi(r * s / (1 + rc * sc))
    strong, rhs = _cosh_mean(r, s)
    # weak <= strong <= rhs; report the weaker link
    return (weak, strong) if strong - weak < rhs - weak else (weak, rhs)


def _geometric_mean(r, s):
    return psimu.psi(math.sqrt(r * s)), math.sqrt(psimu.psi(r) * psimu.psi(s))


def _power_mean_pair(p):
    def fn(r, s):
        a = psimu.psi(psimu.power_mean(p, r, s))
        b = psimu.power_mean(p, psimu.psi(r), psimu.psi(s))
        return (a, b) if p >= 0 else (b, a)

    return fn


# ------------------------------------------------------- modulus statements


def _bgrid_values(grid, fn):
    xs = grid.points()
    return xs, np.array([fn(float(x)) for x in xs])


def _modulus_sign(grid):
    xs, ms = _bgrid_values(grid, modulus.exterior_modulus)
    slack = np.sign(1.0 - xs) * (ms - xs)
    i = int(np.argmin(slack))
    return _report("thm4.1-sign", bool((slack > 0).all()), slack[i], float(xs[i]), len(xs),
                   "min of sign(1-b)(M(Gamma_b) - b)")


def _gap_unimodal(grid):
    xs, gs = _bgrid_values(grid, modulus.comparison_gap)
    r0 = modulus.r0_constant()
    below, above = xs < r0, xs > r0
    up = ordering_report("thm4.1-unimodal", xs[below], gs[below], +1)
    down = ordering_report("thm4.1-unimodal", xs[above], gs[above], -1)
    worst = up if up.worst_margin <= down.worst_margin else down
    ok = up.passed and down.passed
    return _report("thm4.1-unimodal", ok, worst.worst_margin, worst.worst_point, len(xs),
                   f"increasing below r0={r0:.6f}, decreasing above")


def _gap_turning_point():
    am, r0 = modulus.comparison_gap_argmax(), modulus.r0_constant()
    return abs(am - r0) <= 1e-3, abs(am - r0), am


def _r0_value():
    r0 = modulus.r0_constant()
    return abs(r0 - 8.24639) <= 5e-5, abs(r0 - 8.24639), r0


def _gap_limit(grid):
    xs = np.logspace(2, 6, 41)
    gs = np.array([modulus.comparison_gap(float(x)) for x in xs])
    dec = ordering_report("thm4.1-limit", xs, gs, -1)
    far = gs[-1]
    ok = dec.passed and far < 1e-2
    return _report("thm4.1-limit", ok, far, 1e6, len(xs),
                   "comparison_gap(1e6) < 1e-2 and decreasing on [1e2, 1e6]")


def _modulus_envelope(kind):
    claim_id = {"bracket": "thm4.2-bracket", "lower": "thm4.2-lower-relaxation",
                "upper": "thm4.2-upper-relaxation"}[kind]

    def check(grid):
        xs = grid.points()
        slack = []
        for b in xs:
            bb = modulus.modulus_bounds(float(b))
            if kind == "bracket":
                m = modulus.exterior_modulus(float(b))
                slack.append(min(m - bb.lower, bb.upper - m) / m)
            elif kind == "lower":
                slack.append((bb.lower - bb.lower_relaxed) / bb.lower)
            else:
                slack.append((bb.upper_relaxed - bb.upper) / bb.upper)
        slack = np.array(slack)
        i = int(np.argmin(slack))
        return _report(claim_id, bool((slack > 0).all()), slack[i], float(xs[i]), len(xs), "min relative slack")

    return check


def _modulus_means(p):
    claim_id = "thm4.3-part1" if p is None else f"thm4.3-part2-p{p:g}"

    def check(grid):
        xs = grid.points()
        worst_off, pt_off, worst_diag, n = math.inf, None, 0.0, 0
        for i, a in enumerate(xs):
            for b in xs[i:]:
                rep = modulus.modulus_power_mean_check(float(a), float(b), p)
                n += 1
                if a == b:
                    worst_diag = max(worst_diag, rep.worst_margin)
                elif rep.worst_margin < worst_off:
                    worst_off, pt_off = rep.worst_margin, (float(a), float(b))
        ok = worst_off > STRICT_MARGIN and worst_diag <= IDENTITY_TOL
        return _report(claim_id, ok, worst_off, pt_off, n,
                       f"min off-diagonal slack; max diagonal residual {worst_diag:.3g}")

    return check


def _log_convex_m(grid):
    def m(a):
        return modulus.exterior_modulus(1.0 / a)  # m(a) = mu(psi^-1(a))/pi

    def fn(a, b):
        return m(0.5 * (a + b)), math.sqrt(m(a) * m(b))

    return _pair("thm4.3-log-convex", fn)(grid)


def _unit_square():
    m1 = modulus.exterior_modulus(1.0)
    st = EllipticState(psimu.R_UNIT)
    ratio = st.kc / st.k
    margin = max(abs(m1 - 1.0) / 1e-10, abs(ratio - 2.0) / 1e-12)
    return margin <= 1.0, abs(m1 - 1.0), 1.0


# ------------------------------------------------------------------- registry


def _one_var_family(prefix: str, statement: str, fn, *, direction=None, shape=None,
                    range_=None, limits=()) -> list[Claim]:
    out = []
    if direction is not None:
        word = "increasing" if direction > 0 else "decreasing"
        out.append(Claim(f"{prefix}-{word}", f"{statement} is strictly {word}", "r", _ordering(f"{prefix}-{word}", fn, direction)))
    if shape is not None:
        word = "convex" if shape > 0 else "concave"
        out.append(Claim(f"{prefix}-{word}", f"{statement} is {word}", "r", _shape(f"{prefix}-{word}", fn, shape)))
    if range_ is not None:
        lo, hi, *closed = range_
        out.append(Claim(f"{prefix}-range", f"{statement} takes values in ({lo:g}, {hi:g})", "r",
                         _range(f"{prefix}-range", fn, lo, hi, bool(closed and closed[0]))))
    for end, value in limits:
        cid = f"{prefix}-limit-{end}"
        out.append(Claim(cid, f"{statement} tends to {value:.6g} at r={end}", "point", _limit(cid, fn, end, value)))
    return out


def _build_registry() -> list[Claim]:
    C = []
    add = C.append

    add(Claim("legendre-relation", "E K' + E' K - K K' = pi/2", "identity", _identity("legendre-relation", _legendre)))
    for iid in landen.LANDEN_IDS:
        add(Claim(f"landen-{iid}", f"Landen transformation {iid}", "identity", _identity(f"landen-{iid}", _landen(iid))))
    for iid in landen.QUADRATIC_IDS:
        add(Claim(f"lemma2.1-{iid}", f"quadratic transformation {iid}", "identity", _identity(f"lemma2.1-{iid}", _landen(iid))))
    add(Claim("lemma2.1-composition", "two Landen K-steps reproduce K(t^2) through (1-r^2)/(1+r^2)",
              "identity", _identity("lemma2.1-composition", landen.composed_k_residual)))
    add(Claim("thm1.1-identity-1", "psi(r^2) psi(((1-r)/(1+r))^2) = 1", "identity", _identity("thm1.1-identity-1", _product_identity(0))))
    add(Claim("thm1.1-identity-2", "psi((1-r)/(1+r)) psi((1-r')/(1+r')) = 1", "identity", _identity("thm1.1-identity-2", _product_identity(1))))
    add(Claim("cor3.2-special-value", "psi(3 - 2 sqrt 2) = 1", "point",
              _point("cor3.2-special-value", lambda: (abs(psimu.psi(psimu.R_UNIT) - 1) <= 1e-11,
                                                      abs(psimu.psi(psimu.R_UNIT) - 1), psimu.R_UNIT), "tol 1e-11")))
    add(Claim("rem3.3-reciprocal-identity", "1/psi(r) = psi(((1-sqrt r)/(1+sqrt r))^2)", "identity",
              _identity("rem3.3-reciprocal-identity", _reciprocal_psi)))
    add(Claim("rem3.3-mu-identity", "mu(x^2) mu(((1-x)/(1+x))^2) = pi^2", "identity",
              _identity("rem3.3-mu-identity", _reciprocal_mu)))

    # derivative formulas
    add(Claim("psider-finite-difference", "d psi/dr = pi/(1-r^2) ((1-r)/(E'-rK'))^2", "deriv",
              _identity("psider-finite-difference", _fd_residual(psimu.psi, psimu.psi_prime), 1e-6)))
    add(Claim("mu-prime-finite-difference", "d mu/dr = -pi^2/(4 r r'^2 K^2)", "deriv",
              _identity("mu-prime-finite-difference", _fd_residual(psimu.mu, psimu.mu_prime), 1e-6)))

    # psi itself
    C += _one_var_family("thm3.1-psi", "psi", _psi, direction=+1, shape=+1, range_=(0.0, math.inf), limits=((0, 0.0),))
    C += _one_var_family("thm3.1-ratio", "psi(r)/r", lambda r: _psi(r) / r, direction=+1, limits=((0, PI),))
    C += _one_var_family("thm1.2", "(1-sqrt r)^2 psi(r)/r", _growth_ratio, direction=-1,
                         range_=(4 / PI, PI), limits=((0, PI), (1, 4 / PI)))
    add(Claim("thm1.2-bounds", "4r/(pi(1-sqrt r)^2) < psi(r) < pi r/(1-sqrt r)^2", "r", _bounds_check(
        "thm1.2-bounds", lambda r: 4 * r / (PI * _one_minus_sqrt_sq(r)), lambda r: PI * r / _one_minus_sqrt_sq(r))))
    add(Claim("advinequal", "pi r/(1-r)^2 < psi(r) < 16 r/(pi (1-r)^2)", "r", _bounds_check(
        "advinequal", lambda r: PI * r / (1 - r) ** 2, lambda r: 16 * r / (PI * (1 - r) ** 2))))
    C += _one_var_family("cor3.4", "(1-sqrt r) artanh(1-sqrt r) psi(r)/r", _atanh_ratio, direction=-1,
                         range_=(4 / PI, math.inf), limits=((1, 4 / PI),))
    add(Claim("cor3.5-bounds", "max of the lower bounds < psi < min of the upper bounds", "r", _bounds_check(
        "cor3.5-bounds", lambda r: psimu.psi_bounds(r).lower, lambda r: psimu.psi_bounds(r).upper)))

    add(Claim("thm1.3-decreasing", "psi(1/cosh x) is decreasing in x", "x", _ordering("thm1.3-decreasing", _psi_cosh, -1)))
    add(Claim("thm1.3-convex", "psi(1/cosh x) is convex in x", "x", _shape("thm1.3-convex", _psi_cosh, +1)))
    add(Claim("thm1.3-inequality", "2 psi(sqrt(2rs)/sqrt(1+rs+r's')) <= psi(r)+psi(s)", "pair", _pair("thm1.3-inequality", _cosh_mean)))
    add(Claim("thm1.3-remark-weaker", "2 psi(rs/(1+r's')) <= 2 psi(sqrt(2rs)/sqrt(1+rs+r's')) <= psi(r)+psi(s)", "pair",
              _pair("thm1.3-remark-weaker", _cosh_mean_weaker, equality_on_diagonal=False)))
    add(Claim("thm3.6-geometric-mean", "psi(sqrt(rs)) <= sqrt(psi(r) psi(s))", "pair", _pair("thm3.6-geometric-mean", _geometric_mean)))
    add(Claim("thm3.6-log-concave", "log(1/psi(exp(-x))) is concave in x", "r", _log_concave_check))
    for p in (-2, -1, 0, 0.5, 1, 2):
        cid = f"thm1.5-p{p:g}"
        rel = "<=" if p >= 0 else ">="
        add(Claim(cid, f"psi(H_{p:g}(x,y)) {rel} H_{p:g}(psi(x), psi(y))", "pair", _pair(cid, _power_mean_pair(p))))

    # auxiliary monotone quotients
    C += _one_var_family("lemma2.3-1", "(E - r'^2 K)/r^2", _e_minus_rc2k_over_r2, direction=+1, shape=+1,
                         range_=(PI / 4, 1.0), limits=((0, PI / 4), (1, 1.0)))
    for c in (0.5, 1):
        C += _one_var_family(f"lemma2.3-2-c{c:g}", f"r'^{c:g} K", _rc_power_k(c), direction=-1,
                             range_=(0.0, PI / 2, True), limits=((0, PI / 2), (1, 0.0)))
    C += _one_var_family("lemma2.4-f1", "E - (1-r)K", _f1, direction=+1, shape=-1, range_=(0.0, 1.0), limits=((0, 0.0), (1, 1.0)))
    C += _one_var_family("lemma2.4-f2", "(E - (1-r)K)/r", _f2, direction=-1, range_=(1.0, PI / 2), limits=((0, PI / 2), (1, 1.0)))
    C += _one_var_family("lemma2.4-f3", "E' - rK'", _f3, direction=-1, shape=+1, range_=(0.0, 1.0), limits=((0, 1.0), (1, 0.0)))
    C += _one_var_family("lemma2.4-f4", "(E' - rK')/(1-r)", _f4, direction=-1, range_=(0.0, 1.0), limits=((0, 1.0), (1, 0.0)))
    C += _one_var_family("lemma2.4-f5", "(E - r'K)/(1 - sqrt r')^2", _f5, direction=-1, range_=(1.0, PI / 2),
                         limits=((0, PI / 2), (1, 1.0)))
    add(Claim("lemma2.4-f6-negative", "(3-r)E' - (1+r)K' is negative and increasing", "r", _f6_check))
    C += _one_var_family("lemma2.4-f6", "(3-r)E' - (1+r)K'", _f6, limits=((1, 0.0),))
    C += _one_var_family("lemma2.4-f7", "(1+r)(E' - rK')/(1-r)", _f7, direction=-1, range_=(0.0, 1.0), limits=((0, 1.0), (1, 0.0)))
    C += _one_var_family("lemma2.4-f8", "(E - (1-r)K)/(sqrt r (1-r) K)", _f8, direction=+1, range_=(0.0, math.inf),
                         limits=((0, 0.0),))
    add(Claim("lemma2.4-f8-root", "f8(0.479047...) = 1", "point",
              _point("lemma2.4-f8-root", lambda: (abs(psimu.f8_root() - 0.479047) <= 5e-6,
                                                  abs(psimu.f8_root() - 0.479047), psimu.f8_root()), "tol 5e-6")))
    C += _one_var_family("lemma2.5", "mu(r) psi(r)", _mu_psi, direction=+1, range_=(0.0, math.inf), limits=((0, 0.0),))

    # rectangle moduli
    add(Claim("sec4-unit-square", "M(Gamma_1) = 1 and K'(3-2 sqrt 2) = 2 K(3-2 sqrt 2)", "point",
              _point("sec4-unit-square", _unit_square, "tol 1e-10 and 1e-12")))
    add(Claim("thm4.1-sign", "M(Gamma_b) > b for b < 1 and < b for b > 1", "b", _modulus_sign))
    add(Claim("thm4.1-unimodal", "comparison gap increases on (0, r0) and decreases on (r0, inf)", "b", _gap_unimodal))
    add(Claim("thm4.1-turning-point", "the maximiser of the comparison gap is r0", "point",
              _point("thm4.1-turning-point", _gap_turning_point, "tol 1e-3")))
    add(Claim("thm4.1-r0", "r0 = psi(f8 root) = 8.24639...", "point", _point("thm4.1-r0", _r0_value, "tol 5e-5")))
    add(Claim("thm4.1-limit", "comparison gap tends to 0 at infinity", "point", _gap_limit))
    add(Claim("thm4.2-bracket", "L(b) < M(Gamma_b) < U(b)", "b", _modulus_envelope("bracket")))
    add(Claim("thm4.2-lower-relaxation", "one-line lower form < L(b)", "b", _modulus_envelope("lower")))
    add(Claim("thm4.2-upper-relaxation", "U(b) < one-line upper form", "b", _modulus_envelope("upper")))
    add(Claim("thm4.3-part1", "M(H_-1) <= H_0(M) <= H_1(M) <= M(H_1)", "bpair", _modulus_means(None)))
    for p in (-2, -1, 1, 2):
        add(Claim(f"thm4.3-part2-p{p:g}", f"M(Gamma) power-mean inequality at p={p:g}", "bpair", _modulus_means(p)))
    add(Claim("thm4.3-log-convex", "m((a+b)/2) <= sqrt(m(a) m(b)) for m(a) = mu(psi^-1(a))/pi", "bpair", _log_convex_m))
    return C


def _bounds_check(claim_id, lower, upper):
    def check(grid):
        xs = grid.points()
        slack = []
        for r in xs:
            p = _psi(float(r))
            slack.append(min(p - lower(float(r)), upper(float(r)) - p) / p)
        slack = np.array(slack)
        i = int(np.argmin(slack))
        return _report(claim_id, bool((slack > 0).all()), slack[i], float(xs[i]), len(xs), "min relative slack")

    return check


def _f6_check(grid):
    xs = grid.points()
    fs = np.array([_f6(float(x)) for x in xs])
    order = ordering_report("lemma2.4-f6-negative", xs, fs, +1)
    neg = bool((fs < 0).all())
    return _report("lemma2.4-f6-negative", neg and order.passed, order.worst_margin, order.worst_point, len(xs),
                   f"all negative: {neg}; " + order.detail)


def _log_concave_check(grid):
    rs = grid.points()[::-1]
    xs = -np.log(rs)
    fs = np.array([-math.log(_psi(float(r))) for r in rs])
    inc = ordering_report("thm3.6-log-concave", xs, fs, +1)
    conc = shape_report("thm3.6-log-concave", xs, fs, -1)
    worst = inc if inc.worst_margin <= conc.worst_margin else conc
    return _report("thm3.6-log-concave", inc.passed and conc.passed, worst.worst_margin, worst.worst_point,
                   len(xs), "increasing and concave in x = -log r")


REGISTRY: dict[str, Claim] = {c.claim_id: c for c in _build_registry()}


def claim_ids(prefix: str = "") -> list[str]:
    return [cid for cid in REGISTRY if cid.startswith(prefix)]


def run_check(claim_id: str, grid: GridSpec | None = None, defaults: GridDefaults | None = None) -> CheckReport:
    """Evaluate one registered claim. ``grid`` replaces the claim's default grid."""
    try:
        claim = REGISTRY[claim_id]
    except KeyError:
        raise LookupError(f"unknown claim {claim_id!r}") from None
    if grid is None:
        grid = (defaults or GridDefaults()).for_domain(claim.domain)
    return claim.check(grid)


def run_all(defaults: GridDefaults | None = None, prefix: str = "") -> list[CheckReport]:
    """Every registered claim (or those whose id starts with ``prefix``), in registry order."""
    ids = claim_ids(prefix)
    if prefix and not ids:
        raise LookupError(f"no claim id starts with {prefix!r}")
    defaults = defaults or GridDefaults()
    return [run_check(cid, defaults=defaults) for cid in ids]


def iter_all(defaults: GridDefaults | None = None, prefix: str = "") -> Iterable[CheckReport]:
    """Like ``run_all`` but yields each report as soon as it is ready."""
    ids = claim_ids(prefix)
    if prefix and not ids:
        raise LookupError(f"no claim id starts with {prefix!r}")
    defaults = defaults or GridDefaults()
    for cid in ids:
        yield run_check(cid, defaults=defaults)


def summarize(reports: Sequence[CheckReport]) -> tuple[int, int]:
    passed = sum(r.passed for r in reports)
    return passed, len(reports) - passed
