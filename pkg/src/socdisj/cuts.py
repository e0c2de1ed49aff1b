"""Disjunctive cuts for second-order cone disjunctions.

For a multiplier ``beta`` on side 1 the convex cut reads

    2 c2_0 - (beta c1 + c2).x <= sqrt(((beta c1 - c2).x)^2 + N1(beta) s(x))

with ``s(x) = x_n^2 - |x~|^2`` and ``N1(beta) = |beta c~1 - c~2|^2 - (beta c1n - c2n)^2``.
Side 2 exchanges the roles of c1 and c2.  When ``N1(beta) = 0`` the cut collapses
to the linear inequality ``beta c1.x >= c2_0``.  The closed convex hull is the set of
cone points satisfying every such cut for beta in the sets B1 and B2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cone import DEFAULT_TOL, as_vector, classify_soc, cone_margin, soc_slack
from .disjunction import Disjunction, basic_report, _check_side, _require_second_order
from .errors import (AssumptionViolation, DomainError, InvalidArgumentError, NoCertificateError,
                     NumericalFailure)
from .intervals import BetaInterval, linear_set, quadratic_roots, quadratic_set

INF = math.inf
RADICAND_CLAMP = 1e-12
MEMBER_TOL = 1e-9


# ---------------------------------------------------------------- B sets

@dataclass(frozen=True)
class BSets:
    """Admissible multiplier intervals for the two cut families."""

    B1: BetaInterval
    B2: BetaInterval
    roots1: tuple[float, ...] | None = None
    roots2: tuple[float, ...] | None = None
    collapsed: bool = False
    trivial: bool = False

    def get(self, k: int) -> BetaInterval:
        _check_side(k)
        return self.B1 if k == 1 else self.B2

    def to_dict(self) -> dict:
        return {"B1": self.B1.to_dict(), "B2": self.B2.to_dict(),
                "roots1": None if self.roots1 is None else list(self.roots1),
                "roots2": None if self.roots2 is None else list(self.roots2),
                "collapsed": self.collapsed, "hull_is_K": self.trivial}


def _rhs_region(coef: float, target: float) -> BetaInterval:
    """beta > 0 with beta * coef >= target."""
    return BetaInterval(0.0, INF, False, False).intersect(linear_set(coef, -target))


def raw_b_set(d: Disjunction, k: int) -> tuple[BetaInterval, tuple[float, ...] | None]:
    """The side-k multiplier set with the single-interval reduction applied.

    When the quadratic leaves two admissible pieces, keep the lower one if the
    other side's rhs is nonnegative and the upper one otherwise.
    """
    A, B, C = d.side_coefficients(k)
    region = _rhs_region(d.rhs(k), d.rhs(3 - k))
    roots = quadratic_roots(A, B, C) or None
    pieces = [p.intersect(region) for p in quadratic_set(A, B, C, "ge")]
    pieces = [p for p in pieces if not p.is_empty()]
    if not pieces:
        return BetaInterval.empty_set(), roots
    if len(pieces) == 1:
        return pieces[0], roots
    keep = pieces[0] if d.rhs(3 - k) >= 0 else pieces[-1]
    return keep, roots


def b_sets(d: Disjunction, collapse: bool = True, eps: float = DEFAULT_TOL) -> BSets:
    """Multiplier sets B1 and B2.

    Raises :class:`AssumptionViolation` when one set contains the other or a
    side is not strictly feasible.  When the hull is the whole cone both sets
    are empty and ``trivial`` is set; when one inequality suffices (and
    ``collapse`` is true) both are the singleton {1}.
    """
    _require_second_order(d)
    rep = basic_report(d, eps)
    if not rep.assumption1_holds:
        raise AssumptionViolation(f"one side contains the other ({rep.containment})")
    if not rep.assumption2_holds:
        raise AssumptionViolation(f"a side is not strictly feasible {rep.strict_feasible}")
    B1, r1 = raw_b_set(d, 1)
    B2, r2 = raw_b_set(d, 2)
    if rep.hull_is_K:
        return BSets(BetaInterval.empty_set(), BetaInterval.empty_set(), r1, r2, False, True)
    if collapse and rep.single_inequality:
        return BSets(BetaInterval.point(1.0), BetaInterval.point(1.0), r1, r2, True, False)
    return BSets(B1, B2, r1, r2)


# ---------------------------------------------------------------- scalar pieces

def n_coefficient(d: Disjunction, beta: float, side: int = 1) -> float:
    """N1(beta) for side 1, N2(beta) for side 2."""
    c, o = d.side(side)
    v = beta * c - o
    body = np.linalg.norm(v[:-1])
    return float((body - v[-1]) * (body + v[-1]))


def _n_poly(A: float, B: float, C: float, beta):
    return (A * beta - 2.0 * B) * beta + C


def _radicand(u, w, s, beta, A, B, C):
    return (beta * u - w) ** 2 + _n_poly(A, B, C, beta) * s


def _scale(*vals) -> float:
    return 1.0 + max(float(np.max(np.abs(v))) for v in vals)


def _is_boundary_beta(d: Disjunction, beta: float, side: int, tol: float = 1e-9) -> bool:
    c, o = d.side(side)
    v = beta * c - o
    return classify_soc(v, tol * max(1.0, float(np.max(np.abs(v))))).name == "BOUNDARY_K"


# ---------------------------------------------------------------- cut descriptions

@dataclass(frozen=True)
class LinearCut:
    """``a.x >= rhs``."""

    a: np.ndarray
    rhs: float
    side: int = 1
    beta: float = math.nan
    kind: str = "linear"

    def margin(self, X) -> np.ndarray:
        return np.asarray(X, dtype=float) @ self.a - self.rhs

    def shifted(self, delta: float) -> "LinearCut":
        return LinearCut(self.a, self.rhs + delta, self.side, self.beta)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "side": self.side, "beta": self.beta,
                "a": self.a.tolist(), "rhs": self.rhs}


@dataclass(frozen=True)
class ConvexRadicalCut:
    """``rhs - total.x <= sqrt((diff.x)^2 + N s(x))`` with ``rhs = 2 c2_0``."""

    side: int
    beta: float
    N: float
    total: np.ndarray
    diff: np.ndarray
    rhs: float
    kind: str = "convex-radical"

    def margin(self, X) -> np.ndarray:
        """RHS minus LHS; the radicand is clamped at zero for points outside the cone."""
        X = np.asarray(X, dtype=float)
        h = (X @ self.diff) ** 2 + self.N * soc_slack(X)
        return np.sqrt(np.maximum(h, 0.0)) - (self.rhs - X @ self.total)

    def shifted(self, delta: float) -> "ConvexRadicalCut":
        return ConvexRadicalCut(self.side, self.beta, self.N, self.total, self.diff, self.rhs + delta)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "side": self.side, "beta": self.beta, "N": self.N,
                "sum": self.total.tolist(), "diff": self.diff.tolist(), "rhs": self.rhs}


@dataclass(frozen=True)
class ConicQuadraticCut:
    """``N x + 2 (c_o.x - r) shift`` in the cone, equivalent to the radical cut when it applies."""

    side: int
    beta: float
    N: float
    shift: np.ndarray
    c_other: np.ndarray
    rhs0: float
    kind: str = "conic-quadratic"

    def vector(self, X) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        lin = X @ self.c_other - self.rhs0
        return self.N * X + 2.0 * lin[..., None] * self.shift

    def margin(self, X) -> np.ndarray:
        return cone_margin(self.vector(X))

    def shifted(self, delta: float) -> "ConicQuadraticCut":
        return ConicQuadraticCut(self.side, self.beta, self.N, self.shift, self.c_other,
                                 self.rhs0 + delta)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "side": self.side, "beta": self.beta, "N": self.N,
                "shift": self.shift.tolist(), "c_other": self.c_other.tolist(), "rhs": self.rhs0}


@dataclass(frozen=True)
class ConeCut:
    """The cone constraint itself as the linear cut ``r.x >= 0`` for a fixed dual ray r."""

    a: np.ndarray
    kind: str = "cone"

    def margin(self, X) -> np.ndarray:
        return np.asarray(X, dtype=float) @ self.a

    def to_dict(self) -> dict:
        return {"kind": self.kind, "a": self.a.tolist(), "rhs": 0.0}


def linear_cut(d: Disjunction, beta: float, side: int = 1, tol: float = 1e-9) -> LinearCut:
    """``beta c_side.x >= c2_0``, valid when ``beta c_side - c_other`` is on the cone boundary."""
    _require_second_order(d)
    c, o = d.side(side)
    if not beta > 0:
        raise InvalidArgumentError(f"beta must be positive, got {beta}")
    if beta * d.rhs(side) < d.rhs(3 - side):
        raise InvalidArgumentError("beta violates the right-hand-side condition")
    if not _is_boundary_beta(d, beta, side, tol):
        raise InvalidArgumentError(f"beta c{side} - c{3 - side} is not on the cone boundary at beta={beta}")
    return LinearCut(beta * c, float(d.c2_0), side, float(beta))


def radical_cut(d: Disjunction, beta: float, side: int = 1) -> ConvexRadicalCut:
    c, o = d.side(side)
    return ConvexRadicalCut(side, float(beta), n_coefficient(d, beta, side), beta * c + o,
                            beta * c - o, 2.0 * d.c2_0)


def cut_at(d: Disjunction, beta: float, side: int = 1, tol: float = 1e-9):
    """Linear cut when beta sits on a boundary root, radical cut otherwise."""
    if _is_boundary_beta(d, beta, side, tol):
        c, _ = d.side(side)
        return LinearCut(beta * c, float(d.c2_0), side, float(beta))
    return radical_cut(d, beta, side)


def convex_cut_margin(d: Disjunction, beta: float, side: int, x) -> float:
    """RHS minus LHS of the radical cut at ``x``; nonnegative iff the cut holds.

    Raises :class:`DomainError` when ``x`` is outside the cone and the radicand is
    negative, and :class:`NumericalFailure` when a cone point gives a radicand
    below the clamp tolerance.
    """
    _require_second_order(d)
    x = as_vector(x, d.n)
    c, o = d.side(side)
    u, w = float(c @ x), float(o @ x)
    s = float(soc_slack(x))
    N = n_coefficient(d, beta, side)
    h = (beta * u - w) ** 2 + N * s
    if h < 0:
        scale = _scale(beta * c, o) ** 2 * _scale(x) ** 2
        if h >= -RADICAND_CLAMP * scale:
            h = 0.0
        elif not classify_soc(x).in_cone:
            raise DomainError("point lies outside the cone and the radicand is negative")
        else:
            raise NumericalFailure(f"radicand {h:.3e} is negative at a cone point")
    return math.sqrt(h) - (2.0 * d.c2_0 - (beta * u + w))


def conic_form_vector(d: Disjunction, beta: float, side: int, x) -> np.ndarray:
    """``N x + 2 (c_o.x - c2_0) (beta c~ - c~o ; -beta c_n + c_o,n)`` for side k."""
    _require_second_order(d)
    x = as_vector(x, d.n)
    N = n_coefficient(d, beta, side)
    if not N > 0:
        raise InvalidArgumentError(f"conic form needs N > 0, got {N}")
    return conic_cut(d, beta, side).vector(x)


def conic_cut(d: Disjunction, beta: float, side: int = 1) -> ConicQuadraticCut:
    c, o = d.side(side)
    v = beta * c - o
    shift = np.append(v[:-1], -v[-1])
    return ConicQuadraticCut(side, float(beta), n_coefficient(d, beta, side), shift, o.copy(),
                             float(d.c2_0))


def _golden_min(fun, lo: float, hi: float, width: float = 1e-12, max_iter: int = 200):
    inv = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    x1, x2 = b - inv * (b - a), a + inv * (b - a)
    f1, f2 = fun(x1), fun(x2)
    for _ in range(max_iter):
        if b - a <= width:
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - inv * (b - a)
            f1 = fun(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + inv * (b - a)
            f2 = fun(x2)
    best = min((f1, x1), (f2, x2), (fun(lo), lo), (fun(hi), hi))
    return best[0], best[1], b - a <= width


def cqr_holds(d: Disjunction, beta: float, side: int = 1, tol: float = 1e-9) -> str:
    """Whether the two strict inequalities have no common cone point (``"Yes"``/``"No"``/``"Unknown"``).

    For rhs -1 the apex is a common point.  Otherwise the question is
    homogeneous and reduces to the sign of the saddle value
    ``min over lambda in [0,1] of |lambda a~1 + (1-lambda) a~2| + lambda a1n + (1-lambda) a2n``.
    """
    _require_second_order(d)
    if d.c2_0 == -1:
        return "No"
    c, o = d.side(side)
    a1, a2 = beta * c, o

    def fun(lam):
        v = lam * a1 + (1.0 - lam) * a2
        return float(np.linalg.norm(v[:-1]) + v[-1])

    value, _, ok = _golden_min(fun, 0.0, 1.0)
    if not ok or not math.isfinite(value):
        return "Unknown"
    return "Yes" if value <= tol else "No"


# ---------------------------------------------------------------- optimisation over beta

@dataclass(frozen=True)
class PointQuadratics:
    R: float
    P: float
    Q: float

    def radicand(self, beta):
        return (self.R * beta - 2.0 * self.P) * beta + self.Q


def point_quadratics(d: Disjunction, x) -> PointQuadratics:
    """R, P, Q with R t^2 - 2 P t + Q the side-1 radicand at ``x``."""
    _require_second_order(d)
    x = as_vector(x, d.n)
    a, b, c = d.lorentz_coefficients()
    u, w = float(d.c1 @ x), float(d.c2 @ x)
    s = float(soc_slack(x))
    return PointQuadratics(u * u + a * s, u * w + b * s, w * w + c * s)


def _side_data(d: Disjunction, X: np.ndarray, side: int):
    c, o = d.side(side)
    u, w = X @ c, X @ o
    # below the rounding bound of the dot product the sign of c.x is noise, and
    # at large beta that noise would be amplified into an O(1) change of f
    noise = 8.0 * X.shape[1] * np.finfo(float).eps * (np.abs(X) @ np.abs(c))
    u = np.where(np.abs(u) <= noise, 0.0, u)
    s = soc_slack(X)
    A, B, C = d.side_coefficients(side)
    return u, w, s, A, B, C


def f_values(d: Disjunction, X, side: int, beta) -> np.ndarray:
    """f_side(beta) at each row of X; ``beta`` broadcasts against the rows."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    u, w, s, A, B, C = _side_data(d, X, side)
    beta = np.asarray(beta, dtype=float)
    if beta.ndim == 2:
        u, w, s = u[:, None], w[:, None], s[:, None]
    h = _radicand(u, w, s, beta, A, B, C)
    return beta * u + np.sqrt(np.maximum(h, 0.0))


def _convexity(u, w, s, A, B, C):
    # (QR - P^2) / s without the cancellation of the direct form
    return A * w * w + C * u * u - 2.0 * B * u * w + (A * C - B * B) * s


def beta_star(d: Disjunction, x, side: int = 1) -> float | None:
    """Critical point of f_side at an interior point, or None when there is none.

    A critical point exists when c_side is outside both K and -K and f is
    convex at ``x``.
    """
    _require_second_order(d)
    x = as_vector(x, d.n)
    if not classify_soc(x).name == "INTERIOR_K":
        raise InvalidArgumentError("beta_star needs a point in the interior of the cone")
    u, w, s, A, B, C = _side_data(d, x[None, :], side)
    u, w, s = float(u[0]), float(w[0]), float(s[0])
    if not A > 1e-12 * _scale(d.c1, d.c2) ** 2:
        return None
    E = _convexity(u, w, s, A, B, C)
    if E < -1e-12 * (1.0 + abs(A * w * w) + abs(C * u * u) + abs(B * u * w)):
        return None
    R = u * u + A * s
    P = u * w + B * s
    return P / R - (u / R) * math.sqrt(max(E, 0.0) / A)


def infimum_batch(d: Disjunction, X, side: int, interval: BetaInterval,
                  tie_tol: float = 1e-12) -> tuple[np.ndarray, np.ndarray]:
    """Infimum of f_side over ``interval`` for every row of X (rows must be cone points).

    On the interval f is either convex or concave, so its infimum is attained at
    an endpoint, at a stationary point, at the kink of a boundary point, or in
    the limit beta -> infinity.  All candidates are evaluated and the smallest
    value wins, ties going to the smallest beta.  An argmin of ``inf`` means the
    value is a limit at infinity; a value of ``-inf`` means f is unbounded below.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    m = X.shape[0]
    if interval.is_empty():
        raise InvalidArgumentError("infimum over an empty interval")
    u, w, s, A, B, C = _side_data(d, X, side)
    s = np.maximum(s, 0.0)
    lo, hi = interval.lo, interval.hi
    cands = []
    if math.isfinite(lo):
        cands.append(np.full(m, lo))
    if math.isfinite(hi):
        cands.append(np.full(m, hi))
    with np.errstate(divide="ignore", invalid="ignore"):
        R = u * u + A * s
        P = u * w + B * s
        if A > 1e-12 * _scale(d.c1, d.c2) ** 2:
            E = np.maximum(_convexity(u, w, s, A, B, C), 0.0)
            root = np.sqrt(E / A)
            ok = (s > 0) & (R > 0)
            for sgn in (-1.0, 1.0):
                b = np.where(ok, P / R + sgn * (u / R) * root, np.nan)
                cands.append(b)
        kink = np.where(np.abs(u) > 0, w / u, np.nan)
        cands.append(kink)
    betas = np.column_stack(cands)
    betas = np.clip(betas, lo, hi)
    finite = np.isfinite(betas)
    safe = np.where(finite, betas, lo if math.isfinite(lo) else 0.0)
    vals = f_values(d, X, side, safe)
    vals = np.where(finite, vals, np.inf)
    if not math.isfinite(hi):
        slope = u + np.sqrt(np.maximum(R, 0.0))
        tiny = 1e-12 * (1.0 + np.abs(u))
        with np.errstate(divide="ignore", invalid="ignore"):
            limit = np.where(R > tiny ** 2, -P / np.sqrt(np.maximum(R, 0.0)), np.inf)
        limit = np.where(slope < -tiny, -np.inf, np.where(np.abs(slope) <= tiny, limit, np.inf))
        vals = np.column_stack([vals, limit])
        betas = np.column_stack([betas, np.full(m, np.inf)])
    best = np.min(vals, axis=1)
    ties = vals <= (best + tie_tol * (1.0 + np.abs(np.where(np.isfinite(best), best, 0.0))))[:, None]
    arg = np.where(ties, betas, np.inf)
    argmin = np.min(arg, axis=1)
    return best, argmin


def inf_f(d: Disjunction, x, side: int = 1, bsets: BSets | None = None) -> tuple[float, float]:
    """``(value, argmin)`` of the infimum of f_side over its B set at a cone point."""
    _require_second_order(d)
    x = as_vector(x, d.n)
    if not classify_soc(x).in_cone:
        raise DomainError("inf_f is defined for cone points only")
    bs = b_sets(d) if bsets is None else bsets
    interval = bs.get(side)
    val, arg = infimum_batch(d, x[None, :], side, interval)
    return float(val[0]), float(arg[0])


def membership_batch(d: Disjunction, X, bsets: BSets | None = None,
                     tol: float = MEMBER_TOL) -> np.ndarray:
    """Closed-convex-hull membership for each row of X."""
    _require_second_order(d)
    X = np.atleast_2d(np.asarray(X, dtype=float))
    bs = b_sets(d) if bsets is None else bsets
    inside = cone_margin(X) >= -tol
    out = inside.copy()
    if not np.any(inside):
        return out
    Y = X[inside]
    ok = np.ones(Y.shape[0], dtype=bool)
    for k in (1, 2):
        interval = bs.get(k)
        if interval.is_empty():
            continue
        _, o = d.side(k)
        lhs = 2.0 * d.c2_0 - Y @ o
        val, _ = infimum_batch(d, Y, k, interval)
        ok &= lhs <= val + tol
    out[inside] = ok
    return out


def membership(d: Disjunction, x, bsets: BSets | None = None) -> bool:
    """Whether ``x`` belongs to the closed convex hull of the disjunction."""
    x = as_vector(x, d.n)
    return bool(membership_batch(d, x[None, :], bsets)[0])


# ---------------------------------------------------------------- separation

@dataclass(frozen=True)
class Member:
    kind: str = "Member"

    def to_dict(self) -> dict:
        return {"result": self.kind}


@dataclass(frozen=True)
class Separated:
    cut: object
    violation: float
    beta_used: float
    side: int | None = None
    cone: bool = False
    kind: str = "Separated"

    def to_dict(self) -> dict:
        return {"result": self.kind, "violation": self.violation, "beta_used": self.beta_used,
                "side": self.side, "cone_violated": self.cone, "cut": self.cut.to_dict()}


def _finite_separating_beta(d: Disjunction, x: np.ndarray, side: int, interval: BetaInterval,
                            beta: float) -> float:
    # The infimum is a limit at an open or infinite end; walk towards that end
    # until the cut at a finite beta is violated.
    if math.isinf(beta):
        start = max(interval.lo, 1.0)
        trials = start * np.logspace(0, 15, 61)
    else:
        top = interval.hi if math.isfinite(interval.hi) else interval.lo + 1.0
        trials = beta + (top - beta) * np.logspace(-1, -15, 57)
    best, best_m = None, 0.0
    for b in trials:
        if not interval.contains(b):
            continue
        margin = float(cut_at(d, b, side).margin(x[None, :])[0])
        if margin < best_m:
            best, best_m = float(b), margin
    if best is None:
        raise NumericalFailure("no finite multiplier reproduces the separating limit")
    return best


def separate(d: Disjunction, x, bsets: BSets | None = None, tol: float = MEMBER_TOL):
    """Return :class:`Member` or a :class:`Separated` with the most violated cut.

    Points outside the cone are separated by the cone itself: the linear cut
    ``r.y >= 0`` with ``r = (-x~/|x~|, 1)`` and ``cone=True``.
    """
    _require_second_order(d)
    x = as_vector(x, d.n)
    body = float(np.linalg.norm(x[:-1]))
    if x[-1] - body < -tol:
        r = np.append(-x[:-1] / body, 1.0) if body > 0 else np.append(np.zeros(d.n - 1), 1.0)
        return Separated(ConeCut(r), float(body - x[-1]), math.nan, None, True)
    bs = b_sets(d) if bsets is None else bsets
    worst = None
    for k in (1, 2):
        interval = bs.get(k)
        if interval.is_empty():
            continue
        _, o = d.side(k)
        lhs = 2.0 * d.c2_0 - float(o @ x)
        val, arg = infimum_batch(d, x[None, :], k, interval)
        gap = lhs - float(val[0])
        if gap > tol and (worst is None or gap > worst[0]):
            worst = (gap, k, float(arg[0]))
    if worst is None:
        return Member()
    _, k, beta = worst
    interval = bs.get(k)
    if math.isinf(beta) or not interval.contains(beta):
        beta = _finite_separating_beta(d, x, k, interval, beta)
    cut = cut_at(d, beta, k)
    violation = -float(cut.margin(x[None, :])[0])
    return Separated(cut, violation, beta, k, False)


# ---------------------------------------------------------------- linear certificates

@dataclass(frozen=True)
class VLICertificate:
    """One undominated valid linear inequality ``mu.x >= mu0`` with its multipliers."""

    mu: np.ndarray
    mu0: float
    alpha1: np.ndarray
    alpha2: np.ndarray
    beta1: float
    beta2: float
    M_half: float
    s: float

    def to_dict(self) -> dict:
        return {"mu": self.mu.tolist(), "mu0": self.mu0, "alpha1": self.alpha1.tolist(),
                "alpha2": self.alpha2.tolist(), "beta1": self.beta1, "beta2": self.beta2,
                "M_half": self.M_half, "s": self.s}


def linear_certificate(d: Disjunction, beta: float, side: int, direction) -> VLICertificate:
    """Build the family member whose free boundary multiplier points along ``direction``.

    With ``v = beta c_side - c_other`` the multiplier ``s (w~; 1)`` must make
    ``v + s (w~; 1)`` a boundary ray, which fixes ``s = N / (2 (v_n - v~.w~))``.
    """
    _require_second_order(d)
    w = np.asarray(direction, dtype=float).ravel()
    if w.size != d.n - 1 or not np.all(np.isfinite(w)):
        raise InvalidArgumentError(f"direction must have {d.n - 1} finite entries")
    if abs(np.linalg.norm(w) - 1.0) > 1e-9:
        raise InvalidArgumentError("direction must be a unit vector")
    c, o = d.side(side)
    v = beta * c - o
    N = n_coefficient(d, beta, side)
    if not N > 1e-12 * _scale(v) ** 2:
        raise InvalidArgumentError(f"beta c{side} - c{3 - side} must lie outside both K and -K")
    denom = 2.0 * (v[-1] - float(v[:-1] @ w))
    if not denom > 1e-12 * _scale(v):
        raise NoCertificateError("direction does not generate a family member")
    s = N / denom
    if v[-1] + s < 0:
        raise NoCertificateError("direction gives a ray of the negative cone")
    ray = s * np.append(w, 1.0)
    mu = beta * c + ray
    other = mu - o
    A, _, C = d.side_coefficients(side)
    M_half = 0.5 * (beta * beta * A - C)
    if side == 1:
        return VLICertificate(mu, float(d.c2_0), ray, other, float(beta), 1.0, M_half, float(s))
    return VLICertificate(mu, float(d.c2_0), other, ray, 1.0, float(beta), M_half, float(s))


def envelope_value(d: Disjunction, beta: float, side: int, x) -> float:
    """Infimum of ``mu.x`` over the certificates at ``beta``: ``((beta c + c_o).x + sqrt(h)) / 2``."""
    x = as_vector(x, d.n)
    c, o = d.side(side)
    h = (float((beta * c - o) @ x)) ** 2 + n_coefficient(d, beta, side) * float(soc_slack(x))
    return 0.5 * (float((beta * c + o) @ x) + math.sqrt(max(h, 0.0)))


# ---------------------------------------------------------------- cut family

def beta_grid(interval: BetaInterval, k: int = 21) -> np.ndarray:
    """``k`` multipliers covering the interval, endpoints included where finite."""
    if interval.is_empty():
        return np.empty(0)
    if interval.is_singleton():
        return np.array([interval.lo])
    lo, hi = interval.lo, interval.hi
    if interval.bounded():
        grid = np.linspace(lo, hi, k)
        if not interval.lo_closed:
            grid[0] = lo + 1e-6 * (hi - lo)
        if not interval.hi_closed:
            grid[-1] = hi - 1e-6 * (hi - lo)
        return grid
    if interval.lo_closed:
        return lo + np.concatenate([[0.0], np.geomspace(1e-2, 1e3, k - 1)])
    return lo + np.geomspace(1e-3, 1e3, k)


def cut_family(d: Disjunction, k: int = 21, bsets: BSets | None = None,
               conic: bool = True) -> list:
    """Cuts at a grid of multipliers over each nonempty B set.

    Boundary multipliers give linear cuts, others radical cuts; a conic
    quadratic twin is added wherever the disjointness test allows it.
    """
    bs = b_sets(d) if bsets is None else bsets
    cuts = []
    for side in (1, 2):
        for beta in beta_grid(bs.get(side), k):
            cut = cut_at(d, float(beta), side)
            cuts.append(cut)
            if conic and cut.kind == "convex-radical" and cut.N > 0 and cqr_holds(d, beta, side) == "Yes":
                cuts.append(conic_cut(d, float(beta), side))
    return cuts
