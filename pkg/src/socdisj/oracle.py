"""Brute-force checks that do not go through the closed forms.

The hull sampler builds points of ``conv(C1 + rec C2, C2 + rec C1)``, which is the
closed convex hull of the disjunction, directly from cone samples.  The grid
infimum scans the multiplier interval instead of solving for stationary points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cone import ConeSpec, as_vector, sample_cone_points, soc_slack
from .cuts import BSets, b_sets, f_values, n_coefficient
from .disjunction import Disjunction
from .errors import InvalidArgumentError


@dataclass
class ValidityReport:
    samples_tested: int
    max_violation: float
    worst_point: np.ndarray | None
    passed: bool
    tol: float = 1e-7
    worst_cut: int | None = None

    def to_dict(self) -> dict:
        return {"samples_tested": self.samples_tested, "max_violation": self.max_violation,
                "worst_point": None if self.worst_point is None else self.worst_point.tolist(),
                "passed": self.passed, "tol": self.tol, "worst_cut": self.worst_cut}


def tau_roots(d: Disjunction, beta: float, x) -> tuple[float, float]:
    """Roots ``((beta c1 - c2).x -+ sqrt(h)) / N1(beta)`` of the side-1 dual quadratic."""
    x = as_vector(x, d.n)
    N = n_coefficient(d, beta, 1)
    if not N > 0:
        raise InvalidArgumentError(f"tau roots need N1(beta) > 0, got {N}")
    lin = float((beta * d.c1 - d.c2) @ x)
    h = lin * lin + N * float(soc_slack(x))
    r = math.sqrt(max(h, 0.0))
    return (lin - r) / N, (lin + r) / N


def max_ray(c: np.ndarray, p: float = 2.0) -> np.ndarray:
    """Ray ``r`` with ``r_n = 1`` on the p-cone boundary maximising ``c.r``."""
    body = c[:-1]
    if not np.any(body):
        return np.append(np.zeros_like(body), 1.0)
    q = p / (p - 1.0)
    mag = np.abs(body) ** (q - 1.0)
    r = np.sign(body) * mag / np.linalg.norm(body, ord=q) ** (q - 1.0)
    return np.append(r, 1.0)


def _cone_draws(spec: ConeSpec, count: int, rng: np.random.Generator) -> np.ndarray:
    half = count // 2
    return np.vstack([sample_cone_points(spec, "interior", half, rng),
                      sample_cone_points(spec, "boundary", count - half, rng)])


def sample_side(spec: ConeSpec, c: np.ndarray, rhs: int, count: int, rng: np.random.Generator,
                max_rounds: int = 200) -> np.ndarray:
    """Points of ``{x in K : c.x >= rhs}``; about a quarter lie on the hyperplane when rhs != 0."""
    out, have = [], 0
    for _ in range(max_rounds):
        if have >= count:
            break
        Y = _cone_draws(spec, max(4 * count, 64), rng)
        t = Y @ c
        if rhs == 1:
            keep = t > 1e-9
            Y, t = Y[keep], t[keep]
            lam = (1.0 / t) * np.where(rng.random(t.size) < 0.25, 1.0, 1.0 + rng.exponential(1.0, t.size))
        elif rhs == 0:
            keep = t >= 0
            Y, t = Y[keep], t[keep]
            lam = np.exp(rng.uniform(np.log(0.1), np.log(10.0), t.size))
        else:
            neg = t < 0
            lam = np.exp(rng.uniform(np.log(0.1), np.log(10.0), t.size))
            with np.errstate(divide="ignore"):
                cap = np.where(neg, -1.0 / np.where(neg, t, 1.0), np.inf)
            on = rng.random(t.size) < 0.25
            lam = np.where(neg, np.where(on, cap, cap * rng.uniform(0.0, 1.0, t.size)), lam)
        pts = Y * lam[:, None]
        out.append(pts)
        have += pts.shape[0]
    if have == 0:
        return np.empty((0, spec.n))
    return np.vstack(out)[:count]


def sample_recession(spec: ConeSpec, c: np.ndarray, count: int, rng: np.random.Generator,
                     eps: float = 1e-12) -> np.ndarray:
    """Directions of ``{r in K : c.r >= 0}``; an empty array when that cone is {0}."""
    r0 = max_ray(c, spec.p)
    best = float(c @ r0)
    if best < -eps * (1.0 + np.max(np.abs(c))):
        return np.empty((0, spec.n))
    if best <= eps * (1.0 + np.max(np.abs(c))):
        # a single boundary ray
        return r0[None, :] * np.exp(rng.uniform(np.log(0.1), np.log(10.0), (count, 1)))
    out, have = [], 0
    for _ in range(200):
        if have >= count:
            break
        Y = _cone_draws(spec, max(4 * count, 64), rng)
        Y = Y[Y @ c >= 0]
        out.append(Y)
        have += Y.shape[0]
    if have < count:
        out.append(np.repeat(r0[None, :], count - have, axis=0))
    return np.vstack(out)[:count]


def _plain_hull_points(d: Disjunction, count: int, rng: np.random.Generator):
    spec = d.cone
    q = max(count // 4, 1)
    S1 = sample_side(spec, d.c1, d.c1_0, 2 * q, rng)
    S2 = sample_side(spec, d.c2, d.c2_0, 2 * q, rng)
    if S1.shape[0] == 0 and S2.shape[0] == 0:
        return np.empty((0, spec.n)), []
    if S1.shape[0] == 0 or S2.shape[0] == 0:
        S = S1 if S1.shape[0] else S2
        kind = "C1" if S1.shape[0] else "C2"
        S = S[rng.integers(0, S.shape[0], count)]
        return S, [kind] * count
    pts, kinds = [], []
    # plain side points
    h = q // 2
    pts += [S1[:h], S2[:q - h]]
    kinds += ["C1"] * h + ["C2"] * (q - h)
    # convex combinations
    lam = rng.uniform(0.0, 1.0, (q, 1))
    i1, i2 = rng.integers(0, S1.shape[0], q), rng.integers(0, S2.shape[0], q)
    pts.append(lam * S1[i1] + (1.0 - lam) * S2[i2])
    kinds += ["conv"] * q
    # recession-augmented points
    R2 = sample_recession(spec, d.c2, q, rng)
    R1 = sample_recession(spec, d.c1, q, rng)
    A1 = S1[rng.integers(0, S1.shape[0], R2.shape[0])] + R2
    A2 = S2[rng.integers(0, S2.shape[0], R1.shape[0])] + R1
    plus1 = np.vstack([S1, A1])
    plus2 = np.vstack([S2, A2])
    m = min(A1.shape[0], q // 2)
    pts.append(A1[:m])
    kinds += ["C1+rec2"] * m
    m2 = min(A2.shape[0], q - m)
    pts.append(A2[:m2])
    kinds += ["C2+rec1"] * m2
    rest = count - sum(p.shape[0] for p in pts)
    lam = rng.uniform(0.0, 1.0, (rest, 1))
    j1, j2 = rng.integers(0, plus1.shape[0], rest), rng.integers(0, plus2.shape[0], rest)
    pts.append(lam * plus1[j1] + (1.0 - lam) * plus2[j2])
    kinds += ["conv+"] * rest
    return np.vstack(pts), kinds




def _unit_rays(spec: ConeSpec, count: int, rng: np.random.Generator) -> np.ndarray:
    return sample_cone_points(spec, "boundary", count, rng, scale=(1.0, 1.0))


def plane_rays(spec: ConeSpec, c: np.ndarray, count: int, rng: np.random.Generator) -> np.ndarray:
    """Boundary rays ``r`` (with ``r_n = 1``) satisfying ``c.r = 0``; empty if there are none."""
    R = _unit_rays(spec, 8 * count, rng)
    t = R @ c
    P, N = R[t > 0], R[t < 0]
    if P.shape[0] == 0 or N.shape[0] == 0:
        return np.empty((0, spec.n))
    a = P[rng.integers(0, P.shape[0], count)]
    b = N[rng.integers(0, N.shape[0], count)]
    def arc(t):
        body = (1.0 - t) * a[:, :-1] + t * b[:, :-1]
        body /= np.linalg.norm(body, ord=spec.p, axis=1, keepdims=True)
        return np.hstack([body, np.ones((count, 1))])

    lo, hi = np.zeros((count, 1)), np.ones((count, 1))
    # bisect along the boundary arc from a to b
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        pos = (arc(mid) @ c)[:, None] > 0
        lo, hi = np.where(pos, mid, lo), np.where(pos, hi, mid)
    # the lo end keeps c.r >= 0 after rounding
    return arc(lo)


def sample_extreme(spec: ConeSpec, c: np.ndarray, rhs: int, count: int,
                   rng: np.random.Generator) -> np.ndarray:
    """Points of ``{x in bd K : c.x = rhs}`` (plus the apex when rhs <= 0)."""
    if rhs == 0:
        R = plane_rays(spec, c, count, rng)
        R = R * np.exp(rng.uniform(np.log(0.1), np.log(10.0), (R.shape[0], 1)))
    else:
        R = _unit_rays(spec, 4 * count, rng)
        t = R @ c
        keep = t * rhs > 1e-9
        R = R[keep] * (rhs / t[keep])[:, None]
    if rhs <= 0:
        R = np.vstack([R, np.zeros((1, spec.n))])
    return R[:count]


def _recession_rays(spec: ConeSpec, c: np.ndarray, count: int, rng: np.random.Generator) -> np.ndarray:
    R = _unit_rays(spec, 2 * count, rng)
    R = R[R @ c >= 0][:count // 2]
    return np.vstack([R, plane_rays(spec, c, count - R.shape[0], rng)])


def _extreme_hull_points(d: Disjunction, count: int, rng: np.random.Generator) -> np.ndarray:
    spec = d.cone
    m = max(count, 16)
    E = [sample_extreme(spec, d.c1, d.c1_0, m, rng), sample_extreme(spec, d.c2, d.c2_0, m, rng)]
    Q = [_recession_rays(spec, d.c1, m, rng), _recession_rays(spec, d.c2, m, rng)]

    def side_points(k: int) -> np.ndarray:
        X = E[k][rng.integers(0, E[k].shape[0], count)]
        rec = Q[1 - k]
        if rec.shape[0]:
            # add a recession direction of the other side to half the points
            s = np.exp(rng.uniform(np.log(0.01), np.log(100.0), (count, 1)))
            s *= rng.random((count, 1)) < 0.5
            X = X + s * rec[rng.integers(0, rec.shape[0], count)]
        return X

    if E[0].shape[0] == 0 or E[1].shape[0] == 0:
        return side_points(0 if E[0].shape[0] else 1)
    lam = rng.uniform(0.0, 1.0, (count, 1))
    cut = rng.random(count)
    lam[cut < 0.1] = 0.0
    lam[cut > 0.9] = 1.0
    return lam * side_points(0) + (1.0 - lam) * side_points(1)


def sample_hull_points(d: Disjunction, count: int, rng: np.random.Generator):
    """``count`` points of the closed convex hull, with a kind label for each.

    Kinds: ``C1``, ``C2`` (points of either side), ``conv`` (convex combinations),
    ``C1+rec2`` / ``C2+rec1`` (a side point plus a recession direction of the other
    side), ``conv+`` (combinations of the latter, which may only be reached in
    the closure of the plain hull) and ``ext`` (combinations built from points of
    ``bd K`` on either hyperplane and boundary recession rays, where valid cuts
    tend to be tight).
    """
    n_ext = count // 2
    X, kinds = _plain_hull_points(d, count - n_ext, rng)
    if X.shape[0] == 0:
        return X, kinds
    Y = _extreme_hull_points(d, n_ext, rng)
    return np.vstack([X, Y]), kinds + ["ext"] * Y.shape[0]


def verify_validity(d: Disjunction, cuts: list, count: int, tol: float,
                    rng: np.random.Generator, points: np.ndarray | None = None) -> ValidityReport:
    """Evaluate every cut on ``count`` hull samples; passed iff no margin is below ``-tol``."""
    X = sample_hull_points(d, count, rng)[0] if points is None else np.asarray(points, dtype=float)
    worst, worst_pt, worst_cut = -math.inf, None, None
    for j, cut in enumerate(cuts):
        m = np.asarray(cut.margin(X), dtype=float)
        if m.size == 0:
            continue
        k = int(np.argmin(m))
        if -m[k] > worst:
            worst, worst_pt, worst_cut = float(-m[k]), X[k].copy(), j
    worst = max(worst, 0.0)
    return ValidityReport(int(X.shape[0]), worst, worst_pt, worst <= tol, tol, worst_cut)


def grid_infimum(d: Disjunction, x, side: int, grid_points: int = 10_000,
                 bsets: BSets | None = None, clip: float = 1e3, refine: int = 3) -> float:
    """Minimum of f_side over a uniform grid of the B set clipped to [-clip, clip].

    ``refine`` further uniform grids of the same size are laid over the two
    cells around the current best node.
    """
    if grid_points < 2:
        raise InvalidArgumentError("grid_points must be at least 2")
    x = as_vector(x, d.n)
    bs = b_sets(d) if bsets is None else bsets
    interval = bs.get(side)
    if interval.is_empty():
        raise InvalidArgumentError("B set is empty")
    lo, hi = max(interval.lo, -clip), min(interval.hi, clip)
    if interval.is_singleton() or hi <= lo:
        return float(f_values(d, x, side, np.array([lo]))[0])
    best = math.inf
    for _ in range(refine + 1):
        grid = np.linspace(lo, hi, grid_points)
        vals = f_values(d, x, side, grid[None, :].repeat(1, axis=0))[0]
        j = int(np.argmin(vals))
        best = min(best, float(vals[j]))
        step = grid[1] - grid[0]
        lo, hi = max(grid[j] - step, grid[0]), min(grid[j] + step, grid[-1])
    return best
