"""Geometry of the second-order cone and the p-order cone.

Points are numpy vectors whose last coordinate is the cone "height" x_n; the
leading n-1 coordinates form the body x~.  A point x lies in the p-order cone
when ``||x~||_p <= x_n``; p = 2 is the second-order (Lorentz) cone.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError

DEFAULT_TOL = 1e-9


class Membership(enum.Enum):
    INTERIOR_K = "interior"
    BOUNDARY_K = "boundary"
    INTERIOR_NEG_K = "interior-neg"
    BOUNDARY_NEG_K = "boundary-neg"
    OUTSIDE = "outside"

    @property
    def in_cone(self) -> bool:
        return self in (Membership.INTERIOR_K, Membership.BOUNDARY_K)

    @property
    def in_neg_cone(self) -> bool:
        return self in (Membership.INTERIOR_NEG_K, Membership.BOUNDARY_NEG_K)

    def negated(self) -> "Membership":
        return _NEGATED[self]


_NEGATED = {
    Membership.INTERIOR_K: Membership.INTERIOR_NEG_K,
    Membership.BOUNDARY_K: Membership.BOUNDARY_NEG_K,
    Membership.INTERIOR_NEG_K: Membership.INTERIOR_K,
    Membership.BOUNDARY_NEG_K: Membership.BOUNDARY_K,
    Membership.OUTSIDE: Membership.OUTSIDE,
}


class Region(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"


def _check_exponent(p: float, allow_one: bool = False) -> float:
    p = float(p)
    lower_ok = p >= 1.0 if allow_one else p > 1.0
    if not (lower_ok and math.isfinite(p)):
        raise InvalidInputError(f"exponent p must lie in {'[1' if allow_one else '(1'}, inf), got {p}")
    return p


def dual_exponent(p: float) -> float:
    """Return q with 1/p + 1/q = 1."""
    p = _check_exponent(p)
    return p / (p - 1.0)


@dataclass(frozen=True)
class ConeSpec:
    """Which cone a disjunction lives on.

    ``kind`` is ``"second-order"`` or ``"p-order"``; ``p`` is 2 for the
    second-order cone.
    """

    kind: str
    n: int
    p: float = 2.0

    def __post_init__(self):
        if self.kind not in ("second-order", "p-order"):
            raise InvalidInputError(f"unknown cone kind {self.kind!r}")
        if int(self.n) != self.n or self.n < 2:
            raise InvalidInputError(f"cone dimension must be an integer >= 2, got {self.n}")
        if self.kind == "p-order":
            _check_exponent(self.p)
        elif self.p != 2.0:
            raise InvalidInputError("second-order cones have p = 2")

    @classmethod
    def second_order(cls, n: int) -> "ConeSpec":
        return cls("second-order", n)

    @classmethod
    def p_order(cls, n: int, p: float) -> "ConeSpec":
        return cls("p-order", n, float(p))

    @property
    def is_second_order(self) -> bool:
        return self.kind == "second-order"

    @property
    def q(self) -> float:
        """Exponent of the dual cone."""
        return dual_exponent(self.p)

    def dual(self) -> "ConeSpec":
        if self.is_second_order:
            return self
        return ConeSpec.p_order(self.n, self.q)

    def classify(self, v, eps: float = DEFAULT_TOL) -> Membership:
        if self.is_second_order:
            return classify_soc(v, eps)
        return classify_porder(v, self.p, eps)

    def margin(self, X) -> np.ndarray:
        """x_n - ||x~||_p, row-wise for a stack of points."""
        X = np.asarray(X, dtype=float)
        return X[..., -1] - np.linalg.norm(X[..., :-1], ord=self.p, axis=-1)


def as_vector(v, n: int | None = None) -> np.ndarray:
    """Validate and convert to a finite float vector with at least 2 entries."""
    arr = np.asarray(v, dtype=float)
    if arr.ndim != 1 or arr.size < 2:
        raise InvalidInputError(f"expected a vector with at least 2 entries, got shape {arr.shape}")
    if n is not None and arr.size != n:
        raise InvalidInputError(f"expected {n} entries, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError("vector has non-finite entries")
    return arr


def p_norm(w, p: float) -> float:
    """The p-norm of ``w``; p = 1 is allowed here."""
    p = _check_exponent(p, allow_one=True)
    w = np.asarray(w, dtype=float)
    if w.size == 0:
        return 0.0
    return float(np.linalg.norm(w.ravel(), ord=p))


def _classify_margins(pos: float, neg: float, height: float, eps: float) -> Membership:
    # pos = v_n - ||v~||, neg = -v_n - ||v~||
    if pos > eps:
        return Membership.INTERIOR_K
    if abs(pos) <= eps and height >= -eps:
        return Membership.BOUNDARY_K
    if neg > eps:
        return Membership.INTERIOR_NEG_K
    if abs(neg) <= eps and -height >= -eps:
        return Membership.BOUNDARY_NEG_K
    return Membership.OUTSIDE


def _classify(v, p: float, eps: float) -> Membership:
    if not eps > 0:
        raise InvalidInputError(f"tolerance must be positive, got {eps}")
    v = as_vector(v)
    body = float(np.linalg.norm(v[:-1], ord=p))
    vn = float(v[-1])
    return _classify_margins(vn - body, -vn - body, vn, eps)


def classify_soc(v, eps: float = DEFAULT_TOL) -> Membership:
    """Classify ``v`` against the second-order cone and its negative."""
    return _classify(v, 2.0, eps)


def classify_porder(v, p: float, eps: float = DEFAULT_TOL) -> Membership:
    """Classify ``v`` against the p-order cone and its negative."""
    return _classify(v, _check_exponent(p), eps)


def cone_margin(X, p: float = 2.0) -> np.ndarray:
    """Vectorised x_n - ||x~||_p."""
    X = np.asarray(X, dtype=float)
    return X[..., -1] - np.linalg.norm(X[..., :-1], ord=p, axis=-1)


def soc_slack(X) -> np.ndarray:
    """x_n^2 - ||x~||^2 computed as a product of factors to limit cancellation."""
    X = np.asarray(X, dtype=float)
    body = np.linalg.norm(X[..., :-1], axis=-1)
    xn = X[..., -1]
    return (xn - body) * (xn + body)


def _unit_pball(count: int, d: int, p: float, rng: np.random.Generator) -> np.ndarray:
    # Uniform in the unit p-ball: generalized-Gaussian body plus an exponential slack.
    g = rng.gamma(1.0 / p, 1.0, size=(count, d)) ** (1.0 / p)
    y = g * rng.choice([-1.0, 1.0], size=(count, d))
    z = rng.exponential(1.0, size=(count, 1))
    return y / (np.sum(np.abs(y) ** p, axis=1, keepdims=True) + z) ** (1.0 / p)


def _unit_psphere(count: int, d: int, p: float, rng: np.random.Generator) -> np.ndarray:
    while True:
        y = _unit_pball(count, d, p, rng)
        norms = np.linalg.norm(y, ord=p, axis=1, keepdims=True)
        if np.all(norms > 1e-12):
            return y / norms


def sample_cone_points(spec: ConeSpec, region: Region | str, count: int, rng: np.random.Generator,
                       scale: tuple[float, float] = (0.25, 4.0)) -> np.ndarray:
    """Draw ``count`` points of the cone, stacked row-wise.

    Interior points have body ``u * b`` with ``b`` uniform in the unit p-ball
    and ``u`` uniform in (0, 1 - 1e-6), height 1; boundary points have body on
    the unit p-sphere.  Every point is then multiplied by a log-uniform factor
    drawn from ``scale``.
    """
    region = Region(region)
    d = spec.n - 1
    if region is Region.INTERIOR:
        u = rng.uniform(0.0, 1.0 - 1e-6, size=(count, 1))
        body = u * _unit_pball(count, d, spec.p, rng)
    else:
        body = _unit_psphere(count, d, spec.p, rng)
    pts = np.hstack([body, np.ones((count, 1))])
    lo, hi = scale
    factors = np.exp(rng.uniform(math.log(lo), math.log(hi), size=(count, 1)))
    return pts * factors


def sample_cone_point(spec: ConeSpec, region: Region | str, rng: np.random.Generator) -> np.ndarray:
    """One point of the cone's interior or boundary (see :func:`sample_cone_points`)."""
    return sample_cone_points(spec, region, 1, rng)[0]
