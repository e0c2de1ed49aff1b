"""Elementary split disjunctions ``t1 x_i >= 1  or  -t2 x_i >= 1`` on the p-order cone.

The convex hull of the two pieces is described by the single conic cut

    || (t1 + t2) x~ - 2 (t2 x_i + 1) e~^i ||_p <= (t1 + t2) x_n .
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .cone import ConeSpec, as_vector, classify_porder
from .disjunction import Disjunction
from .errors import DomainError, InvalidInputError, UnsupportedInstanceError

P_WARN = 64.0


@dataclass(frozen=True)
class POrderSplitInstance:
    """Split on coordinate ``i`` (1-based, body coordinates only) of the n-dimensional p-cone."""

    n: int
    p: float
    i: int
    t1: float
    t2: float

    def __post_init__(self):
        ConeSpec.p_order(self.n, self.p)
        if not (1 <= int(self.i) <= self.n - 1) or int(self.i) != self.i:
            raise InvalidInputError(f"split index must lie in 1..{self.n - 1}, got {self.i}")
        for name in ("t1", "t2"):
            val = getattr(self, name)
            if not (math.isfinite(val) and val > 0):
                raise InvalidInputError(f"{name} must be positive and finite, got {val}")
        if self.p > P_WARN:
            warnings.warn(f"p = {self.p} is large; p-norms of O(1) data may lose accuracy",
                          RuntimeWarning, stacklevel=3)

    @property
    def cone(self) -> ConeSpec:
        return ConeSpec.p_order(self.n, self.p)

    def as_vectors(self) -> tuple[np.ndarray, np.ndarray]:
        """``(c1, c2) = (t1 e^i, -t2 e^i)``, both with right-hand side 1."""
        c1 = np.zeros(self.n)
        c2 = np.zeros(self.n)
        c1[self.i - 1] = self.t1
        c2[self.i - 1] = -self.t2
        return c1, c2

    def to_dict(self) -> dict:
        return {"n": self.n, "p": self.p, "i": self.i, "t1": self.t1, "t2": self.t2}


@dataclass(frozen=True)
class POrderSplitCut:
    inst: POrderSplitInstance
    kind: str = "p-order-split"

    def margin(self, X) -> np.ndarray:
        return split_cut_margin(self.inst, X)

    def to_dict(self) -> dict:
        return {"kind": self.kind, **self.inst.to_dict()}


@dataclass(frozen=True)
class TrivialSplit:
    """A split whose hull is the whole cone (some rhs is not 1)."""

    n: int
    p: float
    reason: str
    kind: str = "trivial"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "n": self.n, "p": self.p, "hull_is_K": True,
                "reason": self.reason}


def from_disjunction(d: Disjunction, tol: float = 1e-12):
    """Recognise an elementary split in a normalized p-order disjunction.

    Returns a :class:`POrderSplitInstance` when both rhs are 1, a
    :class:`TrivialSplit` for other right-hand sides, and raises
    :class:`UnsupportedInstanceError` for anything that is not an elementary split.
    """
    if d.cone.is_second_order:
        spec = ConeSpec.p_order(d.n, 2.0)
    else:
        spec = d.cone
    supports = []
    for c in (d.c1, d.c2):
        nz = np.flatnonzero(np.abs(c) > tol * np.max(np.abs(c)))
        supports.append(nz)
    ok = (len(supports[0]) == 1 and len(supports[1]) == 1 and supports[0][0] == supports[1][0]
          and supports[0][0] < d.n - 1)
    if ok:
        j = int(supports[0][0])
        ok = d.c1[j] * d.c2[j] < 0
    if not ok:
        raise UnsupportedInstanceError(
            "p-order cones support only elementary splits t1 x_i >= r1 or -t2 x_i >= r2 "
            "with i a body coordinate")
    if not (d.c1_0 == 1 and d.c2_0 == 1):
        return TrivialSplit(d.n, spec.p, "the closed convex hull is the whole cone unless both right-hand sides are 1")
    pos, neg = (d.c1, d.c2) if d.c1[j] > 0 else (d.c2, d.c1)
    return POrderSplitInstance(d.n, spec.p, j + 1, float(pos[j]), float(-neg[j]))


def split_cut_margin(inst: POrderSplitInstance, X) -> np.ndarray | float:
    """``(t1+t2) x_n - ||(t1+t2) x~ - 2 (t2 x_i + 1) e~^i||_p``; vectorised over rows."""
    X = np.asarray(X, dtype=float)
    scalar = X.ndim == 1
    X = np.atleast_2d(X)
    t = inst.t1 + inst.t2
    body = t * X[:, :-1]
    body[:, inst.i - 1] -= 2.0 * (inst.t2 * X[:, inst.i - 1] + 1.0)
    out = t * X[:, -1] - np.linalg.norm(body, ord=inst.p, axis=1)
    return float(out[0]) if scalar else out


def _rho(X: np.ndarray, i: int, p: float) -> np.ndarray:
    X = np.atleast_2d(np.asarray(X, dtype=float))
    xn = X[:, -1]
    mask = np.ones(X.shape[1] - 1, dtype=bool)
    mask[i - 1] = False
    rest = np.sum(np.abs(X[:, :-1][:, mask]) ** p, axis=1)
    # x_n^p - rest; large exponents are handled through the ratio form
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(xn > 0, rest / np.maximum(xn, 1e-300) ** p, np.where(rest > 0, np.inf, 0.0))
    rad = 1.0 - ratio
    tol = 1e-12
    if np.any(rad < -tol) or np.any(xn < 0):
        raise DomainError("point lies outside the p-order cone")
    return np.maximum(xn, 0.0) * np.maximum(rad, 0.0) ** (1.0 / p)


def tau_star(x, i: int, p: float) -> float:
    """Maximiser ``(x_i + rho) / 2`` of the inner problem, ``rho = (x_n^p - sum_{j != i} |x_j|^p)^(1/p)``."""
    x = as_vector(x)
    rho = float(_rho(x[None, :], i, p)[0])
    return 0.5 * (float(x[i - 1]) + rho)


def pmain_margin(inst: POrderSplitInstance, X):
    """``rho - (2 - (t1 - t2) x_i) / (t1 + t2)``."""
    X = np.asarray(X, dtype=float)
    scalar = X.ndim == 1
    X2 = np.atleast_2d(X)
    rho = _rho(X2, inst.i, inst.p)
    out = rho - (2.0 - (inst.t1 - inst.t2) * X2[:, inst.i - 1]) / (inst.t1 + inst.t2)
    return float(out[0]) if scalar else out


def pcomplement_margin(inst: POrderSplitInstance, X):
    """``rho - (-2 + (t1 - t2) x_i) / (t1 + t2)``; nonnegative on the whole cone."""
    X = np.asarray(X, dtype=float)
    scalar = X.ndim == 1
    X2 = np.atleast_2d(X)
    rho = _rho(X2, inst.i, inst.p)
    out = rho + (2.0 - (inst.t1 - inst.t2) * X2[:, inst.i - 1]) / (inst.t1 + inst.t2)
    return float(out[0]) if scalar else out


def porder_membership(inst: POrderSplitInstance, X, tol: float = 1e-9) -> np.ndarray:
    """Hull membership: cone point with nonnegative split-cut margin."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    in_cone = X[:, -1] - np.linalg.norm(X[:, :-1], ord=inst.p, axis=1) >= -tol
    return in_cone & (split_cut_margin(inst, X) >= -tol)


def classify(inst: POrderSplitInstance, x, eps: float = 1e-9):
    """Cone classification of ``x`` for the instance's exponent."""
    return classify_porder(x, inst.p, eps)
