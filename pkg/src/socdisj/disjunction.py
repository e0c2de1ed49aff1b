"""Two-term disjunctions on a cone: normalization and preflight classification.

A disjunction is ``c1.x >= c1_0  or  c2.x >= c2_0`` imposed on a cone K.  After
:func:`normalize` both right-hand sides lie in {-1, 0, 1} and ``c1_0 >= c2_0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cone import DEFAULT_TOL, ConeSpec, as_vector, classify_soc
from .errors import InvalidInputError, InvalidInstanceError, UnsupportedInstanceError
from .intervals import BetaInterval, linear_set, quadratic_set

CASE_TAGS = ("BothDNonempty", "D1EmptyD2Nonempty", "D2EmptyD1Nonempty", "BothDEmpty")


@dataclass(frozen=True, eq=False)
class Disjunction:
    """A normalized disjunction.

    ``scales`` holds the positive factors applied to the user's first and
    second inequality; ``swapped`` is true when the user's first inequality
    became ``c2`` here.
    """

    cone: ConeSpec
    c1: np.ndarray
    c1_0: int
    c2: np.ndarray
    c2_0: int
    swapped: bool = False
    scales: tuple[float, float] = (1.0, 1.0)

    @property
    def n(self) -> int:
        return self.cone.n

    def side(self, k: int) -> tuple[np.ndarray, np.ndarray]:
        """``(c_k, c_other)`` for side k."""
        _check_side(k)
        return (self.c1, self.c2) if k == 1 else (self.c2, self.c1)

    def rhs(self, k: int) -> int:
        _check_side(k)
        return self.c1_0 if k == 1 else self.c2_0

    def lorentz_coefficients(self) -> tuple[float, float, float]:
        """``(a, b, c)`` with a = |c~1|^2 - c1n^2, b = c~1.c~2 - c1n c2n, c = |c~2|^2 - c2n^2."""
        c1, c2 = self.c1, self.c2
        b1, b2 = np.linalg.norm(c1[:-1]), np.linalg.norm(c2[:-1])
        a = float((b1 - c1[-1]) * (b1 + c1[-1]))
        c = float((b2 - c2[-1]) * (b2 + c2[-1]))
        b = float(c1[:-1] @ c2[:-1] - c1[-1] * c2[-1])
        return a, b, c

    def side_coefficients(self, k: int) -> tuple[float, float, float]:
        """Coefficients (A, B, C) of the side-k quadratic A t^2 - 2 B t + C."""
        a, b, c = self.lorentz_coefficients()
        return (a, b, c) if k == 1 else (c, b, a)

    def user_sides(self) -> dict:
        """Map normalized side numbers to the user's original ordering."""
        return {"1": 2 if self.swapped else 1, "2": 1 if self.swapped else 2}

    def to_dict(self) -> dict:
        cone = {"type": self.cone.kind, "n": self.n}
        if not self.cone.is_second_order:
            cone["p"] = self.cone.p
        return {"cone": cone, "c1": self.c1.tolist(), "c1_0": self.c1_0,
                "c2": self.c2.tolist(), "c2_0": self.c2_0, "swapped": self.swapped,
                "scales": list(self.scales)}


def _check_side(k: int) -> None:
    if k not in (1, 2):
        raise InvalidInputError(f"side must be 1 or 2, got {k!r}")


def _scale_side(c: np.ndarray, rhs: float) -> tuple[np.ndarray, int, float]:
    if rhs == 0.0:
        return c.copy(), 0, 1.0
    factor = 1.0 / abs(rhs)
    return c * factor, int(math.copysign(1, rhs)), factor


def normalize(cone: ConeSpec, c1, c1_0: float, c2, c2_0: float) -> Disjunction:
    """Scale each side so its right-hand side is in {-1, 0, 1} and order them.

    >>> d = normalize(ConeSpec.second_order(3), [0, 0, 2], 2, [1, 0, 1], 1)
    >>> d.c1.tolist(), d.c1_0
    ([0.0, 0.0, 1.0], 1)
    """
    try:
        c1 = as_vector(c1, cone.n)
        c2 = as_vector(c2, cone.n)
    except InvalidInputError as exc:
        raise InvalidInstanceError(str(exc)) from exc
    for name, val in (("c1_0", c1_0), ("c2_0", c2_0)):
        if not math.isfinite(float(val)):
            raise InvalidInstanceError(f"{name} must be finite")
    if not np.any(c1) or not np.any(c2):
        raise InvalidInstanceError("coefficient vectors must be nonzero")
    v1, r1, f1 = _scale_side(c1, float(c1_0))
    v2, r2, f2 = _scale_side(c2, float(c2_0))
    if r1 < r2:
        return Disjunction(cone, v2, r2, v1, r1, True, (f1, f2))
    return Disjunction(cone, v1, r1, v2, r2, False, (f1, f2))


def _require_second_order(d: Disjunction) -> None:
    if not d.cone.is_second_order:
        raise UnsupportedInstanceError("this operation is defined for second-order cone instances only")


@dataclass(frozen=True)
class DSets:
    D1: BetaInterval
    D2: BetaInterval

    def to_dict(self) -> dict:
        return {"D1": self.D1.to_dict(), "D2": self.D2.to_dict()}


def _merge(pieces: list[BetaInterval]) -> BetaInterval:
    out = BetaInterval.empty_set()
    for piece in pieces:
        out = out.hull(piece)
    return out


def _dual_membership_set(A: float, B: float, C: float, height_slope: float,
                         height_offset: float) -> BetaInterval:
    # beta with A t^2 - 2 B t + C <= 0 and height_slope*t + height_offset >= 0;
    # the exact set is convex, so pieces that survive are merged.
    half = linear_set(height_slope, height_offset)
    pieces = [p.intersect(half) for p in quadratic_set(A, B, C, "le")]
    return _merge([p for p in pieces if not p.is_empty()])


def d_sets(d: Disjunction) -> DSets:
    """Intervals of beta with ``c2 - beta c1`` (resp. ``c1 - beta c2``) in the cone."""
    _require_second_order(d)
    a, b, c = d.lorentz_coefficients()
    c1n, c2n = float(d.c1[-1]), float(d.c2[-1])
    D1 = _dual_membership_set(a, b, c, -c1n, c2n)
    D2 = _dual_membership_set(c, b, a, -c2n, c1n)
    return DSets(D1, D2)


def _rhs_halfline(coef: float, target: float) -> BetaInterval:
    """beta with beta * coef >= target."""
    return linear_set(coef, -target)


def containment(d: Disjunction, ds: DSets | None = None) -> str:
    """``"C1subC2"``, ``"C2subC1"`` or ``"None"`` from the beta-consistency test."""
    ds = d_sets(d) if ds is None else ds
    nonneg = BetaInterval(0.0, math.inf, True, False)
    if not ds.D1.intersect(nonneg).intersect(_rhs_halfline(d.c1_0, d.c2_0)).is_empty():
        return "C1subC2"
    if not ds.D2.intersect(nonneg).intersect(_rhs_halfline(d.c2_0, d.c1_0)).is_empty():
        return "C2subC1"
    return "None"


def strict_feasibility(d: Disjunction, eps: float = DEFAULT_TOL) -> tuple[bool, bool]:
    """Whether each side meets the interior of the cone.

    A side with rhs -1 always does (the apex neighbourhood qualifies); otherwise
    it does exactly when its coefficient vector is not in -K.
    """
    out = []
    for k in (1, 2):
        c, _ = d.side(k)
        tag = d.cone.classify(c, eps) if d.cone.is_second_order else d.cone.dual().classify(c, eps)
        out.append(d.rhs(k) == -1 or not tag.in_neg_cone)
    return out[0], out[1]


def _witness(interval: BetaInterval) -> float:
    if interval.is_singleton():
        return interval.lo
    return interval.midpoint()


@dataclass
class ClassificationReport:
    """Preflight verdicts for a normalized second-order disjunction."""

    assumption1_holds: bool
    containment: str
    assumption2_holds: bool
    strict_feasible: tuple[bool, bool]
    hull_is_K: bool
    conv_closed: str
    single_inequality: bool
    case_tag: str
    d_sets: DSets
    closed_witness: tuple[float, float] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.assumption1_holds and self.assumption2_holds

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "assumption1_holds": self.assumption1_holds,
            "containment": self.containment,
            "assumption2_holds": self.assumption2_holds,
            "strict_feasible": list(self.strict_feasible),
            "hull_is_K": self.hull_is_K,
            "conv_closed": self.conv_closed,
            "single_inequality": self.single_inequality,
            "case_tag": self.case_tag,
            "d_sets": self.d_sets.to_dict(),
            "closed_witness": None if self.closed_witness is None else list(self.closed_witness),
            "notes": list(self.notes),
        }


def basic_report(d: Disjunction, eps: float = DEFAULT_TOL) -> ClassificationReport:
    """Everything in :func:`preflight` except the sampled non-closedness probe."""
    _require_second_order(d)
    ds = d_sets(d)
    cont = containment(d, ds)
    a1 = cont == "None"
    feas = strict_feasibility(d, eps)
    a2 = feas[0] and feas[1]
    in_k = classify_soc(d.c1, eps).in_cone or classify_soc(d.c2, eps).in_cone
    hull_is_K = bool(a1 and a2 and in_k and min(d.c1_0, d.c2_0) <= 0)
    e1, e2 = ds.D1.is_empty(), ds.D2.is_empty()
    case = CASE_TAGS[3 if e1 and e2 else 1 if e1 else 2 if e2 else 0]
    both_d = not e1 and not e2
    single = bool(a1 and a2 and (in_k or (d.c1_0 == d.c2_0 and d.c1_0 != 0 and both_d)))
    notes = []
    if hull_is_K and single:
        notes.append("closed convex hull equals the cone; no cut is needed")
        single = False
    closed, witness = "Unknown", None
    if both_d:
        b1, b2 = _witness(ds.D1), _witness(ds.D2)
        ok1 = classify_soc(d.c2 - b1 * d.c1, eps).in_cone
        ok2 = classify_soc(d.c1 - b2 * d.c2, eps).in_cone
        if ok1 and ok2:
            closed, witness = "Closed", (b1, b2)
    return ClassificationReport(a1, cont, a2, feas, hull_is_K, closed, single, case, ds,
                                witness, notes)


def probe_points(n: int, count: int = 2000, seed: int = 0) -> np.ndarray:
    """Deterministic cone samples (interior and boundary, scales 0.1 to 50)."""
    from .cone import sample_cone_points

    rng = np.random.default_rng(seed)
    spec = ConeSpec.second_order(n)
    half = count // 2
    return np.vstack([sample_cone_points(spec, "interior", half, rng, scale=(0.1, 50.0)),
                      sample_cone_points(spec, "boundary", count - half, rng, scale=(0.1, 50.0))])


def preflight(d: Disjunction, eps: float = DEFAULT_TOL, probe: int = 2000) -> ClassificationReport:
    """Assumption checks, closedness and single-inequality verdicts for ``d``.

    Non-closedness is reported only when the first inequality has the strictly
    larger right-hand side and the cut engine separates one of ``probe``
    deterministic cone samples.
    """
    report = basic_report(d, eps)
    if (report.passed and not report.hull_is_K and report.conv_closed != "Closed"
            and d.c1_0 > d.c2_0 and probe > 0):
        from .cuts import membership_batch

        pts = probe_points(d.n, probe)
        if not np.all(membership_batch(d, pts)):
            report.conv_closed = "NotClosed"
    return report
