"""Extended-real intervals of the multiplier beta and quadratic solution sets."""

from __future__ import annotations

import math
from dataclasses import dataclass

INF = math.inf


@dataclass(frozen=True)
class BetaInterval:
    """A (possibly unbounded, possibly empty) interval of reals.

    Infinite endpoints are always open.  The empty interval is a distinct
    state built with :meth:`empty_set`; its ``lo``/``hi`` are meaningless.
    """

    lo: float = -INF
    hi: float = INF
    lo_closed: bool = False
    hi_closed: bool = False
    empty: bool = False

    def __post_init__(self):
        if self.empty:
            return
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise ValueError("interval endpoints must not be NaN")
        if math.isinf(self.lo):
            object.__setattr__(self, "lo_closed", False)
        if math.isinf(self.hi):
            object.__setattr__(self, "hi_closed", False)
        if self.lo > self.hi or (self.lo == self.hi and not (self.lo_closed and self.hi_closed)):
            object.__setattr__(self, "empty", True)

    @classmethod
    def empty_set(cls) -> "BetaInterval":
        return cls(0.0, 0.0, False, False, True)

    @classmethod
    def closed(cls, lo: float, hi: float) -> "BetaInterval":
        return cls(lo, hi, True, True)

    @classmethod
    def point(cls, value: float) -> "BetaInterval":
        return cls(value, value, True, True)

    @classmethod
    def real_line(cls) -> "BetaInterval":
        return cls(-INF, INF)

    def is_empty(self) -> bool:
        return self.empty

    def is_singleton(self) -> bool:
        return not self.empty and self.lo == self.hi

    def bounded(self) -> bool:
        return not self.empty and math.isfinite(self.lo) and math.isfinite(self.hi)

    def contains(self, beta: float, tol: float = 0.0) -> bool:
        if self.empty:
            return False
        # a positive tol makes both ends inclusive and widens them
        if tol > 0.0:
            return self.lo - tol <= beta <= self.hi + tol
        above = beta >= self.lo if self.lo_closed else beta > self.lo
        below = beta <= self.hi if self.hi_closed else beta < self.hi
        return above and below

    def intersect(self, other: "BetaInterval") -> "BetaInterval":
        if self.empty or other.empty:
            return BetaInterval.empty_set()
        if self.lo > other.lo:
            lo, lo_closed = self.lo, self.lo_closed
        elif other.lo > self.lo:
            lo, lo_closed = other.lo, other.lo_closed
        else:
            lo, lo_closed = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hi_closed = self.hi, self.hi_closed
        elif other.hi < self.hi:
            hi, hi_closed = other.hi, other.hi_closed
        else:
            hi, hi_closed = self.hi, self.hi_closed and other.hi_closed
        return BetaInterval(lo, hi, lo_closed, hi_closed)

    def hull(self, other: "BetaInterval") -> "BetaInterval":
        """Smallest interval containing both."""
        if self.empty:
            return other
        if other.empty:
            return self
        if self.lo < other.lo or (self.lo == other.lo and self.lo_closed):
            lo, lo_closed = self.lo, self.lo_closed
        else:
            lo, lo_closed = other.lo, other.lo_closed
        if self.hi > other.hi or (self.hi == other.hi and self.hi_closed):
            hi, hi_closed = self.hi, self.hi_closed
        else:
            hi, hi_closed = other.hi, other.hi_closed
        return BetaInterval(lo, hi, lo_closed, hi_closed)

    def clip(self, beta: float) -> float:
        """Nearest point of the closure to ``beta``."""
        if self.empty:
            raise ValueError("cannot clip into an empty interval")
        return min(max(beta, self.lo), self.hi)

    def midpoint(self) -> float:
        """Some interior-ish point, finite even for unbounded intervals."""
        if self.empty:
            raise ValueError("empty interval has no midpoint")
        if self.bounded():
            return 0.5 * (self.lo + self.hi)
        if math.isfinite(self.lo):
            return self.lo + 1.0
        if math.isfinite(self.hi):
            return self.hi - 1.0
        return 0.0

    def to_dict(self) -> dict:
        if self.empty:
            return {"empty": True}
        return {"empty": False, "lo": self.lo, "hi": self.hi,
                "lo_closed": self.lo_closed, "hi_closed": self.hi_closed}

    def __str__(self) -> str:
        if self.empty:
            return "Empty"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo:g}, {self.hi:g}{right}"


def ray_at_least(value: float, closed: bool = True) -> BetaInterval:
    return BetaInterval(value, INF, closed, False)


def ray_at_most(value: float, closed: bool = True) -> BetaInterval:
    return BetaInterval(-INF, value, False, closed)


def linear_set(slope: float, offset: float, tol: float = 1e-12) -> BetaInterval:
    """Solution interval of ``slope * beta + offset >= 0``."""
    scale = max(abs(slope), abs(offset), 1.0)
    if abs(slope) <= tol * scale:
        return BetaInterval.real_line() if offset >= -tol * scale else BetaInterval.empty_set()
    root = -offset / slope + 0.0
    return ray_at_least(root) if slope > 0 else ray_at_most(root)


def quadratic_roots(a: float, b: float, c: float, tol: float = 1e-12) -> tuple[float, ...]:
    """Real roots of ``a t^2 - 2 b t + c``, sorted, with a double root reported once.

    The reduced discriminant ``b^2 - a c`` is treated as zero when it is above
    ``-tol * (b^2 + |a c|)``; roots use the cancellation-free form.
    """
    scale = max(abs(a), abs(b), abs(c))
    if scale == 0.0:
        return ()
    if abs(a) <= tol * scale:
        if abs(b) <= tol * scale:
            return ()
        return (c / (2.0 * b) + 0.0,)
    disc = b * b - a * c
    if disc < -tol * (b * b + abs(a * c)):
        return ()
    if disc <= tol * (b * b + abs(a * c)):
        return (b / a + 0.0,)
    q = b + math.copysign(math.sqrt(disc), b)
    r1 = q / a
    r2 = c / q if q != 0.0 else -r1
    return tuple(sorted((r1 + 0.0, r2 + 0.0)))


def quadratic_set(a: float, b: float, c: float, sense: str, tol: float = 1e-12) -> list[BetaInterval]:
    """Closed solution set of ``a t^2 - 2 b t + c <= 0`` (``sense='le'``) or ``>= 0``.

    Returns at most two disjoint closed intervals in increasing order.
    """
    if sense not in ("le", "ge"):
        raise ValueError("sense must be 'le' or 'ge'")
    sign = 1.0 if sense == "ge" else -1.0
    scale = max(abs(a), abs(b), abs(c))
    if scale == 0.0:
        return [BetaInterval.real_line()]
    # g(t) = sign * (a t^2 - 2 b t + c) >= 0
    ga = sign * a
    if abs(a) <= tol * scale:
        line = linear_set(-2.0 * sign * b, sign * c, tol)
        return [] if line.is_empty() else [line]
    roots = quadratic_roots(a, b, c, tol)
    if not roots:
        return [BetaInterval.real_line()] if ga > 0 else []
    if len(roots) == 1:
        r = roots[0]
        return [BetaInterval.real_line()] if ga > 0 else [BetaInterval.point(r)]
    r1, r2 = roots
    if ga > 0:
        return [ray_at_most(r1), ray_at_least(r2)]
    return [BetaInterval.closed(r1, r2)]
