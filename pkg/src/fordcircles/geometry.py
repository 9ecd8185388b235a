"""Ford circles, horocircles, tangency and the radius comparison lemmas.

All geometry here is exact.  Radii of circles based at rational points are
``Fraction`` values; radii of horocircles based at a coefficient stream are
``QuadraticRadius`` objects, quadratics in the stream value that are compared
lazily through sign refinement rather than ever being evaluated numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .real import (
    EQ,
    GT,
    LT,
    ExactReal,
    RationalLike,
    RealNumber,
    as_real,
    compare_real,
    sign_of_quadratic,
)


@dataclass(frozen=True)
class FordCircle:
    """The circle tangent to the real axis at `base` with radius 1/(2*den^2)."""

    base: Fraction
    radius: Fraction

    def __post_init__(self):
        b = self.base.denominator
        if self.radius != Fraction(1, 2 * b * b):
            raise ValueError("ford circle radius must be 1/(2*den^2) of its base point")

    @property
    def center(self) -> tuple[Fraction, Fraction]:
        return (self.base, self.radius)


def ford_circle(x: RationalLike) -> FordCircle:
    x = Fraction(x)
    b = x.denominator
    return FordCircle(x, Fraction(1, 2 * b * b))


@dataclass(frozen=True)
class QuadraticRadius:
    """Lazily compared value q2*t^2 + q1*t + q0 at the stream value t.

    Instances are only comparable with rationals or with other radii built on
    the same stream object; the comparison reduces to the exact sign of a
    rational quadratic at the stream value.
    """

    alpha: RealNumber
    q2: Fraction
    q1: Fraction
    q0: Fraction

    def _coeffs_against(self, other: "QuadraticRadius | RationalLike") -> tuple[Fraction, Fraction, Fraction]:
        if isinstance(other, QuadraticRadius):
            if other.alpha is not self.alpha:
                raise ValueError("radii built on different stream objects are not comparable")
            return (self.q2 - other.q2, self.q1 - other.q1, self.q0 - other.q0)
        return (self.q2, self.q1, self.q0 - Fraction(other))

    def compare(self, other: "QuadraticRadius | RationalLike") -> int:
        q2, q1, q0 = self._coeffs_against(other)
        return sign_of_quadratic(q2, q1, q0, self.alpha)

    def is_zero(self) -> bool:
        # A nonzero quadratic never vanishes at the stream value (that would
        # need the stream to encode its root), so zero means zero coefficients.
        return self.q2 == self.q1 == self.q0 == 0

    def __lt__(self, other) -> bool:
        return self.compare(other) == LT

    def __gt__(self, other) -> bool:
        return self.compare(other) == GT

    def __eq__(self, other) -> bool:
        if isinstance(other, (QuadraticRadius, int, Fraction)):
            return self.compare(other) == EQ
        return NotImplemented

    def __hash__(self):
        return hash((id(self.alpha), self.q2, self.q1, self.q0))


Radius = Union[Fraction, QuadraticRadius]


def compare_radii(r: Radius, s: Radius) -> int:
    """Exact three-way comparison of two radii: LT, EQ or GT."""
    if isinstance(r, QuadraticRadius):
        return r.compare(s)
    if isinstance(s, QuadraticRadius):
        return -s.compare(r)
    return GT if r > s else LT if r < s else EQ


@dataclass(frozen=True)
class Horocircle:
    """A circle tangent to the real axis at `base`, or a point when radius 0."""

    base: RealNumber
    radius: Radius

    def __post_init__(self):
        if isinstance(self.radius, Fraction) and self.radius < 0:
            raise ValueError("horocircle radius must be >= 0")


class GapRelation(Enum):
    TANGENT_EQUALITY = "tangent"
    STRICTLY_APART = "apart"


def are_tangent(x: RationalLike, y: RationalLike) -> bool:
    """Whether the Ford circles at x = a/b and y = c/d touch: |a*d - b*c| == 1."""
    x, y = Fraction(x), Fraction(y)
    if x == y:
        raise ValueError("identical circles")
    a, b = x.numerator, x.denominator
    c, d = y.numerator, y.denominator
    return abs(a * d - b * c) == 1


def gap_relation(x: RationalLike, y: RationalLike) -> GapRelation:
    """Classify the gap |x - y|^2 - 4*r_x*r_y between two Ford circles.

    The gap is zero exactly at tangency and positive otherwise; a negative
    value would mean overlapping interiors, impossible for Ford circles at
    distinct reduced points, so that branch raises.
    """
    cx, cy = ford_circle(x), ford_circle(y)
    if cx.base == cy.base:
        raise ValueError("identical circles")
    gap = (cx.base - cy.base) ** 2 - 4 * cx.radius * cy.radius
    if gap == 0:
        return GapRelation.TANGENT_EQUALITY
    if gap > 0:
        return GapRelation.STRICTLY_APART
    raise RuntimeError("ford circles with overlapping interiors: invariant broken")


def tangent_horocircle_radius(alpha: RealNumber | RationalLike, x: RationalLike) -> Radius:
    """Radius of the horocircle based at alpha tangent to the Ford circle at x.

    For x = a/b the radius is (b*alpha - a)^2 / 2; it degenerates to 0 (a
    point circle) exactly when alpha == x.
    """
    x = Fraction(x)
    a, b = x.numerator, x.denominator
    alpha = as_real(alpha)
    if isinstance(alpha, ExactReal):
        t = alpha.value
        return (b * t - a) ** 2 / 2
    return QuadraticRadius(alpha, Fraction(b * b, 2), Fraction(-a * b), Fraction(a * a, 2))


def tangent_horocircle(alpha: RealNumber | RationalLike, x: RationalLike) -> Horocircle:
    alpha = as_real(alpha)
    return Horocircle(alpha, tangent_horocircle_radius(alpha, x))


def generic_tangent_radius(base: RealNumber | RationalLike, radius: Fraction,
                           z: RealNumber | RationalLike) -> Radius:
    """Radius of the circle based at z tangent to the circle (base, radius).

    For a circle of radius r based at x, the tangent circle based at z has
    radius |x - z|^2 / (4*r); coincident base points give the point circle of
    radius 0.  At most one of base and z may be a stream.
    """
    radius = Fraction(radius)
    if radius <= 0:
        raise ValueError("radius must be > 0")
    base, z = as_real(base), as_real(z)
    if isinstance(base, ExactReal) and isinstance(z, ExactReal):
        return (base.value - z.value) ** 2 / (4 * radius)
    if isinstance(base, ExactReal):
        stream, point = z, base.value
    elif isinstance(z, ExactReal):
        stream, point = base, z.value
    else:
        raise ValueError("at most one of base and z may be a coefficient stream")
    # (t - point)^2 / (4r), a quadratic in the stream value t
    s = 4 * radius
    return QuadraticRadius(stream, Fraction(1, 1) / s, -2 * point / s, point * point / s)


def lemma_x_check(x: RationalLike, y: RationalLike, z: RationalLike) -> bool:
    """Whether the circle at z, strictly between tangent circles at x and y,
    is smaller than both.

    Preconditions (violations raise): the circles at x and y are tangent and
    z lies strictly between x and y.  The check computes the three radii and
    compares them exactly.
    """
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    if x == y or not are_tangent(x, y):
        raise ValueError("not a between-tangent configuration")
    if not (min(x, y) < z < max(x, y)):
        raise ValueError("not a between-tangent configuration")
    rz = ford_circle(z).radius
    return rz < ford_circle(x).radius and rz < ford_circle(y).radius


def lemma_q_check(x: RationalLike, y: RationalLike,
                  alpha: RealNumber | RationalLike, z: RationalLike) -> bool:
    """Compare horocircle radii at alpha for a tangent pair and an outsider.

    Configuration (violations raise "configuration mismatch"): the circles at
    x and y are tangent with the one at x strictly larger, alpha lies
    strictly between x and y, and z is a rational strictly outside the closed
    interval [min(x, y), max(x, y)].  Returns whether the horocircle at alpha
    tangent to the circle at x is strictly smaller than the one tangent to
    the circle at z.
    """
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    if x == y or not are_tangent(x, y):
        raise ValueError("configuration mismatch")
    if not ford_circle(x).radius > ford_circle(y).radius:
        raise ValueError("configuration mismatch")
    lo, hi = min(x, y), max(x, y)
    alpha = as_real(alpha)
    if not (compare_real(alpha, lo) == GT and compare_real(alpha, hi) == LT):
        raise ValueError("configuration mismatch")
    if lo <= z <= hi:
        raise ValueError("configuration mismatch")
    rx = tangent_horocircle_radius(alpha, x)
    rz = tangent_horocircle_radius(alpha, z)
    return compare_radii(rx, rz) == LT
