"""Pure-Python kernels for the rational sweeps.

These are the hot per-pair predicates for x = a/b against a rational
alpha = p/q, written in plain integer arithmetic (everything is scaled by q,
or by 2*q*q for the radius route, so no fractions appear).  The compiled
extension implements the same five functions; this module is the fallback
twin and the reference the extension is tested against.

Candidate pruning (used by the best-approximation and nearby routes): for a
fixed denominator d, the form |d*alpha - c| and the tangent-horocircle radius
(d*alpha - c)^2 / (2*q*q) are both strictly increasing in the distance from c
to d*alpha, so only the two integers nearest d*alpha can violate either
predicate.  A violating fraction that is not reduced re-reduces to a smaller
denominator whose own nearest candidates violate as well, and a violator
farther than 1 from d*alpha forces the target form above 1, in which case the
nearest candidate at d = 1 already violates.  Hence scanning floor(d*alpha)
and floor(d*alpha) + 1 for every d up to b decides the predicates exactly.
"""

from __future__ import annotations

from math import gcd


def best_flag(a: int, b: int, p: int, q: int) -> bool:
    """Statement (iii): is a/b a best approximation of the second kind to p/q.

    Works with the scaled linear forms t(c, d) = |d*p - c*q|; the requirement
    is t(c, d) > t(a, b) for every reduced c/d != a/b with d <= b.
    """
    target = abs(b * p - a * q)
    for d in range(1, b + 1):
        c0 = d * p // q
        for c in (c0, c0 + 1):
            if c == a and d == b:
                continue
            if gcd(c, d) != 1:
                continue
            if abs(d * p - c * q) <= target:
                return False
    return True


def near_flag(a: int, b: int, p: int, q: int) -> bool:
    """Statement (iv): is the Ford circle at a/b nearby to p/q.

    Works with tangent-horocircle radii: the radius for base z = c/d is
    (d*p - c*q)^2 / (2*q*q), so after clearing the common factor the
    comparison is between squared integers.  Every circle with radius >= that
    of C_x (denominator d <= b) other than C_x itself must give a strictly
    larger radius.
    """
    rx = (b * p - a * q) ** 2
    for d in range(1, b + 1):
        c0 = d * p // q
        for c in (c0, c0 + 1):
            if c == a and d == b:
                continue
            if gcd(c, d) != 1:
                continue
            t = d * p - c * q
            if t * t <= rx:
                return False
    return True


def witness_flag(a: int, b: int, p: int, q: int) -> bool:
    """Statement (v): does a tangent circle at x = a/b witness p/q.

    The witness is the tangent neighbor y of x on alpha's side whose
    denominator is minimal among those exceeding b; it exists iff alpha lies
    strictly inside the open interval (x, y), i.e. |alpha - x| < 1/(b*den(y)).
    """
    lhs = p * b - a * q
    if lhs == 0:
        return True
    side = 1 if lhs > 0 else -1
    if b == 1:
        d = 2
    else:
        d = (-side * pow(a, -1, b)) % b + b
    return abs(lhs) * d < q


def pair_flags(a: int, b: int, p: int, q: int) -> int:
    """Bit 0: best approximation; bit 1: nearby; bit 2: tangent witness."""
    return (
        (1 if best_flag(a, b, p, q) else 0)
        | (2 if near_flag(a, b, p, q) else 0)
        | (4 if witness_flag(a, b, p, q) else 0)
    )


def gap_class(a: int, b: int, c: int, d: int) -> int:
    """0 when the Ford circles at a/b and c/d are tangent, 1 when apart.

    The gap |x - y|^2 - 4*r_x*r_y scaled by (b*d)^2 is det^2 - 1 with
    det = a*d - b*c, so tangency is det^2 == 1 and overlap (negative gap) is
    impossible for distinct reduced base points.
    """
    det = a * d - b * c
    g = det * det - 1
    if g == 0:
        return 0
    if g > 0:
        return 1
    raise ValueError("identical circles")
