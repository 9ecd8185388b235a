"""Best-approximation oracle, nearby predicate, witness search, and the
five-way equivalence checker with sweep reports.

The five statements about a reduced fraction x and a real alpha:

  (i)   x is a convergent of alpha;
  (ii)  the Ford circle at x belongs to the continued fraction chain of alpha;
  (iii) x is a best approximation of the second kind to alpha;
  (iv)  the Ford circle at x is nearby to alpha;
  (v)   some Ford circle tangent to the one at x, with strictly smaller
        radius, has alpha inside the open interval between the base points.

For non-integer x the five are equivalent; integer x satisfies (i) without
(iii) whenever alpha lands in the upper half of the unit interval around it,
so reports flag integers and skip the equivalence claim for them.

Statements (iii) and (iv) are computed along genuinely different routes
(linear forms versus horocircle radii), which makes their pointwise agreement
a meaningful cross-check rather than a tautology.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Iterator

from . import _kernel
from .cf import Convergent, cf_of_rational, cf_of_real, convergents
from .geometry import FordCircle, compare_radii, ford_circle, tangent_horocircle_radius
from .rational import reduced_fractions_in
from .real import (
    EQ,
    GT,
    LT,
    CFStream,
    ExactReal,
    RationalLike,
    RealNumber,
    as_real,
    compare_linear_forms,
    compare_real,
    floor_scaled,
)


@dataclass(frozen=True)
class ChainEntry:
    index: int
    convergent: Convergent
    circle: FordCircle


@dataclass(frozen=True)
class TheoremUReport:
    x: Fraction
    alpha: str
    is_integer: bool
    stmt_i: bool
    stmt_ii: bool
    stmt_iii: bool
    stmt_iv: bool
    stmt_v: bool
    witness: Fraction | None
    consistent: bool

    def to_json_dict(self) -> dict:
        """Report with the frozen field names of the machine interface."""
        return {
            "x": f"{self.x.numerator}/{self.x.denominator}",
            "alpha": self.alpha,
            "isInteger": self.is_integer,
            "stmt_i": self.stmt_i,
            "stmt_ii": self.stmt_ii,
            "stmt_iii": self.stmt_iii,
            "stmt_iv": self.stmt_iv,
            "stmt_v": self.stmt_v,
            "witness": None if self.witness is None else
            f"{self.witness.numerator}/{self.witness.denominator}",
            "consistent": self.consistent,
        }


def _chain_iter(alpha: RealNumber | RationalLike) -> Iterator[ChainEntry]:
    alpha = as_real(alpha)
    if isinstance(alpha, ExactReal):
        cf = cf_of_rational(alpha.value)
        for conv in convergents(cf, cf.length):
            yield ChainEntry(conv.index, conv, ford_circle(conv.value))
        return
    assert isinstance(alpha, CFStream)
    num_prev, den_prev = 1, 0
    num = den = 0
    for n, b in enumerate(alpha.coefficients()):
        if n == 0:
            num, den = b, 1
        else:
            num, num_prev = b * num + num_prev, num
            den, den_prev = b * den + den_prev, den
        conv = Convergent(n, num, den)
        yield ChainEntry(n, conv, ford_circle(conv.value))


def cf_chain(alpha: RealNumber | RationalLike, count: int) -> list[ChainEntry]:
    """The first count circles of the continued fraction chain of alpha.

    Consecutive circles are tangent because consecutive convergents are
    unimodular; radii never increase and decrease strictly from index 1 on.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    out: list[ChainEntry] = []
    for entry in _chain_iter(alpha):
        out.append(entry)
        if len(out) == count:
            return out
    raise ValueError("expansion exhausted")


def _is_convergent(x: Fraction, alpha: RealNumber) -> bool:
    a, b = x.numerator, x.denominator
    if isinstance(alpha, ExactReal):
        cf = cf_of_rational(alpha.value)
        return any(c.num == a and c.den == b for c in convergents(cf, cf.length))
    assert isinstance(alpha, CFStream)
    for num, den in alpha.convergent_pairs():
        if den > b:
            return False
        if num == a and den == b:
            return True
    raise AssertionError("unreachable: convergent denominators grow without bound")


def _is_chain_member(x: Fraction, alpha: RealNumber) -> bool:
    target = ford_circle(x)
    for entry in _chain_iter(alpha):
        if entry.circle == target:
            return True
        # radii decrease (strictly from index 1), so once below rad(C_x) stop
        if entry.index >= 1 and entry.circle.radius < target.radius:
            return False
    return False


def _pruned_candidates(alpha: RealNumber, d: int) -> tuple[int, int]:
    m = floor_scaled(alpha, d)
    return (m, m + 1)


def _exhaustive_candidates(alpha: RealNumber, d: int, span: Fraction) -> range:
    """Every c with |d*alpha - c| within span, for the pruning self-check."""
    if not isinstance(alpha, ExactReal):
        raise ValueError("exhaustive candidate mode requires a rational alpha")
    t = d * alpha.value
    return range(ceil(t - span) - 1, floor(t + span) + 2)


def is_best_approx_2nd(x: RationalLike, alpha: RealNumber | RationalLike,
                       *, exhaustive: bool = False) -> bool:
    """Whether x = a/b is a best approximation of the second kind to alpha.

    Requires |b*alpha - a| < |d*alpha - c| for every reduced c/d != a/b with
    d <= b; any tie is a violation.  The linear-form route: comparisons go
    through the forms themselves, never through radii.  With exhaustive=True
    (rational alpha only) the per-denominator candidate pruning is replaced
    by a full scan, as a self-check of the pruning.
    """
    x = Fraction(x)
    a, b = x.numerator, x.denominator
    alpha = as_real(alpha)
    if exhaustive and not isinstance(alpha, ExactReal):
        raise ValueError("exhaustive candidate mode requires a rational alpha")
    if isinstance(alpha, ExactReal) and not exhaustive:
        p, q = alpha.value.numerator, alpha.value.denominator
        kern = _kernel.active
        try:
            return kern.best_flag(a, b, p, q)
        except OverflowError:
            return _kernel.get_backend("pure").best_flag(a, b, p, q)
    for d in range(1, b + 1):
        if exhaustive:
            assert isinstance(alpha, ExactReal)
            span = abs(b * alpha.value - a) + 1
            candidates: tuple[int, ...] | range = _exhaustive_candidates(alpha, d, span)
        else:
            candidates = _pruned_candidates(alpha, d)
        for c in candidates:
            if (c == a and d == b) or gcd(c, d) != 1:
                continue
            if compare_linear_forms(d, c, b, a, alpha) != GT:
                return False
    return True


def is_nearby(x: RationalLike, alpha: RealNumber | RationalLike,
              *, exhaustive: bool = False) -> bool:
    """Whether the Ford circle at x = a/b is nearby to alpha.

    Requires every other Ford circle with radius >= rad(C_x), equivalently
    with denominator d <= b, to carry a strictly larger tangent-horocircle
    radius at base point alpha.  The radii route: comparisons go through
    horocircle radii (squared forms), independently of the linear-form route
    above.  Candidates per denominator are pruned to the integers nearest
    d*alpha; circles farther out have strictly larger radii (the pruning is
    validated by the exhaustive mode, rational alpha only).
    """
    x = Fraction(x)
    a, b = x.numerator, x.denominator
    alpha = as_real(alpha)
    if exhaustive and not isinstance(alpha, ExactReal):
        raise ValueError("exhaustive candidate mode requires a rational alpha")
    if isinstance(alpha, ExactReal) and not exhaustive:
        p, q = alpha.value.numerator, alpha.value.denominator
        kern = _kernel.active
        try:
            return kern.near_flag(a, b, p, q)
        except OverflowError:
            return _kernel.get_backend("pure").near_flag(a, b, p, q)
    rx = tangent_horocircle_radius(alpha, x)
    for d in range(1, b + 1):
        if exhaustive:
            assert isinstance(alpha, ExactReal)
            span = abs(b * alpha.value - a) + 1
            candidates: tuple[int, ...] | range = _exhaustive_candidates(alpha, d, span)
        else:
            candidates = _pruned_candidates(alpha, d)
        for c in candidates:
            if (c == a and d == b) or gcd(c, d) != 1:
                continue
            rz = tangent_horocircle_radius(alpha, Fraction(c, d))
            if compare_radii(rz, rx) != GT:
                return False
    return True


def _min_den_tangent_neighbor(x: Fraction, side: int) -> Fraction:
    """The tangent neighbor of x = a/b on the given side (+1 right, -1 left)
    with the smallest denominator exceeding b.

    Neighbors on one side are (c0 + k*a)/(d0 + k*b) with c*b - d*a = side;
    denominators on that side form one residue class mod b, so the minimal
    one above b lies in (b, 2b].  For b = 1 every denominator works and the
    minimal one above 1 is 2.
    """
    a, b = x.numerator, x.denominator
    if b == 1:
        d = 2
    else:
        d = (-side * pow(a, -1, b)) % b + b
    c = (side + d * a) // b
    return Fraction(c, d)


def statement_v_witness(x: RationalLike, alpha: RealNumber | RationalLike) -> Fraction | None:
    """The deterministic statement-(v) witness, or None when none exists.

    For alpha == x any tangent neighbor with larger denominator qualifies;
    the minimal-denominator one on the right is returned.  Otherwise the
    minimal-denominator tangent neighbor y on alpha's side is the farthest
    tangent point of its family from x, so a witness exists iff alpha lies
    strictly inside (x, y), and then y itself is returned.
    """
    x = Fraction(x)
    alpha = as_real(alpha)
    cmp = compare_real(alpha, x)
    if cmp == EQ:
        return _min_den_tangent_neighbor(x, +1)
    side = 1 if cmp == GT else -1
    y = _min_den_tangent_neighbor(x, side)
    lo, hi = (x, y) if side > 0 else (y, x)
    if compare_real(alpha, lo) == GT and compare_real(alpha, hi) == LT:
        return y
    return None


def theorem_u_check(x: RationalLike, alpha: RealNumber | RationalLike) -> TheoremUReport:
    """Evaluate all five statements independently and report consistency.

    For non-integer x, consistent means all five agree; integer x is flagged
    and only the definitional identity between (i) and (ii) is asserted.
    """
    x = Fraction(x)
    alpha = as_real(alpha)
    stmt_i = _is_convergent(x, alpha)
    stmt_ii = _is_chain_member(x, alpha)
    stmt_iii = is_best_approx_2nd(x, alpha)
    stmt_iv = is_nearby(x, alpha)
    witness = statement_v_witness(x, alpha)
    stmt_v = witness is not None
    integer = x.denominator == 1
    consistent = (stmt_i == stmt_ii) and (
        integer or stmt_i == stmt_iii == stmt_iv == stmt_v
    )
    return TheoremUReport(
        x=x,
        alpha=alpha.describe(),
        is_integer=integer,
        stmt_i=stmt_i,
        stmt_ii=stmt_ii,
        stmt_iii=stmt_iii,
        stmt_iv=stmt_iv,
        stmt_v=stmt_v,
        witness=witness,
        consistent=consistent,
    )


def penultimate_pair(alpha: RationalLike) -> tuple[Convergent, Convergent, int, int]:
    """The last two convergents of a rational plus the difference pair.

    For alpha with convergents A_0/B_0 ... A_N/B_N (N >= 1), returns
    (A_{N-1}/B_{N-1}, A_N/B_N, u, v) with u = A_N - A_{N-1} and
    v = B_N - B_{N-1}.  The fraction u/v is reduced, alpha lies strictly
    between A_{N-1}/B_{N-1} and u/v, and v < B_N; for N >= 2 moreover
    B_{N-1} < v.
    """
    cf = cf_of_rational(alpha)
    if cf.length < 2:
        raise ValueError("expansion has no penultimate convergent")
    convs = convergents(cf, cf.length)
    prev, last = convs[-2], convs[-1]
    return prev, last, last.num - prev.num, last.den - prev.den


def verify_sweep(den_max_x: int, den_max_alpha: int,
                 window: tuple[RationalLike, RationalLike],
                 *, backend: str | None = None) -> dict:
    """Check the five-way equivalence over a rational grid and report.

    Runs the equivalence over every non-integer reduced x with denominator
    <= den_max_x strictly inside (lo - 1, hi + 1) against every reduced alpha
    with denominator <= den_max_alpha in [lo, hi).  Statement flags come from
    the kernel backend; statements (i) and (ii) come from the cf engine and
    the chain, precomputed per alpha.  Cost grows roughly like
    den_max_x^2 * den_max_alpha^2 * |window|.
    """
    lo, hi = Fraction(window[0]), Fraction(window[1])
    if lo >= hi:
        raise ValueError("window must satisfy lo < hi")
    if den_max_x < 1 or den_max_alpha < 1:
        raise ValueError("denominator caps must be >= 1")
    kern = _kernel.get_backend(backend)
    started = time.perf_counter()

    xs = [
        (x.numerator, x.denominator)
        for x in reduced_fractions_in(lo - 1, hi + 1, den_max_x,
                                      include_lo=False, include_hi=False)
        if x.denominator > 1
    ]
    alphas = list(reduced_fractions_in(lo, hi, den_max_alpha, include_hi=False))

    # the compiled kernel is 64-bit; route oversized sweeps to the pure twin
    if alphas and xs:
        worst_p = max(abs(al.numerator) for al in alphas)
        worst_a = max(abs(a) for a, _ in xs)
        if den_max_x * worst_p + (worst_a + 2) * den_max_alpha >= 1 << 30:
            kern = _kernel.get_backend("pure")

    pair_flags = kern.pair_flags
    inconsistencies: list[dict] = []
    total = 0
    for alpha in alphas:
        p, q = alpha.numerator, alpha.denominator
        cf = cf_of_rational(alpha)
        conv_set = {(c.num, c.den) for c in convergents(cf, cf.length)}
        chain_set = {
            (e.circle.base.numerator, e.circle.base.denominator)
            for e in cf_chain(alpha, cf.length)
        }
        for a, b in xs:
            flags = pair_flags(a, b, p, q)
            stmt_i = (a, b) in conv_set
            stmt_ii = (a, b) in chain_set
            total += 1
            if not (stmt_i == stmt_ii == bool(flags & 1) == bool(flags & 2)
                    == bool(flags & 4)):
                inconsistencies.append({
                    "x": f"{a}/{b}",
                    "alpha": f"{p}/{q}",
                    "stmt_i": stmt_i,
                    "stmt_ii": stmt_ii,
                    "stmt_iii": bool(flags & 1),
                    "stmt_iv": bool(flags & 2),
                    "stmt_v": bool(flags & 4),
                })

    return {
        "params": {
            "maxDenX": den_max_x,
            "maxDenAlpha": den_max_alpha,
            "window": f"{lo}..{hi}",
        },
        "totalChecked": total,
        "inconsistencies": inconsistencies,
        "elapsed": time.perf_counter() - started,
    }
