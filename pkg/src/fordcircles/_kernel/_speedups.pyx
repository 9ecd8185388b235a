# cython: language_level=3
# cython: boundscheck=False
# cython: cdivision=True
"""Compiled kernels for the rational sweeps; twin of the pure module.

Same five functions and the same candidate-pruning argument as the pure
module, restated in C integers.  Inputs are guarded so every intermediate
fits in a signed 64-bit integer; arguments outside the guard raise
OverflowError and the caller falls back to the pure twin.
"""


cdef long long _llabs(long long v) noexcept nogil:
    return -v if v < 0 else v


cdef long long _gcd_ll(long long a, long long b) noexcept nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef long long _floordiv_ll(long long n, long long d) noexcept nogil:
    # C division truncates toward zero; adjust to floor for negative n (d > 0)
    cdef long long v = n / d
    if n % d != 0 and (n < 0) != (d < 0):
        v -= 1
    return v


cdef int _guard(long long a, long long b, long long p, long long q) except -1:
    # Worst intermediate is (d*p - c*q)^2 with d <= b and c within 1 of
    # d*p/q, so |d*p - c*q| <= b*|p| + |a|*q + 2*q; keep its square < 2^62.
    if b < 1 or q < 1:
        raise ValueError("denominators must be >= 1")
    if _llabs(a) >= (<long long>1) << 30 or b >= (<long long>1) << 30:
        raise OverflowError("kernel operand too large")
    if _llabs(p) >= (<long long>1) << 30 or q >= (<long long>1) << 30:
        raise OverflowError("kernel operand too large")
    if b * _llabs(p) + (_llabs(a) + 2) * q >= (<long long>1) << 30:
        raise OverflowError("kernel operand too large")
    return 0


cdef bint _best(long long a, long long b, long long p, long long q) noexcept nogil:
    cdef long long target = _llabs(b * p - a * q)
    cdef long long d, c, c0, t
    cdef int k
    for d in range(1, b + 1):
        c0 = _floordiv_ll(d * p, q)
        for k in range(2):
            c = c0 + k
            if c == a and d == b:
                continue
            if _gcd_ll(c, d) != 1:
                continue
            t = _llabs(d * p - c * q)
            if t <= target:
                return 0
    return 1


cdef bint _near(long long a, long long b, long long p, long long q) noexcept nogil:
    cdef long long rx = (b * p - a * q) * (b * p - a * q)
    cdef long long d, c, c0, t
    cdef int k
    for d in range(1, b + 1):
        c0 = _floordiv_ll(d * p, q)
        for k in range(2):
            c = c0 + k
            if c == a and d == b:
                continue
            if _gcd_ll(c, d) != 1:
                continue
            t = d * p - c * q
            if t * t <= rx:
                return 0
    return 1


cdef long long _inv_mod(long long a, long long m) noexcept nogil:
    # inverse of a modulo m for m > 1, gcd(a, m) == 1, via extended Euclid
    cdef long long r0 = a % m, r1 = m
    cdef long long s0 = 1, s1 = 0
    cdef long long qq, t
    if r0 < 0:
        r0 += m
    while r1:
        qq = r0 / r1
        t = r0 - qq * r1
        r0 = r1
        r1 = t
        t = s0 - qq * s1
        s0 = s1
        s1 = t
    s0 %= m
    if s0 < 0:
        s0 += m
    return s0


cdef bint _witness(long long a, long long b, long long p, long long q) noexcept nogil:
    cdef long long lhs = p * b - a * q
    cdef long long side, d
    if lhs == 0:
        return 1
    side = 1 if lhs > 0 else -1
    if b == 1:
        d = 2
    else:
        d = (-side * _inv_mod(a, b)) % b
        if d < 0:
            d += b
        d += b
    return _llabs(lhs) * d < q


def best_flag(long long a, long long b, long long p, long long q):
    """Statement (iii) for x = a/b against p/q, by scaled linear forms."""
    _guard(a, b, p, q)
    return bool(_best(a, b, p, q))


def near_flag(long long a, long long b, long long p, long long q):
    """Statement (iv) for x = a/b against p/q, by squared radius numerators."""
    _guard(a, b, p, q)
    return bool(_near(a, b, p, q))


def witness_flag(long long a, long long b, long long p, long long q):
    """Statement (v) presence for x = a/b against p/q."""
    _guard(a, b, p, q)
    return bool(_witness(a, b, p, q))


def pair_flags(long long a, long long b, long long p, long long q):
    """Bit 0: best approximation; bit 1: nearby; bit 2: tangent witness."""
    _guard(a, b, p, q)
    cdef int flags = 0
    with nogil:
        if _best(a, b, p, q):
            flags |= 1
        if _near(a, b, p, q):
            flags |= 2
        if _witness(a, b, p, q):
            flags |= 4
    return flags


def gap_class(long long a, long long b, long long c, long long d):
    """0 for tangent Ford circles, 1 for strictly apart; det^2 - 1 route."""
    if b < 1 or d < 1:
        raise ValueError("denominators must be >= 1")
    if _llabs(a) >= (<long long>1) << 15 or b >= (<long long>1) << 15:
        raise OverflowError("kernel operand too large")
    if _llabs(c) >= (<long long>1) << 15 or d >= (<long long>1) << 15:
        raise OverflowError("kernel operand too large")
    cdef long long det = a * d - b * c
    cdef long long g = det * det - 1
    if g == 0:
        return 0
    if g > 0:
        return 1
    raise ValueError("identical circles")
