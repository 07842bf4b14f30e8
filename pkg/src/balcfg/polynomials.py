"""Integer-coefficient univariate polynomials and certified real root
isolation.

Polynomials are tuples of arbitrary-precision ints, ascending degree, trailing
zeros trimmed; the zero polynomial is the empty tuple. Root isolation uses
Descartes counts on Moebius-transformed coefficients (bisection on dyadic
intervals), so every sign decision is exact integer arithmetic; isolating
intervals are refined by sign-change bisection to a requested width. Rational
roots hit by a bisection midpoint are recorded exactly and deflated out.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

IntPoly = Tuple[int, ...]

# Bisection beyond this depth means the input was not square-free (or the
# interval bookkeeping is broken); callers turn it into a domain error.
MAX_ISOLATION_DEPTH = 200


def trim(coeffs: Sequence[int]) -> IntPoly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Sequence[int]) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(trim(p)) - 1


def add(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    size = max(len(p), len(q))
    return trim(
        [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(size)]
    )


def neg(p: Sequence[int]) -> IntPoly:
    return tuple(-a for a in p)


def sub(p: Sequence[int], q: Sequence[int]) -> IntPoly:
    return add(p, neg(q))


def shift_up(p: Sequence[int]) -> IntPoly:
    """Multiply by t."""
    return trim((0,) + tuple(p))


def eval_at(p: Sequence[int], t):
    """Horner evaluation; exactness follows the type of t."""
    acc = 0 * t
    for a in reversed(p):
        acc = acc * t + a
    return acc


def is_even_poly(p: Sequence[int]) -> bool:
    return all(a == 0 for a in p[1::2])


def is_odd_poly(p: Sequence[int]) -> bool:
    return all(a == 0 for a in p[0::2])


def sign_at(p: Sequence[int], x: Fraction) -> int:
    """Exact sign of p at a rational point, via integer Horner on
    p(num/den) * den^deg."""
    if not p:
        return 0
    num, den = x.numerator, x.denominator
    acc = p[-1]
    power = 1
    for a in reversed(p[:-1]):
        power *= den
        acc = acc * num + a * power
    return (acc > 0) - (acc < 0)


def root_bound(p: Sequence[int]) -> int:
    """Power of two B with all real roots of p strictly inside (-B, B)."""
    p = trim(p)
    if len(p) <= 1:
        return 1
    lead = abs(p[-1])
    b = 1
    while sum(abs(a) * b**i for i, a in enumerate(p[:-1])) >= lead * b ** (len(p) - 1):
        b *= 2
    return b


def _taylor_shift(coeffs: List[Fraction], a: Fraction) -> List[Fraction]:
    # p(x) -> p(x + a), synthetic Horner scheme, on a copy
    c = list(coeffs)
    d = len(c) - 1
    for i in range(d):
        for j in range(d - 1, i - 1, -1):
            c[j] += a * c[j + 1]
    return c


def _variations(coeffs: Sequence[Fraction]) -> int:
    signs = [(x > 0) - (x < 0) for x in coeffs if x != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def descartes_count(p: Sequence[int], a: Fraction, b: Fraction) -> int:
    """Descartes bound on the number of roots of p in the open interval
    (a, b): zero means none, one means exactly one simple root."""
    q = _taylor_shift([Fraction(x) for x in p], a)
    w = b - a
    scale = Fraction(1)
    for i in range(len(q)):
        q[i] *= scale
        scale *= w
    r = _taylor_shift(list(reversed(q)), Fraction(1))
    return _variations(r)


def _deflate(p: Sequence[int], r: Fraction) -> IntPoly:
    # divide p by (x - r) exactly; returns an integer polynomial with the
    # same remaining roots (content rescaled)
    desc = list(reversed(trim(p)))
    out = [Fraction(desc[0])]
    for a in desc[1:-1]:
        out.append(Fraction(a) + r * out[-1])
    remainder = Fraction(desc[-1]) + r * out[-1]
    if remainder != 0:
        raise ArithmeticError("deflation at a non-root")
    scale = 1
    for f in out:
        scale = scale * f.denominator // gcd(scale, f.denominator)
    return trim([int(f * scale) for f in reversed(out)])


def refine_root(
    p: Sequence[int], lo: Fraction, hi: Fraction, width: Fraction
) -> Tuple[Fraction, Fraction]:
    """Shrink an isolating interval by sign-change bisection until
    hi - lo <= width (or an exact root is hit)."""
    if lo == hi:
        return lo, hi
    s_lo = sign_at(p, lo)
    s_hi = sign_at(p, hi)
    if s_lo == 0 or s_hi == 0 or s_lo == s_hi:
        raise ArithmeticError("interval endpoints must straddle the single root")
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = sign_at(p, mid)
        if s_mid == 0:
            return mid, mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def certified_roots(p: Sequence[int], width: Fraction) -> List[Tuple[Fraction, Fraction]]:
    """All real roots of p as certified dyadic intervals of width <= width,
    sorted ascending; exact rational roots come back zero-width.

    Expects a square-free input; non-termination within MAX_ISOLATION_DEPTH
    raises ArithmeticError for the caller to interpret.
    """
    p = trim(p)
    if len(p) <= 1:
        return []
    bound = root_bound(p)
    results: List[Tuple[Fraction, Fraction]] = []
    stack = [(p, Fraction(-bound), Fraction(bound), 0)]
    while stack:
        poly, lo, hi, depth = stack.pop()
        if depth > MAX_ISOLATION_DEPTH:
            raise ArithmeticError("root isolation did not terminate; input not square-free?")
        count = descartes_count(poly, lo, hi)
        if count == 0:
            continue
        if count == 1:
            results.append(refine_root(poly, lo, hi, width))
            continue
        mid = (lo + hi) / 2
        if sign_at(poly, mid) == 0:
            results.append((mid, mid))
            poly = _deflate(poly, mid)
            if len(poly) <= 1:
                continue
        stack.append((poly, lo, mid, depth + 1))
        stack.append((poly, mid, hi, depth + 1))
    results.sort(key=lambda iv: iv[0])
    return results
