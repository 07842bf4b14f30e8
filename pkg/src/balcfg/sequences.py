"""The parameterized vector sequences u_i(t), w_i(t), their exact polynomial
forms, the closure equation w_n(t) = (1, 0), and the grid of parameters at
which a configuration of size m = 2n+1 can close.

The recurrence is

    u_0 = (1, 0),  w_0 = (t, -1),
    u_{i+1} = t * w_i - u_i,
    w_{i+1} = t * u_{i+1} - w_i,

the sign and index placement being forced by the seed-triple linear solve
(expand v_i over the basis {v_{n+i}, v_{i-1}}; the divisor is -A_n and the
step ratio A_1/A_n equals -t in the frame where v_0 = (1,0), v_n = (0,1),
v_{n+1} = (t,-1)). Coordinates of u_i and w_i are integer polynomials in t
with strict parity and degree structure: x(u_i) even of degree 2i, y(u_i) odd
of degree 2i-1, x(w_i) odd of degree 2i+1, y(w_i) even of degree 2i.

The closure parameters are t_k = 2cos(2k*pi/m) for k = 1..n: writing the
primitive m-th root w = e^{2*pi*i/m}, one has w^{-k} = 2cos(2k*pi/m) - w^k,
so the frame sending (1, w^k) to ((1,0), (0,1)) sends w^{-k} exactly to
(2cos(2k*pi/m), -1) = w_0(t_k). The polynomial solver below re-derives the
same values independently from w_n(t) = (1, 0) by certified bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import polynomials as ip
from .errors import ClosureViolation, RootCountMismatch
from .geometry import Configuration, PlaneVector, Scalar

# Certified isolating width for polynomial roots.
ROOT_WIDTH = Fraction(1, 10**12)
# |x(w_n)(root) - 1| threshold that keeps a root of y(w_n) in the grid.
X_FILTER_TOL = Fraction(1, 10**9)
# Allowed |w_n(t_k) - U| and |u_n(t_k) - V| in the model configuration.
CLOSURE_TOL = 1e-10


@dataclass(frozen=True)
class PolyPair:
    """A vector-valued polynomial function of t: (x(t), y(t)), both integer
    polynomials ascending by degree."""

    x: ip.IntPoly
    y: ip.IntPoly

    def eval(self, t: Scalar) -> PlaneVector:
        return PlaneVector(ip.eval_at(self.x, t), ip.eval_at(self.y, t))


@dataclass(frozen=True)
class RootGrid:
    """Sorted closure parameters for odd m: exactly n = (m-1)/2 distinct
    values, all inside (-2, 2)."""

    m: int
    values: Tuple[float, ...]

    def __post_init__(self):
        n = (self.m - 1) // 2
        if self.m % 2 == 0 or self.m < 3:
            raise ValueError(f"grid needs odd m >= 3, got {self.m}")
        if len(self.values) != n:
            raise RootCountMismatch(
                f"grid for m = {self.m} needs {n} values, got {len(self.values)}"
            )
        if list(self.values) != sorted(self.values):
            raise ValueError("grid values must be sorted ascending")
        for v in self.values:
            if not -2.0 < v < 2.0:
                raise ValueError(f"grid value {v} outside (-2, 2)")
        for a, b in zip(self.values, self.values[1:]):
            if not b > a:
                raise ValueError("grid values must be distinct")

    @property
    def n(self) -> int:
        return (self.m - 1) // 2


def numeric_sequences(
    t: Scalar, n: int
) -> Tuple[List[PlaneVector], List[PlaneVector]]:
    """u_0..u_n and w_0..w_n evaluated at t, in t's arithmetic mode."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if isinstance(t, float):
        one, zero = 1.0, 0.0
    else:
        t = Fraction(t)
        one, zero = Fraction(1), Fraction(0)
    us = [PlaneVector(one, zero)]
    ws = [PlaneVector(t, -one)]
    for _ in range(n):
        u_next = ws[-1].scale(t) - us[-1]
        w_next = u_next.scale(t) - ws[-1]
        us.append(u_next)
        ws.append(w_next)
    return us, ws


def symbolic_sequences(n: int) -> Tuple[List[PolyPair], List[PolyPair]]:
    """u_0..u_n and w_0..w_n as exact integer-polynomial pairs."""
    if n < 1:
        raise ValueError("n must be >= 1")
    us = [PolyPair(x=(1,), y=())]
    ws = [PolyPair(x=(0, 1), y=(-1,))]
    for _ in range(n):
        u, w = us[-1], ws[-1]
        ux = ip.sub(ip.shift_up(w.x), u.x)
        uy = ip.sub(ip.shift_up(w.y), u.y)
        wx = ip.sub(ip.shift_up(ux), w.x)
        wy = ip.sub(ip.shift_up(uy), w.y)
        us.append(PolyPair(x=ux, y=uy))
        ws.append(PolyPair(x=wx, y=wy))
    return us, ws


@dataclass(frozen=True)
class ParityVerdict:
    ok: bool
    index: Optional[int] = None
    which: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def check_parity_degrees(
    us: Sequence[PolyPair], ws: Sequence[PolyPair]
) -> ParityVerdict:
    """Verify, for every i >= 1 present in both sequences: x(u_i) even of
    degree 2i, y(u_i) odd of degree 2i-1, x(w_i) odd of degree 2i+1, y(w_i)
    even of degree 2i. Returns the first violation as (index, which)."""
    upper = min(len(us), len(ws))
    for i in range(1, upper):
        u, w = us[i], ws[i]
        if not (ip.is_even_poly(u.x) and ip.degree(u.x) == 2 * i):
            return ParityVerdict(False, i, "u.x")
        if not (ip.is_odd_poly(u.y) and ip.degree(u.y) == 2 * i - 1):
            return ParityVerdict(False, i, "u.y")
        if not (ip.is_odd_poly(w.x) and ip.degree(w.x) == 2 * i + 1):
            return ParityVerdict(False, i, "w.x")
        if not (ip.is_even_poly(w.y) and ip.degree(w.y) == 2 * i):
            return ParityVerdict(False, i, "w.y")
    return ParityVerdict(True)


def wn_equation_roots(n: int) -> RootGrid:
    """Solve w_n(t) = (1, 0) over the reals, certified.

    Isolates every real root of y(w_n) (even, degree 2n) to width <= 1e-12
    with exact integer arithmetic, then keeps the roots whose x(w_n) value at
    the certified midpoint is within 1e-9 of 1. The kept set must have
    exactly n members; y-roots must come in +/- pairs with at most one of
    each pair kept (the sign structure of an even polynomial with no root
    at 0).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    _, ws = symbolic_sequences(n)
    y, x = ws[n].y, ws[n].x
    if ip.degree(y) != 2 * n:
        raise RootCountMismatch(f"y(w_n) has degree {ip.degree(y)}, expected {2 * n}")
    try:
        intervals = ip.certified_roots(y, ROOT_WIDTH)
    except ArithmeticError as exc:
        raise RootCountMismatch(str(exc)) from exc
    if len(intervals) > 2 * n:
        raise RootCountMismatch(f"{len(intervals)} roots of a degree-{2*n} polynomial")
    mids = [(lo + hi) / 2 for lo, hi in intervals]

    # even polynomial, y(0) != 0: roots pair up as {r, -r}
    pair_tol = Fraction(1, 10**9)
    for r in mids:
        if not any(abs(r + s) <= pair_tol for s in mids):
            raise RootCountMismatch(f"root {float(r):.12g} of y(w_n) lacks a mirror")

    kept = [r for r in mids if abs(ip.eval_at(x, r) - 1) <= X_FILTER_TOL]
    for a in kept:
        for b in kept:
            if a < b and abs(a + b) <= pair_tol:
                raise RootCountMismatch("both members of a +/- pair passed the x-filter")
    if len(kept) != n:
        raise RootCountMismatch(
            f"x-filter kept {len(kept)} of {len(mids)} roots; expected n = {n}"
        )
    return RootGrid(m=2 * n + 1, values=tuple(sorted(float(r) for r in kept)))


def closed_form_t(m: int, k: int) -> float:
    """The closure parameter t_k = 2cos(2k*pi/m)."""
    return 2.0 * math.cos(2.0 * math.pi * k / m)


def t_grid(m: int) -> RootGrid:
    """Closed-form grid {2cos(2k*pi/m) : k = 1..n}, sorted ascending."""
    if m % 2 == 0 or m < 3:
        raise ValueError(f"grid needs odd m >= 3, got {m}")
    n = (m - 1) // 2
    return RootGrid(m=m, values=tuple(sorted(closed_form_t(m, k) for k in range(1, n + 1))))


def model_configuration(m: int, k: int) -> Configuration:
    """The size-m configuration in the canonical frame at parameter t_k:
    slots [u_0, .., u_{n-1}, (0,1), w_0, .., w_{n-1}] (u_i at slot i, V at
    slot n, w_i at slot n+1+i). Asserts closure w_n(t_k) = (1,0) and
    u_n(t_k) = (0,1) within 1e-10."""
    if m % 2 == 0 or m < 3:
        raise ValueError(f"model configuration needs odd m >= 3, got {m}")
    n = (m - 1) // 2
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}, got {k}")
    t = closed_form_t(m, k)
    us, ws = numeric_sequences(t, n)
    u_gap = (us[n] - PlaneVector(0.0, 1.0)).norm()
    w_gap = (ws[n] - PlaneVector(1.0, 0.0)).norm()
    if u_gap > CLOSURE_TOL or w_gap > CLOSURE_TOL:
        raise ClosureViolation(
            f"sequence at t_{k} (m={m}) does not close: |u_n - V| = {u_gap:.3e}, "
            f"|w_n - U| = {w_gap:.3e}"
        )
    vectors = us[:n] + [PlaneVector(0.0, 1.0)] + ws[:n]
    return Configuration(vectors)
