"""Planar primitives: vectors in two arithmetic modes, determinants, polar
arguments, cyclic indexing, and roots-of-unity generation.

Every vector carries either exact rational coordinates (fractions.Fraction,
kept in lowest terms by construction) or binary floats; the two modes never
mix inside one operation. Configurations are immutable ordered lists of
nonzero vectors with a single mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DuplicateArgument, ModeMismatch, ZeroVector

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"

# Two float arguments closer than this (radians, cyclically) are treated as
# equal rather than ordered.
ARGUMENT_TIE_TOL = 1e-12


def _coerce(value) -> Scalar:
    """Map an input coordinate to one of the two supported scalar kinds."""
    if isinstance(value, bool):
        raise TypeError("boolean is not a coordinate")
    if isinstance(value, float):
        return value
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"unsupported coordinate type {type(value).__name__}")


@dataclass(frozen=True)
class PlaneVector:
    """A vector of R^2. Ints coerce to Fraction; a float coordinate forces
    float mode for the whole vector."""

    x: Scalar
    y: Scalar

    def __post_init__(self):
        x, y = _coerce(self.x), _coerce(self.y)
        if isinstance(x, float) or isinstance(y, float):
            x, y = float(x), float(y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def mode(self) -> str:
        return FLOAT if isinstance(self.x, float) else EXACT

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __add__(self, other: "PlaneVector") -> "PlaneVector":
        return PlaneVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "PlaneVector") -> "PlaneVector":
        return PlaneVector(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "PlaneVector":
        return PlaneVector(-self.x, -self.y)

    def scale(self, s: Scalar) -> "PlaneVector":
        return PlaneVector(s * self.x, s * self.y)

    def norm(self) -> float:
        """Euclidean length, always as a float."""
        return math.hypot(float(self.x), float(self.y))

    def as_float(self) -> "PlaneVector":
        return self if self.mode == FLOAT else PlaneVector(float(self.x), float(self.y))

    def as_tuple(self) -> tuple:
        return (self.x, self.y)


def det2(a: PlaneVector, b: PlaneVector) -> Scalar:
    """Determinant of the 2x2 matrix with columns a, b: a.x*b.y - a.y*b.x."""
    if a.mode != b.mode:
        raise ModeMismatch(f"det2 operands in different modes: {a.mode} vs {b.mode}")
    return a.x * b.y - a.y * b.x


def dot2(a: PlaneVector, b: PlaneVector) -> Scalar:
    if a.mode != b.mode:
        raise ModeMismatch(f"dot2 operands in different modes: {a.mode} vs {b.mode}")
    return a.x * b.x + a.y * b.y


def argument(v: PlaneVector) -> float:
    """Polar angle of v in [0, 2*pi), measured from the positive x-axis.

    Exact-mode vectors fall back to float internally; the result is always a
    float and is used for ordering only.
    """
    if v.is_zero():
        raise ZeroVector("argument of the zero vector is undefined")
    theta = math.atan2(float(v.y), float(v.x))
    if theta < 0.0:
        theta += 2.0 * math.pi
    # atan2(-tiny, x) + 2*pi can round to 2*pi itself; fold back.
    if theta >= 2.0 * math.pi:
        theta = 0.0
    return theta


@dataclass(frozen=True)
class Configuration:
    """Ordered list of m >= 1 nonzero vectors sharing one arithmetic mode."""

    vectors: tuple = field(default=())

    def __init__(self, vectors: Iterable):
        vecs = tuple(
            v if isinstance(v, PlaneVector) else PlaneVector(v[0], v[1])
            for v in vectors
        )
        if not vecs:
            raise ValueError("a configuration needs at least one vector")
        modes = {v.mode for v in vecs}
        if len(modes) > 1:
            raise ModeMismatch("configuration mixes exact and float vectors")
        for i, v in enumerate(vecs):
            if v.is_zero():
                raise ZeroVector(f"configuration member {i} is the zero vector")
        object.__setattr__(self, "vectors", vecs)

    @property
    def mode(self) -> str:
        return self.vectors[0].mode

    @property
    def m(self) -> int:
        return len(self.vectors)

    @property
    def n(self) -> int:
        """(m-1)/2 when m is odd; meaningless otherwise."""
        if self.m % 2 == 0:
            raise ValueError("n is defined only for odd m")
        return (self.m - 1) // 2

    def __len__(self) -> int:
        return len(self.vectors)

    def __getitem__(self, i: int) -> PlaneVector:
        return self.vectors[i]

    def __iter__(self):
        return iter(self.vectors)

    def as_float(self) -> "Configuration":
        if self.mode == FLOAT:
            return self
        return Configuration([v.as_float() for v in self.vectors])


class LabeledConfiguration(Configuration):
    """A configuration sorted by strictly increasing argument, remembering the
    permutation that produced it: vectors[i] = original[permutation[i]]."""

    def __init__(self, vectors: Iterable, permutation: Sequence[int]):
        super().__init__(vectors)
        object.__setattr__(self, "permutation", tuple(permutation))

    permutation: tuple


def label_by_increasing_arguments(c: Configuration) -> LabeledConfiguration:
    """Sort the members by polar argument ascending in [0, 2*pi).

    Raises DuplicateArgument when two members are angularly closer than
    ARGUMENT_TIE_TOL (cyclically), since the strict ordering the labeling
    promises does not exist; uniform configurations never tie.
    """
    args = [argument(v) for v in c.vectors]
    order = sorted(range(len(args)), key=args.__getitem__)
    if len(order) > 1:
        for pos in range(len(order)):
            i, j = order[pos - 1], order[pos]
            gap = args[j] - args[i]
            if pos == 0:
                gap += 2.0 * math.pi
            if abs(gap) < ARGUMENT_TIE_TOL:
                raise DuplicateArgument(
                    f"members {i} and {j} share an argument (gap {gap:.3e} rad)"
                )
    return LabeledConfiguration([c.vectors[i] for i in order], order)


def cyclic_index(k: int, m: int) -> int:
    """Index k reduced modulo m to its nonnegative representative."""
    if m < 1:
        raise ValueError("m must be positive")
    return k % m


def roots_of_unity(m: int) -> LabeledConfiguration:
    """The m-th roots of unity as a float configuration, in label order.

    Only odd m is meaningful downstream (m = 1 is allowed as the degenerate
    single vector); even m is rejected here to fail close to the mistake.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if m % 2 == 0:
        raise ValueError("m must be odd")
    vecs = [
        PlaneVector(math.cos(2.0 * math.pi * k / m), math.sin(2.0 * math.pi * k / m))
        for k in range(m)
    ]
    return LabeledConfiguration(vecs, range(m))


def unit_vector(theta: float) -> PlaneVector:
    """Float unit vector at angle theta."""
    return PlaneVector(math.cos(theta), math.sin(theta))
