"""Independent oracles: seeded random invertible maps, seeded perturbations,
and exhaustive enumeration of balanced configurations over small exact grids.

Enumeration treats a configuration as a set of pairwise distinct nonzero grid
vectors (the objects the definitions quantify over); dedupe mode lists each
set once, in lexicographic order of the sorted representative, so results are
reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .balance import is_balanced, is_uniform
from .canonical import LinearMap2
from .errors import BudgetExceeded
from .geometry import Configuration, PlaneVector

DEFAULT_BUDGET = 10**7


def random_invertible(seed: int, cond_max: float = 100.0) -> LinearMap2:
    """Seeded random 2x2 map with condition number <= cond_max and
    |det| >= 1/cond_max, by rejection sampling of entries in [-1, 1]."""
    if cond_max <= 1.0:
        raise ValueError("cond_max must exceed 1")
    rng = random.Random(seed)
    while True:
        a, b, c, d = (rng.uniform(-1.0, 1.0) for _ in range(4))
        det = a * d - b * c
        if abs(det) < 1.0 / cond_max:
            continue
        # singular values of a 2x2: s^2 are the eigenvalues of G^T G
        trace = a * a + b * b + c * c + d * d
        disc = math.sqrt(max(trace * trace - 4.0 * det * det, 0.0))
        smin_sq = (trace - disc) / 2.0
        if smin_sq <= 0.0:
            continue
        cond = math.sqrt((trace + disc) / 2.0 / smin_sq)
        if cond <= cond_max:
            return LinearMap2(a, b, c, d)


def perturb(c: Configuration, eps: float, seed: int = 0) -> Configuration:
    """Add a seeded pseudo-random offset of Euclidean magnitude <= eps to
    every member; eps = 0 returns the float image unchanged."""
    if eps < 0:
        raise ValueError("eps must be >= 0")
    rng = random.Random(seed)
    out = []
    for v in c.as_float().vectors:
        radius = eps * rng.random()
        theta = 2.0 * math.pi * rng.random()
        out.append(
            PlaneVector(v.x + radius * math.cos(theta), v.y + radius * math.sin(theta))
        )
    return Configuration(out)


@dataclass(frozen=True)
class SearchSpec:
    """Exhaustive-search request: size m over an exact coordinate grid."""

    m: int
    coordinate_set: Tuple[Fraction, ...]
    require_uniform: bool = False
    dedupe: bool = True
    budget: int = field(default=DEFAULT_BUDGET)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        coords = tuple(sorted({Fraction(x) for x in self.coordinate_set}))
        if not coords:
            raise ValueError("coordinate set must be nonempty")
        object.__setattr__(self, "coordinate_set", coords)


def grid_vectors(coords: Tuple[Fraction, ...]) -> List[PlaneVector]:
    """All nonzero vectors over the grid, lexicographic by (x, y)."""
    return [
        PlaneVector(x, y) for x in coords for y in coords if not (x == 0 and y == 0)
    ]


def enumerate_balanced(spec: SearchSpec) -> List[Configuration]:
    """All balanced configurations of m pairwise distinct vectors over the
    grid, exact arithmetic, in deterministic lexicographic order; optionally
    only the uniform ones."""
    if len(spec.coordinate_set) ** (2 * spec.m) > spec.budget:
        raise BudgetExceeded(
            f"{len(spec.coordinate_set)}^{2 * spec.m} candidate tuples exceed "
            f"the budget of {spec.budget}"
        )
    vectors = grid_vectors(spec.coordinate_set)
    if spec.m > len(vectors):
        return []
    if spec.dedupe:
        candidates = itertools.combinations(vectors, spec.m)
    else:
        candidates = itertools.permutations(vectors, spec.m)
    hits = []
    for cand in candidates:
        cfg = Configuration(cand)
        if not is_balanced(cfg).balanced:
            continue
        if spec.require_uniform and not is_uniform(cfg)[0]:
            continue
        hits.append(cfg)
    return hits
