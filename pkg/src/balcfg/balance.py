"""Balanced/uniform verdicts and the combinatorial structure they induce.

A configuration is *balanced* when, for every member v_i, the multiset of
determinants {det(v_i, v_j) : j != i} is symmetric around 0: each value x
appears exactly as often as -x. It is *uniform* when every pair of members is
linearly independent (no zero determinant). The m-th roots of unity are the
model uniform balanced configuration.

Balance of a sorted multiset is equivalent to d[j] = -d[N-1-j] for all j,
which is what the verdicts check; in float mode the comparison happens within
an absolute tolerance derived from the determinant scale.

For uniform balanced configurations of odd size m = 2n+1 this module also
builds the pairing structure: for each index i the remaining indices split
into n pairs {k, l} with det(v_i, v_k) = -det(v_i, v_l) != 0, and the pair
{k, l} determines i uniquely, giving a map phi from unordered index pairs to
indices. Cyclically, phi({k-a, k+a}) = k, which is the antisymmetry identity
det(v_k, v_{k+a}) = -det(v_k, v_{k-a}) in disguise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .errors import (
    AmbiguousPairing,
    InconsistentConstants,
    NotBalanced,
    NotUniform,
    OddM,
)
from .geometry import EXACT, Configuration, Scalar, cyclic_index, det2

# Relative factor for the default float tolerance: tol = 1e-9 * max |det|.
DEFAULT_REL_TOL = 1e-9


@dataclass(frozen=True)
class BalanceReport:
    """Outcome of is_balanced: verdict, optional (index, value) witness where
    multiset symmetry fails, and the per-index sorted determinant multisets."""

    balanced: bool
    witness: Optional[Tuple[int, Scalar]]
    rows: Tuple[Tuple[Scalar, ...], ...]


@dataclass(frozen=True)
class PairingMap:
    """Per index i, the set of n determinant-opposite pairs partitioning the
    other indices; phi maps every unordered index pair to its unique i."""

    per_index: Tuple[FrozenSet[FrozenSet[int]], ...]
    phi: Dict[FrozenSet[int], int]

    def phi_of(self, k: int, l: int) -> int:
        return self.phi[frozenset((k, l))]


@dataclass(frozen=True)
class StepConstants:
    """The common step determinants of a uniform balanced labeled
    configuration: A1 = det(v_k, v_{k+1}) and An = det(v_k, v_{k+n})."""

    A1: Scalar
    An: Scalar


def _det_rows(c: Configuration) -> List[List[Scalar]]:
    """Row i holds det(v_i, v_j) for j != i, in j order."""
    vecs = c.vectors
    return [
        [det2(vi, vj) for j, vj in enumerate(vecs) if j != i]
        for i, vi in enumerate(vecs)
    ]


def _default_tol(c: Configuration, rows: List[List[Scalar]], tol: Optional[float]) -> Scalar:
    if c.mode == EXACT:
        return 0
    if tol is not None:
        return tol
    top = max((abs(d) for row in rows for d in row), default=0.0)
    return DEFAULT_REL_TOL * top


def is_balanced(c: Configuration, tol: Optional[float] = None) -> BalanceReport:
    """Decide multiset symmetry of every determinant row.

    Exact mode compares exactly (tol ignored); float mode sorts each row and
    greedily matches extremes x with -x within the absolute tolerance
    (default 1e-9 * max |det|). The witness is the first unmatched value.
    """
    rows = _det_rows(c)
    eff = _default_tol(c, rows, tol)
    witness = None
    for i, row in enumerate(rows):
        srow = sorted(row)
        lo, hi = 0, len(srow) - 1
        while lo <= hi:
            if lo == hi:
                bad = abs(srow[lo]) > eff
                mismatch = srow[lo]
            else:
                bad = abs(srow[lo] + srow[hi]) > eff
                mismatch = srow[hi] if abs(srow[hi]) >= abs(srow[lo]) else srow[lo]
            if bad:
                witness = (i, mismatch)
                break
            lo += 1
            hi -= 1
        if witness is not None:
            break
    return BalanceReport(
        balanced=witness is None,
        witness=witness,
        rows=tuple(tuple(sorted(row)) for row in rows),
    )


def is_uniform(
    c: Configuration, tol: Optional[float] = None
) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """True when no pair of members is linearly dependent; otherwise False
    plus the first violating index pair (i, j)."""
    vecs = c.vectors
    if c.mode == EXACT:
        eff = 0
    elif tol is not None:
        eff = tol
    else:
        rows = _det_rows(c)
        eff = _default_tol(c, rows, None)
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if abs(det2(vecs[i], vecs[j])) <= eff:
                return False, (i, j)
    return True, None


def even_m_witness(c: Configuration, tol: Optional[float] = None) -> int:
    """For a balanced configuration of even size, return j >= 1 with
    det(v_0, v_j) = 0.

    The row multiset at index 0 has odd cardinality m-1; a symmetric multiset
    of odd cardinality contains 0, so such a j exists and certifies that the
    configuration is not uniform.
    """
    if c.m % 2 == 1:
        raise OddM(f"m = {c.m} is odd; the even-m obstruction does not apply")
    report = is_balanced(c, tol)
    if not report.balanced:
        raise NotBalanced("configuration is not balanced", witness=report.witness)
    rows = _det_rows(c)
    eff = _default_tol(c, rows, tol)
    best = None
    for j, d in enumerate(rows[0], start=1):
        if abs(d) <= eff and (best is None or abs(d) < best[1]):
            best = (j, abs(d))
    if best is None:
        # Unreachable for inputs that passed the balance check above.
        raise NotBalanced("no zero determinant in row 0 despite balance")
    return best[0]


def build_pairing(c: Configuration, tol: Optional[float] = None) -> PairingMap:
    """Construct the pairing map of a uniform balanced configuration of odd
    size: per index i the n determinant-opposite pairs, plus the global phi.

    Each row is matched greedily (sorted extremes pair with each other), and
    the per-row structures are then checked for global disjointness: a pair
    {k, l} claimed by two different rows means the float clustering was
    inconsistent at this tolerance.
    """
    if c.m % 2 == 0 or c.m < 3:
        raise ValueError(f"pairing requires odd m >= 3, got m = {c.m}")
    report = is_balanced(c, tol)
    if not report.balanced:
        raise NotBalanced("configuration is not balanced", witness=report.witness)
    ok, pair = is_uniform(c, tol)
    if not ok:
        raise NotUniform("configuration is not uniform", witness=pair)

    rows = _det_rows(c)
    eff = _default_tol(c, rows, tol)
    per_index: List[FrozenSet[FrozenSet[int]]] = []
    phi: Dict[FrozenSet[int], int] = {}
    for i in range(c.m):
        others = [j for j in range(c.m) if j != i]
        order = sorted(range(len(others)), key=lambda p: rows[i][p])
        pairs = set()
        lo, hi = 0, len(order) - 1
        while lo < hi:
            a, b = order[lo], order[hi]
            if abs(rows[i][a] + rows[i][b]) > eff:
                raise AmbiguousPairing(
                    f"row {i}: extremes {rows[i][a]} and {rows[i][b]} do not cancel",
                    witness=(i, others[a], others[b]),
                )
            key = frozenset((others[a], others[b]))
            if key in phi:
                raise AmbiguousPairing(
                    f"pair {set(key)} claimed by rows {phi[key]} and {i}",
                    witness=(phi[key], i, tuple(key)),
                )
            phi[key] = i
            pairs.add(key)
            lo += 1
            hi -= 1
        per_index.append(frozenset(pairs))

    # Counting identity: m rows of n pairs fill all m(m-1)/2 unordered pairs.
    assert len(phi) == c.m * (c.m - 1) // 2
    return PairingMap(per_index=tuple(per_index), phi=phi)


def verify_antisymmetry(
    c: Configuration, tol: Optional[float] = None
) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Check det(v_k, v_{k+a}) = -det(v_k, v_{k-a}) for all k and a = 1..n,
    indices cyclic. Returns (True, None) or (False, first violating (k, a))."""
    if c.m % 2 == 0:
        raise ValueError("antisymmetry is stated for odd m")
    rows = _det_rows(c)
    eff = _default_tol(c, rows, tol)
    vecs = c.vectors
    m, n = c.m, c.n
    for k in range(m):
        for a in range(1, n + 1):
            fwd = det2(vecs[k], vecs[cyclic_index(k + a, m)])
            bwd = det2(vecs[k], vecs[cyclic_index(k - a, m)])
            if abs(fwd + bwd) > eff:
                return False, (k, a)
    return True, None


def step_constants(c: Configuration, tol: Optional[float] = None) -> StepConstants:
    """Return (A1, An) for a uniform balanced labeled configuration and verify
    det(v_k, v_{k+1}) = A1 and det(v_k, v_{k+n}) = An for every k cyclically.

    Raises InconsistentConstants naming the first violating k.
    """
    if c.m % 2 == 0 or c.m < 3:
        raise ValueError(f"step constants require odd m >= 3, got m = {c.m}")
    rows = _det_rows(c)
    eff = _default_tol(c, rows, tol)
    vecs = c.vectors
    m, n = c.m, c.n
    a1 = det2(vecs[0], vecs[1])
    an = det2(vecs[0], vecs[n])
    for k in range(m):
        step1 = det2(vecs[k], vecs[cyclic_index(k + 1, m)])
        stepn = det2(vecs[k], vecs[cyclic_index(k + n, m)])
        if abs(step1 - a1) > eff or abs(stepn - an) > eff:
            raise InconsistentConstants(
                f"step determinants at k = {k} differ from (A1, An)", witness=k
            )
    return StepConstants(A1=a1, An=an)
