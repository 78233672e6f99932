"""Brute-force linear-algebra verifiers.

These rebuild evaluation matrices from *all* monomials of a given degree and
answer every question by rank computations over F_q.  Nothing here imports
the closed-form invariants, the Hilbert-function counter or the normal form.
"""

from __future__ import annotations

import functools
from typing import Sequence

import numpy as np

from .errors import TooManyPoints
from .linalg import monomial_matrix, nullspace, rank, unit_vectors_in_rowspace
from .poly import Monomial, Polynomial, divides, monomials_of_degree
from .variety import NestedSequence, ProjectivePoint, cardinality, enumerate_points, make_point, points_array

ORACLE_CAP = 2000


def _check_size(seq: NestedSequence, cap: int) -> None:
    size = cardinality(seq)
    if size > cap:
        raise TooManyPoints(f"|X| = {size} exceeds the oracle cap {cap}")


def _index(seq: NestedSequence, P: ProjectivePoint | Sequence[int]) -> int:
    coords = P.coords if isinstance(P, ProjectivePoint) else tuple(P)
    make_point(seq, coords)
    for k, Q in enumerate(enumerate_points(seq)):
        if Q.coords == tuple(coords):
            return k
    raise AssertionError("validated point missing from enumeration")


def full_matrix(seq: NestedSequence, d: int) -> np.ndarray:
    """Every monomial of degree d evaluated at every point of X."""
    return monomial_matrix(seq.field, monomials_of_degree(seq.nvars, d), points_array(seq))


@functools.lru_cache(maxsize=256)
def _degree_data(seq: NestedSequence, d: int) -> tuple[int, np.ndarray]:
    M = full_matrix(seq, d)
    mask = unit_vectors_in_rowspace(seq.field, M)
    return rank(seq.field, M), mask


def hilbert_oracle(seq: NestedSequence, d: int, cap: int = ORACLE_CAP) -> int:
    """Rank of the all-monomial evaluation matrix in degree d."""
    _check_size(seq, cap)
    if d < 0:
        return 0
    return _degree_data(seq, d)[0]


def v_points_oracle(seq: NestedSequence, cap: int = ORACLE_CAP) -> list[int]:
    """For each enumerated point, the least d >= 1 with e_P in the degree-d code.

    Degrees are scanned upward until every point is resolved.  Once the rank
    reaches |X| every unit vector is a codeword, so the scan stops there; |X|
    itself is a hard ceiling since H_X strictly increases before stabilizing.
    """
    _check_size(seq, cap)
    size = cardinality(seq)
    out = [0] * size
    pending = set(range(size))
    d = 1
    while pending:
        if d > size:
            raise AssertionError("rank scan did not terminate")
        r, mask = _degree_data(seq, d)
        for k in list(pending):
            if mask[k]:
                out[k] = d
                pending.discard(k)
        if r == size and pending:
            raise AssertionError("full-rank code missing a unit vector")
        d += 1
    return out


def v_point_oracle(seq: NestedSequence, P: ProjectivePoint | Sequence[int],
                   cap: int = ORACLE_CAP) -> int:
    _check_size(seq, cap)
    return v_points_oracle(seq, cap)[_index(seq, P)]


def reg_delta_oracle(seq: NestedSequence, cap: int = ORACLE_CAP) -> int:
    """Least degree admitting a weight-one codeword: min over points of v_P."""
    return min(v_points_oracle(seq, cap))


def zero_function_check(seq: NestedSequence, P: ProjectivePoint | Sequence[int],
                        cap: int = ORACLE_CAP) -> bool:
    """No indicator of P exists in degrees 1 .. sum_{i != pivot} (d_i - 1)."""
    _check_size(seq, cap)
    k = _index(seq, P)
    j = enumerate_points(seq)[k].pivot
    bound = sum(d - 1 for i, d in enumerate(seq.sizes) if i != j)
    return not any(_degree_data(seq, d)[1][k] for d in range(1, bound + 1))


def _standard_by_divisibility(seq: NestedSequence, d: int) -> list[Monomial]:
    nv = seq.nvars
    leads = []
    for i in range(nv):
        for j in range(i + 1, nv):
            m = [0] * nv
            m[i], m[j] = 1, seq.sizes[j]
            leads.append(tuple(m))
    return [m for m in monomials_of_degree(nv, d) if not any(divides(L, m) for L in leads)]


def indicator_kernel(seq: NestedSequence, P: ProjectivePoint | Sequence[int],
                     cap: int = ORACLE_CAP) -> tuple[list[Monomial], np.ndarray]:
    """Coefficient vectors over standard monomials of degree v_P vanishing off P.

    Returns the monomial list and a kernel basis (one row per basis vector).
    """
    _check_size(seq, cap)
    k = _index(seq, P)
    d = v_points_oracle(seq, cap)[k]
    monos = _standard_by_divisibility(seq, d)
    E = monomial_matrix(seq.field, monos, points_array(seq))
    others = np.delete(E, k, axis=1)
    return monos, nullspace(seq.field, others.T)


def uniqueness_check(seq: NestedSequence, P: ProjectivePoint | Sequence[int],
                     cap: int = ORACLE_CAP) -> bool:
    """The standard indicators of minimal degree form one projective class."""
    monos, K = indicator_kernel(seq, P, cap)
    if K.shape[0] != 1:
        return False
    E = monomial_matrix(seq.field, monos, points_array(seq))
    F = seq.field
    k = _index(seq, P)
    val = 0
    for c, e in zip(K[0], E[:, k]):
        val = F.add(val, F.mul(int(c), int(e)))
    return val != 0


def indicator_from_kernel(seq: NestedSequence, P: ProjectivePoint | Sequence[int],
                          cap: int = ORACLE_CAP) -> Polynomial:
    """The kernel vector of :func:`indicator_kernel` as a monic polynomial."""
    monos, K = indicator_kernel(seq, P, cap)
    if K.shape[0] != 1:
        raise AssertionError(f"kernel has dimension {K.shape[0]}, not 1")
    return Polynomial(seq.field, seq.nvars, zip(monos, (int(c) for c in K[0]))).monic()
