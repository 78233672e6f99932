"""Closed-form invariants of X and explicit indicator functions.

Everything here is formula-driven; nothing enumerates X except
:func:`verify_indicator`.  Independent rank-based checks live in
:mod:`nestedcodes.oracle`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import IndexOutOfRange
from .ideal import normal_form
from .poly import Polynomial
from .variety import (
    ENUMERATION_CAP,
    NestedSequence,
    ProjectivePoint,
    cardinality,
    make_point,
    points_array,
    unit_point,
)


def m_value(seq: NestedSequence, j: int) -> int:
    """Least m >= 1 with m (d_j - 1) > sum_{i=1}^{j-1} (d_i - 1)."""
    if not 1 <= j <= seq.n:
        raise IndexOutOfRange(f"m_j is defined for 1 <= j <= {seq.n}, got {j}")
    below = sum(d - 1 for d in seq.sizes[1:j])
    return below // (seq.sizes[j] - 1) + 1


def m_values(seq: NestedSequence) -> list[int]:
    return [m_value(seq, j) for j in range(1, seq.n + 1)]


def reg_hilbert(seq: NestedSequence) -> int:
    return 1 + sum(d - 1 for d in seq.sizes[1:])


def v_unit(seq: NestedSequence, j: int) -> int:
    """Local v-number of the unit point e_j."""
    n = seq.n
    if not 0 <= j <= n:
        raise IndexOutOfRange(f"unit point index {j} outside 0..{n}")
    if j <= 1:
        return reg_hilbert(seq)
    dj = seq.sizes[j]
    return m_value(seq, j) * (dj - 1) + 1 + sum(d - 1 for d in seq.sizes[j + 1:])


def v_units(seq: NestedSequence) -> list[int]:
    return [v_unit(seq, j) for j in range(seq.nvars)]


def reg_delta(seq: NestedSequence) -> int:
    """Regularity index of the minimum distance function: m_n (d_n - 1) + 1."""
    return m_value(seq, seq.n) * (seq.sizes[-1] - 1) + 1


def cayley_bacharach(seq: NestedSequence) -> bool:
    return reg_delta(seq) == reg_hilbert(seq)


def _as_point(seq: NestedSequence, P: ProjectivePoint | Sequence[int]) -> ProjectivePoint:
    coords = P.coords if isinstance(P, ProjectivePoint) else P
    return make_point(seq, coords)


def v_point(seq: NestedSequence, P: ProjectivePoint | Sequence[int]) -> int:
    """v_P depends only on the pivot of P."""
    return v_unit(seq, _as_point(seq, P).pivot)


# --- indicator functions ---

def _var(seq: NestedSequence, i: int, e: int = 1) -> Polynomial:
    return Polynomial.var(seq.field, seq.nvars, i, e)


def _avoid_product(seq: NestedSequence, ell: int, a: int, j: int) -> Polynomial:
    """prod over lambda in K_ell minus {a} of (t_ell - lambda t_j)."""
    F = seq.field
    d = seq.sizes[ell]
    if a == 0:
        return _var(seq, ell, d - 1) - _var(seq, j, d - 1)
    out = Polynomial.constant(F, seq.nvars)
    t_ell, t_j = _var(seq, ell), _var(seq, j)
    for lam in seq.tower.levels[ell]:
        if lam != a:
            out = out * (t_ell - t_j.scale(lam))
    return out


def _alternating_part(seq: NestedSequence, j: int, top: int) -> Polynomial:
    """t_j^top - sum_i t_i^top + sum over subsets of {1..j-1} of size >= 2."""
    F = seq.field
    nv = seq.nvars
    acc = [(tuple(top if k == j else 0 for k in range(nv)), 1)]
    for s in range(1, j):
        sign = F.one if s % 2 == 0 else F.neg(1)
        for sub in itertools.combinations(range(1, j), s):
            m = [0] * nv
            m[sub[0]] = top - sum(seq.sizes[k] - 1 for k in sub[1:])
            for k in sub[1:]:
                m[k] = seq.sizes[k] - 1
            acc.append((tuple(m), sign))
    return Polynomial(F, nv, acc)


def _t0_part(seq: NestedSequence, j: int, top: int) -> Polynomial:
    out = _var(seq, 0, top - sum(d - 1 for d in seq.sizes[1:j]))
    for i in range(1, j):
        di = seq.sizes[i]
        out = out * (_var(seq, 0, di - 1) - _var(seq, i, di - 1))
    return out


def indicator_raw(seq: NestedSequence, P: ProjectivePoint | Sequence[int]) -> Polynomial:
    """Closed-form indicator function of P (linear factors avoid P's coordinates)."""
    P = _as_point(seq, P)
    j, a = P.pivot, P.coords
    if j == 0:
        head = _var(seq, 0)
    elif j == 1:
        d1 = seq.sizes[1]
        head = _var(seq, 1) * (_var(seq, 1, d1 - 1) - _var(seq, 0, d1 - 1))
    else:
        top = m_value(seq, j) * (seq.sizes[j] - 1)
        head = _var(seq, j) * (_alternating_part(seq, j, top) - _t0_part(seq, j, top))
    for ell in range(j + 1, seq.nvars):
        head = head * _avoid_product(seq, ell, a[ell], j)
    return head


def indicator_shifted(seq: NestedSequence, P: ProjectivePoint | Sequence[int]) -> Polynomial:
    """Indicator of e_j moved to P by t_i -> t_i - a_i t_j for i > j."""
    P = _as_point(seq, P)
    j = P.pivot
    base = indicator_raw(seq, unit_point(seq, j))
    shifts = list(P.coords[j + 1:])
    if not any(shifts):
        return base
    return base.linear_substitute(j, shifts)


@dataclass(frozen=True)
class IndicatorResult:
    point: ProjectivePoint
    raw: Polynomial
    standard: Polynomial
    degree: int
    v: int
    verified: bool | None = None


def standard_indicator(seq: NestedSequence, P: ProjectivePoint | Sequence[int],
                       verify: bool = False, cap: int = ENUMERATION_CAP) -> IndicatorResult:
    """The unique standard indicator of P of degree v_P, leading coefficient 1."""
    P = _as_point(seq, P)
    shifted = indicator_shifted(seq, P)
    std = normal_form(seq, shifted).monic()
    ok = verify_indicator(seq, std, P, cap) if verify else None
    return IndicatorResult(
        point=P,
        raw=indicator_raw(seq, P),
        standard=std,
        degree=std.degree,
        v=v_unit(seq, P.pivot),
        verified=ok,
    )


def verify_indicator(seq: NestedSequence, f: Polynomial, P: ProjectivePoint | Sequence[int],
                     cap: int = ENUMERATION_CAP) -> bool:
    """True iff ``f`` is homogeneous, nonzero at P and zero on the rest of X."""
    P = _as_point(seq, P)
    if not f or not f.is_homogeneous():
        return False
    pts = points_array(seq, cap)
    vals = f.evaluate_many(pts)
    hit = np.all(pts == np.array(P.coords, dtype=pts.dtype), axis=1)
    return bool(np.all(vals[~hit] == 0) and np.all(vals[hit] != 0))


@dataclass(frozen=True)
class InvariantReport:
    sequence: tuple[int, ...]
    q: int
    cardinality: int
    reg_hilbert: int
    reg_delta: int
    m_values: tuple[int, ...]
    v_units: tuple[int, ...]
    cayley_bacharach: bool
    oracle_agreement: dict | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        out = {
            "sequence": list(self.sequence),
            "q": self.q,
            "cardinality": self.cardinality,
            "reg_hilbert": self.reg_hilbert,
            "reg_delta": self.reg_delta,
            "m_values": list(self.m_values),
            "v_units": list(self.v_units),
            "cayley_bacharach": self.cayley_bacharach,
        }
        if self.oracle_agreement is not None:
            out["oracle_agreement"] = self.oracle_agreement
        return out


def invariant_report(seq: NestedSequence) -> InvariantReport:
    return InvariantReport(
        sequence=seq.sizes,
        q=seq.q,
        cardinality=cardinality(seq),
        reg_hilbert=reg_hilbert(seq),
        reg_delta=reg_delta(seq),
        m_values=tuple(m_values(seq)),
        v_units=tuple(v_units(seq)),
        cayley_bacharach=cayley_bacharach(seq),
    )
