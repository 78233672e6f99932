"""Defining sequences d = (d_0, ..., d_n) and the point set X = [K_0 x ... x K_n]."""

from __future__ import annotations

import functools
import itertools
import math
import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    AmbientTooSmall,
    BrokenTower,
    InvalidInput,
    NonMonotone,
    NotPrimePower,
    NotStandardRep,
    ParseError,
    PointNotInX,
    SizeOne,
    TooManyPoints,
    ZeroPoint,
)
from .field import FieldTower, FiniteField, build_field, prime_power

ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class NestedSequence:
    """A validated defining sequence; build with :func:`validate_sequence`."""

    p: int
    sizes: tuple[int, ...]
    q: int
    modulus: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.sizes) - 1

    @property
    def nvars(self) -> int:
        return len(self.sizes)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(prime_power(d)[1] for d in self.sizes)

    @property
    def field(self) -> FiniteField:
        return build_field(self.p, prime_power(self.q)[1], self.modulus)

    @property
    def tower(self) -> FieldTower:
        return _tower(self)

    def __str__(self):
        return "(" + ",".join(map(str, self.sizes)) + ")"


@functools.lru_cache(maxsize=64)
def _tower(seq: NestedSequence) -> FieldTower:
    return FieldTower(seq.field, seq.sizes)


def validate_sequence(p: int | None, sizes: Sequence[int], q: int | None = None,
                      modulus: Sequence[int] | None = None) -> NestedSequence:
    """Check every tower condition and return a :class:`NestedSequence`.

    ``p`` may be ``None``, in which case it is read off ``d_0``.  ``q``
    defaults to ``d_n``.
    """
    sizes = tuple(int(d) for d in sizes)
    if len(sizes) < 2:
        raise InvalidInput("a defining sequence needs at least two entries (n >= 1)")
    for d in sizes:
        if d < 2:
            raise SizeOne(f"subfield size {d} < 2")
    pps = []
    for d in sizes:
        pp = prime_power(d)
        if pp is None:
            raise NotPrimePower(f"{d} is not a prime power")
        pps.append(pp)
    if p is None:
        p = pps[0][0]
    for d, (r, _) in zip(sizes, pps):
        if r != p:
            raise NotPrimePower(f"{d} is not a power of {p}")
    for i in range(len(sizes) - 1):
        if sizes[i] > sizes[i + 1]:
            raise NonMonotone(f"d_{i} = {sizes[i]} > d_{i + 1} = {sizes[i + 1]}")
    exps = [e for _, e in pps]
    for i in range(len(exps) - 1):
        if exps[i + 1] % exps[i]:
            raise BrokenTower(
                f"F_{sizes[i]} is not a subfield of F_{sizes[i + 1]} "
                f"({exps[i]} does not divide {exps[i + 1]})")
    if q is None:
        q = sizes[-1]
    qq = prime_power(q)
    if qq is None or qq[0] != p or qq[1] % exps[-1]:
        raise AmbientTooSmall(f"F_{sizes[-1]} is not a subfield of the ambient F_{q}")
    mod = tuple(modulus) if modulus is not None else None
    return NestedSequence(p, sizes, q, mod)


def cardinality(seq: NestedSequence) -> int:
    """|X| = 1 + sum_{i>=1} d_i d_{i+1} ... d_n, without enumerating."""
    total = 1
    for i in range(1, seq.n + 1):
        total += math.prod(seq.sizes[i:])
    return total


def points_with_pivot(seq: NestedSequence, j: int) -> int:
    return math.prod(seq.sizes[j + 1:])


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of X in standard representation (first nonzero coordinate is 1)."""

    coords: tuple[int, ...]
    pivot: int

    def format(self, field: FiniteField) -> str:
        return "(" + ":".join(field.format(x) for x in self.coords) + ")"


def pivot(coords: Sequence[int] | ProjectivePoint) -> int:
    """Least index with a nonzero coordinate."""
    if isinstance(coords, ProjectivePoint):
        coords = coords.coords
    for i, x in enumerate(coords):
        if x:
            return i
    raise ZeroPoint("the zero vector is not a projective point")


def make_point(seq: NestedSequence, coords: Sequence[int]) -> ProjectivePoint:
    """Validate coordinates as a point of X given in standard representation."""
    coords = tuple(int(x) for x in coords)
    if len(coords) != seq.nvars:
        raise PointNotInX(f"point has {len(coords)} coordinates, expected {seq.nvars}")
    tower = seq.tower
    for i, x in enumerate(coords):
        if not 0 <= x < seq.q or not tower.contains(i, x):
            raise PointNotInX(
                f"coordinate {i} = {seq.field.format(x) if 0 <= x < seq.q else x} "
                f"is not in K_{i} = F_{seq.sizes[i]}")
    j = pivot(coords)
    if coords[j] != 1:
        raise NotStandardRep(f"pivot coordinate {j} must be 1")
    return ProjectivePoint(coords, j)


def unit_point(seq: NestedSequence, j: int) -> ProjectivePoint:
    coords = [0] * seq.nvars
    coords[j] = 1
    return ProjectivePoint(tuple(coords), j)


def parse_point(seq: NestedSequence, text: str) -> ProjectivePoint:
    """Read ``(a0:a1:...:an)`` and validate it with :func:`make_point`."""
    src = text.strip()
    m = re.fullmatch(r"\((.*)\)", src)
    if not m:
        raise ParseError(f"point must look like (a0:...:an): {text!r}")
    F = seq.field
    return make_point(seq, [F.parse(part) for part in m.group(1).split(":")])


def enumerate_points(seq: NestedSequence, cap: int = ENUMERATION_CAP) -> list[ProjectivePoint]:
    """All points of X: ascending pivot, then lexicographic coordinates."""
    return list(_enumerate(seq, cap))


@functools.lru_cache(maxsize=32)
def _enumerate(seq: NestedSequence, cap: int) -> tuple[ProjectivePoint, ...]:
    size = cardinality(seq)
    if size > cap:
        raise TooManyPoints(f"|X| = {size} exceeds the enumeration cap {cap}")
    levels = seq.tower.levels
    out = []
    for j in range(seq.nvars):
        head = (0,) * j + (1,)
        for tail in itertools.product(*levels[j + 1:]):
            out.append(ProjectivePoint(head + tail, j))
    return tuple(out)


def points_array(seq: NestedSequence, cap: int = ENUMERATION_CAP) -> np.ndarray:
    """The enumerated points as an ``(|X|, n+1)`` array, one row per point."""
    pts = _enumerate(seq, cap)
    return np.array([p.coords for p in pts], dtype=seq.field.dtype).reshape(len(pts), seq.nvars)
