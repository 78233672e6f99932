"""Evaluation codes C_X(d) and exhaustive minimum-distance search."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DimensionTooLarge, ParseError, SearchTooLarge
from .field import FiniteField
from .ideal import hilbert_function, standard_monomials
from .linalg import monomial_matrix, rank
from .poly import Monomial
from .variety import ENUMERATION_CAP, NestedSequence, ProjectivePoint, enumerate_points, points_array

MAX_DIMENSION = 64
SEARCH_CAP = 10**8
# Upper bound on elements materialized per vectorized block in the search.
_BLOCK_ELEMENTS = 1 << 22


@dataclass(frozen=True, eq=False)
class EvaluationCode:
    seq: NestedSequence
    degree: int
    points: tuple[ProjectivePoint, ...]
    monomials: tuple[Monomial, ...]
    matrix: np.ndarray

    @property
    def field(self) -> FiniteField:
        return self.seq.field

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    @property
    def length(self) -> int:
        return self.matrix.shape[1]


def build_code(seq: NestedSequence, d: int, cap: int = ENUMERATION_CAP,
               max_dimension: int = MAX_DIMENSION) -> EvaluationCode:
    """Generator matrix whose rows are the standard monomials of degree d on X.

    The rows are checked to be linearly independent, which certifies that
    the degree-d footprint is a basis of S_d / I_d.
    """
    h = hilbert_function(seq, d)
    if h > max_dimension:
        raise DimensionTooLarge(f"H_X({d}) = {h} exceeds the dimension cap {max_dimension}")
    pts = enumerate_points(seq, cap)
    monos = standard_monomials(seq, d).monomials
    G = monomial_matrix(seq.field, monos, points_array(seq, cap))
    r = rank(seq.field, G)
    if r != len(monos):
        raise AssertionError(f"standard monomials of degree {d} are dependent on X: rank {r}")
    return EvaluationCode(seq, d, tuple(pts), tuple(monos), G)


def _span(F: FiniteField, rows: np.ndarray, length: int) -> np.ndarray:
    """Every F_q-linear combination of ``rows`` (q^len(rows) codewords)."""
    S = np.zeros((1, length), dtype=F.dtype)
    for row in rows:
        parts = [S]
        for c in range(1, F.q):
            scaled = F.vmul(np.asarray(c, dtype=F.dtype), row)
            parts.append(F.vadd(S, scaled[None, :]))
        S = np.concatenate(parts, axis=0)
    return S


@dataclass(frozen=True)
class SearchResult:
    min_distance: int
    classes: int
    seconds: float


def message_classes(q: int, k: int) -> int:
    return (q**k - 1) // (q - 1)


def _block_min(F: FiniteField, A: np.ndarray, B: np.ndarray) -> int:
    W = F.vadd(A[:, None, :], B[None, :, :])
    return int(np.count_nonzero(W, axis=2).min())


def search_min_distance(code: EvaluationCode, threads: int = 1,
                        cap: int = SEARCH_CAP) -> SearchResult:
    """Exhaustive minimum weight over one message per projective class.

    Messages whose first nonzero coordinate is 1 are split by the position
    of that coordinate; for each position the remaining free rows are
    divided into two halves whose spans are combined blockwise.
    """
    F = code.field
    G = code.matrix
    k, m = G.shape
    total = message_classes(F.q, k)
    if total > cap:
        raise SearchTooLarge(f"{total} message classes exceed the search cap {cap}")
    start = time.perf_counter()
    tasks = []
    for lead in range(k):
        rest = G[lead + 1:]
        r = rest.shape[0]
        nb = 0
        while nb < r and F.q ** (nb + 1) <= 4096:
            nb += 1
        B = _span(F, rest[r - nb:], m)
        A = F.vadd(_span(F, rest[: r - nb], m), G[lead][None, :])
        step = max(1, _BLOCK_ELEMENTS // (B.shape[0] * m))
        for s in range(0, A.shape[0], step):
            tasks.append((A[s:s + step], B))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            mins = list(pool.map(lambda t: _block_min(F, *t), tasks))
    else:
        mins = [_block_min(F, *t) for t in tasks]
    return SearchResult(min(mins), total, time.perf_counter() - start)


def min_distance(code: EvaluationCode, threads: int = 1, cap: int = SEARCH_CAP) -> int:
    return search_min_distance(code, threads, cap).min_distance


def delta_profile(seq: NestedSequence, d_max: int, threads: int = 1,
                  cap: int = SEARCH_CAP) -> list[tuple[int, int]]:
    """[(d, delta_X(d)) for d = 0..d_max], each by exhaustive search."""
    return [(d, min_distance(build_code(seq, d), threads, cap)) for d in range(d_max + 1)]


def export_generator(code: EvaluationCode) -> str:
    """Column-major text: a header line, then one line per point (column)."""
    F = code.field
    lines = [f"# q={F.q} n={code.seq.n} d={code.degree} k={code.dimension} points={code.length}"]
    for col in code.matrix.T:
        lines.append(" ".join(F.format(int(x)) for x in col))
    return "\n".join(lines) + "\n"


def parse_generator(F: FiniteField, text: str) -> np.ndarray:
    """Inverse of :func:`export_generator`; returns the k x |X| matrix."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ParseError("missing generator matrix header")
    header = dict(tok.split("=") for tok in lines[0][1:].split())
    k, npts = int(header["k"]), int(header["points"])
    cols = [[F.parse(tok) for tok in ln.split()] for ln in lines[1:]]
    if len(cols) != npts or any(len(c) != k for c in cols):
        raise ParseError("generator matrix body does not match its header")
    return np.array(cols, dtype=F.dtype).T.reshape(k, npts)
