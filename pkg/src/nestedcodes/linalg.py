"""Exact Gaussian elimination over F_q on numpy arrays of field elements."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .field import FiniteField


def rref(F: FiniteField, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns.

    Pivoting takes the first row with a nonzero entry in the current column.
    """
    A = np.array(M, dtype=F.dtype, copy=True)
    if A.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        piv = int(A[r, c])
        if piv != 1:
            A[r] = F.vmul(A[r], np.asarray(F.inv(piv), dtype=F.dtype))
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            factors = F.vneg(A[others, c])
            A[others] = F.vadd(A[others], F.vmul(factors[:, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(F: FiniteField, M: np.ndarray) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(F, M)[1])


def unit_vectors_in_rowspace(F: FiniteField, M: np.ndarray) -> np.ndarray:
    """Boolean mask over columns: is the unit vector e_c in the row space of M?

    In reduced echelon form e_c lies in the row space exactly when c is a
    pivot column whose row has no other nonzero entry.
    """
    R, pivots = rref(F, M)
    out = np.zeros(np.asarray(M).shape[1], dtype=bool)
    for row, c in zip(R, pivots):
        if np.count_nonzero(row) == 1:
            out[c] = True
    return out


def nullspace(F: FiniteField, M: np.ndarray) -> np.ndarray:
    """Basis (as rows) of the right kernel {x : M x = 0}."""
    M = np.asarray(M, dtype=F.dtype)
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(ncols, dtype=F.dtype)
    R, pivots = rref(F, M)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=F.dtype)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for row, c in zip(R, pivots):
            if row[f]:
                basis[b, c] = F.neg(int(row[f]))
    return basis


def monomial_matrix(F: FiniteField, monomials: Sequence[Sequence[int]],
                    points: np.ndarray) -> np.ndarray:
    """Rows: each monomial evaluated at every point (rows of ``points``)."""
    points = np.asarray(points)
    npts, nv = points.shape
    cache: dict[tuple[int, int], np.ndarray] = {}
    out = np.empty((len(monomials), npts), dtype=F.dtype)
    for r, m in enumerate(monomials):
        row = np.ones(npts, dtype=F.dtype)
        for i, e in enumerate(m):
            if e:
                key = (i, e)
                if key not in cache:
                    cache[key] = F.vpow(points[:, i], e)
                row = F.vmul(row, cache[key])
        out[r] = row
    return out
