"""Vanishing ideal of X: closed-form Groebner basis, footprint and Hilbert function.

The basis is G = {t_i t_j^{d_j} - t_i^{d_j} t_j : i < j} with leading monomials
t_i t_j^{d_j}.  Since every element is a binomial, the remainder of a monomial
is again a monomial; :func:`normal_form` reduces term by term.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import HilbertOverflow, ResourceLimit
from .poly import Monomial, Polynomial, grlex_key
from .variety import NestedSequence

INT64_MAX = 2**63 - 1
SLICE_CAP = 10**6


@dataclass(frozen=True)
class GroebnerBasis:
    seq: NestedSequence
    elements: tuple[tuple[tuple[int, int], Polynomial], ...]

    def __iter__(self):
        return (g for _, g in self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial for _, g in self.elements]


def groebner_basis(seq: NestedSequence) -> GroebnerBasis:
    F = seq.field
    nv = seq.nvars
    out = []
    for i in range(nv):
        for j in range(i + 1, nv):
            dj = seq.sizes[j]
            lead = [0] * nv
            lead[i], lead[j] = 1, dj
            tail = [0] * nv
            tail[i], tail[j] = dj, 1
            g = Polynomial(F, nv, [(tuple(lead), 1), (tuple(tail), F.neg(1))])
            out.append(((i, j), g))
    return GroebnerBasis(seq, tuple(out))


def is_standard(seq: NestedSequence, m: Monomial) -> bool:
    """True iff no t_i t_j^{d_j} (i < j) divides ``m``.

    Equivalently: every exponent after the least-index variable in the
    support is at most d_k - 1.
    """
    support = [i for i, e in enumerate(m) if e]
    return all(m[k] <= seq.sizes[k] - 1 for k in support[1:])


def _bounded_counts(bounds: list[int], d: int) -> list[int]:
    """c[e] = #{x : 0 <= x_k <= bounds[k], sum x = e} for e = 0..d."""
    c = [1] + [0] * d
    for b in bounds:
        nxt = [0] * (d + 1)
        run = 0
        for e in range(d + 1):
            run += c[e]
            if e - b - 1 >= 0:
                run -= c[e - b - 1]
            nxt[e] = run
        c = nxt
    return c


def _bounded_at_most(bounds: list[int], D: int) -> int:
    """#{x : 0 <= x_k <= bounds[k], sum x <= D}."""
    B = sum(bounds)
    box = 1
    for b in bounds:
        box *= b + 1
    if D >= B:
        return box
    if 2 * D > B:
        # reflect x -> bounds - x
        return box - _bounded_at_most(bounds, B - D - 1)
    return sum(_bounded_counts(bounds, D))


def hilbert_function(seq: NestedSequence, d: int) -> int:
    """Number of standard monomials of degree ``d``, counted by pivot class."""
    if d < 0:
        return 0
    if d == 0:
        return 1
    total = 0
    for i in range(seq.nvars):
        bounds = [seq.sizes[k] - 1 for k in range(i + 1, seq.nvars)]
        total += _bounded_at_most(bounds, d - 1)  # alpha_i = d - e >= 1
    if total > INT64_MAX:
        raise HilbertOverflow(f"H_X({d}) = {total} overflows 64 bits")
    return total


@dataclass(frozen=True)
class FootprintSlice:
    degree: int
    monomials: tuple[Monomial, ...]

    @property
    def count(self) -> int:
        return len(self.monomials)


def standard_monomials(seq: NestedSequence, d: int, cap: int = SLICE_CAP) -> FootprintSlice:
    """Standard monomials of degree ``d``, descending grlex."""
    h = hilbert_function(seq, d)
    if h > cap:
        raise ResourceLimit(f"footprint slice of degree {d} has {h} > {cap} monomials")
    nv = seq.nvars
    if d == 0:
        return FootprintSlice(0, ((0,) * nv,))
    out: list[Monomial] = []

    def rec(prefix: list[int], k: int, left: int):
        if k == nv:
            if left == 0:
                out.append(tuple(prefix))
            return
        for e in range(min(left, seq.sizes[k] - 1) + 1):
            rec(prefix + [e], k + 1, left - e)

    for i in range(nv):
        for lead in range(1, d + 1):
            rec([0] * i + [lead], i + 1, d - lead)
    out.sort(key=grlex_key, reverse=True)
    return FootprintSlice(d, tuple(out))


@functools.lru_cache(maxsize=1 << 16)
def _reduce_monomial(sizes: tuple[int, ...], m: Monomial) -> Monomial:
    a = list(m)
    nv = len(a)
    while True:
        support = [k for k in range(nv) if a[k]]
        if len(support) < 2:
            return tuple(a)
        i = support[0]
        # Reducers t_i t_j^{d_j} are tried in (i, j) order; only the least
        # support index can head a divisor of least (i, j).
        for j in support[1:]:
            dj = sizes[j]
            if a[j] >= dj:
                k = -(-a[j] // (dj - 1)) - 1  # steps until a[j] <= dj - 1
                a[j] -= k * (dj - 1)
                a[i] += k * (dj - 1)
                break
        else:
            return tuple(a)


def reduce_monomial(seq: NestedSequence, m: Monomial) -> Monomial:
    """Remainder of a monomial on division by G (always a single monomial)."""
    return _reduce_monomial(seq.sizes, tuple(m))


def normal_form(gb: GroebnerBasis | NestedSequence, f: Polynomial) -> Polynomial:
    """Remainder of ``f`` on division by G; every monomial of the result is standard."""
    seq = gb.seq if isinstance(gb, GroebnerBasis) else gb
    F = f.field
    acc: dict[Monomial, int] = {}
    for m, c in f.terms:
        r = _reduce_monomial(seq.sizes, m)
        acc[r] = F.add(acc.get(r, 0), c)
    return Polynomial(F, f.nvars, acc)
