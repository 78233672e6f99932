"""Polynomials in t_0, ..., t_n over a finite field, graded lex with t_0 smallest.

Monomials are exponent tuples ``(alpha_0, ..., alpha_n)``.  A
:class:`Polynomial` stores its terms as a tuple sorted descending by
:func:`grlex_key`, so the leading term is ``terms[0]``.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DimensionMismatch, ParseError
from .field import FiniteField

Monomial = tuple[int, ...]


def grlex_key(m: Monomial) -> tuple[int, ...]:
    """Sort key: total degree, then exponents of t_n, t_{n-1}, ..., t_0."""
    return (sum(m),) + tuple(reversed(m))


def grlex_compare(m1: Monomial, m2: Monomial) -> int:
    """-1, 0 or 1 as ``m1`` is less than, equal to or greater than ``m2``."""
    if len(m1) != len(m2):
        raise DimensionMismatch(f"monomials in {len(m1)} and {len(m2)} variables")
    k1, k2 = grlex_key(m1), grlex_key(m2)
    return (k1 > k2) - (k1 < k2)


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(m1, m2))


def divides(m1: Monomial, m2: Monomial) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def monomials_of_degree(nvars: int, d: int) -> list[Monomial]:
    """All exponent vectors of total degree ``d``, descending grlex."""
    out: list[Monomial] = []

    def rec(prefix: list[int], left: int, slots: int):
        if slots == 1:
            out.append(tuple(prefix + [left]))
            return
        for e in range(left + 1):
            rec(prefix + [e], left - e, slots - 1)

    rec([], d, nvars)
    out.sort(key=grlex_key, reverse=True)
    return out


def format_monomial(m: Monomial) -> str:
    parts = []
    for i in range(len(m) - 1, -1, -1):
        e = m[i]
        if e == 1:
            parts.append(f"t{i}")
        elif e > 1:
            parts.append(f"t{i}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable polynomial; no stored coefficient is zero."""

    __slots__ = ("field", "nvars", "terms", "_dict")

    def __init__(self, field: FiniteField, nvars: int,
                 terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != nvars:
                raise DimensionMismatch(f"monomial {m} not in {nvars} variables")
            acc[m] = field.add(acc.get(m, 0), c)
        acc = {m: c for m, c in acc.items() if c}
        self.field = field
        self.nvars = nvars
        self._dict = acc
        self.terms = tuple(sorted(acc.items(), key=lambda t: grlex_key(t[0]), reverse=True))

    # -- constructors --

    @classmethod
    def zero(cls, field: FiniteField, nvars: int) -> Polynomial:
        return cls(field, nvars)

    @classmethod
    def constant(cls, field: FiniteField, nvars: int, c: int = 1) -> Polynomial:
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, field: FiniteField, nvars: int, i: int, e: int = 1) -> Polynomial:
        m = [0] * nvars
        m[i] = e
        return cls(field, nvars, {tuple(m): 1})

    @classmethod
    def monomial(cls, field: FiniteField, m: Monomial, c: int = 1) -> Polynomial:
        return cls(field, len(m), {tuple(m): c})

    # -- queries --

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.field == other.field and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.terms))

    def coefficient(self, m: Monomial) -> int:
        return self._dict.get(tuple(m), 0)

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms]

    @property
    def leading_monomial(self) -> Monomial | None:
        return self.terms[0][0] if self.terms else None

    @property
    def leading_coefficient(self) -> int:
        return self.terms[0][1] if self.terms else 0

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return sum(self.terms[0][0]) if self.terms else -1

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) <= 1

    # -- arithmetic --

    def _check(self, other: Polynomial):
        if self.nvars != other.nvars or self.field != other.field:
            raise DimensionMismatch("polynomials live in different rings")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        return Polynomial(self.field, self.nvars, list(self.terms) + list(other.terms))

    def __neg__(self) -> Polynomial:
        F = self.field
        return Polynomial(F, self.nvars, [(m, F.neg(c)) for m, c in self.terms])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        F = self.field
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                acc[m] = F.add(acc.get(m, 0), F.mul(c1, c2))
        return Polynomial(F, self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        result = Polynomial.constant(self.field, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int) -> Polynomial:
        F = self.field
        return Polynomial(F, self.nvars, [(m, F.mul(c, v)) for m, v in self.terms])

    def monic(self) -> Polynomial:
        """Rescale so the grlex-leading coefficient is 1."""
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient))

    # -- evaluation and substitution --

    def evaluate(self, coords: Sequence[int]) -> int:
        if len(coords) != self.nvars:
            raise DimensionMismatch(f"{len(coords)} coordinates for {self.nvars} variables")
        F = self.field
        total = 0
        for m, c in self.terms:
            v = c
            for x, e in zip(coords, m):
                if e:
                    v = F.mul(v, F.pow(x, e))
                    if not v:
                        break
            total = F.add(total, v)
        return total

    def evaluate_many(self, points: np.ndarray) -> np.ndarray:
        """Evaluate at every row of an ``(m, n+1)`` integer array."""
        F = self.field
        points = np.asarray(points)
        if points.ndim != 2 or points.shape[1] != self.nvars:
            raise DimensionMismatch(f"expected (m, {self.nvars}) coordinate array")
        out = np.zeros(points.shape[0], dtype=F.dtype)
        for m, c in self.terms:
            col = np.full(points.shape[0], c, dtype=F.dtype)
            for i, e in enumerate(m):
                if e:
                    col = F.vmul(col, F.vpow(points[:, i], e))
            out = F.vadd(out, col)
        return out

    def linear_substitute(self, j: int, shifts: Sequence[int]) -> Polynomial:
        """Substitute t_i -> t_i - shifts[i-j-1] * t_j for every i > j."""
        n = self.nvars - 1
        if not 0 <= j <= n or len(shifts) != n - j:
            raise DimensionMismatch(f"pivot {j} needs {n - j} shifts, got {len(shifts)}")
        F = self.field
        images = []
        for i in range(self.nvars):
            ti = Polynomial.var(F, self.nvars, i)
            if i > j and shifts[i - j - 1]:
                ti = ti - Polynomial.var(F, self.nvars, j).scale(shifts[i - j - 1])
            images.append(ti)
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            if (i, e) not in powers:
                powers[(i, e)] = images[i] ** e
            return powers[(i, e)]

        acc: dict[Monomial, int] = {}
        for m, c in self.terms:
            head = tuple(e if i <= j else 0 for i, e in enumerate(m))
            piece = Polynomial.monomial(F, head, c)
            for i in range(j + 1, self.nvars):
                if m[i]:
                    piece = piece * power(i, m[i])
            for mm, cc in piece.terms:
                acc[mm] = F.add(acc.get(mm, 0), cc)
        return Polynomial(F, self.nvars, acc)

    # -- text --

    def format(self) -> str:
        F = self.field
        if not self.terms:
            return "0"
        out = []
        for m, c in self.terms:
            sign = "+"
            if F.s == 1 or c < F.p:
                if F.p - c < c:
                    sign, c = "-", F.p - c
            mono = format_monomial(m)
            if c == 1:
                body = mono
            else:
                cs = F.format(c)
                if F.is_compound(c):
                    cs = f"({cs})"
                body = cs if mono == "1" else f"{cs}*{mono}"
            out.append((sign, body))
        text = out[0][1] if out[0][0] == "+" else "-" + out[0][1]
        for sign, body in out[1:]:
            text += sign + body
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r})"

    @classmethod
    def parse(cls, field: FiniteField, text: str, nvars: int | None = None) -> Polynomial:
        """Parse ``t2^3*t1+(a+1)*t0^4-t1``; ``nvars`` defaults to the largest index + 1."""
        src = text.replace(" ", "")
        if not src:
            raise ParseError("empty polynomial")
        terms = _split_top(src, "+-", keep_sign=True)
        parsed = []
        top = -1
        for sign, body in terms:
            if not body:
                raise ParseError(f"empty term in {text!r}")
            coeff = 1
            exps: dict[int, int] = {}
            for factor in _split_top(body, "*", keep_sign=False):
                factor = factor[1]
                vm = _VAR.match(factor)
                if vm:
                    i = int(vm.group(1))
                    exps[i] = exps.get(i, 0) + (int(vm.group(2)) if vm.group(2) else 1)
                    top = max(top, i)
                else:
                    coeff = field.mul(coeff, field.parse(factor))
            if sign == "-":
                coeff = field.neg(coeff)
            parsed.append((exps, coeff))
        if nvars is None:
            nvars = top + 1 if top >= 0 else 1
        if top >= nvars:
            raise DimensionMismatch(f"variable t{top} outside {nvars} variables")
        out = []
        for exps, coeff in parsed:
            m = [0] * nvars
            for i, e in exps.items():
                m[i] = e
            out.append((tuple(m), coeff))
        return cls(field, nvars, out)


_VAR = re.compile(r"^t_?(\d+)(?:\^(\d+))?$")


def _split_top(src: str, seps: str, keep_sign: bool) -> list[tuple[str, str]]:
    """Split at separator characters outside parentheses."""
    parts: list[tuple[str, str]] = []
    depth = 0
    cur = ""
    sign = "+"
    for ch in src:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {src!r}")
        if depth == 0 and ch in seps:
            if cur or not keep_sign:
                parts.append((sign, cur))
            elif keep_sign and parts:
                raise ParseError(f"doubled operator in {src!r}")
            cur = ""
            sign = ch if keep_sign else "+"
            continue
        cur += ch
    if depth:
        raise ParseError(f"unbalanced parentheses in {src!r}")
    parts.append((sign, cur))
    return parts
