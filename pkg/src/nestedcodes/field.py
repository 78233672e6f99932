"""Finite fields F_q, q = p^s, in polynomial-basis representation.

An element is a plain ``int`` in ``range(q)`` whose base-``p`` digits are the
coefficients of the representing polynomial in the generator symbol ``a``:
``x = c_0 + c_1 p + ... + c_{s-1} p^{s-1}`` stands for
``c_0 + c_1 a + ... + c_{s-1} a^{s-1}``.  Integer order on encodings is the
canonical element order (lexicographic on coefficient vectors, high-degree
coefficient first).

Multiplication goes through exponent/log tables built once per field, addition
is XOR in characteristic 2 and digitwise otherwise.  Array versions of every
operation (``vadd``, ``vmul``, ...) work elementwise on numpy integer arrays.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    FieldTooLarge,
    NoDefaultModulus,
    NonPrimeCharacteristic,
    NotASubfieldSize,
    ParseError,
    ReducibleModulus,
    ZeroInverse,
)

MAX_FIELD_SIZE = 2**16

# Conway polynomials, coefficients listed constant term first.  Each one is
# primitive, so the residue class of x (printed as ``a``) generates F_q^*.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (3, 7): (1, 0, 2, 0, 0, 0, 0, 1),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (5, 5): (3, 4, 0, 0, 0, 1),
    (5, 6): (2, 0, 1, 4, 1, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
    (7, 5): (4, 1, 0, 0, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``n == p**e`` for prime ``p``, or ``None``."""
    if n < 2:
        return None
    p = 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        p = n
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return (p, e) if n == 1 else None


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over F_p as coefficient lists (constant term first) ---

def _poly_rem(num: list[int], den: Sequence[int], p: int) -> list[int]:
    num = list(num)
    inv_lead = pow(den[-1], p - 2, p)
    dd = len(den) - 1
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k] * inv_lead % p
        if c:
            for i in range(dd + 1):
                num[k - dd + i] = (num[k - dd + i] - c * den[i]) % p
    return num[:dd]


def _monic_polys(p: int, deg: int) -> Iterable[list[int]]:
    for idx in range(p**deg):
        coeffs = []
        for _ in range(deg):
            coeffs.append(idx % p)
            idx //= p
        yield coeffs + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree up to half."""
    s = len(modulus) - 1
    if s < 1:
        return False
    for deg in range(1, s // 2 + 1):
        for div in _monic_polys(p, deg):
            if not any(_poly_rem(list(modulus), div, p)):
                return False
    return True


@dataclass(frozen=True, eq=False)
class FiniteField:
    """The field F_p[x]/(modulus) with cached arithmetic tables.

    Build instances with :func:`build_field`; equal parameters give the same
    object, so identity comparison is meaningful.
    """

    p: int
    s: int
    modulus: tuple[int, ...]
    q: int = dc_field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.s)
        gen = self._find_generator()
        exp = np.zeros(2 * (self.q - 1), dtype=np.int64)
        log = np.full(self.q, -1, dtype=np.int64)
        x = 1
        for k in range(self.q - 1):
            exp[k] = x
            log[x] = k
            x = self._slow_mul(x, gen)
        exp[self.q - 1:] = exp[: self.q - 1]
        object.__setattr__(self, "generator", gen)
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)
        object.__setattr__(self, "_exp_list", exp.tolist())
        object.__setattr__(self, "_log_list", log.tolist())

    def __repr__(self):
        return f"GF({self.p}^{self.s})"

    def __hash__(self):
        return hash((self.p, self.s, self.modulus))

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus)

    # -- construction helpers --

    def coeffs(self, x: int) -> list[int]:
        """Coefficient vector (constant term first) of an element."""
        out = []
        for _ in range(self.s):
            out.append(x % self.p)
            x //= self.p
        return out

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.s:
            raise ValueError("too many coefficients")
        x = 0
        for c in reversed(coeffs):
            x = x * self.p + c % self.p
        return x

    def _slow_mul(self, x: int, y: int) -> int:
        a, b = self.coeffs(x), self.coeffs(y)
        prod = [0] * (2 * self.s - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % self.p
        return self.from_coeffs(_poly_rem(prod, self.modulus, self.p))

    def _slow_order(self, g: int) -> int:
        n = self.q - 1
        order = n
        for r in _prime_factors(n):
            while order % r == 0 and self._slow_pow(g, order // r) == 1:
                order //= r
        return order

    def _slow_pow(self, x: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, x)
            x = self._slow_mul(x, x)
            e >>= 1
        return result

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        if self.s == 1:
            first = (-self.modulus[0]) % self.p
        else:
            first = self.p  # the class of x
        for g in [first] + list(range(1, self.q)):
            if g and self._slow_order(g) == self.q - 1:
                return g
        raise AssertionError("no generator found")  # unreachable for a field

    # -- scalar arithmetic --

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def a(self) -> int:
        """The element printed as ``a``: x mod the modulus, or the generator if s = 1."""
        return self.p if self.s > 1 else self.generator

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        if self.s == 1:
            return (x + y) % self.p
        out, pw = 0, 1
        for _ in range(self.s):
            out += ((x % self.p + y % self.p) % self.p) * pw
            x //= self.p
            y //= self.p
            pw *= self.p
        return out

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        out, pw = 0, 1
        for _ in range(self.s):
            out += ((-(x % self.p)) % self.p) * pw
            x //= self.p
            pw *= self.p
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp_list[self._log_list[x] + self._log_list[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroInverse("zero has no multiplicative inverse")
        return self._exp_list[(self.q - 1 - self._log_list[x]) % (self.q - 1)]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        """Power by square-and-multiply; negative exponents invert first."""
        if e < 0:
            x, e = self.inv(x), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def log(self, x: int) -> int:
        if x == 0:
            raise ZeroInverse("log of zero")
        return self._log_list[x]

    def from_int(self, n: int) -> int:
        """Image of an integer under Z -> F_p -> F_q."""
        return n % self.p

    def elements(self) -> list[int]:
        return list(range(self.q))

    # -- array arithmetic --

    @property
    def dtype(self):
        return np.uint8 if self.q <= 256 else np.uint16

    def vadd(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return np.bitwise_xor(x, y)
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        out = np.zeros(np.broadcast(x, y).shape, dtype=np.int64)
        pw = 1
        for _ in range(self.s):
            out += ((x // pw + y // pw) % self.p) * pw
            pw *= self.p
        return out.astype(self.dtype)

    def vneg(self, x: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return x
        x = np.asarray(x, dtype=np.int64)
        out = np.zeros_like(x)
        pw = 1
        for _ in range(self.s):
            out += ((-(x // pw)) % self.p) * pw
            pw *= self.p
        return out.astype(self.dtype)

    def vmul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x = np.asarray(x)
        y = np.asarray(y)
        tab = self.mul_table
        if tab is not None:
            return tab[x, y]
        lx = self._log[x.astype(np.int64)]
        ly = self._log[y.astype(np.int64)]
        out = self._exp[np.maximum(lx, 0) + np.maximum(ly, 0)]
        out = np.where((lx < 0) | (ly < 0), 0, out)
        return out.astype(self.dtype)

    def vpow(self, x: np.ndarray, e: int) -> np.ndarray:
        """Elementwise ``x**e`` for a non-negative integer exponent (0**0 == 1)."""
        x = np.asarray(x, dtype=np.int64)
        if e == 0:
            return np.ones(x.shape, dtype=self.dtype)
        lx = self._log[x]
        out = self._exp[(np.maximum(lx, 0) * e) % (self.q - 1)]
        return np.where(lx < 0, 0, out).astype(self.dtype)

    def vinv(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise ZeroInverse("zero has no multiplicative inverse")
        return self._exp[(self.q - 1 - self._log[x]) % (self.q - 1)].astype(self.dtype)

    @functools.cached_property
    def mul_table(self) -> np.ndarray | None:
        """Full q x q multiplication table, materialized only for q <= 1024."""
        if self.q > 1024:
            return None
        els = np.arange(self.q)
        lx = self._log[els]
        t = self._exp[(np.maximum(lx, 0)[:, None] + np.maximum(lx, 0)[None, :])]
        t[lx < 0, :] = 0
        t[:, lx < 0] = 0
        return t.astype(self.dtype)

    # -- text --

    def format(self, x: int) -> str:
        if self.s == 1:
            return str(x)
        terms = []
        for k, c in reversed(list(enumerate(self.coeffs(x)))):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
                continue
            mono = "a" if k == 1 else f"a^{k}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def is_compound(self, x: int) -> bool:
        """True when the printed form has more than one term (needs parentheses)."""
        return sum(1 for c in self.coeffs(x) if c) > 1

    _TERM = re.compile(r"^(?:(\d+)\*?)?(a)(?:\^(\d+))?$|^(\d+)$")

    def parse(self, text: str) -> int:
        """Parse ``a^2+2*a+1``-style text; integers are read modulo p."""
        src = text.replace(" ", "")
        if src.startswith("(") and src.endswith(")"):
            src = src[1:-1]
        if not src:
            raise ParseError(f"empty field element: {text!r}")
        result = 0
        for sign, body in re.findall(r"([+-]?)([^+-]+)", src):
            m = self._TERM.match(body)
            if not m:
                raise ParseError(f"bad field element term {body!r} in {text!r}")
            if m.group(4) is not None:
                val = self.from_int(int(m.group(4)))
            else:
                c = int(m.group(1)) if m.group(1) else 1
                k = int(m.group(3)) if m.group(3) else 1
                val = self.mul(self.from_int(c), self.pow(self.a, k))
            result = self.sub(result, val) if sign == "-" else self.add(result, val)
        if re.sub(r"([+-]?)([^+-]+)", "", src):
            raise ParseError(f"cannot parse field element {text!r}")
        return result

    # -- subfields --

    def subfield_elements(self, d: int) -> list[int]:
        return subfield_elements(self, d)


def build_field(p: int, s: int = 1, modulus: Sequence[int] | None = None) -> FiniteField:
    """Validate parameters and return the (cached) field F_{p^s}.

    ``modulus`` lists the s+1 coefficients of a monic irreducible polynomial,
    constant term first; when omitted a bundled Conway polynomial is used.
    """
    mod = None if modulus is None else tuple(int(c) for c in modulus)
    return _build_field(p, s, mod)


@functools.lru_cache(maxsize=None)
def _build_field(p: int, s: int, modulus: tuple[int, ...] | None) -> FiniteField:
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if s < 1 or s > 16:
        raise FieldTooLarge(f"extension degree {s} outside 1..16")
    if p**s > MAX_FIELD_SIZE:
        raise FieldTooLarge(f"field size {p}^{s} exceeds {MAX_FIELD_SIZE}")
    if modulus is None:
        if (p, s) not in DEFAULT_MODULI:
            raise NoDefaultModulus(f"no bundled modulus for p={p}, s={s}; pass one")
        mod = DEFAULT_MODULI[(p, s)]
    else:
        mod = tuple(c % p for c in modulus)
        if len(mod) != s + 1 or mod[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {s}: {list(modulus)}")
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"modulus {list(modulus)} is reducible over F_{p}")
    return _make_field(p, s, mod)


@functools.lru_cache(maxsize=None)
def _make_field(p: int, s: int, modulus: tuple[int, ...]) -> FiniteField:
    return FiniteField(p, s, modulus)


def field_of_size(q: int, modulus: Sequence[int] | None = None) -> FiniteField:
    pp = prime_power(q)
    if pp is None:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    return build_field(pp[0], pp[1], modulus)


@functools.lru_cache(maxsize=None)
def _subfield(F: FiniteField, d: int) -> tuple[int, ...]:
    els = np.arange(F.q, dtype=np.int64)
    fixed = F.vpow(els, d).astype(np.int64) == els
    return tuple(int(x) for x in np.nonzero(fixed)[0])


def subfield_elements(F: FiniteField, d: int) -> list[int]:
    """The unique subfield of size ``d``: all x with x^d = x, in canonical order."""
    pp = prime_power(d)
    if pp is None or pp[0] != F.p or F.s % pp[1]:
        raise NotASubfieldSize(f"{d} is not the size of a subfield of {F!r}")
    return list(_subfield(F, d))


@dataclass(frozen=True)
class FieldTower:
    """Chain of subfields K_0 <= ... <= K_n inside one ambient field."""

    field: FiniteField
    sizes: tuple[int, ...]
    levels: tuple[tuple[int, ...], ...] = dc_field(init=False, repr=False)

    def __post_init__(self):
        levels = tuple(tuple(subfield_elements(self.field, d)) for d in self.sizes)
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "_membership", [frozenset(lv) for lv in levels])

    def contains(self, level: int, x: int) -> bool:
        return x in self._membership[level]
