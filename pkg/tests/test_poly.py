import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nestedcodes.errors import DimensionMismatch
from nestedcodes.field import build_field
from nestedcodes.poly import Polynomial, grlex_compare, grlex_key, monomials_of_degree

F4 = build_field(2, 2)
F9 = build_field(3, 2)


def P(text, F=F4, nvars=3):
    return Polynomial.parse(F, text, nvars)


@pytest.mark.parametrize("m1,m2,expected", [
    ((1, 2), (2, 1), 1),
    ((2, 0), (3, 0), -1),
    ((0, 1, 4), (0, 4, 1), 1),
    ((1, 1), (1, 1), 0),
])
def test_grlex_compare(m1, m2, expected):
    assert grlex_compare(m1, m2) == expected


def test_grlex_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        grlex_compare((1, 0), (1, 0, 0))


def test_leading_monomials_of_binomials():
    assert P("t1^2*t0+t1*t0^2").leading_monomial == (1, 2, 0)
    assert P("t2^4*t1+t2*t1^4").leading_monomial == (0, 1, 4)
    # t_i t_j (t_j^{d-1} - t_i^{d-1}) has leading monomial t_i t_j^d
    assert P("t0*t2^4-t0^4*t2", F9).leading_monomial == (1, 0, 4)


def test_frobenius_square():
    f = P("t1+t0", build_field(2, 1), 2)
    assert (f * f) == Polynomial.parse(build_field(2, 1), "t1^2+t0^2", 2)


def test_expand_fe2():
    f = P("t2") * P("t2^3+t1^3+t1*t0^2+t0^3")
    assert f.format() == "t2^4+t2*t1^3+t2*t1*t0^2+t2*t0^3"


def test_additive_inverse():
    f = P("a*t2^2+t0*t1+(a+1)*t0^2")
    assert not (f + f.scale(F4.neg(1)))


def test_evaluate_examples():
    fe2 = P("t2^4+t2*t1^3+t2*t1*t0^2+t2*t0^3")
    a = F4.a
    assert fe2.evaluate([0, 0, 1]) == 1
    # term values at (1:1:a): a^4, a*1, a*1*1, a*1 -- four copies of a
    terms = [F4.pow(a, 4), a, a, a]
    total = 0
    for t in terms:
        total = F4.add(total, t)
    assert total == 0
    assert fe2.evaluate([1, 1, a]) == 0


def test_homogeneous_scaling():
    f = P("t2^3*t1+(a+1)*t0^4+t0*t1*t2^2")
    pt = [1, F4.a, 3]
    for lam in range(1, 4):
        scaled = [F4.mul(lam, x) for x in pt]
        assert f.evaluate(scaled) == F4.mul(F4.pow(lam, 4), f.evaluate(pt))


def test_parse_format_roundtrip():
    for text in ["t2^3*t1^2+t2^3*t1*t0+t1^5+t1*t0^4", "(a+1)*t2+a*t0", "1", "t0"]:
        assert P(text).format() == text
    f = Polynomial.parse(F9, "t0*t1^3-t0^3*t1", 2)
    assert f.format() == "t1^3*t0-t1*t0^3"
    assert Polynomial.parse(F9, f.format(), 2) == f


def test_linear_substitute_identity_and_inverse():
    f = P("t2^3*t1^2+t2^3*t1*t0+t1^5+t1*t0^4")
    assert f.linear_substitute(0, [0, 0]) == f
    a = F4.a
    g = f.linear_substitute(0, [1, a])
    back = g.linear_substitute(0, [F4.neg(1), F4.neg(a)])
    assert back == f
    assert g.is_homogeneous() and g.degree == f.degree


def random_poly(rng, F, nvars, deg, nterms):
    monos = monomials_of_degree(nvars, deg)
    return Polynomial(F, nvars, [(rng.choice(monos), rng.randrange(1, F.q)) for _ in range(nterms)])


def test_evaluation_is_multiplicative_1000():
    rng = random.Random(20261019)
    for k in range(1000):
        F = F9 if k % 2 else F4
        f = random_poly(rng, F, 3, rng.randrange(0, 4), rng.randrange(1, 5))
        g = random_poly(rng, F, 3, rng.randrange(0, 4), rng.randrange(1, 5))
        pt = [rng.randrange(F.q) for _ in range(3)]
        assert (f * g).evaluate(pt) == F.mul(f.evaluate(pt), g.evaluate(pt))
        assert (f + g).evaluate(pt) == F.add(f.evaluate(pt), g.evaluate(pt))


exps = st.tuples(*[st.integers(0, 6)] * 3)


@settings(max_examples=300)
@given(exps, exps, exps)
def test_grlex_total_and_multiplicative(m1, m2, m):
    c = grlex_compare(m1, m2)
    assert c == -grlex_compare(m2, m1)
    assert (c == 0) == (m1 == m2)
    if c < 0:
        mm1 = tuple(a + b for a, b in zip(m, m1))
        mm2 = tuple(a + b for a, b in zip(m, m2))
        assert grlex_key(mm1) < grlex_key(mm2)


@settings(max_examples=100)
@given(st.integers(0, 10**6), st.integers(0, 2))
def test_substitution_preserves_degree(seed, j):
    rng = random.Random(seed)
    f = random_poly(rng, F4, 3, rng.randrange(1, 5), rng.randrange(1, 6))
    shifts = [rng.randrange(4) for _ in range(2 - j)]
    g = f.linear_substitute(j, shifts)
    assert g.is_homogeneous()
    if g:
        assert g.degree == f.degree
    assert g.linear_substitute(j, [F4.neg(s) for s in shifts]) == f
