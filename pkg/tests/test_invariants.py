import numpy as np
import pytest

from nestedcodes.errors import IndexOutOfRange, NotStandardRep, PointNotInX
from nestedcodes.ideal import is_standard, normal_form
from nestedcodes.invariants import (
    cayley_bacharach,
    indicator_raw,
    indicator_shifted,
    invariant_report,
    m_value,
    m_values,
    reg_delta,
    reg_hilbert,
    standard_indicator,
    v_point,
    v_unit,
    v_units,
    verify_indicator,
)
from nestedcodes.oracle import indicator_from_kernel
from nestedcodes.poly import Polynomial
from nestedcodes.variety import enumerate_points, parse_point, unit_point, validate_sequence


def seq(*sizes):
    return validate_sequence(None, sizes)


def m_scan(s, j):
    below = sum(d - 1 for d in s.sizes[1:j])
    m = 1
    while m * (s.sizes[j] - 1) <= below:
        m += 1
    return m


@pytest.mark.parametrize("sizes", [(2, 2, 4, 4, 16, 16), (2, 2, 2, 2, 2, 4), (3, 3, 3, 3, 9, 81),
                                   (2, 2, 2, 2, 2, 2, 2, 4), (5, 5, 5, 25), (2, 4, 16, 16)])
def test_m_value_matches_scan(sizes):
    s = seq(*sizes)
    assert m_values(s) == [m_scan(s, j) for j in range(1, s.n + 1)]
    assert m_value(s, 1) == 1


def test_m_value_examples():
    assert m_value(seq(2, 2, 4, 4, 16, 16), 5) == 2
    assert m_value(seq(2, 2, 2, 2, 2, 4), 5) == 2
    with pytest.raises(IndexOutOfRange):
        m_value(seq(2, 2, 4), 0)
    with pytest.raises(IndexOutOfRange):
        m_value(seq(2, 2, 4), 3)
    with pytest.raises(IndexOutOfRange):
        v_unit(seq(2, 2, 4), 3)


def test_v_units_examples():
    assert v_units(seq(2, 2, 4, 4, 16, 16)) == [38, 38, 37, 37, 31, 31]
    assert v_units(seq(2, 2, 4)) == [5, 5, 4]
    assert v_units(seq(2, 2, 4, 16, 256, 256)) == [530, 530, 529, 526, 511, 511]


def test_v_point_examples(ex224):
    assert v_point(ex224, parse_point(ex224, "(1:0:a)")) == 5
    assert v_point(ex224, (0, 0, 1)) == 4
    assert v_point(ex224, parse_point(ex224, "(0:1:a+1)")) == 5
    with pytest.raises(PointNotInX):
        v_point(ex224, parse_point(ex224, "(1:0:1)").coords[:2] + (7,))


def test_regularities():
    assert reg_delta(seq(2, 2, 4)) == 4
    assert reg_delta(seq(3, 3, 3, 3, 9, 81)) == 81
    assert reg_hilbert(seq(2, 2, 4)) == 5
    assert reg_hilbert(seq(2, 2, 4, 4, 16, 16)) == 38
    assert reg_hilbert(seq(2, 2)) == 2
    assert cayley_bacharach(seq(2, 2, 4)) is False
    assert cayley_bacharach(seq(2, 2, 2, 2, 4, 4)) is True


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projective_space(q, n):
    s = seq(*([q] * (n + 1)))
    assert reg_delta(s) == reg_hilbert(s) == n * (q - 1) + 1
    assert cayley_bacharach(s)


def test_report_224(ex224):
    d = invariant_report(ex224).to_dict()
    assert d == {"sequence": [2, 2, 4], "q": 4, "cardinality": 13, "reg_hilbert": 5, "reg_delta": 4,
                 "m_values": [1, 1], "v_units": [5, 5, 4], "cayley_bacharach": False}
    assert list(d) == ["sequence", "q", "cardinality", "reg_hilbert", "reg_delta", "m_values",
                       "v_units", "cayley_bacharach"]


# --- indicators ---

GOLDEN_224 = {
    0: "t2^3*t1*t0+t2^3*t0^2+t1*t0^4+t0^5",
    1: "t2^3*t1^2+t2^3*t1*t0+t1^5+t1*t0^4",
    2: "t2^4+t2*t1^3+t2*t1*t0^2+t2*t0^3",
}


@pytest.mark.parametrize("j", [0, 1, 2])
def test_standard_indicator_golden(ex224, j):
    F = ex224.field
    res = standard_indicator(ex224, unit_point(ex224, j), verify=True)
    assert res.standard == Polynomial.parse(F, GOLDEN_224[j], 3)
    assert res.standard.format() == GOLDEN_224[j]
    assert res.verified is True
    assert res.degree == res.v == [5, 5, 4][j]


def test_raw_e0_factored(ex224):
    F = ex224.field
    t0, t1, t2 = (Polynomial.var(F, 3, i) for i in range(3))
    a = F.a
    expected = t0 * (t1 + t0) * (t2 + t0) * (t2 + t0.scale(a)) * (t2 + t0.scale(F.add(a, 1)))
    assert indicator_raw(ex224, unit_point(ex224, 0)) == expected


def test_raw_e1_not_standard(ex224):
    F = ex224.field
    t0, t1, t2 = (Polynomial.var(F, 3, i) for i in range(3))
    raw = indicator_raw(ex224, unit_point(ex224, 1))
    assert raw == t1 * (t1 - t0) * (t2 ** 3 - t1 ** 3)
    assert raw.coefficient((1, 4, 0)) != 0 and not is_standard(ex224, (1, 4, 0))
    assert normal_form(ex224, raw).format() == GOLDEN_224[1]


def test_raw_e2_normal_form(ex224):
    raw = indicator_raw(ex224, unit_point(ex224, 2))
    assert raw.degree == 4
    assert normal_form(ex224, raw).format() == GOLDEN_224[2]


def test_golden_evaluations(ex224):
    F = ex224.field
    f = Polynomial.parse(F, GOLDEN_224[2], 3)
    assert f.evaluate((0, 0, 1)) == 1
    assert f.evaluate((1, 1, F.a)) == 0
    assert verify_indicator(ex224, f, (0, 0, 1))
    assert not verify_indicator(ex224, f, (0, 1, 0))
    assert not verify_indicator(ex224, Polynomial.zero(F, 3), (0, 0, 1))


def test_raw_requires_standard_rep(ex224):
    with pytest.raises(NotStandardRep):
        indicator_raw(ex224, (0, 0, ex224.field.a))
    with pytest.raises(PointNotInX):
        indicator_raw(ex224, (0, ex224.field.a, 1))


def test_shifted_identity_on_units(suite_seq):
    for j in range(suite_seq.nvars):
        e = unit_point(suite_seq, j)
        assert indicator_shifted(suite_seq, e) == indicator_raw(suite_seq, e)


def test_every_point_indicators(suite_seq):
    """Raw, shifted and standard constructions all give minimal-degree indicators."""
    s = suite_seq
    for P in enumerate_points(s):
        v = v_point(s, P)
        j = P.pivot
        raw = indicator_raw(s, P)
        shifted = indicator_shifted(s, P)
        res = standard_indicator(s, P, verify=True)
        assert raw.degree == shifted.degree == res.degree == v
        assert verify_indicator(s, raw, P) and verify_indicator(s, shifted, P) and res.verified
        std = res.standard
        assert std.leading_coefficient == 1
        assert all(is_standard(s, m) for m in std.monomials())
        # t_j divides, t_j^2 does not
        assert all(m[j] >= 1 for m in std.monomials())
        assert any(m[j] == 1 for m in std.monomials())
        # no indicator of degree <= sum_{i != j}(d_i - 1)
        assert v > sum(d - 1 for i, d in enumerate(s.sizes) if i != j)


def test_powers_of_tj(suite_seq):
    s = suite_seq
    for j in range(s.nvars):
        nf = normal_form(s, indicator_raw(s, unit_point(s, j)))
        assert all(m[j] == 1 or m[j] > s.sizes[j] - 1 for m in nf.monomials())


def test_scalar_freedom(ex224):
    F = ex224.field
    for P in enumerate_points(ex224):
        f = indicator_shifted(ex224, P)
        base = normal_form(ex224, f).monic()
        for c in range(1, F.q):
            assert normal_form(ex224, f.scale(c)).monic() == base


def test_kernel_matches_standard_indicator(suite_seq):
    for P in enumerate_points(suite_seq):
        assert indicator_from_kernel(suite_seq, P) == standard_indicator(suite_seq, P).standard


def test_inequality_chain():
    for sizes in [(2, 2, 4, 4, 16, 16), (3, 3, 9, 9, 81), (2, 2, 2, 2, 2, 4), (2, 4, 4, 16, 16, 256)]:
        s = seq(*sizes)
        vs = v_units(s)
        assert all(a >= b for a, b in zip(vs, vs[1:]))
        assert vs[0] == reg_hilbert(s) and vs[-1] == reg_delta(s) == min(vs)
