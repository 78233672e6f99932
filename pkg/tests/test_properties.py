import random

import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from nestedcodes.errors import BrokenTower, HilbertOverflow, InvalidInput, NonMonotone
from nestedcodes.ideal import groebner_basis, hilbert_function, is_standard, standard_monomials
from nestedcodes.invariants import (
    cayley_bacharach,
    m_value,
    reg_delta,
    reg_hilbert,
    standard_indicator,
    v_point,
    v_unit,
    v_units,
)
from nestedcodes.oracle import hilbert_oracle, v_points_oracle
from nestedcodes.variety import cardinality, enumerate_points, points_array, validate_sequence

from strategies import sequences


@given(sequences())
def test_chain_and_endpoints(sizes):
    s = validate_sequence(None, sizes)
    vs = v_units(s)
    assert all(a >= b for a, b in zip(vs, vs[1:]))
    assert vs[0] == reg_hilbert(s) and vs[-1] == reg_delta(s)
    assert cayley_bacharach(s) == (min(vs) == max(vs))


@given(sequences())
def test_m_value_is_least(sizes):
    s = validate_sequence(None, sizes)
    for j in range(1, s.n + 1):
        m = m_value(s, j)
        below = sum(d - 1 for d in s.sizes[1:j])
        assert m * (s.sizes[j] - 1) > below >= (m - 1) * (s.sizes[j] - 1)


@given(sequences())
def test_step_inequality(sizes):
    s = validate_sequence(None, sizes)
    for j in range(1, s.n):
        assert v_unit(s, j + 1) <= v_unit(s, j)


@settings(deadline=None)
@given(sequences(max_exp=6), st.lists(st.integers(0, 10**6), min_size=4, max_size=4))
def test_hilbert_stabilizes(sizes, picks):
    s = validate_sequence(None, sizes)
    r = reg_hilbert(s)
    size = cardinality(s)
    assume(size < 2**63)
    assert hilbert_function(s, r) == size
    assert hilbert_function(s, r - 1) < size
    assert hilbert_function(s, r + 3) == size
    for d in sorted({x % r for x in picks}):
        assert hilbert_function(s, d) < hilbert_function(s, d + 1)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(sequences(primes=(2, 3), max_n=4, max_exp=2, max_card=300))
def test_small_sequences_against_oracle(sizes):
    s = validate_sequence(None, sizes)
    pts = enumerate_points(s)
    assert len(pts) == cardinality(s)
    assert v_points_oracle(s) == [v_point(s, P) for P in pts]
    for d in range(reg_hilbert(s) + 2):
        assert hilbert_oracle(s, d) == hilbert_function(s, d)
    arr = points_array(s)
    for g in groebner_basis(s):
        assert not np.any(g.evaluate_many(arr))


@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(sequences(primes=(2, 3), max_n=4, max_exp=2, max_card=300), st.integers(0, 10**6))
def test_random_point_indicator(sizes, seed):
    s = validate_sequence(None, sizes)
    pts = enumerate_points(s)
    P = pts[random.Random(seed).randrange(len(pts))]
    res = standard_indicator(s, P, verify=True)
    assert res.verified and res.degree == v_point(s, P)
    assert all(is_standard(s, m) for m in res.standard.monomials())
    assert all(m[P.pivot] >= 1 for m in res.standard.monomials())
    assert any(m[P.pivot] == 1 for m in res.standard.monomials())


@given(sequences(max_exp=4), st.integers(0, 30))
def test_footprint_slice_count(sizes, d):
    s = validate_sequence(None, sizes)
    assume(hilbert_function(s, d) <= 5000)
    sl = standard_monomials(s, d)
    assert sl.count == hilbert_function(s, d) == len(set(sl.monomials))


@given(st.lists(st.sampled_from([2, 4, 8, 16]), min_size=2, max_size=6))
def test_validation_rejects_or_accepts(sizes):
    exps = [d.bit_length() - 1 for d in sizes]
    ok = all(a <= b and b % a == 0 for a, b in zip(exps, exps[1:]))
    if ok:
        validate_sequence(2, sizes)
    else:
        with pytest.raises(InvalidInput) as exc:
            validate_sequence(2, sizes)
        assert isinstance(exc.value, (BrokenTower, NonMonotone))


def test_hilbert_overflow_is_reported():
    s = validate_sequence(5, (5, 5, 125, 125, 125, 15625, 15625, 15625))
    with pytest.raises(HilbertOverflow):
        hilbert_function(s, reg_hilbert(s))
