import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sparseproj.mpoly import SparsePoly
from sparseproj.rat import rat
from sparseproj.series import NonUnitSeries, SeriesRing, TruncSeries


def Z(ring, terms):
    return ring.from_shifted_poly(SparsePoly(ring.nvars, terms))


def test_mul_identity_and_truncation():
    r = SeriesRing((0,), (0,), 2)
    a = Z(r, {(0,): 3, (1,): 1, (2,): -2})
    assert a * r.constant(1) == a
    prod = (r.constant(1) + Z(r, {(1,): 1})) * (r.constant(1) - Z(r, {(1,): 1}))
    assert prod == Z(r, {(0,): 1, (2,): -1})


def test_bivariate_square():
    r = SeriesRing((0, 1), (0, 0), 2)
    s = r.constant(1) + Z(r, {(1, 0): 1, (0, 1): 1})
    assert (s * s) == Z(r, {(0, 0): 1, (1, 0): 2, (0, 1): 2,
                            (2, 0): 1, (1, 1): 2, (0, 2): 1})


def test_ring_mismatch():
    r1 = SeriesRing((0,), (0,), 2)
    r2 = SeriesRing((0,), (1,), 2)
    with pytest.raises(ValueError):
        r1.constant(1) + r2.constant(1)


def test_inverse_geometric():
    r = SeriesRing((0,), (0,), 3)
    inv = (r.constant(1) - Z(r, {(1,): 1})).inverse()
    assert inv == Z(r, {(0,): 1, (1,): 1, (2,): 1, (3,): 1})
    assert r.constant(2).inverse() == r.constant(rat(1, 2))


def test_inverse_bivariate():
    r = SeriesRing((0, 1), (0, 0), 2)
    s = r.constant(1) + Z(r, {(1, 0): 1, (0, 1): 1})
    inv = s.inverse()
    assert inv == Z(r, {(0, 0): 1, (1, 0): -1, (0, 1): -1,
                        (2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert inv * s == r.constant(1)


def test_non_unit():
    r = SeriesRing((0,), (0,), 2)
    with pytest.raises(NonUnitSeries):
        Z(r, {(1,): 1}).inverse()


def test_expand_around_shift():
    r = SeriesRing((0,), (1,), 3)
    # X^2 around 1: 1 + 2Z + Z^2
    s = r.expand_poly(SparsePoly(1, {(2,): 1}))
    assert s == Z(r, {(0,): 1, (1,): 2, (2,): 1})
    frac = r.expand_fraction(SparsePoly(1, {(0,): 1}), SparsePoly(1, {(1,): 1}))
    # 1/X around 1: 1 - Z + Z^2 - Z^3
    assert frac == Z(r, {(0,): 1, (1,): -1, (2,): 1, (3,): -1})


series_strat = st.builds(
    lambda terms: [(d, dict(t)) for d, t in terms],
    st.lists(st.tuples(st.integers(0, 4),
                       st.lists(st.tuples(st.integers(0, 4), st.integers(-9, 9)),
                                max_size=3)),
             max_size=4))


def _mk(ring, spec, skip_constant=False):
    comps = [{} for _ in range(ring.prec + 1)]
    for d, terms in spec:
        if d <= ring.prec and not (skip_constant and d == 0):
            for e1, c in terms.items():
                if c and e1 <= d:
                    comps[d][(e1, d - e1)] = rat(c)
    return TruncSeries(ring, comps, _clean=True)


@settings(max_examples=60, deadline=None)
@given(series_strat, series_strat)
def test_unit_inverse_roundtrip(sa, sb):
    ring = SeriesRing((0, 1), (0, 0), 4)
    a = _mk(ring, sa, skip_constant=True) + ring.constant(1)
    assert a.inverse() * a == ring.constant(1)
    b = _mk(ring, sb)
    assert a * b == b * a
    assert (a + b) * a == a * a + b * a
