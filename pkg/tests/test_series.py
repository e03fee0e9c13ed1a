import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stairs.series import (TruncatedSeries, mul, mul_capped_factor_inplace,
                           mul_geometric_inplace, mul_one_minus_power_inplace, one)
from stairs.steps import Cap


def poly(order, exps):
    c = [0] * (order + 1)
    for e in exps:
        if e <= order:
            c[e] += 1
    return TruncatedSeries(c)


def geometric(order, s):
    return poly(order, range(0, order + 1, s))


series_st = st.integers(0, 24).flatmap(
    lambda n: st.lists(st.integers(-10**30, 10**30), min_size=n + 1, max_size=n + 1)
).map(TruncatedSeries)


def test_one():
    assert one(0) == [1]
    assert one(3) == [1, 0, 0, 0]
    f = TruncatedSeries([3, -1, 4, 1, 5, 9])
    assert mul(one(5), f) == f


def test_mul_examples():
    assert mul(poly(2, [0, 1]), poly(2, [0, 1])) == [1, 2, 1]
    assert mul(poly(6, [0, 2]), poly(6, [0, 4])) == [1, 0, 1, 0, 1, 0, 1]


def test_mul_euler_prefix():
    f = one(5)
    for s in range(1, 6):
        f = mul(f, geometric(5, s))
    assert f == [1, 1, 2, 3, 5, 7]


def test_mul_order_mismatch():
    with pytest.raises(ValueError, match="order mismatch"):
        mul(one(2), one(3))


def test_geometric(backend):
    assert mul_geometric_inplace(one(4), 2) == [1, 0, 1, 0, 1]
    assert mul_geometric_inplace(TruncatedSeries([1] * 5), 1) == [1, 2, 3, 4, 5]
    f = one(5)
    mul_geometric_inplace(f, 1)
    mul_geometric_inplace(f, 2)
    assert f == [1, 1, 2, 2, 3, 3]


def test_one_minus_power(backend):
    assert mul_one_minus_power_inplace(TruncatedSeries([1, 1, 1, 1]), 1) == [1, 0, 0, 0]
    assert mul_one_minus_power_inplace(geometric(6, 2), 6) == [1, 0, 1, 0, 1, 0, 0]
    assert mul_one_minus_power_inplace(one(3), 5) == [1, 0, 0, 0]


def test_capped_factor(backend):
    f = mul_capped_factor_inplace(one(9), 3, Cap(3))
    assert f == [1, 0, 0, 1, 0, 0, 1, 0, 0, 1]
    assert mul_capped_factor_inplace(one(5), 1, 1) == [1, 1, 0, 0, 0, 0]
    f = one(6)
    for s in range(1, 6):
        mul_capped_factor_inplace(f, s, 2)
    assert f.coeffs[:6] == [1, 1, 2, 2, 4, 5]


def test_capped_unbounded_is_geometric(backend):
    assert mul_capped_factor_inplace(one(7), 3, None) == geometric(7, 3)


@pytest.mark.parametrize("bad", [0, -1])
def test_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        mul_geometric_inplace(one(3), bad)
    with pytest.raises(ValueError):
        mul_one_minus_power_inplace(one(3), bad)


def test_capped_matches_explicit_polynomial_grid(backend):
    for n in range(0, 65):
        for s in range(1, n + 1):
            for m in (1, 2, 3):
                fast = mul_capped_factor_inplace(one(n), s, m)
                slow = mul(one(n), poly(n, [k * s for k in range(m + 1)]))
                assert fast == slow, (n, s, m)


@settings(max_examples=200, deadline=None)
@given(series_st, series_st, series_st)
def test_mul_ring_laws(f, g, h):
    n = min(f.order, g.order, h.order)
    f, g, h = (TruncatedSeries(x.coeffs[:n + 1]) for x in (f, g, h))
    assert mul(f, g) == mul(g, f)
    assert mul(mul(f, g), h) == mul(f, mul(g, h))
    assert mul(f, one(n)) == f


@settings(max_examples=200, deadline=None)
@given(series_st, st.integers(1, 30))
def test_geometric_matches_mul(f, s):
    expected = mul(f, geometric(f.order, s))
    assert mul_geometric_inplace(f.copy(), s) == expected


@settings(max_examples=200, deadline=None)
@given(series_st, st.integers(1, 30))
def test_geometric_then_subtract_restores(f, s):
    g = mul_one_minus_power_inplace(mul_geometric_inplace(f.copy(), s), s)
    assert g == f


@settings(max_examples=100, deadline=None)
@given(series_st, st.integers(1, 30))
def test_one_minus_power_matches_mul(f, j):
    expected = mul(f, TruncatedSeries([1] + [-1 if i == j else 0 for i in range(1, f.order + 1)]))
    assert mul_one_minus_power_inplace(f.copy(), j) == expected
