import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stairs.engine import (ENUMERATION_LIMIT, CountQuery, EnumerationLimitError, Partition,
                           count_compositions, count_partitions, enumerate_partitions,
                           multinomial, series)
from stairs.oracle import oracle_count_compositions, oracle_count_partitions
from stairs.steps import (ALL, EVEN, FIBONACCI, ODD, PRIMES, Cap, Explicit, Range,
                          enumerate_upto)

BUILTINS = [ALL, EVEN, ODD, PRIMES, FIBONACCI, Explicit([1, 2]), Explicit([3]),
            Range(2), Range(3, 7)]
CAPS = [Cap(1), Cap(2), Cap(3), Cap(None)]


@pytest.mark.parametrize("spec,cap,expected", [
    (ALL, None, [1, 1, 2, 3, 5, 7]),
    (ALL, 1, [1, 1, 1, 2, 2, 3]),
    (ODD, 1, [1, 1, 0, 1, 1, 1]),
    (PRIMES, None, [1, 0, 1, 1, 1, 2]),
    (FIBONACCI, 1, [1, 1, 1, 2, 1, 2]),
])
def test_series_examples(backend, spec, cap, expected):
    assert series(spec, cap, 5) == expected


def test_series_empty_step_set():
    assert series(Range(10, 12), None, 5) == [1, 0, 0, 0, 0, 0]


def test_count_examples():
    assert count_partitions(EVEN, 1, 6) == 2
    assert count_partitions(Explicit([4]), None, 12) == 1
    assert count_partitions(Range(2), None, 5) == 2
    assert count_partitions(CountQuery(ALL, Cap(None), 5)) == 7
    for spec in BUILTINS:
        for cap in CAPS:
            assert count_partitions(spec, cap, 0) == 1


def test_count_exactly_k_divides():
    for k in range(1, 7):
        for n in range(0, 40):
            assert count_partitions(Explicit([k]), None, n) == (1 if n % k == 0 else 0)


def test_enumerate_examples():
    assert enumerate_partitions(ALL, None, 3) == [
        Partition({3: 1}), Partition({2: 1, 1: 1}), Partition({1: 3})]
    assert enumerate_partitions(ODD, 1, 2) == []
    assert len(enumerate_partitions(ALL, 2, 4)) == 4
    assert enumerate_partitions(ALL, None, 0) == [Partition({})]


def test_enumerate_limit():
    with pytest.raises(EnumerationLimitError, match="ENUMERATION_LIMIT=60"):
        enumerate_partitions(ALL, None, ENUMERATION_LIMIT + 1)
    with pytest.raises(EnumerationLimitError):
        count_compositions(ALL, 2, ENUMERATION_LIMIT + 1)
    assert len(enumerate_partitions(ALL, 1, 61, limit=61)) == count_partitions(ALL, 1, 61)


def test_partition_type():
    p = Partition({1: 2, 3: 1})
    assert p.total == 5
    assert list(p.parts) == [3, 1]
    assert p.steps() == [3, 1, 1]
    assert str(p) == "3^1 + 1^2"
    with pytest.raises(ValueError):
        Partition({2: 1}, total=3)
    with pytest.raises(ValueError):
        Partition({2: 0})


@pytest.mark.parametrize("spec", BUILTINS)
@pytest.mark.parametrize("cap", CAPS)
def test_enumeration_properties(spec, cap):
    steps = set(enumerate_upto(spec, 30))
    for n in range(0, 31):
        parts = enumerate_partitions(spec, cap, n)
        assert len(parts) == count_partitions(spec, cap, n)
        assert len({tuple(p.parts.items()) for p in parts}) == len(parts)
        keys = [p.steps() for p in parts]
        assert keys == sorted(keys, reverse=True)
        for p in parts:
            assert p.total == n
            assert set(p.parts) <= steps
            if cap.limit is not None:
                assert max(p.parts.values(), default=0) <= cap.limit


def test_multinomial():
    assert multinomial([1]) == 1
    assert multinomial([1, 1]) == 2
    assert multinomial([2, 1]) == len(set(itertools.permutations("aab")))
    assert multinomial([3, 2, 4]) == math.factorial(9) // (6 * 2 * 24)
    with pytest.raises(ValueError):
        multinomial([])


def test_composition_examples(backend):
    assert count_compositions(ALL, None, 3) == 4
    assert count_compositions(ALL, 1, 3) == 3
    assert count_compositions(Explicit([1, 2]), None, 4) == 5
    assert count_compositions(Explicit([2]), None, 3) == 0
    assert count_compositions(PRIMES, 2, 0) == 1


def test_compositions_powers_of_two(backend):
    for n in range(1, 21):
        assert count_compositions(ALL, None, n) == 2 ** (n - 1)


def test_capped_compositions_saturate(backend):
    for spec in (ALL, ODD, Explicit([1, 2]), PRIMES):
        for n in range(0, 26):
            assert count_compositions(spec, max(n, 1), n) == count_compositions(spec, None, n)


@pytest.mark.parametrize("spec", BUILTINS)
@pytest.mark.parametrize("cap", CAPS)
def test_partitions_match_oracle(spec, cap):
    got = series(spec, cap, 30).coeffs
    assert got == [oracle_count_partitions(spec, cap, n) for n in range(31)]


@pytest.mark.parametrize("spec", [ALL, ODD, PRIMES, Explicit([1, 2]), Range(2)])
@pytest.mark.parametrize("cap", [Cap(1), Cap(2), Cap(None)])
def test_compositions_match_oracle(spec, cap):
    for n in range(15):
        assert count_compositions(spec, cap, n) == oracle_count_compositions(spec, cap, n)


def test_euler_odd_equals_distinct(backend):
    assert series(ODD, None, 200) == series(ALL, 1, 200)


@pytest.mark.parametrize("spec", BUILTINS)
def test_cap_saturation(spec):
    m0 = enumerate_upto(spec, 60)[0]
    unbounded = series(spec, None, 60).coeffs
    for n in range(0, 61):
        m = max(1, -(-n // m0))
        assert count_partitions(spec, m, n) == unbounded[n]


def test_monotone_in_steps_and_cap():
    pairs = [(EVEN, ALL), (ODD, ALL), (PRIMES, ALL), (Explicit([3]), Range(3, 7)),
             (FIBONACCI, ALL), (Range(3, 7), Range(2))]
    for small, big in pairs:
        for cap in CAPS:
            a, b = series(small, cap, 60), series(big, cap, 60)
            assert all(x <= y for x, y in zip(a, b))
    for spec in BUILTINS:
        prev = series(spec, 1, 60)
        for cap in (2, 3, None):
            cur = series(spec, cap, 60)
            assert all(x <= y for x, y in zip(prev, cur))
            prev = cur


@given(st.sampled_from(BUILTINS), st.sampled_from(CAPS), st.integers(0, 150))
def test_coefficients_nonnegative(spec, cap, n):
    assert all(c >= 0 for c in series(spec, cap, n))


def test_series_truncations_agree():
    big = series(PRIMES, 2, 300).coeffs
    for n in (0, 1, 17, 150):
        assert series(PRIMES, 2, n).coeffs == big[:n + 1]
