"""Brute-force reference counts.

Nothing here touches the series arithmetic, the kernels, or the step-set
enumerators.  Membership in each step set is decided by its own
predicate (trial division for primes, iteration for Fibonacci numbers),
so a bug in the fast path cannot hide in shared code.
"""
from __future__ import annotations

from .steps import (All, Cap, Even, Explicit, Fibonacci, Odd, Primes, Range,
                    StepSet, Union)

PARTITION_GUARD = 60
COMPOSITION_GUARD = 20


class OracleGuardError(ValueError):
    pass


def _is_prime(k):
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


def _is_fibonacci(k):
    a, b = 0, 1
    while b < k:
        a, b = b, a + b
    return b == k


def contains(spec: StepSet, k: int) -> bool:
    if k < 1:
        return False
    if isinstance(spec, All):
        return True
    if isinstance(spec, Even):
        return k % 2 == 0
    if isinstance(spec, Odd):
        return k % 2 == 1
    if isinstance(spec, Primes):
        return _is_prime(k)
    if isinstance(spec, Fibonacci):
        return _is_fibonacci(k)
    if isinstance(spec, Range):
        return spec.lo <= k and (spec.hi is None or k <= spec.hi)
    if isinstance(spec, Explicit):
        return k in spec.values
    if isinstance(spec, Union):
        return any(contains(m, k) for m in spec.members)
    raise TypeError(f"not a step set: {spec!r}")


def _limit(cap):
    return Cap.of(cap).limit


def oracle_count_partitions(spec: StepSet, cap=None, n: int = 0) -> int:
    """Exhaustive recursion over steps in descending order."""
    if n > PARTITION_GUARD:
        raise OracleGuardError(f"oracle partition guard: n={n} > {PARTITION_GUARD}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    m_max = _limit(cap)
    steps = [k for k in range(n, 0, -1) if contains(spec, k)]

    def rec(i, remaining):
        if remaining == 0:
            return 1
        if i == len(steps):
            return 0
        s = steps[i]
        total = 0
        m = 0
        while m * s <= remaining and (m_max is None or m <= m_max):
            total += rec(i + 1, remaining - m * s)
            m += 1
        return total

    return rec(0, n)


def oracle_count_compositions(spec: StepSet, cap=None, n: int = 0) -> int:
    """Depth-first walk over ordered step sequences with usage counters."""
    if n > COMPOSITION_GUARD:
        raise OracleGuardError(f"oracle composition guard: n={n} > {COMPOSITION_GUARD}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    m_max = _limit(cap)
    steps = [k for k in range(1, n + 1) if contains(spec, k)]
    used = {s: 0 for s in steps}

    def walk(remaining):
        if remaining == 0:
            return 1
        total = 0
        for s in steps:
            if s > remaining:
                break
            if m_max is not None and used[s] >= m_max:
                continue
            used[s] += 1
            total += walk(remaining - s)
            used[s] -= 1
        return total

    return walk(n)


def oracle_list_compositions(spec: StepSet, cap=None, n: int = 0):
    """The ordered sequences themselves (small n only)."""
    if n > COMPOSITION_GUARD:
        raise OracleGuardError(f"oracle composition guard: n={n} > {COMPOSITION_GUARD}")
    m_max = _limit(cap)
    steps = [k for k in range(1, n + 1) if contains(spec, k)]
    out, seq = [], []

    def walk(remaining):
        if remaining == 0:
            out.append(tuple(seq))
            return
        for s in steps:
            if s > remaining:
                break
            if m_max is not None and seq.count(s) >= m_max:
                continue
            seq.append(s)
            walk(remaining - s)
            seq.pop()

    walk(n)
    return out
