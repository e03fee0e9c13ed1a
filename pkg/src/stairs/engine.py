"""Counting S-partitions with bounded multiplicity, and compositions.

The number of ways to write ``n = sum(m_s * s)`` with ``s`` in a step set
and ``0 <= m_s <= M`` is the coefficient of ``x**n`` in

    prod_{s in S} (1 - x^((M+1)s)) / (1 - x^s)

Every factor with ``s > n`` is 1 modulo ``x**(n+1)``, so only the finite
slice of ``S`` up to ``n`` is ever touched.  Each factor costs O(n).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List

from . import kernels
from .series import TruncatedSeries, apply_factors_inplace, one
from .steps import Cap, CapLike, StepSet, enumerate_upto

#: Largest n accepted by enumeration-based operations.
ENUMERATION_LIMIT = 60


class EnumerationLimitError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    """One witness ``(m_s)``: step size -> multiplicity, zeros omitted.

    ``parts`` is kept in descending step order.
    """

    parts: Dict[int, int]
    total: int = field(default=-1)

    def __post_init__(self):
        parts = {s: m for s, m in sorted(self.parts.items(), reverse=True)}
        for s, m in parts.items():
            if s < 1 or m < 1:
                raise ValueError(f"invalid part {s}^{m}")
        object.__setattr__(self, "parts", parts)
        total = sum(s * m for s, m in parts.items())
        if self.total == -1:
            object.__setattr__(self, "total", total)
        elif self.total != total:
            raise ValueError(f"total {self.total} does not match parts (sum {total})")

    @property
    def length(self) -> int:
        """Number of steps taken."""
        return sum(self.parts.values())

    def steps(self) -> List[int]:
        """The parts as a descending list, e.g. ``[2, 1, 1]``."""
        return [s for s, m in self.parts.items() for _ in range(m)]

    def __str__(self):
        if not self.parts:
            return "0"
        return " + ".join(f"{s}^{m}" for s, m in self.parts.items())


@dataclass(frozen=True)
class CountQuery:
    spec: StepSet
    cap: Cap
    n: int

    def __post_init__(self):
        object.__setattr__(self, "cap", Cap.of(self.cap))
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")

    def steps(self) -> List[int]:
        return enumerate_upto(self.spec, self.n)


def series(spec: StepSet, cap: CapLike, order: int) -> TruncatedSeries:
    """Generating function of p_S^(M) truncated at ``order``."""
    f = one(order)
    apply_factors_inplace(f, enumerate_upto(spec, order), Cap.of(cap))
    return f


def count_partitions(spec: StepSet, cap: CapLike = None, n: int = 0) -> int:
    """p_S^(M)(n); accepts either ``(spec, cap, n)`` or a :class:`CountQuery`."""
    if isinstance(spec, CountQuery):
        spec, cap, n = spec.spec, spec.cap, spec.n
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return series(spec, cap, n)[n]


def _check_limit(n, limit):
    if n > limit:
        raise EnumerationLimitError(
            f"n={n} exceeds the enumeration limit ENUMERATION_LIMIT={limit}")


def enumerate_partitions(spec, cap=None, n=0, *, limit=None) -> List[Partition]:
    """All partitions counted by :func:`count_partitions`.

    Sorted lexicographically by descending part, so the largest single
    step comes first and all ones come last.
    """
    if isinstance(spec, CountQuery):
        spec, cap, n = spec.spec, spec.cap, spec.n
    limit = ENUMERATION_LIMIT if limit is None else limit
    _check_limit(n, limit)
    cap = Cap.of(cap)
    steps = enumerate_upto(spec, n)[::-1]
    out: List[Partition] = []
    chosen: Dict[int, int] = {}

    def rec(k, remaining):
        if remaining == 0:
            out.append(Partition(dict(chosen), n))
            return
        if k == len(steps):
            return
        s = steps[k]
        top = remaining // s
        if cap.limit is not None:
            top = min(top, cap.limit)
        for m in range(top, -1, -1):
            if m:
                chosen[s] = m
            else:
                chosen.pop(s, None)
            rec(k + 1, remaining - m * s)
        chosen.pop(s, None)

    rec(0, n)
    return out


def multinomial(multiplicities) -> int:
    """(sum m)! / prod(m!), built from binomials to keep operands small."""
    ms = list(multiplicities)
    if not ms:
        raise ValueError("multinomial needs at least one multiplicity")
    result, k = 1, 0
    for m in ms:
        if m < 0:
            raise ValueError(f"negative multiplicity {m}")
        k += m
        result *= math.comb(k, m)
    return result


def count_compositions(spec, cap=None, n=0, *, limit=None) -> int:
    """Ordered step sequences summing to ``n``, each size used at most M times.

    Unbounded: the forward recurrence ``c(i) = sum c(i - s)``.  Capped:
    sum of multinomials over the capped partitions, so ``n`` is subject
    to the enumeration limit.
    """
    if isinstance(spec, CountQuery):
        spec, cap, n = spec.spec, spec.cap, spec.n
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    cap = Cap.of(cap)
    if n == 0:
        return 1
    if cap.unbounded:
        return kernels.compositions(n, enumerate_upto(spec, n))[n]
    return sum(multinomial(p.parts.values())
               for p in enumerate_partitions(spec, cap, n, limit=limit))


def composition_series(spec: StepSet, order: int) -> List[int]:
    """Unbounded composition counts for 0..order."""
    return kernels.compositions(order, enumerate_upto(spec, order))
