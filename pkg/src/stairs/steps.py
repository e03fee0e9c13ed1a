"""Step-size sets and multiplicity caps.

A step set is a (possibly infinite) set of positive integers.  Infinite
families are never materialized; every consumer asks for the finite slice
``{s in S : s <= bound}`` via :func:`enumerate_upto`.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple, Union as _U


class StepSet:
    """Base class of all step-set variants."""

    def upto(self, bound: int) -> list[int]:
        raise NotImplementedError


@dataclass(frozen=True)
class All(StepSet):
    def upto(self, bound):
        return list(range(1, bound + 1))


@dataclass(frozen=True)
class Even(StepSet):
    def upto(self, bound):
        return list(range(2, bound + 1, 2))


@dataclass(frozen=True)
class Odd(StepSet):
    def upto(self, bound):
        return list(range(1, bound + 1, 2))


@dataclass(frozen=True)
class Primes(StepSet):
    def upto(self, bound):
        return primes_upto(bound)


@dataclass(frozen=True)
class Fibonacci(StepSet):
    """Distinct Fibonacci values 1, 2, 3, 5, 8, ..."""

    def upto(self, bound):
        out = []
        a, b = 1, 2
        while a <= bound:
            out.append(a)
            a, b = b, a + b
        return out


@dataclass(frozen=True)
class Range(StepSet):
    """Integers ``lo..hi``; ``hi=None`` is the open range ``lo..``.

    An open range is resolved against the query bound, which is exactly
    ``Range(lo, bound)`` for every enumeration.
    """

    lo: int
    hi: Optional[int] = None

    def __post_init__(self):
        if self.lo < 1:
            raise ValueError(f"range lower end must be >= 1, got {self.lo}")
        if self.hi is not None and self.hi < self.lo:
            raise ValueError(f"empty range {self.lo}..{self.hi}")

    @property
    def open(self) -> bool:
        return self.hi is None

    def resolve(self, n: int) -> "Range":
        if self.hi is not None:
            return self
        return Range(self.lo, max(n, self.lo))

    def upto(self, bound):
        hi = bound if self.hi is None else min(self.hi, bound)
        return list(range(self.lo, hi + 1))


@dataclass(frozen=True, init=False)
class Explicit(StepSet):
    values: Tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        vals = tuple(sorted(set(int(v) for v in values)))
        if not vals:
            raise ValueError("explicit step set must be nonempty")
        if vals[0] < 1:
            raise ValueError(f"step sizes must be positive, got {vals[0]}")
        object.__setattr__(self, "values", vals)

    def upto(self, bound):
        return [v for v in self.values if v <= bound]


@dataclass(frozen=True, init=False)
class Union(StepSet):
    members: Tuple[StepSet, ...]

    def __init__(self, members: Iterable[StepSet]):
        flat: list[StepSet] = []
        for m in members:
            if isinstance(m, Union):
                flat.extend(m.members)
            else:
                flat.append(m)
        if not flat:
            raise ValueError("union must have at least one member")
        object.__setattr__(self, "members", tuple(flat))

    def upto(self, bound):
        out = []
        for v in heapq.merge(*(m.upto(bound) for m in self.members)):
            if not out or out[-1] != v:
                out.append(v)
        return out


ALL = All()
EVEN = Even()
ODD = Odd()
PRIMES = Primes()
FIBONACCI = Fibonacci()


def enumerate_upto(spec: StepSet, bound: int) -> list[int]:
    """Elements of ``spec`` that are <= ``bound``, strictly ascending."""
    if bound < 1:
        return []
    return spec.upto(bound)


def primes_upto(bound: int) -> list[int]:
    """Sieve of Eratosthenes."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    p = 2
    while p * p <= bound:
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, bound + 1, p)))
        p += 1
    return [i for i in range(bound + 1) if sieve[i]]


@dataclass(frozen=True)
class Cap:
    """Multiplicity bound: ``limit`` is M, or None for unbounded."""

    limit: Optional[int] = None

    def __post_init__(self):
        if self.limit is not None and self.limit < 1:
            raise ValueError(f"multiplicity cap must be >= 1, got {self.limit}")

    @property
    def unbounded(self) -> bool:
        return self.limit is None

    @classmethod
    def of(cls, value: "CapLike") -> "Cap":
        if isinstance(value, Cap):
            return value
        return cls(value)

    def __str__(self):
        return "unbounded" if self.limit is None else f"M={self.limit}"


UNBOUNDED = Cap(None)

CapLike = _U[Cap, int, None]


def finite(m: int) -> Cap:
    return Cap(m)
