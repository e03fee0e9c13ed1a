"""Truncated formal power series with exact integer coefficients."""
from __future__ import annotations

from typing import Iterable

from . import kernels
from .steps import Cap, CapLike


class TruncatedSeries:
    """A power series known modulo ``x**(order + 1)``.

    ``coeffs[i]`` is the coefficient of ``x**i``.  The order is fixed at
    construction and no operation extends it.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = [int(v) for v in coeffs]
        if not c:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs = c

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zeros(cls, order: int) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    def copy(self) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == list(other)
        return NotImplemented

    def __mul__(self, other):
        return mul(self, other)

    def __repr__(self):
        return f"TruncatedSeries({self.coeffs!r})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms or ["0"]) + f" + O(x^{self.order + 1})"


def one(order: int) -> TruncatedSeries:
    """The constant series 1 (empty product)."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    s = TruncatedSeries.zeros(order)
    s.coeffs[0] = 1
    return s


def mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Truncated Cauchy product, O(N^2).

    Only the tests use this; the counting pipeline goes through the
    in-place factor updates below.
    """
    if f.order != g.order:
        raise ValueError(f"order mismatch: {f.order} vs {g.order}")
    a, b = f.coeffs, g.coeffs
    n = len(a)
    out = [0] * n
    for i, ai in enumerate(a):
        if ai:
            for j in range(n - i):
                out[i + j] += ai * b[j]
    return TruncatedSeries(out)


def mul_geometric_inplace(f: TruncatedSeries, s: int) -> TruncatedSeries:
    """f <- f / (1 - x^s), via an ascending running sum."""
    if s < 1:
        raise ValueError(f"step must be >= 1, got {s}")
    if s <= f.order:
        kernels.add_shifted(f.coeffs, s)
    return f


def mul_one_minus_power_inplace(f: TruncatedSeries, j: int) -> TruncatedSeries:
    """f <- f * (1 - x^j).  Descending so every read sees the old value."""
    if j < 1:
        raise ValueError(f"exponent must be >= 1, got {j}")
    if j <= f.order:
        kernels.sub_shifted(f.coeffs, j)
    return f


def mul_capped_factor_inplace(f: TruncatedSeries, s: int, cap: CapLike = None) -> TruncatedSeries:
    """f <- f * (1 + x^s + ... + x^(M s)), or f / (1 - x^s) when unbounded."""
    cap = Cap.of(cap)
    mul_geometric_inplace(f, s)
    if cap.limit is not None:
        j = (cap.limit + 1) * s
        if j <= f.order:
            mul_one_minus_power_inplace(f, j)
    return f


def apply_factors_inplace(f: TruncatedSeries, steps: Iterable[int], cap: CapLike = None) -> TruncatedSeries:
    """Apply :func:`mul_capped_factor_inplace` for each step, in one kernel call."""
    cap = Cap.of(cap)
    steps = list(steps)
    if any(s < 1 for s in steps):
        raise ValueError("step sizes must be >= 1")
    kernels.apply_factors(f.coeffs, [s for s in steps if s <= f.order], cap.limit)
    return f
