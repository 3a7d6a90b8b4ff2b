"""Point sequences induced by two-length splitting rules.

The n-th point comes from the base-(L+S) digits of n.  Indices whose
expansion contains a forbidden adjacent digit pair are skipped; the rest
are mapped into [0, 1[ by reweighting each digit and summing against
powers of the splitting ratio, radical-inverse style.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quadfield import LSParams, QuadNum, gamma_power


@dataclass(frozen=True)
class DigitVector:
    """Little-endian base-(L+S) digits of a non-negative integer."""

    digits: tuple[int, ...]
    params: LSParams

    def __post_init__(self):
        base = self.params.base
        if not self.digits:
            raise ValueError("digit vector cannot be empty")
        if any(d < 0 or d >= base for d in self.digits):
            raise ValueError(f"digits out of range for base {base}")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise ValueError("leading digit must be nonzero")

    @classmethod
    def from_int(cls, params: LSParams, n: int) -> DigitVector:
        if n < 0:
            raise ValueError(f"need n >= 0, got {n}")
        if n == 0:
            return cls((0,), params)
        ds = []
        while n:
            n, r = divmod(n, params.base)
            ds.append(r)
        return cls(tuple(ds), params)

    def to_int(self) -> int:
        v = 0
        for d in reversed(self.digits):
            v = v * self.params.base + d
        return v


def is_admissible(v: DigitVector) -> bool:
    """True when no digit pair (a_k, a_{k+1}) has a_k >= L and a_{k+1} >= 1."""
    L = v.params.L
    ds = v.digits
    return not any(ds[k] >= L and ds[k + 1] >= 1 for k in range(len(ds) - 1))


def _admissible_stream(params: LSParams):
    # Yields the admissible indices in increasing order without scanning
    # the inadmissible ones: digits are chosen most-significant first, and
    # a digit below a nonzero digit is capped at L - 1.
    base, L = params.base, params.L
    yield 0

    def extend(value: int, prev: int, remaining: int):
        if not remaining:
            yield value
            return
        top = base if prev == 0 else L
        for d in range(top):
            yield from extend(value * base + d, d, remaining - 1)

    ndigits = 1
    while True:
        for lead in range(1, base):
            yield from extend(lead, lead, ndigits - 1)
        ndigits += 1


def admissible_indices(params: LSParams, count: int) -> list[int]:
    """The first `count` admissible indices, in increasing order, from 0."""
    if count < 0:
        raise ValueError(f"need count >= 0, got {count}")
    out: list[int] = []
    if count:
        for v in _admissible_stream(params):
            out.append(v)
            if len(out) == count:
                break
    return out


def phi(params: LSParams, n: int) -> QuadNum:
    """Map an admissible index to its point in [0, 1[.

    Digit a_k contributes atilde_k * gamma**(k+1), where atilde_k equals
    a_k for a_k < L and L + gamma*(a_k - L) otherwise.  Raises ValueError
    when n is inadmissible.
    """
    v = DigitVector.from_int(params, n)
    if not is_admissible(v):
        raise ValueError(f"index {n} contains a forbidden digit pair")
    L = params.L
    acc = params.zero()
    for k, a in enumerate(v.digits):
        if not a:
            continue
        g = gamma_power(params, k + 1)
        if a < L:
            acc = acc + a * g
        else:
            acc = acc + QuadNum(L, a - L, params) * g
    return acc


class PointList1D:
    """Ordered list of exact points in [0, 1[ with cached float shadows."""

    __slots__ = ("params", "points", "_floats")

    def __init__(self, params: LSParams, points: list[QuadNum]):
        for x in points:
            if x.sign() < 0 or (x - 1).sign() >= 0:
                raise ValueError(f"point {x!r} outside [0, 1[")
        self.params = params
        self.points = list(points)
        self._floats = None

    @property
    def floats(self) -> np.ndarray:
        if self._floats is None:
            self._floats = np.array([float(x) for x in self.points])
        return self._floats

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __repr__(self) -> str:
        return f"PointList1D({len(self.points)} points, params={self.params!r})"


def sequence_prefix(params: LSParams, count: int) -> PointList1D:
    """First `count` points of the sequence; index 0 maps to the point 0."""
    pts = [phi(params, n) for n in admissible_indices(params, count)]
    return PointList1D(params, pts)
