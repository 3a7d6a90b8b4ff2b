"""Nested interval partitions driven by a two-length splitting rule.

Level 0 is the single interval [0, 1[.  Each refinement replaces every
longest interval by L copies of the next length down followed by S copies
of the length after that, so a level-n partition contains intervals of
exactly two lengths: gamma**n and gamma**(n+1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import CapExceededError
from .quadfield import LSParams, QuadNum, gamma_power
from .sequence import PointList1D

DEFAULT_INTERVAL_CAP = 10**6


class Interval(NamedTuple):
    left: QuadNum
    len_exp: int        # the interval is [left, left + gamma**len_exp[

    def length(self) -> QuadNum:
        return gamma_power(self.left.params, self.len_exp)

    def right(self) -> QuadNum:
        return self.left + self.length()


@dataclass
class LSPartition:
    params: LSParams
    level: int
    intervals: list[Interval]

    def __len__(self) -> int:
        return len(self.intervals)

    def __repr__(self) -> str:
        return (f"LSPartition(level={self.level}, "
                f"{len(self.intervals)} intervals, params={self.params!r})")


@dataclass(frozen=True)
class CountSequence:
    params: LSParams
    values: list[int]       # values[n] = number of intervals at level n


def counts(params: LSParams, n_max: int) -> CountSequence:
    """Interval counts t_0 .. t_{n_max}: t_n = L*t_{n-1} + S*t_{n-2}."""
    if n_max < 0:
        raise ValueError(f"need n_max >= 0, got {n_max}")
    t = [1, params.base]
    while len(t) <= n_max:
        t.append(params.L * t[-1] + params.S * t[-2])
    return CountSequence(params, t[:n_max + 1])


def refine(part: LSPartition) -> LSPartition:
    """One refinement step: split every long interval, keep the short ones."""
    params = part.params
    n = part.level
    g1 = gamma_power(params, n + 1)
    g2 = gamma_power(params, n + 2)
    out: list[Interval] = []
    for left, len_exp in part.intervals:
        if len_exp == n:
            pos = left
            for _ in range(params.L):
                out.append(Interval(pos, n + 1))
                pos = pos + g1
            for _ in range(params.S):
                out.append(Interval(pos, n + 2))
                pos = pos + g2
        else:
            # short pieces of the previous level become long pieces now
            out.append(Interval(left, len_exp))
    return LSPartition(params, n + 1, out)


def partition_at(params: LSParams, level: int,
                 cap: int | None = DEFAULT_INTERVAL_CAP) -> LSPartition:
    """The level-n partition, built by n refinements of [0, 1[.

    Raises CapExceededError before any work if the final partition would
    hold more than `cap` intervals (pass cap=None to disable the guard).
    """
    if level < 0:
        raise ValueError(f"need level >= 0, got {level}")
    if cap is not None:
        total = counts(params, level).values[level]
        if total > cap:
            raise CapExceededError(
                f"level {level} holds {total} intervals, cap is {cap}")
    part = LSPartition(params, 0, [Interval(params.zero(), 0)])
    for _ in range(level):
        part = refine(part)
    return part


def left_endpoints(part: LSPartition) -> PointList1D:
    """Left endpoints of the partition, in interval order."""
    return PointList1D(part.params, [iv.left for iv in part.intervals])
