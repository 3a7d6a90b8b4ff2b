"""Two-dimensional point sets built from the one-dimensional sequences,
plus detection of algebraic coupling between two parameter sets.

Coupled parameters (a power of one splitting ratio equal to a power of
the other) make the coordinates of a paired construction correlate, which
shows up directly in its discrepancy; detect_resonance finds such
relations exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .partition import counts
from .quadfield import LSParams
from .sequence import sequence_prefix


@dataclass
class PointList2D:
    """A finite set of points in [0, 1[^2 with exact coordinates.

    x_params is None when the x-axis carries the plain rational ladder
    k/N instead of a digit-driven sequence.
    """

    x_params: LSParams | None
    y_params: LSParams | None
    xs: list
    ys: list
    _xf: np.ndarray | None = field(default=None, repr=False)
    _yf: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        if len(self.xs) != len(self.ys):
            raise ValueError("coordinate lists differ in length")

    def __len__(self) -> int:
        return len(self.xs)

    @property
    def xfloats(self) -> np.ndarray:
        if self._xf is None:
            self._xf = np.array([float(v) for v in self.xs])
        return self._xf

    @property
    def yfloats(self) -> np.ndarray:
        if self._yf is None:
            self._yf = np.array([float(v) for v in self.ys])
        return self._yf

    def __repr__(self) -> str:
        return (f"PointList2D({len(self.xs)} points, "
                f"x_params={self.x_params!r}, y_params={self.y_params!r})")


def vdc_set(params: LSParams, n_points: int) -> PointList2D:
    """The N-point set {(k/N, xi_k)}: uniform ladder against the first
    N sequence points, in step."""
    if n_points < 1:
        raise ValueError(f"need n_points >= 1, got {n_points}")
    ys = sequence_prefix(params, n_points).points
    xs = [Fraction(k, n_points) for k in range(n_points)]
    return PointList2D(None, params, xs, ys)


def halton_pair(x_params: LSParams, y_params: LSParams,
                n_points: int) -> PointList2D:
    """Pair the first N points of two sequences coordinate-wise."""
    if n_points < 1:
        raise ValueError(f"need n_points >= 1, got {n_points}")
    xs = sequence_prefix(x_params, n_points).points
    ys = sequence_prefix(y_params, n_points).points
    return PointList2D(x_params, y_params, xs, ys)


@dataclass(frozen=True)
class ResonanceResult:
    related: bool
    exponents: tuple[int, int] | None   # (p, q): ratio1**p == ratio2**q
    field_match: bool                   # same squarefree discriminant part
    count_relation: int | None          # k with counts2[n] == counts1[k*n]


def detect_resonance(params1: LSParams, params2: LSParams,
                     max_exp: int = 12) -> ResonanceResult:
    """Search for an exact power relation between two splitting ratios.

    Tries gamma1**p == gamma2**q for 1 <= p, q <= max_exp in exact
    square-root form, smallest p + q first (then smallest p).  When a
    relation with q == 1 exists, the level counts are checked to satisfy
    counts2[n] == counts1[p*n]; the verified stride is reported.
    """
    if max_exp < 1:
        raise ValueError(f"need max_exp >= 1, got {max_exp}")
    field_match = params1.sqrt_free == params2.sqrt_free
    if not field_match:
        return ResonanceResult(False, None, False, None)

    g1 = params1.gamma().to_sqrt_form()
    g2 = params2.gamma().to_sqrt_form()
    pow1 = [None] + [g1 ** k for k in range(1, max_exp + 1)]
    pow2 = [None] + [g2 ** k for k in range(1, max_exp + 1)]
    hit = None
    for total in range(2, 2 * max_exp + 1):
        for p in range(max(1, total - max_exp), min(max_exp, total - 1) + 1):
            q = total - p
            if pow1[p] == pow2[q]:
                hit = (p, q)
                break
        if hit:
            break
    if hit is None:
        return ResonanceResult(False, None, True, None)

    p, q = hit
    relation = None
    if q == 1:
        depth = 30
        t1 = counts(params1, p * depth).values
        t2 = counts(params2, depth).values
        if all(t2[n] == t1[p * n] for n in range(depth + 1)):
            relation = p
    return ResonanceResult(True, hit, True, relation)
