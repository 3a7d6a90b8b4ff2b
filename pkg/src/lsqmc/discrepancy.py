"""Discrepancy of finite point sets in [0, 1[ and [0, 1[^2.

One-dimensional values come from the sorted-order closed forms; the
two-dimensional star discrepancy comes from a sweep over the critical
grid of distinct coordinates.  Point coordinates are compared exactly
(QuadNum / Fraction), while interval lengths and reported values are
floats: candidate selection near a maximum is re-checked in exact
arithmetic, so the reported value is the float image of the exact
optimum.  Small brute-force scanners back the fast paths as oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CapExceededError
from .sequence import PointList1D

# Candidates whose float score is within this band of the float maximum
# are re-compared exactly; far outside it they cannot win, because float
# shadows are accurate to ~1e-15.
_PREFILTER_BAND = 1e-9

BRUTE_FORCE_CAP_1D = 5000
BRUTE_FORCE_CAP_2D = 500
GRID_SCAN_CAP = 100_000


@dataclass(frozen=True)
class BoxWitness:
    """An interval (1D) or axis-aligned box (2D) realising a discrepancy.

    Coordinates are exact.  The open flags record how the supremum is
    approached: a closed side includes points sitting exactly on it (a
    count surplus), an open side excludes them (a deficit).  The flags
    apply to every axis at once.
    """

    lower: tuple
    upper: tuple
    lower_open: bool
    upper_open: bool


@dataclass(frozen=True)
class DiscrepancyReport:
    n_points: int
    value: float
    witness: BoxWitness
    method: str          # "formula", "grid_scan" or "brute_force"


def _exact_list(points):
    """Normalise input to (list of exact values, float array)."""
    if isinstance(points, PointList1D):
        return list(points.points), points.floats
    pts = list(points)
    return pts, np.array([float(x) for x in pts])


def _sorted_exact(points):
    pts, _ = _exact_list(points)
    if not pts:
        raise ValueError("need at least one point")
    xs = sorted(pts)
    if xs[0] < 0 or not (xs[-1] < 1):
        raise ValueError("points must lie in [0, 1[")
    return xs


def _exact_argmax(float_vals, exact_at, prefer_last):
    """Index and exact value of the maximum, floats prefiltering.

    Exact ties go to the last (first) index when prefer_last is true
    (false); that choice makes witness point counts exact under
    duplicated coordinates.
    """
    cut = float(float_vals.max()) - _PREFILTER_BAND
    best_i = -1
    best_v = None
    for i in np.nonzero(float_vals >= cut)[0]:
        v = exact_at(int(i))
        if best_v is None or v > best_v or (prefer_last and v == best_v):
            best_i, best_v = int(i), v
    return best_i, best_v


# --- one dimension, closed forms ----------------------------------------------

def star_disc_1d(points) -> DiscrepancyReport:
    """Star discrepancy: sup over anchored intervals [0, b[.

    For sorted points the supremum is max_i of (i/N - x_i) and
    (x_i - (i-1)/N); the winner is selected exactly.
    """
    xs = _sorted_exact(points)
    n = len(xs)
    xf = np.array([float(x) for x in xs])
    idx = np.arange(1, n + 1)
    plus = idx / n - xf
    minus = xf - (idx - 1) / n
    ip, vp = _exact_argmax(plus, lambda i: Fraction(i + 1, n) - xs[i], True)
    im, vm = _exact_argmax(minus, lambda i: xs[i] - Fraction(i, n), False)
    if vm > vp:
        witness = BoxWitness((0,), (xs[im],), False, True)
        best = vm
    else:
        witness = BoxWitness((0,), (xs[ip],), False, False)
        best = vp
    return DiscrepancyReport(n, float(best), witness, "formula")


def extreme_disc_1d(points) -> DiscrepancyReport:
    """Extreme discrepancy: sup over all subintervals [a, b[.

    Closed form for sorted points: 1/N + max_i(i/N - x_i) + max_j(x_j - j/N).
    """
    xs = _sorted_exact(points)
    n = len(xs)
    xf = np.array([float(x) for x in xs])
    idx = np.arange(1, n + 1)
    over = idx / n - xf
    under = xf - idx / n
    io, vo = _exact_argmax(over, lambda i: Fraction(i + 1, n) - xs[i], True)
    iu, vu = _exact_argmax(under, lambda i: xs[i] - Fraction(i + 1, n), False)
    value = float(Fraction(1, n) + vo + vu)
    if iu <= io:
        witness = BoxWitness((xs[iu],), (xs[io],), False, False)
    else:
        witness = BoxWitness((xs[io],), (xs[iu],), True, True)
    return DiscrepancyReport(n, value, witness, "formula")


def brute_force_1d(points, mode: str = "star") -> DiscrepancyReport:
    """Exhaustive scan over all critical intervals (small N oracle).

    Candidate endpoints are the point values plus 0 and 1; closed
    intervals catch every surplus, open intervals every deficit.
    """
    if mode not in ("star", "extreme"):
        raise ValueError(f"unknown mode {mode!r}")
    xs = _sorted_exact(points)
    n = len(xs)
    if n > BRUTE_FORCE_CAP_1D:
        raise CapExceededError(f"{n} points exceed the brute-force cap")
    ends = [Fraction(0)]
    for x in xs:
        if x != ends[-1]:
            ends.append(x)
    if ends[-1] != 1:
        ends.append(Fraction(1))
    m = len(ends)
    cnt_lt = np.empty(m, dtype=np.int64)
    cnt_le = np.empty(m, dtype=np.int64)
    a = b = 0
    for k, e in enumerate(ends):
        while a < n and xs[a] < e:
            a += 1
        while b < n and xs[b] <= e:
            b += 1
        cnt_lt[k] = a
        cnt_le[k] = b
    ef = np.array([float(e) for e in ends])

    if mode == "star":
        pos = cnt_le / n - ef
        neg = ef - cnt_lt / n
        ip = int(pos.argmax())
        im = int(neg.argmax())
        if pos[ip] >= neg[im]:
            report = (float(pos[ip]),
                      BoxWitness((0,), (ends[ip],), False, False))
        else:
            report = (float(neg[im]),
                      BoxWitness((0,), (ends[im],), False, True))
        return DiscrepancyReport(n, report[0], report[1], "brute_force")

    # extreme: closed [e_i, e_j] with i <= j, open (e_i, e_j) with i < j
    pos = (cnt_le[None, :] - cnt_lt[:, None]) / n - (ef[None, :] - ef[:, None])
    neg = (ef[None, :] - ef[:, None]) - (cnt_lt[None, :] - cnt_le[:, None]) / n
    pos[np.tril_indices(m, -1)] = -np.inf
    neg[np.tril_indices(m, 0)] = -np.inf
    pi, pj = np.unravel_index(pos.argmax(), pos.shape)
    ni, nj = np.unravel_index(neg.argmax(), neg.shape)
    if pos[pi, pj] >= neg[ni, nj]:
        value = float(pos[pi, pj])
        witness = BoxWitness((ends[pi],), (ends[pj],), False, False)
    else:
        value = float(neg[ni, nj])
        witness = BoxWitness((ends[ni],), (ends[nj],), True, True)
    return DiscrepancyReport(n, value, witness, "brute_force")


# --- two dimensions -------------------------------------------------------------

def _rank(values):
    """Sort exact values; return (unique sorted list, rank array)."""
    n = len(values)
    order = sorted(range(n), key=values.__getitem__)
    uniq = []
    rank = np.empty(n, dtype=np.int64)
    for i in order:
        if not uniq or values[i] != uniq[-1]:
            uniq.append(values[i])
        rank[i] = len(uniq) - 1
    return uniq, rank


def _exact_pair(point_set):
    # PointList2D from the square module, or a plain (xs, ys) pair
    xs = getattr(point_set, "xs", None)
    ys = getattr(point_set, "ys", None)
    if xs is None or ys is None:
        xs, ys = point_set
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys):
        raise ValueError("coordinate lists differ in length")
    if not xs:
        raise ValueError("need at least one point")
    return xs, ys


def star_disc_2d(point_set, cap: int | None = GRID_SCAN_CAP) -> DiscrepancyReport:
    """Star discrepancy over anchored boxes [0, a[ x [0, b[.

    The supremum over all anchored boxes is attained on the grid spanned
    by the distinct coordinates plus 1: counts are constant between grid
    lines while the area varies monotonically.  The scan sweeps the
    x-candidates once, maintaining a y-histogram of the points seen, so
    the cost is O(#distinct-x * #distinct-y) after the exact sorts.
    """
    xs, ys = _exact_pair(point_set)
    n = len(xs)
    if cap is not None and n > cap:
        raise CapExceededError(f"{n} points exceed the grid-scan cap {cap}")
    ux, rx = _rank(xs)
    uy, ry = _rank(ys)
    mx, my = len(ux), len(uy)
    uxf = np.array([float(v) for v in ux])
    bf = np.append(np.array([float(v) for v in uy]), 1.0)

    # y-ranks grouped by x-rank, for incremental insertion
    xorder = np.argsort(rx, kind="stable")
    ry_by_x = ry[xorder]
    bounds = np.searchsorted(rx[xorder], np.arange(mx + 1))

    best = -np.inf
    best_at = ("open", 0, 0)
    hist = np.zeros(my, dtype=np.int64)
    prev_cum = np.zeros(my, dtype=np.int64)
    zero = np.zeros(1, dtype=np.int64)
    for k in range(mx + 1):
        u = uxf[k] if k < mx else 1.0
        # deficit boxes: points with x < u are exactly those inserted so far
        open_cnt = np.concatenate((zero, prev_cum))
        neg = u * bf - open_cnt / n
        j = int(neg.argmax())
        if neg[j] > best:
            best = float(neg[j])
            best_at = ("open", k, j)
        if k == mx:
            break
        hist_idx = ry_by_x[bounds[k]:bounds[k + 1]]
        np.add.at(hist, hist_idx, 1)
        cum = np.cumsum(hist)
        closed_cnt = np.append(cum, cum[-1])
        pos = closed_cnt / n - u * bf
        j = int(pos.argmax())
        if pos[j] > best:
            best = float(pos[j])
            best_at = ("closed", k, j)
        prev_cum = cum

    side, k, j = best_at
    a = ux[k] if k < mx else Fraction(1)
    b = uy[j] if j < my else Fraction(1)
    witness = BoxWitness((0, 0), (a, b), False, side == "open")
    return DiscrepancyReport(n, best, witness, "grid_scan")


def brute_force_2d(point_set, cap: int = BRUTE_FORCE_CAP_2D) -> DiscrepancyReport:
    """Exhaustive scan of every critical anchored box (small N oracle).

    Recomputes the point count of each box column from scratch through
    sorted-rank bisection, independently of the sweep in star_disc_2d.
    """
    xs, ys = _exact_pair(point_set)
    n = len(xs)
    if n > cap:
        raise CapExceededError(f"{n} points exceed the brute-force cap")
    ux, rx = _rank(xs)
    uy, ry = _rank(ys)
    mx, my = len(ux), len(uy)
    af = np.append(np.array([float(v) for v in ux]), 1.0)
    bf = np.append(np.array([float(v) for v in uy]), 1.0)
    jj = np.arange(my + 1)

    best = -np.inf
    best_at = ("open", 0, 0)
    for i in range(mx + 1):
        closed_sel = np.sort(ry[rx <= i]) if i < mx else np.sort(ry)
        open_sel = np.sort(ry[rx < i]) if i < mx else np.sort(ry)
        # counts with y-rank <= j-1 resp. <= j
        closed_cnt = np.searchsorted(closed_sel, np.minimum(jj, my - 1),
                                     side="right")
        open_cnt = np.searchsorted(open_sel, jj - 1, side="right")
        pos = closed_cnt / n - af[i] * bf
        neg = af[i] * bf - open_cnt / n
        jp = int(pos.argmax())
        jn = int(neg.argmax())
        if pos[jp] > best:
            best = float(pos[jp])
            best_at = ("closed", i, jp)
        if neg[jn] > best:
            best = float(neg[jn])
            best_at = ("open", i, jn)

    side, i, j = best_at
    a = ux[i] if i < mx else Fraction(1)
    b = uy[j] if j < my else Fraction(1)
    witness = BoxWitness((0, 0), (a, b), False, side == "open")
    return DiscrepancyReport(n, best, witness, "brute_force")


def random_boxes_max(point_set, n_boxes: int, seed: int = 0) -> float:
    """Monte Carlo lower bound: best local discrepancy over random
    anchored boxes.  Used to sanity-check the grid scan from below."""
    xs, ys = _exact_pair(point_set)
    n = len(xs)
    ux, rx = _rank(xs)
    uy, ry = _rank(ys)
    hist = np.zeros((len(ux), len(uy)), dtype=np.int64)
    np.add.at(hist, (rx, ry), 1)
    cum = hist.cumsum(axis=0).cumsum(axis=1)
    grid = np.zeros((len(ux) + 1, len(uy) + 1), dtype=np.int64)
    grid[1:, 1:] = cum
    uxf = np.array([float(v) for v in ux])
    uyf = np.array([float(v) for v in uy])
    rng = np.random.default_rng(seed)
    best = 0.0
    remaining = n_boxes
    while remaining > 0:
        chunk = min(remaining, 500_000)
        a = rng.random(chunk)
        b = rng.random(chunk)
        ia = np.searchsorted(uxf, a, side="left")
        ib = np.searchsorted(uyf, b, side="left")
        vals = np.abs(grid[ia, ib] / n - a * b)
        best = max(best, float(vals.max()))
        remaining -= chunk
    return best


# --- witness re-evaluation ---------------------------------------------------------

def _inside(x, lo, hi, lower_open, upper_open) -> bool:
    if lower_open:
        if not lo < x:
            return False
    elif not lo <= x:
        return False
    return x < hi if upper_open else x <= hi


def witness_value_1d(points, witness: BoxWitness) -> float:
    """Local discrepancy |count/N - length| of a 1D witness interval."""
    pts, _ = _exact_list(points)
    n = len(pts)
    lo, hi = witness.lower[0], witness.upper[0]
    cnt = sum(1 for x in pts
              if _inside(x, lo, hi, witness.lower_open, witness.upper_open))
    return abs(cnt / n - (float(hi) - float(lo)))


def witness_value_2d(point_set, witness: BoxWitness) -> float:
    """Local discrepancy |count/N - area| of a 2D witness box."""
    xs, ys = _exact_pair(point_set)
    n = len(xs)
    a, b = witness.upper
    lx, ly = witness.lower
    lo, uo = witness.lower_open, witness.upper_open
    cnt = sum(1 for x, y in zip(xs, ys)
              if _inside(x, lx, a, lo, uo) and _inside(y, ly, b, lo, uo))
    area = (float(a) - float(lx)) * (float(b) - float(ly))
    return abs(cnt / n - area)
