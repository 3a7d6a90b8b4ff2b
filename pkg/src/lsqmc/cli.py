"""Command-line interface.

Every command writes deterministic output: floats are formatted with 12
significant digits, rows carry no timestamps or machine state, so a
repeated invocation is byte-identical.  Exit status is 1 for invalid
input and 2 when a resource guard trips.
"""

from __future__ import annotations

import csv
import json
import math
import os
import sys
from contextlib import contextmanager

import click

from .discrepancy import (
    DiscrepancyReport,
    extreme_disc_1d,
    star_disc_1d,
    star_disc_2d,
)
from .errors import CapExceededError
from .partition import DEFAULT_INTERVAL_CAP, counts, left_endpoints, partition_at
from .quadfield import LSParams, make_params
from .sequence import sequence_prefix
from .square import detect_resonance, halton_pair, vdc_set

_CAP_ENV = "LSQMC_MAX_INTERVALS"


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _jfloat(x: float) -> float:
    # round-trip through the 12-digit form so JSON numbers match CSV text
    return float(_fmt(x))


def _parse_ls(text: str) -> LSParams:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected L,S (two comma-separated integers), got {text!r}")
    try:
        L, S = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"expected integer parameters, got {text!r}") from None
    return make_params(L, S)


def _interval_cap() -> int:
    raw = os.environ.get(_CAP_ENV)
    if raw is None:
        return DEFAULT_INTERVAL_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{_CAP_ENV} must be >= 1, got {cap}")
    return cap


@contextmanager
def _out_stream(path: str):
    if path == "-":
        yield sys.stdout
    else:
        f = open(path, "w", encoding="utf-8", newline="")
        try:
            yield f
        finally:
            f.close()


def _write_csv(path: str, header: list[str], rows) -> None:
    with _out_stream(path) as f:
        w = csv.writer(f)
        w.writerow(header)
        w.writerows(rows)


def _write_json(path: str, obj) -> None:
    with _out_stream(path) as f:
        json.dump(obj, f, sort_keys=True)
        f.write("\n")


def _write_svg(path: str, xf, yf, grid: bool) -> None:
    # SVG 1.1, fixed 600x600 viewport, y axis flipped to point upward
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="600" height="600" viewBox="0 0 600 600">\n',
        '<rect x="0" y="0" width="600" height="600" fill="white"/>\n',
    ]
    if grid:
        for k in range(1, 10):
            c = _fmt(60.0 * k)
            parts.append(f'<line x1="{c}" y1="0" x2="{c}" y2="600" '
                         'stroke="#cccccc" stroke-width="0.5"/>\n')
            parts.append(f'<line x1="0" y1="{c}" x2="600" y2="{c}" '
                         'stroke="#cccccc" stroke-width="0.5"/>\n')
    for x, y in zip(xf, yf):
        cx = _fmt(600.0 * x)
        cy = _fmt(600.0 * (1.0 - y))
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="1"/>\n')
    parts.append('</svg>\n')
    with _out_stream(path) as f:
        f.write("".join(parts))


def _params_json(params: LSParams | None):
    if params is None:
        return None
    return {"L": params.L, "S": params.S}


def _report_json(report: DiscrepancyReport, extra: dict) -> dict:
    w = report.witness
    obj = {
        "n_points": report.n_points,
        "value": _jfloat(report.value),
        "method": report.method,
        "witness": {
            "lower": [_jfloat(float(v)) for v in w.lower],
            "upper": [_jfloat(float(v)) for v in w.upper],
            "lower_open": w.lower_open,
            "upper_open": w.upper_open,
        },
    }
    obj.update(extra)
    return obj


@click.group()
def cli():
    """Two-length partition toolkit: point sequences, nested partitions
    and discrepancy reports for the derived 1D and 2D point sets."""


@cli.command()
@click.option("--params", "params_text", required=True, metavar="L,S",
              help="Splitting parameters, e.g. 1,1.")
@click.option("-N", "n_points", type=int, required=True,
              help="Number of points to emit.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("-o", "--output", default="-", show_default=True,
              help="Output path, - for stdout.")
def gen(params_text, n_points, fmt, output):
    """Emit the first N points of the sequence."""
    params = _parse_ls(params_text)
    pts = sequence_prefix(params, n_points)
    if fmt == "csv":
        rows = ([i, _fmt(x)] for i, x in enumerate(pts.floats))
        _write_csv(output, ["i", "x"], rows)
    else:
        _write_json(output, {
            "command": "gen",
            "params": _params_json(params),
            "n_points": len(pts),
            "points": [_jfloat(x) for x in pts.floats],
        })


@cli.command()
@click.option("--params", "params_text", required=True, metavar="L,S")
@click.option("-n", "--level", type=int, required=True,
              help="Refinement level.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("-o", "--output", default="-", show_default=True)
def partition(params_text, level, fmt, output):
    """Emit the level-n partition (one interval per row).

    Honours the LSQMC_MAX_INTERVALS environment variable as the interval
    cap (default 1000000)."""
    params = _parse_ls(params_text)
    part = partition_at(params, level, cap=_interval_cap())
    if fmt == "csv":
        rows = ([i, _fmt(float(iv.left)), _fmt(float(iv.right())), iv.len_exp]
                for i, iv in enumerate(part.intervals))
        _write_csv(output, ["i", "left", "right", "len_exp"], rows)
    else:
        _write_json(output, {
            "command": "partition",
            "params": _params_json(params),
            "level": part.level,
            "n_intervals": len(part),
            "intervals": [
                {"left": _jfloat(float(iv.left)),
                 "right": _jfloat(float(iv.right())),
                 "len_exp": iv.len_exp}
                for iv in part.intervals
            ],
        })


@cli.command()
@click.option("--params", "params_text", required=True, metavar="L,S")
@click.option("-N", "n_points", type=int, required=True)
@click.option("--mode", type=click.Choice(["star", "extreme"]),
              default="star", show_default=True)
@click.option("-o", "--output", default="-", show_default=True)
def disc1d(params_text, n_points, mode, output):
    """Discrepancy report for the first N sequence points (JSON)."""
    params = _parse_ls(params_text)
    pts = sequence_prefix(params, n_points)
    fn = star_disc_1d if mode == "star" else extreme_disc_1d
    report = fn(pts)
    _write_json(output, _report_json(report, {
        "command": "disc1d",
        "mode": mode,
        "params": _params_json(params),
    }))


@cli.command()
@click.option("--params", "params_text", default=None, metavar="L,S",
              help="Ladder-paired set from these parameters.")
@click.option("--p1", "p1_text", default=None, metavar="L,S",
              help="x-axis parameters of a coordinate-paired set.")
@click.option("--p2", "p2_text", default=None, metavar="L,S",
              help="y-axis parameters of a coordinate-paired set.")
@click.option("-N", "n_points", type=int, required=True)
@click.option("-o", "--output", default="-", show_default=True)
def disc2d(params_text, p1_text, p2_text, n_points, output):
    """2D star discrepancy report (JSON).

    Use --params L,S for the ladder-paired construction, or --p1 and
    --p2 for the coordinate-paired one."""
    if params_text is not None:
        if p1_text is not None or p2_text is not None:
            raise ValueError("--params excludes --p1/--p2")
        ps = vdc_set(_parse_ls(params_text), n_points)
        extra = {"command": "disc2d", "construction": "vdc",
                 "params": _params_json(ps.y_params)}
    else:
        if p1_text is None or p2_text is None:
            raise ValueError("need either --params or both --p1 and --p2")
        ps = halton_pair(_parse_ls(p1_text), _parse_ls(p2_text), n_points)
        extra = {"command": "disc2d", "construction": "halton",
                 "p1": _params_json(ps.x_params),
                 "p2": _params_json(ps.y_params)}
    report = star_disc_2d(ps)
    _write_json(output, _report_json(report, extra))


def _emit_2d(ps, fmt, output, grid):
    if fmt == "csv":
        rows = ([i, _fmt(x), _fmt(y)]
                for i, (x, y) in enumerate(zip(ps.xfloats, ps.yfloats)))
        _write_csv(output, ["i", "x", "y"], rows)
    elif fmt == "json":
        _write_json(output, {
            "command": "points2d",
            "p1": _params_json(ps.x_params),
            "p2": _params_json(ps.y_params),
            "n_points": len(ps),
            "points": [[_jfloat(x), _jfloat(y)]
                       for x, y in zip(ps.xfloats, ps.yfloats)],
        })
    else:
        _write_svg(output, ps.xfloats, ps.yfloats, grid)


@cli.command()
@click.option("--params", "params_text", required=True, metavar="L,S")
@click.option("-N", "n_points", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "svg"]),
              default="csv", show_default=True)
@click.option("--grid", is_flag=True, help="Overlay a 10x10 grid (svg only).")
@click.option("-o", "--output", default="-", show_default=True)
def vdc(params_text, n_points, fmt, grid, output):
    """Ladder-paired 2D set: x = k/N, y = k-th sequence point."""
    ps = vdc_set(_parse_ls(params_text), n_points)
    _emit_2d(ps, fmt, output, grid)


@cli.command()
@click.option("--p1", "p1_text", required=True, metavar="L,S")
@click.option("--p2", "p2_text", required=True, metavar="L,S")
@click.option("-N", "n_points", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "svg"]),
              default="csv", show_default=True)
@click.option("--grid", is_flag=True, help="Overlay a 10x10 grid (svg only).")
@click.option("-o", "--output", default="-", show_default=True)
def halton(p1_text, p2_text, n_points, fmt, grid, output):
    """Coordinate-paired 2D set from two sequences."""
    ps = halton_pair(_parse_ls(p1_text), _parse_ls(p2_text), n_points)
    _emit_2d(ps, fmt, output, grid)


@cli.command()
@click.option("--p1", "p1_text", required=True, metavar="L,S")
@click.option("--p2", "p2_text", required=True, metavar="L,S")
@click.option("--max-exp", type=int, default=12, show_default=True,
              help="Largest exponent tried on either side.")
@click.option("-o", "--output", default="-", show_default=True)
def resonance(p1_text, p2_text, max_exp, output):
    """Search for an exact power relation between two splitting ratios."""
    r = detect_resonance(_parse_ls(p1_text), _parse_ls(p2_text), max_exp)
    _write_json(output, {
        "command": "resonance",
        "related": r.related,
        "p": r.exponents[0] if r.exponents else None,
        "q": r.exponents[1] if r.exponents else None,
        "field_match": r.field_match,
        "count_relation": r.count_relation,
    })


def _one_minus_tau(params: LSParams) -> float:
    # decay exponent of the power-law normalisation column
    g = params.gamma_float
    return -math.log(params.S * g) / math.log(g)


@cli.command()
@click.option("--params", "params_text", required=True, metavar="L,S")
@click.option("--p2", "p2_text", default=None, metavar="L,S",
              help="Second parameter set (halton kind only).")
@click.option("--kind", type=click.Choice(["seq", "partition", "vdc", "halton"]),
              default="seq", show_default=True)
@click.option("--grid", "grid_text", required=True, metavar="N1,N2,...",
              help="Sizes to scan: point counts, or levels for kind=partition.")
@click.option("--mode", type=click.Choice(["star", "extreme"]),
              default="star", show_default=True,
              help="1D discrepancy flavour (seq and partition kinds).")
@click.option("-o", "--output", default="-", show_default=True)
def scan(params_text, p2_text, kind, grid_text, mode, output):
    """Discrepancy scan over a grid of sizes (CSV).

    Emits the raw value plus the normalisations n*D, n*D/log(n),
    n*D/log(n)^2 and n*D/n**e, where e is the power-law exponent
    -log(S*gamma)/log(gamma) of the first parameter set."""
    params = _parse_ls(params_text)
    if kind == "halton":
        if p2_text is None:
            raise ValueError("kind=halton needs --p2")
        params2 = _parse_ls(p2_text)
    elif p2_text is not None:
        raise ValueError("--p2 only applies to kind=halton")
    try:
        sizes = [int(s) for s in grid_text.split(",")]
    except ValueError:
        raise ValueError(f"bad size grid {grid_text!r}") from None
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("sizes must be integers >= 1")

    fn_1d = star_disc_1d if mode == "star" else extreme_disc_1d
    expo = _one_minus_tau(params)
    rows = []
    for size in sizes:
        if kind == "seq":
            report = fn_1d(sequence_prefix(params, size))
        elif kind == "partition":
            part = partition_at(params, size, cap=_interval_cap())
            report = fn_1d(left_endpoints(part))
        elif kind == "vdc":
            report = star_disc_2d(vdc_set(params, size))
        else:
            report = star_disc_2d(halton_pair(params, params2, size))
        n = report.n_points
        nd = n * report.value
        log_n = math.log(n) if n > 1 else float("nan")
        rows.append([
            kind, size, n, _fmt(report.value), _fmt(nd),
            _fmt(nd / log_n) if n > 1 else "nan",
            _fmt(nd / log_n ** 2) if n > 1 else "nan",
            _fmt(nd / n ** expo),
        ])
    _write_csv(output, ["kind", "size", "n_points", "value", "n_value",
                        "n_value_per_log", "n_value_per_log2",
                        "n_value_per_pow"], rows)


def main():
    try:
        rv = cli.main(standalone_mode=False)
    except CapExceededError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(2)
    except click.UsageError as e:
        click.echo(f"error: {e.format_message()}", err=True)
        sys.exit(1)
    except click.ClickException as e:
        e.show()
        sys.exit(e.exit_code)
    except ValueError as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(1)
    except click.Abort:
        sys.exit(130)
    sys.exit(rv if isinstance(rv, int) else 0)


if __name__ == "__main__":
    main()
