"""Deterministic SVG rendering of threshold tables.

Hand-rolled SVG (no plotting library) so that a fixed input CSV maps to a
byte-identical output file: coordinates are formatted with fixed precision,
element order is fixed, and nothing environmental (fonts metrics, timestamps,
library versions) enters the byte stream. The chart shows P̂(min degree >= 1)
and P̂(weak Hamiltonian) with their Wilson bands against the limit curve
exp(-exp(-c)) over the c grid.
"""

from __future__ import annotations

from .errors import InputError
from .harness import Table, load_table

__all__ = ["emit_plot", "render_threshold_svg"]

_W, _H = 720.0, 480.0
_L, _R, _T, _B = 70.0, 24.0, 46.0, 56.0

_COLOR_MINDEG = "#1f77b4"
_COLOR_HAM = "#d62728"
_COLOR_THEORY = "#2ca02c"
_COLOR_AXIS = "#333333"
_COLOR_GRID = "#dddddd"


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _fmt_tick(x: float) -> str:
    return f"{x:g}"


def _px(c: float, cmin: float, cmax: float) -> float:
    span = cmax - cmin
    if span == 0.0:
        return _L + (_W - _L - _R) / 2.0
    return _L + (c - cmin) / span * (_W - _L - _R)


def _py(v: float) -> float:
    v = min(1.0, max(0.0, v))
    return _T + (1.0 - v) * (_H - _T - _B)


def _polyline(points: list[tuple[float, float]], color: str, dashed: bool = False) -> str:
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
    dash = ' stroke-dasharray="6 4"' if dashed else ""
    return (
        f'<polyline points="{pts}" fill="none" stroke="{color}" '
        f'stroke-width="1.8"{dash}/>'
    )


def _band(
    xs: list[float], los: list[float], his: list[float], color: str
) -> str:
    upper = [f"{_fmt(x)},{_fmt(_py(hi))}" for x, hi in zip(xs, his)]
    lower = [f"{_fmt(x)},{_fmt(_py(lo))}" for x, lo in reversed(list(zip(xs, los)))]
    return (
        f'<polygon points="{" ".join(upper + lower)}" fill="{color}" '
        f'fill-opacity="0.15" stroke="none"/>'
    )


def _markers(points: list[tuple[float, float]], color: str) -> str:
    return "".join(
        f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="{color}"/>'
        for x, y in points
    )


def _floats(table: Table, name: str) -> list[float | None]:
    out: list[float | None] = []
    for cell in table.column(name):
        if cell == "":
            out.append(None)
        else:
            try:
                out.append(float(cell))
            except ValueError as exc:
                raise InputError(f"column {name!r}: bad number {cell!r}") from exc
    return out


def render_threshold_svg(table: Table) -> str:
    """SVG text for a threshold/gnm table; raises InputError on any other
    schema or on an empty table."""
    if table.kind not in ("threshold", "gnm"):
        raise InputError(
            f"plot expects a threshold or gnm table, got {table.kind!r}"
        )
    if not table.rows:
        raise InputError("table has no data rows")
    needed = (
        "c", "phat_mindeg", "lo_mindeg", "hi_mindeg",
        "phat_ham", "lo_ham", "hi_ham", "theory",
    )
    for col in needed:
        if col not in table.columns:
            raise InputError(f"table is missing required column {col!r}")
    cs = [float(x) for x in table.column("c")]
    order = sorted(range(len(cs)), key=lambda i: cs[i])
    cs = [cs[i] for i in order]

    def col(name: str) -> list[float | None]:
        vals = _floats(table, name)
        return [vals[i] for i in order]

    mindeg = col("phat_mindeg")
    lo_m = col("lo_mindeg")
    hi_m = col("hi_mindeg")
    ham = col("phat_ham")
    lo_h = col("lo_ham")
    hi_h = col("hi_ham")
    theory = col("theory")
    n_label = table.column("n")[0]
    d_label = table.column("d")[0]
    trials_label = table.column("trials")[0]

    cmin, cmax = min(cs), max(cs)
    xs = [_px(c, cmin, cmax) for c in cs]

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(_W)}" '
        f'height="{int(_H)}" viewBox="0 0 {int(_W)} {int(_H)}">'
    )
    parts.append(f'<rect width="{int(_W)}" height="{int(_H)}" fill="#ffffff"/>')
    title = (
        f"weak Hamiltonicity vs isolated-vertex threshold "
        f"({table.kind}, n={n_label}, d={d_label}, {trials_label} trials/point)"
    )
    parts.append(
        f'<text x="{_fmt(_W / 2)}" y="24" font-family="sans-serif" '
        f'font-size="14" text-anchor="middle" fill="{_COLOR_AXIS}">{title}</text>'
    )
    # gridlines + y ticks
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        y = _py(frac)
        parts.append(
            f'<line x1="{_fmt(_L)}" y1="{_fmt(y)}" x2="{_fmt(_W - _R)}" '
            f'y2="{_fmt(y)}" stroke="{_COLOR_GRID}" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(_L - 8)}" y="{_fmt(y + 4)}" font-family="sans-serif" '
            f'font-size="11" text-anchor="end" fill="{_COLOR_AXIS}">{_fmt_tick(frac)}</text>'
        )
    # x ticks at data points
    for c, x in zip(cs, xs):
        parts.append(
            f'<line x1="{_fmt(x)}" y1="{_fmt(_H - _B)}" x2="{_fmt(x)}" '
            f'y2="{_fmt(_H - _B + 5)}" stroke="{_COLOR_AXIS}" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(_H - _B + 18)}" font-family="sans-serif" '
            f'font-size="11" text-anchor="middle" fill="{_COLOR_AXIS}">{_fmt_tick(c)}</text>'
        )
    # axes
    parts.append(
        f'<line x1="{_fmt(_L)}" y1="{_fmt(_T)}" x2="{_fmt(_L)}" '
        f'y2="{_fmt(_H - _B)}" stroke="{_COLOR_AXIS}" stroke-width="1.2"/>'
    )
    parts.append(
        f'<line x1="{_fmt(_L)}" y1="{_fmt(_H - _B)}" x2="{_fmt(_W - _R)}" '
        f'y2="{_fmt(_H - _B)}" stroke="{_COLOR_AXIS}" stroke-width="1.2"/>'
    )
    parts.append(
        f'<text x="{_fmt((_L + _W - _R) / 2)}" y="{_fmt(_H - 16)}" '
        f'font-family="sans-serif" font-size="12" text-anchor="middle" '
        f'fill="{_COLOR_AXIS}">c</text>'
    )
    parts.append(
        f'<text x="18" y="{_fmt((_T + _H - _B) / 2)}" font-family="sans-serif" '
        f'font-size="12" text-anchor="middle" fill="{_COLOR_AXIS}" '
        f'transform="rotate(-90 18 {_fmt((_T + _H - _B) / 2)})">probability</text>'
    )

    # bands first (underneath), then curves, then markers
    band_m = [
        (x, lo, hi)
        for x, lo, hi in zip(xs, lo_m, hi_m)
        if lo is not None and hi is not None
    ]
    if len(band_m) >= 2:
        parts.append(
            _band([x for x, _, _ in band_m], [lo for _, lo, _ in band_m],
                  [hi for _, _, hi in band_m], _COLOR_MINDEG)
        )
    band_h = [
        (x, lo, hi)
        for x, lo, hi in zip(xs, lo_h, hi_h)
        if lo is not None and hi is not None
    ]
    if len(band_h) >= 2:
        parts.append(
            _band([x for x, _, _ in band_h], [lo for _, lo, _ in band_h],
                  [hi for _, _, hi in band_h], _COLOR_HAM)
        )
    theory_pts = [
        (x, _py(v)) for x, v in zip(xs, theory) if v is not None
    ]
    if len(theory_pts) >= 2:
        parts.append(_polyline(theory_pts, _COLOR_THEORY, dashed=True))
    mindeg_pts = [(x, _py(v)) for x, v in zip(xs, mindeg) if v is not None]
    if len(mindeg_pts) >= 2:
        parts.append(_polyline(mindeg_pts, _COLOR_MINDEG))
    ham_pts = [(x, _py(v)) for x, v in zip(xs, ham) if v is not None]
    if len(ham_pts) >= 2:
        parts.append(_polyline(ham_pts, _COLOR_HAM))
    parts.append(_markers(mindeg_pts, _COLOR_MINDEG))
    parts.append(_markers(ham_pts, _COLOR_HAM))

    # legend
    legend = [
        ("P(min degree >= 1)", _COLOR_MINDEG, False),
        ("P(weak Hamiltonian), decided", _COLOR_HAM, False),
        ("limit exp(-exp(-c))", _COLOR_THEORY, True),
    ]
    ly = _T + 14
    for label, color, dashed in legend:
        dash = ' stroke-dasharray="6 4"' if dashed else ""
        parts.append(
            f'<line x1="{_fmt(_L + 10)}" y1="{_fmt(ly)}" x2="{_fmt(_L + 38)}" '
            f'y2="{_fmt(ly)}" stroke="{color}" stroke-width="1.8"{dash}/>'
        )
        parts.append(
            f'<text x="{_fmt(_L + 44)}" y="{_fmt(ly + 4)}" font-family="sans-serif" '
            f'font-size="11" fill="{_COLOR_AXIS}">{label}</text>'
        )
        ly += 16
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_plot(csv_in: str, svg_out: str) -> None:
    """Read a threshold/gnm CSV and write its SVG chart. Byte-deterministic
    for a fixed input file."""
    table = load_table(csv_in)
    svg = render_threshold_svg(table)
    with open(svg_out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)
