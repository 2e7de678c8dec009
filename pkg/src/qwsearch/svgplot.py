"""Minimal deterministic SVG line charts for resource series."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .series import ResourceSeries, SeriesFormatError

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
WIDTH, HEIGHT = 720, 440
LEFT, RIGHT, TOP, BOTTOM = 70, 170, 40, 55


def _nice_ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / count
    mag = 10 ** math.floor(math.log10(raw))
    step = min((m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw), default=10 * mag)
    first = math.ceil(lo / step - 1e-9) * step
    ticks = []
    value = first
    while value <= hi + 1e-9 * step:
        ticks.append(round(value, 12))
        value += step
    return ticks


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _tick_label(x: float) -> str:
    return format(0.0 if x == 0 else x, ".6g")


def render_line_chart(series: ResourceSeries, columns: list[str], title: str = "", backend: str | None = None) -> str:
    """Render the selected numeric columns against ``t`` as an SVG document."""
    if not series.rows:
        raise SeriesFormatError("series has no data rows")
    missing = [c for c in columns if c not in series.columns]
    if missing:
        raise SeriesFormatError(f"columns not in series: {missing}")
    rows = series.rows
    if "backend" in series.columns:
        jb = series.columns.index("backend")
        backends = [r[jb] for r in rows]
        chosen = backend if backend is not None else backends[0]
        rows = [r for r, b in zip(rows, backends) if b == chosen]
    jt = series.columns.index("t")
    steps = [r[jt] for r in rows]

    data = {}
    for name in columns:
        j = series.columns.index(name)
        values = []
        for r in rows:
            v = r[j]
            if v is not None and not isinstance(v, (int, float)):
                raise SeriesFormatError(f"column {name} holds non-numeric value {v!r}")
            values.append(None if v is None or not math.isfinite(v) else float(v))
        data[name] = values
    finite = [v for vals in data.values() for v in vals if v is not None]
    if not finite:
        raise SeriesFormatError("selected columns hold no numeric data")

    x_lo, x_hi = min(steps), max(steps)
    if x_hi == x_lo:
        x_hi = x_lo + 1
    y_lo, y_hi = min(finite + [0.0]), max(finite)
    if y_hi == y_lo:
        y_hi = y_lo + 1
    pad = 0.05 * (y_hi - y_lo)
    y_hi += pad
    if y_lo < 0:
        y_lo -= pad

    plot_w = WIDTH - LEFT - RIGHT
    plot_h = HEIGHT - TOP - BOTTOM

    def sx(x):
        return LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y):
        return TOP + (y_hi - y) / (y_hi - y_lo) * plot_h

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
    ]
    if title:
        out.append(f'<text x="{WIDTH // 2}" y="22" text-anchor="middle" font-family="sans-serif" font-size="15">{escape(title)}</text>')
    out.append(
        f'<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="#000000" stroke-width="1"/>'
    )
    for tick in _nice_ticks(y_lo, y_hi):
        y = sy(tick)
        out.append(f'<line x1="{LEFT}" y1="{_fmt(y)}" x2="{LEFT + plot_w}" y2="{_fmt(y)}" stroke="#dddddd" stroke-width="0.5"/>')
        out.append(
            f'<text x="{LEFT - 6}" y="{_fmt(y + 4)}" text-anchor="end" font-family="sans-serif" font-size="11">{_tick_label(tick)}</text>'
        )
    for tick in _nice_ticks(x_lo, x_hi):
        x = sx(tick)
        out.append(f'<line x1="{_fmt(x)}" y1="{TOP + plot_h}" x2="{_fmt(x)}" y2="{TOP + plot_h + 5}" stroke="#000000" stroke-width="1"/>')
        out.append(
            f'<text x="{_fmt(x)}" y="{TOP + plot_h + 18}" text-anchor="middle" font-family="sans-serif" font-size="11">{_tick_label(tick)}</text>'
        )
    out.append(
        f'<text x="{LEFT + plot_w // 2}" y="{HEIGHT - 12}" text-anchor="middle" font-family="sans-serif" font-size="13">t</text>'
    )
    out.append(
        f'<text x="16" y="{TOP + plot_h // 2}" text-anchor="middle" font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 16 {TOP + plot_h // 2})">{escape(", ".join(columns))}</text>'
    )

    for i, name in enumerate(columns):
        color = PALETTE[i % len(PALETTE)]
        segment = []
        segments = []
        for t, v in zip(steps, data[name]):
            if v is None:
                if segment:
                    segments.append(segment)
                segment = []
            else:
                segment.append(f"{_fmt(sx(t))},{_fmt(sy(v))}")
        if segment:
            segments.append(segment)
        for seg in segments:
            out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.6" points="{" ".join(seg)}"/>')
        ly = TOP + 14 + 18 * i
        lx = LEFT + plot_w + 14
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 22}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 28}" y="{ly + 4}" font-family="sans-serif" font-size="12">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
