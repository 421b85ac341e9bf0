"""Minimal deterministic SVG line plots.

Hand-rolled on purpose: the plots must be byte-stable across runs and
machines so they can live in version control and be diffed, which rules
out plotting libraries that embed timestamps, library versions, or
font-dependent metrics. Straight polylines, tick marks, text labels,
and a legend are all the case runner needs.
"""

import math
from xml.sax.saxutils import escape

WIDTH = 780
HEIGHT = 520
MARGIN_LEFT = 72
MARGIN_RIGHT = 178
MARGIN_TOP = 42
MARGIN_BOTTOM = 58

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
            "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2")


def _fmt(value):
    text = f"{value:.6g}"
    return "0" if text == "-0" else text


def _tick_values(lo, hi, want=5):
    """Round tick positions covering [lo, hi]."""
    if not math.isfinite(lo) or not math.isfinite(hi):
        return []
    if hi <= lo:
        hi = lo + 1.0
    span = hi - lo
    step = 10.0 ** math.floor(math.log10(span / want))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0, 20.0):
        if span / (step * mult) <= want:
            step *= mult
            break
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + 1e-9 * span:
        ticks.append(0.0 if abs(t) < 1e-9 * span else t)
        t += step
    return ticks


def line_plot(path, series, title="", xlabel="", ylabel="", markers=None):
    """Write one SVG with a polyline per series and optional point markers.

    series: iterable of (label, xs, ys). markers: iterable of (x, y)
    drawn as filled circles on top of the curves.
    """
    series = [(label, list(xs), list(ys)) for label, xs, ys in series]
    if not series or all(len(xs) == 0 for _, xs, _ in series):
        raise ValueError("line_plot needs at least one non-empty series")
    markers = list(markers or [])

    all_x = [x for _, xs, _ in series for x in xs] + [m[0] for m in markers]
    all_y = [y for _, _, ys in series for y in ys] + [m[1] for m in markers]
    x_lo, x_hi = min(all_x), max(all_x)
    y_lo, y_hi = min(all_y), max(all_y)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    pad_x = 0.02 * (x_hi - x_lo)
    pad_y = 0.04 * (y_hi - y_lo)
    x_lo, x_hi = x_lo - pad_x, x_hi + pad_x
    y_lo, y_hi = y_lo - pad_y, y_hi + pad_y

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def sx(x):
        return MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w

    def sy(y):
        return MARGIN_TOP + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h

    parts = []
    parts.append('<?xml version="1.0" encoding="UTF-8"?>')
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">')
    parts.append(f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>')
    parts.append(
        f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" '
        f'height="{plot_h}" fill="none" stroke="#333333" stroke-width="1"/>')

    for tx in _tick_values(x_lo, x_hi):
        px = _fmt(sx(tx))
        y0 = MARGIN_TOP + plot_h
        parts.append(f'<line x1="{px}" y1="{y0}" x2="{px}" y2="{y0 + 5}" '
                     'stroke="#333333" stroke-width="1"/>')
        parts.append(f'<text x="{px}" y="{y0 + 18}" font-family="sans-serif" '
                     f'font-size="11" text-anchor="middle">{_fmt(tx)}</text>')
    for ty in _tick_values(y_lo, y_hi):
        py = _fmt(sy(ty))
        parts.append(f'<line x1="{MARGIN_LEFT - 5}" y1="{py}" x2="{MARGIN_LEFT}" '
                     f'y2="{py}" stroke="#333333" stroke-width="1"/>')
        parts.append(f'<text x="{MARGIN_LEFT - 8}" y="{py}" font-family="sans-serif" '
                     f'font-size="11" text-anchor="end" dominant-baseline="middle">'
                     f'{_fmt(ty)}</text>')

    for idx, (label, xs, ys) in enumerate(series):
        color = _PALETTE[idx % len(_PALETTE)]
        points = " ".join(f"{_fmt(sx(x))},{_fmt(sy(y))}" for x, y in zip(xs, ys))
        parts.append(f'<polyline points="{points}" fill="none" stroke="{color}" '
                     'stroke-width="1.5"/>')
        ly = MARGIN_TOP + 14 + 16 * idx
        lx = WIDTH - MARGIN_RIGHT + 12
        parts.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 22}" y2="{ly - 4}" '
                     f'stroke="{color}" stroke-width="2"/>')
        parts.append(f'<text x="{lx + 27}" y="{ly}" font-family="sans-serif" '
                     f'font-size="11">{escape(label)}</text>')

    for mx, my in markers:
        parts.append(f'<circle cx="{_fmt(sx(mx))}" cy="{_fmt(sy(my))}" r="3.5" '
                     'fill="#d62728" stroke="white" stroke-width="1"/>')

    if title:
        parts.append(f'<text x="{MARGIN_LEFT + plot_w / 2:.6g}" y="24" '
                     'font-family="sans-serif" font-size="15" text-anchor="middle">'
                     f'{escape(title)}</text>')
    if xlabel:
        parts.append(f'<text x="{MARGIN_LEFT + plot_w / 2:.6g}" y="{HEIGHT - 14}" '
                     'font-family="sans-serif" font-size="12" text-anchor="middle">'
                     f'{escape(xlabel)}</text>')
    if ylabel:
        cx, cy = 20, MARGIN_TOP + plot_h / 2
        parts.append(f'<text x="{cx}" y="{cy:.6g}" font-family="sans-serif" '
                     f'font-size="12" text-anchor="middle" '
                     f'transform="rotate(-90 {cx} {cy:.6g})">{escape(ylabel)}</text>')

    parts.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(parts) + "\n")
    return path
