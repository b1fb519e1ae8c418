"""Minimal self-contained SVG plotting: log-scale line panels and heatmaps.

No plotting library: the figures the CLI emits are simple enough (decade
ticks, a legend, a colorbar) that writing the markup directly keeps the
output byte-stable across runs, which the golden-hash tests rely on.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["line_panels", "heatmap_panels"]

_PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)

# viridis anchors, linearly interpolated
_CMAP = (
    (0.00, (0x44, 0x01, 0x54)),
    (0.25, (0x3B, 0x52, 0x8B)),
    (0.50, (0x21, 0x91, 0x8C)),
    (0.75, (0x5E, 0xC9, 0x62)),
    (1.00, (0xFD, 0xE7, 0x25)),
)

_HOLE_COLOR = "#d9d9d9"

_PANEL_W = 360
_PANEL_H = 300
_MARGIN_L = 64
_MARGIN_B = 46
_MARGIN_T = 30
_MARGIN_R = 14


def _color(t: float) -> str:
    t = min(1.0, max(0.0, t))
    for (t0, c0), (t1, c1) in zip(_CMAP[:-1], _CMAP[1:]):
        if t <= t1:
            f = 0.0 if t1 == t0 else (t - t0) / (t1 - t0)
            rgb = tuple(round(a + f * (b - a)) for a, b in zip(c0, c1))
            return "#{:02x}{:02x}{:02x}".format(*rgb)
    return "#fde725"


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _log_ticks(lo: float, hi: float) -> list[float]:
    first = math.ceil(math.log10(lo) - 1e-9)
    last = math.floor(math.log10(hi) + 1e-9)
    return [10.0**k for k in range(first, last + 1)]


def _lin_ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    span = hi - lo
    if span <= 0:
        return [lo]
    step = 10 ** math.floor(math.log10(span / n))
    for mult in (1, 2, 5, 10):
        if span / (step * mult) <= n:
            step *= mult
            break
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + 1e-12 * span:
        ticks.append(t)
        t += step
    return ticks


def _tick_label(value: float) -> str:
    if value != 0 and (abs(value) >= 1e4 or abs(value) < 1e-3):
        return f"{value:.0e}"
    return f"{value:g}"


class _Panel:
    """Data-to-pixel mapping for one plot area at a horizontal offset."""

    def __init__(self, index, xlim, ylim, logx, logy):
        self.x0 = index * _PANEL_W + _MARGIN_L
        self.y0 = _MARGIN_T
        self.w = _PANEL_W - _MARGIN_L - _MARGIN_R
        self.h = _PANEL_H - _MARGIN_T - _MARGIN_B
        self.xlim = xlim
        self.ylim = ylim
        self.logx = logx
        self.logy = logy

    def _scale(self, v, lim, log):
        lo, hi = lim
        if log:
            v, lo, hi = math.log10(v), math.log10(lo), math.log10(hi)
        if hi == lo:
            return 0.5
        return (v - lo) / (hi - lo)

    def px(self, x: float) -> float:
        return self.x0 + self.w * self._scale(x, self.xlim, self.logx)

    def py(self, y: float) -> float:
        return self.y0 + self.h * (1.0 - self._scale(y, self.ylim, self.logy))

    def frame(self, title, xlabel, ylabel, parts):
        parts.append(
            f'<rect x="{_fmt(self.x0)}" y="{_fmt(self.y0)}" width="{_fmt(self.w)}" '
            f'height="{_fmt(self.h)}" fill="none" stroke="#444444"/>'
        )
        parts.append(
            f'<text x="{_fmt(self.x0 + self.w / 2)}" y="{_fmt(self.y0 - 10)}" '
            f'text-anchor="middle" font-size="13" font-weight="bold">{title}</text>'
        )
        parts.append(
            f'<text x="{_fmt(self.x0 + self.w / 2)}" y="{_fmt(self.y0 + self.h + 34)}" '
            f'text-anchor="middle" font-size="12">{xlabel}</text>'
        )
        parts.append(
            f'<text x="{_fmt(self.x0 - 48)}" y="{_fmt(self.y0 + self.h / 2)}" '
            f'text-anchor="middle" font-size="12" transform="rotate(-90 '
            f'{_fmt(self.x0 - 48)} {_fmt(self.y0 + self.h / 2)})">{ylabel}</text>'
        )

    def ticks(self, parts):
        xt = _log_ticks(*self.xlim) if self.logx else _lin_ticks(*self.xlim)
        for t in xt:
            if not self.xlim[0] <= t <= self.xlim[1]:
                continue
            x = self.px(t)
            parts.append(
                f'<line x1="{_fmt(x)}" y1="{_fmt(self.y0 + self.h)}" x2="{_fmt(x)}" '
                f'y2="{_fmt(self.y0 + self.h + 4)}" stroke="#444444"/>'
            )
            parts.append(
                f'<text x="{_fmt(x)}" y="{_fmt(self.y0 + self.h + 16)}" '
                f'text-anchor="middle" font-size="10">{_tick_label(t)}</text>'
            )
        yt = _log_ticks(*self.ylim) if self.logy else _lin_ticks(*self.ylim)
        for t in yt:
            if not self.ylim[0] <= t <= self.ylim[1]:
                continue
            y = self.py(t)
            parts.append(
                f'<line x1="{_fmt(self.x0 - 4)}" y1="{_fmt(y)}" x2="{_fmt(self.x0)}" '
                f'y2="{_fmt(y)}" stroke="#444444"/>'
            )
            parts.append(
                f'<text x="{_fmt(self.x0 - 6)}" y="{_fmt(y + 3)}" '
                f'text-anchor="end" font-size="10">{_tick_label(t)}</text>'
            )


def _document(n_panels: int, parts: list[str]) -> str:
    width = n_panels * _PANEL_W
    body = "\n".join(parts)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{_PANEL_H}" viewBox="0 0 {width} {_PANEL_H}">\n'
        f'<rect width="{width}" height="{_PANEL_H}" fill="#ffffff"/>\n'
        f"{body}\n</svg>\n"
    )


def line_panels(panels, xlabel: str, logx: bool = True) -> str:
    """Render one SVG with a row of log-y line panels.

    ``panels`` is a list of (title, series) where series is a list of
    (label, x array, y array); non-finite y values are skipped.
    """
    parts: list[str] = []
    for idx, (title, series) in enumerate(panels):
        finite_x: list[float] = []
        finite_y: list[float] = []
        for _, xs, ys in series:
            for x, y in zip(xs, ys):
                if math.isfinite(y) and y > 0.0:
                    finite_x.append(float(x))
                    finite_y.append(float(y))
        if not finite_y:
            finite_x, finite_y = [1.0, 10.0], [1.0, 10.0]
        xlim = (min(finite_x), max(finite_x))
        ylim = (min(finite_y), max(finite_y))
        if xlim[0] == xlim[1]:
            xlim = (xlim[0] * 0.9, xlim[1] * 1.1)
        if ylim[0] == ylim[1]:
            ylim = (ylim[0] * 0.9, ylim[1] * 1.1)
        panel = _Panel(idx, xlim, ylim, logx and xlim[0] > 0, True)
        panel.frame(title, xlabel, "time (ns)", parts)
        panel.ticks(parts)
        for si, (label, xs, ys) in enumerate(series):
            color = _PALETTE[si % len(_PALETTE)]
            points = [
                f"{_fmt(panel.px(float(x)))},{_fmt(panel.py(float(y)))}"
                for x, y in zip(xs, ys)
                if math.isfinite(y) and y > 0.0
            ]
            if points:
                parts.append(
                    f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
                    f'points="{" ".join(points)}"/>'
                )
            ly = panel.y0 + 12 + 12 * si
            parts.append(
                f'<line x1="{_fmt(panel.x0 + panel.w - 50)}" y1="{_fmt(ly - 3)}" '
                f'x2="{_fmt(panel.x0 + panel.w - 36)}" y2="{_fmt(ly - 3)}" '
                f'stroke="{color}" stroke-width="1.5"/>'
            )
            parts.append(
                f'<text x="{_fmt(panel.x0 + panel.w - 33)}" y="{_fmt(ly)}" '
                f'font-size="9">{label}</text>'
            )
    return _document(max(1, len(panels)), parts)


def heatmap_panels(panels, xlabel: str, ylabel: str) -> str:
    """Render one SVG with a row of log-color heatmap panels.

    ``panels`` is a list of (title, x values, y values, Z) with Z shaped
    (len(x), len(y)); NaN cells are holes, +inf saturates the color scale.
    """
    parts: list[str] = []
    for idx, (title, xs, ys, z) in enumerate(panels):
        z = np.asarray(z, dtype=float)
        finite = z[np.isfinite(z) & (z > 0.0)]
        if finite.size:
            lo = float(finite.min())
            hi = float(finite.max())
        else:
            lo, hi = 1.0, 10.0
        if lo == hi:
            hi = lo * 10.0
        log_lo = math.log10(lo)
        log_hi = math.log10(hi)

        panel = _Panel(idx, (0.0, 1.0), (0.0, 1.0), False, False)
        panel.frame(title, xlabel, ylabel, parts)
        nx, ny = len(xs), len(ys)
        cw = panel.w / nx
        ch = panel.h / ny
        for i in range(nx):
            for j in range(ny):
                value = z[i, j]
                if math.isnan(value) or value <= 0.0:
                    fill = _HOLE_COLOR
                elif math.isinf(value):
                    fill = _color(1.0)
                else:
                    fill = _color((math.log10(value) - log_lo) / (log_hi - log_lo))
                x = panel.x0 + i * cw
                y = panel.y0 + panel.h - (j + 1) * ch
                parts.append(
                    f'<rect x="{_fmt(x)}" y="{_fmt(y)}" width="{_fmt(cw + 0.5)}" '
                    f'height="{_fmt(ch + 0.5)}" fill="{fill}"/>'
                )
        # axis extent labels
        parts.append(
            f'<text x="{_fmt(panel.x0)}" y="{_fmt(panel.y0 + panel.h + 16)}" '
            f'text-anchor="middle" font-size="10">{_tick_label(float(xs[0]))}</text>'
        )
        parts.append(
            f'<text x="{_fmt(panel.x0 + panel.w)}" y="{_fmt(panel.y0 + panel.h + 16)}" '
            f'text-anchor="middle" font-size="10">{_tick_label(float(xs[-1]))}</text>'
        )
        parts.append(
            f'<text x="{_fmt(panel.x0 - 6)}" y="{_fmt(panel.y0 + panel.h)}" '
            f'text-anchor="end" font-size="10">{_tick_label(float(ys[0]))}</text>'
        )
        parts.append(
            f'<text x="{_fmt(panel.x0 - 6)}" y="{_fmt(panel.y0 + 8)}" '
            f'text-anchor="end" font-size="10">{_tick_label(float(ys[-1]))}</text>'
        )
        # colorbar: min/max of the log color scale
        parts.append(
            f'<text x="{_fmt(panel.x0 + panel.w - 4)}" y="{_fmt(panel.y0 + 12)}" '
            f'text-anchor="end" font-size="9" fill="#ffffff">'
            f"[{_tick_label(lo)}, {_tick_label(hi)}] log color</text>"
        )
    return _document(max(1, len(panels)), parts)
