"""Minimal deterministic SVG writer for overlaid sine traces with event markers."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

__all__ = ["wave_plot"]

WIDTH, HEIGHT = 800, 400
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 50, 20, 30, 40
COLORS = ("#1f77b4", "#d62728", "#2ca02c")
MARKER_STYLES = {
    "event": ("#888888", "3,3"),
    "shared": ("#000000", ""),
    "zero": ("#888888", "1,3"),
}

PREAMBLE = """\
<?xml version="1.0" encoding="UTF-8" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">
<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>
"""


def _f(v: float) -> str:
    # fixed precision keeps output byte-stable across platforms
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def wave_plot(traces, window, markers=(), samples: int = 2400, title: str = "") -> str:
    """Render ``sin(2*pi*f*t)`` for each ``(label, frequency)`` in ``traces``.

    ``markers`` is a sequence of ``(time, kind)`` with kind one of
    ``'event'``, ``'shared'`` or ``'zero'``; each becomes a vertical line.
    """
    t0, t1 = window
    if not t1 > t0:
        raise ValueError("window end must be after its start")
    if len(traces) > len(COLORS):
        raise ValueError(f"at most {len(COLORS)} traces")
    pw = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    ph = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    mid = MARGIN_TOP + ph / 2

    def x_of(t):
        return MARGIN_LEFT + (t - t0) / (t1 - t0) * pw

    def y_of(v):
        return mid - v * ph / 2 * 0.9

    parts = [PREAMBLE.format(w=WIDTH, h=HEIGHT)]
    if title:
        parts.append(f'<text x="{WIDTH / 2:.0f}" y="18" text-anchor="middle" font-family="sans-serif" '
                     f'font-size="13">{escape(title)}</text>\n')
    parts.append(f'<line x1="{MARGIN_LEFT}" y1="{_f(mid)}" x2="{WIDTH - MARGIN_RIGHT}" y2="{_f(mid)}" '
                 'stroke="#000000" stroke-width="0.5"/>\n')
    parts.append(f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{pw}" height="{ph}" fill="none" '
                 'stroke="#000000" stroke-width="0.5"/>\n')
    for i in range(6):
        t = t0 + (t1 - t0) * i / 5
        x = x_of(t)
        parts.append(f'<text x="{_f(x)}" y="{HEIGHT - MARGIN_BOTTOM + 16}" text-anchor="middle" '
                     f'font-family="sans-serif" font-size="10">{t:.4f}</text>\n')
    parts.append(f'<text x="{WIDTH / 2:.0f}" y="{HEIGHT - 6}" text-anchor="middle" font-family="sans-serif" '
                 'font-size="11">time (s)</text>\n')

    for time, kind in sorted(markers):
        if not t0 <= time <= t1:
            continue
        color, dash = MARKER_STYLES[kind]
        x = _f(x_of(time))
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        parts.append(f'<line class="marker-{kind}" data-time="{time:.6f}" x1="{x}" y1="{MARGIN_TOP}" '
                     f'x2="{x}" y2="{MARGIN_TOP + ph}" stroke="{color}" stroke-width="0.8"{dash_attr}/>\n')

    for i, (label, freq) in enumerate(traces):
        pts = []
        for s in range(samples):
            t = t0 + (t1 - t0) * s / (samples - 1)
            pts.append(f"{_f(x_of(t))},{_f(y_of(math.sin(2 * math.pi * freq * t)))}")
        parts.append(f'<polyline class="trace" data-frequency="{freq:.4f}" fill="none" stroke="{COLORS[i]}" '
                     f'stroke-width="0.8" points="{" ".join(pts)}"/>\n')
        parts.append(f'<text x="{MARGIN_LEFT + 8}" y="{MARGIN_TOP + 14 + 14 * i}" font-family="sans-serif" '
                     f'font-size="11" fill="{COLORS[i]}">{escape(label)} ({freq:.2f} Hz)</text>\n')
    parts.append("</svg>\n")
    return "".join(parts)
