"""Deterministic SVG rendering of mixup barcodes.

Every bar is drawn as its image sub-bar [b, d') in the light color and its
mixup sub-bar [d', d) in the dark color, over a shared value axis. The
output is plain text built in a fixed order, so identical barcodes give
byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .stats import MixupBarcode


@dataclass(frozen=True)
class PlotStyle:
    width: float = 720.0
    row_height: float = 16.0
    bar_height: float = 10.0
    margin_left: float = 60.0
    margin_right: float = 20.0
    margin_top: float = 34.0
    margin_bottom: float = 30.0
    light_color: str = "#9ecae1"
    dark_color: str = "#08306b"
    axis_color: str = "#444444"
    font: str = "sans-serif"
    font_size: float = 11.0
    ticks: int = 5


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _fmt_value(x: float) -> str:
    return f"{x:.6g}"


def plot_mixup_barcode(bc: MixupBarcode, style: PlotStyle | None = None) -> str:
    """Render one degree's barcode as an SVG document string."""
    style = style or PlotStyle()
    try:
        triples = bc.clamped_triples()
    except InputError:
        raise InputError(
            "barcode holds infinite deaths and no clamp value; set a clamp before plotting"
        ) from None
    bars = sorted(triples, key=lambda t: (t.birth, -(t.death - t.birth)))

    lo = min((t.birth for t in bars), default=0.0)
    lo = min(lo, 0.0)
    hi = max((t.death for t in bars), default=0.0)
    if bc.clamp is not None:
        hi = max(hi, bc.clamp)
    if hi <= lo:
        hi = lo + 1.0
    span = hi - lo

    plot_w = style.width - style.margin_left - style.margin_right
    height = style.margin_top + max(len(bars), 1) * style.row_height + style.margin_bottom
    axis_y = height - style.margin_bottom

    def x_of(v: float) -> float:
        return style.margin_left + (v - lo) / span * plot_w

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(style.width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(style.width)} {_fmt(height)}">'
    )
    parts.append(
        f'<text x="{_fmt(style.margin_left)}" y="{_fmt(style.margin_top - 14.0)}" '
        f'font-family="{style.font}" font-size="{_fmt(style.font_size + 2.0)}" '
        f'fill="{style.axis_color}">degree {bc.degree} mixup barcode '
        f"({len(bars)} bars)</text>"
    )
    for row, t in enumerate(bars):
        y = style.margin_top + row * style.row_height
        x_b = x_of(t.birth)
        x_di = x_of(t.death_image)
        x_d = x_of(t.death)
        if x_di > x_b:
            parts.append(
                f'<rect x="{_fmt(x_b)}" y="{_fmt(y)}" width="{_fmt(x_di - x_b)}" '
                f'height="{_fmt(style.bar_height)}" fill="{style.light_color}"/>'
            )
        if x_d > x_di:
            parts.append(
                f'<rect x="{_fmt(x_di)}" y="{_fmt(y)}" width="{_fmt(x_d - x_di)}" '
                f'height="{_fmt(style.bar_height)}" fill="{style.dark_color}"/>'
            )
    parts.append(
        f'<line x1="{_fmt(style.margin_left)}" y1="{_fmt(axis_y)}" '
        f'x2="{_fmt(style.margin_left + plot_w)}" y2="{_fmt(axis_y)}" '
        f'stroke="{style.axis_color}" stroke-width="1"/>'
    )
    for i in range(style.ticks):
        v = lo + span * i / (style.ticks - 1) if style.ticks > 1 else lo
        x = x_of(v)
        parts.append(
            f'<line x1="{_fmt(x)}" y1="{_fmt(axis_y)}" x2="{_fmt(x)}" '
            f'y2="{_fmt(axis_y + 4.0)}" stroke="{style.axis_color}" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(x)}" y="{_fmt(axis_y + 16.0)}" text-anchor="middle" '
            f'font-family="{style.font}" font-size="{_fmt(style.font_size)}" '
            f'fill="{style.axis_color}">{_fmt_value(v)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
