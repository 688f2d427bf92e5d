"""
Minimal SVG line plots rendered through a jinja2 template.
"""

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import jinja2

from sea_mtt.config import write_atomic

TEMPLATE_DIR = Path(__file__).parent.parent / "templates"
PLOT_TEMPLATE = "plot.svg.j2"

WIDTH = 720
HEIGHT = 480
MARGIN_LEFT = 70
MARGIN_RIGHT = 150
MARGIN_TOP = 40
MARGIN_BOTTOM = 55


@dataclass
class Series:
    """One polyline of a plot."""

    label: str
    x: Sequence[float]
    y: Sequence[float]
    color: str = "#c0392b"
    dashed: bool = False


@dataclass
class Axis:
    """Data range of one axis mapped onto a pixel span."""

    lo: float
    hi: float
    log: bool
    start: float
    end: float

    def _t(self, v: float) -> float:
        return math.log10(v) if self.log else v

    def px(self, v: float) -> float:
        a, b = self._t(self.lo), self._t(self.hi)
        return self.start + (self._t(v) - a) / (b - a) * (self.end - self.start)

    def ticks(self) -> list[float]:
        if self.log:
            first = math.floor(math.log10(self.lo))
            last = math.ceil(math.log10(self.hi))
            return [10.0**k for k in range(first, last + 1) if self.lo <= 10.0**k <= self.hi]
        step = (self.hi - self.lo) / 5.0
        return [self.lo + k * step for k in range(6)]


def _usable(v: float, log: bool) -> bool:
    return math.isfinite(v) and (v > 0 or not log)


def _bounds(values: list[float], log: bool, extra: Optional[float] = None) -> tuple[float, float]:
    vals = [v for v in values if _usable(v, log)]
    if extra is not None:
        vals.append(extra)
    if not vals:
        return (1.0, 10.0) if log else (0.0, 1.0)
    lo, hi = min(vals), max(vals)
    if log:
        lo = 10.0 ** math.floor(math.log10(lo))
        hi = 10.0 ** math.ceil(math.log10(hi))
        if lo == hi:
            hi = lo * 10.0
    elif lo == hi:
        lo, hi = lo - 0.5, hi + 0.5
    return lo, hi


def _segments(series: Series, xa: Axis, ya: Axis) -> list[str]:
    """Polyline point lists, broken wherever a sample cannot be drawn."""
    segments, current = [], []
    for x, y in zip(series.x, series.y):
        if _usable(x, xa.log) and _usable(y, ya.log):
            current.append(f"{xa.px(x):.2f},{ya.px(y):.2f}")
        elif current:
            segments.append(" ".join(current))
            current = []
    if current:
        segments.append(" ".join(current))
    return segments


def render_plot(
    series: list[Series],
    title: str,
    x_label: str,
    y_label: str,
    log_x: bool = True,
    log_y: bool = True,
    threshold: Optional[float] = None,
) -> str:
    """Render the series as an SVG document string."""
    xs = [float(v) for s in series for v in s.x]
    ys = [float(v) for s in series for v in s.y]
    x_lo, x_hi = _bounds(xs, log_x)
    y_lo, y_hi = _bounds(ys, log_y, threshold)
    xa = Axis(x_lo, x_hi, log_x, MARGIN_LEFT, WIDTH - MARGIN_RIGHT)
    ya = Axis(y_lo, y_hi, log_y, HEIGHT - MARGIN_BOTTOM, MARGIN_TOP)

    env = jinja2.Environment(
        loader=jinja2.FileSystemLoader(TEMPLATE_DIR),
        autoescape=jinja2.select_autoescape(["svg", "j2"]),
        keep_trailing_newline=True,
    )
    template = env.get_template(PLOT_TEMPLATE)
    return template.render(
        width=WIDTH,
        height=HEIGHT,
        title=title,
        x_label=x_label,
        y_label=y_label,
        plot={
            "left": MARGIN_LEFT,
            "right": WIDTH - MARGIN_RIGHT,
            "top": MARGIN_TOP,
            "bottom": HEIGHT - MARGIN_BOTTOM,
        },
        x_ticks=[{"px": f"{xa.px(t):.2f}", "label": f"{t:g}"} for t in xa.ticks()],
        y_ticks=[{"px": f"{ya.px(t):.2f}", "label": f"{t:g}"} for t in ya.ticks()],
        threshold=None if threshold is None else f"{ya.px(threshold):.2f}",
        series=[
            {
                "label": s.label,
                "color": s.color,
                "dashed": s.dashed,
                "segments": _segments(s, xa, ya),
            }
            for s in series
        ],
    )


def write_plot(path: Path, svg: str) -> None:
    write_atomic(Path(path), svg)
