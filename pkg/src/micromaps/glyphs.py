"""Statistical glyph renderers: dot, bar, arrow, time series, scatter, boxplot.

Each renderer draws one perceptual group's panel. The composer hands it a
PanelFrame (the panel rectangle plus one row slot per region, already
carrying the region's linked color) and the column's shared scale(s); the
renderer returns shapes grouped into guides, marks, and labels so the
composer can keep a fixed global paint order.

Renderers never jitter and never invent data: a missing value produces no
mark and a small "n/a" note where the row-glyph layout allows one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from . import colors
from .errors import EmptySamples, SeriesMismatch
from .scale import Scale, thin_labels
from .scene import Circle, Line, Polygon, Polyline, Rect, Shape, Style, Text

ARROW_HEAD_LENGTH = 7.0
ARROW_HEAD_HALF_WIDTH = 2.8
DIAMOND_HALF = 3.2
OUTLIER_RADIUS = 1.5
CONTEXT_RADIUS = 2.0
HIGHLIGHT_RADIUS = 3.4
TICK_MARK = 3.0
NA_FONT = 7.5


@dataclass(frozen=True)
class RowBand:
    region: str
    y: float
    color: str


@dataclass(frozen=True)
class PanelFrame:
    x: float
    y: float
    width: float
    height: float
    rows: tuple[RowBand, ...]
    row_height: float

    @property
    def right(self) -> float:
        return self.x + self.width

    @property
    def bottom(self) -> float:
        return self.y + self.height


@dataclass
class GlyphShapes:
    guides: list[Shape] = field(default_factory=list)
    marks: list[Shape] = field(default_factory=list)
    labels: list[Shape] = field(default_factory=list)

    def all(self) -> Iterator[Shape]:
        yield from self.guides
        yield from self.marks
        yield from self.labels


@dataclass(frozen=True)
class BoxStats:
    q1: float
    median: float
    q3: float
    whisker_lo: float
    whisker_hi: float
    outliers: tuple[float, ...]


def _quantile(ordered: Sequence[float], p: float) -> float:
    # Linear interpolation at position p*(n-1) over the sorted sample.
    pos = p * (len(ordered) - 1)
    lo = math.floor(pos)
    hi = math.ceil(pos)
    if lo == hi:
        return ordered[lo]
    frac = pos - lo
    return ordered[lo] * (1.0 - frac) + ordered[hi] * frac


def compute_box_stats(samples: Sequence[float]) -> BoxStats:
    """Quartiles, 1.5*IQR whiskers, and outliers for one sample list.

    Whiskers sit on the most extreme samples inside the fences, clamped to
    the box so whisker_lo <= q1 and q3 <= whisker_hi even for lopsided data.
    """
    data = sorted(s for s in samples if s is not None)
    if not data:
        raise EmptySamples("no samples")
    q1 = _quantile(data, 0.25)
    med = _quantile(data, 0.50)
    q3 = _quantile(data, 0.75)
    iqr = q3 - q1
    lo_fence = q1 - 1.5 * iqr
    hi_fence = q3 + 1.5 * iqr
    inside = [s for s in data if lo_fence <= s <= hi_fence]
    whisker_lo = min(min(inside), q1)
    whisker_hi = max(max(inside), q3)
    outliers = tuple(s for s in data if s < lo_fence or s > hi_fence)
    return BoxStats(q1, med, q3, whisker_lo, whisker_hi, outliers)


def _na_label(frame: PanelFrame, row: RowBand) -> Text:
    style = Style(fill=colors.NO_DATA_COLOR, font_size=NA_FONT, anchor="start")
    return Text(frame.x + 2.0, row.y + NA_FONT * 0.35, "n/a", style,
                tag=f"region:{row.region}")


def _row_guides(frame: PanelFrame) -> list[Shape]:
    style = Style(stroke=colors.GUIDE_COLOR, stroke_width=0.6)
    return [Line(frame.x, row.y, frame.right, row.y, style) for row in frame.rows]


def render_dot(values: Mapping[str, float | None], scale: Scale,
               frame: PanelFrame, reference_line: float | None = None,
               dot_radius: float | None = None) -> GlyphShapes:
    """One filled circle per region at the scaled value."""
    out = GlyphShapes(guides=_row_guides(frame))
    if reference_line is not None:
        x = scale.map(scale.check(reference_line))
        out.guides.append(Line(x, frame.y, x, frame.bottom,
                               Style(stroke=colors.AXIS_COLOR, stroke_width=0.7)))
    r = dot_radius if dot_radius is not None else min(4.2, frame.row_height * 0.24)
    for row in frame.rows:
        v = values.get(row.region)
        if v is None:
            out.labels.append(_na_label(frame, row))
            continue
        x = scale.map(scale.check(v))
        out.marks.append(Circle(x, row.y, r, Style(fill=row.color),
                                tag=f"region:{row.region}"))
    return out


def render_bar(values: Mapping[str, float | None], scale: Scale,
               frame: PanelFrame, bar_fraction: float = 0.55) -> GlyphShapes:
    """Horizontal bars anchored at zero; negatives extend left."""
    x0 = scale.map(scale.check(0.0))
    out = GlyphShapes()
    out.guides.append(Line(x0, frame.y, x0, frame.bottom,
                           Style(stroke=colors.AXIS_COLOR, stroke_width=0.7)))
    h = frame.row_height * bar_fraction
    for row in frame.rows:
        v = values.get(row.region)
        if v is None:
            out.labels.append(_na_label(frame, row))
            continue
        xv = scale.map(scale.check(v))
        out.marks.append(Rect(min(x0, xv), row.y - h / 2.0, abs(xv - x0), h,
                              Style(fill=row.color), tag=f"region:{row.region}"))
    return out


def _arrow_head(x: float, y: float, direction: float, color: str,
                tag: str) -> Polygon:
    tip = x
    back = x - direction * ARROW_HEAD_LENGTH
    pts = ((tip, y), (back, y - ARROW_HEAD_HALF_WIDTH), (back, y + ARROW_HEAD_HALF_WIDTH))
    return Polygon(pts, Style(fill=color), tag=tag)


def _diamond(x: float, y: float, color: str, tag: str) -> Polygon:
    d = DIAMOND_HALF
    pts = ((x, y - d), (x + d, y), (x, y + d), (x - d, y))
    return Polygon(pts, Style(fill=color), tag=tag)


def render_arrow(pairs: Mapping[str, tuple[float | None, float | None]],
                 scale: Scale, frame: PanelFrame) -> GlyphShapes:
    """Start-to-end arrows; a zero-length change renders as a diamond."""
    out = GlyphShapes(guides=_row_guides(frame))
    for row in frame.rows:
        pair = pairs.get(row.region)
        start, end = pair if pair is not None else (None, None)
        tag = f"region:{row.region}"
        if start is None or end is None:
            out.labels.append(_na_label(frame, row))
            continue
        xs = scale.map(scale.check(start))
        xe = scale.map(scale.check(end))
        if start == end:
            out.marks.append(_diamond(xs, row.y, row.color, tag))
            continue
        direction = 1.0 if xe > xs else -1.0
        shaft_end = xe - direction * ARROW_HEAD_LENGTH * 0.6
        out.marks.append(Line(xs, row.y, shaft_end, row.y,
                              Style(stroke=row.color, stroke_width=1.6), tag=tag))
        out.marks.append(_arrow_head(xe, row.y, direction, row.color, tag))
    return out


def _panel_frame_guides(frame: PanelFrame, x_tick_pos: Sequence[float],
                        y_tick_pos: Sequence[float]) -> list[Shape]:
    border = Rect(frame.x, frame.y, frame.width, frame.height,
                  Style(fill="none", stroke=colors.GUIDE_COLOR, stroke_width=0.7))
    tick_style = Style(stroke=colors.AXIS_COLOR, stroke_width=0.6)
    shapes: list[Shape] = [border]
    for x in x_tick_pos:
        shapes.append(Line(x, frame.bottom, x, frame.bottom - TICK_MARK, tick_style))
    for y in y_tick_pos:
        shapes.append(Line(frame.x, y, frame.x + TICK_MARK, y, tick_style))
    return shapes


def render_timeseries(series: Mapping[str, Sequence[float | None]],
                      periods: Sequence[str], x_scale: Scale, y_scale: Scale,
                      frame: PanelFrame) -> GlyphShapes:
    """One polyline per region; missing periods break the line."""
    n = len(periods)
    x_ticks = [x_scale.map(float(i)) for i in thin_labels(n)]
    y_ticks = [y_scale.map(t) for t in y_scale.ticks]
    out = GlyphShapes(guides=_panel_frame_guides(frame, x_ticks, y_ticks))
    for row in frame.rows:
        cells = series.get(row.region)
        if cells is None:
            continue
        if len(cells) != n:
            raise SeriesMismatch(
                f"{row.region}: {len(cells)} values for {n} periods")
        tag = f"region:{row.region}"
        style = Style(stroke=row.color, stroke_width=1.1)
        run: list[tuple[float, float]] = []
        for i, v in enumerate(cells):
            if v is None:
                _flush_run(out, run, style, row.color, tag)
                run = []
                continue
            run.append((x_scale.map(float(i)), y_scale.map(y_scale.check(v))))
        _flush_run(out, run, style, row.color, tag)
    return out


def _flush_run(out: GlyphShapes, run: list[tuple[float, float]], style: Style,
               color: str, tag: str) -> None:
    if len(run) >= 2:
        out.marks.append(Polyline(tuple(run), style, tag=tag))
    elif len(run) == 1:
        out.marks.append(Circle(run[0][0], run[0][1], 1.6, Style(fill=color), tag=tag))


def render_scatter(points: Mapping[str, tuple[float | None, float | None]],
                   x_scale: Scale, y_scale: Scale, frame: PanelFrame,
                   context: Sequence[str],
                   context_color: str = colors.CONTEXT_POINT) -> GlyphShapes:
    """All ranked regions as gray context points, the group enlarged on top."""
    x_ticks = [x_scale.map(t) for t in x_scale.ticks]
    y_ticks = [y_scale.map(t) for t in y_scale.ticks]
    out = GlyphShapes(guides=_panel_frame_guides(frame, x_ticks, y_ticks))
    highlighted = {row.region for row in frame.rows}

    def position(code: str) -> tuple[float, float] | None:
        pair = points.get(code)
        if pair is None:
            return None
        px, py = pair
        if px is None or py is None:
            return None
        return (x_scale.map(x_scale.check(px)), y_scale.map(y_scale.check(py)))

    for code in context:
        pos = position(code)
        if pos is None:
            continue
        out.marks.append(Circle(pos[0], pos[1], CONTEXT_RADIUS,
                                Style(fill=context_color), tag=f"context:{code}"))
    for row in frame.rows:
        pos = position(row.region)
        if pos is None:
            out.labels.append(_na_label(frame, row))
            continue
        out.marks.append(Circle(pos[0], pos[1], HIGHLIGHT_RADIUS,
                                Style(fill=row.color), tag=f"region:{row.region}"))
    return out


def render_boxplot(samples: Mapping[str, Sequence[float] | None], scale: Scale,
                   frame: PanelFrame, box_fraction: float = 0.6) -> GlyphShapes:
    """Whisker line, slot-colored IQR box, median tick, outlier dots."""
    out = GlyphShapes(guides=_row_guides(frame))
    h = frame.row_height * box_fraction
    for row in frame.rows:
        data = samples.get(row.region)
        if not data:
            out.labels.append(_na_label(frame, row))
            continue
        stats = compute_box_stats(data)
        for edge in (stats.whisker_lo, stats.whisker_hi, *stats.outliers):
            scale.check(edge)
        tag = f"region:{row.region}"
        x_lo = scale.map(stats.whisker_lo)
        x_hi = scale.map(stats.whisker_hi)
        x_q1 = scale.map(stats.q1)
        x_q3 = scale.map(stats.q3)
        x_med = scale.map(stats.median)
        out.marks.append(Line(x_lo, row.y, x_hi, row.y,
                              Style(stroke=colors.AXIS_COLOR, stroke_width=0.8),
                              tag=tag))
        out.marks.append(Rect(x_q1, row.y - h / 2.0, x_q3 - x_q1, h,
                              Style(fill=row.color, stroke="#333333",
                                    stroke_width=0.5), tag=tag))
        out.marks.append(Line(x_med, row.y - h / 2.0, x_med, row.y + h / 2.0,
                              Style(stroke="#000000", stroke_width=1.0), tag=tag))
        for v in stats.outliers:
            out.marks.append(Circle(scale.map(v), row.y, OUTLIER_RADIUS,
                                    Style(fill=colors.AXIS_COLOR), tag=tag))
    return out
