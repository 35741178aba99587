"""Resolution-independent scene: a flat, ordered list of styled shapes.

Shape order is paint order. Coordinates are in abstract canvas units with
the origin at the top-left; serialization to SVG happens elsewhere. The
optional ``tag`` on a shape records which region (or chart part) produced
it; tags never reach the output document but let tests trace color linkage
shape by shape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterator, Union


@dataclass(frozen=True)
class Style:
    fill: str | None = None
    stroke: str | None = None
    stroke_width: float | None = None
    opacity: float | None = None
    font_size: float | None = None
    anchor: str | None = None


@dataclass(frozen=True)
class Rect:
    x: float
    y: float
    width: float
    height: float
    style: Style = Style()
    tag: str | None = None


@dataclass(frozen=True)
class Circle:
    cx: float
    cy: float
    r: float
    style: Style = Style()
    tag: str | None = None


@dataclass(frozen=True)
class Line:
    x1: float
    y1: float
    x2: float
    y2: float
    style: Style = Style()
    tag: str | None = None


@dataclass(frozen=True)
class Polyline:
    points: tuple[tuple[float, float], ...]
    style: Style = Style()
    tag: str | None = None


@dataclass(frozen=True)
class Polygon:
    points: tuple[tuple[float, float], ...]
    style: Style = Style()
    tag: str | None = None


@dataclass(frozen=True)
class Path:
    # Commands like ("M", x, y), ("L", x, y), ("Z",).
    commands: tuple[tuple, ...]
    style: Style = Style()
    tag: str | None = None


@dataclass(frozen=True)
class Text:
    x: float
    y: float
    content: str
    style: Style = Style()
    tag: str | None = None


Shape = Union[Rect, Circle, Line, Polyline, Polygon, Path, Text]


@dataclass(frozen=True)
class PanelInfo:
    """Where one group's panel of one column landed, plus its shared-axis
    record (domains and tick lists in data units) for invariant checks.
    """

    column_index: int
    kind: str
    group_index: int
    x: float
    y: float
    width: float
    height: float
    is_median: bool = False
    rows: tuple[tuple[str, float], ...] = ()
    x_domain: tuple[float, float] | None = None
    x_ticks: tuple[float, ...] | None = None
    y_domain: tuple[float, float] | None = None
    y_ticks: tuple[float, ...] | None = None


@dataclass(frozen=True)
class Scene:
    width: float
    height: float
    shapes: tuple[Shape, ...]
    panels: tuple[PanelInfo, ...] = ()


def shape_coordinates(shape: Shape) -> Iterator[float]:
    if isinstance(shape, Rect):
        yield from (shape.x, shape.y, shape.width, shape.height)
    elif isinstance(shape, Circle):
        yield from (shape.cx, shape.cy, shape.r)
    elif isinstance(shape, Line):
        yield from (shape.x1, shape.y1, shape.x2, shape.y2)
    elif isinstance(shape, (Polyline, Polygon)):
        for x, y in shape.points:
            yield x
            yield y
    elif isinstance(shape, Path):
        for cmd in shape.commands:
            yield from cmd[1:]
    elif isinstance(shape, Text):
        yield shape.x
        yield shape.y


def all_finite(shape: Shape) -> bool:
    return all(math.isfinite(v) for v in shape_coordinates(shape))


def _clamp(v: float, lo: float, hi: float) -> float:
    return min(max(v, lo), hi)


def clamp_shape(shape: Shape, width: float, height: float) -> Shape:
    """Clamp a shape's coordinates into [0,width] x [0,height].

    A guard against rounding drift at the canvas edge, not a layout tool;
    sizes (rect extents, radii) are left alone.
    """
    def cx(v: float) -> float:
        return _clamp(v, 0.0, width)

    def cy(v: float) -> float:
        return _clamp(v, 0.0, height)

    if isinstance(shape, Rect):
        return replace(shape, x=cx(shape.x), y=cy(shape.y))
    if isinstance(shape, Circle):
        return replace(shape, cx=cx(shape.cx), cy=cy(shape.cy))
    if isinstance(shape, Line):
        return replace(shape, x1=cx(shape.x1), y1=cy(shape.y1),
                       x2=cx(shape.x2), y2=cy(shape.y2))
    if isinstance(shape, (Polyline, Polygon)):
        pts = tuple((cx(x), cy(y)) for x, y in shape.points)
        return replace(shape, points=pts)
    if isinstance(shape, Path):
        cmds = tuple((c[0],) + tuple(cx(v) if i % 2 == 0 else cy(v)
                                     for i, v in enumerate(c[1:]))
                     for c in shape.commands)
        return replace(shape, commands=cmds)
    if isinstance(shape, Text):
        return replace(shape, x=cx(shape.x), y=cy(shape.y))
    raise TypeError(f"not a shape: {shape!r}")


def clamp_scene(scene: Scene) -> Scene:
    shapes = tuple(clamp_shape(s, scene.width, scene.height) for s in scene.shapes)
    return replace(scene, shapes=shapes)
