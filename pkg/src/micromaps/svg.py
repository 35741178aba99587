"""Deterministic SVG serialization.

The output is built for diffing: attributes are emitted in alphabetical
order, every coordinate is printed with a fixed number of decimals
(round-half-to-even, never scientific notation), lines end with LF, and
each element sits on its own line. Styling uses presentation attributes
only and fonts are referenced by generic family, so the document is fully
self-contained.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .errors import BadGeometry
from .scene import (
    Circle,
    Line,
    Path,
    Polygon,
    Polyline,
    Rect,
    Scene,
    Shape,
    Style,
    Text,
    all_finite,
)

SVG_NS = "http://www.w3.org/2000/svg"
FONT_FAMILY = "sans-serif"


@dataclass(frozen=True)
class SvgOptions:
    decimal_places: int = 2
    embed_title: bool = False
    background: str | None = None
    title: str = ""


def _fmt(value: float, dp: int) -> str:
    s = f"{value:.{dp}f}"
    if s.startswith("-") and float(s) == 0.0:
        s = s[1:]
    return s


def _fmt_attr(value: object, dp: int) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, float)):
        return _fmt(float(value), dp)
    return escape(str(value), {'"': "&quot;"})


def _style_attrs(style: Style) -> dict[str, object]:
    attrs: dict[str, object] = {}
    if style.fill is not None:
        attrs["fill"] = style.fill
    if style.stroke is not None:
        attrs["stroke"] = style.stroke
    if style.stroke_width is not None:
        attrs["stroke-width"] = style.stroke_width
    if style.opacity is not None:
        attrs["opacity"] = style.opacity
    return attrs


def _element(tag: str, attrs: dict[str, object], dp: int,
             content: str | None = None) -> str:
    parts = [f'{k}="{_fmt_attr(v, dp)}"' for k, v in sorted(attrs.items())]
    open_tag = f"<{tag} {' '.join(parts)}" if parts else f"<{tag}"
    if content is None:
        return f"{open_tag}/>"
    return f"{open_tag}>{escape(content)}</{tag}>"


def _points_attr(points: tuple[tuple[float, float], ...], dp: int) -> str:
    return " ".join(f"{_fmt(x, dp)},{_fmt(y, dp)}" for x, y in points)


def _shape_element(shape: Shape, dp: int) -> str:
    attrs = _style_attrs(shape.style)
    if isinstance(shape, Rect):
        attrs.update(x=shape.x, y=shape.y, width=shape.width, height=shape.height)
        return _element("rect", attrs, dp)
    if isinstance(shape, Circle):
        attrs.update(cx=shape.cx, cy=shape.cy, r=shape.r)
        return _element("circle", attrs, dp)
    if isinstance(shape, Line):
        attrs.update(x1=shape.x1, y1=shape.y1, x2=shape.x2, y2=shape.y2)
        return _element("line", attrs, dp)
    if isinstance(shape, Polyline):
        attrs.setdefault("fill", "none")
        attrs["points"] = _points_attr(shape.points, dp)
        return _element("polyline", attrs, dp)
    if isinstance(shape, Polygon):
        attrs["points"] = _points_attr(shape.points, dp)
        return _element("polygon", attrs, dp)
    if isinstance(shape, Path):
        cmds = []
        for cmd in shape.commands:
            coords = " ".join(_fmt(v, dp) for v in cmd[1:])
            cmds.append(cmd[0] + (" " + coords if coords else ""))
        attrs["d"] = " ".join(cmds)
        return _element("path", attrs, dp)
    if isinstance(shape, Text):
        attrs.update(x=shape.x, y=shape.y)
        attrs["font-family"] = FONT_FAMILY
        if shape.style.font_size is not None:
            attrs["font-size"] = shape.style.font_size
        if shape.style.anchor is not None:
            attrs["text-anchor"] = shape.style.anchor
        return _element("text", attrs, dp, content=shape.content)
    raise TypeError(f"not a shape: {shape!r}")


def emit_svg(scene: Scene, options: SvgOptions = SvgOptions()) -> str:
    """Serialize a scene to a self-contained SVG document."""
    if not 0 <= options.decimal_places <= 6:
        raise ValueError("decimal_places must be in 0..6")
    dp = options.decimal_places
    for shape in scene.shapes:
        if not all_finite(shape):
            raise BadGeometry(f"non-finite coordinate in {type(shape).__name__}")
    root_attrs = {
        "height": scene.height,
        "width": scene.width,
        "xmlns": SVG_NS,
    }
    parts = [f'{k}="{_fmt_attr(v, dp)}"' for k, v in sorted(root_attrs.items())]
    lines = [f"<svg {' '.join(parts)}>"]
    if options.embed_title and options.title:
        lines.append(f"<title>{escape(options.title)}</title>")
    if options.background is not None:
        bg = Rect(0.0, 0.0, scene.width, scene.height,
                  Style(fill=options.background))
        lines.append(_shape_element(bg, dp))
    for shape in scene.shapes:
        lines.append(_shape_element(shape, dp))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
