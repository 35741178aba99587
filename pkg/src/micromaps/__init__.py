"""Linked micromap charts for US state statistics.

The pipeline: CSV -> RegionTable -> LinkedLayout -> Scene -> SVG. See the
README for the chart anatomy and the CLI entry points.
"""

from .altcharts import ClassBreaks, render_barchart_alpha, render_choropleth
from .atlas import Atlas, MiniMapStyle, load_atlas, load_default_atlas, render_minimap
from .colors import DEFAULT_PALETTE, Palette
from .compose import ChartSpec, ColumnSpec, compose, render_legend_column
from .errors import MicromapError
from .glyphs import BoxStats, compute_box_stats
from .layout import (
    GroupPlan,
    LinkedLayout,
    SortSpec,
    assign_colors,
    build_layout,
    order_regions,
    partition_groups,
)
from .scale import Scale, linear_scale
from .scene import Scene
from .svg import SvgOptions, emit_svg
from .table import (
    RegionTable,
    ValidationReport,
    bind_series,
    column_extent,
    parse_table,
    validate_regions,
    write_table,
)

__all__ = [
    "Atlas",
    "BoxStats",
    "ChartSpec",
    "ClassBreaks",
    "ColumnSpec",
    "DEFAULT_PALETTE",
    "GroupPlan",
    "LinkedLayout",
    "MicromapError",
    "MiniMapStyle",
    "Palette",
    "RegionTable",
    "Scale",
    "Scene",
    "SortSpec",
    "SvgOptions",
    "ValidationReport",
    "assign_colors",
    "bind_series",
    "build_layout",
    "column_extent",
    "compose",
    "compute_box_stats",
    "emit_svg",
    "linear_scale",
    "load_atlas",
    "load_default_atlas",
    "order_regions",
    "parse_table",
    "partition_groups",
    "render_barchart_alpha",
    "render_choropleth",
    "render_legend_column",
    "render_minimap",
    "validate_regions",
    "write_table",
]

__version__ = "0.1.0"
