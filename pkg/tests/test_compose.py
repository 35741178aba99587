from __future__ import annotations

import warnings

import pytest

from micromaps.checks import (
    check_color_linkage,
    check_panel_grid,
    check_shared_scales,
    panels_by_column,
)
from micromaps.colors import DEFAULT_PALETTE
from micromaps.compose import ChartSpec, ColumnSpec, compose, validate_spec
from micromaps.errors import SpecError
from micromaps.layout import MEDIAN_SLOT, SortSpec, build_layout
from micromaps.scene import Line, Text
from micromaps.table import bind_series, parse_table

from conftest import full_table, make_table


def minimal_spec(**overrides) -> ChartSpec:
    fields = dict(
        title="Test chart",
        sort=SortSpec("v"),
        columns=(
            ColumnSpec("map"),
            ColumnSpec("legend", header=("States",)),
            ColumnSpec("dot", header=("Value",), bindings={"value": "v"}),
        ),
    )
    fields.update(overrides)
    return ChartSpec(**fields)


@pytest.fixture
def scene51(square_atlas, table51):
    return compose(minimal_spec(), table51, square_atlas)


def test_minimal_chart_panel_grid(scene51):
    assert check_panel_grid(scene51) == 11
    grid = panels_by_column(scene51)
    assert len(grid) == 3
    kinds = {panels[0].kind for panels in grid.values()}
    assert kinds == {"map", "legend", "dot"}


def test_exactly_one_median_band_per_column(scene51):
    for panels in panels_by_column(scene51).values():
        medians = [p for p in panels if p.is_median]
        assert len(medians) == 1
        assert medians[0].group_index == 5


def test_median_separators_present(scene51):
    medians = [p for p in scene51.panels if p.is_median]
    band_top = medians[0].y
    band_bottom = medians[0].y + medians[0].height
    horizontals = [s for s in scene51.shapes
                   if isinstance(s, Line) and s.y1 == s.y2]
    above = [l for l in horizontals if band_top - 6 < l.y1 < band_top]
    below = [l for l in horizontals if band_bottom < l.y1 < band_bottom + 6]
    assert above and below


def test_row_alignment_across_columns(scene51):
    rows_by_region: dict[str, set[float]] = {}
    for panel in scene51.panels:
        for code, y in panel.rows:
            rows_by_region.setdefault(code, set()).add(y)
    assert len(rows_by_region) == 51
    for code, ys in rows_by_region.items():
        assert max(ys) - min(ys) <= 0.5, code


def test_shared_scales_and_linkage(scene51, table51):
    check_shared_scales(scene51)
    linked = check_color_linkage(scene51)
    assert len(linked) == 51
    layout = build_layout(table51, SortSpec("v"))
    for code, color in linked.items():
        assert color == DEFAULT_PALETTE.for_slot(layout.slot_of[code])


def test_compose_is_deterministic(square_atlas, table51):
    a = compose(minimal_spec(), table51, square_atlas)
    b = compose(minimal_spec(), table51, square_atlas)
    assert a == b


def test_unranked_regions_get_trailing_panel(square_atlas, table51):
    values = {code: (None if code in ("DC", "WY", "VT") else float(i))
              for i, code in enumerate(sorted(table51.rows))}
    scene = compose(minimal_spec(), make_table(values), square_atlas)
    assert check_panel_grid(scene) == 11  # 48 ranked -> 10 groups + no-data
    trailing = [p for p in scene.panels if p.group_index == -1]
    assert len(trailing) == 3
    assert {code for code, _ in trailing[0].rows} == {"DC", "VT", "WY"}
    linked = check_color_linkage(scene)
    assert linked["DC"] == DEFAULT_PALETTE.no_data


def test_median_region_is_black(scene51, table51):
    layout = build_layout(table51, SortSpec("v"))
    median_code = layout.ranked[25]
    assert layout.slot_of[median_code] == MEDIAN_SLOT
    linked = check_color_linkage(scene51)
    assert linked[median_code] == DEFAULT_PALETTE.median


def test_title_and_headers_present(scene51):
    texts = [s.content for s in scene51.shapes if isinstance(s, Text)]
    assert "Test chart" in texts
    assert "States" in texts
    assert "Value" in texts


def test_legend_abbrev_option(square_atlas, table51):
    spec = minimal_spec(columns=(
        ColumnSpec("map"),
        ColumnSpec("legend", options={"name_style": "abbrev"}),
        ColumnSpec("dot", bindings={"value": "v"}),
    ))
    scene = compose(spec, table51, square_atlas)
    texts = {s.content for s in scene.shapes if isinstance(s, Text)}
    assert "DC" in texts
    assert "District of Columbia" not in texts


def test_legend_full_names_by_default(scene51):
    texts = {s.content for s in scene51.shapes if isinstance(s, Text)}
    assert "District of Columbia" in texts
    assert "Wyoming" in texts


def test_timeseries_column_composition(square_atlas):
    table = parse_table(
        "state,a,b,c,x\n" + "\n".join(
            f"{code},{i},{i + 1},{i + 2},{i % 7}"
            for i, code in enumerate(sorted(full_table().rows))),
        "state")
    table = bind_series(table, ["a", "b", "c"], "s")
    spec = ChartSpec(
        title="ts",
        sort=SortSpec("s:c"),  # a shown series period must not warn
        columns=(
            ColumnSpec("map"),
            ColumnSpec("legend"),
            ColumnSpec("timeseries", bindings={"series": "s"}),
        ),
    )
    scene = compose(spec, table, square_atlas)
    ts_panels = [p for p in scene.panels if p.kind == "timeseries"]
    assert len(ts_panels) == 11
    assert len({p.y_ticks for p in ts_panels}) == 1
    assert len({p.x_ticks for p in ts_panels}) == 1
    check_color_linkage(scene)


# --- spec validation ---------------------------------------------------------

def test_spec_requires_map_column(table51):
    spec = minimal_spec(columns=(
        ColumnSpec("legend"), ColumnSpec("dot", bindings={"value": "v"})))
    with pytest.raises(SpecError) as err:
        validate_spec(spec)
    assert "map" in str(err.value)


def test_spec_rejects_two_legends():
    spec = minimal_spec(columns=(
        ColumnSpec("map"), ColumnSpec("legend"), ColumnSpec("legend")))
    with pytest.raises(SpecError):
        validate_spec(spec)


def test_spec_rejects_unknown_kind():
    spec = minimal_spec(columns=(
        ColumnSpec("map"), ColumnSpec("legend"), ColumnSpec("pie")))
    with pytest.raises(SpecError) as err:
        validate_spec(spec)
    assert err.value.path == "columns[2]"


def test_spec_rejects_missing_binding():
    spec = minimal_spec(columns=(
        ColumnSpec("map"), ColumnSpec("legend"), ColumnSpec("dot")))
    with pytest.raises(SpecError) as err:
        validate_spec(spec)
    assert err.value.path == "columns[2].bindings"


def test_spec_rejects_unknown_binding_key():
    spec = minimal_spec(columns=(
        ColumnSpec("map"), ColumnSpec("legend"),
        ColumnSpec("dot", bindings={"value": "v", "extra": "v"})))
    with pytest.raises(SpecError):
        validate_spec(spec)


def test_spec_path_points_at_bad_reference(table51):
    spec = minimal_spec(columns=(
        ColumnSpec("map"), ColumnSpec("legend"),
        ColumnSpec("dot", bindings={"value": "nope"})))
    with pytest.raises(SpecError) as err:
        validate_spec(spec, table51)
    assert err.value.path == "columns[2].bindings.value"


def test_spec_rejects_whole_series_for_dot(square_atlas):
    table = bind_series(
        parse_table("state,a,b\nUT,1,2\nID,3,4\n", "state"), ["a", "b"], "s")
    spec = ChartSpec(
        title="", sort=SortSpec("s:a"),
        columns=(ColumnSpec("map"), ColumnSpec("legend"),
                 ColumnSpec("dot", bindings={"value": "s"})))
    with pytest.raises(SpecError) as err:
        validate_spec(spec, table)
    assert "series" in str(err.value)


def test_spec_warns_when_sort_column_not_shown(table51):
    extended = parse_table(
        "state,v,w\n" + "\n".join(f"{c},{i},{i}" for i, c in
                                  enumerate(sorted(table51.rows))), "state")
    spec = minimal_spec(sort=SortSpec("w"))
    with pytest.warns(UserWarning):
        validate_spec(spec, extended)


def test_spec_bad_group_size():
    with pytest.raises(SpecError):
        validate_spec(minimal_spec(group_size=0))


def test_spec_bad_map_mode():
    with pytest.raises(SpecError):
        validate_spec(minimal_spec(map_mode="rainbow"))


def test_compose_suppresses_no_warnings(square_atlas, table51):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        compose(minimal_spec(), table51, square_atlas)
