from __future__ import annotations

import json

import pytest

from micromaps.adapters import acs_adapter, ers_adapter, qcew_adapter
from micromaps.atlas import Atlas, load_atlas, load_default_atlas
from micromaps.regions import ALL_CODES, BY_CODE
from micromaps.table import Column, RegionTable


def square_atlas_document() -> str:
    """51 unit squares on a grid: the fixed-geometry atlas for layout tests."""
    features = []
    for i, code in enumerate(ALL_CODES):
        col, row = i % 8, i // 8
        x, y = col * 10.0, row * 10.0
        ring = [[x, y], [x + 8.0, y], [x + 8.0, y + 8.0], [x, y + 8.0], [x, y]]
        meta = BY_CODE[code]
        features.append({
            "type": "Feature",
            "properties": {"code": code, "name": meta.name, "fips": meta.fips},
            "geometry": {"type": "Polygon", "coordinates": [ring]},
        })
    return json.dumps({"type": "FeatureCollection", "features": features})


def make_table(values: dict[str, float | None],
               column: str = "v") -> RegionTable:
    rows = {code: {column: value} for code, value in values.items()}
    return RegionTable(columns=(Column(column),), rows=rows)


def full_table(column: str = "v") -> RegionTable:
    """All 51 regions with distinct values, highest for the first code."""
    values = {code: float(200 - 3 * i) for i, code in enumerate(ALL_CODES)}
    return make_table(values, column)


@pytest.fixture(scope="session")
def square_atlas() -> Atlas:
    return load_atlas(square_atlas_document())


@pytest.fixture(scope="session")
def default_atlas() -> Atlas:
    return load_default_atlas()


@pytest.fixture(scope="session")
def acs_table():
    return acs_adapter()


@pytest.fixture(scope="session")
def qcew_table():
    return qcew_adapter()


@pytest.fixture(scope="session")
def ers_table():
    return ers_adapter()


@pytest.fixture
def table51() -> RegionTable:
    return full_table()
