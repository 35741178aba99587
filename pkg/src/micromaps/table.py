"""Region-indexed tables parsed from CSV.

A RegionTable maps each region to one row of named columns. Columns are
either scalar (one number per region) or series (one number per period
label per region). Cells may be explicitly missing (None); renderers decide
how missing data is presented.

All values are immutable after construction and every operation returns a
new table, so tables can be shared freely across render jobs.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from decimal import Decimal
from typing import Mapping, Sequence

from .errors import (
    CellParse,
    DuplicateRegion,
    EmptyBinding,
    EmptyColumn,
    MissingColumn,
    NameClash,
    SeriesMismatch,
)
from .regions import ALL_CODES, region_lookup

SCALAR = "scalar"
SERIES = "series"


@dataclass(frozen=True)
class Column:
    name: str
    kind: str = SCALAR
    periods: tuple[str, ...] = ()


@dataclass(frozen=True)
class RegionTable:
    """Immutable region-keyed table of scalar and series columns."""

    columns: tuple[Column, ...]
    rows: dict[str, dict[str, object]]

    def codes(self) -> tuple[str, ...]:
        return tuple(sorted(self.rows))

    def column(self, name: str) -> Column:
        for col in self.columns:
            if col.name == name:
                return col
        raise MissingColumn(f"no column named {name!r}")

    def has_column(self, name: str) -> bool:
        return any(col.name == name for col in self.columns)

    def scalar(self, code: str, name: str) -> float | None:
        col = self.column(name)
        if col.kind != SCALAR:
            raise MissingColumn(f"column {name!r} is not scalar")
        return self.rows[code][name]  # type: ignore[return-value]

    def series(self, code: str, name: str) -> tuple[float | None, ...]:
        col = self.column(name)
        if col.kind != SERIES:
            raise MissingColumn(f"column {name!r} is not a series")
        return self.rows[code][name]  # type: ignore[return-value]


@dataclass(frozen=True)
class ValidationReport:
    missing_regions: tuple[str, ...]
    unknown_keys: tuple[str, ...]
    missing_cells: tuple[tuple[str, str], ...]

    def clean(self) -> bool:
        return not (self.missing_regions or self.unknown_keys or self.missing_cells)


@dataclass(frozen=True)
class ColumnRef:
    """A resolved column reference.

    References are either a plain column name or "<series>:<period>" naming
    one period of a series column.
    """

    column: Column
    period_index: int | None = None


_THOUSANDS = re.compile(r"^[+-]?\d{1,3}(,\d{3})+(\.\d*)?$")
_NUMBER = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)$")


def parse_number(text: str) -> float | None:
    """Parse one CSV cell: empty or "NA" is missing; "%" and thousands
    separators are stripped. Raises ValueError on anything else non-numeric.
    """
    t = text.strip()
    if t == "" or t == "NA":
        return None
    if t.endswith("%"):
        t = t[:-1].strip()
    if "," in t:
        if not _THOUSANDS.match(t):
            raise ValueError(f"bad thousands grouping: {text!r}")
        t = t.replace(",", "")
    if not _NUMBER.match(t):
        raise ValueError(f"not a number: {text!r}")
    return float(t)


def parse_table(csv_text: str, region_column: str) -> RegionTable:
    """Parse RFC-4180-style CSV text into a RegionTable.

    The region column may hold USPS codes or full state names (resolved
    case-insensitively); every other header becomes a scalar column.
    Unresolvable region keys are a hard error, never a skipped row.
    """
    text = csv_text.lstrip("﻿")
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        raise MissingColumn(f"empty document, no {region_column!r} header") from None
    header = [h.strip() for h in header]
    if region_column not in header:
        raise MissingColumn(f"no column named {region_column!r}")
    region_idx = header.index(region_column)
    value_names = [h for i, h in enumerate(header) if i != region_idx]
    seen = set(value_names)
    if len(seen) != len(value_names):
        raise NameClash("duplicate header names")

    rows: dict[str, dict[str, object]] = {}
    for record in reader:
        if not record or all(cell.strip() == "" for cell in record):
            continue
        if len(record) > len(header):
            raise CellParse(record[region_idx] if region_idx < len(record) else "?",
                            "", "row wider than header")
        record = record + [""] * (len(header) - len(record))
        raw_key = record[region_idx].strip()
        code = region_lookup(raw_key).code
        if code in rows:
            raise DuplicateRegion(f"duplicate row for region {code}")
        row: dict[str, object] = {}
        for i, name in enumerate(header):
            if i == region_idx:
                continue
            try:
                row[name] = parse_number(record[i])
            except ValueError as exc:
                raise CellParse(raw_key, name, str(exc)) from None
        rows[code] = row

    columns = tuple(Column(name) for name in value_names)
    return RegionTable(columns=columns, rows=rows)


def _format_number(value: float) -> str:
    s = repr(value)
    if "e" in s or "E" in s:
        s = format(Decimal(s), "f")
    return s


def write_table(table: RegionTable, region_column: str = "region") -> str:
    """Canonical CSV writer (tests and tooling): LF line endings, minimal
    quoting, columns in table order, regions in code order. Scalar columns
    only; series columns have no single-cell text form.
    """
    for col in table.columns:
        if col.kind != SCALAR:
            raise MissingColumn(f"cannot serialize series column {col.name!r}")
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    writer.writerow([region_column] + [c.name for c in table.columns])
    for code in table.codes():
        row = table.rows[code]
        cells = [code]
        for col in table.columns:
            v = row[col.name]
            cells.append("" if v is None else _format_number(v))  # type: ignore[arg-type]
        writer.writerow(cells)
    return out.getvalue()


def bind_series(table: RegionTable, column_names: Sequence[str],
                series_name: str) -> RegionTable:
    """Collapse named scalar columns into one series column whose period
    labels are the original column names, in the given order.
    """
    if not column_names:
        raise EmptyBinding("no columns named in series binding")
    if len(set(column_names)) != len(column_names):
        raise NameClash("repeated column in series binding")
    for name in column_names:
        col = table.column(name)
        if col.kind != SCALAR:
            raise MissingColumn(f"column {name!r} is not scalar")
    bound = set(column_names)
    survivors = [c for c in table.columns if c.name not in bound]
    if any(c.name == series_name for c in survivors):
        raise NameClash(f"column {series_name!r} already exists")

    # The series column takes the slot of the first bound column in table order.
    series_col = Column(series_name, SERIES, tuple(column_names))
    columns: list[Column] = []
    placed = False
    for c in table.columns:
        if c.name in bound:
            if not placed:
                columns.append(series_col)
                placed = True
            continue
        columns.append(c)

    rows: dict[str, dict[str, object]] = {}
    for code, row in table.rows.items():
        new_row = {k: v for k, v in row.items() if k not in bound}
        new_row[series_name] = tuple(row[name] for name in column_names)
        rows[code] = new_row
    return RegionTable(columns=tuple(columns), rows=rows)


def with_scalar_column(table: RegionTable, name: str,
                       values: Mapping[str, float | None]) -> RegionTable:
    """Append a scalar column; regions without an entry get a missing cell."""
    if table.has_column(name):
        raise NameClash(f"column {name!r} already exists")
    rows = {code: {**row, name: values.get(code)} for code, row in table.rows.items()}
    return RegionTable(columns=table.columns + (Column(name),), rows=rows)


def with_series_column(table: RegionTable, name: str, periods: Sequence[str],
                       values: Mapping[str, Sequence[float | None]]) -> RegionTable:
    """Append a series column over the given period labels."""
    if table.has_column(name):
        raise NameClash(f"column {name!r} already exists")
    n = len(periods)
    rows: dict[str, dict[str, object]] = {}
    for code, row in table.rows.items():
        cells = values.get(code)
        if cells is None:
            slots: tuple[float | None, ...] = (None,) * n
        else:
            if len(cells) != n:
                raise SeriesMismatch(
                    f"{name!r} for {code}: {len(cells)} values, {n} periods")
            slots = tuple(cells)
        rows[code] = {**row, name: slots}
    col = Column(name, SERIES, tuple(periods))
    return RegionTable(columns=table.columns + (col,), rows=rows)


def validate_regions(table: RegionTable) -> ValidationReport:
    """Report regions absent from the 51, keys outside the 51, and missing
    cells. A series cell counts as missing only when every period is missing.
    """
    known = set(ALL_CODES)
    present = set(table.rows)
    missing_regions = tuple(sorted(known - present))
    unknown_keys = tuple(sorted(present - known))
    missing_cells: list[tuple[str, str]] = []
    for code in sorted(present & known):
        row = table.rows[code]
        for col in table.columns:
            v = row[col.name]
            if col.kind == SCALAR:
                if v is None:
                    missing_cells.append((code, col.name))
            else:
                if all(slot is None for slot in v):  # type: ignore[union-attr]
                    missing_cells.append((code, col.name))
    return ValidationReport(missing_regions, unknown_keys, tuple(missing_cells))


def resolve_ref(table: RegionTable, ref: str) -> ColumnRef:
    """Resolve a column reference: a column name, or "<series>:<period>"."""
    if table.has_column(ref):
        return ColumnRef(table.column(ref))
    if ":" in ref:
        name, _, period = ref.rpartition(":")
        if table.has_column(name):
            col = table.column(name)
            if col.kind == SERIES and period in col.periods:
                return ColumnRef(col, col.periods.index(period))
    raise MissingColumn(f"no column named {ref!r}")


def scalar_values(table: RegionTable, ref: str) -> dict[str, float | None]:
    """Per-region values for a scalar column or one series period."""
    r = resolve_ref(table, ref)
    out: dict[str, float | None] = {}
    for code, row in table.rows.items():
        v = row[r.column.name]
        if r.column.kind == SERIES:
            if r.period_index is None:
                raise MissingColumn(f"{ref!r} names a whole series, not a value")
            out[code] = v[r.period_index]  # type: ignore[index]
        else:
            out[code] = v  # type: ignore[assignment]
    return out


def column_extent(table: RegionTable, column: str) -> tuple[float, float]:
    """Min and max over all non-missing values; series columns span every
    region and every period. Raises EmptyColumn when nothing is present.
    """
    r = resolve_ref(table, column)
    values: list[float] = []
    for row in table.rows.values():
        v = row[r.column.name]
        if r.column.kind == SERIES:
            if r.period_index is not None:
                v = v[r.period_index]  # type: ignore[index]
                if v is not None:
                    values.append(v)
            else:
                values.extend(s for s in v if s is not None)  # type: ignore[union-attr]
        elif v is not None:
            values.append(v)  # type: ignore[arg-type]
    if not values:
        raise EmptyColumn(f"column {column!r} has no values")
    return (min(values), max(values))
