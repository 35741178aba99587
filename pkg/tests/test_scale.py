from __future__ import annotations

import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from micromaps.errors import BadExtent, DomainOverflow
from micromaps.scale import format_tick, linear_scale, nice_step, thin_labels


def oracle_step(raw: float) -> float:
    """Exhaustive search over {1,2,5}*10^k; ties toward the smaller step."""
    candidates = sorted(m * 10.0 ** k for k in range(-12, 13) for m in (1, 2, 5))
    return min(candidates, key=lambda c: (abs(c - raw), c))


def oracle_ticks(lo: float, hi: float, step: float) -> list[float]:
    ticks = []
    i = math.floor(lo / step) - 2
    while i * step <= hi + 2 * step:
        if lo - step * 1e-9 <= i * step <= hi + step * 1e-9:
            ticks.append(min(max(i * step, lo), hi))
        i += 1
    return ticks


def test_ticks_zero_to_hundred():
    scale = linear_scale((0.0, 100.0), (0.0, 1.0), target_ticks=5)
    assert oracle_step(100.0 / 5) == 20.0
    assert scale.ticks == (0.0, 20.0, 40.0, 60.0, 80.0, 100.0)


def test_ticks_negative_extent():
    scale = linear_scale((-33.0, 12.0), (0.0, 1.0), target_ticks=5)
    assert oracle_step(45.0 / 5) == 10.0
    assert scale.ticks == (-30.0, -20.0, -10.0, 0.0, 10.0)


def test_degenerate_extent_padding():
    scale = linear_scale((5.0, 5.0), (0.0, 1.0))
    assert scale.domain == (4.0, 6.0)
    scale = linear_scale((100.0, 100.0), (0.0, 1.0))
    assert scale.domain == (95.0, 105.0)
    scale = linear_scale((0.0, 0.0), (0.0, 1.0))
    assert scale.domain == (-1.0, 1.0)


def test_bad_extents():
    for extent in ((float("nan"), 1.0), (0.0, float("inf")), (2.0, 1.0)):
        with pytest.raises(BadExtent):
            linear_scale(extent, (0.0, 1.0))
    with pytest.raises(BadExtent):
        linear_scale((0.0, 1.0), (1.0, 0.0))


def test_map_endpoints_and_affinity():
    scale = linear_scale((10.0, 30.0), (100.0, 500.0))
    assert scale.map(10.0) == 100.0
    assert scale.map(30.0) == 500.0
    assert abs(scale.map(20.0) - 300.0) < 1e-9


def test_with_range_flips_for_vertical_axes():
    scale = linear_scale((0.0, 10.0), (0.0, 1.0)).with_range((200.0, 100.0))
    assert scale.map(0.0) == 200.0
    assert scale.map(10.0) == 100.0
    assert scale.ticks == linear_scale((0.0, 10.0), (0.0, 1.0)).ticks


def test_check_overflow():
    scale = linear_scale((0.0, 10.0), (0.0, 1.0))
    scale.check(0.0)
    scale.check(10.0)
    with pytest.raises(DomainOverflow):
        scale.check(10.5)
    with pytest.raises(DomainOverflow):
        scale.check(-0.5)


@settings(max_examples=200, deadline=None)
@given(
    lo=st.floats(-1e6, 1e6),
    span=st.floats(1e-3, 1e6),
    target=st.integers(2, 10),
)
def test_scale_properties(lo, span, target):
    # Keep the domain well-conditioned (span not vanishing against the
    # magnitude), as chart extents are; float64 cannot do better anyway.
    assume(span >= abs(lo) * 1e-4)
    hi = lo + span
    scale = linear_scale((lo, hi), (0.0, 100.0), target_ticks=target)
    d0, d1 = scale.domain
    assert d0 < d1
    assert scale.map(d0) == 0.0
    assert scale.map(d1) == 100.0
    mid = scale.map(d0 + (d1 - d0) / 2.0)
    assert abs(mid - 50.0) <= 1e-9 * max(1.0, abs(mid))
    assert list(scale.ticks) == sorted(set(scale.ticks))
    tol = (d1 - d0) * 1e-9
    for tick in scale.ticks:
        assert d0 - tol <= tick <= d1 + tol


@settings(max_examples=200, deadline=None)
@given(raw=st.floats(1e-9, 1e9))
def test_nice_step_matches_exhaustive_oracle(raw):
    assert nice_step(raw) == oracle_step(raw)


@settings(max_examples=100, deadline=None)
@given(lo=st.floats(-1e5, 1e5), span=st.floats(0.01, 1e5))
def test_ticks_match_grid_oracle(lo, span):
    hi = lo + span
    scale = linear_scale((lo, hi), (0.0, 1.0), target_ticks=5)
    step = nice_step(span / 5)
    assert list(scale.ticks) == oracle_ticks(lo, hi, step)


def test_format_tick():
    assert format_tick(0.0) == "0"
    assert format_tick(-0.0) == "0"
    assert format_tick(20.0) == "20"
    assert format_tick(-30.0) == "-30"
    assert format_tick(0.5) == "0.5"
    assert format_tick(2.25) == "2.25"


def test_thin_labels():
    assert thin_labels(13) == (0, 3, 6, 9, 12)
    assert thin_labels(10) == (0, 2, 4, 6, 8)
    assert thin_labels(4) == (0, 1, 2, 3)
    assert thin_labels(0) == ()
    assert len(thin_labels(200)) <= 6
