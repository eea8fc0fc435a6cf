import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracles import grid_points
from wmoduli.enumerate import (
    EnumerationShard, HeightBand, band_filter, band_of, check_partition, count_grid, count_points,
    count_shard, enumerate_points, enumerate_shard, full_shard, split_shards, unit_bands,
)
from wmoduli.wpspace import COMPACT, ExactHeight, WeightedPoint, canonicalize, weighted_height


def brute_grid_count(h):
    # the sign rule lets J2 >= 0; other |J_i| <= h^{q_i} and J10 != 0
    box = [range(0, h + 1)] + [range(-(h**q), h**q + 1) for q in (2, 3, 5)]
    return sum(1 for J in itertools.product(*box) if J[3])


def test_count_grid():
    assert count_grid(1) == brute_grid_count(1) == 36
    assert count_grid(2) == brute_grid_count(2)
    with pytest.raises(ValueError):
        count_grid(0)


@pytest.mark.parametrize("h", [1, 2])
def test_enumeration_matches_grid_oracle(h):
    pts = [p.coords for p in enumerate_points(h)]
    assert len(pts) == len(set(pts))
    assert set(pts) == grid_points(h)
    assert pts == sorted(pts)


def test_known_counts():
    assert count_points(1) == 27
    assert count_points(2) == 24423
    for h in range(1, 5):
        assert count_points(h) < count_grid(h)


def test_monotone():
    assert {p.coords for p in enumerate_points(1)} <= {p.coords for p in enumerate_points(2)}


@pytest.mark.parametrize("k", [2, 7, 16])
def test_h2_shard_partition(k):
    merged = sorted(p.coords for s in split_shards(2, k) for p in enumerate_shard(s))
    assert merged == [p.coords for p in enumerate_points(2)]


def test_points_are_canonical():
    for p in enumerate_points(2):
        assert canonicalize(p) == p


def test_h1_points():
    pts = {p.coords for p in enumerate_points(1)}
    assert (0, 0, 0, 1) in pts and (1, 1, 1, 1) in pts
    assert (-1, 1, -1, -1) not in pts
    # every twist pair {J, J*} with J2 = 0 keeps one member
    assert (0, -1, 1, 1) in pts and (0, -1, -1, -1) not in pts


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(1, 9))
def test_shards_partition_enumeration(h, k):
    shards = split_shards(h, k)
    check_partition(shards)
    assert sum(count_shard(s) for s in shards) == count_points(h)
    if h <= 2:
        merged = [p for s in shards for p in enumerate_shard(s)]
        assert sorted(merged, key=lambda p: p.coords) == sorted(
            enumerate_points(h), key=lambda p: p.coords)


@settings(max_examples=60, deadline=None)
@given(st.integers(-32, 33), st.integers(-32, 33))
def test_count_shard_matches_length(a, b):
    lo, hi = min(a, b), max(a, b)
    s = EnumerationShard(lo, hi, 2)
    assert count_shard(s) == sum(1 for _ in enumerate_shard(s))


def test_empty_shards():
    shards = split_shards(1, 5)
    assert len(shards) == 5
    assert sum(count_shard(s) for s in shards) == 27


def test_shard_checks():
    with pytest.raises(ValueError):
        EnumerationShard(0, 1, 0)
    with pytest.raises(ValueError):
        EnumerationShard(-100, 1, 2)
    with pytest.raises(ValueError):
        split_shards(2, 0)
    with pytest.raises(ValueError):
        check_partition([EnumerationShard(-32, 5, 2), EnumerationShard(0, 33, 2)])
    with pytest.raises(ValueError):
        check_partition([EnumerationShard(-1, 0, 1), EnumerationShard(0, 2, 2)])
    assert full_shard(2) == EnumerationShard(-32, 33, 2)


def test_bands():
    b = HeightBand(1, 2)
    assert str(b) == "(1,2]" and HeightBand.parse("(1,2]") == b
    assert ExactHeight(2, 1) in b and ExactHeight(1, 1) not in b
    assert ExactHeight(3, 2) in b and ExactHeight(5, 2) not in b
    assert unit_bands(3) == [HeightBand(0, 1), HeightBand(1, 2), HeightBand(2, 3)]
    with pytest.raises(ValueError):
        HeightBand(2, 2)
    assert band_of(WeightedPoint((1, 1, 1, 1), COMPACT)) == HeightBand(0, 1)
    assert band_of(WeightedPoint((2, 1, 1, 1), COMPACT)) == HeightBand(1, 2)


def test_band_filter_counts():
    pts = list(enumerate_points(2))
    lo = list(band_filter(pts, HeightBand(0, 1)))
    hi = list(band_filter(pts, HeightBand(1, 2)))
    assert len(lo) == 27 and len(hi) == 24396
    for p in hi:
        assert weighted_height(p) > ExactHeight(1, 1)
