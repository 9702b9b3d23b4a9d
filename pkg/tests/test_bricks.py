"""Brick catalogue and enumeration."""

import pytest

from quiverdef.bricks import (atlas, atlas_report, completeness_sweep,
                              enumerate_reps, _partitions)
from quiverdef.presentations import build_algebra
from quiverdef import reps as R

PARAMS = [("I", 2), ("II", 2), ("III", 3)]


@pytest.mark.parametrize("family,d", PARAMS)
def test_atlas_has_fifteen_bricks(family, d):
    for kind in ("full", "bar"):
        entries = atlas(family, d, kind)
        assert len(entries) == 15
        names = [name for name, _ in entries]
        assert len(set(names)) == 15
        for _, m in entries:
            assert R.end_dim(m) == 1


@pytest.mark.parametrize("family,d", PARAMS)
def test_atlas_pairwise_distinct(family, d):
    entries = atlas(family, d, "bar")
    for i, (_, m) in enumerate(entries):
        for _, n in entries[i + 1:]:
            assert not R.is_isomorphic(m, n)


@pytest.mark.parametrize("family,d", PARAMS)
def test_atlas_report_invariants(family, d):
    rep = atlas_report(family, d, "full")
    for entry in rep["bricks"]:
        assert entry["end_dim"] == 1
        assert entry["stable_end_dim"] == 1
        assert entry["total_dim"] <= 4
    assert rep["schema_version"] == 1


@pytest.mark.parametrize("family,d", PARAMS)
def test_inflation_matches_full_atlas(family, d):
    full = build_algebra(family, d, "full")
    full_entries = dict(atlas(family, d, "full"))
    for name, m in atlas(family, d, "bar"):
        lifted = R.inflate(m, full)
        assert R.is_isomorphic(lifted, full_entries[name])
        assert R.stable_end_dim(lifted) == 1


def test_partitions():
    assert sorted(_partitions(4)) == sorted(
        [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])
    assert list(_partitions(0)) == [()]


def test_enumerate_reps_counts_simples():
    a = build_algebra("I", 2, "bar")
    reps = list(enumerate_reps(a, (1, 0, 0)))
    assert len(reps) == 1
    assert R.end_dim(reps[0]) == 1


def test_enumerate_reps_respects_relations():
    a = build_algebra("II", 2, "bar")
    for m in enumerate_reps(a, (1, 1, 0)):
        for gen in a.generators:
            assert m.evaluate_combination(gen).is_zero()


def test_loop_enumeration_uses_canonical_forms():
    a = build_algebra("III", 3, "bar")
    # dims (0, 2, 0): alpha ranges over nilpotent Jordan types of size 2
    reps = list(enumerate_reps(a, (0, 2, 0)))
    assert len(reps) == 2
    end_dims = sorted(R.end_dim(m) for m in reps)
    assert end_dims == [2, 4]   # S1+S1 and the length-2 alpha string


@pytest.mark.parametrize("family,d", PARAMS)
def test_sweep_dim_four(family, d):
    result = completeness_sweep(family, d, max_total_dim=4)
    assert result["ok"]
    assert result["brick_classes"] == 15
    assert result["unmatched_classes"] == 0
