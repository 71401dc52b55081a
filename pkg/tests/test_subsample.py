import itertools

import numpy as np
import pytest

from mixbar import (
    InputError,
    LabeledPointCloud,
    PointCloud,
    consistent_subsample,
    k_medoids,
    k_medoids_indices,
    pairwise_distances,
)
from mixbar.subsample import _cost


def test_line_single_medoid():
    cloud = PointCloud(np.array([[0.0], [10.0], [20.0]]))
    sel = k_medoids(cloud, 1)
    assert sel.indices == (1,)
    assert sel.cost == 20.0


def test_k_at_least_n_returns_everything():
    cloud = PointCloud(np.zeros((4, 2)))
    sel = k_medoids(cloud, 7)
    assert sel.indices == (0, 1, 2, 3)
    assert sel.cost == 0.0


def test_rejects_bad_k():
    cloud = PointCloud(np.zeros((3, 2)))
    with pytest.raises(InputError):
        k_medoids(cloud, 0)
    with pytest.raises(InputError):
        k_medoids(PointCloud.empty(2), 1)


def test_selection_is_sorted_and_deterministic():
    rng = np.random.default_rng(2)
    cloud = PointCloud(rng.random((15, 3)))
    one = k_medoids(cloud, 4)
    two = k_medoids(cloud, 4)
    assert one == two
    assert list(one.indices) == sorted(one.indices)


def test_seed_does_not_change_result():
    # the tie-break is lowest index, so the seed is accepted but inert
    rng = np.random.default_rng(8)
    cloud = PointCloud(rng.random((12, 2)))
    assert k_medoids(cloud, 3, seed=0) == k_medoids(cloud, 3, seed=99)


def exhaustive_best(dist, k):
    n = dist.shape[0]
    return min(
        _cost(dist, sel) for sel in itertools.combinations(range(n), k)
    )


def test_near_optimal_on_small_instances():
    rng = np.random.default_rng(13)
    for _ in range(30):
        n = int(rng.integers(3, 9))
        k = int(rng.integers(1, min(3, n) + 1))
        pts = rng.random((n, 2))
        dist = pairwise_distances(pts)
        got = _cost(dist, k_medoids_indices(dist, k))
        best = exhaustive_best(dist, k)
        assert got <= best * 1.05 + 1e-12


def test_locally_optimal_under_single_swaps():
    rng = np.random.default_rng(14)
    pts = rng.random((20, 2))
    dist = pairwise_distances(pts)
    selected = k_medoids_indices(dist, 5)
    base = _cost(dist, selected)
    others = [i for i in range(20) if i not in selected]
    for pos in range(len(selected)):
        for cand in others:
            trial = list(selected)
            trial[pos] = cand
            assert _cost(dist, trial) >= base - 1e-12


def two_blob_series(n_steps=2):
    rng = np.random.default_rng(21)
    base = rng.random((10, 2))
    labels = np.r_[np.zeros(5, dtype=int), np.ones(5, dtype=int)]
    # rigid shifts; label layout identical across the series
    return [
        LabeledPointCloud(PointCloud(base + step), labels) for step in range(n_steps)
    ]


def test_consistent_subsample_per_label():
    picks = consistent_subsample(two_blob_series(), k_a=3, k_b=2)
    assert set(picks) == {0, 1}
    a0, b0 = picks[0].a_indices, picks[0].b_indices
    # label 0 points occupy indices 0..4, label 1 points 5..9
    assert all(i < 5 for i in a0)
    assert all(i >= 5 for i in b0)
    assert len(a0) == 3 and len(b0) == 2
    assert all(i >= 5 for i in picks[1].a_indices)
    assert all(i < 5 for i in picks[1].b_indices)


def test_consistent_subsample_deterministic():
    series = two_blob_series()
    assert consistent_subsample(series, 2, 2) == consistent_subsample(series, 2, 2)


def test_consistent_subsample_rejects_mismatched_layout():
    series = two_blob_series()
    bad = series[1]
    series[1] = LabeledPointCloud(bad.cloud, bad.labels[::-1].copy())
    with pytest.raises(InputError):
        consistent_subsample(series, k_a=3, k_b=2)
