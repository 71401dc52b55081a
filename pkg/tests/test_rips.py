import numpy as np
import pytest

from mixbar import (
    InputError,
    PointCloud,
    build_rips_pair,
    restrict_to_L,
    rips_pair_from_distances,
)


def unit_square():
    return PointCloud(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]))


def test_square_center_cell_counts(square_center_pair):
    fp = square_center_pair
    # 5 vertices, C(5,2)=10 edges, C(5,3)=10 triangles, C(5,4)=5 tetrahedra
    assert fp.n == 30
    assert fp.l_cell_count() == 15
    assert fp.max_dim == 3


def test_vertices_precede_everything(square_center_pair):
    fp = square_center_pair
    first = fp.cells[:5]
    assert all(c.dim == 0 and c.value == 0.0 for c in first)
    # at equal value and dimension, subcomplex cells come before ambient ones
    assert [c.member for c in first] == ["L", "L", "L", "L", "K"]


def test_values_are_max_pairwise_distance(square_center_pair):
    fp = square_center_pair
    dist = np.vstack(
        [unit_square().points, [[0.5, 0.5]]]
    )
    from mixbar import pairwise_distances

    d = pairwise_distances(dist)
    for c in fp.cells:
        vs = c.vertices
        want = 0.0 if len(vs) == 1 else max(d[i, j] for i in vs for j in vs if i < j)
        assert c.value == want


def test_member_is_l_iff_all_vertices_from_a(square_center_pair):
    for c in square_center_pair.cells:
        assert (c.member == "L") == all(v < 4 for v in c.vertices)


def test_boundary_faces_are_facets(square_center_pair):
    fp = square_center_pair
    for c in fp.cells:
        assert len(c.boundary) == (0 if c.dim == 0 else c.dim + 1)
        for fid in c.boundary:
            face = fp.cell(fid)
            assert face.dim == c.dim - 1
            assert set(face.vertices) < set(c.vertices)


def test_restriction_equals_building_a_alone():
    a = unit_square()
    b = PointCloud(np.array([[0.5, 0.5]]))
    pair = build_rips_pair(a, b, r_max=2.0, k_max=2)
    alone = build_rips_pair(a, None, r_max=2.0, k_max=2)
    sub = restrict_to_L(pair)
    got = [(c.dim, c.value, c.vertices, c.boundary) for c in sub.cells]
    want = [(c.dim, c.value, c.vertices, c.boundary) for c in alone.cells]
    assert got == want


def test_r_max_is_inclusive():
    pts = PointCloud(np.array([[0.0], [1.0]]))
    fp = build_rips_pair(pts, None, r_max=1.0, k_max=1)
    assert fp.n == 3  # two vertices plus the edge at exactly r_max
    tight = build_rips_pair(pts, None, r_max=0.999, k_max=1)
    assert tight.n == 2


def test_k_max_caps_dimension():
    fp = build_rips_pair(unit_square(), None, r_max=2.0, k_max=0)
    assert fp.max_dim == 1


def test_deterministic_construction():
    rng = np.random.default_rng(3)
    a = PointCloud(rng.random((7, 3)))
    b = PointCloud(rng.random((3, 3)))
    one = build_rips_pair(a, b, r_max=0.9, k_max=2)
    two = build_rips_pair(a, b, r_max=0.9, k_max=2)
    assert one == two


def test_empty_a_rejected():
    with pytest.raises(InputError):
        build_rips_pair(PointCloud.empty(2), None, r_max=1.0, k_max=1)


def test_metric_mismatch_rejected():
    a = PointCloud(np.zeros((2, 2)), metric="euclidean")
    b = PointCloud(np.ones((1, 2)), metric="sqeuclidean")
    with pytest.raises(InputError):
        build_rips_pair(a, b, r_max=1.0, k_max=1)


def test_dimension_mismatch_rejected():
    a = PointCloud(np.zeros((2, 2)))
    b = PointCloud(np.ones((1, 3)))
    with pytest.raises(InputError):
        build_rips_pair(a, b, r_max=1.0, k_max=1)


def test_matrix_metric_with_b_rejected():
    a = PointCloud.from_distance_matrix(np.zeros((2, 2)))
    b = PointCloud(np.ones((1, 2)))
    with pytest.raises(InputError, match="rips_pair_from_distances"):
        build_rips_pair(a, b, r_max=1.0, k_max=1)


def test_from_distances_split():
    d = np.array(
        [[0.0, 1.0, 5.0], [1.0, 0.0, 5.0], [5.0, 5.0, 0.0]]
    )
    fp = rips_pair_from_distances(d, 2, r_max=6.0, k_max=1)
    members = {c.vertices: c.member for c in fp.cells if c.dim == 0}
    assert members == {(0,): "L", (1,): "L", (2,): "K"}


def test_from_distances_validates_split():
    d = np.zeros((2, 2))
    with pytest.raises(InputError):
        rips_pair_from_distances(d, 0, r_max=1.0, k_max=1)
    with pytest.raises(InputError):
        rips_pair_from_distances(d, 3, r_max=1.0, k_max=1)


def test_negative_r_max_rejected():
    with pytest.raises(InputError):
        build_rips_pair(unit_square(), None, r_max=-1.0, k_max=1)
