"""Point clouds, metrics, and the input file formats for them.

A PointCloud is either a coordinate array under the euclidean or squared
euclidean metric, or a precomputed dissimilarity matrix ("matrix" metric).
The matrix route is what supports finite metric spaces that never had
coordinates in the first place.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError

METRICS = ("euclidean", "sqeuclidean", "matrix")


@dataclass(eq=False)
class PointCloud:
    """A finite point set with a notion of pairwise distance.

    points: (n, d) float array of coordinates, or the full (n, n) distance
            matrix when metric == "matrix".
    """

    points: np.ndarray
    metric: str = "euclidean"

    def __post_init__(self) -> None:
        self.points = np.asarray(self.points, dtype=float)
        if self.points.ndim != 2:
            raise InputError(f"point array must be 2-dimensional, got shape {self.points.shape}")
        if self.metric not in METRICS:
            raise InputError(f"unknown metric {self.metric!r}, expected one of {METRICS}")
        if self.points.size and not np.isfinite(self.points).all():
            raise InputError("non-finite coordinates in point cloud")
        if self.metric == "matrix":
            _check_distance_matrix(self.points)

    @classmethod
    def empty(cls, dim: int = 0, metric: str = "euclidean") -> "PointCloud":
        if metric == "matrix":
            return cls(np.zeros((0, 0)), metric)
        return cls(np.zeros((0, dim)), metric)

    @classmethod
    def from_distance_matrix(cls, dist: np.ndarray) -> "PointCloud":
        return cls(np.asarray(dist, dtype=float), "matrix")

    @property
    def n_points(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def distance_matrix(self) -> np.ndarray:
        """Full symmetric matrix of pairwise dissimilarities, zero diagonal."""
        if self.metric == "matrix":
            return self.points
        return pairwise_distances(self.points, self.metric)


@dataclass(eq=False)
class LabeledPointCloud:
    """A point cloud whose rows carry an integer class label."""

    cloud: PointCloud
    labels: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=int))

    def __post_init__(self) -> None:
        self.labels = np.asarray(self.labels)
        if self.labels.ndim != 1 or len(self.labels) != self.cloud.n_points:
            raise InputError("label array must have one entry per point")
        if self.labels.size and not np.issubdtype(self.labels.dtype, np.integer):
            as_int = self.labels.astype(int)
            if not np.array_equal(as_int, self.labels):
                raise InputError("labels must be integers")
            self.labels = as_int

    @property
    def label_values(self) -> list[int]:
        return sorted(int(v) for v in np.unique(self.labels))

    def indices_of(self, label: int) -> np.ndarray:
        return np.flatnonzero(self.labels == label)

    def indices_excluding(self, label: int) -> np.ndarray:
        return np.flatnonzero(self.labels != label)


def pairwise_distances(points: np.ndarray, metric: str = "euclidean") -> np.ndarray:
    """Entrywise pairwise dissimilarity matrix.

    Each entry depends only on its own pair of rows, so the A-block of a
    stacked A+B matrix is bitwise identical to the matrix computed from A
    alone. Several exactness tests rely on that.
    """
    if metric not in ("euclidean", "sqeuclidean"):
        raise InputError(f"cannot compute distances for metric {metric!r}")
    pts = np.asarray(points, dtype=float)
    diff = pts[:, None, :] - pts[None, :, :]
    sq = np.einsum("ijk,ijk->ij", diff, diff)
    if metric == "euclidean":
        return np.sqrt(sq)
    return sq


def _check_distance_matrix(d: np.ndarray) -> None:
    if d.shape[0] != d.shape[1]:
        raise InputError(f"distance matrix must be square, got shape {d.shape}")
    if d.size == 0:
        return
    if (d < 0).any():
        raise InputError("distance matrix has negative entries")
    if np.diagonal(d).any():
        raise InputError("distance matrix has a nonzero diagonal")
    if not np.array_equal(d, d.T):
        raise InputError("distance matrix is not symmetric")


def _data_rows(text: str) -> list[list[str]]:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "," in line:
            fields = [f.strip() for f in line.split(",")]
        else:
            fields = line.split()
        rows.append(fields)
    return rows


def parse_point_table(text: str, labeled: bool = False):
    """Parse a point table: one point per row, CSV or whitespace separated.

    With labeled=True the final column is an integer class label. Returns
    (points, labels) where labels is None for unlabeled input.
    """
    rows = _data_rows(text)
    if not rows:
        return np.zeros((0, 0)), (np.zeros(0, dtype=int) if labeled else None)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise InputError("rows have inconsistent numbers of columns")
    if labeled and width < 2:
        raise InputError("labeled point table needs at least one coordinate column plus the label")
    try:
        data = np.array([[float(v) for v in r] for r in rows])
    except ValueError as exc:
        raise InputError(f"non-numeric entry in point table: {exc}") from None
    if not labeled:
        return data, None
    labels = data[:, -1]
    if not np.array_equal(labels, np.round(labels)):
        raise InputError("label column must contain integers")
    return data[:, :-1], labels.astype(int)


def load_point_cloud(path: str, metric: str = "euclidean") -> PointCloud:
    points, _ = parse_point_table(_read(path), labeled=False)
    return PointCloud(points, metric)


def load_labeled_point_cloud(path: str, metric: str = "euclidean") -> LabeledPointCloud:
    points, labels = parse_point_table(_read(path), labeled=True)
    return LabeledPointCloud(PointCloud(points, metric), labels)


def parse_distance_matrix(text: str) -> np.ndarray:
    """Parse a lower-triangular distance matrix.

    Row i holds the distances from point i to points 0..i-1. The zero
    diagonal entry may be included (then the first row is the single entry
    0); without it the first row belongs to point 1, since point 0 has no
    row. A full square matrix is accepted as well.
    """
    rows = _data_rows(text)
    if not rows:
        return np.zeros((0, 0))
    try:
        values = [[float(v) for v in r] for r in rows]
    except ValueError as exc:
        raise InputError(f"non-numeric entry in distance matrix: {exc}") from None
    n = len(values)
    lengths = [len(r) for r in values]
    if lengths == [n] * n:
        d = np.array(values)
    elif lengths == list(range(1, n + 1)):
        if all(values[i][i] == 0.0 for i in range(n)):
            # triangle with its zero diagonal
            d = np.zeros((n, n))
            for i, row in enumerate(values):
                d[i, : i + 1] = row
        else:
            # strict triangle: observed rows are points 1..n of an
            # (n+1)-point space, point 0 has an empty row
            d = np.zeros((n + 1, n + 1))
            for i, row in enumerate(values):
                d[i + 1, : i + 1] = row
        d = d + d.T
    else:
        raise InputError("distance matrix rows must form a square or a lower triangle")
    _check_distance_matrix(d)
    return d


def load_distance_matrix(path: str) -> np.ndarray:
    return parse_distance_matrix(_read(path))


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
