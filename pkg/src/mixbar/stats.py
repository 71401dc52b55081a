"""Summary statistics over mixup barcodes.

Each bar [b, d) of the subcomplex splits at its premature death d' into an
image sub-bar [b, d') and a mixup sub-bar [d', d). The mixup of a triple is
d - d', the share of the bar lost to the ambient complex; percentages
divide by the full persistence d - b. Infinite deaths must be clamped to a
finite horizon before any length is computed; clamping never drops a bar,
it only truncates. Zero-persistence bars keep their place in totals of
absolute mixup but are excluded from percentage statistics, where they
would divide by zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Mapping, Sequence

import numpy as np

from .cloud import LabeledPointCloud
from .errors import InputError
from .filtration import FilteredPair
from .reduction import (
    INF,
    IndexMixupTriple,
    ValueMixupTriple,
    mixup_barcode_indices,
    to_value_barcode,
)
from .rips import rips_pair_from_distances
from .subsample import k_medoids_indices


@dataclass(frozen=True)
class MixupBarcode:
    """All mixup triples of one degree, in both index and value form.

    Triples are stored unclamped; `clamp` is the horizon used by the
    statistics below (None means lengths involving +inf are an error).
    """

    degree: int
    index_triples: tuple[IndexMixupTriple, ...]
    triples: tuple[ValueMixupTriple, ...]
    clamp: float | None = None

    def clamped_triples(self) -> tuple[ValueMixupTriple, ...]:
        return tuple(clamp_triple(t, self.clamp) for t in self.triples)


def compute_mixup_barcode(
    fp: FilteredPair, degree: int, clamp: float | None = None
) -> MixupBarcode:
    idx = mixup_barcode_indices(fp, degree)
    vals = to_value_barcode(idx, fp)
    return MixupBarcode(
        degree=degree, index_triples=tuple(idx), triples=tuple(vals), clamp=clamp
    )


def clamp_triple(t: ValueMixupTriple, t_max: float | None) -> ValueMixupTriple:
    """Truncate both deaths at t_max (never below the birth)."""
    if t_max is None:
        if math.isinf(t.death) or math.isinf(t.death_image):
            raise InputError("triple has an infinite death and no clamp value is set")
        return t
    lo = t.birth
    return replace(
        t,
        death_image=max(lo, min(t.death_image, t_max)),
        death=max(lo, min(t.death, t_max)),
    )


def mixup(t: ValueMixupTriple, clamp: float | None = None) -> float:
    """Length d - d' of the mixup sub-bar."""
    c = clamp_triple(t, clamp)
    return c.death - c.death_image


def mixup_percentage(t: ValueMixupTriple, clamp: float | None = None) -> float:
    """Share (d - d') / (d - b) of the bar lost to the ambient complex."""
    c = clamp_triple(t, clamp)
    pers = c.death - c.birth
    if pers <= 0:
        raise InputError("mixup percentage of a zero-persistence bar is undefined")
    return (c.death - c.death_image) / pers


def total_mixup(bc: MixupBarcode) -> float:
    return math.fsum(mixup(t, bc.clamp) for t in bc.triples)


def total_persistence(bc: MixupBarcode) -> float:
    return math.fsum(t.death - t.birth for t in bc.clamped_triples())


def total_image_persistence(bc: MixupBarcode) -> float:
    return math.fsum(t.death_image - t.birth for t in bc.clamped_triples())


def _positive_percentages(bc: MixupBarcode) -> list[float]:
    out = []
    for t in bc.clamped_triples():
        if t.death > t.birth:
            out.append((t.death - t.death_image) / (t.death - t.birth))
    return out


def total_mixup_percentage(bc: MixupBarcode) -> float:
    return math.fsum(_positive_percentages(bc))


def mean_mixup_percentage(bc: MixupBarcode) -> float:
    """Average percentage over the positive-persistence bars, 0 if none."""
    pcts = _positive_percentages(bc)
    if not pcts:
        return 0.0
    return math.fsum(pcts) / len(pcts)


@dataclass(frozen=True)
class StatsConfig:
    """Settings shared by the interaction statistics.

    k_max defaults to the requested degree (the smallest construction that
    resolves it) and clamp defaults to r_max. Subsampling uses k-medoids
    with subsample_a points on the A side and subsample_b on the B side; in
    degree 0 all points are used unless subsample_degree0 is set.
    """

    r_max: float
    k_max: int | None = None
    subsample_a: int = 500
    subsample_b: int = 100
    subsample_degree0: bool = False
    clamp: float | None = None
    seed: int = 0
    profile_aggregate: str = "total"

    def __post_init__(self) -> None:
        if not self.r_max > 0:
            raise InputError(f"r_max must be positive, got {self.r_max}")
        if self.k_max is not None and self.k_max < 0:
            raise InputError(f"k_max must be non-negative, got {self.k_max}")
        if self.subsample_a < 1 or self.subsample_b < 1:
            raise InputError("subsample sizes must be at least 1")
        if self.profile_aggregate not in ("total", "mean"):
            raise InputError(
                f"profile aggregate must be 'total' or 'mean', got {self.profile_aggregate!r}"
            )

    def effective_k_max(self, degree: int) -> int:
        return self.k_max if self.k_max is not None else degree

    def effective_clamp(self) -> float:
        return self.clamp if self.clamp is not None else self.r_max


def interaction_barcode(
    dist: np.ndarray,
    a_indices: np.ndarray,
    b_indices: np.ndarray,
    degree: int,
    config: StatsConfig,
) -> MixupBarcode:
    """Mixup barcode of (points a_indices) into (a_indices ∪ b_indices).

    dist is a dissimilarity matrix over the whole cloud the indices refer to.
    """
    ids = np.concatenate([a_indices, b_indices]).astype(int)
    sub = dist[np.ix_(ids, ids)]
    fp = rips_pair_from_distances(
        sub, len(a_indices), config.r_max, config.effective_k_max(degree)
    )
    if degree > max(fp.max_dim, 0):
        return MixupBarcode(degree, (), (), config.effective_clamp())
    return compute_mixup_barcode(fp, degree, config.effective_clamp())


def _aggregate(bc: MixupBarcode, which: str) -> float:
    if which == "mean":
        return mean_mixup_percentage(bc)
    return total_mixup_percentage(bc)


def _subsampled(
    dist: np.ndarray, indices: np.ndarray, size: int, degree: int, config: StatsConfig
) -> np.ndarray:
    if degree == 0 and not config.subsample_degree0:
        return indices
    if size >= len(indices):
        return indices
    sub = dist[np.ix_(indices, indices)]
    local = k_medoids_indices(sub, size)
    return indices[np.asarray(local, dtype=int)]


def pairwise_matrix(
    x: LabeledPointCloud, degree: int, config: StatsConfig
) -> tuple[list[int], np.ndarray]:
    """Mean mixup percentage of class i against class j, for all i != j.

    Entry (i, j) subsamples class i to the A size and class j to the B size
    and measures how much of class i's degree-k structure the presence of
    class j destroys early. The diagonal is 0 by convention.
    """
    labels = x.label_values
    if len(labels) < 2:
        raise InputError("pairwise matrix needs at least two distinct labels")
    dist = x.cloud.distance_matrix()
    a_sel = {
        lab: _subsampled(dist, x.indices_of(lab), config.subsample_a, degree, config)
        for lab in labels
    }
    b_sel = {
        lab: _subsampled(dist, x.indices_of(lab), config.subsample_b, degree, config)
        for lab in labels
    }
    out = np.zeros((len(labels), len(labels)))
    for i, la in enumerate(labels):
        for j, lb in enumerate(labels):
            if i == j:
                continue
            bc = interaction_barcode(dist, a_sel[la], b_sel[lb], degree, config)
            out[i, j] = mean_mixup_percentage(bc)
    return labels, out


@dataclass(frozen=True)
class ProfileResult:
    layers: tuple[int, ...]
    steps: tuple[int, ...]
    values: np.ndarray  # shape (len(layers), len(steps))


def mixup_profile(
    series: Mapping[tuple[int, int], LabeledPointCloud],
    degree: int,
    config: StatsConfig,
) -> ProfileResult:
    """Per-(layer, step) entanglement: the worst class-vs-rest mixup percentage.

    For every cloud in the series and every label j, measures class j
    against the union of the other classes and keeps the maximum over j.
    Subsampling indices are chosen once on the reference cloud (the first
    key in sorted order) and reused everywhere, so the profile tracks the
    same examples across the whole series.
    """
    if not series:
        raise InputError("profile needs a nonempty series")
    keys = sorted(series)
    layers = tuple(sorted({k for k, _ in keys}))
    steps = tuple(sorted({t for _, t in keys}))
    if len(keys) != len(layers) * len(steps):
        raise InputError("profile series must cover the full (layer, step) grid")
    ref = series[keys[0]]
    labels = ref.label_values
    if len(labels) < 2:
        raise InputError("profile needs at least two distinct labels")
    for key in keys:
        cloud = series[key]
        if cloud.label_values != labels:
            raise InputError(f"cloud at {key} has a different label set")
        if cloud.cloud.n_points != ref.cloud.n_points:
            raise InputError(f"cloud at {key} has a different number of points")
        if not np.array_equal(cloud.labels, ref.labels):
            raise InputError(f"cloud at {key} has a different label layout")

    ref_dist = ref.cloud.distance_matrix()
    a_sel = {
        lab: _subsampled(ref_dist, ref.indices_of(lab), config.subsample_a, degree, config)
        for lab in labels
    }
    b_sel = {
        lab: _subsampled(
            ref_dist, ref.indices_excluding(lab), config.subsample_b, degree, config
        )
        for lab in labels
    }

    values = np.zeros((len(layers), len(steps)))
    for li, layer in enumerate(layers):
        for si, step in enumerate(steps):
            cloud = series[(layer, step)]
            dist = cloud.cloud.distance_matrix()
            best = 0.0
            for lab in labels:
                bc = interaction_barcode(dist, a_sel[lab], b_sel[lab], degree, config)
                best = max(best, _aggregate(bc, config.profile_aggregate))
            values[li, si] = best
    return ProfileResult(layers=layers, steps=steps, values=values)


def series_from_list(
    clouds: Sequence[Sequence[LabeledPointCloud]],
) -> dict[tuple[int, int], LabeledPointCloud]:
    """Convenience: clouds[layer][step] -> the mapping form used by mixup_profile."""
    return {
        (k, t): clouds[k][t]
        for k in range(len(clouds))
        for t in range(len(clouds[k]))
    }
