"""Cross-checking the reduction fast path against the rank-function oracle.

The two routes share nothing: the fast path reduces sparse sorted-id
columns, the oracle eliminates dense bitsets and takes second differences
of rank grids. On any instance small enough for the oracle, the (b, d)
pairs of the triples must equal the oracle's standard barcode of L, and the
(b, d') pairs must equal its image barcode, both as exact index multisets.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .cloud import PointCloud
from .filtration import FilteredPair
from .oracle import barcode_from_ranks, rank_function
from .reduction import mixup_barcode_indices
from .rips import build_rips_pair


def random_rips_instance(
    rng: np.random.Generator,
    max_a: int = 6,
    max_b: int = 3,
    dim_range: tuple[int, int] = (2, 4),
    k_max: int = 2,
) -> FilteredPair:
    """A small random pair: uniform points, random threshold."""
    n_a = int(rng.integers(1, max_a + 1))
    n_b = int(rng.integers(0, max_b + 1))
    dim = int(rng.integers(dim_range[0], dim_range[1] + 1))
    pts = rng.uniform(0.0, 1.0, size=(n_a + n_b, dim))
    a = PointCloud(pts[:n_a])
    b = PointCloud(pts[n_a:]) if n_b else None
    span = float(np.sqrt(dim))
    r_max = float(rng.uniform(0.05, 1.05)) * span
    return build_rips_pair(a, b, r_max=r_max, k_max=k_max)


def check_instance(fp: FilteredPair, degrees) -> list[str]:
    """Compare fast path and oracle on one pair; returns mismatch messages."""
    problems: list[str] = []
    for k in degrees:
        if k > max(fp.max_dim, 0):
            continue
        triples = mixup_barcode_indices(fp, k)
        for t in triples:
            if not t.birth <= t.death_image <= t.death:
                problems.append(f"degree {k}: triple order violated: {t}")
        fast_standard = Counter((t.birth, t.death) for t in triples)
        fast_image = Counter(
            (t.birth, t.death_image) for t in triples if t.death_image > t.birth
        )
        oracle_standard = Counter(barcode_from_ranks(rank_function(fp, k, "standard_L")))
        oracle_image = Counter(barcode_from_ranks(rank_function(fp, k, "image")))
        if fast_standard != oracle_standard:
            problems.append(
                f"degree {k}: (b, d) multiset mismatch: "
                f"fast {sorted(fast_standard.elements())} "
                f"vs oracle {sorted(oracle_standard.elements())}"
            )
        if fast_image != oracle_image:
            problems.append(
                f"degree {k}: (b, d') multiset mismatch: "
                f"fast {sorted(fast_image.elements())} "
                f"vs oracle {sorted(oracle_image.elements())}"
            )
    return problems


def run_fuzz(
    instances: int,
    seed: int = 0,
    degrees=(0, 1, 2),
    max_a: int = 6,
    max_b: int = 3,
    dim_range: tuple[int, int] = (2, 4),
) -> tuple[int, list[str]]:
    """Fuzz `instances` random pairs; returns (count checked, mismatches)."""
    rng = np.random.default_rng(seed)
    problems: list[str] = []
    for i in range(instances):
        fp = random_rips_instance(rng, max_a=max_a, max_b=max_b, dim_range=dim_range)
        for msg in check_instance(fp, degrees):
            problems.append(f"instance {i}: {msg}")
    return instances, problems
