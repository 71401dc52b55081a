"""Command-line interface.

Subcommands: mixup, pairwise, profile, subsample, verify, plot. Exit codes:
0 on success, 1 when verification finds a mismatch, 2 on input errors.
All outputs are deterministic: the same config and input bytes give the
same output bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .cloud import (
    LabeledPointCloud,
    PointCloud,
    load_distance_matrix,
    load_labeled_point_cloud,
    load_point_cloud,
)
from .errors import InputError
from .filtration import FilteredPair, parse_explicit_pair
from .output import csv_lines, float_from_json, json_dumps
from .plot import plot_mixup_barcode
from .reduction import INF, ValueMixupTriple
from .rips import build_rips_pair, rips_pair_from_distances
from .stats import (
    MixupBarcode,
    StatsConfig,
    compute_mixup_barcode,
    mean_mixup_percentage,
    mixup_profile,
    pairwise_matrix,
    total_image_persistence,
    total_mixup,
    total_mixup_percentage,
    total_persistence,
)
from .subsample import k_medoids
from .verify import check_instance, run_fuzz

METRIC_CHOICES = ("euclidean", "sqeuclidean", "matrix")
FORMAT_CHOICES = ("json", "csv", "svg")


@dataclass
class RunConfig:
    command: str
    a: str | None = None
    b: str | None = None
    filtration: str | None = None
    results: str | None = None
    metric: str = "euclidean"
    r_max: float | None = None
    k_max: int = 2
    degrees: list[int] | None = None
    subsample_a: int = 500
    subsample_b: int = 100
    clamp: float | None = None
    seed: int = 0
    split: int | None = None
    instances: int = 200
    out: str | None = None
    format: str = "json"
    profile_aggregate: str = "total"
    params: dict = field(default_factory=dict)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixbar",
        description="Mixup barcodes: how early the ambient complex destroys the "
        "persistent homology of a subcomplex.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, inputs=True, vr=True, sampling=False):
        if inputs:
            p.add_argument("--a", help="point cloud A (or distance matrix / manifest, depending on the command)")
            p.add_argument("--b", help="point cloud B")
            p.add_argument("--filtration", help="explicit filtration file instead of point clouds")
        if vr:
            p.add_argument("--metric", choices=METRIC_CHOICES, default="euclidean")
            p.add_argument("--rmax", type=float, dest="r_max", help="Rips diameter threshold")
            p.add_argument("--kmax", type=int, dest="k_max", default=2, help="highest homology degree the construction resolves (default 2)")
            p.add_argument("--split", type=int, help="with --metric matrix: number of leading rows that form A")
            p.add_argument("--clamp", type=float, help="horizon for infinite bars (default: rmax, or the largest value of an explicit filtration)")
        p.add_argument("--degrees", help="comma-separated homology degrees, e.g. 0,1")
        if sampling:
            p.add_argument("--subsample-a", type=int, default=500, dest="subsample_a")
            p.add_argument("--subsample-b", type=int, default=100, dest="subsample_b")
            p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("mixup", help="mixup barcode of A inside A ∪ B")
    add_common(p)
    p.add_argument("--format", choices=FORMAT_CHOICES, default="json")

    p = sub.add_parser("pairwise", help="class-against-class mixup matrix of a labeled cloud")
    add_common(p, sampling=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("profile", help="mixup profile over a (layer, step) series of labeled clouds")
    add_common(p, sampling=True)
    p.add_argument("--profile-aggregate", choices=("total", "mean"), default="total", dest="profile_aggregate")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("subsample", help="k-medoids point selection")
    p.add_argument("--a", required=True, help="point cloud (or distance matrix with --metric matrix)")
    p.add_argument("--metric", choices=METRIC_CHOICES, default="euclidean")
    p.add_argument("--subsample-a", type=int, required=True, dest="subsample_a", help="number of medoids")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("verify", help="cross-check the reduction against the rank oracle")
    add_common(p)
    p.add_argument("--instances", type=int, default=200, help="random instances when no input is given (default 200)")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("plot", help="render a mixup result JSON as an SVG barcode")
    p.add_argument("--results", required=True, help="JSON produced by the mixup subcommand")
    p.add_argument("--degrees", help="single degree to plot (default: lowest present)")
    p.add_argument("--out", help="output path (default: stdout)")
    return parser


def _parse_degrees(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        degrees = sorted({int(part) for part in text.split(",") if part.strip() != ""})
    except ValueError:
        raise InputError(f"cannot parse degrees {text!r}; expected comma-separated integers") from None
    if not degrees:
        raise InputError("empty degree list")
    if any(d < 0 for d in degrees):
        raise InputError("degrees must be non-negative")
    return degrees


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in (
        "a", "b", "filtration", "results", "metric", "r_max", "k_max",
        "subsample_a", "subsample_b", "clamp", "seed", "split",
        "instances", "out", "format", "profile_aggregate",
    ):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    cfg.degrees = _parse_degrees(getattr(args, "degrees", None))
    return cfg


def _load_pair(cfg: RunConfig) -> tuple[FilteredPair, float]:
    """Build or parse the input pair; returns it with the default clamp."""
    if cfg.filtration is not None:
        if cfg.a or cfg.b:
            raise InputError("give either --filtration or point clouds, not both")
        with open(cfg.filtration, "r", encoding="utf-8") as fh:
            fp = parse_explicit_pair(fh.read())
        top = max((c.value for c in fp.cells), default=0.0)
        return fp, (cfg.clamp if cfg.clamp is not None else top)
    if cfg.a is None:
        raise InputError("an input is required: --a (with optional --b) or --filtration")
    if cfg.r_max is None:
        raise InputError("--rmax is required for point-cloud input")
    if cfg.r_max < 0:
        raise InputError(f"--rmax must be non-negative, got {cfg.r_max}")
    if cfg.k_max < 0:
        raise InputError(f"--kmax must be non-negative, got {cfg.k_max}")
    if cfg.metric == "matrix":
        if cfg.b is not None:
            raise InputError("--metric matrix takes a single joint matrix via --a; use --split to mark A")
        dist = load_distance_matrix(cfg.a)
        n = dist.shape[0]
        if n == 0:
            raise InputError("empty distance matrix")
        n_a = cfg.split if cfg.split is not None else n
        fp = rips_pair_from_distances(dist, n_a, cfg.r_max, cfg.k_max)
    else:
        a = load_point_cloud(cfg.a, cfg.metric)
        b = load_point_cloud(cfg.b, cfg.metric) if cfg.b is not None else None
        fp = build_rips_pair(a, b, r_max=cfg.r_max, k_max=cfg.k_max)
    return fp, (cfg.clamp if cfg.clamp is not None else cfg.r_max)


def _default_degrees(cfg: RunConfig, fp: FilteredPair | None) -> list[int]:
    if cfg.degrees is not None:
        if cfg.filtration is None and any(d > cfg.k_max for d in cfg.degrees):
            raise InputError(
                f"degrees {cfg.degrees} exceed --kmax {cfg.k_max}; raise --kmax"
            )
        return cfg.degrees
    if cfg.filtration is not None and fp is not None:
        return list(range(0, max(fp.max_dim, 0) + 1))
    return list(range(0, cfg.k_max + 1))


def _degree_barcode(fp: FilteredPair, degree: int, clamp: float) -> MixupBarcode:
    if degree > max(fp.max_dim, 0):
        return MixupBarcode(degree, (), (), clamp)
    return compute_mixup_barcode(fp, degree, clamp)


def _value_or_inf(v: float):
    if v == INF:
        return INF
    return v


def _triple_row(t: ValueMixupTriple) -> dict:
    return {
        "birth": t.birth,
        "death_image": _value_or_inf(t.death_image),
        "death": t.death,
        "zero_persistence": t.zero_persistence,
    }


def _index_row(t) -> dict:
    return {
        "birth": t.birth,
        "death_image": t.death_image if t.death_image == INF else int(t.death_image),
        "death": t.death if t.death == INF else int(t.death),
    }


def _degree_entry(bc: MixupBarcode) -> dict:
    return {
        "triples": [_triple_row(t) for t in bc.triples],
        "index_triples": [_index_row(t) for t in bc.index_triples],
        "statistics": {
            "bars": len(bc.triples),
            "total_mixup": total_mixup(bc),
            "total_mixup_percentage": total_mixup_percentage(bc),
            "mean_mixup_percentage": mean_mixup_percentage(bc),
            "total_persistence": total_persistence(bc),
            "total_image_persistence": total_image_persistence(bc),
            "clamp": bc.clamp,
        },
    }


def _params_dict(cfg: RunConfig, keys) -> dict:
    return {key: getattr(cfg, key) for key in keys}


def _write(cfg: RunConfig, text: str) -> None:
    if cfg.out is None:
        sys.stdout.write(text)
    else:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_mixup(cfg: RunConfig) -> int:
    fp, clamp = _load_pair(cfg)
    degrees = _default_degrees(cfg, fp)
    barcodes = {k: _degree_barcode(fp, k, clamp) for k in degrees}
    if cfg.format == "svg":
        if len(degrees) != 1:
            raise InputError("--format svg plots a single degree; pass --degrees with one value")
        _write(cfg, plot_mixup_barcode(barcodes[degrees[0]]))
        return 0
    if cfg.format == "csv":
        rows = [["degree", "birth", "death_image", "death", "zero_persistence"]]
        for k in degrees:
            for t in barcodes[k].triples:
                rows.append([k, t.birth, t.death_image, t.death, int(t.zero_persistence)])
        _write(cfg, csv_lines(rows))
        return 0
    result = {
        "command": "mixup",
        "params": _params_dict(
            cfg, ("a", "b", "filtration", "metric", "r_max", "k_max", "split", "clamp")
        )
        | {"degrees": degrees},
        "cells": fp.n,
        "cells_in_subcomplex": fp.l_cell_count(),
        "degrees": {str(k): _degree_entry(barcodes[k]) for k in degrees},
    }
    _write(cfg, json_dumps(result))
    return 0


def _stats_config(cfg: RunConfig) -> StatsConfig:
    if cfg.r_max is None:
        raise InputError("--rmax is required")
    return StatsConfig(
        r_max=cfg.r_max,
        k_max=cfg.k_max,
        subsample_a=cfg.subsample_a,
        subsample_b=cfg.subsample_b,
        clamp=cfg.clamp,
        seed=cfg.seed,
        profile_aggregate=cfg.profile_aggregate,
    )


def cmd_pairwise(cfg: RunConfig) -> int:
    if cfg.a is None:
        raise InputError("--a (a labeled point cloud) is required")
    if cfg.metric == "matrix":
        raise InputError("pairwise expects a labeled coordinate cloud, not a distance matrix")
    cloud = load_labeled_point_cloud(cfg.a, cfg.metric)
    sconf = _stats_config(cfg)
    degrees = cfg.degrees if cfg.degrees is not None else [0]
    matrices = {}
    labels = None
    for k in degrees:
        labels, mat = pairwise_matrix(cloud, k, sconf)
        matrices[k] = mat
    if cfg.format == "csv":
        if len(degrees) != 1:
            raise InputError("CSV output holds a single degree; pass --degrees with one value")
        mat = matrices[degrees[0]]
        rows = [["label"] + [str(l) for l in labels]]
        for i, lab in enumerate(labels):
            rows.append([str(lab)] + [float(v) for v in mat[i]])
        _write(cfg, csv_lines(rows))
        return 0
    result = {
        "command": "pairwise",
        "params": _params_dict(
            cfg,
            ("a", "metric", "r_max", "k_max", "subsample_a", "subsample_b", "clamp", "seed"),
        )
        | {"degrees": degrees},
        "labels": labels,
        "degrees": {
            str(k): [[float(v) for v in row] for row in matrices[k]] for k in degrees
        },
    }
    _write(cfg, json_dumps(result))
    return 0


def _load_manifest(path: str, metric: str = "euclidean") -> dict[tuple[int, int], LabeledPointCloud]:
    import os

    base = os.path.dirname(os.path.abspath(path))
    series: dict[tuple[int, int], LabeledPointCloud] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split(None, 2)
            if len(parts) != 3:
                raise InputError(f"manifest line {lineno}: expected `layer step path`")
            try:
                layer, step = int(parts[0]), int(parts[1])
            except ValueError:
                raise InputError(f"manifest line {lineno}: layer and step must be integers") from None
            cloud_path = parts[2]
            if not os.path.isabs(cloud_path):
                cloud_path = os.path.join(base, cloud_path)
            if (layer, step) in series:
                raise InputError(f"manifest line {lineno}: duplicate entry for ({layer}, {step})")
            series[(layer, step)] = load_labeled_point_cloud(cloud_path, metric)
    if not series:
        raise InputError("empty profile manifest")
    return series


def cmd_profile(cfg: RunConfig) -> int:
    if cfg.a is None:
        raise InputError("--a (a series manifest file) is required")
    if cfg.metric == "matrix":
        raise InputError("profile expects labeled coordinate clouds, not distance matrices")
    series = _load_manifest(cfg.a, cfg.metric)
    sconf = _stats_config(cfg)
    degrees = cfg.degrees if cfg.degrees is not None else [0, 1]
    profiles = {k: mixup_profile(series, k, sconf) for k in degrees}
    first = profiles[degrees[0]]
    if cfg.format == "csv":
        if len(degrees) != 1:
            raise InputError("CSV output holds a single degree; pass --degrees with one value")
        prof = profiles[degrees[0]]
        rows = [["layer"] + [str(s) for s in prof.steps]]
        for li, layer in enumerate(prof.layers):
            rows.append([str(layer)] + [float(v) for v in prof.values[li]])
        _write(cfg, csv_lines(rows))
        return 0
    result = {
        "command": "profile",
        "params": _params_dict(
            cfg,
            (
                "a", "metric", "r_max", "k_max", "subsample_a", "subsample_b",
                "clamp", "seed", "profile_aggregate",
            ),
        )
        | {"degrees": degrees},
        "layers": list(first.layers),
        "steps": list(first.steps),
        "degrees": {
            str(k): [[float(v) for v in row] for row in profiles[k].values]
            for k in degrees
        },
    }
    _write(cfg, json_dumps(result))
    return 0


def cmd_subsample(cfg: RunConfig) -> int:
    if cfg.metric == "matrix":
        cloud = PointCloud.from_distance_matrix(load_distance_matrix(cfg.a))
    else:
        cloud = load_point_cloud(cfg.a, cfg.metric)
    sel = k_medoids(cloud, cfg.subsample_a, seed=cfg.seed)
    if cfg.format == "json":
        result = {
            "command": "subsample",
            "params": _params_dict(cfg, ("a", "metric", "subsample_a", "seed")),
            "indices": list(sel.indices),
            "cost": sel.cost,
        }
        _write(cfg, json_dumps(result))
        return 0
    _write(cfg, "\n".join(str(i) for i in sel.indices) + "\n")
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    degrees = cfg.degrees if cfg.degrees is not None else [0, 1, 2]
    if cfg.a is not None or cfg.filtration is not None:
        fp, _ = _load_pair(cfg)
        problems = check_instance(fp, degrees)
        checked = 1
    else:
        if cfg.instances <= 0:
            raise InputError(f"--instances must be positive, got {cfg.instances}")
        checked, problems = run_fuzz(cfg.instances, seed=cfg.seed, degrees=degrees)
    if problems:
        for p in problems:
            sys.stdout.write(p + "\n")
        sys.stdout.write(f"checked {checked} instance(s): {len(problems)} mismatch(es)\n")
        return 1
    sys.stdout.write(f"checked {checked} instance(s): all match\n")
    return 0


def cmd_plot(cfg: RunConfig) -> int:
    try:
        with open(cfg.results, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {cfg.results}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{cfg.results} is not valid JSON: {exc}") from None
    if not isinstance(data, dict) or "degrees" not in data or data.get("command") != "mixup":
        raise InputError("plot expects the JSON written by the mixup subcommand")
    available = sorted(int(k) for k in data["degrees"])
    if not available:
        raise InputError("results hold no degrees")
    if cfg.degrees is None:
        degree = available[0]
    elif len(cfg.degrees) == 1:
        degree = cfg.degrees[0]
    else:
        raise InputError("plot renders a single degree; pass --degrees with one value")
    if degree not in available:
        raise InputError(f"degree {degree} not present in results (has {available})")
    entry = data["degrees"][str(degree)]
    clamp = entry["statistics"].get("clamp")
    triples = tuple(
        ValueMixupTriple(
            birth=float_from_json(t["birth"]),
            death_image=float_from_json(t["death_image"]),
            death=float_from_json(t["death"]),
            degree=degree,
        )
        for t in entry["triples"]
    )
    bc = MixupBarcode(
        degree=degree,
        index_triples=(),
        triples=triples,
        clamp=None if clamp is None else float(clamp),
    )
    _write(cfg, plot_mixup_barcode(bc))
    return 0


COMMANDS = {
    "mixup": cmd_mixup,
    "pairwise": cmd_pairwise,
    "profile": cmd_profile,
    "subsample": cmd_subsample,
    "verify": cmd_verify,
    "plot": cmd_plot,
}


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
