"""Command-line frontend.

Subcommands: dist, embed, db-build, db-query, experiment.  Parse failures
exit 2, shape mismatches 3, unsatisfiable reduction dimensions 4, empty
databases 5, invalid experiment configurations 6; messages go to stderr.
All randomness flows from --seed.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .errors import (
    ConfigInvalidError,
    DimensionHypothesisError,
    EmptyDatabaseError,
    OrbitDistError,
    ShapeMismatchError,
)
from .experiments import (
    MAP_EXACT,
    MAP_SIDE_LENGTHS,
    MAP_TRIANGLE,
    ExperimentConfig,
    classification_experiment,
    distortion_experiment,
    lower_constant_survey,
)
from .features import FULL, REDUCED, feature_vector
from .io import ParseError, atomic_write_text, fmt17, load_database, read_matrix, save_database
from .metrics import GroupAction, orbit_distance
from .search import ShapeDatabase, feature_nearest, verify


def _fmt_entry(x) -> str:
    if isinstance(x, complex) or np.iscomplexobj(np.asarray(x)):
        z = complex(x)
        return f"{z.real:.17g}{z.imag:+.17g}j"
    return fmt17(x)


def _cmd_dist(args) -> int:
    group = GroupAction(args.group)
    a = read_matrix(args.file_a)
    b = read_matrix(args.file_b)
    d, alignment = orbit_distance(group, a, b)
    print(f"distance {d:.12g}")
    print("rotation " + " ".join(_fmt_entry(x) for x in np.ravel(alignment.rotation)))
    if group.quotients_translations:
        print("translation " + " ".join(_fmt_entry(x) for x in alignment.translation))
    return 0


def _map_name(group: GroupAction, m: np.ndarray, feature_map: str) -> str:
    if feature_map == REDUCED:
        return f"reduced_{group.name.lower()}"
    if group is GroupAction.EUCLIDEAN and m.shape == (2, 3) and not np.iscomplexobj(m):
        return MAP_TRIANGLE
    return f"{group.name.lower()}_embedding"


def _cmd_embed(args) -> int:
    group = GroupAction(args.group)
    m = read_matrix(args.file)
    feature_map = REDUCED if args.reduced else FULL
    coords = feature_vector(group, m, feature_map)
    row = ",".join(fmt17(x) for x in coords)
    if args.out:
        atomic_write_text(args.out, row + "\n")
        sidecar = {
            "group": group.value,
            "feature_map": feature_map,
            "map": _map_name(group, m, feature_map),
            "n": int(m.shape[0]),
            "l": int(m.shape[1]),
            "length": int(coords.shape[0]),
        }
        atomic_write_text(str(args.out) + ".json", json.dumps(sidecar, sort_keys=True) + "\n")
    else:
        print(row)
    return 0


def _cmd_db_build(args) -> int:
    group = GroupAction(args.group)
    if not args.inputs:
        raise EmptyDatabaseError("no input matrices given")
    records = [(Path(p).stem, read_matrix(p)) for p in args.inputs]
    db = ShapeDatabase(group, records, REDUCED if args.reduced else FULL)
    save_database(args.out, db)
    print(f"wrote {len(db)} records to {args.out}")
    return 0


def _cmd_db_query(args) -> int:
    db = load_database(args.db_file)
    query = read_matrix(args.query_file)
    results = feature_nearest(db, query, k=args.k)
    if args.verify:
        results = [verify(db, r, query) for r in results]
    for r in results:
        fields = [r.id, fmt17(r.embedded_distance)]
        if r.exact_orbit_distance is not None:
            fields.append(fmt17(r.exact_orbit_distance))
        print(",".join(fields))
    return 0


_DEFAULT_CONFIGS = {
    "distortion": {
        "n_pairs": 100_000,
        "maps": [MAP_SIDE_LENGTHS, MAP_TRIANGLE],
    },
    "classify": {
        "db_size": 500,
        "n_draws": 20,
        "noise_grid": [0.0, 0.005, 0.01, 0.015, 0.02, 0.025, 0.03],
        "maps": [MAP_EXACT, MAP_SIDE_LENGTHS, MAP_TRIANGLE],
    },
    "lower-constant": {"group": "O", "n": 1, "l": 4, "n_pairs": 10_000},
}


def _load_config(args) -> ExperimentConfig:
    data = dict(_DEFAULT_CONFIGS[args.kind])
    if args.config:
        try:
            loaded = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigInvalidError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(loaded, dict):
            raise ConfigInvalidError("config file must hold a JSON object")
        data.update(loaded)
    data["seed"] = args.seed
    try:
        return ExperimentConfig.from_dict(data)
    except (ValueError, TypeError) as exc:
        raise ConfigInvalidError(f"bad config value: {exc}") from None


def _distortion_csv(report) -> str:
    lines = ["map,bin_left,bin_right,count"]
    for name in sorted(report.histograms):
        h = report.histograms[name]
        for left, right, count in zip(h["edges"], h["edges"][1:], h["counts"]):
            lines.append(f"{name},{fmt17(left)},{fmt17(right)},{count}")
    return "\n".join(lines) + "\n"


def _classification_csv(report) -> str:
    lines = ["map,epsilon,rate"]
    grid = report.rates["noise_grid"]
    for name in sorted(report.rates["misclassification"]):
        for eps, rate in zip(grid, report.rates["misclassification"][name]):
            lines.append(f"{name},{fmt17(eps)},{fmt17(rate)}")
    return "\n".join(lines) + "\n"


def _lower_constant_csv(report) -> str:
    lines = ["statistic,value"]
    stats = report.ratio_stats["reduced"]
    for key in ("min", "max", "mean", "std"):
        lines.append(f"{key},{fmt17(stats[key])}")
    for q, v in sorted(stats["quantiles"].items(), key=lambda kv: float(kv[0])):
        lines.append(f"quantile_{q},{fmt17(v)}")
    return "\n".join(lines) + "\n"


def _print_summary(report) -> None:
    print(f"experiment {report.kind} (seed {report.seed})")
    for name in sorted(report.ratio_stats):
        s = report.ratio_stats[name]
        print(
            f"  {name}: ratios in [{s['min']:.4f}, {s['max']:.4f}], "
            f"mean {s['mean']:.4f}, std {s['std']:.4f}"
        )
    if report.rates:
        grid = report.rates["noise_grid"]
        for name in sorted(report.rates["misclassification"]):
            rates = report.rates["misclassification"][name]
            cells = ", ".join(f"{e:g}:{r:.3f}" for e, r in zip(grid, rates))
            print(f"  {name}: {cells}")


def _cmd_experiment(args) -> int:
    cfg = _load_config(args)
    if args.kind == "distortion":
        report = distortion_experiment(cfg)
        csv_text = _distortion_csv(report)
    elif args.kind == "classify":
        report = classification_experiment(cfg)
        csv_text = _classification_csv(report)
    else:
        report = lower_constant_survey(cfg.group, cfg.n, cfg.l, cfg.n_pairs, cfg.seed)
        csv_text = _lower_constant_csv(report)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    atomic_write_text(out / "report.json", report.to_json() + "\n")
    atomic_write_text(out / f"{report.kind}.csv", csv_text)
    _print_summary(report)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitdist",
        description="Orbit distances, invariant embeddings, and nearest-orbit search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="orbit distance between two configuration files")
    p.add_argument("--group", required=True, choices=[g.value for g in GroupAction])
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("embed", help="flattened invariant feature of a configuration")
    p.add_argument("--group", required=True, choices=[g.value for g in GroupAction])
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--out")
    p.add_argument("file")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("db-build", help="build a database file from matrix files")
    p.add_argument("--group", required=True, choices=[g.value for g in GroupAction])
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--out", required=True)
    p.add_argument("inputs", nargs="*")
    p.set_defaults(func=_cmd_db_build)

    p = sub.add_parser("db-query", help="nearest records for a query configuration")
    p.add_argument("db_file")
    p.add_argument("query_file")
    p.add_argument("-k", type=int, default=1)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_db_query)

    p = sub.add_parser("experiment", help="run a seeded experiment and write reports")
    p.add_argument("kind", choices=["distortion", "classify", "lower-constant"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--config")
    p.add_argument("--out", default=".")
    p.set_defaults(func=_cmd_experiment)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ShapeMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except DimensionHypothesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except EmptyDatabaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except ConfigInvalidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 6
    except OrbitDistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
