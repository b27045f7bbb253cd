"""Command-line front end: ``info``, ``compute``, ``analyze``, ``attack``.

Every command that writes files also writes ``labels.csv`` (id,label) and a
``manifest.json`` carrying the input hash, the full config and the tool
version, enough to rerun the exact computation.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .analysis import (
    DEFAULT_KS,
    centrality_attack_curve,
    correlation_matrix,
    jaccard_table,
    random_attack_curve,
    ranks,
)
from .centrality import METHODS, NEEDS_CONNECTED, compute
from .hypergraph import (
    ParseError,
    filter_sizes,
    is_connected,
    largest_component,
    read_hyperedge_list,
    stats,
)
from .solver import DisconnectedError, SolverOptions

logger = logging.getLogger("hyperec")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    input: str
    sizes: list[int] | None = None
    largest_component: bool = False
    component_order: str = "filter-first"
    methods: list[str] = field(default_factory=lambda: list(METHODS))
    tol: float = 1e-10
    max_iter: int = 10000
    seed: int = 0
    runs: int = 100
    ks: list[int] = field(default_factory=lambda: list(DEFAULT_KS))
    out: str | None = None
    format: str = "csv"

    def __post_init__(self):
        bad = [m for m in self.methods if m not in METHODS]
        if bad:
            raise UsageError(f"unknown method(s) {bad}; choose from {','.join(METHODS)}")
        if not self.tol > 0:
            raise UsageError("--tol must be positive")
        if self.max_iter < 1 or self.runs < 1:
            raise UsageError("--max-iter and --runs must be >= 1")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _method_list(text: str) -> list[str]:
    return [t.strip().upper() for t in text.split(",") if t.strip()]


def _load(cfg: RunConfig):
    H = read_hyperedge_list(cfg.input)
    notes = []
    if H.dropped:
        notes.append(f"dropped {H.dropped} line(s) with fewer than 2 distinct vertices")
    steps = ["filter", "component"]
    if cfg.component_order == "component-first":
        steps.reverse()
    for step in steps:
        if step == "filter" and cfg.sizes:
            H = filter_sizes(H, cfg.sizes)
        elif step == "component" and cfg.largest_component and not is_connected(H):
            n0 = H.n
            H = largest_component(H)
            notes.append(f"restricted to largest component: {H.n} of {n0} vertices")
    return H, notes


def _require_connected(H, methods):
    needs = [m for m in methods if m in NEEDS_CONNECTED]
    if needs and not is_connected(H):
        raise DisconnectedError(
            f"input hypergraph is disconnected; {','.join(needs)} need a connected hypergraph. "
            "Rerun with --largest-component, or restrict --methods to DC,HDC"
        )


def _sha256(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def _write_table(out: Path, stem: str, header: list[str], rows, fmt: str) -> Path:
    if fmt == "json":
        path = out / f"{stem}.json"
        records = [dict(zip(header, r)) for r in rows]
        path.write_text(json.dumps(records, indent=1) + "\n", encoding="utf-8")
    else:
        path = out / f"{stem}.csv"
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
    return path


def _write_common(out: Path, cfg: RunConfig, command: str, H, notes, extra: dict):
    with open(out / "labels.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["id", "label"])
        w.writerows(enumerate(H.labels))
    st = stats(H)
    manifest = {
        "tool": "hyperec",
        "version": __version__,
        "command": command,
        "input": {"path": cfg.input, "sha256": _sha256(cfg.input)},
        # the output directory is not part of the computation; leaving it out keeps reruns byte-identical
        "config": {k: v for k, v in asdict(cfg).items() if k != "out"},
        "hypergraph": asdict(st),
        "notes": notes,
        **extra,
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=1, sort_keys=True) + "\n", encoding="utf-8")


def _outdir(cfg: RunConfig) -> Path:
    if not cfg.out:
        raise UsageError("--out DIR is required for this command")
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _scores(H, cfg: RunConfig):
    opts = SolverOptions(tolerance=cfg.tol, max_iterations=cfg.max_iter)
    cvs = [compute(H, m, opts) for m in cfg.methods]
    for cv in cvs:
        if cv.meta.get("converged") is False:
            logger.warning("%s did not converge within %d iterations", cv.method, cfg.max_iter)
    return cvs


def _write_scores(out: Path, cfg: RunConfig, cvs) -> None:
    header = ["vertex_label", "method", "score", "rank"]
    every = []
    for cv in cvs:
        r = ranks(cv)
        rows = [(lab, cv.method, sc, int(rk)) for lab, sc, rk in zip(cv.labels, cv.scores.tolist(), r)]
        _write_table(out, f"scores_{cv.method}", header, rows, cfg.format)
        every.extend(rows)
    _write_table(out, "scores", header, every, cfg.format)


def cmd_info(cfg: RunConfig) -> int:
    H, notes = _load(cfg)
    print(stats(H).summary())
    for note in notes:
        print(f"# {note}")
    return 0


def cmd_compute(cfg: RunConfig) -> int:
    H, notes = _load(cfg)
    _require_connected(H, cfg.methods)
    out = _outdir(cfg)
    cvs = _scores(H, cfg)
    _write_scores(out, cfg, cvs)
    _write_common(out, cfg, "compute", H, notes, {"methods": {cv.method: cv.meta for cv in cvs}})
    return 0


def cmd_analyze(cfg: RunConfig) -> int:
    if len(cfg.methods) < 2:
        raise UsageError("analyze needs at least two methods")
    H, notes = _load(cfg)
    _require_connected(H, cfg.methods)
    out = _outdir(cfg)
    cvs = _scores(H, cfg)
    _write_scores(out, cfg, cvs)

    cm = correlation_matrix(cvs)
    if cfg.format == "json":
        payload = {"methods": list(cm.methods), "values": cm.values.tolist()}
        (out / "correlation.json").write_text(json.dumps(payload, indent=1) + "\n", encoding="utf-8")
    else:
        rows = [[m] + row for m, row in zip(cm.methods, cm.values.tolist())]
        _write_table(out, "correlation", ["method"] + list(cm.methods), rows, "csv")
    wide = [[lab] + row for lab, row in zip(cm.labels, cm.scores.tolist())]
    _write_table(out, "scores_wide", ["vertex_label"] + list(cm.methods), wide, cfg.format)

    rows, clamp = jaccard_table(cvs, cfg.ks)
    _write_table(out, "jaccard", ["method_a", "method_b", "k", "jaccard"], rows, cfg.format)
    _write_common(
        out, cfg, "analyze", H, notes + clamp,
        {"methods": {cv.method: cv.meta for cv in cvs}, "k_clamped": clamp},
    )
    return 0


def cmd_attack(cfg: RunConfig) -> int:
    H, notes = _load(cfg)
    _require_connected(H, cfg.methods)
    out = _outdir(cfg)
    cvs = _scores(H, cfg)
    curves = [centrality_attack_curve(H, cv) for cv in cvs]
    curves.append(random_attack_curve(H, cfg.seed, cfg.runs))
    rows = [(c.strategy, f, l) for c in curves for f, l in c.points]
    _write_table(out, "attack", ["strategy", "fraction_removed", "lcc_relative"], rows, cfg.format)
    _write_common(
        out, cfg, "attack", H, notes,
        {"methods": {cv.method: cv.meta for cv in cvs}, "random": {"seed": cfg.seed, "runs": cfg.runs}},
    )
    return 0


COMMANDS = {"info": cmd_info, "compute": cmd_compute, "analyze": cmd_analyze, "attack": cmd_attack}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, metavar="PATH", help="hyperedge-list file")
    common.add_argument("--sizes", type=_int_list, metavar="LIST", help="keep only hyperedges of these sizes, e.g. 2,3,4")
    common.add_argument("--largest-component", action="store_true", help="restrict to the largest connected component")
    common.add_argument(
        "--component-order", choices=["filter-first", "component-first"], default="filter-first",
        help="apply --sizes before or after --largest-component",
    )
    common.add_argument("--methods", type=_method_list, default=list(METHODS), metavar="LIST")
    common.add_argument("--tol", type=float, default=1e-10)
    common.add_argument("--max-iter", type=int, default=10000)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--runs", type=int, default=100, help="random-removal runs to average")
    common.add_argument("--ks", type=_int_list, default=list(DEFAULT_KS), metavar="LIST", help="top-k sizes for Jaccard")
    common.add_argument("--out", metavar="DIR")
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="hyperec", description="Hypergraph eigenvector centrality and baselines.")
    ap.add_argument("--version", action="version", version=f"hyperec {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="print size, cardinality set, s and connectivity")
    sub.add_parser("compute", parents=[common], help="write per-method centrality scores")
    sub.add_parser("analyze", parents=[common], help="write correlation matrix and top-k Jaccard tables")
    sub.add_parser("attack", parents=[common], help="write LCC decay curves under targeted and random removal")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    opts = vars(args)
    command = opts.pop("command")
    opts.pop("verbose")
    try:
        cfg = RunConfig(**opts)
        return COMMANDS[command](cfg)
    except (ParseError, UsageError, DisconnectedError, OSError, ValueError) as exc:
        print(f"hyperec {command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
