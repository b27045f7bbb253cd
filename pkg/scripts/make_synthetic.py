"""Regenerate the bundled 200-vertex benchmark hypergraph (sizes 2, 3, 4)."""

import argparse
from pathlib import Path

from hyperec.hypergraph import serialize, stats
from hyperec.synthetic import random_connected_hypergraph

DEFAULT_OUT = Path(__file__).resolve().parents[1] / "src" / "hyperec" / "data" / "synthetic_200.txt"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--extra", type=int, default=250)
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--out", type=Path, default=DEFAULT_OUT)
    args = ap.parse_args()

    H = random_connected_hypergraph(args.n, (2, 3, 4), args.extra, seed=args.seed)
    header = f"# synthetic benchmark: n={args.n} extra={args.extra} seed={args.seed}\n"
    args.out.write_text(header + serialize(H), encoding="utf-8")
    print(stats(H).summary())


if __name__ == "__main__":
    main()
