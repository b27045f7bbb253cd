"""Run compute -> analyze -> attack on a hyperedge list (default: the bundled benchmark) and time it."""

import argparse
import time
from importlib import resources
from pathlib import Path

from hyperec import cli
from hyperec.synthetic import bundled_path


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--input", type=Path)
    ap.add_argument("--out", type=Path, default=Path("runs/pipeline"))
    ap.add_argument("--sizes", default="2,3,4")
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--runs", type=int, default=100)
    ap.add_argument("--largest-component", action="store_true")
    args = ap.parse_args()

    with resources.as_file(bundled_path()) as bundled:
        src = args.input or bundled
        common = ["--input", str(src), "--sizes", args.sizes, "--seed", str(args.seed), "--runs", str(args.runs)]
        if args.largest_component:
            common.append("--largest-component")
        t0 = time.perf_counter()
        for cmd in ("info", "compute", "analyze", "attack"):
            extra = [] if cmd == "info" else ["--out", str(args.out / cmd)]
            code = cli.main([cmd] + common + extra)
            if code:
                raise SystemExit(code)
        print(f"pipeline finished in {time.perf_counter() - t0:.2f} s -> {args.out}")


if __name__ == "__main__":
    main()
