"""Print the five centralities of the 3-petal sunflower {1,2}, {1,3,4}, {1,5,6,7}."""

import time

from hyperec.centrality import METHODS, compute
from hyperec.hypergraph import parse_hyperedge_list, stats

SUNFLOWER = "1 2\n1 3 4\n1 5 6 7\n"


def main():
    H = parse_hyperedge_list(SUNFLOWER)
    print(stats(H).summary())
    t0 = time.perf_counter()
    cols = {m: compute(H, m) for m in METHODS}
    dt = time.perf_counter() - t0
    order = ["DC", "HDC", "CC", "VC", "HEC"]
    print("vertex  " + "  ".join(f"{m:>7}" for m in order))
    for i, lab in enumerate(H.labels):
        cells = []
        for m in order:
            v = cols[m].scores[i]
            cells.append(f"{v:7d}" if m in ("DC", "HDC") else f"{v:7.4f}")
        print(f"{lab:>6}  " + "  ".join(cells))
    hec = cols["HEC"].meta
    print(f"\nrho(A_H) = {hec['lambda']:.10f} after {hec['iterations']} iterations ({dt * 1e3:.1f} ms total)")


if __name__ == "__main__":
    main()
