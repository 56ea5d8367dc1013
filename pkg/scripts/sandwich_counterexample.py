"""Block counts showing N_n <= N^I_(n+k) can fail while N_n <= (k+1) N^I_(n+k) holds.

N^I_n counts length-n prefixes of the path set and N_n counts length-n blocks
anywhere in its members.  k is the reachability radius of the canonical
presentation.
"""

import argparse

from pathsets import PointedGraph, canonicalize
from pathsets.corpus import gen_cycle, random_suite
from pathsets.entropy import block_count_series
from pathsets.graph_core import reachability_radius


def table(name, p, depth):
    k = reachability_radius(canonicalize(p).inner)
    s = block_count_series(p, depth + k)
    print(f"\n{name}: radius k = {k}")
    print(f"{'n':>3} {'N^I_n':>8} {'N_n':>8} {'N^I_(n+k)':>10} {'(k+1)N^I_(n+k)':>15}")
    for n in range(1, depth + 1):
        ni, na, nk = s.initial_counts[n - 1], s.anywhere_counts[n - 1], s.initial_counts[n + k - 1]
        mark = "  <-- N_n > N^I_(n+k)" if na > nk else ""
        print(f"{n:>3} {ni:>8} {na:>8} {nk:>10} {(k + 1) * nk:>15}{mark}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=8)
    ap.add_argument("--scan", type=int, default=200, help="random instances to scan")
    args = ap.parse_args()
    table("3-cycle reading (012)^inf", PointedGraph(gen_cycle(), 0), args.depth)
    strict = weak = 0
    for p in random_suite(args.scan):
        k = reachability_radius(canonicalize(p).inner)
        s = block_count_series(p, 12 + k)
        strict += not s.sandwich_ok
        weak += not s.weak_sandwich_ok
    print(f"\nrandom suite ({args.scan} instances, n <= 12): strict bound fails on {strict}, (k+1) bound fails on {weak}")


if __name__ == "__main__":
    main()
