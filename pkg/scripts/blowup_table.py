"""Canonical state counts of the blowup family G_n against 2^n - 1."""

import argparse
import time

from pathsets import canonicalize, determinize_sofic
from pathsets.corpus import gen_blowup


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()
    print(f"{'n':>3} {'edges':>6} {'states':>7} {'2^n-1':>7} {'seconds':>8}")
    for n in range(2, args.max_n + 1):
        t0 = time.perf_counter()
        g = gen_blowup(n)
        states = canonicalize(determinize_sofic(g)).state_count
        dt = time.perf_counter() - t0
        print(f"{n:>3} {len(g.edges):>6} {states:>7} {2**n - 1:>7} {dt:>8.3f}")


if __name__ == "__main__":
    main()
