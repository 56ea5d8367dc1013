"""Entropy table for the example corpus and a slice of the random suite."""

import argparse

from pathsets import Alphabet, PointedGraph, determinize_sofic, entropy_report, prefix_graph
from pathsets.constructions import full_shift
from pathsets.corpus import gen_blowup, gen_cycle, gen_fig4, gen_golden, random_suite


def instances(n_random):
    yield "golden", gen_golden()
    yield "cycle", PointedGraph(gen_cycle(), 0)
    yield "fig4 (sofic)", determinize_sofic(gen_fig4())
    yield "Z1 over {0,1}", prefix_graph(Alphabet.digits(2), "1")
    yield "full shift g=3", full_shift(Alphabet.digits(3))
    for n in (3, 4):
        yield f"blowup {n} (sofic)", determinize_sofic(gen_blowup(n))
    for i, p in enumerate(random_suite(n_random)):
        yield f"random {i}", p


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--random", type=int, default=10, help="number of random instances")
    ap.add_argument("--depth", type=int, default=40)
    args = ap.parse_args()
    print(f"{'instance':<20} {'states':>6} {'lambda':>12} {'h_path':>12} {'slope':>10} {'irred':>6} {'sandwich':>9}")
    for name, p in instances(args.random):
        rep = entropy_report(p, args.depth)
        slope = rep.finite_slopes[-1][1]
        sw = "ok" if rep.series.sandwich_ok else ("weak" if rep.series.weak_sandwich_ok else "FAIL")
        print(f"{name:<20} {rep.states:>6} {rep.lam:>12.8f} {rep.h_path:>12.8f} {slope:>10.6f} {str(rep.irreducible):>6} {sw:>9}")


if __name__ == "__main__":
    main()
