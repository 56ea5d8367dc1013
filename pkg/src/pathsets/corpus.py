"""Example graphs and seeded random instances, with brute-force prefix-language oracles."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .errors import DepthTooLarge, IndexOutOfRange
from .graph_core import Alphabet, LabeledGraph, PointedGraph, build_graph, prune

MAX_ORACLE_DEPTH = 14


@dataclass(frozen=True)
class PrefixLanguage:
    depth: int
    words: frozenset[tuple[str, ...]]

    def __len__(self):
        return len(self.words)

    def strings(self, sep: str = "") -> set[str]:
        return {sep.join(w) for w in self.words}


def _codec(alphabet):
    enc = {sym: chr(0x100 + i) for i, sym in enumerate(alphabet.symbols)}
    dec = {c: sym for sym, c in enc.items()}
    return enc, lambda s: tuple(dec[c] for c in s)


def oracle_prefixes_from(graph: LabeledGraph, starts: Iterable[int], n: int) -> PrefixLanguage:
    """Label strings of all length-n walks leaving any of ``starts``, on the raw graph.

    Walks are explored level by level; a (label string, endpoint) pair is kept
    once, which bounds the frontier without merging distinct strings.
    """
    if n < 0:
        raise ValueError("depth must be non-negative")
    if n > MAX_ORACLE_DEPTH:
        raise DepthTooLarge(f"oracle depth {n} exceeds {MAX_ORACLE_DEPTH}")
    enc, decode = _codec(graph.alphabet)
    frontier: dict[int, set[str]] = {v: {""} for v in starts}
    for _ in range(n):
        nxt: dict[int, set[str]] = {}
        for v, words in frontier.items():
            for lab, w in graph.out[v]:
                c = enc[lab]
                nxt.setdefault(w, set()).update(x + c for x in words)
        frontier = nxt
    return PrefixLanguage(n, frozenset(decode(x) for words in frontier.values() for x in words))


def oracle_prefixes(p: PointedGraph, n: int) -> PrefixLanguage:
    if p.empty:
        return PrefixLanguage(n, frozenset())
    return oracle_prefixes_from(p.graph, [p.start], n)


def oracle_intersection_prefixes(p1: PointedGraph, p2: PointedGraph, n: int) -> PrefixLanguage:
    """Length-n prefixes of members of the intersection, by joint enumeration on the raw graphs.

    A length-n word lies in both prefix languages once a pair of walks carries
    it; it prefixes a common infinite sequence iff some such endpoint pair can
    keep walking jointly for |V1|*|V2| more steps (a longer joint walk repeats
    a pair, hence closes a lasso).
    """
    if n > MAX_ORACLE_DEPTH:
        raise DepthTooLarge(f"oracle depth {n} exceeds {MAX_ORACLE_DEPTH}")
    if p1.empty or p2.empty:
        return PrefixLanguage(n, frozenset())
    g1, g2 = p1.graph, p2.graph
    enc, decode = _codec(g1.alphabet)
    frontier: dict[tuple[int, int], set[str]] = {(p1.start, p2.start): {""}}
    for _ in range(n):
        nxt: dict[tuple[int, int], set[str]] = {}
        for (v1, v2), words in frontier.items():
            for a, w1 in g1.out[v1]:
                for b, w2 in g2.out[v2]:
                    if a == b:
                        c = enc[a]
                        nxt.setdefault((w1, w2), set()).update(x + c for x in words)
        frontier = nxt
    pairs = {(x, y) for x in range(g1.vertex_count) for y in range(g2.vertex_count)}
    alive = pairs
    for _ in range(g1.vertex_count * g2.vertex_count):
        alive = {
            (x, y)
            for x, y in pairs
            if any((w1, w2) in alive for a, w1 in g1.out[x] for b, w2 in g2.out[y] if a == b)
        }
    return PrefixLanguage(
        n, frozenset(decode(x) for pair, words in frontier.items() if pair in alive for x in words)
    )


def oracle_decimation_prefixes(p: PointedGraph, j: int, m: int, n: int) -> PrefixLanguage:
    """Length-n prefixes of {a_j a_(j+m) a_(j+2m) ...}, by walking the pruned raw graph.

    Only the sampled labels are kept, so the frontier holds (sampled word,
    endpoint) pairs and stays small even though the walk has j+(n-1)m+1 steps.
    """
    if n > MAX_ORACLE_DEPTH:
        raise DepthTooLarge(f"oracle depth {n} exceeds {MAX_ORACLE_DEPTH}")
    if j < 0 or m < 1:
        raise ValueError("need j >= 0 and m >= 1")
    p = prune(p)
    if p.empty:
        return PrefixLanguage(n, frozenset())
    enc, decode = _codec(p.alphabet)
    frontier: dict[int, set[str]] = {p.start: {""}}
    steps = j + (n - 1) * m + 1 if n else 0
    for t in range(steps):
        sampled = t >= j and (t - j) % m == 0
        nxt: dict[int, set[str]] = {}
        for v, words in frontier.items():
            for lab, w in p.graph.out[v]:
                c = enc[lab] if sampled else ""
                nxt.setdefault(w, set()).update(x + c for x in words)
        frontier = nxt
    return PrefixLanguage(n, frozenset(decode(x) for words in frontier.values() for x in words))


def _pointed(graph: LabeledGraph, start: str = "v0") -> PointedGraph:
    return PointedGraph(graph, graph.name_index[start])


def gen_prefix_example(g: int, j: int) -> PointedGraph:
    """Vertex v0 with one edge labeled j to v1, which carries g self-loops."""
    if g < 1:
        raise IndexOutOfRange("alphabet size must be at least 1")
    if not 0 <= j < g:
        raise IndexOutOfRange(f"prefix symbol {j} not in 0..{g - 1}")
    alphabet = Alphabet.digits(g)
    edges = [("v0", "v1", str(j))] + [("v1", "v1", str(a)) for a in range(g)]
    return _pointed(build_graph(alphabet, ["v0", "v1"], edges)[0])


def gen_cycle() -> LabeledGraph:
    """3-cycle v0 -0-> v1 -1-> v2 -2-> v0."""
    edges = [("v0", "v1", "0"), ("v1", "v2", "1"), ("v2", "v0", "2")]
    return build_graph(Alphabet.digits(3), ["v0", "v1", "v2"], edges)[0]


def gen_golden() -> PointedGraph:
    """Golden-mean graph: the block 11 never occurs."""
    edges = [("v0", "v0", "0"), ("v0", "v1", "1"), ("v1", "v0", "0")]
    return _pointed(build_graph(Alphabet.digits(2), ["v0", "v1"], edges)[0])


def gen_fig4() -> LabeledGraph:
    """Three vertices joined by bidirectional pairs; A has two exits labeled 0."""
    edges = [
        ("A", "C", "0"), ("C", "A", "2"),
        ("A", "B", "0"), ("B", "A", "1"),
        ("B", "C", "1"), ("C", "B", "2"),
    ]
    return build_graph(Alphabet.digits(3), ["A", "B", "C"], edges)[0]


def gen_blowup(n: int) -> LabeledGraph:
    """The G_n family over labels 0..2n-1.

    v_i carries self-loops for every label in n..2n-1 except n+i, and for
    i != j an edge v_i -> v_j labeled (j - i) mod n.
    """
    if n < 2:
        raise IndexOutOfRange("blowup family needs n >= 2")
    names = [f"v{i}" for i in range(n)]
    edges = []
    for i in range(n):
        edges.extend((names[i], names[i], str(n + k)) for k in range(n) if k != i)
        edges.extend((names[i], names[j], str((j - i) % n)) for j in range(n) if j != i)
    return build_graph(Alphabet.digits(2 * n), names, edges)[0]


def gen_random(seed: int, states: int = 4, alphabet_size: int = 2, density: float = 0.35) -> PointedGraph:
    """Seeded random pruned pointed graph; regenerates until the path set is non-empty."""
    if not 1 <= states <= 6:
        raise ValueError("states must be in 1..6")
    if not 1 <= alphabet_size <= 3:
        raise ValueError("alphabet_size must be in 1..3")
    if not 0 < density <= 1:
        raise ValueError("density must be in (0, 1]")
    rng = random.Random(seed)
    alphabet = Alphabet.digits(alphabet_size)
    names = tuple(f"v{i}" for i in range(states))
    while True:
        edges = tuple(
            (s, d, a)
            for s in range(states)
            for d in range(states)
            for a in alphabet.symbols
            if rng.random() < density
        )
        p = prune(PointedGraph(LabeledGraph(alphabet, names, edges), 0))
        if not p.empty:
            return p


def random_suite(count: int = 200, base_seed: int = 0) -> list[PointedGraph]:
    """Deterministic batch of random instances (at most 5 states, at most 3 symbols).

    Sizes and alphabets cycle; edge density targets an expected out-degree of
    1.5, 2.0 or 2.6, since denser graphs almost always present the full shift.
    """
    out = []
    for i in range(count):
        states = (3, 4, 5, 2, 5, 4, 3, 1)[i % 8]
        g = (2, 3, 2, 3, 1)[(i // 8) % 5]
        degree = (1.5, 2.0, 2.6)[(i // 40) % 3]
        out.append(gen_random(base_seed + i, states, g, min(1.0, degree / (states * g))))
    return out
