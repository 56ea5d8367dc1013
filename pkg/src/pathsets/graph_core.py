"""Edge-labeled directed multigraphs with a marked start vertex.

A ``PointedGraph`` presents the path set of all label sequences of one-sided
infinite walks leaving its start vertex.  Vertices are dense integer indices;
names only matter for reading and writing ``.pg`` files.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DuplicateEdge, DuplicateName, EmptyPathSet, UnknownLabel, UnknownVertex

TOKEN_RE = re.compile(r"^[A-Za-z0-9_.+-]+$")

Edge = tuple[int, int, str]


def _check_token(tok: str, what: str) -> None:
    if not isinstance(tok, str) or not TOKEN_RE.match(tok):
        raise ValueError(f"invalid {what} token {tok!r}")


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        syms = tuple(str(s) for s in self.symbols)
        object.__setattr__(self, "symbols", syms)
        if not syms:
            raise ValueError("alphabet must have at least one symbol")
        for s in syms:
            _check_token(s, "symbol")
        if len(set(syms)) != len(syms):
            raise DuplicateName(f"repeated symbol in alphabet {syms}")

    @classmethod
    def of(cls, *symbols) -> "Alphabet":
        if len(symbols) == 1 and not isinstance(symbols[0], str):
            symbols = tuple(symbols[0])
        return cls(tuple(str(s) for s in symbols))

    @classmethod
    def digits(cls, g: int) -> "Alphabet":
        return cls(tuple(str(i) for i in range(g)))

    @cached_property
    def index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, sym):
        return sym in self.index

    def extended(self, sym: str) -> "Alphabet":
        return Alphabet(self.symbols + (sym,))


@dataclass(frozen=True)
class LabeledGraph:
    """Finite labeled multigraph; ``edges`` holds ``(src, dst, label)`` triples."""

    alphabet: Alphabet
    vertex_names: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex_names", tuple(self.vertex_names))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if len(set(self.vertex_names)) != len(self.vertex_names):
            raise DuplicateName("vertex names must be distinct")
        n = len(self.vertex_names)
        seen = set()
        for e in self.edges:
            src, dst, lab = e
            if not (0 <= src < n and 0 <= dst < n):
                raise UnknownVertex(f"edge {e} references a missing vertex")
            if lab not in self.alphabet:
                raise UnknownLabel(f"label {lab!r} not in alphabet")
            if e in seen:
                raise DuplicateEdge(
                    f"duplicate edge {self.vertex_names[src]} -> {self.vertex_names[dst]} [{lab}]"
                )
            seen.add(e)

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_names)

    @cached_property
    def out(self) -> tuple[tuple[tuple[str, int], ...], ...]:
        """Per-vertex exit edges as ``(label, dst)``, sorted by symbol order then target."""
        idx = self.alphabet.index
        buckets: list[list[tuple[str, int]]] = [[] for _ in range(self.vertex_count)]
        for src, dst, lab in self.edges:
            buckets[src].append((lab, dst))
        return tuple(tuple(sorted(b, key=lambda t: (idx[t[0]], t[1]))) for b in buckets)

    @cached_property
    def name_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.vertex_names)}

    def successors(self, v: int, label: str) -> frozenset[int]:
        return frozenset(dst for lab, dst in self.out[v] if lab == label)

    def with_alphabet(self, alphabet: Alphabet) -> "LabeledGraph":
        """Re-read the same graph over a larger alphabet."""
        missing = [s for s in self.alphabet if s not in alphabet]
        if missing:
            raise UnknownLabel(f"symbols {missing} absent from target alphabet")
        return LabeledGraph(alphabet, self.vertex_names, self.edges)


@dataclass(frozen=True)
class PointedGraph:
    graph: LabeledGraph
    start: int
    empty: bool = field(default=False)

    def __post_init__(self):
        if not 0 <= self.start < self.graph.vertex_count:
            raise UnknownVertex(f"start index {self.start} out of range")
        if self.empty and self.graph.edges:
            raise ValueError("empty pointed graph must not carry edges")

    @classmethod
    def empty_over(cls, alphabet: Alphabet) -> "PointedGraph":
        return cls(LabeledGraph(alphabet, ("empty",), ()), 0, empty=True)

    @property
    def alphabet(self) -> Alphabet:
        return self.graph.alphabet

    def repoint(self, start: int) -> "PointedGraph":
        return PointedGraph(self.graph, start)

    def with_alphabet(self, alphabet: Alphabet) -> "PointedGraph":
        return PointedGraph(self.graph.with_alphabet(alphabet), self.start, self.empty)


def build_graph(
    alphabet: Alphabet,
    vertex_names: Sequence[str],
    edges: Iterable[tuple[str, str, str]],
    dedup: bool = False,
) -> tuple[LabeledGraph, int]:
    """Build a graph from named edges.

    Returns the graph and the number of duplicate edges that were collapsed
    (always 0 in strict mode, where a duplicate raises ``DuplicateEdge``).
    """
    names = tuple(vertex_names)
    for name in names:
        _check_token(name, "vertex")
    if len(set(names)) != len(names):
        raise DuplicateName("vertex names must be distinct")
    pos = {name: i for i, name in enumerate(names)}
    out: list[Edge] = []
    seen: set[Edge] = set()
    dups = 0
    for src, dst, lab in edges:
        for v in (src, dst):
            if v not in pos:
                raise UnknownVertex(f"unknown vertex {v!r}")
        lab = str(lab)
        if lab not in alphabet:
            raise UnknownLabel(f"label {lab!r} not in alphabet {alphabet.symbols}")
        e = (pos[src], pos[dst], lab)
        if e in seen:
            if not dedup:
                raise DuplicateEdge(f"duplicate edge {src} -> {dst} [{lab}]")
            dups += 1
            continue
        seen.add(e)
        out.append(e)
    return LabeledGraph(alphabet, names, tuple(out)), dups


def reachable(graph: LabeledGraph, starts: Iterable[int]) -> list[int]:
    """Vertices reachable from ``starts`` in BFS order."""
    order = []
    seen = set()
    queue = deque()
    for s in starts:
        if s not in seen:
            seen.add(s)
            queue.append(s)
    while queue:
        v = queue.popleft()
        order.append(v)
        for _, w in graph.out[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return order


def restrict(graph: LabeledGraph, keep: Iterable[int]) -> tuple[LabeledGraph, dict[int, int]]:
    """Induced subgraph on ``keep`` (original relative order); returns the old->new index map."""
    kept = sorted(set(keep))
    remap = {v: i for i, v in enumerate(kept)}
    edges = tuple(
        (remap[s], remap[d], lab) for s, d, lab in graph.edges if s in remap and d in remap
    )
    names = tuple(graph.vertex_names[v] for v in kept)
    return LabeledGraph(graph.alphabet, names, edges), remap


def live_vertices(graph: LabeledGraph, candidates: Iterable[int] | None = None) -> set[int]:
    """Iteratively strip stranded vertices (no exits) from ``candidates``."""
    alive = set(range(graph.vertex_count)) if candidates is None else set(candidates)
    changed = True
    while changed:
        changed = False
        for v in list(alive):
            if not any(w in alive for _, w in graph.out[v]):
                alive.discard(v)
                changed = True
    return alive


def prune(p: PointedGraph) -> PointedGraph:
    if p.empty:
        return p
    g = p.graph
    alive = live_vertices(g, reachable(g, [p.start]))
    if p.start not in alive:
        return PointedGraph.empty_over(g.alphabet)
    sub, remap = restrict(g, alive)
    # stripping dead ends cannot disconnect a live vertex, but stay defensive
    keep = reachable(sub, [remap[p.start]])
    if len(keep) != sub.vertex_count:
        sub2, remap2 = restrict(sub, keep)
        return PointedGraph(sub2, remap2[remap[p.start]])
    return PointedGraph(sub, remap[p.start])


def is_pruned(p: PointedGraph) -> bool:
    if p.empty:
        return True
    g = p.graph
    if len(reachable(g, [p.start])) != g.vertex_count:
        return False
    return all(g.out[v] for v in range(g.vertex_count))


def is_right_resolving(g: LabeledGraph) -> bool:
    for exits in g.out:
        labels = [lab for lab, _ in exits]
        if len(labels) != len(set(labels)):
            return False
    return True


def reachability_radius(p: PointedGraph) -> int:
    """Smallest k with every vertex reachable from the start in at most k steps."""
    if p.empty:
        raise EmptyPathSet("reachability radius of the empty path set is undefined")
    g = p.graph
    dist = {p.start: 0}
    queue = deque([p.start])
    while queue:
        v = queue.popleft()
        for _, w in g.out[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    if len(dist) != g.vertex_count:
        raise ValueError("graph is not reachable from its start; prune it first")
    return max(dist.values())


def is_strongly_connected(g: LabeledGraph) -> bool:
    n = g.vertex_count
    if n == 0:
        return False
    if len(reachable(g, [0])) != n:
        return False
    rev = LabeledGraph(g.alphabet, g.vertex_names, tuple((d, s, lab) for s, d, lab in g.edges))
    return len(reachable(rev, [0])) == n
