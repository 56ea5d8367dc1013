"""Graph constructions producing new path sets from old ones.

Every function takes and returns presentations; outputs are pruned.  The empty
path set is absorbing for ``label_product`` and the identity for ``union``.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable

from .errors import AlphabetMismatch, EmptyGraph, SymbolCollision, UnknownLabel
from .graph_core import (
    Alphabet,
    LabeledGraph,
    PointedGraph,
    live_vertices,
    prune,
    restrict,
)

SubsetState = frozenset  # non-empty set of source vertex indices


def _require_same_alphabet(p1: PointedGraph, p2: PointedGraph) -> None:
    if p1.alphabet != p2.alphabet:
        raise AlphabetMismatch(f"{p1.alphabet.symbols} vs {p2.alphabet.symbols}")


def _fresh(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    name, i = base, 0
    while name in taken:
        i += 1
        name = f"{base}{i}"
    return name


def _index_names(n: int, prefix: str = "v") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(n))


def subset_construction(
    graph: LabeledGraph, start: SubsetState
) -> tuple[list[SubsetState], list[dict[str, int]]]:
    """Lazy subset construction from ``start``.

    Returns the materialized subset states (BFS order, ``start`` first) and, for
    each, a map symbol -> index of the successor subset.  Empty successors are
    omitted, so only states reachable from ``start`` ever exist.
    """
    start = frozenset(start)
    if not start:
        raise ValueError("subset states are non-empty")
    symbols = graph.alphabet.symbols
    states = [start]
    index = {start: 0}
    trans: list[dict[str, int]] = []
    queue = deque([start])
    while queue:
        S = queue.popleft()
        row = {}
        for a in symbols:
            T = frozenset(w for v in S for lab, w in graph.out[v] if lab == a)
            if not T:
                continue
            if T not in index:
                index[T] = len(states)
                states.append(T)
                queue.append(T)
            row[a] = index[T]
        trans.append(row)
    return states, trans


def _subset_names(graph: LabeledGraph, states: list[SubsetState]) -> tuple[str, ...]:
    names = tuple("+".join(graph.vertex_names[v] for v in sorted(S)) for S in states)
    if len(set(names)) != len(names):
        return _index_names(len(states), "S")
    return names


def _table_graph(
    alphabet: Alphabet, names: tuple[str, ...], trans: list[dict[str, int]]
) -> LabeledGraph:
    edges = tuple((i, t, a) for i, row in enumerate(trans) for a, t in row.items())
    return LabeledGraph(alphabet, names, edges)


def determinize_with_states(p: PointedGraph) -> tuple[PointedGraph, list[SubsetState]]:
    """``determinize`` that also returns the source-vertex subset behind each state.

    The subsets index into ``prune(p).graph``.
    """
    q = prune(p)
    if q.empty:
        return q, []
    return _determinize_from(q.graph, frozenset([q.start]))


def _determinize_from(graph: LabeledGraph, start: SubsetState):
    states, trans = subset_construction(graph, start)
    h = _table_graph(graph.alphabet, _subset_names(graph, states), trans)
    # subsets of a pruned graph never strand, so no further pruning is needed
    return PointedGraph(h, 0), states


def determinize(p: PointedGraph) -> PointedGraph:
    return determinize_with_states(p)[0]


def sofic_core(g: LabeledGraph) -> LabeledGraph | None:
    """Drop stranded vertices; ``None`` if nothing survives."""
    if g.vertex_count == 0:
        raise EmptyGraph("graph has no vertices")
    alive = live_vertices(g)
    if not alive:
        return None
    return restrict(g, alive)[0]


def determinize_sofic(g: LabeledGraph) -> PointedGraph:
    """Path-set presentation of the one-sided sofic shift of ``g``.

    Stranded vertices contribute no infinite walks and are stripped first.
    """
    core = sofic_core(g)
    if core is None:
        return PointedGraph.empty_over(g.alphabet)
    return _determinize_from(core, frozenset(range(core.vertex_count)))[0]


def full_subset_graph(g: LabeledGraph) -> LabeledGraph:
    """The eager construction over all 2^|V| - 1 non-empty subsets (no reachability filter)."""
    n = g.vertex_count
    if n == 0:
        raise EmptyGraph("graph has no vertices")
    states = [frozenset(c) for k in range(1, n + 1) for c in combinations(range(n), k)]
    index = {S: i for i, S in enumerate(states)}
    trans = []
    for S in states:
        row = {}
        for a in g.alphabet.symbols:
            T = frozenset(w for v in S for lab, w in g.out[v] if lab == a)
            if T:
                row[a] = index[T]
        trans.append(row)
    return _table_graph(g.alphabet, _subset_names(g, states), trans)


def label_product(p1: PointedGraph, p2: PointedGraph) -> PointedGraph:
    """Pointed label product; presents the intersection of the two path sets."""
    _require_same_alphabet(p1, p2)
    if p1.empty or p2.empty:
        return PointedGraph.empty_over(p1.alphabet)
    g1, g2 = p1.graph, p2.graph
    start = (p1.start, p2.start)
    index = {start: 0}
    order = [start]
    edges = []
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for a, w1 in g1.out[u[0]]:
            for b, w2 in g2.out[u[1]]:
                if a != b:
                    continue
                w = (w1, w2)
                if w not in index:
                    index[w] = len(order)
                    order.append(w)
                    queue.append(w)
                edges.append((index[u], index[w], a))
    names = tuple(f"{g1.vertex_names[x]}.{g2.vertex_names[y]}" for x, y in order)
    if len(set(names)) != len(names):
        names = _index_names(len(order))
    return prune(PointedGraph(LabeledGraph(p1.alphabet, names, tuple(edges)), 0))


def _disjoint_sum(graphs: list[LabeledGraph]) -> tuple[LabeledGraph, list[int]]:
    offsets, names, edges = [], [], []
    for k, g in enumerate(graphs):
        off = len(names)
        offsets.append(off)
        names.extend(f"{k}.{v}" for v in g.vertex_names)
        edges.extend((s + off, d + off, lab) for s, d, lab in g.edges)
    return LabeledGraph(graphs[0].alphabet, tuple(names), tuple(edges)), offsets


def union_of_vertices(graph: LabeledGraph, vertices: Iterable[int]) -> PointedGraph:
    """Union of the path sets X(v) for ``v`` in ``vertices``, via one fresh start vertex."""
    vertices = sorted(set(vertices))
    if not vertices:
        return PointedGraph.empty_over(graph.alphabet)
    u = graph.vertex_count
    extra = {(u, d, lab) for v in vertices for s, d, lab in graph.edges if s == v}
    names = graph.vertex_names + (_fresh("u", graph.vertex_names),)
    g = LabeledGraph(graph.alphabet, names, graph.edges + tuple(sorted(extra)))
    return prune(PointedGraph(g, u))


def union(p1: PointedGraph, p2: PointedGraph) -> PointedGraph:
    _require_same_alphabet(p1, p2)
    g, (o1, o2) = _disjoint_sum([p1.graph, p2.graph])
    return union_of_vertices(g, [p1.start + o1, p2.start + o2])


def shift(p: PointedGraph, count: int = 1) -> PointedGraph:
    """Drop the first ``count`` symbols of every sequence."""
    if count < 0:
        raise ValueError("shift count must be non-negative")
    q = prune(p)
    for _ in range(count):
        if q.empty:
            break
        succ = {w for _, w in q.graph.out[q.start]}
        q = union_of_vertices(q.graph, succ)
    return q


def shift_closure(p: PointedGraph) -> PointedGraph:
    q = prune(p)
    if q.empty:
        return q
    return union_of_vertices(q.graph, range(q.graph.vertex_count))


def decimate(p: PointedGraph, j: int, m: int) -> PointedGraph:
    """Presents the sequences a_j a_{j+m} a_{j+2m} ... of members of ``p``."""
    if j < 0 or m < 1:
        raise ValueError("decimate needs j >= 0 and m >= 1")
    d = determinize(shift(p, j))
    if d.empty or m == 1:
        return d
    g = d.graph
    n = g.vertex_count
    step = [frozenset(w for _, w in g.out[v]) for v in range(n)]
    # within[v] = vertices reachable from v in exactly m-1 steps
    within = [frozenset([v]) for v in range(n)]
    for _ in range(m - 1):
        within = [frozenset(x for y in R for x in step[y]) for R in within]
    edges = set()
    for u in range(n):
        for lab, x in g.out[u]:
            for w in within[x]:
                edges.add((u, w, lab))
    h = LabeledGraph(g.alphabet, g.vertex_names, tuple(sorted(edges)))
    return prune(PointedGraph(h, d.start))


def prefix_graph(alphabet: Alphabet, j: str) -> PointedGraph:
    """Two-vertex presentation of all sequences whose first symbol is ``j``."""
    j = str(j)
    if j not in alphabet:
        raise UnknownLabel(f"prefix symbol {j!r} not in alphabet")
    edges = [(0, 1, j)] + [(1, 1, a) for a in alphabet.symbols]
    return PointedGraph(LabeledGraph(alphabet, ("v0", "v1"), tuple(edges)), 0)


def full_shift(alphabet: Alphabet) -> PointedGraph:
    edges = tuple((0, 0, a) for a in alphabet.symbols)
    return PointedGraph(LabeledGraph(alphabet, ("v0",), edges), 0)


def follower_embedding(p: PointedGraph, loop_symbol: str, new_symbol: str) -> LabeledGraph:
    """Enlarged-alphabet graph whose sofic shift, after reading ``new_symbol``, is ``p``.

    Adds a vertex carrying a ``loop_symbol`` self-loop and a single
    ``new_symbol`` edge into the start of ``p``'s pruned graph.
    """
    loop_symbol, new_symbol = str(loop_symbol), str(new_symbol)
    if loop_symbol not in p.alphabet:
        raise UnknownLabel(f"loop symbol {loop_symbol!r} not in alphabet")
    if new_symbol in p.alphabet:
        raise SymbolCollision(f"new symbol {new_symbol!r} already in alphabet")
    q = prune(p)
    g = q.graph
    alphabet = g.alphabet.extended(new_symbol)
    star = g.vertex_count
    names = g.vertex_names + (_fresh("vstar", g.vertex_names),)
    edges = g.edges + ((star, star, loop_symbol), (star, q.start, new_symbol))
    return LabeledGraph(alphabet, names, edges)
