import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathsets import Alphabet, PointedGraph, build_graph, is_right_resolving, prune, reachability_radius
from pathsets.corpus import gen_cycle, gen_fig4, gen_golden, gen_random, oracle_prefixes_from
from pathsets.errors import DuplicateEdge, EmptyPathSet, UnknownLabel, UnknownVertex
from pathsets.graph_core import LabeledGraph, is_pruned

from conftest import prefixes

B = Alphabet.digits(2)


def test_build_golden_mean():
    g, dups = build_graph(B, ["v0", "v1"], [("v0", "v0", "0"), ("v0", "v1", "1"), ("v1", "v0", "0")])
    assert dups == 0
    assert g.vertex_count == 2
    assert g.edges == ((0, 0, "0"), (0, 1, "1"), (1, 0, "0"))
    assert g == gen_golden().graph


def test_build_single_loop():
    g, _ = build_graph(Alphabet.of("0"), ["v0"], [("v0", "v0", "0")])
    assert g.vertex_count == 1 and len(g.edges) == 1


def test_duplicate_edge_strict_and_dedup():
    edges = [("v0", "v1", "1"), ("v0", "v1", "1"), ("v1", "v0", "0")]
    with pytest.raises(DuplicateEdge):
        build_graph(B, ["v0", "v1"], edges)
    g, dups = build_graph(B, ["v0", "v1"], edges, dedup=True)
    assert dups == 1 and len(g.edges) == 2


def test_unknown_vertex_and_label():
    with pytest.raises(UnknownVertex):
        build_graph(B, ["v0"], [("v0", "v9", "0")])
    with pytest.raises(UnknownLabel):
        build_graph(B, ["v0"], [("v0", "v0", "7")])


def test_parallel_edges_and_loops_allowed():
    g, _ = build_graph(B, ["a"], [("a", "a", "0"), ("a", "a", "1")])
    assert len(g.edges) == 2


def test_prune_keeps_pruned_graph(golden):
    assert prune(golden) == golden


def test_prune_stranded_start_gives_empty():
    g, _ = build_graph(B, ["v0", "v1"], [("v0", "v1", "0")])
    p = prune(PointedGraph(g, 0))
    assert p.empty
    assert p.graph.edges == ()


def test_prune_drops_unreachable_vertex():
    g, _ = build_graph(B, ["v0", "x"], [("v0", "v0", "0"), ("x", "x", "1"), ("x", "v0", "0")])
    p = prune(PointedGraph(g, 0))
    assert p.graph.vertex_names == ("v0",)
    assert p.graph.edges == ((0, 0, "0"),)


def test_prune_iterates_dead_ends():
    # v2 is a dead end; removing it strands v1
    g, _ = build_graph(B, ["v0", "v1", "v2"], [("v0", "v0", "0"), ("v0", "v1", "1"), ("v1", "v2", "0")])
    p = prune(PointedGraph(g, 0))
    assert p.graph.vertex_names == ("v0",)


def test_right_resolving():
    assert not is_right_resolving(gen_fig4())
    assert is_right_resolving(gen_golden().graph)
    g, _ = build_graph(B, ["a", "b"], [])
    assert is_right_resolving(g)


def test_reachability_radius(golden, cycle):
    assert reachability_radius(golden) == 1
    g, _ = build_graph(Alphabet.of("0"), ["v0"], [("v0", "v0", "0")])
    assert reachability_radius(PointedGraph(g, 0)) == 0
    assert reachability_radius(cycle) == 2
    with pytest.raises(EmptyPathSet):
        reachability_radius(PointedGraph.empty_over(B))


def _raw_random(seed, n, density):
    """Unpruned random pointed graph (may contain dead ends and unreachable vertices)."""
    rng = random.Random(seed)
    edges = tuple((s, d, a) for s in range(n) for d in range(n) for a in "01" if rng.random() < density)
    return PointedGraph(LabeledGraph(B, tuple(f"v{i}" for i in range(n)), edges), 0)


@given(st.integers(0, 10**6), st.integers(1, 5), st.floats(0.05, 0.4))
def test_prune_properties(seed, n, density):
    p = _raw_random(seed, n, density)
    q = prune(p)
    assert prune(q) == q
    assert is_pruned(q)
    if not q.empty:
        assert all(q.graph.out[v] for v in range(q.graph.vertex_count))
    # a raw walk that extends n more steps repeats a vertex, so it extends forever
    for n_ in (1, 3, 5):
        raw = oracle_prefixes_from(p.graph, [p.start], n_ + n).strings()
        assert prefixes(q, n_) == {w[:n_] for w in raw}


@given(st.integers(0, 10**6))
def test_random_generator_outputs_pruned(seed):
    p = gen_random(seed, 4, 2, 0.3)
    assert not p.empty and is_pruned(p)


def test_cycle_graph_shape():
    g = gen_cycle()
    assert g.edges == ((0, 1, "0"), (1, 2, "1"), (2, 0, "2"))
