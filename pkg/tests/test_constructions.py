from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathsets import (
    Alphabet,
    PointedGraph,
    build_graph,
    decimate,
    determinize,
    determinize_sofic,
    equals,
    follower_embedding,
    follower_of_word,
    initial_block_count,
    is_right_resolving,
    label_product,
    prefix_graph,
    shift,
    shift_closure,
    union,
)
from pathsets.constructions import determinize_with_states, full_shift, full_subset_graph
from pathsets.corpus import (
    gen_blowup,
    gen_cycle,
    gen_fig4,
    gen_prefix_example,
    gen_random,
    oracle_decimation_prefixes,
    oracle_intersection_prefixes,
    oracle_prefixes,
    oracle_prefixes_from,
)
from pathsets.errors import AlphabetMismatch, SymbolCollision, UnknownLabel
from pathsets.graph_core import is_pruned

from conftest import prefixes

B = Alphabet.digits(2)


def cycle_at(v):
    return PointedGraph(gen_cycle(), v)


@st.composite
def random_pointed(draw, g=None):
    g = g if g is not None else draw(st.integers(1, 3))
    seed = draw(st.integers(0, 10**6))
    n = draw(st.integers(1, 5))
    degree = draw(st.sampled_from([1.3, 1.8, 2.5]))
    return gen_random(seed, n, g, min(1.0, degree / (n * g)))


@st.composite
def random_pair(draw):
    g = draw(st.integers(1, 3))
    return draw(random_pointed(g)), draw(random_pointed(g))


# -- determinize --------------------------------------------------------------


def test_fig4_from_full_vertex_set():
    d = determinize_sofic(gen_fig4())
    assert d.graph.vertex_count == 4
    assert sorted(d.graph.vertex_names) == ["A+B", "A+B+C", "A+C", "B+C"]
    assert d.graph.vertex_names[d.start] == "A+B+C"
    assert full_subset_graph(gen_fig4()).vertex_count == 7


def test_determinize_golden(golden):
    d = determinize(golden)
    assert d.graph.vertex_count == 2
    assert prefixes(d, 8) == prefixes(golden, 8)


def test_blowup3_all_subsets_reachable():
    d = determinize_sofic(gen_blowup(3))
    assert d.graph.vertex_count == 7


def test_determinize_sofic_single_loop():
    g, _ = build_graph(Alphabet.of("0"), ["v0"], [("v0", "v0", "0")])
    assert determinize_sofic(g).graph.vertex_count == 1


@given(random_pointed())
def test_determinize_right_resolving_and_pruned(p):
    d = determinize(p)
    assert is_right_resolving(d.graph) and is_pruned(d)
    assert prefixes(d, 8) == prefixes(p, 8)


@given(random_pointed())
def test_subset_claim(p):
    d, states = determinize_with_states(p)
    for i, S in enumerate(states):
        assert prefixes(d.repoint(i), 8) == oracle_prefixes_from(p.graph, S, 8).strings()


# -- label product ------------------------------------------------------------


def _no11_with_leading_1(n):
    return sum(1 for w in product("01", repeat=n) if w[0] == "1" and "11" not in "".join(w))


def test_product_golden_with_z1(golden, z1):
    p = label_product(golden, z1)
    assert _no11_with_leading_1(2) == 1 and _no11_with_leading_1(3) == 2
    assert initial_block_count(p, 2) == 1
    assert initial_block_count(p, 3) == 2
    assert prefixes(p, 6) == {"".join(w) for w in product("01", repeat=6) if w[0] == "1" and "11" not in "".join(w)}


def test_product_idempotent(golden):
    assert equals(label_product(golden, golden), golden)


def test_product_disjoint_prefix_sets(z0, z1):
    assert label_product(z0, z1).empty


def test_product_alphabet_mismatch(golden, cycle):
    with pytest.raises(AlphabetMismatch):
        label_product(golden, cycle)


def test_naive_prefix_intersection_is_not_enough():
    # 0 then 0-loop, versus 0 then 1-loop: both prefix sets contain "0"
    a, _ = build_graph(B, ["s", "t"], [("s", "t", "0"), ("t", "t", "0")])
    b, _ = build_graph(B, ["s", "t"], [("s", "t", "0"), ("t", "t", "1")])
    pa, pb = PointedGraph(a, 0), PointedGraph(b, 0)
    assert prefixes(pa, 1) & prefixes(pb, 1) == {"0"}
    assert label_product(pa, pb).empty
    assert not oracle_intersection_prefixes(pa, pb, 1).words


@given(random_pair())
def test_product_oracle(pair):
    p1, p2 = pair
    got = oracle_prefixes(label_product(p1, p2), 8).words
    assert got == oracle_intersection_prefixes(p1, p2, 8).words
    assert got <= oracle_prefixes(p1, 8).words & oracle_prefixes(p2, 8).words


# -- union --------------------------------------------------------------------


def test_union_prefix_sets_is_full_shift(z0, z1, full2):
    assert equals(union(z0, z1), full2)


def test_union_with_empty_is_identity(golden):
    assert equals(union(golden, PointedGraph.empty_over(B)), golden)
    assert equals(union(PointedGraph.empty_over(B), golden), golden)


def test_union_of_cycle_vertices():
    u = union(union(cycle_at(0), cycle_at(1)), cycle_at(2))
    for n in range(1, 10):
        assert initial_block_count(u, n) == 3
    assert prefixes(u, 3) == {"012", "120", "201"}


@given(random_pair())
def test_union_oracle(pair):
    p1, p2 = pair
    for n in (1, 4, 8):
        assert prefixes(union(p1, p2), n) == prefixes(p1, n) | prefixes(p2, n)


# -- shift / closure ----------------------------------------------------------


def test_shift_examples(z1, full2, golden):
    assert equals(shift(z1), full2)
    assert equals(shift(cycle_at(0)), cycle_at(1))
    assert equals(shift(golden), golden)


def test_shift_closure_examples(z1, full2, golden):
    assert equals(shift_closure(z1), full2)
    three = union(union(cycle_at(0), cycle_at(1)), cycle_at(2))
    assert equals(shift_closure(cycle_at(0)), three)
    assert equals(shift_closure(golden), golden)


def test_shift_of_empty_is_empty():
    assert shift(PointedGraph.empty_over(B)).empty
    assert shift_closure(PointedGraph.empty_over(B)).empty


@given(random_pointed())
def test_shift_oracle(p):
    for n in (1, 5, 8):
        expected = {w[1:] for w in prefixes(p, n + 1)}
        assert prefixes(shift(p), n) == expected


@given(random_pointed())
def test_shift_closure_oracle(p):
    expected = oracle_prefixes_from(p.graph, range(p.graph.vertex_count), 7).strings()
    assert prefixes(shift_closure(p), 7) == expected


# -- decimation ---------------------------------------------------------------


def test_decimate_golden_is_full_shift(golden, full2):
    assert equals(decimate(golden, 0, 2), full2)


def test_decimate_cycle():
    g, _ = build_graph(Alphabet.digits(3), ["a", "b", "c"], [("a", "b", "0"), ("b", "c", "2"), ("c", "a", "1")])
    assert equals(decimate(cycle_at(0), 0, 2), PointedGraph(g, 0))
    assert prefixes(decimate(cycle_at(0), 0, 2), 6) == {"021021"}


@given(random_pointed(), st.integers(0, 3))
def test_decimate_m1_is_iterated_shift(p, j):
    assert equals(decimate(p, j, 1), shift(p, j))


def _decimation_oracle(p, j, m, n):
    return {w[j::m][:n] for w in prefixes(p, j + (n - 1) * m + 1)}


@given(random_pointed(), st.integers(0, 3), st.integers(1, 3))
def test_decimation_oracle(p, j, m):
    n = min(8, (12 - j) // m)
    assert prefixes(decimate(p, j, m), n) == _decimation_oracle(p, j, m, n)


@given(random_pointed(), st.integers(0, 3), st.integers(1, 3))
def test_decimation_oracles_agree(p, j, m):
    n = min(8, (12 - j) // m)
    assert oracle_decimation_prefixes(p, j, m, n).strings() == _decimation_oracle(p, j, m, n)


@given(random_pointed(), st.integers(0, 3), st.integers(1, 3))
def test_decimation_depth8(p, j, m):
    assert prefixes(decimate(p, j, m), 8) == oracle_decimation_prefixes(p, j, m, 8).strings()


@given(random_pointed(), st.integers(2, 3))
def test_decimation_composition(p, m):
    twice = decimate(decimate(p, 0, m), 0, m)
    assert equals(twice, decimate(p, 0, m * m))


# -- prefix sets --------------------------------------------------------------


def test_prefix_graph_matches_fig1():
    assert prefix_graph(B, "1") == gen_prefix_example(2, 1)


def test_prefix_graph_single_symbol():
    a = Alphabet.of("0")
    assert equals(prefix_graph(a, "0"), full_shift(a))


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_prefix_set_counts(g):
    a = Alphabet.digits(g)
    for j in a.symbols:
        for n in range(1, 7):
            assert initial_block_count(prefix_graph(a, j), n) == g ** (n - 1)


def test_prefix_graph_unknown_symbol():
    with pytest.raises(UnknownLabel):
        prefix_graph(B, "2")


# -- follower embedding -------------------------------------------------------


def _embedded_follower(p, loop, new):
    g = follower_embedding(p, loop, new)
    return follower_of_word(determinize_sofic(g), [new]), g.alphabet


def test_embedding_z1(z1):
    g = follower_embedding(z1, "0", "n")
    assert g.vertex_count == 3
    assert g.alphabet.symbols == ("0", "1", "n")
    f, alph = _embedded_follower(z1, "0", "n")
    assert equals(f, z1.with_alphabet(alph))


def test_embedding_single_loop():
    a = Alphabet.of("0")
    p = full_shift(a)
    f, alph = _embedded_follower(p, "0", "n")
    assert equals(f, p.with_alphabet(alph))


def test_embedding_golden(golden):
    f, alph = _embedded_follower(golden, "1", "x")
    assert equals(f, golden.with_alphabet(alph))
    assert prefixes(f, 8) == prefixes(golden, 8)


def test_embedding_errors(golden):
    with pytest.raises(SymbolCollision):
        follower_embedding(golden, "0", "1")
    with pytest.raises(UnknownLabel):
        follower_embedding(golden, "7", "n")


@given(random_pointed())
def test_embedding_random(p):
    f, alph = _embedded_follower(p, p.alphabet.symbols[0], "new")
    assert equals(f, p.with_alphabet(alph))
