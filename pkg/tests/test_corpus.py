from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathsets import (
    EventuallyPeriodicWord,
    PointedGraph,
    canonicalize,
    determinize_sofic,
    follower_of_word,
    initial_block_count,
    is_member,
    is_right_resolving,
)
from pathsets.corpus import (
    gen_blowup,
    gen_cycle,
    gen_fig4,
    gen_golden,
    gen_prefix_example,
    gen_random,
    oracle_prefixes,
    random_suite,
)
from pathsets.errors import DepthTooLarge, IndexOutOfRange
from pathsets.graph_core import is_pruned, is_strongly_connected
from pathsets.pgformat import format_pointed

DATA = Path(__file__).parent / "data"


def canonical_prefixes(p, n):
    """Prefix strings read off the canonical table (the path under test)."""
    c = canonicalize(p)
    words = {""}
    frontier = {("", 0)}
    for _ in range(n):
        frontier = {
            (w + c.alphabet.symbols[k], t) for w, q in frontier for k, t in enumerate(c.table[q]) if t >= 0
        }
        words = {w for w, _ in frontier}
    return words


def test_oracle_examples(golden, cycle, z1):
    assert oracle_prefixes(golden, 3).strings() == {"000", "001", "010", "100", "101"}
    assert oracle_prefixes(cycle, 4).strings() == {"0120"}
    assert oracle_prefixes(z1, 2).strings() == {"10", "11"}


def test_oracle_depth_guard(golden):
    oracle_prefixes(golden, 14)
    with pytest.raises(DepthTooLarge):
        oracle_prefixes(golden, 15)


def test_prefix_examples():
    assert canonicalize(gen_prefix_example(2, 1)).state_count == 2
    assert canonicalize(gen_prefix_example(1, 0)).state_count == 1
    assert initial_block_count(gen_prefix_example(3, 2), 2) == 3
    with pytest.raises(IndexOutOfRange):
        gen_prefix_example(2, 2)


def test_figure_graphs():
    assert determinize_sofic(gen_fig4()).graph.vertex_count == 4
    assert is_member(PointedGraph(gen_cycle(), 0), EventuallyPeriodicWord((), ("0", "1", "2")))
    assert follower_of_word(gen_golden(), ["1", "1"]).empty


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_blowup_shape(n):
    g = gen_blowup(n)
    assert g.vertex_count == n
    assert len(g.edges) == n * (2 * n - 2)
    assert is_right_resolving(g)
    assert is_strongly_connected(g)
    assert g.alphabet.size == 2 * n


def test_blowup_fig6_loops():
    g = gen_blowup(3)
    loops = {g.vertex_names[s]: sorted(lab for s2, d, lab in g.edges if s2 == s == d) for s in range(3)}
    assert loops == {"v0": ["4", "5"], "v1": ["3", "5"], "v2": ["3", "4"]}
    cross = {(g.vertex_names[s], g.vertex_names[d]): lab for s, d, lab in g.edges if s != d}
    assert cross[("v0", "v1")] == "1" and cross[("v1", "v0")] == "2"
    assert cross[("v0", "v2")] == "2" and cross[("v2", "v0")] == "1"


def test_blowup4_canonical():
    assert canonicalize(determinize_sofic(gen_blowup(4))).state_count == 15


def test_random_golden_file():
    assert format_pointed(gen_random(42)) == (DATA / "random_seed42.pg").read_text()
    assert gen_random(42) == gen_random(42)


def test_random_sweep():
    for seed in range(1000):
        p = gen_random(seed, 1 + seed % 6, 1 + seed % 3, 0.25)
        assert is_pruned(p) and not p.empty


def test_random_suite_bounds():
    suite = random_suite(200)
    assert len(suite) == 200
    assert all(p.graph.vertex_count <= 5 and p.alphabet.size <= 3 for p in suite)
    assert suite == random_suite(200)


@given(st.integers(0, 10**6), st.integers(1, 5), st.integers(1, 3))
@settings(max_examples=40)
def test_oracle_matches_canonical(seed, n, g):
    p = gen_random(seed, n, g, min(1.0, 2.0 / (n * g)))
    assert oracle_prefixes(p, 8).strings() == canonical_prefixes(p, 8)
