import random

import pytest
from hypothesis import given, settings, strategies as st

from bipknot.graph import (Graph, Graph6Error, GraphError, MAX_MULTIPLICITY, are_isomorphic,
                           bipartition, canonical_code, canonical_form, components,
                           decode_graph6, encode_graph6, girth, graph_from_code, is_connected,
                           random_relabel, read_graph6_lines, simple_underlying)
from bipknot.families import catalog, heawood
from oracles import brute_isomorphic, nx_isomorphic, random_bipartite, random_multigraph


def test_edges_are_normalised():
    g = Graph(3, [(2, 0), (1, 0), (0, 1)])
    assert g.edges == ((0, 1), (0, 1), (0, 2))
    assert g.degrees == (3, 2, 1)
    assert g.mat[0][1] == 2 and not g.is_simple()


@pytest.mark.parametrize("n,edges", [(2, [(0, 0)]), (2, [(0, 2)]), (2, [(-1, 0)]),
                                     (2, [(0, 1)] * (MAX_MULTIPLICITY + 1))])
def test_bad_graphs_rejected(n, edges):
    with pytest.raises(GraphError):
        Graph(n, edges)


def test_connectivity_and_parts():
    g = Graph(5, [(0, 1), (1, 2), (3, 4)])
    assert not is_connected(g)
    assert sorted(map(sorted, components(g))) == [[0, 1, 2], [3, 4]]
    assert is_connected(catalog("K7"))
    a, b = bipartition(heawood())
    assert sorted(a) == list(range(7)) and sorted(b) == list(range(7, 14))
    assert bipartition(catalog("K5")) is None


def test_girth():
    assert girth(heawood()) == 6
    assert girth(catalog("K33")) == 4
    assert girth(catalog("K5")) == 3
    assert girth(Graph(2, [(0, 1), (0, 1)])) == 2


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 7), st.integers(0, 14), st.randoms(use_true_random=False))
def test_canonical_code_matches_brute_force(n, m, rng):
    g = random_multigraph(rng, n, m)
    h = random_multigraph(rng, n, m)
    assert (canonical_code(g) == canonical_code(h)) == brute_isomorphic(g, h)
    assert canonical_code(random_relabel(g, rng)) == canonical_code(g)


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_canonical_code_on_bipartite_23_edge_graphs(rng):
    g = random_bipartite(rng, 6, 6, 23)
    h = random_bipartite(rng, 6, 6, 23)
    assert canonical_code(random_relabel(g, rng)) == canonical_code(g)
    assert (canonical_code(g) == canonical_code(h)) == nx_isomorphic(g, h)


def test_canonical_form_round_trip():
    rng = random.Random(5)
    for name in ("K7", "K3311", "HEAWOOD", "COUSIN110"):
        g = catalog(name)
        c = canonical_form(random_relabel(g, rng))
        assert are_isomorphic(c, g)
        assert graph_from_code(canonical_code(g)).edges == canonical_form(g).edges


def test_vertex_transitive_graphs_agree_after_relabel():
    # highly symmetric inputs are where automorphism pruning can go wrong
    rng = random.Random(1)
    for name in ("K7", "K55", "HEAWOOD"):
        g = catalog(name)
        codes = {canonical_code(random_relabel(g, rng)) for _ in range(20)}
        assert len(codes) == 1


def test_graph6_known_strings():
    assert encode_graph6(Graph(2, [(0, 1)])) == "A_"
    assert encode_graph6(Graph(3, [(0, 1), (0, 2), (1, 2)])) == "Bw"
    assert decode_graph6("Bw").edges == ((0, 1), (0, 2), (1, 2))
    assert decode_graph6("?").n == 0


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 20), st.randoms(use_true_random=False))
def test_graph6_round_trip(n, rng):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    g = Graph(n, rng.sample(pairs, rng.randint(0, len(pairs))))
    assert decode_graph6(encode_graph6(g)).edges == g.edges


@pytest.mark.parametrize("bad", ["", "A", "A__", "Bx", "A\x7f", "~??"])
def test_graph6_malformed(bad):
    with pytest.raises(Graph6Error):
        decode_graph6(bad)


def test_graph6_refuses_multigraphs():
    with pytest.raises(Graph6Error):
        encode_graph6(Graph(2, [(0, 1), (0, 1)]))


def test_read_lines_skips_comments():
    gs = list(read_graph6_lines(["# header", "A_", "", "Bw"]))
    assert [g.num_edges for g in gs] == [1, 3]


def test_simple_underlying():
    g = Graph(3, [(0, 1), (0, 1), (1, 2)])
    assert simple_underlying(g).edges == ((0, 1), (1, 2))
