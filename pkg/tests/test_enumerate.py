import itertools

import networkx as nx
import pytest

from bipknot.enumerate import (DegreeCombination, biadjacency_matrices, case_tree,
                               degree_combinations, enumerate_bipartite, gale_ryser, grouped,
                               part_multisets)
from bipknot.graph import canonical_code, is_connected
from bipknot.sieve import cache_path, read_cache
from oracles import labeled_matrix_count, mass, to_nx


def test_combination_normalised():
    dc = DegreeCombination((3, 5, 4), (4, 4, 4))
    assert dc.deg_a == (5, 4, 3) and dc.deg_b == (4, 4, 4)
    assert DegreeCombination((4, 4, 4), (5, 4, 3)) == dc
    assert dc.name == "A5.4.3_B4.4.4"
    assert DegreeCombination.from_name(dc.name) == dc
    with pytest.raises(ValueError):
        DegreeCombination((3, 3), (4,))


def test_grouped():
    assert grouped((5, 5, 5, 5, 3)) == [4, 0, 1]
    assert grouped((4, 4, 4, 4, 4, 3)) == [0, 5, 1]


def test_part_multisets_cover_all_partitions():
    for m in range(3, 16):
        got = set(part_multisets(m))
        want = set()
        for k in range(1, m // 3 + 1):
            for c in itertools.combinations_with_replacement(range(m, 2, -1), k):
                if sum(c) == m:
                    want.add(c)
        assert got == want


def test_domain_size_at_23():
    combos = degree_combinations(23)
    assert len(combos) == 79
    assert sum(gale_ryser(dc.deg_a, dc.deg_b) for dc in combos) == 78


def test_gale_ryser_against_brute_force():
    for p, q in [(2, 3), (3, 3), (3, 4)]:
        seen = set()
        for bits in itertools.product((0, 1), repeat=p * q):
            rows = tuple(sum(bits[i * q:(i + 1) * q]) for i in range(p))
            cols = tuple(sum(bits[i * q + j] for i in range(p)) for j in range(q))
            seen.add((rows, cols))
        for rows in itertools.product(range(q + 1), repeat=p):
            for cols in itertools.product(range(p + 1), repeat=q):
                assert gale_ryser(rows, cols) == ((rows, cols) in seen)


def test_raw_matrices_have_right_margins():
    deg_a, deg_b = (4, 3, 3, 3), (4, 3, 3, 3)
    mats = list(biadjacency_matrices(deg_a, deg_b))
    assert mats
    for rows in mats:
        assert [bin(r).count("1") for r in rows] == list(deg_a)
        assert sorted((sum(r >> j & 1 for r in rows) for j in range(4)), reverse=True) == list(deg_b)


@pytest.mark.parametrize("budget", range(9, 17))
def test_small_budgets_against_mass_formula(budget):
    for dc in degree_combinations(budget):
        graphs = enumerate_bipartite(dc)
        assert len({canonical_code(g) for g in graphs}) == len(graphs)
        assert mass(graphs, dc.deg_a, dc.deg_b) == labeled_matrix_count(dc.deg_a, dc.deg_b)


def test_small_budget_pairwise_distinct_by_networkx():
    graphs = enumerate_bipartite(DegreeCombination((4, 4, 3, 3), (4, 4, 3, 3)))
    for g, h in itertools.combinations(graphs, 2):
        assert not nx.is_isomorphic(to_nx(g), to_nx(h))


def test_graphs_carry_parts():
    dc = DegreeCombination((3, 3, 3), (3, 3, 3))
    (g,) = enumerate_bipartite(dc)
    assert g.parts == tuple("AAABBB")


def test_23_edge_domain_against_mass_formula(report23, cache_dir):
    """Every combination's class list accounts for all labeled matrices exactly once."""
    total = connected = 0
    for dc in degree_combinations(23):
        graphs = read_cache(cache_path(cache_dir, dc))
        total += len(graphs)
        connected += sum(map(is_connected, graphs))
        assert mass(graphs, dc.deg_a, dc.deg_b) == labeled_matrix_count(dc.deg_a, dc.deg_b)
    assert (total, connected) == (4444, 4443)
    assert len(report23.verdicts) == 4443


def test_case_tree_counts():
    t = case_tree()
    assert len(t["both5"]) == 15 and len(t["only_a5"]) == 10 and len(t["max4"]) == 3
    assert len(case_tree(feasible_only=True)["both5"]) == 14
