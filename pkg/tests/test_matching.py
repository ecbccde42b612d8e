import pytest

from conftest import by_label, cycle_graph, path_graph
from regpow.enumeration import GraphFamilySpec, enumerate_family
from regpow.graphs import (
    GraphError,
    closed_neighborhood,
    delete_vertices,
    from_edge_list,
    induced_subgraph,
    unicyclic_decomposition,
)
from regpow.matching import (
    induced_matching,
    induced_matching_number,
    induced_matching_number_bruteforce,
    is_induced_matching,
    is_matching,
)


def _edges(g, *label_pairs):
    v = by_label(g)
    return [(v[a], v[b]) for a, b in label_pairs]


def test_matching_predicates(fig1):
    sel = _edges(fig1, ("x1", "x6"), ("x2", "x3"), ("x4", "x7"))
    assert is_matching(fig1, sel)
    assert not is_induced_matching(fig1, sel)
    assert is_matching(fig1, [])
    p3 = path_graph(3)
    assert not is_matching(p3, [(0, 1), (1, 2)])
    with pytest.raises(GraphError):
        is_matching(p3, [(0, 2)])


def test_induced_matching_examples():
    single = from_edge_list([(0, 1)])
    assert is_induced_matching(single, [(0, 1)])
    c6 = cycle_graph(6)
    assert is_induced_matching(c6, [(0, 1), (3, 4)])
    assert not is_induced_matching(c6, [(0, 1), (2, 3)])


def test_nu_values(fig1, fig2):
    assert induced_matching_number(fig1) == 2
    assert induced_matching_number(from_edge_list([], isolated=[0, 1])) == 0
    assert induced_matching_number(fig2) == 3
    dec = unicyclic_decomposition(fig2)
    assert induced_matching_number(delete_vertices(fig2, dec.gamma)) == 2


@pytest.mark.parametrize("n", range(3, 10))
def test_nu_cycles(n):
    assert induced_matching_number(cycle_graph(n)) == n // 3


def test_branch_and_bound_vs_bruteforce(fig1, fig2):
    spec = GraphFamilySpec(max_vertices=6, family="unicyclic", dedup=True)
    graphs = list(enumerate_family(spec))
    spec = GraphFamilySpec(max_vertices=6, family="forest", dedup=True)
    graphs += list(enumerate_family(spec))
    # up to 12 edges
    graphs += [cycle_graph(9), fig1, fig2]
    wc5 = from_edge_list([(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)])
    graphs.append(wc5)
    for g in graphs:
        assert induced_matching_number(g) == induced_matching_number_bruteforce(g)


def test_witness_is_valid_and_lex_smallest(fig1, fig2):
    for g in (fig1, fig2, cycle_graph(7)):
        size, witness = induced_matching(g)
        assert len(witness) == size
        assert is_induced_matching(g, witness)
        # no equal-size selection is lexicographically smaller
        import itertools

        edges = sorted(g.edges)
        smaller = False
        for combo in itertools.combinations(edges, size):
            if tuple(sorted(combo)) < tuple(sorted(witness)) and is_induced_matching(g, combo):
                smaller = True
                break
        assert not smaller


def test_monotone_under_induced_subgraphs(fig1):
    import itertools

    nu = induced_matching_number(fig1)
    for r in range(len(fig1.vertices) + 1):
        for keep in itertools.combinations(fig1.vertices, r):
            assert induced_matching_number(induced_subgraph(fig1, keep)) <= nu


def test_additive_on_disjoint_unions():
    parts = [cycle_graph(5), path_graph(4), from_edge_list([(0, 1)])]
    for a in parts:
        for b in parts:
            shift = max(a.vertices) + 1
            edges = list(a.edges) + [(u + shift, v + shift) for u, v in b.edges]
            both = from_edge_list(edges)
            assert induced_matching_number(both) == induced_matching_number(
                a
            ) + induced_matching_number(b)


def test_leaf_bound():
    spec = GraphFamilySpec(max_vertices=7, family="unicyclic", dedup=True)
    for g in enumerate_family(spec):
        nu = induced_matching_number(g)
        for u in g.vertices:
            if g.degree(u) != 1:
                continue
            (v,) = g.adjacency[u]
            rest = delete_vertices(g, closed_neighborhood(g, v))
            assert induced_matching_number(rest) + 1 <= nu


def test_pruned_tree_condition_implies_nu_preserved():
    # if every rooted tree keeps its nu after pruning the gamma layer, the
    # whole graph keeps its nu after removing gamma
    spec = GraphFamilySpec(max_vertices=7, family="unicyclic", dedup=True)
    checked = 0
    for g in enumerate_family(spec):
        dec = unicyclic_decomposition(g)
        if not dec.trees:
            continue
        ok = True
        for (root, edges), pruned in zip(dec.trees, dec.pruned_forests):
            tverts = {root} | {v for e in edges for v in e}
            tree = induced_subgraph(g, tverts)
            if induced_matching_number(pruned) != induced_matching_number(tree):
                ok = False
                break
        if ok:
            whole = delete_vertices(g, dec.gamma)
            assert induced_matching_number(whole) == induced_matching_number(g)
            checked += 1
    assert checked > 0
