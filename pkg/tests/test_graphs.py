import pytest

from conftest import by_label, cycle_graph, labels_of, path_graph
from regpow.enumeration import GraphFamilySpec, enumerate_family
from regpow.graphs import (
    CYCLE,
    FOREST,
    OTHER,
    UNICYCLIC,
    GraphError,
    classify,
    closed_neighborhood,
    connected_components,
    delete_edge,
    delete_vertices,
    from_edge_list,
    induced_subgraph,
    neighbors,
    parse_edge_list,
    relabel,
    unicyclic_decomposition,
)


def test_from_edge_list_basics():
    g = from_edge_list([(1, 2)])
    assert len(g.vertices) == 2 and len(g.edges) == 1
    g = from_edge_list([(1, 2), (2, 1)])
    assert g.edges == ((1, 2),)
    with pytest.raises(GraphError):
        from_edge_list([(3, 3)])


def test_fig1_shape(fig1):
    assert len(fig1.vertices) == 7
    assert len(fig1.edges) == 9


def test_neighbors(fig1, fig2):
    v = by_label(fig1)
    assert labels_of(fig1, neighbors(fig1, v["x6"])) == ["x1"]
    v2 = by_label(fig2)
    assert labels_of(fig2, neighbors(fig2, v2["x1"])) == ["x2", "x5", "y1", "y2"]
    iso = from_edge_list([(0, 1)], isolated=[5])
    assert closed_neighborhood(iso, 5) == {5}
    with pytest.raises(GraphError):
        neighbors(fig1, 99)


def test_deletions(fig2):
    assert delete_vertices(fig2, []).edges == fig2.edges
    v = by_label(fig2)
    gamma = [v[x] for x in ("y1", "y2", "y3", "y6", "y7")]
    pruned = delete_vertices(fig2, gamma)
    comps = connected_components(pruned)
    assert len(comps) == 2
    kinds = sorted(
        (len(c.vertices), len(c.edges), classify(c)) for c in comps
    )
    assert kinds == [(2, 1, FOREST), (5, 5, CYCLE)]
    # no isolated vertices remain
    assert all(pruned.degree(u) > 0 for u in pruned.vertices)

    p3 = path_graph(3)
    cut = delete_edge(p3, (0, 1))
    assert set(cut.vertices) == {0, 1, 2} and cut.edges == ((1, 2),)
    with pytest.raises(GraphError):
        delete_edge(p3, (0, 2))


def test_connected_components():
    g = from_edge_list([(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (5, 6)])
    assert len(connected_components(g)) == 2
    assert len(connected_components(cycle_graph(5))) == 1
    iso = from_edge_list([(0, 1)], isolated=[7])
    comps = connected_components(iso)
    assert len(comps) == 2 and any(len(c.vertices) == 1 for c in comps)


def test_classify(fig2, bicyclic):
    assert classify(cycle_graph(5)) == CYCLE
    assert classify(fig2) == UNICYCLIC
    assert classify(bicyclic) == OTHER
    assert classify(path_graph(4)) == FOREST
    assert classify(from_edge_list([], isolated=[0, 1])) == FOREST
    # disconnected with a cycle is not closed-form territory
    assert classify(from_edge_list([(0, 1), (1, 2), (0, 2), (3, 4)])) == OTHER


def test_classify_relabel_invariant():
    spec = GraphFamilySpec(max_vertices=6, family="unicyclic", dedup=True)
    for g in enumerate_family(spec):
        n = len(g.vertices)
        mapping = {v: n - 1 - v for v in g.vertices}
        assert classify(relabel(g, mapping)) == classify(g)


def test_decomposition_cycle_only():
    dec = unicyclic_decomposition(cycle_graph(5))
    assert dec.cycle == (0, 1, 2, 3, 4)
    assert dec.trees == () and dec.gamma == frozenset()


def test_decomposition_fig2(fig2):
    v = by_label(fig2)
    dec = unicyclic_decomposition(fig2)
    assert labels_of(fig2, dec.cycle) == ["x1", "x2", "x3", "x4", "x5"]
    assert labels_of(fig2, dec.gamma) == ["y1", "y2", "y3", "y6", "y7"]
    roots = [root for root, _ in dec.trees]
    assert labels_of(fig2, roots) == ["x1", "x2", "x5"]
    # the only surviving pruned forest edge is y4-y5
    all_pruned_edges = [e for h in dec.pruned_forests for e in h.edges]
    assert [labels_of(fig2, e) for e in all_pruned_edges] == [["y4", "y5"]]


def test_decomposition_smallest_whisker():
    g = from_edge_list([(0, 1), (1, 2), (0, 2), (0, 3)])
    dec = unicyclic_decomposition(g)
    assert dec.cycle == (0, 1, 2)
    assert dec.trees == ((0, ((0, 3),)),)
    assert dec.gamma == frozenset({3})
    assert all(not h.vertices for h in dec.pruned_forests)


def test_decomposition_rejects():
    with pytest.raises(GraphError):
        unicyclic_decomposition(path_graph(4))
    with pytest.raises(GraphError):
        unicyclic_decomposition(from_edge_list([(0, 1), (1, 2), (0, 2), (3, 4)]))


def test_decomposition_cycle_order_deterministic():
    # order starts at the smallest cycle vertex, toward its smaller neighbor
    g = from_edge_list([(2, 7), (7, 4), (4, 9), (9, 2)])
    dec = unicyclic_decomposition(g)
    assert dec.cycle == (2, 7, 4, 9)


def test_decomposition_edge_partition():
    spec = GraphFamilySpec(max_vertices=7, family="unicyclic", dedup=True)
    for g in enumerate_family(spec):
        assert len(g.edges) == len(g.vertices)
        dec = unicyclic_decomposition(g)
        n = len(dec.cycle)
        assert n >= 3
        cyc_edges = {
            tuple(sorted((dec.cycle[i], dec.cycle[(i + 1) % n]))) for i in range(n)
        }
        tree_edges = [e for _, es in dec.trees for e in es]
        assert cyc_edges | set(tree_edges) == set(g.edges)
        assert len(cyc_edges) + len(tree_edges) == len(g.edges)
        assert not (dec.gamma & set(dec.cycle))
        # removing gamma leaves exactly the cycle plus the pruned forests
        pruned = delete_vertices(g, dec.gamma)
        expect = set(cyc_edges)
        for h in dec.pruned_forests:
            expect |= set(h.edges)
        assert set(pruned.edges) == expect


def test_induced_subgraph_composes(fig1):
    assert induced_subgraph(fig1, fig1.vertices).edges == fig1.edges
    w1 = set(list(fig1.vertices)[:5])
    w2 = set(list(fig1.vertices)[2:])
    once = induced_subgraph(fig1, w1 & w2)
    twice = induced_subgraph(induced_subgraph(fig1, w1), w1 & w2)
    assert once.edges == twice.edges and once.vertices == twice.vertices


def test_parse_edge_list():
    text = """
# a comment
x1 x2
x2 x3

vertex z
x1 x3
"""
    g = parse_edge_list(text)
    assert len(g.vertices) == 4 and len(g.edges) == 3
    assert g.label(3) == "z" and g.degree(3) == 0
    with pytest.raises(GraphError):
        parse_edge_list("a a")
    with pytest.raises(GraphError):
        parse_edge_list("a b c")
    with pytest.raises(GraphError):
        parse_edge_list("vertex")
