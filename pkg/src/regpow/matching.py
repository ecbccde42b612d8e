"""Exact induced matching number by branch and bound.

Induced matching is NP-hard in general; at desk scale an exact include /
exclude search over the lexicographically sorted edge list is instant.  The
pruning bound is the size of a greedy maximal matching of the live edges:
every edge of an induced matching meets a distinct edge of any maximal
matching, so that size is a sound upper bound.
"""

from __future__ import annotations

from .graphs import GraphError


def _check_selection(g, selection):
    sel = []
    edge_set = set(g.edges)
    for u, v in selection:
        e = (u, v) if u < v else (v, u)
        if e not in edge_set:
            raise GraphError(f"edge {e} not in host graph")
        sel.append(e)
    return sorted(set(sel))


def is_matching(g, selection):
    """True iff the selected edges are pairwise vertex-disjoint."""
    sel = _check_selection(g, selection)
    used = set()
    for u, v in sel:
        if u in used or v in used:
            return False
        used.update((u, v))
    return True


def is_induced_matching(g, selection):
    """True iff the selection is a matching and induces no extra edge."""
    sel = _check_selection(g, selection)
    if not is_matching(g, sel):
        return False
    span = {v for e in sel for v in e}
    inside = [e for e in g.edges if e[0] in span and e[1] in span]
    return len(inside) == len(sel)


def _greedy_matching_size(edges):
    used = set()
    size = 0
    for u, v in edges:
        if u not in used and v not in used:
            used.update((u, v))
            size += 1
    return size


def induced_matching(g):
    """Maximum induced matching: (size, lexicographically smallest witness).

    Branches on the first live edge (include it and drop the closed
    neighborhoods of both endpoints, or exclude it); include-first search
    with strict-improvement updates makes the first optimum found the
    lexicographically smallest one.
    """
    edges = sorted(g.edges)
    adj = g.adjacency
    best = 0
    best_sel = ()

    def live_after(edges_live, u, v):
        banned = adj[u] | adj[v] | {u, v}
        return [e for e in edges_live if e[0] not in banned and e[1] not in banned]

    def search(edges_live, chosen):
        nonlocal best, best_sel
        if not edges_live:
            if len(chosen) > best:
                best = len(chosen)
                best_sel = tuple(chosen)
            return
        if len(chosen) + _greedy_matching_size(edges_live) <= best:
            return
        u, v = edges_live[0]
        chosen.append((u, v))
        search(live_after(edges_live[1:], u, v), chosen)
        chosen.pop()
        search(edges_live[1:], chosen)

    search(edges, [])
    return best, best_sel


def induced_matching_number(g):
    """The induced matching number, nu(G)."""
    return induced_matching(g)[0]


def induced_matching_number_bruteforce(g):
    """Reference implementation: scan all edge subsets (use only for tests)."""
    edges = sorted(g.edges)
    m = len(edges)
    best = 0
    for mask in range(1 << m):
        sel = [edges[i] for i in range(m) if (mask >> i) & 1]
        if len(sel) > best and is_induced_matching(g, sel):
            best = len(sel)
    return best
