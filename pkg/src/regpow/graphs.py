"""Simple undirected graphs and the structure theory of unicyclic graphs.

Vertices are dense integer ids 0..n-1 with an optional label table; graphs
are immutable after construction and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphError(ValueError):
    """Malformed graph input or an operation applied outside its domain."""


def _norm_edge(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    ``vertices`` is an ordered tuple of vertex ids, ``edges`` a sorted tuple
    of (min, max) pairs.  ``labels`` maps ids to display names (defaults to
    the decimal id).
    """

    vertices: tuple
    edges: tuple
    labels: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise GraphError("duplicate vertex ids")
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge ({u},{v}) uses undeclared vertex")

    def label(self, v):
        return self.labels.get(v, str(v))

    @property
    def adjacency(self):
        adj = self.__dict__.get("_adj")
        if adj is None:
            adj = {v: set() for v in self.vertices}
            for u, v in self.edges:
                adj[u].add(v)
                adj[v].add(u)
            object.__setattr__(self, "_adj", adj)
        return adj

    def degree(self, v):
        return len(self.adjacency[v])

    def has_edge(self, u, v):
        return _norm_edge(u, v) in set(self.edges)

    def __repr__(self):
        es = ",".join(f"{self.label(u)}-{self.label(v)}" for u, v in self.edges)
        return f"Graph({len(self.vertices)} vertices: {es})"


def from_edge_list(pairs, isolated=(), labels=None):
    """Build a graph from vertex-id pairs; duplicates collapse, loops raise."""
    edges = set()
    verts = set(isolated)
    for u, v in pairs:
        if u == v:
            raise GraphError(f"loop pair ({u},{v})")
        edges.add(_norm_edge(u, v))
        verts.add(u)
        verts.add(v)
    return Graph(tuple(sorted(verts)), tuple(sorted(edges)), dict(labels or {}))


def parse_edge_list(text):
    """Parse the edge-list text format into a Graph.

    One edge per line as two whitespace-separated labels; '#' starts a
    comment line; blank lines are skipped; ``vertex <label>`` declares an
    isolated vertex.  Ids are assigned by first appearance.
    """
    ids = {}
    labels = {}

    def vid(tok):
        if tok not in ids:
            ids[tok] = len(ids)
            labels[ids[tok]] = tok
        return ids[tok]

    pairs = []
    isolated = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if toks[0] == "vertex":
            if len(toks) != 2:
                raise GraphError(f"line {lineno}: expected 'vertex <label>'")
            isolated.append(vid(toks[1]))
            continue
        if len(toks) != 2:
            raise GraphError(f"line {lineno}: expected two labels, got {len(toks)}")
        u, v = vid(toks[0]), vid(toks[1])
        if u == v:
            raise GraphError(f"line {lineno}: loop edge {toks[0]} {toks[1]}")
        pairs.append((u, v))
    return from_edge_list(pairs, isolated=isolated, labels=labels)


def neighbors(g, v):
    """Open neighborhood of v."""
    if v not in g.adjacency:
        raise GraphError(f"unknown vertex {v}")
    return set(g.adjacency[v])


def closed_neighborhood(g, v):
    """Closed neighborhood N[v] = N(v) + v."""
    return neighbors(g, v) | {v}


def delete_vertices(g, remove):
    """Delete the vertices in ``remove`` together with all incident edges."""
    remove = set(remove)
    unknown = remove - set(g.vertices)
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    verts = tuple(v for v in g.vertices if v not in remove)
    edges = tuple(e for e in g.edges if e[0] not in remove and e[1] not in remove)
    return Graph(verts, edges, g.labels)


def delete_edge(g, e):
    """Delete one edge, keeping both endpoints."""
    e = _norm_edge(*e)
    if e not in set(g.edges):
        raise GraphError(f"edge {e} not in graph")
    return Graph(g.vertices, tuple(x for x in g.edges if x != e), g.labels)


def induced_subgraph(g, keep):
    """Induced subgraph on ``keep``: exactly the edges inside ``keep``."""
    keep = set(keep)
    unknown = keep - set(g.vertices)
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    verts = tuple(v for v in g.vertices if v in keep)
    edges = tuple(e for e in g.edges if e[0] in keep and e[1] in keep)
    return Graph(verts, edges, g.labels)


def connected_components(g):
    """Maximal connected induced subgraphs, sorted by smallest vertex id."""
    seen = set()
    comps = []
    adj = g.adjacency
    for start in g.vertices:
        if start in seen:
            continue
        stack = [start]
        comp = set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(adj[v] - comp)
        seen |= comp
        comps.append(induced_subgraph(g, comp))
    return comps


def is_connected(g):
    return len(g.vertices) <= 1 or len(connected_components(g)) == 1


FOREST = "forest"
CYCLE = "cycle"
UNICYCLIC = "unicyclic-connected"
OTHER = "other"


def classify(g):
    """One of forest / cycle / unicyclic-connected / other.

    Forest means acyclic (connected or not); cycle means connected and
    2-regular; unicyclic-connected means connected with |E| = |V|; anything
    else (bicyclic and beyond, or disconnected graphs with a cycle) is other.
    """
    n, m = len(g.vertices), len(g.edges)
    comps = connected_components(g)
    if all(len(c.edges) == len(c.vertices) - 1 for c in comps):
        return FOREST
    if len(comps) != 1:
        return OTHER
    if m == n:
        if all(g.degree(v) == 2 for v in g.vertices):
            return CYCLE
        return UNICYCLIC
    return OTHER


@dataclass(frozen=True)
class UnicyclicDecomposition:
    """The unique cycle of a connected unicyclic graph plus its hung trees.

    ``cycle`` lists the cycle vertices in traversal order; ``trees`` maps
    each root on the cycle to the edge set of its rooted tree; ``gamma`` is
    the union of the roots' tree-neighbors; ``pruned_forests`` holds, per
    tree, the forest left after deleting the root and its gamma layer.
    """

    cycle: tuple
    trees: tuple  # ((root, (edges...)), ...) sorted by root
    gamma: frozenset
    pruned_forests: tuple  # one Graph per tree, same order


def unicyclic_decomposition(g):
    """Decompose a connected unicyclic graph per the cycle/tree structure.

    The cycle is found by repeatedly pruning degree-1 vertices; its order
    starts at the smallest cycle vertex and proceeds toward the smaller of
    its two cycle neighbors.
    """
    if classify(g) not in (CYCLE, UNICYCLIC):
        raise GraphError("graph is not connected unicyclic")
    deg = {v: g.degree(v) for v in g.vertices}
    live = set(g.vertices)
    stack = [v for v in g.vertices if deg[v] == 1]
    while stack:
        v = stack.pop()
        live.discard(v)
        for u in g.adjacency[v]:
            if u in live:
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
    cycle_verts = live
    start = min(cycle_verts)
    nbrs_on_cycle = sorted(g.adjacency[start] & cycle_verts)
    order = [start, nbrs_on_cycle[0]]
    while True:
        nxt = sorted(g.adjacency[order[-1]] & cycle_verts - {order[-2]})
        if nxt[0] == start:
            break
        order.append(nxt[0])

    trees = {}
    for root in order:
        for u in sorted(g.adjacency[root] - cycle_verts):
            stack = [(root, u)]
            trees.setdefault(root, set())
            while stack:
                parent, v = stack.pop()
                trees[root].add(_norm_edge(parent, v))
                for w in sorted(g.adjacency[v] - {parent}):
                    stack.append((v, w))

    gamma = set()
    pruned = []
    tree_items = sorted((root, tuple(sorted(es))) for root, es in trees.items())
    for root, es in tree_items:
        layer = {v for v in g.adjacency[root] if v not in cycle_verts}
        gamma |= layer
        tverts = {v for e in es for v in e} - {root} - layer
        pruned.append(induced_subgraph(g, tverts))
    return UnicyclicDecomposition(
        cycle=tuple(order),
        trees=tuple(tree_items),
        gamma=frozenset(gamma),
        pruned_forests=tuple(pruned),
    )


def relabel(g, mapping):
    """Relabel vertices by the given id mapping (a bijection)."""
    verts = tuple(sorted(mapping[v] for v in g.vertices))
    edges = tuple(sorted(_norm_edge(mapping[u], mapping[v]) for u, v in g.edges))
    labels = {mapping[v]: g.label(v) for v in g.vertices}
    return Graph(verts, edges, labels)
