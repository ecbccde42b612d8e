"""Small test universes: unicyclic graphs, forests, cycles with forests.

Labeled streams are complete over dense vertex sets {0..k-1}; deduplicated
streams keep one representative per isomorphism class via a canonical
adjacency code (minimum adjacency bitstring over color-respecting vertex
orders, intended for <= 9 vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .graphs import Graph, classify, from_edge_list, unicyclic_decomposition

UNICYCLIC_FAMILY = "unicyclic"
FOREST_FAMILY = "forest"
CYCLE_WITH_FOREST_FAMILY = "cycle-with-forest"
FAMILIES = (UNICYCLIC_FAMILY, FOREST_FAMILY, CYCLE_WITH_FOREST_FAMILY)

# cycle-with-forest keeps the attached forest small: at most this many
# non-cycle edges (the colon/power bound suite only needs short whiskers)
MAX_FOREST_EDGES = 2


@dataclass(frozen=True)
class GraphFamilySpec:
    max_vertices: int
    family: str = UNICYCLIC_FAMILY
    dedup: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        # budgets below the smallest member are allowed: the stream is empty


def _refine_colors(n, adj):
    colors = {v: (len(adj[v]),) for v in range(n)}
    while True:
        nxt = {v: (colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)}
        if len(set(nxt.values())) == len(set(colors.values())):
            canon = sorted(set(nxt.values()))
            rank = {c: i for i, c in enumerate(canon)}
            return {v: rank[nxt[v]] for v in range(n)}
        colors = nxt


def canonical_code(g):
    """Complete isomorphism code: class sizes plus the minimum adjacency bits.

    Vertex orders are restricted to those listing the color classes of a
    stable refinement in canonical order; the minimum adjacency bitstring
    over these orders pins the graph up to isomorphism.  Exponential in the
    largest color class, fine for <= 9 vertices.
    """
    n = len(g.vertices)
    if n == 0:
        return (0, "edgeless", ())
    idx = {v: i for i, v in enumerate(g.vertices)}
    adj = [set() for _ in range(n)]
    for u, v in g.edges:
        adj[idx[u]].add(idx[v])
        adj[idx[v]].add(idx[u])
    if not g.edges:
        return (n, "edgeless", ())
    if len(g.edges) == n and all(len(a) == 2 for a in adj):
        comps = classify(g)
        if comps == "cycle":
            return (n, "cycle", ())
    colors = _refine_colors(n, adj)
    by_color = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    class_order = sorted(by_color)
    slots = []  # required color per position
    for c in class_order:
        slots.extend([c] * len(by_color[c]))

    best = None
    placed = [None] * n

    def bits_for(v, pos):
        word = 0
        for i in range(pos):
            word = (word << 1) | (1 if placed[i] in adj[v] else 0)
        return word

    def search(pos, prefix, used):
        nonlocal best
        if pos == n:
            if best is None or prefix < best:
                best = prefix
            return
        cands = [v for v in by_color[slots[pos]] if v not in used]
        scored = []
        for v in cands:
            scored.append((bits_for(v, pos), v))
        scored.sort()
        for word, v in scored:
            nxt = prefix + (word,)
            if best is not None and nxt > best[: pos + 1]:
                break
            placed[pos] = v
            used.add(v)
            search(pos + 1, nxt, used)
            used.discard(v)

    search(0, (), set())
    sizes = tuple(len(by_color[c]) for c in class_order)
    return (n, "g", (sizes, best))


def _dedup_stream(graphs):
    seen = set()
    for g in graphs:
        code = canonical_code(g)
        if code not in seen:
            seen.add(code)
            yield g


# ---------------------------------------------------------------------------
# labeled streams (complete over dense vertex sets)
# ---------------------------------------------------------------------------


def _labeled_cycles(vertex_ids):
    """All labeled cycles on exactly the given vertex set."""
    vs = sorted(vertex_ids)
    first, rest = vs[0], vs[1:]
    for perm in permutations(rest):
        if len(perm) >= 2 and perm[0] > perm[-1]:
            continue  # reflection
        order = (first,) + perm
        yield [tuple(sorted((order[i], order[(i + 1) % len(order)]))) for i in range(len(order))]


def _labeled_unicyclic_exact(k):
    """Every connected unicyclic graph on vertex set {0..k-1}, no duplicates.

    Cycle subset + arrangement picks the cycle; a parent map sends each
    remaining vertex to its unique neighbor toward the cycle, so distinct
    maps give distinct graphs.
    """
    ids = list(range(k))
    for n in range(3, k + 1):
        for cyc_set in combinations(ids, n):
            outside = [v for v in ids if v not in cyc_set]
            for cyc_edges in _labeled_cycles(cyc_set):
                for parents in _parent_maps(outside, set(cyc_set)):
                    edges = cyc_edges + [tuple(sorted((v, p))) for v, p in parents.items()]
                    yield from_edge_list(edges)


def _parent_maps(outside, anchors):
    """All maps outside -> (anchors | outside) whose pointers reach anchors."""
    if not outside:
        yield {}
        return
    choices = {v: sorted((anchors | set(outside)) - {v}) for v in outside}

    def ok(assign):
        for v in outside:
            seen = set()
            w = v
            while w not in anchors:
                if w in seen:
                    return False
                seen.add(w)
                w = assign[w]
        return True

    def rec(i, assign):
        if i == len(outside):
            if ok(assign):
                yield dict(assign)
            return
        v = outside[i]
        for p in choices[v]:
            assign[v] = p
            yield from rec(i + 1, assign)
        del assign[v]

    yield from rec(0, {})


def _labeled_forests_exact(k):
    """Every forest on vertex set {0..k-1}: acyclic edge-subset search."""
    all_edges = list(combinations(range(k), 2))

    def rec(i, edges, parent):
        yield from_edge_list(edges, isolated=range(k))
        for j in range(i, len(all_edges)):
            u, v = all_edges[j]
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                continue
            parent2 = dict(parent)
            parent2[ru] = rv
            yield from rec(j + 1, edges + [all_edges[j]], parent2)

    yield from rec(0, [], {})


def _find(parent, v):
    while v in parent:
        v = parent[v]
    return v


# ---------------------------------------------------------------------------
# deduplicated streams (canonical growth)
# ---------------------------------------------------------------------------


def _grow_with_pendants(reps):
    """One pendant added at every vertex of every representative."""
    for g in reps:
        nxt = max(g.vertices) + 1
        for v in g.vertices:
            yield from_edge_list(list(g.edges) + [(v, nxt)])


def _unicyclic_reps_by_size(max_vertices):
    sizes = {}
    prev = []
    for k in range(3, max_vertices + 1):
        base = [from_edge_list([(i, (i + 1) % k) for i in range(k)])]
        level = list(_dedup_stream(list(_grow_with_pendants(prev)) + base))
        level.sort(key=canonical_code)
        sizes[k] = level
        prev = level
    return sizes


def _tree_reps_by_size(max_vertices):
    sizes = {1: [Graph((0,), ())]}
    for k in range(2, max_vertices + 1):
        level = list(_dedup_stream(_grow_with_pendants(sizes[k - 1])))
        level.sort(key=canonical_code)
        sizes[k] = level
    return sizes


def _forest_reps(max_vertices):
    """Forests as multisets of trees with >= 2 vertices, total <= budget."""
    trees = _tree_reps_by_size(max_vertices)
    out = []

    def rec(min_size, min_index, budget, parts):
        if parts:
            out.append(list(parts))
        for size in range(min_size, budget + 1):
            for i, t in enumerate(trees.get(size, [])):
                if size == min_size and i < min_index:
                    continue
                parts.append(t)
                rec(size, i, budget - size, parts)
                parts.pop()

    rec(2, 0, max_vertices, [])
    graphs = []
    for parts in out:
        edges = []
        offset = 0
        for t in parts:
            edges.extend((u + offset, v + offset) for u, v in t.edges)
            offset += len(t.vertices)
        graphs.append(from_edge_list(edges, isolated=range(offset)))
    graphs.sort(key=lambda g: (len(g.vertices), canonical_code(g)))
    return graphs


def _forest_edge_count(g):
    dec = unicyclic_decomposition(g)
    return len(g.edges) - len(dec.cycle)


def enumerate_family(spec):
    """Stream the graphs of a family, labeled or one per isomorphism class.

    Families: "unicyclic" (connected, one cycle), "forest" (disjoint unions
    of trees, no isolated vertices), "cycle-with-forest" (unicyclic with at
    most MAX_FOREST_EDGES non-cycle edges).  Sizes run up to max_vertices.
    """
    if spec.family == FOREST_FAMILY:
        if spec.dedup:
            yield from _forest_reps(spec.max_vertices)
        else:
            for k in range(2, spec.max_vertices + 1):
                for g in _labeled_forests_exact(k):
                    if g.edges and all(g.degree(v) > 0 for v in g.vertices):
                        yield g
        return

    if spec.dedup:
        sizes = _unicyclic_reps_by_size(spec.max_vertices)
        stream = (g for k in sorted(sizes) for g in sizes[k])
    else:
        stream = (g for k in range(3, spec.max_vertices + 1) for g in _labeled_unicyclic_exact(k))
    if spec.family == CYCLE_WITH_FOREST_FAMILY:
        for g in stream:
            if _forest_edge_count(g) <= MAX_FOREST_EDGES:
                yield g
    else:
        yield from stream


def count_family(spec):
    """Number of graphs the stream yields (test bookkeeping)."""
    return sum(1 for _ in enumerate_family(spec))


def unicyclic_of_size(k, dedup=True):
    """Connected unicyclic graphs on exactly k vertices."""
    spec = GraphFamilySpec(max_vertices=k, family=UNICYCLIC_FAMILY, dedup=dedup)
    return [g for g in enumerate_family(spec) if len(g.vertices) == k]


def brute_force_unicyclic_labeled(k):
    """All connected unicyclic graphs on {0..k-1} by edge-subset filtering."""
    all_edges = list(combinations(range(k), 2))
    out = []
    for mask in range(1 << len(all_edges)):
        if mask.bit_count() != k:
            continue
        edges = [all_edges[i] for i in range(len(all_edges)) if (mask >> i) & 1]
        verts = {v for e in edges for v in e}
        if len(verts) != k:
            continue
        g = from_edge_list(edges)
        if classify(g) in ("cycle", "unicyclic-connected"):
            out.append(g)
    return out
