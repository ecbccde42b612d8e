"""Exact monomial-ideal arithmetic and even-connection machinery.

Monomials are sparse exponent maps over a shared ordered variable list;
ideals are kept as minimal generating sets (no generator divides another).
Everything is immutable and deterministic: generators sort by their dense
exponent vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .graphs import GraphError


class IdealError(ValueError):
    """Invalid monomial/ideal operation input."""


@dataclass(frozen=True)
class Monomial:
    """A monomial as a sorted tuple of (variable index, positive exponent)."""

    pairs: tuple

    def __post_init__(self):
        last = -1
        for v, e in self.pairs:
            if e <= 0:
                raise IdealError("zero or negative exponent stored")
            if v <= last:
                raise IdealError("pairs must be strictly sorted by variable")
            last = v

    @staticmethod
    def from_dict(expmap):
        return Monomial(tuple(sorted((v, e) for v, e in expmap.items() if e)))

    @property
    def exponents(self):
        return dict(self.pairs)

    def degree(self):
        return sum(e for _, e in self.pairs)

    def support(self):
        return frozenset(v for v, _ in self.pairs)

    def is_one(self):
        return not self.pairs

    def is_squarefree(self):
        return all(e == 1 for _, e in self.pairs)

    def exponent(self, v):
        for w, e in self.pairs:
            if w == v:
                return e
        return 0

    def mul(self, other):
        out = dict(self.pairs)
        for v, e in other.pairs:
            out[v] = out.get(v, 0) + e
        return Monomial.from_dict(out)

    def gcd(self, other):
        theirs = dict(other.pairs)
        return Monomial(
            tuple((v, min(e, theirs[v])) for v, e in self.pairs if v in theirs and min(e, theirs[v]) > 0)
        )

    def divides(self, other):
        theirs = dict(other.pairs)
        return all(theirs.get(v, 0) >= e for v, e in self.pairs)

    def quotient(self, other):
        """self / other, assuming other divides self."""
        out = dict(self.pairs)
        for v, e in other.pairs:
            if out.get(v, 0) < e:
                raise IdealError("inexact monomial division")
            out[v] -= e
        return Monomial.from_dict(out)

    def dense(self, nvars):
        out = [0] * nvars
        for v, e in self.pairs:
            out[v] = e
        return tuple(out)

    def text(self, variables):
        if not self.pairs:
            return "1"
        parts = []
        for v, e in self.pairs:
            parts.append(variables[v] if e == 1 else f"{variables[v]}^{e}")
        return "*".join(parts)


ONE = Monomial(())


def _minimal_set(monomials):
    by_degree = sorted(set(monomials), key=lambda m: (m.degree(), m.pairs))
    kept = []
    for m in by_degree:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal: ordered variable names plus a minimal generator tuple."""

    variables: tuple
    generators: tuple

    def __post_init__(self):
        minimal = _minimal_set(self.generators)
        ordered = tuple(sorted(minimal, key=lambda m: m.dense(len(self.variables))))
        object.__setattr__(self, "generators", ordered)

    def is_zero(self):
        return not self.generators

    def is_squarefree(self):
        return all(g.is_squarefree() for g in self.generators)

    def contains(self, m):
        return any(g.divides(m) for g in self.generators)

    def generator_set(self):
        return frozenset(self.generators)

    def text(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(g.text(self.variables) for g in self.generators) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self.text()}"


def minimalize(variables, monomials):
    return MonomialIdeal(tuple(variables), tuple(monomials))


def edge_ideal(g):
    """The edge ideal of a graph: one squarefree quadric per edge.

    Variables are the graph's vertex labels in vertex order.
    """
    index = {v: i for i, v in enumerate(g.vertices)}
    variables = tuple(g.label(v) for v in g.vertices)
    gens = [Monomial(((index[u], 1), (index[v], 1))) for u, v in g.edges]
    return MonomialIdeal(variables, tuple(gens))


def vertex_index(g):
    return {v: i for i, v in enumerate(g.vertices)}


def ideal_power(ideal, s):
    """Minimal generators of I^s by direct expansion plus minimalization."""
    if s < 1:
        raise IdealError("power must be >= 1")
    if ideal.is_zero():
        return ideal
    prods = set()
    for combo in combinations_with_replacement(ideal.generators, s):
        m = ONE
        for g in combo:
            m = m.mul(g)
        prods.add(m)
    return MonomialIdeal(ideal.variables, tuple(prods))


def colon(ideal, m):
    """(I : m), generated by g / gcd(g, m) over the generators g."""
    if not isinstance(m, Monomial):
        raise IdealError("colon divisor must be a Monomial")
    gens = [g.quotient(g.gcd(m)) for g in ideal.generators]
    return MonomialIdeal(ideal.variables, tuple(gens))


def _merge_variables(a, b):
    if a.variables == b.variables:
        return a.variables, None
    names = list(a.variables)
    pos = {n: i for i, n in enumerate(names)}
    remap = {}
    for i, n in enumerate(b.variables):
        if n not in pos:
            pos[n] = len(names)
            names.append(n)
        remap[i] = pos[n]
    return tuple(names), remap


def add(a, b):
    """Minimal generating set of the sum I + J (variable union taken)."""
    variables, remap = _merge_variables(a, b)
    gens = list(a.generators)
    for g in b.generators:
        if remap is None:
            gens.append(g)
        else:
            gens.append(Monomial(tuple(sorted((remap[v], e) for v, e in g.pairs))))
    return MonomialIdeal(variables, tuple(gens))


@dataclass(frozen=True)
class Polarization:
    """A squarefree polarized ideal plus the origin of each new variable."""

    ideal: MonomialIdeal
    origin: tuple  # origin[j] = (old variable index, copy number >= 1)


def polarize(ideal):
    """Replace x^e by x_1 * ... * x_e over fresh copy variables.

    Copy variables are ordered by (original index, copy index); copy j of
    variable named v is labelled "v_j".  Squarefree input comes back
    unchanged up to the renaming x -> x_1.
    """
    nvars = len(ideal.variables)
    maxexp = [0] * nvars
    for g in ideal.generators:
        for v, e in g.pairs:
            maxexp[v] = max(maxexp[v], e)
    origin = []
    newvar = {}
    names = []
    for v in range(nvars):
        for j in range(1, maxexp[v] + 1):
            newvar[(v, j)] = len(origin)
            origin.append((v, j))
            names.append(f"{ideal.variables[v]}_{j}")
    gens = []
    for g in ideal.generators:
        pairs = []
        for v, e in g.pairs:
            for j in range(1, e + 1):
                pairs.append((newvar[(v, j)], 1))
        gens.append(Monomial(tuple(sorted(pairs))))
    return Polarization(MonomialIdeal(tuple(names), tuple(gens)), tuple(origin))


# ---------------------------------------------------------------------------
# even-connection
# ---------------------------------------------------------------------------


def _normalize_product(g, product):
    edge_set = set(g.edges)
    edges = []
    for u, v in product:
        e = (u, v) if u < v else (v, u)
        if e not in edge_set:
            raise GraphError(f"product edge {e} not in graph")
        edges.append(e)
    return tuple(sorted(edges))


def monomial_of_edges(g, product):
    """The monomial of an edge multiset, in the graph's variable order."""
    index = vertex_index(g)
    exps = {}
    for u, v in _normalize_product(g, product):
        exps[index[u]] = exps.get(index[u], 0) + 1
        exps[index[v]] = exps.get(index[v], 0) + 1
    return Monomial.from_dict(exps)


def is_even_connected(g, u, v, product):
    """Decide even-connection of u and v with respect to an edge multiset.

    Looks for a walk p_0 .. p_{2k+1}, k >= 1, with p_0 = u, p_{2k+1} = v,
    every consecutive pair an edge, and the k edges at even positions drawn
    from the multiset within multiplicity.  Returns (found, walk) where the
    walk lists the vertices in order (None when not found).

    Vertices may repeat along the walk; termination comes from memoizing
    (vertex, remaining multiset) states at odd positions.
    """
    product = _normalize_product(g, product)
    if u not in g.adjacency or v not in g.adjacency:
        raise GraphError("endpoint not a vertex of the graph")
    distinct = sorted(set(product))
    mult = tuple(product.count(e) for e in distinct)

    # states: (vertex at odd position, usage counts); at an odd position the
    # walk may stop (if >= 1 multiset edge used and the vertex is v) or
    # consume a multiset edge and then a free graph edge
    seen = set()
    stack = []
    for w in sorted(g.adjacency[u]):
        stack.append((w, (0,) * len(distinct), (u, w)))
    while stack:
        w, used, path = stack.pop()
        if sum(used) >= 1 and w == v:
            return True, path
        if (w, used) in seen:
            continue
        seen.add((w, used))
        for i in range(len(distinct) - 1, -1, -1):
            if used[i] >= mult[i]:
                continue
            a, b = distinct[i]
            if w == a:
                other = b
            elif w == b:
                other = a
            else:
                continue
            used2 = tuple(c + 1 if j == i else c for j, c in enumerate(used))
            for q in sorted(g.adjacency[other], reverse=True):
                stack.append((q, used2, path + (other, q)))
    return False, None


def even_connection_pairs(g, product):
    """All pairs (u <= v, witness walk) even-connected w.r.t. the multiset."""
    out = []
    for i, u in enumerate(g.vertices):
        for v in g.vertices[i:]:
            ok, path = is_even_connected(g, u, v, product)
            if ok:
                out.append(((u, v), path))
    return out


def colon_by_even_connection(g, product):
    """(I(G)^{s+1} : m(product)) built from edges and even-connections.

    Generators: the edges of G, u*v for even-connected pairs u != v, and
    u^2 for vertices even-connected to themselves; minimalized.  Returns
    (ideal, even_pairs) where even_pairs lists the even-connected pairs with
    witness walks.
    """
    index = vertex_index(g)
    base = edge_ideal(g)
    gens = list(base.generators)
    pairs = even_connection_pairs(g, product)
    for (u, v), _ in pairs:
        if u == v:
            gens.append(Monomial(((index[u], 2),)))
        else:
            a, b = sorted((index[u], index[v]))
            gens.append(Monomial(((a, 1), (b, 1))))
    return MonomialIdeal(base.variables, tuple(gens)), pairs


def edge_multiset_factorizations(g, m):
    """All edge multisets whose product equals the monomial ``m``.

    The multiset size is degree(m) / 2.  Used to quantify colon checks over
    every factorization of a generator of I(G)^s.
    """
    index = vertex_index(g)
    if m.degree() % 2:
        return []
    edges = sorted(g.edges)
    target = m.exponents
    out = []

    def recurse(start, remaining, chosen):
        if not remaining:
            out.append(tuple(chosen))
            return
        for k in range(start, len(edges)):
            u, v = edges[k]
            iu, iv = index[u], index[v]
            if remaining.get(iu, 0) >= 1 and remaining.get(iv, 0) >= 1:
                nxt = dict(remaining)
                for w in (iu, iv):
                    nxt[w] -= 1
                    if not nxt[w]:
                        del nxt[w]
                chosen.append(edges[k])
                recurse(k, nxt, chosen)
                chosen.pop()

    recurse(0, dict(target), [])
    return out
