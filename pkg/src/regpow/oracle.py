"""Brute-force regularity oracle: polarization plus a Hochster subset scan.

For a squarefree ideal I with Stanley-Reisner complex K,

    reg(I) = 1 + max { d >= 0 : some restriction K|_W has nonzero reduced
                       homology in degree d - 1 },

with reg(0) = 1 by convention.  The scan runs over every nonempty subset of
the support variables in increasing popcount; restrictions with a cone
vertex are skipped (a vertex missing from every contained non-face is a cone
apex, and cones are contractible).  Non-squarefree ideals are polarized
first, which preserves regularity.

Homology is exact over Q (characteristic zero); every report carries that
assumption.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .complexes import restriction_homology, stanley_reisner
from .monomials import IdealError, colon, edge_ideal, ideal_power, monomial_of_edges, polarize

DEFAULT_MAX_VARS = 22
FIELD_NOTE = "exact homology over Q (characteristic 0)"


class ResourceLimitError(RuntimeError):
    """Scan refused: more variables than the configured subset budget."""

    def __init__(self, variable_count, max_vars):
        self.variable_count = variable_count
        self.max_vars = max_vars
        super().__init__(
            f"{variable_count} variables exceed the scan limit of {max_vars}; "
            "pass a larger budget (--max-vars / --heavy) to force it"
        )


def worker_count():
    """Worker cap from REGPOW_THREADS (defaults to the CPU count)."""
    env = os.environ.get("REGPOW_THREADS", "").strip()
    if env:
        return max(1, int(env))
    return max(1, os.cpu_count() or 1)


@dataclass(frozen=True)
class OracleResult:
    regularity: int
    witness_subset: tuple  # variable names of the maximizing W (or ())
    witness_degree: int  # the d achieving the max (0 for the zero ideal)
    variable_count: int  # support variables actually scanned
    survivor_count: int
    field_note: str = FIELD_NOTE


def _scan_survivors(nonfaces, survivors, threads):
    """Max homological contribution over the surviving restrictions.

    Returns (best_d, index of the first survivor attaining it); a
    restriction with nonzero reduced homology in degree d-1 contributes d,
    and (0, -1) means no restriction carries homology.
    """
    if survivors.size == 0:
        return 0, -1

    def homology_max(w):
        dims = restriction_homology(nonfaces, int(w))
        return max((deg + 1 for deg in dims), default=0)

    if threads > 1 and survivors.size > 8:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            contrib = list(pool.map(homology_max, survivors, chunksize=16))
    else:
        contrib = [homology_max(w) for w in survivors]
    best = max(contrib)
    if best == 0:
        return 0, -1
    return best, contrib.index(best)


def hochster_scan(ideal, max_vars=None, threads=None):
    """Full scan of a squarefree ideal; returns an OracleResult."""
    if not ideal.is_squarefree():
        raise IdealError("hochster_scan needs a squarefree ideal; polarize first")
    if any(g.is_one() for g in ideal.generators):
        raise IdealError("unit ideal has no regularity")
    if ideal.is_zero():
        return OracleResult(1, (), 0, 0, 0)
    limit = DEFAULT_MAX_VARS if max_vars is None else max_vars
    support = sorted({v for g in ideal.generators for v in g.support()})
    if len(support) > limit:
        raise ResourceLimitError(len(support), limit)
    pos = {v: i for i, v in enumerate(support)}
    nonfaces = []
    for g in ideal.generators:
        m = 0
        for v in g.support():
            m |= 1 << pos[v]
        nonfaces.append(m)
    nonfaces = np.asarray(sorted(nonfaces), dtype=np.int64)
    threads = worker_count() if threads is None else max(1, threads)
    survivors = _kernels.survivor_subsets(nonfaces, len(support))
    best, idx = _scan_survivors(nonfaces, survivors, threads)
    if idx < 0:
        return OracleResult(1, (), 0, len(support), int(survivors.size))
    w = int(survivors[idx])
    names = tuple(ideal.variables[support[i]] for i in range(len(support)) if (w >> i) & 1)
    return OracleResult(1 + best, names, best, len(support), int(survivors.size))


def regularity_squarefree(ideal, max_vars=None, threads=None):
    """reg(I) for a squarefree monomial ideal via the Hochster scan."""
    return hochster_scan(ideal, max_vars=max_vars, threads=threads).regularity


def regularity_monomial(ideal, max_vars=None, threads=None):
    """reg(I) for an arbitrary monomial ideal: polarize, then scan."""
    return hochster_scan(polarize(ideal).ideal, max_vars=max_vars, threads=threads).regularity


def oracle_report(ideal, max_vars=None, threads=None):
    """Polarize (if needed) and scan, keeping the witness information."""
    if ideal.is_squarefree():
        return hochster_scan(ideal, max_vars=max_vars, threads=threads)
    return hochster_scan(polarize(ideal).ideal, max_vars=max_vars, threads=threads)


def regularity_colon_graph(g, product, max_vars=None, threads=None):
    """Regularity of the polarization of (I(G)^{s+1} : m(product)).

    ``product`` is a multiset of s edges of G; the colon is computed
    directly from the expanded power, independent of the even-connection
    description (which is what the toolkit tests against it).
    """
    s = len(tuple(product))
    if s < 1:
        raise IdealError("edge product must contain at least one edge")
    ideal = edge_ideal(g)
    quotient = colon(ideal_power(ideal, s + 1), monomial_of_edges(g, product))
    return regularity_monomial(quotient, max_vars=max_vars, threads=threads)


def regularity_graph_power(g, s, max_vars=None, threads=None):
    """Oracle regularity of I(G)^s (polarized scan)."""
    ideal = edge_ideal(g)
    if ideal.is_zero():
        return 1
    power = ideal if s == 1 else ideal_power(ideal, s)
    return regularity_monomial(power, max_vars=max_vars, threads=threads)


__all__ = [
    "DEFAULT_MAX_VARS",
    "OracleResult",
    "ResourceLimitError",
    "hochster_scan",
    "oracle_report",
    "regularity_colon_graph",
    "regularity_graph_power",
    "regularity_monomial",
    "regularity_squarefree",
    "stanley_reisner",
    "worker_count",
]
