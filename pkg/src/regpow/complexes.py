"""Stanley-Reisner complexes and exact reduced rational homology.

Complexes are presented by their minimal non-faces (an antichain of vertex
bitmasks); a subset is a face iff it contains no minimal non-face.  Homology
is computed over Q with exact integer boundary ranks; a greedy elementary
collapse shrinks the face list first, which leaves both the homotopy type
and all reduced Betti numbers unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .monomials import IdealError


def _as_mask(vertices):
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices 0..vertex_count-1 given by minimal non-faces."""

    vertex_count: int
    minimal_nonfaces: tuple  # sorted tuple of int bitmasks, an antichain

    def __post_init__(self):
        masks = sorted(set(int(m) for m in self.minimal_nonfaces))
        object.__setattr__(self, "minimal_nonfaces", tuple(masks))
        full = (1 << self.vertex_count) - 1
        for i, m in enumerate(self.minimal_nonfaces):
            if m & ~full:
                raise IdealError("non-face outside the vertex range")
            for n in self.minimal_nonfaces[i + 1 :]:
                if m != n and (m & n) in (m, n):
                    raise IdealError("minimal non-faces must form an antichain")

    def is_face(self, vertices):
        mask = _as_mask(vertices)
        return all(m & ~mask for m in self.minimal_nonfaces)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced rational Betti numbers keyed by degree (zeros omitted)."""

    dims: dict

    def max_degree(self):
        return max(self.dims, default=None)


def stanley_reisner(ideal):
    """Stanley-Reisner complex of a squarefree monomial ideal.

    Minimal non-faces are the supports of the minimal generators.
    """
    if not ideal.is_squarefree():
        raise IdealError("ideal is not squarefree; polarize it first")
    masks = []
    for g in ideal.generators:
        m = 0
        for v, _ in g.pairs:
            m |= 1 << v
        masks.append(m)
    return SimplicialComplex(len(ideal.variables), tuple(masks))


def homology_from_faces(faces):
    """Reduced homology dims of a down-closed face list (bitmasks incl. {})."""
    faces = np.asarray(faces, dtype=np.int64)
    if faces.size == 0:
        return {}
    alive = _kernels.collapse_alive(faces)
    core = sorted(int(f) for f in faces[alive])
    if not core:
        return {}
    levels = {}
    for f in core:
        levels.setdefault(f.bit_count(), []).append(f)
    ranks = {}
    for k, upper in sorted(levels.items()):
        if k == 0 or (k - 1) not in levels:
            ranks[k] = 0
            continue
        lower_index = {f: i for i, f in enumerate(levels[k - 1])}
        mat = np.zeros((len(lower_index), len(upper)), dtype=np.int64)
        for j, f in enumerate(upper):
            rest = f
            pos = 0
            while rest:
                bit = rest & (-rest)
                mat[lower_index[f ^ bit], j] = 1 if pos % 2 == 0 else -1
                rest ^= bit
                pos += 1
        ranks[k] = _kernels.rank_int64(mat)
    dims = {}
    for k, fs in levels.items():
        betti = len(fs) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if betti:
            dims[k - 1] = betti
    return dims


def restriction_homology(nonfaces, w):
    """Reduced homology of the restriction to the vertex bitmask ``w``."""
    faces = _kernels.restriction_faces(w, np.asarray(nonfaces, dtype=np.int64))
    return homology_from_faces(faces)


def reduced_homology(complex_, w):
    """Reduced rational homology of K restricted to the vertex subset W.

    The restriction keeps the faces contained in W.  A nonempty W whose
    singletons are all excluded leaves only the empty face, which carries
    one dimension of homology in degree -1; the empty subset contributes
    nothing by convention.
    """
    mask = _as_mask(w)
    full = (1 << complex_.vertex_count) - 1
    if mask & ~full:
        raise IdealError("W is not a subset of the vertex set")
    if mask == 0:
        return HomologyProfile({})
    nonfaces = np.asarray(complex_.minimal_nonfaces, dtype=np.int64)
    return HomologyProfile(restriction_homology(nonfaces, mask))


def euler_characteristic(faces):
    """Reduced Euler characteristic from a face list (empty face included)."""
    chi = 0
    for f in faces:
        chi += -1 if int(f).bit_count() % 2 == 0 else 1
    return chi
