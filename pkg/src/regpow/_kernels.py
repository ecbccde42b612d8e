"""Hot numeric kernels: subset scans, face enumeration, collapses, exact ranks.

Every kernel exists twice: a numba ``@njit`` version and a pure numpy/Python
fallback with identical semantics.  The backend is picked once at import time
from the ``REGPOW_BACKEND`` environment variable ("numba" or "numpy"); the
default is numba when it is importable.  All kernels are deterministic, so
results never depend on the backend (this is pinned by tests).

Faces and vertex subsets are bitmasks in int64; vertex counts stay <= 62.
Rank computations are exact over the rationals: the int64 path detects
potential overflow and the caller retries with Python big integers.
"""

from __future__ import annotations

import os

import numpy as np

_OVERFLOW_LIMIT = np.int64(1) << np.int64(31)

_env = os.environ.get("REGPOW_BACKEND", "").strip().lower()
if _env not in ("", "numba", "numpy"):
    raise RuntimeError(f"REGPOW_BACKEND must be 'numba' or 'numpy', got {_env!r}")

_HAVE_NUMBA = False
if _env != "numpy":
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:
        if _env == "numba":
            raise RuntimeError("REGPOW_BACKEND=numba but numba is not importable")

BACKEND = "numba" if _HAVE_NUMBA else "numpy"


def backend_name():
    """Name of the active kernel backend ("numba" or "numpy")."""
    return BACKEND


# ---------------------------------------------------------------------------
# survivor scan: subsets of the vertex set that are not cones
#
# A vertex v of the restriction to W is a cone apex iff no minimal non-face
# inside W contains v (minimal non-faces form an antichain, so N \ {v} is
# always a face, which forces the equivalence).  Cones have zero reduced
# homology, so the scan only keeps subsets whose every vertex is covered by
# a contained non-face.
# ---------------------------------------------------------------------------


def _survivors_py(nonfaces, nvars):
    out = []
    full = 1 << nvars
    masks = [int(m) for m in nonfaces]
    for w in range(1, full):
        u = 0
        for m in masks:
            if m & ~w == 0:
                u |= m
        if u == w:
            out.append(w)
    return np.asarray(out, dtype=np.int64)


def _survivors_numpy(nonfaces, nvars):
    total = 1 << nvars
    masks = nonfaces.astype(np.int64)
    chunk = 1 << 18
    out = []
    for start in range(0, total, chunk):
        w = np.arange(start, min(start + chunk, total), dtype=np.int64)
        cover = np.zeros_like(w)
        for m in masks:
            contained = (m & ~w) == 0
            cover[contained] |= m
        out.append(w[cover == w])
    res = np.concatenate(out) if out else np.empty(0, dtype=np.int64)
    return res[res != 0]


if _HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _survivors_numba(nonfaces, nvars):  # pragma: no cover - jitted
        total = np.int64(1) << np.int64(nvars)
        count = 0
        out = np.empty(1024, dtype=np.int64)
        for w in range(1, total):
            u = np.int64(0)
            for k in range(nonfaces.shape[0]):
                m = nonfaces[k]
                if m & ~w == 0:
                    u |= m
            if u == w:
                if count == out.shape[0]:
                    grown = np.empty(out.shape[0] * 2, dtype=np.int64)
                    grown[:count] = out
                    out = grown
                out[count] = w
                count += 1
        return out[:count]


def survivor_subsets(nonfaces, nvars):
    """All nonempty W <= {0..nvars-1} whose restriction is not a cone.

    Returned as int64 bitmasks ordered by (popcount, value); this is the
    exhaustive Hochster scan order with the cone skip already applied.
    """
    nonfaces = np.asarray(nonfaces, dtype=np.int64)
    if nvars == 0 or nonfaces.size == 0:
        return np.empty(0, dtype=np.int64)
    if BACKEND == "numba":
        surv = _survivors_numba(nonfaces, nvars)
    else:
        surv = _survivors_numpy(nonfaces, nvars)
    pop = np.array([int(w).bit_count() for w in surv], dtype=np.int64)
    order = np.lexsort((surv, pop))
    return surv[order]


# ---------------------------------------------------------------------------
# face enumeration for one restriction
# ---------------------------------------------------------------------------


def _faces_py(w, nonfaces):
    w = int(w)
    nf = [int(m) for m in nonfaces if int(m) & ~w == 0]
    verts = [v for v in range(w.bit_length()) if (w >> v) & 1]
    # for vertex v: the non-faces containing v, with v removed; F + v is a
    # face iff none of these residues is inside F
    per_v = [[m & ~(1 << v) for m in nf if (m >> v) & 1] for v in verts]
    faces = []
    stack = [(0, 0)]
    while stack:
        face, start = stack.pop()
        faces.append(face)
        for k in range(start, len(verts)):
            ok = True
            for rem in per_v[k]:
                if rem & ~face == 0:
                    ok = False
                    break
            if ok:
                stack.append((face | (1 << verts[k]), k + 1))
    return np.asarray(faces, dtype=np.int64)


if _HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _faces_numba(w, nonfaces):  # pragma: no cover - jitted
        nverts = 0
        for v in range(64):
            if (w >> v) & 1:
                nverts += 1
        verts = np.empty(nverts, dtype=np.int64)
        i = 0
        for v in range(64):
            if (w >> v) & 1:
                verts[i] = v
                i += 1
        # CSR of per-vertex non-face residues
        counts = np.zeros(nverts + 1, dtype=np.int64)
        nnf = 0
        for k in range(nonfaces.shape[0]):
            if nonfaces[k] & ~w == 0:
                nnf += 1
                for j in range(nverts):
                    if (nonfaces[k] >> verts[j]) & 1:
                        counts[j + 1] += 1
        for j in range(nverts):
            counts[j + 1] += counts[j]
        res = np.empty(counts[nverts], dtype=np.int64)
        fill = counts[:nverts].copy()
        for k in range(nonfaces.shape[0]):
            m = nonfaces[k]
            if m & ~w == 0:
                for j in range(nverts):
                    if (m >> verts[j]) & 1:
                        res[fill[j]] = m & ~(np.int64(1) << verts[j])
                        fill[j] += 1

        cap = 4096
        faces = np.empty(cap, dtype=np.int64)
        nfaces = 0
        scap = 4096
        stack_face = np.empty(scap, dtype=np.int64)
        stack_start = np.empty(scap, dtype=np.int64)
        top = 1
        stack_face[0] = 0
        stack_start[0] = 0
        while top > 0:
            top -= 1
            face = stack_face[top]
            start = stack_start[top]
            if nfaces == cap:
                cap *= 2
                grown = np.empty(cap, dtype=np.int64)
                grown[:nfaces] = faces
                faces = grown
            faces[nfaces] = face
            nfaces += 1
            for k in range(start, nverts):
                ok = True
                for t in range(counts[k], counts[k + 1]):
                    if res[t] & ~face == 0:
                        ok = False
                        break
                if ok:
                    if top == scap:
                        scap *= 2
                        gf = np.empty(scap, dtype=np.int64)
                        gs = np.empty(scap, dtype=np.int64)
                        gf[:top] = stack_face
                        gs[:top] = stack_start
                        stack_face = gf
                        stack_start = gs
                    stack_face[top] = face | (np.int64(1) << verts[k])
                    stack_start[top] = k + 1
                    top += 1
        return faces[:nfaces]


def restriction_faces(w, nonfaces):
    """Every face of the restriction to the vertex bitmask ``w``.

    Includes the empty face.  Faces are the subsets of ``w`` containing no
    minimal non-face.
    """
    nonfaces = np.asarray(nonfaces, dtype=np.int64)
    if BACKEND == "numba":
        return _faces_numba(np.int64(w), nonfaces)
    return _faces_py(w, nonfaces)


# ---------------------------------------------------------------------------
# greedy elementary collapse
#
# A face with exactly one codimension-1 coface has no other coface at all
# (two missing vertices would force two codimension-1 cofaces), so the pair
# is free and removing it is a homotopy-preserving elementary collapse.  The
# surviving faces form a subcomplex with the same reduced homology.  The
# empty face takes part: a complex that collapses away entirely has zero
# reduced homology everywhere.
# ---------------------------------------------------------------------------


def _collapse_py(faces):
    faceset = {int(f): i for i, f in enumerate(faces)}
    n = len(faces)
    count = [0] * n
    allbits = 0
    for f in faces:
        allbits |= int(f)
    for f in faces:
        f = int(f)
        m = f
        while m:
            b = m & (-m)
            count[faceset[f ^ b]] += 1
            m ^= b
    alive = [True] * n
    queue = [i for i in range(n) if count[i] == 1]
    qi = 0
    while qi < len(queue):
        i = queue[qi]
        qi += 1
        if not alive[i] or count[i] != 1:
            continue
        f = int(faces[i])
        g = -1
        m = allbits & ~f
        while m:
            b = m & (-m)
            j = faceset.get(f | b, -1)
            if j >= 0 and alive[j]:
                g = j
                break
            m ^= b
        if g < 0:
            continue
        alive[i] = False
        alive[g] = False
        for x in (i, g):
            fx = int(faces[x])
            m = fx
            while m:
                b = m & (-m)
                j = faceset[fx ^ b]
                if alive[j]:
                    count[j] -= 1
                    if count[j] == 1:
                        queue.append(j)
                m ^= b
    return np.asarray(alive, dtype=np.bool_)


if _HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _collapse_numba(faces):  # pragma: no cover - jitted
        n = faces.shape[0]
        size = 1
        while size < 2 * n + 2:
            size *= 2
        mask = size - 1
        keys = np.full(size, np.int64(-1), dtype=np.int64)
        vals = np.empty(size, dtype=np.int64)
        for i in range(n):
            f = faces[i]
            h = (f * np.int64(0x9E3779B97F4A7C15)) & np.int64(mask)
            while keys[h] != -1:
                h = (h + 1) & mask
            keys[h] = f
            vals[h] = i

        count = np.zeros(n, dtype=np.int64)
        allbits = np.int64(0)
        for i in range(n):
            allbits |= faces[i]
        for i in range(n):
            f = faces[i]
            m = f
            while m:
                b = m & (-m)
                key = f ^ b
                h = (key * np.int64(0x9E3779B97F4A7C15)) & np.int64(mask)
                while keys[h] != key:
                    h = (h + 1) & mask
                count[vals[h]] += 1
                m ^= b

        alive = np.ones(n, dtype=np.bool_)
        qcap = 4 * n + 4
        queue = np.empty(qcap, dtype=np.int64)
        qhead = 0
        qtail = 0
        for i in range(n):
            if count[i] == 1:
                queue[qtail] = i
                qtail += 1
        while qhead < qtail:
            i = queue[qhead]
            qhead += 1
            if not alive[i] or count[i] != 1:
                continue
            f = faces[i]
            g = np.int64(-1)
            m = allbits & ~f
            while m:
                b = m & (-m)
                key = f | b
                h = (key * np.int64(0x9E3779B97F4A7C15)) & np.int64(mask)
                while keys[h] != -1:
                    if keys[h] == key:
                        j = vals[h]
                        if alive[j]:
                            g = j
                        break
                    h = (h + 1) & mask
                if g >= 0:
                    break
                m ^= b
            if g < 0:
                continue
            alive[i] = False
            alive[g] = False
            for t in range(2):
                fx = faces[i] if t == 0 else faces[g]
                m = fx
                while m:
                    b = m & (-m)
                    key = fx ^ b
                    h = (key * np.int64(0x9E3779B97F4A7C15)) & np.int64(mask)
                    while keys[h] != key:
                        h = (h + 1) & mask
                    j = vals[h]
                    if alive[j]:
                        count[j] -= 1
                        if count[j] == 1:
                            if qtail == qcap:
                                qcap *= 2
                                grown = np.empty(qcap, dtype=np.int64)
                                grown[:qtail] = queue[:qtail]
                                queue = grown
                            queue[qtail] = j
                            qtail += 1
                    m ^= b
        return alive


def collapse_alive(faces):
    """Boolean mask of faces surviving a greedy elementary collapse."""
    faces = np.asarray(faces, dtype=np.int64)
    if faces.size == 0:
        return np.empty(0, dtype=np.bool_)
    if BACKEND == "numba":
        return _collapse_numba(faces)
    return _collapse_py(faces)


# ---------------------------------------------------------------------------
# exact rank over the rationals
# ---------------------------------------------------------------------------


def rank_exact(rows):
    """Rank over Q of an integer matrix (list of row lists), big-int exact.

    Pivot rows scale other rows fraction-free (r <- p*r - v*piv), which only
    rescales rows and never changes the rank; rows are reduced by their gcd
    to keep the integers small.
    """
    from math import gcd

    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            v = m[r][col]
            if v != 0:
                if v == 1 or v == -1:
                    piv = r
                    break
                if piv < 0:
                    piv = r
        if piv < 0:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            v = m[r][col]
            if v == 0:
                continue
            if v % p == 0:
                f = v // p
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
            else:
                row = [p * a - v * b for a, b in zip(m[r], m[rank])]
                g = 0
                for a in row:
                    g = gcd(g, a)
                    if g == 1:
                        break
                if g > 1:
                    row = [a // g for a in row]
                m[r] = row
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_int64_numpy(mat):
    m = mat.astype(np.int64, copy=True)
    nrows, ncols = m.shape
    rank = 0
    for col in range(ncols):
        colvals = m[rank:, col]
        nz = np.nonzero(colvals)[0]
        if nz.size == 0:
            continue
        units = nz[np.abs(colvals[nz]) == 1]
        piv = rank + int(units[0] if units.size else nz[0])
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        p = m[rank, col]
        rows = m[rank + 1 :, col] != 0
        if rows.any():
            sub = m[rank + 1 :][rows]
            v = sub[:, col : col + 1]
            if (
                abs(int(p)) >= _OVERFLOW_LIMIT
                or np.abs(v).max(initial=0) >= _OVERFLOW_LIMIT
                or np.abs(sub).max(initial=0) >= _OVERFLOW_LIMIT
                or np.abs(m[rank]).max(initial=0) >= _OVERFLOW_LIMIT
            ):
                return rank, True
            exact = v % p == 0
            upd = np.where(exact, sub - (v // p) * m[rank], p * sub - v * m[rank])
            g = np.gcd.reduce(np.abs(upd), axis=1, keepdims=True)
            g[g == 0] = 1
            m[rank + 1 :][rows] = upd // g
        rank += 1
        if rank == nrows:
            break
    return rank, False


if _HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _rank_int64_numba(mat):  # pragma: no cover - jitted
        m = mat.copy()
        nrows, ncols = m.shape
        limit = np.int64(1) << np.int64(31)
        rank = 0
        for col in range(ncols):
            piv = -1
            for r in range(rank, nrows):
                v = m[r, col]
                if v != 0:
                    if v == 1 or v == -1:
                        piv = r
                        break
                    if piv < 0:
                        piv = r
            if piv < 0:
                continue
            if piv != rank:
                for c in range(ncols):
                    t = m[rank, c]
                    m[rank, c] = m[piv, c]
                    m[piv, c] = t
            p = m[rank, col]
            pm = np.int64(0)
            for c in range(ncols):
                a = m[rank, c]
                if a < 0:
                    a = -a
                if a > pm:
                    pm = a
            if pm >= limit or (p if p > 0 else -p) >= limit:
                return rank, True
            for r in range(rank + 1, nrows):
                v = m[r, col]
                if v == 0:
                    continue
                av = v if v > 0 else -v
                if av >= limit:
                    return rank, True
                if v % p == 0:
                    f = v // p
                    for c in range(ncols):
                        m[r, c] -= f * m[rank, c]
                else:
                    rm = np.int64(0)
                    for c in range(ncols):
                        a = m[r, c]
                        if a < 0:
                            a = -a
                        if a > rm:
                            rm = a
                    if rm >= limit:
                        return rank, True
                    for c in range(ncols):
                        m[r, c] = p * m[r, c] - v * m[rank, c]
                    g = np.int64(0)
                    for c in range(ncols):
                        a = m[r, c]
                        if a < 0:
                            a = -a
                        b = g
                        while a:
                            b, a = a, b % a
                        g = b
                        if g == 1:
                            break
                    if g > 1:
                        for c in range(ncols):
                            m[r, c] //= g
            rank += 1
            if rank == nrows:
                break
        return rank, False


def rank_int64(mat):
    """Exact rank of an int64 matrix; escalates to big ints on overflow risk."""
    mat = np.ascontiguousarray(mat, dtype=np.int64)
    if mat.size == 0:
        return 0
    if BACKEND == "numba":
        rank, overflow = _rank_int64_numba(mat)
    else:
        rank, overflow = _rank_int64_numpy(mat)
    if overflow:
        return rank_exact([[int(x) for x in row] for row in mat])
    return int(rank)


def warmup():
    """Trigger jit compilation of every kernel on tiny inputs."""
    nf = np.array([0b11], dtype=np.int64)
    survivor_subsets(nf, 2)
    faces = restriction_faces(0b11, nf)
    collapse_alive(faces)
    rank_int64(np.array([[1, 1], [0, 1]], dtype=np.int64))
