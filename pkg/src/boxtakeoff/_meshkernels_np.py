"""Vectorized numpy implementations of the mesh kernels.

Fallback used when the compiled extension is unavailable (or when
``BOXTAKEOFF_PURE`` is set). Signatures mirror ``_meshkernels``:
``verts`` is a C-contiguous float64 (n, 3) array, ``tris`` a
C-contiguous int32 (m, 3) array.
"""

import numpy as np


def aabb_minmax(verts):
    """Componentwise extrema over all vertices -> (min3, max3) float64 arrays."""
    return verts.min(axis=0), verts.max(axis=0)


def signed_volume_sum(verts, tris):
    """Signed volume sum((v0 . (v1 x v2)) / 6) over all triangles."""
    a = verts[tris[:, 0]]
    b = verts[tris[:, 1]]
    c = verts[tris[:, 2]]
    return float(np.sum(np.einsum("ij,ij->i", a, np.cross(b, c))) / 6.0)


def first_nonmanifold_edge(tris, n_verts):
    """First undirected edge not used by exactly two triangles.

    Returns (u, v, use_count) with u <= v, or None when every edge is
    shared by exactly two triangles.
    """
    edges = np.concatenate([tris[:, [0, 1]], tris[:, [1, 2]], tris[:, [2, 0]]])
    lo = edges.min(axis=1).astype(np.int64)
    hi = edges.max(axis=1).astype(np.int64)
    keys = lo * np.int64(n_verts) + hi
    uniq, counts = np.unique(keys, return_counts=True)
    bad = np.flatnonzero(counts != 2)
    if bad.size == 0:
        return None
    key = int(uniq[bad[0]])
    return key // n_verts, key % n_verts, int(counts[bad[0]])
