# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mesh kernels: AABB reduction, signed volume sum, manifold scan.

The numpy fallback in ``_meshkernels_np`` implements the same contract.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def aabb_minmax(const double[:, ::1] verts not None):
    """Componentwise extrema over all vertices -> (min3, max3) float64 arrays."""
    cdef Py_ssize_t n = verts.shape[0]
    cdef Py_ssize_t i, k
    cdef double v
    lo_arr = np.empty(3, dtype=np.float64)
    hi_arr = np.empty(3, dtype=np.float64)
    cdef double[::1] lo = lo_arr
    cdef double[::1] hi = hi_arr
    for k in range(3):
        lo[k] = verts[0, k]
        hi[k] = verts[0, k]
    for i in range(1, n):
        for k in range(3):
            v = verts[i, k]
            if v < lo[k]:
                lo[k] = v
            elif v > hi[k]:
                hi[k] = v
    return lo_arr, hi_arr


def signed_volume_sum(const double[:, ::1] verts not None,
                      const int[:, ::1] tris not None):
    """Signed volume sum((v0 . (v1 x v2)) / 6) over all triangles."""
    cdef Py_ssize_t m = tris.shape[0]
    cdef Py_ssize_t t
    cdef Py_ssize_t ia, ib, ic
    cdef double ax, ay, az, bx, by, bz, cx, cy, cz
    cdef double total = 0.0
    for t in range(m):
        ia = tris[t, 0]
        ib = tris[t, 1]
        ic = tris[t, 2]
        ax = verts[ia, 0]; ay = verts[ia, 1]; az = verts[ia, 2]
        bx = verts[ib, 0]; by = verts[ib, 1]; bz = verts[ib, 2]
        cx = verts[ic, 0]; cy = verts[ic, 1]; cz = verts[ic, 2]
        total += (ax * (by * cz - bz * cy)
                  + ay * (bz * cx - bx * cz)
                  + az * (bx * cy - by * cx))
    return total / 6.0


def first_nonmanifold_edge(const int[:, ::1] tris not None, Py_ssize_t n_verts):
    """First undirected edge not used by exactly two triangles.

    Returns (u, v, use_count) with u <= v, or None when every edge is
    shared by exactly two triangles.
    """
    cdef Py_ssize_t m = tris.shape[0]
    cdef Py_ssize_t t, e, i, j
    cdef long long u, v, tmp
    keys_arr = np.empty(3 * m, dtype=np.int64)
    cdef long long[::1] keys = keys_arr
    for t in range(m):
        for e in range(3):
            u = tris[t, e]
            v = tris[t, (e + 1) % 3]
            if u > v:
                tmp = u; u = v; v = tmp
            keys[3 * t + e] = u * <long long> n_verts + v
    keys_arr.sort()
    i = 0
    while i < 3 * m:
        j = i
        while j < 3 * m and keys[j] == keys[i]:
            j += 1
        if j - i != 2:
            return (int(keys[i] // n_verts), int(keys[i] % n_verts), int(j - i))
        i = j
    return None
