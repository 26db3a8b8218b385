# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the all-pairs order scan and all-sources BFS."""

import numpy as np

from libc.stdint cimport int32_t, uint8_t


def leq_matrix(int32_t[:, ::1] pos, int32_t[:, ::1] col):
    """Boolean matrix of the pairwise order criterion (see pyimpl)."""
    cdef Py_ssize_t m = pos.shape[0]
    cdef Py_ssize_t n = pos.shape[1]
    out_arr = np.zeros((m, m), dtype=np.uint8)
    cdef uint8_t[:, ::1] out = out_arr
    cdef Py_ssize_t s, t, i, j, v
    cdef bint ok, witness
    for s in range(m):
        for t in range(m):
            ok = True
            for i in range(n - 1):
                for j in range(i + 1, n):
                    if pos[s, i] > pos[s, j] and pos[t, i] <= pos[t, j]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            for v in range(n):
                if col[s, v] > col[t, v]:
                    # the value v+1 must head a pair inverted in t but not in s
                    witness = False
                    for i in range(v):
                        if pos[t, i] > pos[t, v] and pos[s, i] <= pos[s, v]:
                            witness = True
                            break
                    if not witness:
                        ok = False
                        break
            if ok:
                out[s, t] = 1
    return out_arr.astype(bool)


def bfs_eccentricities(int32_t[::1] indptr, int32_t[::1] indices):
    """Eccentricity of every vertex of a CSR graph; -1 marks unreachable parts."""
    cdef Py_ssize_t m = indptr.shape[0] - 1
    ecc_arr = np.empty(m, dtype=np.int32)
    cdef int32_t[::1] ecc = ecc_arr
    dist_arr = np.empty(m, dtype=np.int32)
    cdef int32_t[::1] dist = dist_arr
    queue_arr = np.empty(m, dtype=np.int32)
    cdef int32_t[::1] queue = queue_arr
    cdef Py_ssize_t src, head, tail, v, k, reached
    cdef int32_t d, w, far
    for src in range(m):
        for v in range(m):
            dist[v] = -1
        dist[src] = 0
        queue[0] = <int32_t> src
        head = 0
        tail = 1
        far = 0
        reached = 1
        while head < tail:
            v = queue[head]
            head += 1
            d = dist[v] + 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if dist[w] < 0:
                    dist[w] = d
                    if d > far:
                        far = d
                    reached += 1
                    queue[tail] = w
                    tail += 1
        ecc[src] = far if reached == m else -1
    return ecc_arr
