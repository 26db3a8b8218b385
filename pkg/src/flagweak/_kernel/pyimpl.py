"""Pure-Python kernels; bitmask tricks keep the all-pairs scans tolerable."""

from __future__ import annotations

from collections import deque

import numpy as np


def leq_matrix(pos: np.ndarray, col: np.ndarray) -> np.ndarray:
    """Boolean matrix of the pairwise order criterion.

    pos[e, v-1] is the window position of value v in element e, col[e, v-1]
    the color that value carries. out[a, b] is True iff element a precedes
    element b.
    """
    m, n = pos.shape
    pairs = [(i, j) for i in range(n - 1) for j in range(i + 1, n)]
    inv_masks = []
    for e in range(m):
        row = pos[e]
        mask = 0
        for k, (i, j) in enumerate(pairs):
            if row[i] > row[j]:
                mask |= 1 << k
        inv_masks.append(mask)
    value_bit = [1 << j for _, j in pairs]  # pair slot -> larger-value bit
    cols = [tuple(int(c) for c in col[e]) for e in range(m)]
    out = np.zeros((m, m), dtype=bool)
    for s in range(m):
        inv_s = inv_masks[s]
        col_s = cols[s]
        row_out = out[s]
        for t in range(m):
            if inv_s & ~inv_masks[t]:
                continue
            col_t = cols[t]
            need = 0
            for v in range(n):
                if col_s[v] > col_t[v]:
                    need |= 1 << v
            if need:
                diff = inv_masks[t] & ~inv_s
                slack = 0
                while diff:
                    low = diff & -diff
                    slack |= value_bit[low.bit_length() - 1]
                    diff ^= low
                if need & ~slack:
                    continue
            row_out[t] = True
    return out


def bfs_eccentricities(indptr: np.ndarray, indices: np.ndarray) -> np.ndarray:
    """Eccentricity of every vertex of a CSR graph; -1 marks unreachable parts."""
    m = len(indptr) - 1
    ip = indptr.tolist()
    idx = indices.tolist()
    ecc = np.empty(m, dtype=np.int32)
    for src in range(m):
        dist = [-1] * m
        dist[src] = 0
        queue = deque([src])
        far = 0
        reached = 1
        while queue:
            v = queue.popleft()
            d = dist[v] + 1
            for k in range(ip[v], ip[v + 1]):
                w = idx[k]
                if dist[w] < 0:
                    dist[w] = d
                    far = d
                    reached += 1
                    queue.append(w)
        ecc[src] = far if reached == m else -1
    return ecc
