"""Numba implementations of the numerical kernels.

Twin of :mod:`simpcent.kernels.npy`; same signatures, same results.  Scalar
masks must be passed as ``np.uint64`` so the typed signatures stay stable.
Importing this module requires numba; the package falls back to the numpy
backend when it is unavailable.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_C1 = np.uint64(0x5555555555555555)
_C2 = np.uint64(0x3333333333333333)
_C4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_CM = np.uint64(0x0101010101010101)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S56 = np.uint64(56)


@njit(cache=True)
def _pc(x):
    # SWAR popcount of one uint64
    x = x - ((x >> _S1) & _C1)
    x = (x & _C2) + ((x >> _S2) & _C2)
    x = (x + (x >> _S4)) & _C4
    return np.int64((x * _CM) >> _S56)


@njit(cache=True)
def _member_one(u, sorted_flat, sorted_off, dim_k):
    d = _pc(u) - 1
    if d < 0 or d > dim_k:
        return False
    lo = sorted_off[d]
    hi = sorted_off[d + 1]
    while lo < hi:
        mid = (lo + hi) // 2
        v = sorted_flat[mid]
        if v < u:
            lo = mid + 1
        elif v > u:
            hi = mid
        else:
            return True
    return False


@njit(cache=True)
def _member_flat(q, sorted_flat, sorted_off, dim_k):
    out = np.zeros(q.shape[0], dtype=np.bool_)
    for i in range(q.shape[0]):
        out[i] = _member_one(q[i], sorted_flat, sorted_off, dim_k)
    return out


def member_masks(queries, sorted_flat, sorted_off, dim_k):
    q = np.ascontiguousarray(queries).ravel()
    return _member_flat(q, sorted_flat, sorted_off, dim_k).reshape(
        np.shape(queries)
    )


@njit(cache=True)
def count_lower(m, cand, p, strict):
    n = 0
    t = p + 1
    for i in range(cand.shape[0]):
        c = cand[i]
        if c == m:
            continue
        ic = _pc(m & c)
        if (ic == t) if strict else (ic >= t):
            n += 1
    return n


@njit(cache=True)
def count_upper(m, cand, p_masks, p1_masks, strict):
    n = 0
    for i in range(cand.shape[0]):
        c = cand[i]
        if c == m:
            continue
        u = m | c
        ok = False
        for j in range(p_masks.shape[0]):
            if u & p_masks[j] == u:
                ok = True
                break
        if ok and strict:
            for j in range(p1_masks.shape[0]):
                if u & p1_masks[j] == u:
                    ok = False
                    break
        if ok:
            n += 1
    return n


@njit(cache=True)
def count_cofaces(m, cof, strict, next_masks):
    n = 0
    for i in range(cof.shape[0]):
        c = cof[i]
        if c == m or (c & m) != m:
            continue
        if strict:
            up = False
            for j in range(next_masks.shape[0]):
                if c & next_masks[j] == c:
                    up = True
                    break
            if up:
                continue
        n += 1
    return n


@njit(cache=True)
def adjacency_row(m, all_masks, sorted_flat, sorted_off, dim_k, p):
    n = all_masks.shape[0]
    out = np.zeros(n, dtype=np.uint8)
    for j in range(n):
        c = all_masks[j]
        if _pc(m & c) != p + 1:
            continue
        if _member_one(m | c, sorted_flat, sorted_off, dim_k):
            continue
        out[j] = 1
    return out


@njit(cache=True)
def maximal_filter(flags, all_masks):
    n = flags.shape[0]
    idx = np.empty(n, dtype=np.int64)
    cnt = 0
    for j in range(n):
        if flags[j]:
            idx[cnt] = j
            cnt += 1
    out = flags.copy()
    for a in range(cnt):
        ma = all_masks[idx[a]]
        for b in range(cnt):
            mb = all_masks[idx[b]]
            if ma != mb and (ma & mb) == ma:
                out[idx[a]] = 0
                break
    return out


@njit(cache=True)
def adjacency_matrix01(masks_q, sorted_flat, sorted_off, dim_k, p):
    n = masks_q.shape[0]
    a = np.zeros((n, n), dtype=np.uint8)
    for i in range(n):
        mi = masks_q[i]
        for j in range(i + 1, n):
            mj = masks_q[j]
            if _pc(mi & mj) != p + 1:
                continue
            if _member_one(mi | mj, sorted_flat, sorted_off, dim_k):
                continue
            a[i, j] = 1
            a[j, i] = 1
    return a


@njit(cache=True)
def vertex_adjacency01(n0, edge_masks):
    a = np.zeros((n0, n0), dtype=np.uint8)
    for e in range(edge_masks.shape[0]):
        m = edge_masks[e]
        i = -1
        j = -1
        for b in range(64):
            if (m >> np.uint64(b)) & _S1:
                if i < 0:
                    i = b
                else:
                    j = b
        a[i, j] = 1
        a[j, i] = 1
    return a


@njit(cache=True)
def nearness_edges(all_masks, node_dim, sorted_flat, sorted_off, dim_k):
    n = all_masks.shape[0]
    maxdir = np.zeros((n, n), dtype=np.uint8)
    lev = np.full((n, n), -1, dtype=np.int64)
    flags = np.zeros(n, dtype=np.uint8)
    adj_idx = np.empty(n, dtype=np.int64)
    for i in range(n):
        mi = all_masks[i]
        di = node_dim[i]
        cnt = 0
        for j in range(n):
            flags[j] = 0
            if j == i:
                continue
            if di == 0 and node_dim[j] == 0:
                continue
            mj = all_masks[j]
            ic = _pc(mi & mj)
            if ic == 0:
                continue
            if _member_one(mi | mj, sorted_flat, sorted_off, dim_k):
                continue
            flags[j] = 1
            lev[i, j] = ic - 1
            adj_idx[cnt] = j
            cnt += 1
        for a in range(cnt):
            j = adj_idx[a]
            mj = all_masks[j]
            lj = lev[i, j]
            keep = True
            for b in range(cnt):
                k = adj_idx[b]
                if k == j or lev[i, k] != lj:
                    continue
                mk = all_masks[k]
                if mj != mk and (mj & mk) == mj:
                    keep = False
                    break
            if keep:
                maxdir[i, j] = 1
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            if maxdir[i, j] or maxdir[j, i]:
                total += 1
            elif node_dim[i] == 0 and node_dim[j] == 0:
                if _member_one(
                    all_masks[i] | all_masks[j], sorted_flat, sorted_off, dim_k
                ):
                    total += 1
    ei = np.empty(total, dtype=np.int64)
    ej = np.empty(total, dtype=np.int64)
    el = np.empty(total, dtype=np.int64)
    t = 0
    for i in range(n):
        for j in range(i + 1, n):
            if maxdir[i, j] or maxdir[j, i]:
                ei[t] = i
                ej[t] = j
                el[t] = lev[i, j]
                t += 1
            elif node_dim[i] == 0 and node_dim[j] == 0:
                if _member_one(
                    all_masks[i] | all_masks[j], sorted_flat, sorted_off, dim_k
                ):
                    ei[t] = i
                    ej[t] = j
                    el[t] = 0
                    t += 1
    return ei, ej, el


@njit(cache=True)
def bfs_counts(indptr, indices, n, src):
    dist = np.full(n, -1, dtype=np.int64)
    sigma = np.zeros(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    dist[src] = 0
    sigma[src] = 1
    queue[0] = src
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        for ptr in range(indptr[u], indptr[u + 1]):
            v = indices[ptr]
            if dist[v] == -1:
                dist[v] = du + 1
                queue[tail] = v
                tail += 1
            if dist[v] == du + 1:
                sigma[v] += sigma[u]
    return dist, sigma


@njit(cache=True)
def power_iteration(a, tol, maxit):
    n = a.shape[0]
    x = np.full(n, 1.0 / n)
    x = x / np.linalg.norm(x)
    it = 0
    converged = False
    while it < maxit:
        y = np.dot(a, x) + x
        nrm = np.linalg.norm(y)
        if nrm == 0.0:
            break
        y = y / nrm
        delta = np.max(np.abs(y - x))
        x = y
        it += 1
        if delta <= tol:
            converged = True
            break
    lam = float(np.dot(x, np.dot(a, x)))
    return lam, x, it, converged
