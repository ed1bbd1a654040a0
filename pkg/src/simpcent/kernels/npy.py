"""Pure numpy implementations of the numerical kernels.

Each function here has a numba twin in :mod:`simpcent.kernels.jit` with the
same signature and semantics; the active backend is chosen in the package
``__init__``.  All mask arguments are uint64 vertex bitmasks in chain-basis
order, and scalar masks must already be ``np.uint64``.
"""

from __future__ import annotations

import numpy as np


def _popcount(arr):
    return np.bitwise_count(arr).astype(np.int64)


def member_masks(queries, sorted_flat, sorted_off, dim_k):
    """Membership of arbitrary vertex masks in the complex.

    ``sorted_flat``/``sorted_off`` hold the per-dimension mask lists sorted by
    value; a query mask with v vertices is searched in the block of dimension
    v - 1.  Returns a bool array of the query shape.
    """
    q = np.ascontiguousarray(queries).ravel()
    sizes = _popcount(q)
    res = np.zeros(q.shape, dtype=bool)
    for d in range(dim_k + 1):
        sel = sizes == d + 1
        if not sel.any():
            continue
        block = sorted_flat[sorted_off[d]:sorted_off[d + 1]]
        if block.size == 0:
            continue
        u = q[sel]
        idx = np.minimum(np.searchsorted(block, u), block.size - 1)
        res[sel] = block[idx] == u
    return res.reshape(np.shape(queries))


def count_lower(m, cand, p, strict):
    """Number of candidates sharing a p-face with the mask ``m`` (strict:
    sharing a p-face but no (p+1)-face), excluding ``m`` itself."""
    inter = _popcount(m & cand)
    hits = inter == p + 1 if strict else inter >= p + 1
    hits &= cand != m
    return int(hits.sum())


def count_upper(m, cand, p_masks, p1_masks, strict):
    """Number of candidates that share a p-coface with ``m`` (strict: a
    p-coface but no (p+1)-coface), excluding ``m`` itself.

    ``p_masks`` are the p-simplices, ``p1_masks`` the (p+1)-simplices (may be
    empty).  A shared coface of dimension d exists iff some d-simplex contains
    the union of the two masks.
    """
    unions = m | cand
    if p_masks.size:
        ok = ((unions[:, None] & p_masks[None, :]) == unions[:, None]).any(axis=1)
    else:
        ok = np.zeros(cand.shape, dtype=bool)
    if strict and p1_masks.size:
        bad = ((unions[:, None] & p1_masks[None, :]) == unions[:, None]).any(axis=1)
        ok &= ~bad
    ok &= cand != m
    return int(ok.sum())


def count_cofaces(m, cof, strict, next_masks):
    """Number of cofaces of ``m`` among ``cof`` (strict: cofaces with no
    coface of their own in ``next_masks``, i.e. facets)."""
    is_cof = ((cof & m) == m) & (cof != m)
    if strict and next_masks.size:
        up = ((cof[:, None] & next_masks[None, :]) == cof[:, None]).any(axis=1)
        is_cof &= ~up
    return int(is_cof.sum())


def adjacency_row(m, all_masks, sorted_flat, sorted_off, dim_k, p):
    """Flags, over all simplices, of p-adjacency to the mask ``m``.

    A candidate is p-adjacent iff the intersection has exactly p+1 vertices
    (shared p-face, none higher) and the union is not itself a simplex of the
    complex (no shared coface of the minimal possible dimension, hence none
    at all).  The mask ``m`` itself is never flagged.
    """
    inter = _popcount(m & all_masks)
    unions = m | all_masks
    memb = member_masks(unions, sorted_flat, sorted_off, dim_k)
    return ((inter == p + 1) & ~memb).astype(np.uint8)


def maximal_filter(flags, all_masks):
    """Clear flags of simplices that are proper faces of another flagged one."""
    idx = np.nonzero(flags)[0]
    if idx.size == 0:
        return flags.copy()
    sub = all_masks[idx]
    proper = ((sub[:, None] & sub[None, :]) == sub[:, None]) & (
        sub[:, None] != sub[None, :]
    )
    out = flags.copy()
    out[idx[proper.any(axis=1)]] = 0
    return out


def adjacency_matrix01(masks_q, sorted_flat, sorted_off, dim_k, p):
    """0/1 matrix of p-adjacency between the q-simplices of one dimension."""
    inter = _popcount(masks_q[:, None] & masks_q[None, :])
    unions = masks_q[:, None] | masks_q[None, :]
    memb = member_masks(unions, sorted_flat, sorted_off, dim_k)
    return ((inter == p + 1) & ~memb).astype(np.uint8)


def vertex_adjacency01(n0, edge_masks):
    """0/1 vertex adjacency from the edge masks (the q = 0 convention:
    vertices are adjacent iff they span an edge of the complex)."""
    a = np.zeros((n0, n0), dtype=np.uint8)
    for e in edge_masks:
        e = int(e)
        i = (e & -e).bit_length() - 1
        j = e.bit_length() - 1
        a[i, j] = 1
        a[j, i] = 1
    return a


def nearness_edges(all_masks, node_dim, sorted_flat, sorted_off, dim_k):
    """Edge list (i, j, level) of the nearness graph over all simplices.

    For non-vertex pairs an edge at level p = |intersection| - 1 exists iff
    one simplex is maximally p-adjacent to the other (in either direction).
    Distinct vertices get a level-0 edge iff they span an edge of the
    complex.  Indices are global chain-basis positions with i < j.
    """
    n = all_masks.shape[0]
    inter = _popcount(all_masks[:, None] & all_masks[None, :])
    unions = all_masks[:, None] | all_masks[None, :]
    memb = member_masks(unions, sorted_flat, sorted_off, dim_k)
    lev = inter - 1

    both_v = (node_dim[:, None] == 0) & (node_dim[None, :] == 0)
    adj = (inter >= 1) & ~memb & ~both_v

    sub = ((all_masks[:, None] & all_masks[None, :]) == all_masks[:, None]) & (
        all_masks[:, None] != all_masks[None, :]
    )
    keep = adj.copy()
    for i in range(n):
        nbr = np.nonzero(adj[i])[0]
        if nbr.size == 0:
            continue
        li = lev[i, nbr]
        s = sub[np.ix_(nbr, nbr)]
        dominated = (s & (li[:, None] == li[None, :])).any(axis=1)
        keep[i, nbr[dominated]] = False

    vv = both_v & memb
    np.fill_diagonal(vv, False)

    edge = keep | keep.T | vv
    iu, ju = np.triu_indices(n, 1)
    sel = edge[iu, ju]
    ei = iu[sel].astype(np.int64)
    ej = ju[sel].astype(np.int64)
    levels = np.maximum(lev[iu, ju][sel], 0).astype(np.int64)
    return ei, ej, levels


def bfs_counts(indptr, indices, n, src):
    """BFS distances and geodesic counts from one source over a CSR graph.

    Returns (dist, sigma); dist is -1 where unreachable, sigma counts the
    shortest walks from the source.
    """
    dist = np.full(n, -1, dtype=np.int64)
    sigma = np.zeros(n, dtype=np.int64)
    dist[src] = 0
    sigma[src] = 1
    frontier = [src]
    d = 0
    while frontier:
        nxt = []
        for u in frontier:
            for v in indices[indptr[u]:indptr[u + 1]]:
                if dist[v] == -1:
                    dist[v] = d + 1
                    nxt.append(v)
                if dist[v] == d + 1:
                    sigma[v] += sigma[u]
        frontier = nxt
        d += 1
    return dist, sigma


def power_iteration(a, tol, maxit):
    """Power iteration on a + identity shift, from the uniform vector.

    The shift keeps the iteration from oscillating on bipartite graphs and
    never changes the principal eigenvector of a nonnegative symmetric
    matrix.  Returns (eigenvalue of ``a``, L2-normalized vector, iterations,
    converged flag); convergence is max-norm of successive normalized
    iterates <= tol.
    """
    n = a.shape[0]
    x = np.full(n, 1.0 / n)
    x = x / np.linalg.norm(x)
    it = 0
    converged = False
    while it < maxit:
        y = a @ x + x
        nrm = np.linalg.norm(y)
        if nrm == 0.0:
            break
        y = y / nrm
        delta = float(np.max(np.abs(y - x)))
        x = y
        it += 1
        if delta <= tol:
            converged = True
            break
    lam = float(x @ (a @ x))
    return lam, x, it, converged
