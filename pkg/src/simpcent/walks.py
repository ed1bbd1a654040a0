"""Walks between simplices through maximal shared-face nearness.

The nearness graph has one node per simplex of the complex.  Two simplices
sigma, sigma' (not both vertices) are joined at level p = |intersection| - 1
iff one is maximally p-adjacent to the other; two distinct vertices are
joined at level 0 iff they span an edge.  A vertex is never joined to a
higher simplex (it is always upper adjacent to its cofaces).

A p-walk visits nodes of dimension >= p.  Under the default ``at_least``
semantics its steps may use any edge of level >= p; under ``exact``
semantics at least one step of level exactly p must occur.  The shortest
walk length d_p is a generalized metric (infinite across components) and
induces the equivalence classes counted by the Q*-vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .core import SimplicialComplex, Simplex
from .errors import ArgumentError, UndefinedValueError

INF = math.inf
SEMANTICS = ("at_least", "exact")


@dataclass
class NearnessGraph:
    """Edge list of the nearness relation, nodes in global chain-basis order."""

    complex: SimplicialComplex
    edges_i: np.ndarray
    edges_j: np.ndarray
    levels: np.ndarray
    _csr: dict = field(default_factory=dict, repr=False)

    @property
    def n_nodes(self) -> int:
        return self.complex.n_simplices

    def edge_list(self):
        """Edges as (simplex, simplex, level) triples."""
        c = self.complex
        return [
            (c.global_simplex(int(i)), c.global_simplex(int(j)), int(l))
            for i, j, l in zip(self.edges_i, self.edges_j, self.levels)
        ]

    def neighbors(self, sigma, min_level: int = 0):
        """Adjacent simplices with edge level >= min_level."""
        c = self.complex
        g = c.basis.global_index(c.check_member(sigma))
        out = []
        for i, j, l in zip(self.edges_i, self.edges_j, self.levels):
            if l < min_level:
                continue
            if i == g:
                out.append((c.global_simplex(int(j)), int(l)))
            elif j == g:
                out.append((c.global_simplex(int(i)), int(l)))
        return out


def build_nearness_graph(c: SimplicialComplex) -> NearnessGraph:
    ker = kernels.get()
    ei, ej, lv = ker.nearness_edges(
        c.all_masks, c.node_dim, c.sorted_masks_flat, c.sorted_offsets, c.dim
    )
    return NearnessGraph(
        complex=c,
        edges_i=np.asarray(ei, dtype=np.int64),
        edges_j=np.asarray(ej, dtype=np.int64),
        levels=np.asarray(lv, dtype=np.int64),
    )


def _check_semantics(semantics: str) -> None:
    if semantics not in SEMANTICS:
        raise ArgumentError(
            f"semantics must be one of {SEMANTICS}, got {semantics!r}"
        )


def _csr(g: NearnessGraph, p: int, semantics: str):
    """Directed CSR adjacency of the admissible walk graph.

    ``at_least`` keeps edges of level >= p on the plain node set.  ``exact``
    doubles the nodes with a used-an-exact-level-edge state: state 0 moves
    along level > p edges, any level == p edge forces state 1, and state 1
    persists.  Shortest state paths then count walks whose minimum level is
    exactly p.
    """
    key = (p, semantics)
    if key in g._csr:
        return g._csr[key]
    n = g.n_nodes
    ei, ej, lv = g.edges_i, g.edges_j, g.levels
    if semantics == "at_least":
        sel = lv >= p
        a, b = ei[sel], ej[sel]
        src = np.concatenate([a, b])
        dst = np.concatenate([b, a])
        n_states = n
    else:
        gt = lv > p
        eq = lv == p
        ag, bg = ei[gt], ej[gt]
        ae, be = ei[eq], ej[eq]
        src = np.concatenate([ag, bg, ag + n, bg + n, ae, be, ae + n, be + n])
        dst = np.concatenate([bg, ag, bg + n, ag + n, be + n, ae + n, be + n, ae + n])
        n_states = 2 * n
    if src.size:
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
    indptr = np.zeros(n_states + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n_states), out=indptr[1:])
    g._csr[key] = (indptr, dst.astype(np.int64), n_states)
    return g._csr[key]


def _node(g: NearnessGraph, sigma, p: int) -> int:
    c = g.complex
    s = c.check_member(sigma)
    if len(s) - 1 < p:
        raise ArgumentError(
            f"simplex {s} has dimension {len(s) - 1}, below walk level p={p}"
        )
    return c.basis.global_index(s)


def _active_nodes(g: NearnessGraph, p: int) -> np.ndarray:
    return np.nonzero(g.complex.node_dim >= p)[0]


def _bfs(g: NearnessGraph, src: int, p: int, semantics: str):
    """(dist, sigma) arrays over plain node indices, -1 for unreachable."""
    indptr, indices, n_states = _csr(g, p, semantics)
    ker = kernels.get()
    dist, sigma = ker.bfs_counts(indptr, indices, n_states, src)
    n = g.n_nodes
    if semantics == "exact":
        dist, sigma = dist[n:].copy(), sigma[n:].copy()
        dist[src], sigma[src] = 0, 1
    return dist, sigma


@dataclass(frozen=True)
class DistanceRow:
    """Distances and shortest-walk counts from one source simplex."""

    source: Simplex
    p: int
    semantics: str
    dist: dict
    counts: dict


def distances_from(
    g: NearnessGraph, source, p: int, semantics: str = "at_least"
) -> DistanceRow:
    _check_semantics(semantics)
    if p < 0:
        raise ArgumentError(f"p={p} must be nonnegative")
    src = _node(g, source, p)
    dist, sigma = _bfs(g, src, p, semantics)
    c = g.complex
    dd, cc = {}, {}
    for node in _active_nodes(g, p):
        s = c.global_simplex(int(node))
        d = int(dist[node])
        dd[s] = INF if d < 0 else d
        cc[s] = int(sigma[node])
    return DistanceRow(
        source=c.global_simplex(src), p=p, semantics=semantics, dist=dd, counts=cc
    )


def p_distance(g: NearnessGraph, s1, s2, p: int, semantics: str = "at_least"):
    """Shortest p-walk length between two simplices (math.inf if none)."""
    _check_semantics(semantics)
    if p < 0:
        raise ArgumentError(f"p={p} must be nonnegative")
    a = _node(g, s1, p)
    b = _node(g, s2, p)
    if a == b:
        return 0
    dist, _ = _bfs(g, a, p, semantics)
    d = int(dist[b])
    return INF if d < 0 else d


def geodesic_count(g: NearnessGraph, s1, s2, p: int, semantics: str = "at_least") -> int:
    """Number of shortest p-walks between two simplices (0 if unreachable)."""
    row = distances_from(g, s1, p, semantics)
    return row.counts[g.complex.check_member(s2)]


def shortest_walk(g: NearnessGraph, s1, s2, p: int, semantics: str = "at_least"):
    """One witness shortest walk as a simplex list, or None if unreachable."""
    _check_semantics(semantics)
    if p < 0:
        raise ArgumentError(f"p={p} must be nonnegative")
    c = g.complex
    a = _node(g, s1, p)
    b = _node(g, s2, p)
    if a == b:
        return [c.global_simplex(a)]
    indptr, indices, n_states = _csr(g, p, semantics)
    ker = kernels.get()
    dist, _ = ker.bfs_counts(indptr, indices, n_states, a)
    target = b if semantics == "at_least" else b + g.n_nodes
    if dist[target] < 0:
        return None
    # walk back along any predecessor chain in the state graph
    rev = [target]
    cur = target
    while dist[cur] > 0:
        for prev in range(n_states):
            if dist[prev] == dist[cur] - 1 and np.any(
                indices[indptr[prev]:indptr[prev + 1]] == cur
            ):
                rev.append(prev)
                cur = prev
                break
    nodes = [int(x) % g.n_nodes for x in reversed(rev)]
    return [c.global_simplex(x) for x in nodes]


@dataclass(frozen=True)
class ComponentPartition:
    """Equivalence classes of finite p-distance over the simplices of
    dimension >= p; ``q_star`` is the class count (the Q*-vector entry)."""

    p: int
    semantics: str
    classes: tuple

    @property
    def q_star(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple:
        return tuple(len(cl) for cl in self.classes)

    def class_of(self, sigma) -> tuple:
        s = tuple(sigma)
        for cl in self.classes:
            if s in cl:
                return cl
        raise ArgumentError(f"simplex {s} not in any class at p={self.p}")


def components(
    g: NearnessGraph, p: int, semantics: str = "at_least"
) -> ComponentPartition:
    _check_semantics(semantics)
    if p < 0:
        raise ArgumentError(f"p={p} must be nonnegative")
    c = g.complex
    active = _active_nodes(g, p)
    if active.size == 0:
        raise ArgumentError(f"no simplices of dimension >= {p}")
    indptr, indices, _ = _csr(g, p, "at_least")
    ker = kernels.get()
    seen = set()
    classes = []
    for node in active:
        node = int(node)
        if node in seen:
            continue
        dist, _ = ker.bfs_counts(indptr, indices, g.n_nodes, node)
        members = [int(x) for x in np.nonzero(dist >= 0)[0]]
        seen.update(members)
        classes.append(tuple(sorted(members)))
    if semantics == "exact":
        # a class stays together iff some internal edge has level exactly p;
        # otherwise no walk attains minimum level p and it falls apart
        sel = g.levels == p
        exact_nodes = set(
            np.concatenate([g.edges_i[sel], g.edges_j[sel]]).tolist()
        )
        split = []
        for cl in classes:
            if any(m in exact_nodes for m in cl):
                split.append(cl)
            else:
                split.extend((m,) for m in cl)
        classes = split
    classes.sort(key=lambda cl: cl[0])
    return ComponentPartition(
        p=p,
        semantics=semantics,
        classes=tuple(
            tuple(c.global_simplex(m) for m in cl) for cl in classes
        ),
    )


def q_star_vector(g: NearnessGraph, semantics: str = "at_least") -> tuple:
    """Class counts (Q*_dimK, ..., Q*_0), highest level first."""
    return tuple(
        components(g, p, semantics).q_star
        for p in range(g.complex.dim, -1, -1)
    )


def eccentricity(
    g: NearnessGraph,
    p: int,
    semantics: str = "at_least",
    within_component: bool = False,
):
    """Per-simplex eccentricity over the level-p node set and the diameter.

    Unreachable nodes make an eccentricity infinite unless
    ``within_component`` restricts the maxima to each node's own class.
    Returns (dict simplex -> eccentricity, diameter).
    """
    _check_semantics(semantics)
    c = g.complex
    ecc = {}
    for node in _active_nodes(g, p):
        s = c.global_simplex(int(node))
        row = distances_from(g, s, p, semantics)
        vals = [
            d for t, d in row.dist.items() if t != s and (
                not within_component or d != INF
            )
        ]
        ecc[s] = max(vals) if vals else 0
    diameter = max(ecc.values()) if ecc else 0
    return ecc, diameter


def average_walk_length(
    g: NearnessGraph, p: int, member, semantics: str = "at_least"
) -> Fraction:
    """Mean shortest-walk length 2*sum d / (n(n-1)) over the connectivity
    class containing ``member``; undefined on singleton classes."""
    part = components(g, p, semantics)
    cls = part.class_of(g.complex.check_member(member))
    n = len(cls)
    if n < 2:
        raise UndefinedValueError(
            f"average walk length undefined on a singleton class at p={p}"
        )
    total = 0
    for s in cls:
        row = distances_from(g, s, p, semantics)
        for t in cls:
            if t != s:
                d = row.dist[t]
                if d == INF:
                    # only possible under exact semantics when no walk
                    # attains the minimum level; treat as undefined
                    raise UndefinedValueError(
                        f"infinite distance inside a class at p={p}"
                    )
                total += d
    return Fraction(total, n * (n - 1))


def all_pairs(g: NearnessGraph, p: int, semantics: str = "at_least"):
    """(nodes, dist, counts) over the level-p node set; dist and counts are
    dense int64 matrices with -1 marking unreachable pairs."""
    _check_semantics(semantics)
    active = _active_nodes(g, p)
    k = active.size
    dist = np.full((k, k), -1, dtype=np.int64)
    cnt = np.zeros((k, k), dtype=np.int64)
    for row_idx, node in enumerate(active):
        d, s = _bfs(g, int(node), p, semantics)
        dist[row_idx] = d[active]
        cnt[row_idx] = s[active]
    simplices = [g.complex.global_simplex(int(n)) for n in active]
    return simplices, dist, cnt
