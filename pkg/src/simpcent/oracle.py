"""Brute-force reference implementations and a differential test harness.

Everything here recomputes results straight from the definitions with plain
Python sets and loops: no bitmasks, no incidence matrices, no shared helper
code with the fast modules (only the complex container itself is reused).
It exists to cross-check the package, so clarity beats speed throughout;
:func:`diff_all` refuses complexes with more than 14 vertices.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx
import numpy as np

from . import adjacency as fast_adj
from . import centrality as fast_cent
from . import spectral as fast_spec
from . import walks as fast_walks
from .adjacency import DegreeQuery
from .core import SimplicialComplex
from .errors import GuardError

INF = math.inf
ORACLE_VERTEX_GUARD = 14


# ---------------------------------------------------------------------------
# naive adjacency and degrees
# ---------------------------------------------------------------------------


def naive_common_faces(c: SimplicialComplex, a, b, p: int):
    """All p-simplices of the complex that are faces of both arguments."""
    fa, fb = frozenset(a), frozenset(b)
    out = []
    if 0 <= p <= c.dim:
        for t in c.by_dim[p]:
            ft = frozenset(t)
            if ft <= fa and ft <= fb:
                out.append(t)
    return out


def naive_common_cofaces(c: SimplicialComplex, a, b, p: int):
    """All p-simplices of the complex containing both arguments."""
    fa, fb = frozenset(a), frozenset(b)
    out = []
    if 0 <= p <= c.dim:
        for t in c.by_dim[p]:
            ft = frozenset(t)
            if fa <= ft and fb <= ft:
                out.append(t)
    return out


def naive_lower_adjacent(c, a, b, p, strict=False) -> bool:
    if tuple(a) == tuple(b):
        return False
    if not naive_common_faces(c, a, b, p):
        return False
    if strict and naive_common_faces(c, a, b, p + 1):
        return False
    return True


def naive_upper_adjacent(c, a, b, p, strict=False) -> bool:
    if tuple(a) == tuple(b):
        return False
    if not naive_common_cofaces(c, a, b, p):
        return False
    if strict and naive_common_cofaces(c, a, b, p + 1):
        return False
    return True


def naive_p_adjacent(c, a, b, p) -> bool:
    a, b = tuple(a), tuple(b)
    if a == b:
        return False
    if len(a) == 1 and len(b) == 1:
        return p == 0 and naive_upper_adjacent(c, a, b, 1)
    if not naive_lower_adjacent(c, a, b, p, strict=True):
        return False
    pp = (len(a) - 1) + (len(b) - 1) - p
    return not naive_upper_adjacent(c, a, b, pp)


def naive_maximal_p_adjacent(c, s_prime, s, p) -> bool:
    if not naive_p_adjacent(c, s_prime, s, p):
        return False
    fp = frozenset(s_prime)
    for other in c.iter_simplices():
        if frozenset(other) > fp and naive_p_adjacent(c, other, s, p):
            return False
    return True


def naive_facets(c: SimplicialComplex):
    out = []
    for s in c.iter_simplices():
        fs = frozenset(s)
        if not any(frozenset(o) > fs for o in c.iter_simplices()):
            out.append(tuple(s))
    return out


def naive_degree(c: SimplicialComplex, sigma, query: DegreeQuery) -> int:
    """Degree by direct enumeration; assumes the query is legal for sigma."""
    s = tuple(sigma)
    q = len(s) - 1
    fam = query.family
    everything = [tuple(o) for o in c.iter_simplices()]
    if fam in ("lower", "strict_lower"):
        if query.h is None:
            cands = everything
        else:
            d = q - query.h
            cands = list(c.by_dim[d]) if 0 <= d <= c.dim else []
        return sum(
            1
            for o in cands
            if naive_lower_adjacent(c, s, o, query.p, strict=fam == "strict_lower")
        )
    if fam in ("upper", "strict_upper"):
        return sum(
            1
            for o in everything
            if naive_upper_adjacent(c, s, o, query.p, strict=fam == "strict_upper")
        )
    if fam in ("upper_incident", "strict_upper_incident"):
        d = q + query.h
        if not 0 <= d <= c.dim:
            return 0
        fs = frozenset(s)
        count = 0
        for o in c.by_dim[d]:
            if not fs < frozenset(o):
                continue
            if fam == "strict_upper_incident":
                fo = frozenset(o)
                if d + 1 <= c.dim and any(
                    fo < frozenset(u) for u in c.by_dim[d + 1]
                ):
                    continue
            count += 1
        return count
    if fam == "adjacency":
        return sum(1 for o in everything if naive_p_adjacent(c, o, s, query.p))
    if fam == "maximal_adjacency":
        return sum(
            1 for o in everything if naive_maximal_p_adjacent(c, o, s, query.p)
        )
    if fam in ("two_param", "strict_two_param"):
        up = "strict_upper" if fam == "strict_two_param" else "upper"
        return naive_degree(c, s, DegreeQuery(up, p=query.p)) + naive_degree(
            c, s, DegreeQuery("maximal_adjacency", p=query.p2)
        )
    if fam == "maximal":
        total = 0
        for h in range(1, c.dim - q + 1):
            total += naive_degree(c, s, DegreeQuery("strict_upper_incident", h=h))
        for p in range(q):
            total += naive_degree(c, s, DegreeQuery("maximal_adjacency", p=p))
        return total
    raise ValueError(f"unknown family {fam!r}")


# ---------------------------------------------------------------------------
# naive orientation
# ---------------------------------------------------------------------------


def naive_sign(tau, sigma) -> int:
    """Incidence sign as the parity of moving the removed vertices to the
    front of the ascending tuple."""
    t = tuple(tau)
    ss = set(sigma)
    if not ss <= set(t):
        return 0
    seq = [v for v in t if v not in ss] + [v for v in t if v in ss]
    perm = [t.index(v) for v in seq]
    inv = sum(
        1
        for x in range(len(perm))
        for y in range(x + 1, len(perm))
        if perm[x] > perm[y]
    )
    return -1 if inv % 2 else 1


def naive_oriented_degree(c: SimplicialComplex, s1, s2, p: int, side: str) -> int:
    """Half-sum of sign products over both orientations of every shared
    p-coface (side upper) or shared p-face (side lower)."""
    total = 0
    if 0 <= p <= c.dim:
        for t in c.by_dim[p]:
            for orient in (1, -1):
                if side == "upper":
                    total += (orient * naive_sign(t, s1)) * (orient * naive_sign(t, s2))
                else:
                    total += (orient * naive_sign(s1, t)) * (orient * naive_sign(s2, t))
    return total // 2


# ---------------------------------------------------------------------------
# naive walks
# ---------------------------------------------------------------------------


def naive_adjacency_map(c: SimplicialComplex) -> dict:
    """adj[s][o] = the (unique) level at which o and s are p-adjacent."""
    simps = [tuple(s) for s in c.iter_simplices()]
    adj = {s: {} for s in simps}
    for a, b in itertools.combinations(simps, 2):
        top = min(len(a), len(b)) - 1
        for p in range(top + 1):
            if naive_p_adjacent(c, a, b, p):
                adj[a][b] = p
                adj[b][a] = p
    return adj


def _adj_maximal(adj, center, other, p) -> bool:
    """other is maximal p-adjacent to center, per the precomputed map."""
    if adj[center].get(other) != p:
        return False
    fo = frozenset(other)
    return not any(
        fo < frozenset(k) and lv == p for k, lv in adj[center].items()
    )


def naive_nearness_levels(c: SimplicialComplex, adj=None) -> dict:
    """Map frozenset({sigma, sigma'}) -> edge level of the nearness graph."""
    if adj is None:
        adj = naive_adjacency_map(c)
    edges = {}
    for a, partners in adj.items():
        for b, p in partners.items():
            if _adj_maximal(adj, a, b, p):
                edges[frozenset((a, b))] = p
    return edges


def _neighbor_map(c, p, levels):
    nbr = defaultdict(list)
    for pair, lv in levels.items():
        if lv >= p:
            a, b = tuple(pair)
            nbr[a].append((b, lv))
            nbr[b].append((a, lv))
    return nbr


def naive_distance(c, a, b, p, semantics="at_least", levels=None):
    """Shortest p-walk length by frontier expansion of walk endpoints."""
    a, b = tuple(a), tuple(b)
    if a == b:
        return 0
    if levels is None:
        levels = naive_nearness_levels(c)
    nbr = _neighbor_map(c, p, levels)
    limit = c.n_simplices
    if semantics == "at_least":
        frontier, seen = {a}, {a}
        for step in range(1, limit + 1):
            frontier = {
                v for u in frontier for v, _ in nbr.get(u, ()) if v not in seen
            }
            if b in frontier:
                return step
            seen |= frontier
            if not frontier:
                break
        return INF
    start = (a, False)
    frontier, seen = {start}, {start}
    for step in range(1, 2 * limit + 2):
        nxt = set()
        for u, f in frontier:
            for v, lv in nbr.get(u, ()):
                st = (v, f or lv == p)
                if st not in seen:
                    nxt.add(st)
        if (b, True) in nxt:
            return step
        seen |= nxt
        frontier = nxt
        if not frontier:
            break
    return INF


def naive_walk_counts(c, src, p, semantics="at_least", levels=None):
    """dict target -> (distance, number of shortest walks) by layered sums."""
    src = tuple(src)
    if levels is None:
        levels = naive_nearness_levels(c)
    nbr = _neighbor_map(c, p, levels)
    start = src if semantics == "at_least" else (src, False)
    dist = {start: 0}
    layer = {start: 1}
    d = 0
    while layer:
        nxt = defaultdict(int)
        for st, k in layer.items():
            u = st if semantics == "at_least" else st[0]
            f = None if semantics == "at_least" else st[1]
            for v, lv in nbr.get(u, ()):
                st2 = v if semantics == "at_least" else (v, f or lv == p)
                if st2 in dist and dist[st2] <= d:
                    continue
                nxt[st2] += k
        d += 1
        for st2 in nxt:
            dist[st2] = d
        layer = dict(nxt)
    out = {}
    for t in c.iter_simplices():
        t = tuple(t)
        if len(t) - 1 < p:
            continue
        if t == src:
            out[t] = (0, 1)
            continue
        key = t if semantics == "at_least" else (t, True)
        if key in dist:
            out[t] = (dist[key], _count_of(key, src, p, semantics, nbr, dist))
        else:
            out[t] = (INF, 0)
    return out


def _count_of(key, src, p, semantics, nbr, dist):
    """Number of shortest walks to one state, by memoized predecessor sums."""
    memo = {}

    def rec(st):
        if st in memo:
            return memo[st]
        if dist[st] == 0:
            return 1
        u = st if semantics == "at_least" else st[0]
        f = None if semantics == "at_least" else st[1]
        total = 0
        for v, lv in nbr.get(u, ()):
            # predecessors: states one layer closer whose step reaches st
            if semantics == "at_least":
                prev = v
                if dist.get(prev, -1) == dist[st] - 1:
                    total += rec(prev)
            else:
                used = lv == p
                for pf in (False, True):
                    if (pf or used) == f:
                        prev = (v, pf)
                        if dist.get(prev, -1) == dist[st] - 1:
                            total += rec(prev)
        memo[st] = total
        return total

    return rec(key)


def naive_components(c, p, semantics="at_least", levels=None):
    """Classes of finite p-distance as a set of frozensets of simplices."""
    if levels is None:
        levels = naive_nearness_levels(c)
    nodes = [tuple(s) for s in c.iter_simplices() if len(s) - 1 >= p]
    classes = []
    assigned = set()
    for a in nodes:
        if a in assigned:
            continue
        cls = {a}
        for b in nodes:
            if b != a and naive_distance(c, a, b, p, semantics, levels) != INF:
                cls.add(b)
        assigned |= cls
        classes.append(frozenset(cls))
    return set(classes)


def naive_shortest_walks(c, src, dst, p, levels=None):
    """All shortest p-walks (at-least semantics) as node tuples."""
    src, dst = tuple(src), tuple(dst)
    if levels is None:
        levels = naive_nearness_levels(c)
    nbr = _neighbor_map(c, p, levels)
    dist = {src: 0}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for v, _ in nbr.get(u, ()):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    if dst not in dist:
        return []
    walks = []

    def rec(v, tail):
        if v == src:
            walks.append((src,) + tail)
            return
        for u, _ in nbr.get(v, ()):
            if dist.get(u, -1) == dist[v] - 1:
                rec(u, (v,) + tail)

    rec(dst, ())
    return walks


def naive_betweenness(c, p, levels=None):
    """Betweenness of every node of dimension >= p by enumerating all
    shortest walks within its class (at-least semantics)."""
    if levels is None:
        levels = naive_nearness_levels(c)
    values = {}
    for cls in sorted(naive_components(c, p, "at_least", levels), key=sorted):
        members = sorted(cls)
        n = len(members)
        for s in members:
            values[s] = Fraction(0)
        if n < 3:
            continue
        norm = Fraction(2, (n - 1) * (n - 2))
        for i, j in itertools.combinations(members, 2):
            walks = naive_shortest_walks(c, i, j, p, levels)
            if not walks:
                continue
            for k in members:
                if k in (i, j):
                    continue
                through = sum(1 for w in walks if k in w[1:-1])
                if through:
                    values[k] += norm * Fraction(through, len(walks))
    return values


def naive_clustering(c, sigma, levels=None, adj=None) -> Fraction:
    """Clustering via the auxiliary graph: center joined to its maximal
    neighbours, neighbour pairs joined iff linked; the coefficient is the
    triangle count through the center over C(degree, 2)."""
    s = tuple(sigma)
    q = len(s) - 1
    fs = frozenset(s)
    members = [f for f in naive_facets(c) if fs < frozenset(f)]
    if q > 0:
        if adj is None:
            adj = naive_adjacency_map(c)
        for o, p in adj[s].items():
            # adjacency levels of s's partners always sit below q
            if _adj_maximal(adj, s, o, p):
                members.append(o)
    if len(members) < 2:
        return Fraction(0)
    if levels is None:
        levels = naive_nearness_levels(c, adj)
    g = nx.Graph()
    g.add_node(s)
    for m in members:
        g.add_edge(s, m)
    for a, b in itertools.combinations(members, 2):
        if naive_linked(c, a, b, s, levels):
            g.add_edge(a, b)
    tri = nx.triangles(g, s)
    deg = g.degree(s)
    return Fraction(tri, math.comb(deg, 2))


def naive_linked(c, a, b, center, levels=None) -> bool:
    a, b, center = tuple(a), tuple(b), tuple(center)
    if a == b:
        return False
    if (frozenset(a) & frozenset(b)) - frozenset(center):
        return True
    if levels is None:
        levels = naive_nearness_levels(c)
    if frozenset((a, b)) in levels:
        return False
    nbr = _neighbor_map(c, 0, levels)
    na = {v for v, _ in nbr.get(a, ())}
    for w, _ in nbr.get(b, ()):
        if w in na and w != center and not frozenset(w) <= frozenset(center):
            return True
    return False


# ---------------------------------------------------------------------------
# differential harness
# ---------------------------------------------------------------------------


@dataclass
class OracleDiff:
    """Outcome of a full cross-check.

    ``mismatches`` maps a quantity name to (where, fast value, naive value)
    triples; an empty mapping means agreement.  ``diagnostics`` records the
    documented closed-form discrepancies, which are not failures.
    """

    mismatches: dict = field(default_factory=dict)
    diagnostics: dict = field(default_factory=dict)
    checked: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def _note(self, table, key, entry):
        table.setdefault(key, []).append(entry)


def _legal_queries(q: int, dim_k: int):
    out = []
    for strict in (False, True):
        fam = "strict_lower" if strict else "lower"
        for p in range(q + 1):
            out.append(DegreeQuery(fam, p=p))
            for h in range(q - dim_k, q - p + 1):
                out.append(DegreeQuery(fam, p=p, h=h))
        ufam = "strict_upper" if strict else "upper"
        for p in range(q, dim_k + 1):
            out.append(DegreeQuery(ufam, p=p))
        ifam = "strict_upper_incident" if strict else "upper_incident"
        for h in range(1, dim_k - q + 1):
            out.append(DegreeQuery(ifam, h=h))
    for p in range(q) if q else [0]:
        out.append(DegreeQuery("adjacency", p=p))
        out.append(DegreeQuery("maximal_adjacency", p=p))
    for p1 in range(q + 1, dim_k + 1):
        for p2 in range(q):
            out.append(DegreeQuery("two_param", p=p1, p2=p2))
            out.append(DegreeQuery("strict_two_param", p=p1, p2=p2))
    out.append(DegreeQuery("maximal"))
    return out


def _sample(items, max_n, seed):
    items = list(items)
    if max_n is None or len(items) <= max_n:
        return items
    rng = random.Random(seed)
    idx = sorted(rng.sample(range(len(items)), max_n))
    return [items[i] for i in idx]


GROUPS = (
    "degrees",
    "theorem_degrees",
    "closed_form",
    "pairs",
    "laplacian",
    "walks",
    "betweenness",
    "closeness",
    "centrality",
    "eigen",
)


def diff_all(
    c: SimplicialComplex,
    max_simplices: int | None = None,
    seed: int = 0,
    include=None,
) -> OracleDiff:
    """Cross-check every quantity of the package against this module.

    ``max_simplices`` caps how many simplices get the per-simplex sweeps
    (degree families, Laplacian rows, centralities); ``include`` restricts
    the run to a subset of GROUPS.  Complexes with more than 14 vertices
    are refused.
    """
    if len(c.vertices) > ORACLE_VERTEX_GUARD:
        raise GuardError(
            f"oracle refuses {len(c.vertices)} vertices (guard {ORACLE_VERTEX_GUARD})"
        )
    if include is None:
        include = set(GROUPS)
    else:
        include = set(include)
        unknown = include - set(GROUPS)
        if unknown:
            raise ValueError(f"unknown oracle groups {sorted(unknown)}")
    diff = OracleDiff()
    checked = defaultdict(int)
    sample = _sample(list(c.iter_simplices()), max_simplices, seed)
    sample_set = set(sample)
    adj_map = naive_adjacency_map(c)
    levels = naive_nearness_levels(c, adj_map)

    # degree families
    for s in sample if "degrees" in include else []:
        q = len(s) - 1
        for query in _legal_queries(q, c.dim):
            a = fast_adj.degree(c, s, query)
            o = naive_degree(c, s, query)
            checked["degree"] += 1
            if a != o:
                diff._note(diff.mismatches, "degree", (c.label(s), query, a, o))

    # degrees from boundary matrices
    for q in range(c.dim + 1) if "theorem_degrees" in include else []:
        fams = [("L", range(q + 1)), ("U", range(q, c.dim + 1))]
        if q >= 1:
            fams += [("A", range(q)), ("A*", range(q))]
        for fam, ps in fams:
            for p in ps:
                rep = fast_spec.theorem_degrees(c, q, p, fam)
                for s, v in rep.values.items():
                    if max_simplices is not None and s not in sample_set:
                        continue
                    o = naive_degree(c, s, rep.query)
                    checked["theorem_degrees"] += 1
                    if v != o:
                        diff._note(
                            diff.mismatches,
                            "theorem_degrees",
                            (c.label(s), fam, p, v, o),
                        )

    # strict-upper closed form (documented discrepancy -> diagnostics)
    for s in sample if "closed_form" in include else []:
        q = len(s) - 1
        for h in range(1, c.dim - q + 1):
            closed = fast_adj.strict_upper_closed_form(c, s, h)
            enum = naive_degree(c, s, DegreeQuery("strict_upper_incident", h=h))
            checked["strict_upper_closed_form"] += 1
            if closed != enum:
                diff._note(
                    diff.diagnostics,
                    "strict_upper_closed_form",
                    (c.label(s), h, closed, enum),
                )

    # pair predicates
    pairs = _sample(
        list(itertools.combinations(list(c.iter_simplices()), 2)),
        None if max_simplices is None else 4 * max_simplices,
        seed + 1,
    )
    for a, b in pairs if "pairs" in include else []:
        top = min(len(a), len(b)) - 1
        for p in range(top + 2):
            for strict in (False, True):
                fa = fast_adj.lower_adjacent(c, a, b, p, strict)
                oa = naive_lower_adjacent(c, a, b, p, strict)
                checked["pair_predicates"] += 1
                if fa != oa:
                    diff._note(
                        diff.mismatches,
                        "pair_predicates",
                        ("lower", c.label(a), c.label(b), p, strict, fa, oa),
                    )
        for p in range(c.dim + 1):
            for strict in (False, True):
                fa = fast_adj.upper_adjacent(c, a, b, p, strict)
                oa = naive_upper_adjacent(c, a, b, p, strict)
                checked["pair_predicates"] += 1
                if fa != oa:
                    diff._note(
                        diff.mismatches,
                        "pair_predicates",
                        ("upper", c.label(a), c.label(b), p, strict, fa, oa),
                    )
        for p in range(top + 1):
            fa = fast_adj.p_adjacent(c, a, b, p)
            oa = naive_p_adjacent(c, a, b, p)
            checked["pair_predicates"] += 1
            if fa != oa:
                diff._note(
                    diff.mismatches,
                    "pair_predicates",
                    ("adjacent", c.label(a), c.label(b), p, fa, oa),
                )
            fm = fast_adj.maximal_p_adjacent(c, a, b, p)
            om = naive_maximal_p_adjacent(c, a, b, p)
            checked["pair_predicates"] += 1
            if fm != om:
                diff._note(
                    diff.mismatches,
                    "pair_predicates",
                    ("maximal", c.label(a), c.label(b), p, fm, om),
                )

    # oriented degrees and laplacian entries
    for q in range(c.dim + 1) if "laplacian" in include else []:
        simps = c.by_dim[q]
        for h in range(1, c.dim + 1):
            for hp in range(1, c.dim + 1):
                bundle = fast_spec.laplacian(c, q, h, hp)
                mat = bundle.total.toarray()
                for i, si in enumerate(simps):
                    if max_simplices is not None and si not in sample_set:
                        continue
                    for j, sj in enumerate(simps):
                        if i == j:
                            exp = 0
                            if q + h <= c.dim:
                                exp += naive_degree(
                                    c, si, DegreeQuery("upper_incident", h=h)
                                )
                            if hp <= q:
                                exp += math.comb(q + 1, q - hp + 1)
                        else:
                            exp = naive_oriented_degree(c, si, sj, q + h, "upper")
                            if hp <= q:
                                exp += naive_oriented_degree(
                                    c, si, sj, q - hp, "lower"
                                )
                        checked["laplacian_entry"] += 1
                        if mat[i, j] != exp:
                            diff._note(
                                diff.mismatches,
                                "laplacian_entry",
                                (q, h, hp, c.label(si), c.label(sj), int(mat[i, j]), exp),
                            )

    # nearness graph edges
    g = fast_walks.build_nearness_graph(c)
    if "walks" in include:
        fast_edges = {frozenset((a, b)): lv for a, b, lv in g.edge_list()}
        checked["nearness_edges"] += 1
        if fast_edges != levels:
            only_fast = {k: v for k, v in fast_edges.items() if levels.get(k) != v}
            only_naive = {k: v for k, v in levels.items() if fast_edges.get(k) != v}
            diff._note(
                diff.mismatches,
                "nearness_edges",
                (sorted(map(sorted, only_fast)), sorted(map(sorted, only_naive))),
            )

    for p in range(c.dim + 1) if "walks" in include else []:
        for semantics in ("at_least", "exact"):
            nodes = [s for s in c.iter_simplices() if len(s) - 1 >= p]
            for src in nodes:
                counts = naive_walk_counts(c, src, p, semantics, levels)
                row = fast_walks.distances_from(g, src, p, semantics)
                for t in nodes:
                    od, oc = counts[t]
                    checked["distance"] += 1
                    if row.dist[t] != od or row.counts[t] != oc:
                        diff._note(
                            diff.mismatches,
                            "distance",
                            (
                                p,
                                semantics,
                                c.label(src),
                                c.label(t),
                                (row.dist[t], row.counts[t]),
                                (od, oc),
                            ),
                        )
            fast_cls = {
                frozenset(cl)
                for cl in fast_walks.components(g, p, semantics).classes
            }
            naive_cls = naive_components(c, p, semantics, levels)
            checked["components"] += 1
            if fast_cls != naive_cls:
                diff._note(
                    diff.mismatches,
                    "components",
                    (p, semantics, sorted(map(sorted, fast_cls)), sorted(map(sorted, naive_cls))),
                )

    # betweenness (at-least) by full walk enumeration
    for p in range(c.dim + 1) if "betweenness" in include else []:
        naive_btw = naive_betweenness(c, p, levels)
        for s in sample:
            if len(s) - 1 < p:
                continue
            fv = fast_cent.betweenness_centrality(g, s, p)
            checked["betweenness"] += 1
            if fv != naive_btw[s]:
                diff._note(
                    diff.mismatches,
                    "betweenness",
                    (p, c.label(s), fv, naive_btw[s]),
                )

    # closeness from naive distances
    for p in range(c.dim + 1) if "closeness" in include else []:
        nodes = [s for s in c.iter_simplices() if len(s) - 1 >= p]
        for s in sample:
            if len(s) - 1 < p:
                continue
            harm = Fraction(0)
            within = 0
            for t in nodes:
                if t == s:
                    continue
                d = naive_distance(c, s, t, p, "at_least", levels)
                if d != INF:
                    harm += Fraction(1, d)
                    within += d
            fh = fast_cent.closeness_centrality(g, s, p, "harmonic")
            fr = fast_cent.closeness_centrality(g, s, p, "reciprocal_sum")
            oh = harm
            orr = Fraction(0) if within == 0 else Fraction(1, within)
            checked["closeness"] += 1
            if fh != oh or fr != orr:
                diff._note(
                    diff.mismatches,
                    "closeness",
                    (p, c.label(s), (fh, fr), (oh, orr)),
                )

    # degree centralities and clustering
    for s in sample if "centrality" in include else []:
        q = len(s) - 1
        for h in range(1, c.dim - q + 1):
            den = math.comb(c.f_vector[0] - (q + 1), q + h)
            if den == 0:
                continue
            fv = fast_cent.upper_degree_centrality(c, s, h)
            ov = Fraction(naive_degree(c, s, DegreeQuery("upper_incident", h=h)), den)
            checked["degree_centrality"] += 1
            if fv != ov:
                diff._note(
                    diff.mismatches, "degree_centrality", ("upper", c.label(s), h, fv, ov)
                )
        fv = fast_cent.clustering_coefficient(c, s, graph=g)
        ov = naive_clustering(c, s, levels, adj_map)
        checked["clustering"] += 1
        if fv != ov:
            diff._note(diff.mismatches, "clustering", (c.label(s), fv, ov))

    # eigenvector spectra
    for q in range(c.dim + 1) if "eigen" in include else []:
        ps = [0] if q == 0 else list(range(q))
        for p in ps:
            rep = fast_cent.eigenvector_centrality(c, q, p)
            mat = np.zeros((c.f_vector[q], c.f_vector[q]))
            for i, a in enumerate(c.by_dim[q]):
                for j, b in enumerate(c.by_dim[q]):
                    if i < j and naive_p_adjacent(c, a, b, p):
                        mat[i, j] = mat[j, i] = 1.0
            lam_o = float(np.max(np.linalg.eigvalsh(mat))) if mat.size else 0.0
            lam_f = rep.metadata["eigenvalue"]
            vec = np.array([rep.values[s] for s in c.by_dim[q]])
            resid = float(np.max(np.abs(mat @ vec - lam_f * vec)))
            checked["eigenvector"] += 1
            if abs(lam_f - lam_o) > 1e-8 or resid > 1e-8:
                diff._note(
                    diff.mismatches, "eigenvector", (q, p, lam_f, lam_o, resid)
                )

    diff.checked = dict(checked)
    return diff
