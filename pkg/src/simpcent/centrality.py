"""Centrality measures on simplices.

Degree centralities normalize a degree by the count of potentially adjacent
simplices and are kept as exact rationals; the normalization formulas are
applied verbatim, so on small complexes an upper degree centrality can
exceed 1 and is then flagged ``out_of_range`` rather than clamped.  Walk
based measures (closeness, betweenness) run on the nearness graph at a
level p; eigenvector centrality is the principal eigenvector of a
p-adjacency matrix, normalized to sum 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import walks as walks_mod
from .adjacency import DegreeQuery, degree, maximal_p_adjacent
from .core import SimplicialComplex, Simplex
from .errors import ArgumentError, UndefinedValueError
from .spectral import adjacency_matrix, principal_eigenvector
from .walks import NearnessGraph, build_nearness_graph

INF = math.inf

DEGREE_VARIANTS = ("upper", "strict_upper", "adjacency", "maximal_adjacency", "maximal")
AVERAGE_KINDS = ("star", "upper", "adjacency")
CLOSENESS_VARIANTS = ("harmonic", "reciprocal_sum")


@dataclass(frozen=True)
class CentralityReport:
    """Values of one measure, keyed by simplex, with per-simplex flags."""

    measure: str
    params: dict
    values: dict
    flags: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)

    def __getitem__(self, sigma):
        return self.values[tuple(sigma)]


def _graph(c: SimplicialComplex, graph: NearnessGraph | None) -> NearnessGraph:
    if graph is not None:
        if graph.complex is not c:
            raise ArgumentError("nearness graph belongs to a different complex")
        return graph
    return build_nearness_graph(c)


# ---------------------------------------------------------------------------
# degree centralities
# ---------------------------------------------------------------------------


def _guarded_ratio(num: int, den: int, what: str):
    """Fraction num/den; a zero denominator is allowed only with a zero
    numerator (value 0, flagged by callers)."""
    if den == 0:
        if num == 0:
            return Fraction(0), True
        raise UndefinedValueError(f"{what} has zero denominator with nonzero degree sum")
    return Fraction(num, den), False


def upper_degree_centrality(c: SimplicialComplex, sigma, h: int, strict: bool = False) -> Fraction:
    """deg_U(h, q+h) (strict: facets only) over C(f_0 - (q+1), q+h).

    The denominator counts (q+h)-subsets of the remaining vertices, exactly
    as in the defining formula; it does not bound the degree, so the value
    may exceed 1.
    """
    s = c.check_member(sigma)
    q = len(s) - 1
    if h < 1:
        raise ArgumentError(f"upper degree centrality needs h >= 1, got h={h}")
    if q + h > c.dim:
        d = 0  # the complex holds no (q+h)-simplices at all
    else:
        fam = "strict_upper_incident" if strict else "upper_incident"
        d = degree(c, s, DegreeQuery(fam, h=h))
    den = math.comb(c.f_vector[0] - (q + 1), q + h)
    if den == 0:
        raise UndefinedValueError(
            f"upper degree centrality undefined: C({c.f_vector[0] - (q + 1)}, {q + h}) = 0"
        )
    return Fraction(d, den)


def vertex_upper_degree_centrality(
    c: SimplicialComplex, v, h: int, strict: bool = False
) -> Fraction:
    """deg_U(h, h) of a vertex over C(f_0 - 1, h)."""
    s = c.check_member(v)
    if len(s) != 1:
        raise ArgumentError("vertex upper degree centrality expects a vertex")
    return upper_degree_centrality(c, s, h, strict=strict)


def adjacency_degree_centrality(
    c: SimplicialComplex, sigma, p: int, maximal: bool = False
) -> Fraction:
    """deg_A(p), or deg_A(p*) with ``maximal``, over
    C(q+1, p+1) * (sum_{q'>p} C(f_0-(p+1), q') - 1)."""
    s = c.check_member(sigma)
    q = len(s) - 1
    fam = "maximal_adjacency" if maximal else "adjacency"
    d = degree(c, s, DegreeQuery(fam, p=p))
    f0 = c.f_vector[0]
    pool = sum(math.comb(f0 - (p + 1), q2) for q2 in range(p + 1, c.dim + 1)) - 1
    den = math.comb(q + 1, p + 1) * pool
    value, _ = _guarded_ratio(d, den, "adjacency degree centrality")
    return value


def maximal_degree_centrality(c: SimplicialComplex, sigma) -> Fraction:
    """Maximal simplicial degree over (sum of the f-vector) - 1."""
    s = c.check_member(sigma)
    d = degree(c, s, DegreeQuery("maximal"))
    den = sum(c.f_vector) - 1
    if den == 0:
        raise UndefinedValueError(
            "maximal degree centrality undefined on a single-simplex complex"
        )
    return Fraction(d, den)


def _average_denominators(c: SimplicialComplex, q: int) -> tuple[int, int]:
    """(M_q, N_q): the potential strict-upper and maximal-adjacency degree
    totals over all q-simplices, as in the average-degree normalizations."""
    f0 = c.f_vector[0]
    fq = c.f_vector[q]
    m_q = sum(
        fq * math.comb(f0 - (q + 1), q + h) for h in range(1, c.dim - q + 1)
    )
    n_q = 0
    for p in range(q):
        pool = sum(math.comb(f0 - (p + 1), q2) for q2 in range(p + 1, c.dim + 1)) - 1
        n_q += fq * math.comb(q + 1, p + 1) * pool
    return m_q, n_q


def _average_sums(c: SimplicialComplex, q: int, kind: str) -> tuple[int, int]:
    """(degree sum, potential count) of the q-simplices for one average kind."""
    m_q, n_q = _average_denominators(c, q)
    num_u = num_a = 0
    for s in c.by_dim[q]:
        if kind != "adjacency":
            for h in range(1, c.dim - q + 1):
                num_u += degree(c, s, DegreeQuery("strict_upper_incident", h=h))
        if kind != "upper":
            for p in range(q):
                num_a += degree(c, s, DegreeQuery("maximal_adjacency", p=p))
    if kind == "upper":
        return num_u, m_q
    if kind == "adjacency":
        return num_a, n_q
    return num_u + num_a, m_q + n_q


def _average_with_flag(c, q, kind):
    if kind not in AVERAGE_KINDS:
        raise ArgumentError(f"kind must be one of {AVERAGE_KINDS}, got {kind!r}")
    if q is None:
        num = den = 0
        for q2 in range(c.dim + 1):
            a, b = _average_sums(c, q2, kind)
            num += a
            den += b
    else:
        if not 0 <= q <= c.dim:
            raise ArgumentError(f"q={q} outside 0..{c.dim}")
        num, den = _average_sums(c, q, kind)
    return _guarded_ratio(num, den, f"average {kind} degree")


def average_degree_centrality(
    c: SimplicialComplex, q: int | None = None, kind: str = "star"
) -> Fraction:
    """Mean degree centrality of the q-simplices, or of the whole complex.

    ``upper`` averages the strict upper (facet) degrees against M_q,
    ``adjacency`` the maximal adjacency degrees against N_q, and ``star``
    their sum against M_q + N_q.  When q is None both the degree sums and
    the potential counts are accumulated over every dimension.  An empty
    potential count with an empty degree sum yields 0.
    """
    value, _ = _average_with_flag(c, q, kind)
    return value


# ---------------------------------------------------------------------------
# eigenvector centrality
# ---------------------------------------------------------------------------


def eigenvector_centrality(c: SimplicialComplex, q: int, p: int | None = None) -> CentralityReport:
    """Principal eigenvector of the p-adjacency matrix of the q-simplices,
    sum-normalized.  For q = 0, p defaults to the vertex convention."""
    if p is None:
        if q == 0:
            p = 0
        else:
            raise ArgumentError("eigenvector centrality needs p for q >= 1")
    a = adjacency_matrix(c, q, p)
    res = principal_eigenvector(a)
    simps = c.by_dim[q]
    values = {s: float(v) for s, v in zip(simps, res.vector)}
    flags = {}
    if res.degenerate:
        flags = {s: ("degenerate",) for s in simps}
    component = (
        None
        if res.component is None
        else tuple(c.label(simps[i]) for i in res.component)
    )
    return CentralityReport(
        measure="eigenvector",
        params={"q": q, "p": p},
        values=values,
        flags=flags,
        metadata={
            "eigenvalue": res.eigenvalue,
            "residual": res.residual,
            "iterations": res.iterations,
            "converged": res.converged,
            "degenerate": res.degenerate,
            "component": component,
        },
    )


# ---------------------------------------------------------------------------
# walk-based centralities
# ---------------------------------------------------------------------------


def closeness_centrality(
    g: NearnessGraph,
    sigma,
    p: int,
    variant: str = "harmonic",
    semantics: str = "at_least",
) -> Fraction:
    """Harmonic closeness sums 1/d over all other level-p nodes (1/inf = 0);
    the reciprocal_sum variant is 1 over the distance sum within the node's
    connectivity class (0 on a singleton class)."""
    if variant not in CLOSENESS_VARIANTS:
        raise ArgumentError(
            f"variant must be one of {CLOSENESS_VARIANTS}, got {variant!r}"
        )
    row = walks_mod.distances_from(g, sigma, p, semantics)
    src = row.source
    if variant == "harmonic":
        total = Fraction(0)
        for t, d in row.dist.items():
            if t != src and d != INF:
                total += Fraction(1, int(d))
        return total
    total = 0
    for t, d in row.dist.items():
        if t != src and d != INF:
            total += int(d)
    if total == 0:
        return Fraction(0)
    return Fraction(1, total)


def betweenness_centrality(
    g: NearnessGraph, sigma, p: int, semantics: str = "at_least"
) -> Fraction:
    """Share of shortest p-walks passing through the simplex, averaged over
    the pairs of its connectivity class: 2/((n-1)(n-2)) * sum l_ij(s)/l_ij.
    Classes with fewer than three members give 0.

    Only at-least semantics is supported: the pair-splitting identity
    l_ij(s) = c_is * c_sj relies on shortest walks concatenating at s, which
    fails for the exact-level state graph.
    """
    if semantics != "at_least":
        raise ArgumentError("betweenness is only defined for at_least semantics")
    part = walks_mod.components(g, p, semantics)
    s = g.complex.check_member(sigma)
    cls = part.class_of(s)
    return _betweenness_in_class(g, cls, p, semantics)[s]


def _betweenness_in_class(g, cls, p, semantics):
    """Betweenness of every member of one connectivity class."""
    n = len(cls)
    out = {s: Fraction(0) for s in cls}
    if n < 3:
        return out
    index = {s: k for k, s in enumerate(cls)}
    dist = [[0] * n for _ in range(n)]
    cnt = [[0] * n for _ in range(n)]
    for s in cls:
        row = walks_mod.distances_from(g, s, p, semantics)
        a = index[s]
        for t in cls:
            b = index[t]
            d = row.dist[t]
            dist[a][b] = -1 if d == INF else int(d)
            cnt[a][b] = row.counts[t]
    norm = Fraction(2, (n - 1) * (n - 2))
    for s in cls:
        k = index[s]
        acc = Fraction(0)
        for i in range(n):
            if i == k or dist[i][k] < 0:
                continue
            for j in range(i + 1, n):
                if j == k or dist[i][j] < 0 or dist[k][j] < 0:
                    continue
                if dist[i][k] + dist[k][j] == dist[i][j]:
                    through = cnt[i][k] * cnt[k][j]
                    if through:
                        acc += Fraction(through, cnt[i][j])
        out[s] = norm * acc
    return out


# ---------------------------------------------------------------------------
# clustering
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NeighbourSet:
    """Maximal neighbours of a simplex: the facets properly containing it
    together with its maximal p-adjacent simplices over all p < q (for a
    vertex: the facets of dimension >= 1 containing it).  The member count
    equals the maximal simplicial degree."""

    center: Simplex
    members: tuple


def maximal_neighbours(c: SimplicialComplex, sigma) -> NeighbourSet:
    s = c.check_member(sigma)
    q = len(s) - 1
    members = []
    if q == 0:
        for f in c.facets_containing(s):
            if len(f) > 1:
                members.append(f)
    else:
        for f in c.facets_containing(s):
            if f != s:
                members.append(f)
        for p in range(q):
            for other in c.iter_simplices():
                if maximal_p_adjacent(c, other, s, p):
                    members.append(other)
    members.sort(key=lambda t: (len(t), t))
    return NeighbourSet(center=s, members=tuple(members))


def linked(c: SimplicialComplex, a, b, center, graph: NearnessGraph | None = None) -> bool:
    """Are two maximal neighbours of ``center`` linked?

    Either (a) they share a face with a vertex outside ``center``, or (b)
    their 0-distance is 2 via some intermediate that is neither ``center``
    nor one of its faces.
    """
    s = c.check_member(center)
    sa = c.check_member(a)
    sb = c.check_member(b)
    ns = maximal_neighbours(c, s)
    if sa not in ns.members or sb not in ns.members:
        raise ArgumentError("linked() expects two maximal neighbours of the center")
    if sa == sb:
        return False
    shared = set(sa) & set(sb)
    if shared - set(s):
        return True
    g = _graph(c, graph)
    ga = c.basis.global_index(sa)
    gb = c.basis.global_index(sb)
    direct = False
    nbr_a = set()
    for i, j in zip(g.edges_i, g.edges_j):
        if (i == ga and j == gb) or (i == gb and j == ga):
            direct = True
            break
        if i == ga:
            nbr_a.add(int(j))
        elif j == ga:
            nbr_a.add(int(i))
    if direct:
        return False
    s_set = set(s)
    for i, j in zip(g.edges_i, g.edges_j):
        w = None
        if i == gb and int(j) in nbr_a:
            w = int(j)
        elif j == gb and int(i) in nbr_a:
            w = int(i)
        if w is None:
            continue
        ws = c.global_simplex(w)
        if ws != s and not set(ws) <= s_set:
            return True
    return False


def clustering_coefficient(
    c: SimplicialComplex, sigma, graph: NearnessGraph | None = None
) -> Fraction:
    """Fraction of linked pairs among the maximal neighbours; 0 whenever
    there are fewer than two neighbours."""
    s = c.check_member(sigma)
    ns = maximal_neighbours(c, s)
    k = len(ns.members)
    if k <= 1:
        return Fraction(0)
    g = _graph(c, graph)
    links = 0
    for x in range(k):
        for y in range(x + 1, k):
            if linked(c, ns.members[x], ns.members[y], s, graph=g):
                links += 1
    return Fraction(links, k * (k - 1) // 2)


# ---------------------------------------------------------------------------
# report dispatcher
# ---------------------------------------------------------------------------


def centrality_report(
    c: SimplicialComplex,
    measure: str,
    *,
    q: int | None = None,
    p: int | None = None,
    h: int | None = None,
    variant: str | None = None,
    semantics: str = "at_least",
    graph: NearnessGraph | None = None,
) -> CentralityReport:
    """Evaluate one centrality measure over its natural simplex range."""
    if measure == "degree":
        return _degree_report(c, q, p, h, variant)
    if measure == "eigenvector":
        if q is None:
            raise ArgumentError("eigenvector centrality needs q")
        return eigenvector_centrality(c, q, p)
    if measure == "closeness":
        return _closeness_report(c, p, variant or "harmonic", semantics, graph)
    if measure == "betweenness":
        return _betweenness_report(c, p, semantics, graph)
    if measure == "clustering":
        return _clustering_report(c, q, graph)
    if measure == "average":
        kind = variant or "star"
        value, guarded = _average_with_flag(c, q, kind)
        return CentralityReport(
            measure="average",
            params={"variant": kind} if q is None else {"q": q, "variant": kind},
            values={(): value},
            flags={(): ("zero_denominator",)} if guarded else {},
            metadata={"scope": "complex" if q is None else f"dimension {q}"},
        )
    raise ArgumentError(f"unknown centrality measure {measure!r}")


def _degree_report(c, q, p, h, variant):
    if q is None:
        raise ArgumentError("degree centrality needs q")
    if not 0 <= q <= c.dim:
        raise ArgumentError(f"q={q} outside 0..{c.dim}")
    variant = variant or "upper"
    if variant not in DEGREE_VARIANTS:
        raise ArgumentError(
            f"variant must be one of {DEGREE_VARIANTS}, got {variant!r}"
        )
    values, flags = {}, {}
    params = {"q": q, "variant": variant}
    for s in c.by_dim[q]:
        if variant in ("upper", "strict_upper"):
            if h is None:
                raise ArgumentError("upper degree centrality needs h")
            params["h"] = h
            v = upper_degree_centrality(c, s, h, strict=variant == "strict_upper")
            if v > 1:
                flags[s] = ("out_of_range",)
        elif variant in ("adjacency", "maximal_adjacency"):
            if p is None:
                raise ArgumentError("adjacency degree centrality needs p")
            params["p"] = p
            v = adjacency_degree_centrality(
                c, s, p, maximal=variant == "maximal_adjacency"
            )
        else:
            v = maximal_degree_centrality(c, s)
        values[s] = v
    return CentralityReport(
        measure="degree", params=params, values=values, flags=flags
    )


def _closeness_report(c, p, variant, semantics, graph):
    if p is None:
        raise ArgumentError("closeness centrality needs p")
    g = _graph(c, graph)
    part = walks_mod.components(g, p, semantics)
    values, flags = {}, {}
    for cl in part.classes:
        for s in cl:
            values[s] = closeness_centrality(g, s, p, variant, semantics)
            if variant == "reciprocal_sum" and len(cl) == 1:
                flags[s] = ("degenerate",)
    values = {s: values[s] for s in _level_order(c, p)}
    return CentralityReport(
        measure="closeness",
        params={"p": p, "variant": variant, "semantics": semantics},
        values=values,
        flags=flags,
    )


def _betweenness_report(c, p, semantics, graph):
    if p is None:
        raise ArgumentError("betweenness centrality needs p")
    if semantics != "at_least":
        raise ArgumentError("betweenness is only defined for at_least semantics")
    g = _graph(c, graph)
    part = walks_mod.components(g, p, semantics)
    values, flags = {}, {}
    for cl in part.classes:
        scores = _betweenness_in_class(g, cl, p, semantics)
        values.update(scores)
        if len(cl) < 3:
            for s in cl:
                flags[s] = ("degenerate",)
    values = {s: values[s] for s in _level_order(c, p)}
    return CentralityReport(
        measure="betweenness",
        params={"p": p, "semantics": semantics},
        values=values,
        flags=flags,
        metadata={"class_sizes": part.sizes},
    )


def _clustering_report(c, q, graph):
    g = _graph(c, graph)
    if q is None:
        simps = list(c.iter_simplices())
    else:
        if not 0 <= q <= c.dim:
            raise ArgumentError(f"q={q} outside 0..{c.dim}")
        simps = list(c.by_dim[q])
    values = {s: clustering_coefficient(c, s, graph=g) for s in simps}
    return CentralityReport(
        measure="clustering",
        params={} if q is None else {"q": q},
        values=values,
    )


def _level_order(c: SimplicialComplex, p: int):
    for s in c.iter_simplices():
        if len(s) - 1 >= p:
            yield s
