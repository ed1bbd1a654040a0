"""Higher-order adjacency between simplices and the degree families built on it.

Terminology, for two distinct simplices of dimensions q and q':

* p-lower adjacent: they share a p-face (strict: a p-face but no (p+1)-face,
  i.e. the intersection has exactly p+1 vertices).
* p-upper adjacent: some p-simplex of the complex contains both (strict: no
  (p+1)-simplex does).
* p-adjacent: strictly p-lower adjacent and not p'-upper adjacent for
  p' = q + q' - p.  Because the union of the two vertex sets then has exactly
  p' + 1 vertices, this is equivalent to: intersection size p + 1 and the
  union is not a simplex of the complex.  Two distinct vertices are declared
  0-adjacent iff they span an edge (the q = 0 convention).
* maximally p-adjacent (directional): sigma' is p-adjacent to sigma and no
  proper coface of sigma' is p-adjacent to sigma at the same p.

All degree counts exclude the queried simplex itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import SimplicialComplex, Simplex
from .errors import ArgumentError

_EMPTY = np.zeros(0, dtype=np.uint64)

FAMILIES = (
    "lower",
    "strict_lower",
    "upper",
    "strict_upper",
    "upper_incident",
    "strict_upper_incident",
    "adjacency",
    "maximal_adjacency",
    "two_param",
    "strict_two_param",
    "maximal",
)


# ---------------------------------------------------------------------------
# pair predicates
# ---------------------------------------------------------------------------


def _pair(c: SimplicialComplex, s1, s2, p: int):
    if p < 0:
        raise ArgumentError(f"p={p} must be nonnegative")
    a = c.check_member(s1)
    b = c.check_member(s2)
    return a, b, c.mask_of(a), c.mask_of(b)


def lower_adjacent(c, s1, s2, p, strict=False) -> bool:
    """Do the two distinct simplices share a common p-face (strict: and no
    common (p+1)-face)?"""
    a, b, m1, m2 = _pair(c, s1, s2, p)
    if a == b:
        return False
    inter = (m1 & m2).bit_count()
    return inter == p + 1 if strict else inter >= p + 1


def upper_adjacent(c, s1, s2, p, strict=False) -> bool:
    """Is there a p-simplex of the complex containing both (strict: and no
    (p+1)-simplex containing both)?"""
    a, b, m1, m2 = _pair(c, s1, s2, p)
    if a == b:
        return False
    u = m1 | m2
    if not _has_coface(c, u, p):
        return False
    if strict and _has_coface(c, u, p + 1):
        return False
    return True


def _has_coface(c: SimplicialComplex, mask: int, d: int) -> bool:
    if not 0 <= d <= c.dim:
        return False
    for t in c.masks_by_dim[d]:
        if mask & int(t) == mask:
            return True
    return False


def p_adjacent(c, s1, s2, p) -> bool:
    """Strictly p-lower adjacent but not upper adjacent at p' = q + q' - p.

    Two distinct vertices are 0-adjacent iff they span an edge.
    """
    a, b, m1, m2 = _pair(c, s1, s2, p)
    if a == b:
        return False
    if len(a) == 1 and len(b) == 1:
        return p == 0 and c.member_mask(m1 | m2)
    if (m1 & m2).bit_count() != p + 1:
        return False
    return not c.member_mask(m1 | m2)


def maximal_p_adjacent(c, s_prime, s, p) -> bool:
    """Is ``s_prime`` p-adjacent to ``s`` and not a proper face of any other
    simplex that is p-adjacent to ``s`` at the same p?"""
    if not p_adjacent(c, s_prime, s, p):
        return False
    mp = c.mask_of(c.check_member(s_prime))
    for other in c.iter_simplices():
        mo = c.mask_of(other)
        if mo != mp and mp & mo == mp and p_adjacent(c, other, s, p):
            return False
    return True


# ---------------------------------------------------------------------------
# degree queries
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeQuery:
    """One member of the degree family.

    ``family`` is one of :data:`FAMILIES`.  Meaning of the parameters:

    * lower / strict_lower: shared-face dimension ``p``; optional ``h``
      restricts the counted simplices to dimension q - h.
    * upper / strict_upper: shared-coface dimension ``p``.
    * upper_incident / strict_upper_incident: counts (q+h)-cofaces of the
      simplex (strict: only those that are facets), parameter ``h`` >= 1.
    * adjacency / maximal_adjacency: adjacency level ``p``.
    * two_param / strict_two_param: ``p`` is the upper parameter p1 > q,
      ``p2`` the adjacency parameter p2 < q; the value is
      deg_U(p1) + deg_A*(p2) (strict: deg_U*(p1) + deg_A*(p2)).
    * maximal: no parameters; sum of all strict upper-incident degrees and
      all maximal adjacency degrees.
    """

    family: str
    p: int | None = None
    h: int | None = None
    p2: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ArgumentError(f"unknown degree family {self.family!r}")


def _need(value, name, family):
    if value is None:
        raise ArgumentError(f"family {family!r} requires parameter {name}")
    return value


def _forbid(query: DegreeQuery, *names):
    for n in names:
        if getattr(query, n) is not None:
            raise ArgumentError(
                f"family {query.family!r} takes no parameter {n}"
            )


def _validate(query: DegreeQuery, q: int, dim_k: int) -> None:
    """Check the parameter ranges for a simplex of dimension q; raises
    ArgumentError naming the violated constraint."""
    fam = query.family
    if fam in ("lower", "strict_lower"):
        _forbid(query, "p2")
        p = _need(query.p, "p", fam)
        if not 0 <= p <= q:
            raise ArgumentError(f"lower family needs 0 <= p <= q, got p={p}, q={q}")
        if query.h is not None:
            h = query.h
            if not q - dim_k <= h <= q - p:
                raise ArgumentError(
                    f"lower family needs q-dim <= h <= q-p, got h={h}, q={q}"
                )
    elif fam in ("upper", "strict_upper"):
        _forbid(query, "h", "p2")
        p = _need(query.p, "p", fam)
        if not q <= p <= dim_k:
            raise ArgumentError(
                f"upper family needs q <= p <= dim K, got p={p}, q={q}, dim={dim_k}"
            )
    elif fam in ("upper_incident", "strict_upper_incident"):
        _forbid(query, "p", "p2")
        h = _need(query.h, "h", fam)
        if not 1 <= h <= dim_k - q:
            raise ArgumentError(
                f"upper-incident family needs 1 <= h <= dim K - q, got h={h}, q={q}"
            )
    elif fam in ("adjacency", "maximal_adjacency"):
        _forbid(query, "h", "p2")
        p = _need(query.p, "p", fam)
        if q == 0:
            if p != 0:
                raise ArgumentError(
                    f"vertices only support p=0 adjacency, got p={p}"
                )
        elif not 0 <= p < q:
            raise ArgumentError(
                f"adjacency family needs 0 <= p < q, got p={p}, q={q}"
            )
    elif fam in ("two_param", "strict_two_param"):
        _forbid(query, "h")
        p1 = _need(query.p, "p", fam)
        p2 = _need(query.p2, "p2", fam)
        if not q < p1 <= dim_k:
            raise ArgumentError(
                f"two-parameter family needs q < p1 <= dim K, got p1={p1}, q={q}"
            )
        if not 0 <= p2 < q:
            raise ArgumentError(
                f"two-parameter family needs 0 <= p2 < q, got p2={p2}, q={q}"
            )
    elif fam == "maximal":
        _forbid(query, "p", "h", "p2")


def _masks(c: SimplicialComplex, d: int):
    if 0 <= d <= c.dim:
        return c.masks_by_dim[d]
    return _EMPTY


def _degree_raw(c: SimplicialComplex, m: np.uint64, q: int, query: DegreeQuery) -> int:
    ker = kernels.get()
    fam = query.family
    if fam in ("lower", "strict_lower"):
        if query.h is None:
            cand = c.all_masks
        else:
            cand = _masks(c, q - query.h)
        return int(ker.count_lower(m, cand, query.p, fam == "strict_lower"))
    if fam in ("upper", "strict_upper"):
        return int(
            ker.count_upper(
                m,
                c.all_masks,
                _masks(c, query.p),
                _masks(c, query.p + 1),
                fam == "strict_upper",
            )
        )
    if fam in ("upper_incident", "strict_upper_incident"):
        d = q + query.h
        return int(
            ker.count_cofaces(
                m, _masks(c, d), fam == "strict_upper_incident", _masks(c, d + 1)
            )
        )
    if fam in ("adjacency", "maximal_adjacency"):
        if q == 0:
            # vertex convention: adjacent vertices are the edge neighbours,
            # and every one of them is maximal
            return int(ker.count_cofaces(m, _masks(c, 1), False, _EMPTY))
        flags = ker.adjacency_row(
            m, c.all_masks, c.sorted_masks_flat, c.sorted_offsets, c.dim, query.p
        )
        if fam == "maximal_adjacency":
            flags = ker.maximal_filter(flags, c.all_masks)
        return int(np.asarray(flags).sum())
    if fam in ("two_param", "strict_two_param"):
        up = DegreeQuery(
            "strict_upper" if fam == "strict_two_param" else "upper", p=query.p
        )
        adj = DegreeQuery("maximal_adjacency", p=query.p2)
        return _degree_raw(c, m, q, up) + _degree_raw(c, m, q, adj)
    if fam == "maximal":
        total = 0
        for h in range(1, c.dim - q + 1):
            total += _degree_raw(c, m, q, DegreeQuery("strict_upper_incident", h=h))
        for p in range(q):
            total += _degree_raw(c, m, q, DegreeQuery("maximal_adjacency", p=p))
        return total
    raise ArgumentError(f"unknown degree family {fam!r}")


def degree(c: SimplicialComplex, sigma, query: DegreeQuery) -> int:
    """The degree of one simplex under the given query."""
    s = c.check_member(sigma)
    q = len(s) - 1
    _validate(query, q, c.dim)
    return _degree_raw(c, np.uint64(c.mask_of(s)), q, query)


@dataclass(frozen=True)
class DegreeReport:
    """Degrees of every simplex of one dimension under one query."""

    q: int
    query: DegreeQuery
    values: dict

    def __getitem__(self, sigma) -> int:
        return self.values[tuple(sigma)]


def degree_report(c: SimplicialComplex, q: int, query: DegreeQuery) -> DegreeReport:
    """Evaluate a degree query on all q-simplices (chain-basis order)."""
    if not 0 <= q <= c.dim:
        raise ArgumentError(f"no simplices of dimension {q}")
    _validate(query, q, c.dim)
    values = {}
    for s, m in zip(c.by_dim[q], c.masks_by_dim[q]):
        values[s] = _degree_raw(c, np.uint64(m), q, query)
    return DegreeReport(q=q, query=query, values=values)


def strict_upper_closed_form(c: SimplicialComplex, sigma, h: int) -> int:
    """Alternating-sum closed form for the strict upper-incident degree.

    Evaluates sum_{i=0}^{s} (-1)^i * deg_U(h+i, q+h+i) * C(h+i, h) with
    s = dim K - (q + h).  On complexes where a (q+h)-coface lies in more than
    one higher facet this closed form can disagree with direct enumeration
    (it may even go negative); callers should treat it as a diagnostic, not
    as the degree.  The enumerated value is authoritative.
    """
    s = c.check_member(sigma)
    q = len(s) - 1
    if not 1 <= h <= c.dim - q:
        raise ArgumentError(
            f"strict upper closed form needs 1 <= h <= dim K - q, got h={h}, q={q}"
        )
    m = np.uint64(c.mask_of(s))
    total = 0
    for i in range(c.dim - (q + h) + 1):
        inc = _degree_raw(c, m, q, DegreeQuery("upper_incident", h=h + i))
        total += (-1) ** i * inc * math.comb(h + i, h)
    return total
