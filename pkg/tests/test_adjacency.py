"""Adjacency predicates and the degree families."""

import pytest

from simpcent.adjacency import (
    DegreeQuery,
    degree,
    degree_report,
    lower_adjacent,
    maximal_p_adjacent,
    p_adjacent,
    strict_upper_closed_form,
    upper_adjacent,
)
from simpcent.errors import ArgumentError


def test_lower_adjacency_basics(K_two):
    t1 = K_two.simplex("0", "1", "2")
    t2 = K_two.simplex("1", "2", "3")
    e12 = K_two.simplex("1", "2")
    assert lower_adjacent(K_two, t1, t2, 0)
    assert lower_adjacent(K_two, t1, t2, 1)
    assert not lower_adjacent(K_two, t1, t2, 2)
    # strict: shared 1-face but no shared 2-face
    assert lower_adjacent(K_two, t1, t2, 1, strict=True)
    assert not lower_adjacent(K_two, t1, t2, 0, strict=True)
    assert lower_adjacent(K_two, t1, e12, 1)
    assert not lower_adjacent(K_two, t1, t1, 1)


def test_upper_adjacency_basics(K_two):
    e01 = K_two.simplex("0", "1")
    e02 = K_two.simplex("0", "2")
    e13 = K_two.simplex("1", "3")
    v1, v2 = K_two.simplex("1"), K_two.simplex("2")
    assert upper_adjacent(K_two, e01, e02, 2)
    assert not upper_adjacent(K_two, e01, e13, 2)
    assert upper_adjacent(K_two, v1, v2, 1)
    assert upper_adjacent(K_two, v1, v2, 2)
    assert upper_adjacent(K_two, v1, v2, 2, strict=True)
    assert not upper_adjacent(K_two, v1, v2, 1, strict=True)  # both triangles


def test_p_adjacency_and_vertex_convention(K_two, K_bow):
    t1 = K_two.simplex("0", "1", "2")
    t2 = K_two.simplex("1", "2", "3")
    # shared edge {1,2}, union not a simplex
    assert p_adjacent(K_two, t1, t2, 1)
    assert not p_adjacent(K_two, t1, t2, 0)
    # vertices are 0-adjacent iff they span an edge
    v0, v3 = K_two.simplex("0"), K_two.simplex("3")
    v1 = K_two.simplex("1")
    assert p_adjacent(K_two, v0, v1, 0)
    assert not p_adjacent(K_two, v0, v3, 0)
    # faces are never adjacent to their cofaces
    e12 = K_two.simplex("1", "2")
    assert not p_adjacent(K_two, e12, t1, 1)
    assert not p_adjacent(K_two, e12, t1, 0)
    # K_bow triangles share only the waist vertex
    b1 = K_bow.simplex("0", "1", "2")
    b2 = K_bow.simplex("2", "3", "4")
    assert p_adjacent(K_bow, b1, b2, 0)
    assert not p_adjacent(K_bow, b1, b2, 1)


def test_maximal_adjacency_is_directional(K_bow):
    t1 = K_bow.simplex("0", "1", "2")
    t2 = K_bow.simplex("2", "3", "4")
    e23 = K_bow.simplex("2", "3")
    # e23 is 0-adjacent to t1 but dominated by its coface t2
    assert p_adjacent(K_bow, e23, t1, 0)
    assert not maximal_p_adjacent(K_bow, e23, t1, 0)
    assert maximal_p_adjacent(K_bow, t2, t1, 0)
    # seen from the edge, the facet t1 is maximal
    assert maximal_p_adjacent(K_bow, t1, e23, 0)


def test_figure_one_degrees(K_bow):
    t1 = K_bow.simplex("0", "1", "2")
    assert degree(K_bow, t1, DegreeQuery("adjacency", p=0)) == 3
    assert degree(K_bow, t1, DegreeQuery("maximal_adjacency", p=0)) == 1


def test_k_two_edge_degrees(K_two):
    e12 = K_two.simplex("1", "2")
    assert degree(K_two, e12, DegreeQuery("upper_incident", h=1)) == 2
    assert degree(K_two, e12, DegreeQuery("strict_upper_incident", h=1)) == 2
    assert degree(K_two, e12, DegreeQuery("adjacency", p=0)) == 0
    assert degree(K_two, e12, DegreeQuery("maximal_adjacency", p=0)) == 0
    assert degree(K_two, e12, DegreeQuery("maximal")) == 2


def test_vertex_degrees(K_two, K_wind):
    v0 = K_wind.simplex("0")
    # hub: six incident edges, all inside triangles; three facet triangles
    assert degree(K_wind, v0, DegreeQuery("adjacency", p=0)) == 6
    assert degree(K_wind, v0, DegreeQuery("strict_upper_incident", h=1)) == 0
    assert degree(K_wind, v0, DegreeQuery("strict_upper_incident", h=2)) == 3
    assert degree(K_wind, v0, DegreeQuery("maximal")) == 3
    v3 = K_two.simplex("3")
    assert degree(K_two, v3, DegreeQuery("adjacency", p=0)) == 2


def test_lower_degree_face_count_identities(all_fixtures):
    from math import comb

    for name, c in all_fixtures.items():
        for q in range(c.dim + 1):
            for s in c.by_dim[q]:
                for h in range(1, q + 1):
                    got = degree(c, s, DegreeQuery("lower", p=q - h, h=h))
                    assert got == comb(q + 1, q - h + 1), (name, s, h)
                if q >= 1:
                    assert degree(
                        c, s, DegreeQuery("lower", p=q - 1, h=1)
                    ) == q + 1


def test_strict_lower_identity(all_fixtures):
    for name, c in all_fixtures.items():
        for q in range(c.dim + 1):
            for s in c.by_dim[q]:
                for h in range(0, q + 1):
                    for p in range(0, q - h + 1):
                        plain = degree(c, s, DegreeQuery("lower", p=p, h=h))
                        strict = degree(
                            c, s, DegreeQuery("strict_lower", p=p, h=h)
                        )
                        if p + 1 <= q - h:
                            higher = degree(
                                c, s, DegreeQuery("lower", p=p + 1, h=h)
                            )
                        else:
                            higher = 0
                        assert strict == plain - higher, (name, s, h, p)


def test_two_param_degree(K_two):
    e12 = K_two.simplex("1", "2")
    v = degree(K_two, e12, DegreeQuery("two_param", p=2, p2=0))
    # upper part counts every other simplex sharing a 2-coface with e12:
    # all four vertices, the four other edges, and both triangles
    assert v == 10
    upper = degree(K_two, e12, DegreeQuery("upper", p=2))
    adj = degree(K_two, e12, DegreeQuery("maximal_adjacency", p=0))
    assert v == upper + adj == 10 + 0
    with pytest.raises(ArgumentError):
        degree(K_two, e12, DegreeQuery("two_param", p=1, p2=0))  # p1 must exceed q
    with pytest.raises(ArgumentError):
        degree(K_two, e12, DegreeQuery("two_param", p=2, p2=1))  # p2 must be < q


def test_degree_query_validation(K_two):
    e12 = K_two.simplex("1", "2")
    t1 = K_two.simplex("0", "1", "2")
    with pytest.raises(ArgumentError):
        DegreeQuery("bogus")
    with pytest.raises(ArgumentError):
        degree(K_two, e12, DegreeQuery("lower", p=2))  # p > q
    with pytest.raises(ArgumentError):
        degree(K_two, e12, DegreeQuery("upper", p=0))  # p < q
    with pytest.raises(ArgumentError):
        degree(K_two, t1, DegreeQuery("upper_incident", h=1))  # beyond dim K
    with pytest.raises(ArgumentError):
        degree(K_two, t1, DegreeQuery("adjacency", p=2))  # needs p < q
    with pytest.raises(ArgumentError):
        degree(K_two, e12, DegreeQuery("maximal", p=0))  # takes no params
    with pytest.raises(ArgumentError):
        degree(K_two, e12, DegreeQuery("adjacency"))  # missing p


def test_degree_report_order_and_values(K_two):
    rep = degree_report(K_two, 1, DegreeQuery("upper_incident", h=1))
    assert list(rep.values) == list(K_two.by_dim[1])
    labelled = {K_two.label(s): v for s, v in rep.values.items()}
    assert labelled == {"0-1": 1, "0-2": 1, "1-2": 2, "1-3": 1, "2-3": 1}
    assert rep[K_two.simplex("1", "2")] == 2


def test_closed_form_matches_on_k_tet(K_tet):
    for q in range(K_tet.dim + 1):
        for s in K_tet.by_dim[q]:
            for h in range(1, K_tet.dim - q + 1):
                enum = degree(K_tet, s, DegreeQuery("strict_upper_incident", h=h))
                assert strict_upper_closed_form(K_tet, s, h) == enum


def test_closed_form_known_failure(K_two):
    # interior vertices have cofaces in two facets; the alternating sum
    # overcorrects to -1 while direct enumeration gives 0
    v1 = K_two.simplex("1")
    assert strict_upper_closed_form(K_two, v1, 1) == -1
    assert degree(K_two, v1, DegreeQuery("strict_upper_incident", h=1)) == 0


def test_degrees_exclude_self(K_tri):
    # sharing one's own coface or face never counts the simplex itself
    t = K_tri.simplex("0", "1", "2")
    e01 = K_tri.simplex("0", "1")
    # everything inside the triangle except the triangle: 3 vertices, 3 edges
    assert degree(K_tri, t, DegreeQuery("upper", p=2)) == 6
    assert degree(K_tri, e01, DegreeQuery("upper", p=1)) == 2
    # all simplices sharing a vertex with the triangle, except itself
    assert degree(K_tri, t, DegreeQuery("lower", p=0)) == 6


def test_maximal_degree_decomposition(all_fixtures):
    for name, c in all_fixtures.items():
        for s in c.iter_simplices():
            q = len(s) - 1
            total = sum(
                degree(c, s, DegreeQuery("strict_upper_incident", h=h))
                for h in range(1, c.dim - q + 1)
            ) + sum(
                degree(c, s, DegreeQuery("maximal_adjacency", p=p))
                for p in range(q)
            )
            assert degree(c, s, DegreeQuery("maximal")) == total, (name, s)
