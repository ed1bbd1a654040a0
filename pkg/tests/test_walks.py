"""Nearness graph, p-walk distances, components and the Q*-vector."""

import math
from fractions import Fraction

import pytest

from simpcent.errors import ArgumentError, UndefinedValueError
from simpcent.walks import (
    all_pairs,
    average_walk_length,
    build_nearness_graph,
    components,
    distances_from,
    eccentricity,
    geodesic_count,
    p_distance,
    q_star_vector,
    shortest_walk,
)

INF = math.inf


def _edge_map(g):
    return {frozenset((a, b)): lvl for a, b, lvl in g.edge_list()}


def test_nearness_edges_two_triangles(K_two):
    g = build_nearness_graph(K_two)
    want = {
        # vertices joined along graph edges
        frozenset({(0,), (1,)}): 0,
        frozenset({(0,), (2,)}): 0,
        frozenset({(1,), (2,)}): 0,
        frozenset({(1,), (3,)}): 0,
        frozenset({(2,), (3,)}): 0,
        # each outer edge meets the opposite triangle at one vertex
        frozenset({(0, 1), (1, 2, 3)}): 0,
        frozenset({(0, 2), (1, 2, 3)}): 0,
        frozenset({(1, 3), (0, 1, 2)}): 0,
        frozenset({(2, 3), (0, 1, 2)}): 0,
        # the triangles share the middle edge
        frozenset({(0, 1, 2), (1, 2, 3)}): 1,
    }
    assert _edge_map(g) == want


def test_nearness_neighbors(K_two):
    g = build_nearness_graph(K_two)
    t1 = (0, 1, 2)
    got = {s: lvl for s, lvl in g.neighbors(t1)}
    assert got == {(1, 3): 0, (2, 3): 0, (1, 2, 3): 1}
    assert g.neighbors(t1, min_level=1) == [((1, 2, 3), 1)]
    # the shared edge is a face of both triangles, never a neighbour
    assert g.neighbors((1, 2)) == []


def test_distances_chain(T_chain):
    g = build_nearness_graph(T_chain)
    t1, t2, t3 = (0, 1, 2), (1, 2, 3), (2, 3, 4)
    assert p_distance(g, t1, t2, 1) == 1
    assert p_distance(g, t1, t3, 1) == 2
    assert p_distance(g, t1, t1, 1) == 0
    assert geodesic_count(g, t1, t3, 1) == 1
    assert shortest_walk(g, t1, t3, 1) == [t1, t2, t3]
    # no level-1 edge ever leaves an edge node
    assert p_distance(g, (0, 1), (0, 2), 1) == INF
    assert geodesic_count(g, t1, (0, 1), 1) == 0
    assert shortest_walk(g, t1, (0, 1), 1) is None


def test_distances_row(T_chain):
    g = build_nearness_graph(T_chain)
    t1 = (0, 1, 2)
    row = distances_from(g, t1, 1)
    assert set(row.dist) == {
        s for s in T_chain.iter_simplices() if len(s) >= 2
    }
    assert row.dist[(2, 3, 4)] == 2
    assert row.counts[(2, 3, 4)] == 1
    assert row.dist[(1, 2, 3)] == 1
    assert row.dist[(3, 4)] == INF
    assert row.counts[(3, 4)] == 0


def test_exact_semantics(K_two, T_chain):
    g = build_nearness_graph(K_two)
    t1, t2 = (0, 1, 2), (1, 2, 3)
    # the direct hop has level 1; an exact-0 walk must detour over a level-0
    # edge and come back, or overshoot past the target
    assert p_distance(g, t1, t2, 0) == 1
    assert p_distance(g, t1, t2, 0, "exact") == 3
    assert geodesic_count(g, t1, t2, 0, "exact") == 4
    assert p_distance(g, t1, t2, 1, "exact") == 1
    walk = shortest_walk(g, t1, t2, 0, "exact")
    assert len(walk) == 4 and walk[0] == t1 and walk[-1] == t2

    gc = build_nearness_graph(T_chain)
    assert p_distance(gc, (0, 1, 2), (2, 3, 4), 1, "exact") == 2


def test_components_two_triangles(K_two):
    g = build_nearness_graph(K_two)
    part2 = components(g, 2)
    assert part2.q_star == 2
    part1 = components(g, 1)
    assert part1.q_star == 6
    assert ((0, 1, 2), (1, 2, 3)) in part1.classes
    part0 = components(g, 0)
    assert part0.q_star == 3
    # the shared edge is isolated; every vertex hangs together
    assert ((1, 2),) in part0.classes
    assert part0.class_of((0,)) == ((0,), (1,), (2,), (3,))
    assert q_star_vector(g) == (2, 6, 3)
    assert q_star_vector(g, "exact") == (2, 6, 3)


def test_components_chain(T_chain):
    g = build_nearness_graph(T_chain)
    part = components(g, 1)
    assert part.q_star == 8
    assert part.class_of((0, 1, 2)) == ((0, 1, 2), (1, 2, 3), (2, 3, 4))
    assert part.sizes.count(1) == 7
    assert part.class_of((0, 1)) == ((0, 1),)
    with pytest.raises(ArgumentError):
        part.class_of((9, 10))


def test_exact_components_split(K_bow):
    g = build_nearness_graph(K_bow)
    # both triangles meet only at the waist vertex: a level-0 edge, so the
    # exact partition at p=0 keeps them together
    part = components(g, 0, "exact")
    cls = part.class_of((0, 1, 2))
    assert (2, 3, 4) in cls
    # at p=1 their class has no level-1 edge under exact semantics
    at_least = components(g, 1)
    exact = components(g, 1, "exact")
    assert exact.q_star >= at_least.q_star
    for cl in exact.classes:
        if len(cl) > 1:
            levels = _edge_map(g)
            assert any(
                levels.get(frozenset({a, b})) == 1
                for i, a in enumerate(cl)
                for b in cl[i + 1:]
            )


def test_eccentricity_chain(T_chain):
    g = build_nearness_graph(T_chain)
    ecc, diameter = eccentricity(g, 1, within_component=True)
    assert ecc[(1, 2, 3)] == 1
    assert ecc[(0, 1, 2)] == 2
    assert ecc[(2, 3, 4)] == 2
    assert ecc[(0, 1)] == 0
    assert diameter == 2
    ecc_inf, diameter_inf = eccentricity(g, 1)
    assert ecc_inf[(1, 2, 3)] == INF
    assert diameter_inf == INF


def test_average_walk_length(T_chain):
    g = build_nearness_graph(T_chain)
    assert average_walk_length(g, 1, (0, 1, 2)) == Fraction(4, 3)
    with pytest.raises(UndefinedValueError):
        average_walk_length(g, 1, (0, 1))


def test_walk_argument_errors(K_two):
    g = build_nearness_graph(K_two)
    with pytest.raises(ArgumentError):
        p_distance(g, (0, 1, 2), (1, 2, 3), 0, "sometimes")
    with pytest.raises(ArgumentError):
        p_distance(g, (0, 1, 2), (1, 2, 3), -1)
    with pytest.raises(ArgumentError):
        distances_from(g, (0,), 1)  # a vertex cannot start a 1-walk
    with pytest.raises(ArgumentError):
        components(g, 3)


def test_all_pairs_matches_rows(K_two):
    g = build_nearness_graph(K_two)
    simplices, dist, cnt = all_pairs(g, 0)
    for i, s in enumerate(simplices):
        row = distances_from(g, s, 0)
        for j, t in enumerate(simplices):
            want = row.dist[t]
            assert dist[i, j] == (-1 if want == INF else want)
            assert cnt[i, j] == row.counts[t]
    assert [len(s) - 1 for s in simplices] == sorted(
        len(s) - 1 for s in simplices
    )
