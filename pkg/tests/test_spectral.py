"""Oriented incidence, Laplacians, adjacency matrices, eigenvectors."""

import math

import numpy as np
import pytest

from simpcent.adjacency import DegreeQuery, degree
from simpcent.errors import ArgumentError
from simpcent.oracle import naive_oriented_degree, naive_sign
from simpcent.spectral import (
    adjacency_matrix,
    boundary_matrix,
    incidence_sign,
    laplacian,
    oriented_degree,
    principal_eigenvector,
    theorem_degrees,
)


def test_incidence_sign_basics():
    assert incidence_sign((0, 1, 2), (0, 1, 2)) == 1
    # removing position j flips the sign j times
    assert incidence_sign((0, 1, 2), (1, 2)) == 1
    assert incidence_sign((0, 1, 2), (0, 2)) == -1
    assert incidence_sign((0, 1, 2), (0, 1)) == 1
    assert incidence_sign((0, 1, 2), (3, 4)) == 0
    assert incidence_sign((0, 1), (2,)) == 0


def test_incidence_sign_matches_permutation_parity(K_tet, K_two, T_chain):
    # the naive sign moves the removed vertices to the front and takes the
    # parity of that permutation; both rules must agree on every face pair
    for c in (K_tet, K_two, T_chain):
        for s in c.iter_simplices():
            for t in c.iter_simplices():
                assert incidence_sign(t, s) == naive_sign(t, s)


def test_boundary_matrix_classic_triangle(K_tri):
    b = boundary_matrix(K_tri, 2, 1).toarray()
    # rows follow [01, 02, 12]; the boundary of 012 is [12] - [02] + [01]
    assert b.shape == (3, 1)
    assert b[:, 0].tolist() == [1, -1, 1]


def test_boundary_shapes_and_composition(all_fixtures):
    for c in all_fixtures.values():
        for q in range(1, c.dim + 1):
            for h in range(1, q + 1):
                b = boundary_matrix(c, q, h)
                assert b.shape == (c.f_vector[q - h], c.f_vector[q])
        for q in range(2, c.dim + 1):
            prod = boundary_matrix(c, q - 1, 1) @ boundary_matrix(c, q, 1)
            assert abs(prod).sum() == 0


def test_boundary_matrix_errors(K_two):
    with pytest.raises(ArgumentError):
        boundary_matrix(K_two, 3, 1)
    with pytest.raises(ArgumentError):
        boundary_matrix(K_two, 1, 0)
    with pytest.raises(ArgumentError):
        boundary_matrix(K_two, 1, 2)


def test_oriented_degree_edge_pair(K_tet):
    e01 = (0, 1)
    e02 = (0, 2)
    # one shared vertex, signs -1 * -1; one shared triangle, signs +1 * -1
    assert oriented_degree(K_tet, e01, e02, 0, "lower") == 1
    assert oriented_degree(K_tet, e01, e02, 2, "upper") == -1
    assert oriented_degree(K_tet, e01, (2, 3), 0, "lower") == 0
    assert oriented_degree(K_tet, e01, e02, 5, "upper") == 0


def test_oriented_degree_matches_oracle(K_two, K_clust4):
    for c in (K_two, K_clust4):
        simps = list(c.iter_simplices())
        for a in simps:
            for b in simps:
                if a == b:
                    continue
                for p in range(c.dim + 1):
                    for side in ("upper", "lower"):
                        assert oriented_degree(c, a, b, p, side) == (
                            naive_oriented_degree(c, a, b, p, side)
                        )


def test_oriented_degree_errors(K_two):
    with pytest.raises(ArgumentError):
        oriented_degree(K_two, (0, 1), (0, 1), 0, "lower")
    with pytest.raises(ArgumentError):
        oriented_degree(K_two, (0, 1), (0, 2), -1, "lower")
    with pytest.raises(ArgumentError):
        oriented_degree(K_two, (0, 1), (0, 2), 0, "sideways")


def test_laplacian_triangle_is_scalar(K_tri):
    bundle = laplacian(K_tri, 1, 1, 1)
    # each edge: one triangle above, two vertices below; intersecting edge
    # pairs cancel between the up and down parts
    assert np.array_equal(bundle.total.toarray(), 3 * np.eye(3))


def test_laplacian_tet_values(K_tet):
    l11 = laplacian(K_tet, 1, 1, 1).total.toarray()
    assert np.array_equal(l11, 4 * np.eye(6))
    l21 = laplacian(K_tet, 1, 2, 1)
    # the only two-step coface is the solid tet, so the up part is the rank
    # one outer product of its edge signs (order 01, 02, 03, 12, 13, 23)
    v = np.array([1, -1, 1, 1, -1, 1])
    assert np.array_equal(l21.up.toarray(), np.outer(v, v))
    assert np.array_equal(np.diag(l21.total.toarray()), np.full(6, 3))


def test_laplacian_zero_blocks(K_tri, K_two):
    top = laplacian(K_tri, 2, 1, 1)
    assert abs(top.up).sum() == 0
    assert top.down.toarray().tolist() == [[3]]
    verts = laplacian(K_two, 0, 1, 1)
    assert abs(verts.down).sum() == 0
    # vertex up Laplacian has the graph degrees on the diagonal
    assert np.diag(verts.up.toarray()).tolist() == [2, 3, 3, 2]


def test_laplacian_entry_formula(K_two):
    bundle = laplacian(K_two, 1, 1, 1)
    total = bundle.total.toarray()
    edges = K_two.by_dim[1]
    assert [K_two.label(e) for e in edges] == ["0-1", "0-2", "1-2", "1-3", "2-3"]
    ups = [degree(K_two, e, DegreeQuery("upper_incident", h=1)) for e in edges]
    assert np.diag(total).tolist() == [u + 2 for u in ups]
    for i, a in enumerate(edges):
        for j, b in enumerate(edges):
            if i == j:
                continue
            want = oriented_degree(K_two, a, b, 2, "upper") + oriented_degree(
                K_two, a, b, 0, "lower"
            )
            assert total[i, j] == want
    # one cancelling pair and one purely lower pair
    assert total[0, 2] == 0
    i13 = edges.index((1, 3))
    assert total[0, i13] == -1


def test_laplacian_symmetric_psd(all_fixtures):
    rng = np.random.default_rng(5)
    for c in all_fixtures.values():
        for q in range(c.dim + 1):
            for h in range(1, max(c.dim - q, 1) + 1):
                for hp in range(1, max(q, 1) + 1):
                    m = laplacian(c, q, h, hp).total.toarray()
                    assert np.array_equal(m, m.T)
                    for _ in range(5):
                        x = rng.integers(-3, 4, size=m.shape[0])
                        assert x @ m @ x >= 0


def test_laplacian_errors(K_two):
    with pytest.raises(ArgumentError):
        laplacian(K_two, 5, 1, 1)
    with pytest.raises(ArgumentError):
        laplacian(K_two, 1, 0, 1)
    with pytest.raises(ArgumentError):
        laplacian(K_two, 1, 1, 0)


def test_adjacency_matrix_triangles(K_two, K_tet, K_wind):
    m = adjacency_matrix(K_two, 2, 1).matrix
    assert m.tolist() == [[0, 1], [1, 0]]
    # every pair of tet triangles shares an edge and the solid tet above
    assert abs(adjacency_matrix(K_tet, 2, 1).matrix).sum() == 0
    w = adjacency_matrix(K_wind, 2, 0).matrix
    assert np.array_equal(w, np.ones((3, 3)) - np.eye(3))


def test_adjacency_matrix_vertices(K_two):
    m = adjacency_matrix(K_two, 0, 0).matrix
    want = [
        [0, 1, 1, 0],
        [1, 0, 1, 1],
        [1, 1, 0, 1],
        [0, 1, 1, 0],
    ]
    assert m.tolist() == want


def test_adjacency_matrix_errors(K_two):
    with pytest.raises(ArgumentError):
        adjacency_matrix(K_two, 0, 1)
    with pytest.raises(ArgumentError):
        adjacency_matrix(K_two, 2, 2)
    with pytest.raises(ArgumentError):
        adjacency_matrix(K_two, 3, 0)


def test_theorem_degrees_match_direct(K_two, K_bow, K_clust4):
    for c in (K_two, K_bow, K_clust4):
        for q in range(c.dim + 1):
            for p in range(q + 1):
                rep = theorem_degrees(c, q, p, "L")
                for s, v in rep.values.items():
                    assert v == degree(c, s, DegreeQuery("lower", p=p))
            for p in range(q, c.dim + 1):
                rep = theorem_degrees(c, q, p, "U")
                for s, v in rep.values.items():
                    assert v == degree(c, s, DegreeQuery("upper", p=p))
            for p in range(q):
                for fam, kind in (("A", "adjacency"), ("A*", "maximal_adjacency")):
                    rep = theorem_degrees(c, q, p, fam)
                    for s, v in rep.values.items():
                        assert v == degree(c, s, DegreeQuery(kind, p=p))


def test_theorem_degrees_errors(K_two):
    with pytest.raises(ArgumentError):
        theorem_degrees(K_two, 1, 2, "L")
    with pytest.raises(ArgumentError):
        theorem_degrees(K_two, 1, 0, "U")
    with pytest.raises(ArgumentError):
        theorem_degrees(K_two, 0, 0, "A")
    with pytest.raises(ArgumentError):
        theorem_degrees(K_two, 2, 2, "A*")
    with pytest.raises(ArgumentError):
        theorem_degrees(K_two, 1, 0, "X")


def test_principal_eigenvector_two_triangles(K_two):
    res = principal_eigenvector(adjacency_matrix(K_two, 2, 1))
    assert res.eigenvalue == pytest.approx(1.0, abs=1e-10)
    assert np.allclose(res.vector, [0.5, 0.5], atol=1e-10)
    assert res.residual <= 1e-10
    assert res.converged and not res.degenerate
    assert res.component == (0, 1)


def test_principal_eigenvector_star():
    # center joined to three leaves and no other edges
    a = np.zeros((4, 4))
    a[0, 1:] = 1
    a[1:, 0] = 1
    res = principal_eigenvector(a)
    root3 = math.sqrt(3.0)
    assert res.eigenvalue == pytest.approx(root3, abs=1e-10)
    assert res.vector[0] == pytest.approx(root3 / (root3 + 3), abs=1e-10)
    assert np.allclose(res.vector[1:], 1 / (root3 + 3), atol=1e-10)
    assert res.residual <= 1e-10
    assert res.vector.sum() == pytest.approx(1.0, abs=1e-12)


def test_principal_eigenvector_degenerate(K_tet):
    res = principal_eigenvector(adjacency_matrix(K_tet, 2, 1))
    assert res.degenerate
    assert res.eigenvalue == 0.0
    assert np.allclose(res.vector, 0.25)
    assert res.component is None


def test_principal_eigenvector_component_choice():
    # a 2-cycle beats an isolated node; ties go to the earliest component
    a = np.zeros((3, 3))
    a[0, 1] = a[1, 0] = 1
    res = principal_eigenvector(a)
    assert res.component == (0, 1)
    assert res.vector[2] == 0.0
    b = np.zeros((4, 4))
    b[0, 1] = b[1, 0] = 1
    b[2, 3] = b[3, 2] = 1
    res = principal_eigenvector(b)
    assert res.component == (0, 1)
    assert np.allclose(res.vector, [0.5, 0.5, 0.0, 0.0], atol=1e-10)


def test_principal_eigenvector_validation():
    with pytest.raises(ArgumentError):
        principal_eigenvector(np.zeros((2, 3)))
    with pytest.raises(ArgumentError):
        principal_eigenvector(np.zeros((0, 0)))
    with pytest.raises(ArgumentError):
        principal_eigenvector(np.array([[0.0, 1.0], [0.0, 0.0]]))
