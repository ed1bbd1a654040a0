"""Oriented incidence, multi-parameter Laplacians and spectral helpers.

Simplices carry the canonical orientation of their ascending vertex-id
tuple.  Removing the vertices at positions j_1 < ... < j_h of a (q)-simplex
contributes the sign (-1)^(sum j_i - h(h-1)/2); for h = 0 the sign is +1.
The operator B_{q,h} maps q-chains to (q-h)-chains and its matrix has entry
(i, j) = sign(sigma_j, tau_i) for tau_i a (q-h)-face of sigma_j, rows and
columns in chain-basis order.  The adjoint is the transpose.  All matrices
are integer valued; floating point appears only in the power iteration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from . import kernels
from .adjacency import DegreeQuery, DegreeReport
from .core import SimplicialComplex
from .errors import ArgumentError

POWER_TOL = 1e-12
POWER_MAXIT = 100_000


def incidence_sign(tau, sigma) -> int:
    """Sign of ``sigma`` inside ``tau`` (0 when sigma is not a face of tau).

    Both arguments are vertex collections; ascending order is canonical.
    ``incidence_sign(t, t)`` is +1.
    """
    t = tuple(sorted(set(tau)))
    s = set(sigma)
    if not s <= set(t):
        return 0
    removed = [i for i, v in enumerate(t) if v not in s]
    h = len(removed)
    return -1 if (sum(removed) - h * (h - 1) // 2) % 2 else 1


def _signed_incidence(c: SimplicialComplex, src_q: int, h: int) -> sp.csc_matrix:
    """Matrix of B_{src_q, h} in chain-basis order, stored by column.

    ``h = 0`` gives the identity; callers guarantee 0 <= h <= src_q <= dim.
    """
    n_src = c.f_vector[src_q]
    n_dst = c.f_vector[src_q - h]
    if h == 0:
        return sp.identity(n_src, dtype=np.int64, format="csc")
    rows, cols, data = [], [], []
    base = -(h * (h - 1) // 2)
    for j, simp in enumerate(c.by_dim[src_q]):
        for removed in itertools.combinations(range(src_q + 1), h):
            face = tuple(v for i, v in enumerate(simp) if i not in removed)
            sign = -1 if (sum(removed) + base) % 2 else 1
            rows.append(c.basis.position(face))
            cols.append(j)
            data.append(sign)
    return sp.csc_matrix(
        (data, (rows, cols)), shape=(n_dst, n_src), dtype=np.int64
    )


def boundary_matrix(c: SimplicialComplex, q: int, h: int) -> sp.csc_matrix:
    """The h-step boundary operator on q-chains, shape (f_{q-h}, f_q)."""
    if not 0 <= q <= c.dim:
        raise ArgumentError(f"q={q} outside 0..{c.dim}")
    if not 1 <= h <= q:
        raise ArgumentError(f"boundary step needs 1 <= h <= q, got h={h}, q={q}")
    return _signed_incidence(c, q, h)


def oriented_degree(c: SimplicialComplex, s1, s2, p: int, side: str) -> int:
    """Sum of sign products over the shared p-cofaces (side ``upper``) or
    shared p-faces (side ``lower``) of two distinct simplices."""
    a = c.check_member(s1)
    b = c.check_member(s2)
    if a == b:
        raise ArgumentError("oriented degree is defined for distinct simplices")
    if p < 0:
        raise ArgumentError(f"p={p} must be nonnegative")
    if side not in ("upper", "lower"):
        raise ArgumentError(f"side must be upper or lower, got {side!r}")
    if p > c.dim:
        return 0
    total = 0
    if side == "upper":
        for t in c.by_dim[p]:
            sa = incidence_sign(t, a)
            if sa:
                total += sa * incidence_sign(t, b)
    else:
        for g in c.by_dim[p]:
            sa = incidence_sign(a, g)
            if sa:
                total += sa * incidence_sign(b, g)
    return total


@dataclass(frozen=True)
class LaplacianBundle:
    """Up, down and total Laplacian of one (q, h, h') parameter choice.

    ``up`` is B_{q+h,h} B_{q+h,h}^t and ``down`` is B_{q,h'}^t B_{q,h'};
    whenever the needed boundary operator does not exist (q + h beyond the
    complex dimension, or h' > q) the corresponding part is a zero block.
    """

    q: int
    h: int
    hp: int
    up: sp.csr_matrix
    down: sp.csr_matrix

    @property
    def total(self) -> sp.csr_matrix:
        return (self.up + self.down).tocsr()


def laplacian(c: SimplicialComplex, q: int, h: int, hp: int) -> LaplacianBundle:
    """Multi-parameter Laplacian on q-chains; (h, h') = (1, 1) recovers the
    ordinary combinatorial Hodge Laplacian."""
    if not 0 <= q <= c.dim:
        raise ArgumentError(f"q={q} outside 0..{c.dim}")
    if h < 1 or hp < 1:
        raise ArgumentError("laplacian steps need h >= 1 and h' >= 1")
    n = c.f_vector[q]
    if q + h <= c.dim:
        b_up = _signed_incidence(c, q + h, h)
        up = (b_up @ b_up.T).tocsr()
    else:
        up = sp.csr_matrix((n, n), dtype=np.int64)
    if hp <= q:
        b_dn = _signed_incidence(c, q, hp)
        down = (b_dn.T @ b_dn).tocsr()
    else:
        down = sp.csr_matrix((n, n), dtype=np.int64)
    return LaplacianBundle(q=q, h=h, hp=hp, up=up, down=down)


@dataclass(frozen=True)
class AdjacencyMatrix01:
    """0/1 p-adjacency matrix of the q-simplices, chain-basis order."""

    q: int
    p: int
    matrix: np.ndarray


def adjacency_matrix(c: SimplicialComplex, q: int, p: int) -> AdjacencyMatrix01:
    """Symmetric 0/1 matrix of p-adjacency between q-simplices.

    For q = 0 the vertex convention applies (p must be 0): vertices are
    adjacent iff they span an edge.
    """
    if not 0 <= q <= c.dim:
        raise ArgumentError(f"q={q} outside 0..{c.dim}")
    ker = kernels.get()
    if q == 0:
        if p != 0:
            raise ArgumentError(f"vertices only support p=0 adjacency, got p={p}")
        edges = c.masks_by_dim[1] if c.dim >= 1 else np.zeros(0, dtype=np.uint64)
        return AdjacencyMatrix01(q=0, p=0, matrix=ker.vertex_adjacency01(c.f_vector[0], edges))
    if not 0 <= p < q:
        raise ArgumentError(f"adjacency matrix needs 0 <= p < q, got p={p}, q={q}")
    m = ker.adjacency_matrix01(
        c.masks_by_dim[q], c.sorted_masks_flat, c.sorted_offsets, c.dim, p
    )
    return AdjacencyMatrix01(q=q, p=p, matrix=np.asarray(m))


# ---------------------------------------------------------------------------
# degrees from boundary matrices alone
# ---------------------------------------------------------------------------


def _abs_incidence(c: SimplicialComplex, d_src: int, d_dst: int) -> np.ndarray:
    """Dense 0/1 face-containment matrix (f_dst x f_src), d_dst <= d_src."""
    return np.abs(_signed_incidence(c, d_src, d_src - d_dst).toarray())


def _adjacency_blocks(c: SimplicialComplex, q: int, p: int) -> dict[int, np.ndarray]:
    """For each candidate dimension q', the 0/1 matrix of p-adjacency between
    the q-simplices (rows) and the q'-simplices (columns), assembled purely
    from absolute incidence matrices:
    m_L(p) * (1 - m_L(p+1)) * (1 - m_U(q + q' - p))."""
    blocks = {}
    fp_q = _abs_incidence(c, q, p)
    for q2 in range(p, c.dim + 1):
        il = np.minimum(1, fp_q.T @ _abs_incidence(c, q2, p))
        if p + 1 <= min(q, q2):
            il1 = np.minimum(
                1, _abs_incidence(c, q, p + 1).T @ _abs_incidence(c, q2, p + 1)
            )
        else:
            il1 = np.zeros_like(il)
        pp = q + q2 - p
        if pp <= c.dim:
            iu = np.minimum(
                1, _abs_incidence(c, pp, q) @ _abs_incidence(c, pp, q2).T
            )
        else:
            iu = np.zeros_like(il)
        blocks[q2] = il * (1 - il1) * (1 - iu)
    return blocks


def theorem_degrees(c: SimplicialComplex, q: int, p: int, family: str) -> DegreeReport:
    """Degrees of all q-simplices computed from boundary matrices only.

    ``family`` is ``L`` (shared p-face), ``U`` (shared p-coface), ``A``
    (p-adjacency) or ``A*`` (maximal p-adjacency).  Counting a candidate at
    most once happens through min(1, .) clamps on products of absolute
    incidence matrices.  For ``L`` and ``U`` the simplex's own contribution
    is removed by subtracting its self-indicator (for ``L`` that indicator is
    always 1; for ``U`` it is 0 exactly when the simplex has no p-coface).
    Results match :func:`simpcent.adjacency.degree` on every legal input.
    """
    if not 0 <= q <= c.dim:
        raise ArgumentError(f"q={q} outside 0..{c.dim}")
    nq = c.f_vector[q]
    if family == "L":
        if not 0 <= p <= q:
            raise ArgumentError(f"family L needs 0 <= p <= q, got p={p}, q={q}")
        deg = np.zeros(nq, dtype=np.int64)
        fp_q = _abs_incidence(c, q, p)
        for q2 in range(p, c.dim + 1):
            ind = np.minimum(1, fp_q.T @ _abs_incidence(c, q2, p))
            deg += ind.sum(axis=1)
            if q2 == q:
                deg -= np.diag(ind)
        query = DegreeQuery("lower", p=p)
    elif family == "U":
        if not q <= p <= c.dim:
            raise ArgumentError(
                f"family U needs q <= p <= dim K, got p={p}, q={q}"
            )
        deg = np.zeros(nq, dtype=np.int64)
        # rows: q-simplices, columns: the p-simplices containing them
        up_q = _abs_incidence(c, p, q)
        for q2 in range(0, p + 1):
            ind = np.minimum(1, up_q @ _abs_incidence(c, p, q2).T)
            deg += ind.sum(axis=1)
            if q2 == q:
                deg -= np.diag(ind)
        query = DegreeQuery("upper", p=p)
    elif family in ("A", "A*"):
        if q == 0 or not 0 <= p < q:
            raise ArgumentError(
                f"family {family} needs 0 <= p < q with q >= 1, got p={p}, q={q}"
            )
        blocks = _adjacency_blocks(c, q, p)
        if family == "A":
            deg = np.zeros(nq, dtype=np.int64)
            for b in blocks.values():
                deg += b.sum(axis=1)
            query = DegreeQuery("adjacency", p=p)
        else:
            deg = np.zeros(nq, dtype=np.int64)
            dims = sorted(blocks)
            for q2 in dims:
                dominated = np.zeros_like(blocks[q2])
                for q3 in dims:
                    if q3 <= q2:
                        continue
                    # face matrix of q2-simplices inside q3-simplices
                    f23 = _abs_incidence(c, q3, q2)
                    dominated += blocks[q3] @ f23.T
                keep = blocks[q2] * (1 - np.minimum(1, dominated))
                deg += keep.sum(axis=1)
            query = DegreeQuery("maximal_adjacency", p=p)
    else:
        raise ArgumentError(f"unknown theorem degree family {family!r}")
    values = {s: int(v) for s, v in zip(c.by_dim[q], deg)}
    return DegreeReport(q=q, query=query, values=values)


# ---------------------------------------------------------------------------
# principal eigenvector
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EigenResult:
    """Principal eigenpair of an adjacency matrix.

    ``vector`` is entrywise nonnegative and sums to 1.  On a reducible
    matrix the iteration runs per connected component and the component with
    the largest eigenvalue wins (ties: the component containing the smallest
    chain-basis index); its node indices are recorded in ``component``.  A
    matrix with no edges at all yields the uniform vector with eigenvalue 0
    and the ``degenerate`` flag.
    """

    eigenvalue: float
    vector: np.ndarray
    residual: float
    iterations: int
    converged: bool
    degenerate: bool
    component: tuple[int, ...] | None


def principal_eigenvector(
    a, tol: float = POWER_TOL, maxit: int = POWER_MAXIT
) -> EigenResult:
    """Power iteration (uniform start, +identity shift) on an adjacency
    matrix given as :class:`AdjacencyMatrix01` or a plain symmetric array."""
    if isinstance(a, AdjacencyMatrix01):
        a = a.matrix
    mat = np.asarray(a, dtype=np.float64)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ArgumentError("adjacency matrix must be square")
    if mat.shape[0] == 0:
        raise ArgumentError("adjacency matrix must be nonempty")
    if not np.array_equal(mat, mat.T):
        raise ArgumentError("adjacency matrix must be symmetric")

    n = mat.shape[0]
    n_comp, labels = connected_components(
        sp.csr_matrix(mat != 0), directed=False
    )
    comps = [np.nonzero(labels == k)[0] for k in range(n_comp)]
    comps.sort(key=lambda idx: int(idx[0]))

    ker = kernels.get()
    best = None
    for idx in comps:
        sub = np.ascontiguousarray(mat[np.ix_(idx, idx)])
        lam, vec, its, conv = ker.power_iteration(sub, tol, maxit)
        if best is None or lam > best[0]:
            best = (float(lam), np.asarray(vec), int(its), bool(conv), idx)

    lam, vec, its, conv, idx = best
    if lam == 0.0:
        vector = np.full(n, 1.0 / n)
        residual = float(np.max(np.abs(mat @ vector)))
        return EigenResult(
            eigenvalue=0.0,
            vector=vector,
            residual=residual,
            iterations=its,
            converged=conv,
            degenerate=True,
            component=None,
        )
    full = np.zeros(n)
    full[idx] = np.abs(vec)
    full = full / full.sum()
    residual = float(np.max(np.abs(mat @ full - lam * full)))
    return EigenResult(
        eigenvalue=lam,
        vector=full,
        residual=residual,
        iterations=its,
        converged=conv,
        degenerate=False,
        component=tuple(int(i) for i in idx),
    )
