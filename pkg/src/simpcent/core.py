"""Finite abstract simplicial complexes with a fixed chain basis.

A complex is built from a list of generating simplices (usually its facets),
closed downward, and frozen.  Every module in the package addresses simplices
through the chain basis fixed here: within each dimension the simplices are
ordered lexicographically on their ascending vertex-id tuples, and the global
node order is dimension-major (all vertices, then all edges, ...).

Vertex sets are additionally stored as 64-bit masks (one bit per vertex id),
which is what the numerical kernels operate on.  This caps the number of
vertices at 64; the intended scale is far below that.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, EmptyComplexError, MembershipError

# A simplex is an ascending tuple of vertex ids.
Simplex = tuple[int, ...]

MAX_VERTICES = 64   # one uint64 mask per simplex
MAX_FACET_SIZE = 25  # downward closure of a k-set enumerates 2^k - 1 faces


@dataclass(frozen=True)
class VertexTable:
    """Bidirectional mapping between vertex labels and integer ids.

    Ids are assigned by sorting the labels lexicographically, so the same
    label set always produces the same ids.
    """

    labels: tuple[str, ...]

    @classmethod
    def from_labels(cls, labels) -> "VertexTable":
        return cls(tuple(sorted(set(labels))))

    def id_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise MembershipError(f"unknown vertex label {label!r}")

    def label_of(self, vid: int) -> str:
        return self.labels[vid]

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = {lab: i for i, lab in enumerate(self.labels)}
            self.__dict__["_index_cache"] = idx
        return idx


class ChainBasis:
    """Fixed ordering of the simplices of one complex.

    ``order(q)`` lists the q-simplices lexicographically; ``position`` gives
    the index of a simplex within its own dimension and ``global_index`` its
    position in the dimension-major concatenation.  All matrices and report
    rows produced by this package are indexed through this ordering.
    """

    def __init__(self, by_dim: tuple[tuple[Simplex, ...], ...]):
        self._by_dim = by_dim
        self._pos: dict[Simplex, tuple[int, int]] = {}
        for q, simps in enumerate(by_dim):
            for i, s in enumerate(simps):
                self._pos[s] = (q, i)
        counts = [len(s) for s in by_dim]
        self._offsets = tuple(np.concatenate([[0], np.cumsum(counts)]).tolist())

    def order(self, q: int) -> tuple[Simplex, ...]:
        if not 0 <= q < len(self._by_dim):
            raise ArgumentError(f"no simplices of dimension {q}")
        return self._by_dim[q]

    def position(self, sigma: Simplex) -> int:
        try:
            return self._pos[tuple(sigma)][1]
        except KeyError:
            raise MembershipError(f"simplex {sigma} not in complex")

    def global_index(self, sigma: Simplex) -> int:
        try:
            q, i = self._pos[tuple(sigma)]
        except KeyError:
            raise MembershipError(f"simplex {sigma} not in complex")
        return self._offsets[q] + i

    @property
    def offsets(self) -> tuple[int, ...]:
        return self._offsets


class SimplicialComplex:
    """A finite abstract simplicial complex, downward closed and immutable.

    Do not call the constructor directly; use :func:`build_complex`.
    """

    def __init__(self, vertices: VertexTable, by_dim: tuple[tuple[Simplex, ...], ...]):
        self.vertices = vertices
        self.by_dim = by_dim
        self.dim = len(by_dim) - 1
        self.f_vector = tuple(len(s) for s in by_dim)
        self.n_simplices = sum(self.f_vector)
        self.basis = ChainBasis(by_dim)

        # uint64 vertex mask per simplex, aligned with the basis order
        self.masks_by_dim = tuple(
            np.array([_mask(s) for s in simps], dtype=np.uint64) for simps in by_dim
        )
        self.all_masks = (
            np.concatenate(self.masks_by_dim)
            if self.n_simplices
            else np.zeros(0, dtype=np.uint64)
        )
        self.node_dim = np.repeat(
            np.arange(self.dim + 1, dtype=np.int64), self.f_vector
        )
        self.dim_offsets = np.array(self.basis.offsets, dtype=np.int64)

        # per-dimension masks sorted by value, flattened, for fast membership
        self.sorted_masks_flat = np.concatenate(
            [np.sort(m) for m in self.masks_by_dim]
        ) if self.n_simplices else np.zeros(0, dtype=np.uint64)
        self.sorted_offsets = self.dim_offsets.copy()

        self._member = frozenset(int(m) for m in self.all_masks)

        # facets: simplices with no coface one dimension up
        flags = []
        for q, masks in enumerate(self.masks_by_dim):
            if q == self.dim:
                flags.append(np.ones(len(masks), dtype=bool))
            else:
                up = self.masks_by_dim[q + 1]
                contained = (masks[:, None] & up[None, :]) == masks[:, None]
                flags.append(~contained.any(axis=1))
        self.facet_flags = tuple(flags)
        facets = []
        for q, simps in enumerate(by_dim):
            for i, s in enumerate(simps):
                if flags[q][i]:
                    facets.append(s)
        self.facets = tuple(facets)

        for arr in (self.all_masks, self.node_dim, self.dim_offsets,
                    self.sorted_masks_flat, self.sorted_offsets, *self.masks_by_dim):
            arr.flags.writeable = False

    # -- membership and lookup -------------------------------------------

    def contains(self, sigma) -> bool:
        """Membership test on a tuple of vertex ids (labels go through
        :meth:`simplex`)."""
        s = tuple(sigma)
        if not s or len(set(s)) != len(s) or any(
            not isinstance(v, (int, np.integer)) or not 0 <= v < len(self.vertices)
            for v in s
        ):
            return False
        return _mask(sorted(s)) in self._member

    def check_member(self, sigma) -> Simplex:
        s = tuple(sorted(set(sigma)))
        if len(s) != len(tuple(sigma)):
            raise ArgumentError(f"repeated vertex in simplex {tuple(sigma)}")
        if not self.contains(s):
            raise MembershipError(f"simplex {s} not in complex")
        return s

    def simplex(self, *labels) -> Simplex:
        """Resolve vertex labels to the canonical ascending-id simplex."""
        if len(labels) == 1 and not isinstance(labels[0], (str, int)):
            labels = tuple(labels[0])
        ids = sorted(self.vertices.id_of(str(lab)) for lab in labels)
        if len(set(ids)) != len(ids):
            raise ArgumentError(f"repeated vertex label in {labels}")
        s = tuple(ids)
        if not self.contains(s):
            raise MembershipError(f"simplex {labels} not in complex")
        return s

    def label(self, sigma: Simplex) -> str:
        """Render a simplex as its sorted vertex labels joined by '-'."""
        return "-".join(self.vertices.label_of(v) for v in sigma)

    def simplices(self, q: int) -> tuple[Simplex, ...]:
        return self.basis.order(q)

    def iter_simplices(self):
        """All simplices in global order: by dimension, then lexicographic."""
        for simps in self.by_dim:
            yield from simps

    def mask_of(self, sigma: Simplex) -> int:
        return _mask(sigma)

    def member_mask(self, mask: int) -> bool:
        return mask in self._member

    def global_simplex(self, g: int) -> Simplex:
        """Inverse of ``basis.global_index``."""
        q = int(np.searchsorted(self.dim_offsets, g, side="right")) - 1
        return self.by_dim[q][g - int(self.dim_offsets[q])]

    # -- structural queries ----------------------------------------------

    def facets_containing(self, sigma) -> tuple[Simplex, ...]:
        s = self.check_member(sigma)
        m = _mask(s)
        return tuple(f for f in self.facets if m & _mask(f) == m)

    def is_facet(self, sigma) -> bool:
        s = self.check_member(sigma)
        q = len(s) - 1
        return bool(self.facet_flags[q][self.basis.position(s)])

    # -- identity ---------------------------------------------------------

    def facet_labels(self) -> tuple[tuple[str, ...], ...]:
        """Facets as label tuples, each sorted, the list sorted."""
        return tuple(
            sorted(tuple(self.vertices.label_of(v) for v in f) for f in self.facets)
        )

    def digest(self) -> str:
        """Hex digest of the canonical facet listing; identifies the complex."""
        h = hashlib.sha256()
        for f in self.facet_labels():
            h.update(" ".join(f).encode("utf-8"))
            h.update(b"\n")
        return h.hexdigest()

    def relabeled(self, mapping: dict) -> "SimplicialComplex":
        """Rebuild the complex with every vertex label replaced via ``mapping``."""
        new_facets = [
            [mapping[self.vertices.label_of(v)] for v in f] for f in self.facets
        ]
        return build_complex(new_facets)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.vertices.labels == other.vertices.labels
            and self.by_dim == other.by_dim
        )

    def __repr__(self) -> str:
        return f"SimplicialComplex(f_vector={self.f_vector})"


def _mask(sigma) -> int:
    m = 0
    for v in sigma:
        m |= 1 << v
    return m


def build_complex(generators, labels=None) -> SimplicialComplex:
    """Build a complex as the downward closure of the given simplices.

    ``generators`` is an iterable of vertex-label collections (labels are
    taken as strings; ints are accepted and stringified).  ``labels`` may add
    extra isolated vertices.  Raises :class:`EmptyComplexError` when no
    simplex is given and :class:`ArgumentError` on repeated vertices inside
    one generator or on more than 64 distinct vertices.
    """
    gen_sets = []
    all_labels = set(str(lab) for lab in labels) if labels else set()
    for g in generators:
        labs = [str(lab) for lab in g]
        if not labs:
            raise ArgumentError("empty vertex set cannot form a simplex")
        if len(set(labs)) != len(labs):
            raise ArgumentError(f"repeated vertex label in generator {labs}")
        if len(labs) > MAX_FACET_SIZE:
            raise ArgumentError(
                f"generator with {len(labs)} vertices exceeds the closure "
                f"guard of {MAX_FACET_SIZE}"
            )
        gen_sets.append(labs)
        all_labels.update(labs)
    if not gen_sets and not all_labels:
        raise EmptyComplexError("no simplices given")
    if len(all_labels) > MAX_VERTICES:
        raise ArgumentError(
            f"{len(all_labels)} vertices exceed the {MAX_VERTICES}-vertex "
            "mask representation"
        )

    table = VertexTable.from_labels(all_labels)
    closure: set[Simplex] = set((table.id_of(lab),) for lab in all_labels)
    for labs in gen_sets:
        ids = sorted(table.id_of(lab) for lab in labs)
        for k in range(1, len(ids) + 1):
            closure.update(itertools.combinations(ids, k))

    top = max(len(s) for s in closure) - 1
    by_dim = tuple(
        tuple(sorted(s for s in closure if len(s) == q + 1)) for q in range(top + 1)
    )
    return SimplicialComplex(table, by_dim)


def faces(sigma, p: int) -> tuple[Simplex, ...]:
    """All p-dimensional faces of a simplex, in lexicographic order."""
    s = tuple(sorted(set(sigma)))
    if len(s) != len(tuple(sigma)):
        raise ArgumentError(f"repeated vertex in simplex {tuple(sigma)}")
    q = len(s) - 1
    if not 0 <= p <= q:
        raise ArgumentError(f"p={p} outside 0..{q} for a {q}-simplex")
    return tuple(itertools.combinations(s, p + 1))
