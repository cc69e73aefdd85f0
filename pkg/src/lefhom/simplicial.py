"""Order complexes and simplicial homology.

The homology of the finite space carried by a complex's face order is
computed here as simplicial homology of the order complex: the abstract
simplicial complex whose simplices are the chains of the face poset.
That simplicial stand-in has the same homology as the finite space, which
is what justifies calling :func:`finite_space_homology` the singular
homology of the space.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .complexes import LefschetzComplex
from .errors import TooManySimplices, UnknownCellReference
from .exact import ExactMatrix, RingSpec, ZZ
from .homology import HomologyProfile, profile_from_boundaries

__all__ = [
    "SimplicialComplex",
    "order_complex",
    "simplicial_homology",
    "relative_simplicial_homology",
    "finite_space_homology",
    "relative_finite_space_homology",
    "simplicial_excision_check",
]

DEFAULT_SIMPLEX_CAP = 200_000


def _merge_orders(first: Sequence[str], second: Sequence[str]) -> tuple:
    """Merge two vertex orders that agree on their common vertices."""
    in_first, in_second = set(first), set(second)
    out = []
    j = 0
    for x in first:
        if x in in_second:
            while second[j] != x:
                y = second[j]
                if y in in_first:
                    raise ValueError(f"vertex orders disagree near {x!r}/{y!r}")
                out.append(y)
                j += 1
            j += 1
        out.append(x)
    out.extend(second[j:])
    return tuple(out)


class SimplicialComplex:
    """Finite family of non-empty vertex sets closed under taking subsets.

    A fixed linear order on the vertices orients every simplex; simplices
    are stored as tuples sorted by that order, and boundary signs are the
    usual alternating signs on vertex deletion.
    """

    __slots__ = ("vertex_order", "_pos", "_simplices", "_by_dim")

    def __init__(self, simplices: Iterable, vertex_order: Optional[Sequence[str]] = None):
        families = {frozenset(s) for s in simplices}
        if frozenset() in families:
            raise ValueError("the empty simplex is not allowed")
        vertices = set()
        for s in families:
            vertices |= s
        if vertex_order is None:
            vertex_order = sorted(vertices)
        else:
            if set(vertex_order) < vertices:
                raise ValueError("vertex_order misses some vertices")
            vertex_order = [v for v in vertex_order]
        self.vertex_order = tuple(vertex_order)
        self._pos = {v: i for i, v in enumerate(self.vertex_order)}
        if len(self._pos) != len(self.vertex_order):
            raise ValueError("vertex_order has repeats")

        # closure under non-empty subsets, checked not repaired
        for s in families:
            for v in s:
                if len(s) > 1 and (s - {v}) not in families:
                    raise ValueError(f"missing face {sorted(s - {v})} of {sorted(s)}")
        self._simplices = frozenset(families)
        by_dim = {}
        for s in families:
            ordered = tuple(sorted(s, key=self._pos.__getitem__))
            by_dim.setdefault(len(s) - 1, []).append(ordered)
        self._by_dim = {q: tuple(sorted(sims, key=lambda t: tuple(self._pos[v] for v in t)))
                        for q, sims in by_dim.items()}

    @classmethod
    def from_maximal(cls, faces: Iterable, vertex_order=None) -> "SimplicialComplex":
        closed = set()
        for face in faces:
            face = frozenset(face)
            if not face:
                continue
            stack = [face]
            while stack:
                s = stack.pop()
                if s in closed or not s:
                    continue
                closed.add(s)
                for v in s:
                    if len(s) > 1:
                        stack.append(s - {v})
        return cls(closed, vertex_order)

    @property
    def simplices(self) -> frozenset:
        return self._simplices

    @property
    def vertices(self) -> tuple:
        return self.vertex_order

    @property
    def dim(self) -> int:
        return max(self._by_dim, default=-1)

    def simplices_of_dim(self, q: int) -> tuple:
        return self._by_dim.get(q, ())

    def __len__(self) -> int:
        return len(self._simplices)

    def __contains__(self, simplex) -> bool:
        return frozenset(simplex) in self._simplices

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self._simplices <= other._simplices

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        order = _merge_orders(self.vertex_order, other.vertex_order)
        return SimplicialComplex(self._simplices | other._simplices, order)

    def intersection(self, other: "SimplicialComplex") -> "SimplicialComplex":
        order = [v for v in self.vertex_order if v in other._pos]
        return SimplicialComplex(self._simplices & other._simplices, order)

    def full_subcomplex(self, vertices: Iterable) -> "SimplicialComplex":
        keep = set(vertices)
        order = [v for v in self.vertex_order if v in keep]
        return SimplicialComplex((s for s in self._simplices if s <= keep), order)

    def boundary_matrix(self, q: int, ring: RingSpec = ZZ) -> ExactMatrix:
        rows = self.simplices_of_dim(q - 1)
        cols = self.simplices_of_dim(q)
        rindex = {s: i for i, s in enumerate(rows)}
        entries = {}
        for j, simplex in enumerate(cols):
            for i, _ in enumerate(simplex):
                face = simplex[:i] + simplex[i + 1:]
                if face:
                    sign = 1 if i % 2 == 0 else -1
                    entries[(rindex[face], j)] = sign
        return ExactMatrix(len(rows), len(cols), entries, ring)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialComplex)
                and self._simplices == other._simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self._simplices)} simplices, dim {self.dim})"


def order_complex(X: LefschetzComplex,
                  max_simplices: int = DEFAULT_SIMPLEX_CAP) -> SimplicialComplex:
    """All non-empty chains of the face poset, as a simplicial complex.

    The vertex order lists cells by (dimension, id); on every chain it
    refines the face order, so chain tuples are consistently oriented.
    Chain counting is exponential in poset height, hence the cap.
    """
    poset = X.face_poset()
    cells_sorted = [c.id for c in X.cells]
    chains_ending = {}
    total = 0
    for x in cells_sorted:
        acc = [(x,)]
        for y in sorted(poset.below(x) - {x}):
            acc.extend(chain + (x,) for chain in chains_ending[y])
        chains_ending[x] = acc
        total += len(acc)
        if total > max_simplices:
            raise TooManySimplices(max_simplices)
    simplices = [chain for chains in chains_ending.values() for chain in chains]
    return SimplicialComplex(simplices, vertex_order=cells_sorted)


def simplicial_homology(K: SimplicialComplex, ring: RingSpec = ZZ) -> HomologyProfile:
    """Homology of the simplicial chain complex with alternating signs."""
    top = K.dim
    sizes = [len(K.simplices_of_dim(q)) for q in range(top + 1)]
    return profile_from_boundaries(
        ring, sizes, lambda q: K.boundary_matrix(q).cast(ring))


def relative_simplicial_homology(K: SimplicialComplex, L: SimplicialComplex,
                                 ring: RingSpec = ZZ) -> HomologyProfile:
    """Homology of the quotient chain complex C(K)/C(L) for a subcomplex L.

    Unlike the cell-complex side there is no open-complement shortcut here:
    the rows and columns of L are deleted from K's boundary matrices.
    """
    if not L.is_subcomplex_of(K):
        raise ValueError("relative homology needs a subcomplex")
    top = K.dim
    sizes = []
    dropped = {}
    for q in range(top + 1):
        sims = K.simplices_of_dim(q)
        dropped[q] = [i for i, s in enumerate(sims) if s in L]
        sizes.append(len(sims) - len(dropped[q]))

    def boundary(q: int) -> ExactMatrix:
        return K.boundary_matrix(q).cast(ring).drop(
            rows=dropped.get(q - 1, []), cols=dropped.get(q, []))

    return profile_from_boundaries(ring, sizes, boundary)


def finite_space_homology(X: LefschetzComplex, ring: Optional[RingSpec] = None,
                          max_simplices: int = DEFAULT_SIMPLEX_CAP) -> HomologyProfile:
    """Singular homology of the finite space of X, via its order complex."""
    ring = X.ring if ring is None else ring
    key = ("finite-space", ring)
    cached = X._homology_cache.get(key)
    if cached is None:
        cached = simplicial_homology(order_complex(X, max_simplices), ring)
        X._homology_cache[key] = cached
    return cached


def relative_finite_space_homology(X: LefschetzComplex, subspace: Iterable,
                                   ring: Optional[RingSpec] = None,
                                   max_simplices: int = DEFAULT_SIMPLEX_CAP) -> HomologyProfile:
    """Relative singular homology of (X, A) for an arbitrary subspace A.

    A needs no closure property: its order complex is the full subcomplex
    of the ambient order complex on the cells of A.
    """
    ring = X.ring if ring is None else ring
    subspace = frozenset(subspace)
    unknown = subspace - X.cell_ids
    if unknown:
        raise UnknownCellReference(f"not cells of the complex: {sorted(unknown)}")
    K = order_complex(X, max_simplices)
    L = K.full_subcomplex(subspace)
    return relative_simplicial_homology(K, L, ring)


def simplicial_excision_check(K1: SimplicialComplex, K2: SimplicialComplex,
                              ring: RingSpec = ZZ) -> bool:
    """True when H(K2, K1 ∩ K2) equals H(K1 ∪ K2, K1), profile for profile."""
    union = K1.union(K2)
    common = K1.intersection(K2)
    left = relative_simplicial_homology(K2, common, ring)
    right = relative_simplicial_homology(union, K1, ring)
    return left == right
