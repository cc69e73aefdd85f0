"""Lefschetz complexes: graded cells with incidence coefficients.

A complex is a finite set of cells, each carrying a non-negative
dimension, plus a sparse incidence map ``kappa``.  ``kappa(x, y)`` may be
nonzero only when ``dim x == dim y + 1``, and for every cell pair (x, z)
the products over intermediate cells must cancel:

    sum_y  kappa(x, y) * kappa(y, z)  ==  0

(the matrix statement that the boundary of a boundary vanishes).  Both
conditions are validated eagerly at construction; every downstream module
relies on them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import (
    DuplicateCellId,
    GradingViolation,
    InvalidCellId,
    KappaConditionViolation,
    UnknownCellReference,
)
from .exact import ExactMatrix, RingSpec

__all__ = ["Cell", "LefschetzComplex", "FacePoset", "build_complex"]

_ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True)
class Cell:
    id: str
    dim: int


class FacePoset:
    """Reflexive-transitive closure of the facet relation of a complex.

    ``below(x)`` is the set of faces of x (including x itself); ``above(x)``
    the dual.  Antisymmetry is automatic because a strict face has strictly
    smaller dimension.
    """

    __slots__ = ("_below", "_above", "_elements")

    def __init__(self, below: Mapping[str, frozenset]):
        self._below = dict(below)
        above = {x: set() for x in self._below}
        for x, faces in self._below.items():
            for y in faces:
                above[y].add(x)
        self._above = {y: frozenset(s) for y, s in above.items()}
        self._elements = tuple(sorted(self._below))

    @property
    def elements(self) -> tuple:
        return self._elements

    def below(self, x: str) -> frozenset:
        try:
            return self._below[x]
        except KeyError:
            raise UnknownCellReference(f"cell {x!r} not in poset") from None

    def above(self, x: str) -> frozenset:
        try:
            return self._above[x]
        except KeyError:
            raise UnknownCellReference(f"cell {x!r} not in poset") from None

    def leq(self, a: str, b: str) -> bool:
        """True when a is a face of b."""
        return a in self.below(b)

    def __eq__(self, other) -> bool:
        return isinstance(other, FacePoset) and self._below == other._below

    def __repr__(self) -> str:
        return f"FacePoset({len(self._elements)} elements)"


class LefschetzComplex:
    """Validated, immutable Lefschetz complex over a :class:`RingSpec`.

    Construction performs the full validation (id sanity, grading, and the
    incidence-product condition).  Boundary matrices, the face poset and
    homology profiles are memoized per instance, write-once.
    """

    __slots__ = ("ring", "_dims", "_kappa", "_by_dim", "_facets",
                 "_poset", "_boundary_cache", "_homology_cache")

    def __init__(self, cells: Iterable, kappa, ring: RingSpec):
        self.ring = ring
        self._dims = {}
        for cell in cells:
            cid, dim = (cell.id, cell.dim) if isinstance(cell, Cell) else cell
            if not isinstance(cid, str) or not _ID_RE.match(cid):
                raise InvalidCellId(f"bad cell id {cid!r} (want [A-Za-z0-9_]+)")
            if not isinstance(dim, int) or dim < 0:
                raise InvalidCellId(f"cell {cid!r} has bad dimension {dim!r}")
            if cid in self._dims:
                raise DuplicateCellId(f"cell id {cid!r} declared twice")
            self._dims[cid] = dim

        items = kappa.items() if isinstance(kappa, Mapping) else kappa
        self._kappa = {}
        self._facets = {x: {} for x in self._dims}
        for (x, y), value in items:
            for ref in (x, y):
                if ref not in self._dims:
                    raise UnknownCellReference(f"kappa references unknown cell {ref!r}")
            value = ring.convert(value)
            if ring.is_zero(value):
                continue
            if self._dims[x] != self._dims[y] + 1:
                raise GradingViolation(x, y, self._dims[x], self._dims[y])
            if (x, y) in self._kappa:
                raise DuplicateCellId(f"kappa({x}, {y}) given twice")
            self._kappa[(x, y)] = value
            self._facets[x][y] = value

        self._check_kappa_condition()

        by_dim = {}
        for cid, dim in self._dims.items():
            by_dim.setdefault(dim, []).append(cid)
        self._by_dim = {d: tuple(sorted(ids)) for d, ids in by_dim.items()}
        self._poset = None
        self._boundary_cache = {}
        self._homology_cache = {}

    def _check_kappa_condition(self):
        ring = self.ring
        for x, mids in self._facets.items():
            acc = {}
            for y, v in mids.items():
                for z, w in self._facets[y].items():
                    acc[z] = ring.add(acc.get(z, ring.zero()), ring.mul(v, w))
            for z, total in acc.items():
                if not ring.is_zero(total):
                    raise KappaConditionViolation(x, z, total)

    # -- cell access ---------------------------------------------------

    @property
    def cells(self) -> tuple:
        return tuple(Cell(cid, dim) for dim, cid
                     in sorted((d, c) for c, d in self._dims.items()))

    @property
    def cell_ids(self) -> frozenset:
        return frozenset(self._dims)

    def __len__(self) -> int:
        return len(self._dims)

    def __contains__(self, cid: str) -> bool:
        return cid in self._dims

    def dim_of(self, cid: str) -> int:
        try:
            return self._dims[cid]
        except KeyError:
            raise UnknownCellReference(f"cell {cid!r} not in complex") from None

    @property
    def top_dim(self) -> int:
        return max(self._dims.values(), default=-1)

    def cells_of_dim(self, q: int) -> tuple:
        return self._by_dim.get(q, ())

    # -- incidence data --------------------------------------------------

    @property
    def kappa_entries(self):
        return MappingProxyType(self._kappa)

    def kappa(self, x: str, y: str):
        self.dim_of(x)
        self.dim_of(y)
        return self._kappa.get((x, y), self.ring.zero())

    def facets(self, x: str) -> frozenset:
        self.dim_of(x)
        return frozenset(self._facets[x])

    def cofacets(self, y: str) -> frozenset:
        self.dim_of(y)
        return frozenset(x for (x, yy) in self._kappa if yy == y)

    def boundary_matrix(self, q: int) -> ExactMatrix:
        """Boundary from degree q to q-1; rows/columns in sorted-id order."""
        mat = self._boundary_cache.get(q)
        if mat is None:
            rows = self.cells_of_dim(q - 1)
            cols = self.cells_of_dim(q)
            rindex = {y: i for i, y in enumerate(rows)}
            entries = {}
            for j, x in enumerate(cols):
                for y, v in self._facets[x].items():
                    entries[(rindex[y], j)] = v
            mat = ExactMatrix(len(rows), len(cols), entries, self.ring)
            self._boundary_cache[q] = mat
        return mat

    def face_poset(self) -> FacePoset:
        if self._poset is None:
            below = {}
            for dim, cid in sorted((d, c) for c, d in self._dims.items()):
                faces = {cid}
                for y in self._facets[cid]:
                    faces |= below[y]
                below[cid] = frozenset(faces)
            self._poset = FacePoset(below)
        return self._poset

    # -- misc --------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, LefschetzComplex)
                and self.ring == other.ring
                and self._dims == other._dims
                and self._kappa == other._kappa)

    def __repr__(self) -> str:
        return (f"LefschetzComplex({len(self._dims)} cells, "
                f"top dim {self.top_dim}, ring {self.ring})")


def build_complex(cells: Iterable, kappa_entries, ring: RingSpec) -> LefschetzComplex:
    """Validate and build a complex from (id, dim) pairs and a kappa mapping."""
    return LefschetzComplex(cells, kappa_entries, ring)
