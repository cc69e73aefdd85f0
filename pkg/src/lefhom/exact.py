"""Exact linear algebra over the integers, the rationals and prime fields.

Everything computes with Python's arbitrary-precision ``int`` and
``fractions.Fraction``.  No floating point is ever involved, so ranks,
kernels and Smith divisors are exact by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence

from .errors import NonFieldRing, UnsupportedRing

__all__ = [
    "RingSpec",
    "ExactMatrix",
    "SmithForm",
    "smith_normal_form",
    "rank_over",
    "kernel_basis",
    "solve",
    "ZZ",
    "QQ",
    "GF",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class RingSpec:
    """A supported coefficient ring: Z, Q, or a prime field F_p.

    Instances are immutable and hashable, so they double as cache keys.
    Elements are plain ``int`` (for Z and F_p, the latter kept canonical
    in [0, p)) or ``Fraction`` (for Q).
    """

    kind: str  # "Z" | "Q" | "Fp"
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Fp"):
            raise UnsupportedRing(f"unknown ring kind {self.kind!r}")
        if self.kind == "Fp":
            if self.p is None or not _is_prime(self.p):
                raise UnsupportedRing(f"prime field modulus must be prime, got {self.p!r}")
        elif self.p is not None:
            raise UnsupportedRing(f"ring {self.kind} takes no modulus")

    @staticmethod
    def integers() -> "RingSpec":
        return ZZ

    @staticmethod
    def rationals() -> "RingSpec":
        return QQ

    @staticmethod
    def prime_field(p: int) -> "RingSpec":
        return RingSpec("Fp", p)

    @property
    def is_field(self) -> bool:
        return self.kind in ("Q", "Fp")

    @property
    def label(self) -> str:
        return f"F{self.p}" if self.kind == "Fp" else self.kind

    def __str__(self) -> str:
        return self.label

    # -- element arithmetic ------------------------------------------------

    def convert(self, value):
        """Coerce an int or Fraction into this ring; reject anything lossy."""
        if self.kind == "Z":
            if isinstance(value, int):
                return value
            if isinstance(value, Fraction):
                if value.denominator == 1:
                    return int(value)
                raise UnsupportedRing(f"{value} is not an integer")
        elif self.kind == "Q":
            if isinstance(value, int):
                return Fraction(value)
            if isinstance(value, Fraction):
                return value
        else:  # Fp
            if isinstance(value, int):
                return value % self.p
            if isinstance(value, Fraction):
                den = value.denominator % self.p
                if den == 0:
                    raise UnsupportedRing(f"denominator of {value} vanishes mod {self.p}")
                return value.numerator * pow(den, self.p - 2, self.p) % self.p
        raise UnsupportedRing(f"cannot interpret {value!r} as an element of {self}")

    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "Fp" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "Fp" else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "Fp" else a * b

    def neg(self, a):
        return (-a) % self.p if self.kind == "Fp" else -a

    def is_zero(self, a) -> bool:
        return a == 0

    def invert(self, a):
        if not self.is_field:
            raise NonFieldRing(f"{self} is not a field")
        if a == 0:
            raise ZeroDivisionError("inverting zero")
        if self.kind == "Q":
            return Fraction(1) / a
        return pow(a, self.p - 2, self.p)

    def format_element(self, a) -> str:
        if isinstance(a, Fraction) and a.denominator != 1:
            return f"{a.numerator}/{a.denominator}"
        return str(int(a))


ZZ = RingSpec("Z")
QQ = RingSpec("Q")


def GF(p: int) -> RingSpec:
    return RingSpec.prime_field(p)


class ExactMatrix:
    """Immutable sparse matrix with exact entries over a :class:`RingSpec`.

    Only nonzero entries are stored; an absent (row, col) key means zero.
    """

    __slots__ = ("rows", "cols", "ring", "_entries")

    def __init__(self, rows: int, cols: int,
                 entries: Mapping[tuple, object] | Iterable, ring: RingSpec):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        self.ring = ring
        data = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for (i, j), v in items:
            if not (0 <= i < rows and 0 <= j < cols):
                raise ValueError(f"entry ({i}, {j}) outside {rows}x{cols} matrix")
            v = ring.convert(v)
            if not ring.is_zero(v):
                data[(i, j)] = v
        self._entries = data

    # construction helpers

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ring: RingSpec) -> "ExactMatrix":
        n = len(rows)
        m = len(rows[0]) if n else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != m:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                entries[(i, j)] = v
        return cls(n, m, entries, ring)

    @classmethod
    def zeros(cls, rows: int, cols: int, ring: RingSpec) -> "ExactMatrix":
        return cls(rows, cols, {}, ring)

    @classmethod
    def identity(cls, n: int, ring: RingSpec) -> "ExactMatrix":
        return cls(n, n, {(i, i): ring.one() for i in range(n)}, ring)

    # access

    @property
    def entries(self):
        return MappingProxyType(self._entries)

    def get(self, i: int, j: int):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols} matrix")
        return self._entries.get((i, j), self.ring.zero())

    def dense(self) -> list:
        out = [[self.ring.zero()] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def column(self, j: int) -> list:
        return [self.get(i, j) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not self._entries

    # transformations

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           {(j, i): v for (i, j), v in self._entries.items()}, self.ring)

    def cast(self, ring: RingSpec) -> "ExactMatrix":
        """Reinterpret entries in another ring (entries may vanish, e.g. mod p)."""
        if ring == self.ring:
            return self
        if self.ring.kind == "Fp":
            raise UnsupportedRing(f"cannot lift {self.ring} entries into {ring}")
        return ExactMatrix(self.rows, self.cols, self._entries, ring)

    def drop(self, rows: Iterable[int] = (), cols: Iterable[int] = ()) -> "ExactMatrix":
        """Delete the given row/column indices, keeping the order of the rest."""
        rset, cset = set(rows), set(cols)
        rmap = {i: k for k, i in enumerate(i for i in range(self.rows) if i not in rset)}
        cmap = {j: k for k, j in enumerate(j for j in range(self.cols) if j not in cset)}
        entries = {(rmap[i], cmap[j]): v for (i, j), v in self._entries.items()
                   if i in rmap and j in cmap}
        return ExactMatrix(len(rmap), len(cmap), entries, self.ring)

    def apply(self, vector: Sequence) -> list:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        ring = self.ring
        out = [ring.zero()] * self.rows
        for (i, j), v in self._entries.items():
            out[i] = ring.add(out[i], ring.mul(v, vector[j]))
        return out

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ring != other.ring:
            raise UnsupportedRing("matrix product needs a common ring")
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        ring = self.ring
        by_row = {}
        for (k, j), w in other._entries.items():
            by_row.setdefault(k, []).append((j, w))
        acc = {}
        for (i, k), v in self._entries.items():
            for j, w in by_row.get(k, ()):
                key = (i, j)
                acc[key] = ring.add(acc.get(key, ring.zero()), ring.mul(v, w))
        return ExactMatrix(self.rows, other.cols, acc, ring)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExactMatrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.ring == other.ring and self._entries == other._entries)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols} over {self.ring}, {len(self._entries)} nonzero)"


@dataclass(frozen=True)
class SmithForm:
    """Diagonal divisors (d_i | d_{i+1}, all positive) of an integer matrix."""

    shape: tuple
    divisors: tuple
    left_transform: Optional[ExactMatrix] = None
    right_transform: Optional[ExactMatrix] = None

    @property
    def rank(self) -> int:
        return len(self.divisors)

    def diagonal(self) -> ExactMatrix:
        n, m = self.shape
        return ExactMatrix(n, m, {(k, k): d for k, d in enumerate(self.divisors)}, ZZ)


def smith_normal_form(matrix: ExactMatrix, with_transforms: bool = False) -> SmithForm:
    """Smith Normal Form of an integer matrix.

    Pivots are chosen by minimal absolute value and reduced with Bezout-style
    row/column combinations, which keeps coefficient growth tame on the small
    matrices this package deals with.  When ``with_transforms`` is set, the
    returned unimodular witnesses satisfy ``left @ matrix @ right == diagonal``.
    """
    if matrix.ring != ZZ:
        raise UnsupportedRing("smith_normal_form expects integer entries")
    n, m = matrix.rows, matrix.cols
    a = matrix.dense()
    left = [[int(i == j) for j in range(n)] for i in range(n)] if with_transforms else None
    right = [[int(i == j) for j in range(m)] for i in range(m)] if with_transforms else None

    def swap_rows(i, k):
        if i != k:
            a[i], a[k] = a[k], a[i]
            if left is not None:
                left[i], left[k] = left[k], left[i]

    def swap_cols(j, k):
        if j != k:
            for row in a:
                row[j], row[k] = row[k], row[j]
            if right is not None:
                for row in right:
                    row[j], row[k] = row[k], row[j]

    def add_row(src, dst, q):  # row dst += q * row src
        asrc, adst = a[src], a[dst]
        for j in range(m):
            adst[j] += q * asrc[j]
        if left is not None:
            lsrc, ldst = left[src], left[dst]
            for j in range(n):
                ldst[j] += q * lsrc[j]

    def add_col(src, dst, q):
        for row in a:
            row[dst] += q * row[src]
        if right is not None:
            for row in right:
                row[dst] += q * row[src]

    def find_pivot(t):
        best_abs, where = None, None
        for i in range(t, n):
            row = a[i]
            for j in range(t, m):
                v = row[j]
                if v != 0 and (best_abs is None or abs(v) < best_abs):
                    best_abs, where = abs(v), (i, j)
        return where

    t = 0
    while t < min(n, m):
        where = find_pivot(t)
        if where is None:
            break
        swap_rows(t, where[0])
        swap_cols(t, where[1])
        while True:
            # clear column t; nonzero remainders become the new, smaller pivot
            progressed = False
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t] != 0:
                        progressed = True
            if progressed:
                i_best = min((i for i in range(t, n) if a[i][t] != 0),
                             key=lambda i: abs(a[i][t]))
                swap_rows(t, i_best)
                continue
            progressed = False
            for j in range(t + 1, m):
                if a[t][j] != 0:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j] != 0:
                        progressed = True
            if progressed:
                j_best = min((j for j in range(t, m) if a[t][j] != 0),
                             key=lambda j: abs(a[t][j]))
                swap_cols(t, j_best)
                continue
            # pivot row/column clear; force divisibility of the rest
            pivot = a[t][t]
            offender = None
            for i in range(t + 1, n):
                row = a[i]
                for j in range(t + 1, m):
                    if row[j] % pivot != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if a[t][t] < 0:
            a[t] = [-v for v in a[t]]
            if left is not None:
                left[t] = [-v for v in left[t]]
        t += 1

    divisors = tuple(a[k][k] for k in range(t))
    lm = ExactMatrix.from_rows(left, ZZ) if with_transforms else None
    rm = ExactMatrix.from_rows(right, ZZ) if with_transforms else None
    return SmithForm(shape=(n, m), divisors=divisors,
                     left_transform=lm, right_transform=rm)


def _field_rows(matrix: ExactMatrix, ring: RingSpec) -> list:
    if not ring.is_field:
        raise NonFieldRing(f"{ring} is not a field; use smith_normal_form over Z")
    return matrix.cast(ring).dense()


def _rref(rows: list, ncols: int, ring: RingSpec):
    """Reduced row echelon form in place; returns (rows, pivot column list)."""
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if not ring.is_zero(rows[i][c])), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = ring.invert(rows[r][c])
        rows[r] = [ring.mul(inv, v) for v in rows[r]]
        lead = rows[r]
        for i in range(len(rows)):
            if i != r and not ring.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [ring.sub(v, ring.mul(f, w)) for v, w in zip(rows[i], lead)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank_over(matrix: ExactMatrix, ring: RingSpec) -> int:
    """Rank by exact Gaussian elimination over Q or F_p."""
    rows = _field_rows(matrix, ring)
    _, pivots = _rref(rows, matrix.cols, ring)
    return len(pivots)


def kernel_basis(matrix: ExactMatrix, ring: RingSpec) -> list:
    """A canonical basis of the right kernel over a field.

    One vector per free column of the reduced echelon form, in ascending
    free-column order; this makes downstream homology bases reproducible.
    """
    rows = _field_rows(matrix, ring)
    rref, pivots = _rref(rows, matrix.cols, ring)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vec = [ring.zero()] * matrix.cols
        vec[free] = ring.one()
        for r, pc in enumerate(pivots):
            vec[pc] = ring.neg(rref[r][free])
        basis.append(vec)
    return basis


def solve(matrix: ExactMatrix, rhs: Sequence, ring: RingSpec):
    """One exact solution of ``matrix @ x = rhs`` over a field, or None.

    Free variables are set to zero, so the returned solution is canonical.
    """
    if len(rhs) != matrix.rows:
        raise ValueError("right-hand side length does not match row count")
    rows = _field_rows(matrix, ring)
    rhs = [ring.convert(v) for v in rhs]
    for row, b in zip(rows, rhs):
        row.append(b)
    rref, pivots = _rref(rows, matrix.cols + 1, ring)
    if matrix.cols in pivots:
        return None
    x = [ring.zero()] * matrix.cols
    for r, pc in enumerate(pivots):
        x[pc] = rref[r][matrix.cols]
    return x
