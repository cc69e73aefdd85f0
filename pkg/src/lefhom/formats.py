"""Ingestion, generation and export of complexes.

Three text inputs are understood: the native ``.lef`` format (ring, cells,
incidences), lists of maximal simplices, and lists of elementary cubes.
The canonical renderer sorts cells by (dim, id) and incidences by (x, y),
so parse/render round-trips are byte-stable.  A seeded generator supplies
test corpora, including a basis-change mode that rewrites the cell basis
by unimodular moves: homology is preserved exactly while the face order
generally changes, which is where the comparison theorem gets interesting.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .complexes import LefschetzComplex, build_complex
from .errors import (
    DimensionMismatch,
    EmptyInput,
    LefSyntaxError,
    MalformedInterval,
    UnsupportedRing,
)
from .exact import RingSpec, ZZ

__all__ = [
    "GeneratorConfig",
    "GENERATOR_MODES",
    "parse_lef",
    "render_lef",
    "import_simplicial",
    "parse_simplicial",
    "import_cubical",
    "parse_cubical",
    "random_complex",
    "export_dot",
]

GENERATOR_MODES = ("simplicial-random", "cubical-random", "basis-change")


# ---------------------------------------------------------------------------
# .lef format
# ---------------------------------------------------------------------------

_ID_TOKEN = re.compile(r"[A-Za-z0-9_]+\Z")


def _parse_value(token: str, ring: RingSpec, line_no: int):
    try:
        return int(token)
    except ValueError:
        pass
    if ring.kind == "Q" and "/" in token:
        num, _, den = token.partition("/")
        try:
            return Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError):
            pass
    raise LefSyntaxError(line_no, f"bad coefficient {token!r}")


def parse_lef(text: str) -> LefschetzComplex:
    """Parse the line-oriented ``.lef`` format into a validated complex.

    Syntactic problems (malformed lines, unknown cell references, duplicate
    declarations) raise ``LefSyntaxError`` with the line number; algebraic
    validation failures propagate from construction.
    """
    ring = None
    cells = []
    seen = {}
    kappa_lines = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "ring":
            if ring is not None:
                raise LefSyntaxError(line_no, "ring declared twice")
            if parts[1:] == ["Z"]:
                ring = RingSpec.integers()
            elif parts[1:] == ["Q"]:
                ring = RingSpec.rationals()
            elif len(parts) == 3 and parts[1] == "Zp":
                try:
                    ring = RingSpec.prime_field(int(parts[2]))
                except (ValueError, UnsupportedRing) as exc:
                    raise LefSyntaxError(line_no, f"bad prime field: {exc}") from None
            else:
                raise LefSyntaxError(line_no, f"unsupported ring {' '.join(parts[1:])!r}")
            continue
        if ring is None:
            raise LefSyntaxError(line_no, "the first line must declare the ring")
        if parts[0] == "cell":
            if len(parts) != 3:
                raise LefSyntaxError(line_no, "want: cell <id> <dim>")
            cid = parts[1]
            if not _ID_TOKEN.match(cid):
                raise LefSyntaxError(line_no, f"bad cell id {cid!r}")
            if cid in seen:
                raise LefSyntaxError(line_no, f"cell {cid!r} declared twice")
            try:
                dim = int(parts[2])
            except ValueError:
                raise LefSyntaxError(line_no, f"bad dimension {parts[2]!r}") from None
            if dim < 0:
                raise LefSyntaxError(line_no, "dimension must be non-negative")
            seen[cid] = dim
            cells.append((cid, dim))
        elif parts[0] == "kappa":
            if len(parts) != 4:
                raise LefSyntaxError(line_no, "want: kappa <x> <y> <value>")
            kappa_lines.append((line_no, parts[1], parts[2], parts[3]))
        else:
            raise LefSyntaxError(line_no, f"unknown directive {parts[0]!r}")
    if ring is None:
        raise LefSyntaxError(1, "empty input: missing ring declaration")

    kappa = {}
    for line_no, x, y, token in kappa_lines:
        for ref in (x, y):
            if ref not in seen:
                raise LefSyntaxError(line_no, f"kappa references undeclared cell {ref!r}")
        if (x, y) in kappa:
            raise LefSyntaxError(line_no, f"kappa({x}, {y}) given twice")
        kappa[(x, y)] = _parse_value(token, ring, line_no)
    return build_complex(cells, kappa, ring)


def render_lef(X: LefschetzComplex) -> str:
    """Canonical ``.lef`` serialization; inverse of :func:`parse_lef`."""
    ring = X.ring
    if ring.kind == "Fp":
        lines = [f"ring Zp {ring.p}"]
    else:
        lines = [f"ring {ring.kind}"]
    for cell in X.cells:
        lines.append(f"cell {cell.id} {cell.dim}")
    for (x, y) in sorted(X.kappa_entries):
        lines.append(f"kappa {x} {y} {ring.format_element(X.kappa_entries[(x, y)])}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# simplicial import
# ---------------------------------------------------------------------------


def import_simplicial(maximal_simplices: Iterable[Sequence[str]],
                      ring: RingSpec = ZZ) -> LefschetzComplex:
    """All faces of the given maximal simplices, with alternating-sign
    incidences on vertex deletion (vertices sorted ascending).

    Cell ids concatenate the sorted vertex names, with underscores when any
    vertex name has more than one character.
    """
    faces = set()
    for simplex in maximal_simplices:
        simplex = tuple(sorted(set(str(v) for v in simplex)))
        if not simplex:
            raise EmptyInput("empty simplex in input")
        for size in range(1, len(simplex) + 1):
            faces.update(combinations(simplex, size))
    if not faces:
        raise EmptyInput("no simplices to import")
    plain = all(len(v) == 1 for face in faces for v in face)
    joiner = "" if plain else "_"

    def cid(face: tuple) -> str:
        return joiner.join(face)

    cells = [(cid(face), len(face) - 1) for face in sorted(faces)]
    kappa = {}
    for face in faces:
        if len(face) == 1:
            continue
        for i in range(len(face)):
            sub = face[:i] + face[i + 1:]
            kappa[(cid(face), cid(sub))] = 1 if i % 2 == 0 else -1
    return build_complex(cells, kappa, ring)


def parse_simplicial(text: str, ring: RingSpec = ZZ) -> LefschetzComplex:
    """One maximal simplex per line, whitespace-separated vertex ids."""
    faces = [line.split() for line in text.splitlines() if line.split("#", 1)[0].strip()]
    faces = [[v for v in face] for face in faces if face]
    if not faces:
        raise EmptyInput("no simplices in input")
    return import_simplicial(faces, ring)


# ---------------------------------------------------------------------------
# cubical import
# ---------------------------------------------------------------------------

_INTERVAL_RE = re.compile(r"\[\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\]\Z")


def _interval_id(lo: int, hi: int) -> str:
    def enc(k: int) -> str:
        return f"m{-k}" if k < 0 else str(k)

    return enc(lo) if lo == hi else f"{enc(lo)}_{enc(hi)}"


def _cube_id(cube: tuple) -> str:
    return "x".join(_interval_id(lo, hi) for lo, hi in cube)


def import_cubical(cubes: Iterable[Sequence], ring: RingSpec = ZZ) -> LefschetzComplex:
    """All faces of the given elementary cubes with standard signed incidences.

    Each cube is a product of integer intervals, degenerate ``[k]`` or unit
    ``[k, k+1]``; all cubes must share the embedding dimension.  Collapsing
    the j-th non-degenerate interval contributes the sign ``(-1)**s_j`` to
    the upper face and its negative to the lower face, where ``s_j`` counts
    non-degenerate intervals strictly before position j.  The construction
    validator (boundary of boundary is zero) is the arbiter of this sign
    convention.
    """
    normalized = []
    embedding = None
    for cube in cubes:
        axes = []
        for interval in cube:
            pair = tuple(interval) if not isinstance(interval, int) else (interval,)
            if len(pair) == 1:
                lo = hi = int(pair[0])
            elif len(pair) == 2:
                lo, hi = int(pair[0]), int(pair[1])
            else:
                raise MalformedInterval(f"bad interval {interval!r}")
            if hi not in (lo, lo + 1):
                raise MalformedInterval(f"interval [{lo}, {hi}] is not [k] or [k, k+1]")
            axes.append((lo, hi))
        if embedding is None:
            embedding = len(axes)
        elif embedding != len(axes):
            raise DimensionMismatch(
                f"cube {tuple(axes)} has embedding dimension {len(axes)}, expected {embedding}")
        if not axes:
            raise MalformedInterval("a cube needs at least one interval")
        normalized.append(tuple(axes))
    if not normalized:
        raise EmptyInput("no cubes to import")

    all_cubes = set()
    for cube in normalized:
        options = [((lo, hi),) if lo == hi else ((lo, hi), (lo, lo), (hi, hi))
                   for lo, hi in cube]
        for face in product(*options):
            all_cubes.add(face)

    def dim(cube: tuple) -> int:
        return sum(1 for lo, hi in cube if lo != hi)

    cells = [(_cube_id(c), dim(c)) for c in sorted(all_cubes)]
    kappa = {}
    for cube in all_cubes:
        seen_nondeg = 0
        for j, (lo, hi) in enumerate(cube):
            if lo == hi:
                continue
            sign = 1 if seen_nondeg % 2 == 0 else -1
            upper = cube[:j] + ((hi, hi),) + cube[j + 1:]
            lower = cube[:j] + ((lo, lo),) + cube[j + 1:]
            kappa[(_cube_id(cube), _cube_id(upper))] = sign
            kappa[(_cube_id(cube), _cube_id(lower))] = -sign
            seen_nondeg += 1
    return build_complex(cells, kappa, ring)


def parse_cubical(text: str, ring: RingSpec = ZZ) -> LefschetzComplex:
    """One cube per line, e.g. ``[0,1]x[3]x[2,3]``."""
    cubes = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        axes = []
        for token in line.split("x"):
            match = _INTERVAL_RE.match(token.strip())
            if not match:
                raise LefSyntaxError(line_no, f"bad interval {token.strip()!r}")
            lo = int(match.group(1))
            hi = int(match.group(2)) if match.group(2) is not None else lo
            axes.append((lo, hi))
        cubes.append(tuple(axes))
    if not cubes:
        raise EmptyInput("no cubes in input")
    return import_cubical(cubes, ring)


# ---------------------------------------------------------------------------
# random generator
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorConfig:
    """Seeded recipe for one random complex.

    ``max_cells_per_dim`` bounds the number of drawn vertices and maximal
    faces (or cubes); ``max_dimension`` bounds face/cube dimension;
    ``coefficient_bound`` and ``transform_steps`` drive the basis-change
    mode's unimodular moves.
    """

    seed: int
    mode: str = "simplicial-random"
    max_dimension: int = 2
    max_cells_per_dim: int = 4
    coefficient_bound: int = 2
    transform_steps: int = 6

    def __post_init__(self):
        if self.mode not in GENERATOR_MODES:
            raise ValueError(f"unknown generator mode {self.mode!r}")
        if not (0 <= self.seed < 1 << 64):
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.max_dimension < 1 or self.max_cells_per_dim < 1:
            raise ValueError("size bounds must be positive")
        if self.coefficient_bound < 1 or self.transform_steps < 0:
            raise ValueError("bad basis-change parameters")


def _random_simplicial(rng: random.Random, cfg: GeneratorConfig) -> LefschetzComplex:
    nverts = rng.randint(1, cfg.max_cells_per_dim)
    verts = [f"v{i}" for i in range(nverts)]
    nfaces = rng.randint(1, cfg.max_cells_per_dim)
    faces = []
    for _ in range(nfaces):
        size = rng.randint(1, min(cfg.max_dimension + 1, nverts))
        faces.append(rng.sample(verts, size))
    return import_simplicial(faces)


def _random_cubical(rng: random.Random, cfg: GeneratorConfig) -> LefschetzComplex:
    embedding = rng.randint(1, min(cfg.max_dimension, 3))
    ncubes = rng.randint(1, cfg.max_cells_per_dim)
    cubes = []
    for _ in range(ncubes):
        budget = cfg.max_dimension
        axes = []
        for _ in range(embedding):
            k = rng.randint(0, 2)
            if budget > 0 and rng.random() < 0.6:
                axes.append((k, k + 1))
                budget -= 1
            else:
                axes.append((k, k))
        cubes.append(tuple(axes))
    return import_cubical(cubes)


def _column_sums_vanish(X: LefschetzComplex) -> bool:
    ring = X.ring
    for x in X.cells_of_dim(1):
        total = ring.zero()
        for y in X.facets(x):
            total = ring.add(total, X.kappa(x, y))
        if not ring.is_zero(total):
            return False
    return True


def _basis_change(rng: random.Random, cfg: GeneratorConfig) -> LefschetzComplex:
    X = _random_simplicial(rng, cfg)
    top = X.top_dim
    basis = {q: list(X.cells_of_dim(q)) for q in range(top + 1)}
    mats = {q: X.boundary_matrix(q).dense() for q in range(top + 1)}
    augmentable_before = _column_sums_vanish(X)

    for _ in range(cfg.transform_steps):
        eligible = [q for q in range(1, top + 1) if len(basis[q]) >= 2]
        if not eligible:
            break
        q = rng.choice(eligible)
        u, v = rng.sample(range(len(basis[q])), 2)
        m = rng.randint(1, cfg.coefficient_bound) * rng.choice((1, -1))
        # new basis chain u := u + m*v in degree q; degree 0 is never touched,
        # and a degree-1 column move preserves zero column sums
        for row in mats[q]:
            row[u] += m * row[v]
        if q + 1 <= top:
            upper = mats[q + 1]
            ncols = len(basis[q + 1])
            for j in range(ncols):
                upper[v][j] -= m * upper[u][j]

    cells = [(cid, q) for q in range(top + 1) for cid in basis[q]]
    kappa = {}
    for q in range(1, top + 1):
        rows, cols = basis[q - 1], basis[q]
        mat = mats[q]
        for j, x in enumerate(cols):
            for i, y in enumerate(rows):
                if mat[i][j]:
                    kappa[(x, y)] = mat[i][j]
    out = build_complex(cells, kappa, X.ring)
    if augmentable_before and not _column_sums_vanish(out):
        raise AssertionError("basis change broke augmentability")
    return out


def random_complex(cfg: GeneratorConfig) -> LefschetzComplex:
    """Deterministic random complex: equal configs give byte-identical output."""
    rng = random.Random(cfg.seed)
    if cfg.mode == "simplicial-random":
        return _random_simplicial(rng, cfg)
    if cfg.mode == "cubical-random":
        return _random_cubical(rng, cfg)
    return _basis_change(rng, cfg)


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def export_dot(X: LefschetzComplex) -> str:
    """Hasse diagram of the face order as a DOT digraph, ranked by dimension.

    Under the grading, the covering pairs are exactly the facet pairs, so
    edges run from each cell to its facets.
    """
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for q in range(X.top_dim + 1):
        ids = X.cells_of_dim(q)
        if ids:
            row = " ".join(f'"{cid}";' for cid in ids)
            lines.append(f"  {{ rank=same; {row} }}")
    for cell in X.cells:
        for y in sorted(X.facets(cell.id)):
            lines.append(f'  "{cell.id}" -> "{y}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
