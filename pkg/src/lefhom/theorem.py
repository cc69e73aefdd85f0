"""Executable checks around the homology-comparison theorem.

The statement under test: for an augmentable complex in which the closure
of every cell has the homology of a point, the cell-chain homology and the
finite-space homology of the whole complex are isomorphic.  This module
evaluates the hypotheses and the conclusion on concrete complexes, sweeps
closed subcomplexes for the associated equivalence, and hunts for
counterexamples to the converse, which profile equality alone can decide
because profiles are complete isomorphism invariants over the supported
rings.

Nothing here proves anything: reports state per-instance consistency, and
an unproductive search is reported as such, never as evidence.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass, replace
from typing import Iterator, Mapping, Optional

from .complexes import LefschetzComplex
from .errors import LefhomError
from .exact import RingSpec
from .homology import HomologyProfile, lefschetz_homology, point_profile
from .simplicial import finite_space_homology
from .topology import closure, enumerate_closed_sets, restrict

__all__ = [
    "LocalCheck",
    "TheoremReport",
    "CorollaryReport",
    "ConverseCandidate",
    "is_augmentable",
    "local_condition",
    "check_theorem",
    "check_corollary",
    "search_converse",
]


def is_augmentable(X: LefschetzComplex, ring: Optional[RingSpec] = None) -> bool:
    """True when every 1-cell's facet coefficients sum to zero.

    That is exactly the condition for the all-ones functional on 0-cells to
    annihilate the degree-1 boundary; vacuously true without 1-cells.
    """
    ring = X.ring if ring is None else ring
    for x in X.cells_of_dim(1):
        total = ring.zero()
        for y in X.facets(x):
            total = ring.add(total, ring.convert(X.kappa(x, y)))
        if not ring.is_zero(total):
            return False
    return True


@dataclass(frozen=True)
class LocalCheck:
    passes: bool
    profile: HomologyProfile


def _closure_profile(X: LefschetzComplex, cell: str, ring: RingSpec) -> HomologyProfile:
    if X.dim_of(cell) == 0:
        # the closure of a 0-cell is the cell itself
        return point_profile(ring)
    return lefschetz_homology(restrict(X, closure(X, {cell})), ring)


def local_condition(X: LefschetzComplex,
                    ring: Optional[RingSpec] = None) -> Mapping[str, LocalCheck]:
    """Per cell: does the closure of the cell have point homology?

    Returned in canonical cell order; the failing cells are the obstruction
    to the comparison theorem's hypothesis.
    """
    ring = X.ring if ring is None else ring
    expected = point_profile(ring)
    out = {}
    for cell in X.cells:
        profile = _closure_profile(X, cell.id, ring)
        out[cell.id] = LocalCheck(profile == expected, profile)
    return out


def _first_local_failure(X: LefschetzComplex, ring: RingSpec) -> Optional[str]:
    expected = point_profile(ring)
    for cell in X.cells:
        if _closure_profile(X, cell.id, ring) != expected:
            return cell.id
    return None


@dataclass(frozen=True)
class TheoremReport:
    """Hypotheses, conclusion and consistency verdict for one complex.

    ``consistent_with_theorem`` is False only for an instance that would
    contradict the theorem (hypotheses hold, conclusion fails); such a
    value indicates a bug somewhere and must be surfaced loudly.
    """

    ring: RingSpec
    augmentable: bool
    local_condition: Mapping[str, LocalCheck]
    hypothesis_holds: bool
    lefschetz_profile: HomologyProfile
    singular_profile: HomologyProfile
    conclusion_holds: bool
    consistent_with_theorem: bool

    @property
    def failing_cells(self) -> tuple:
        return tuple(cid for cid, check in self.local_condition.items()
                     if not check.passes)


def check_theorem(X: LefschetzComplex, ring: Optional[RingSpec] = None) -> TheoremReport:
    """Evaluate hypotheses and conclusion of the comparison theorem on X."""
    ring = X.ring if ring is None else ring
    augmentable = is_augmentable(X, ring)
    local = local_condition(X, ring)
    hypothesis = augmentable and all(check.passes for check in local.values())
    lef = lefschetz_homology(X, ring)
    sing = finite_space_homology(X, ring)
    conclusion = lef == sing
    consistent = not (hypothesis and not conclusion)
    return TheoremReport(
        ring=ring,
        augmentable=augmentable,
        local_condition=local,
        hypothesis_holds=hypothesis,
        lefschetz_profile=lef,
        singular_profile=sing,
        conclusion_holds=conclusion,
        consistent_with_theorem=consistent,
    )


@dataclass(frozen=True)
class CorollaryReport:
    """Both directions of the closed-subcomplex equivalence on one instance.

    For an augmentable complex, the local condition is equivalent to every
    closed subcomplex having matching chain and space homology; the two
    directions are computed independently here and compared.
    """

    ring: RingSpec
    augmentable: bool
    local_condition_holds: bool
    closed_sets_checked: int
    mismatching_closed_sets: tuple
    all_closed_match: bool
    directions_agree: bool
    consistent_with_corollary: bool


def check_corollary(X: LefschetzComplex, ring: Optional[RingSpec] = None,
                    cap: int = 100_000) -> CorollaryReport:
    """Sweep every closed subcomplex and compare both homology pipelines."""
    ring = X.ring if ring is None else ring
    augmentable = is_augmentable(X, ring)
    local_ok = _first_local_failure(X, ring) is None
    mismatches = []
    count = 0
    for closed_set in enumerate_closed_sets(X, cap):
        count += 1
        sub = restrict(X, closed_set)
        if lefschetz_homology(sub, ring) != finite_space_homology(sub, ring):
            mismatches.append(tuple(sorted(closed_set)))
    all_match = not mismatches
    agree = local_ok == all_match
    return CorollaryReport(
        ring=ring,
        augmentable=augmentable,
        local_condition_holds=local_ok,
        closed_sets_checked=count,
        mismatching_closed_sets=tuple(mismatches),
        all_closed_match=all_match,
        directions_agree=agree,
        consistent_with_corollary=agree or not augmentable,
    )


# ---------------------------------------------------------------------------
# Converse search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConverseCandidate:
    """A generated complex on which the converse of the theorem fails.

    The candidate is augmentable, its global chain and space homology agree,
    yet some cell closure is not acyclic.  ``lef_text`` is the serialized
    complex; ``reverified`` records that all profiles were recomputed from
    that serialization before the candidate was reported.
    """

    index: int
    seed: int
    mode: str
    lef_text: str
    failing_cells: tuple
    lefschetz_profile: HomologyProfile
    singular_profile: HomologyProfile
    reverified: bool


def _derive_seed(master: int, index: int) -> int:
    # SplitMix64 scramble: candidate seeds depend only on (master, index),
    # never on scheduling, so parallel runs reproduce serial output.
    x = (master + (index + 1) * 0x9E3779B97F4A7C15) % (1 << 64)
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) % (1 << 64)
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) % (1 << 64)
    return x ^ (x >> 31)


def _is_candidate(X: LefschetzComplex, ring: RingSpec) -> bool:
    if not is_augmentable(X, ring):
        return False
    if _first_local_failure(X, ring) is None:
        return False  # hypothesis holds: not a converse instance
    return lefschetz_homology(X, ring) == finite_space_homology(X, ring)


def _evaluate_index(args) -> bool:
    base, ring, index = args
    from .formats import random_complex

    cfg = replace(base, seed=_derive_seed(base.seed, index))
    return _is_candidate(random_complex(cfg), ring)


def _reverify(lef_text: str, ring: RingSpec):
    """Recompute everything from the serialized complex, independently."""
    from .formats import parse_lef

    X = parse_lef(lef_text)
    if not _is_candidate(X, ring):
        raise LefhomError("candidate failed re-verification from its serialization")
    local = local_condition(X, ring)
    failing = tuple(cid for cid, check in local.items() if not check.passes)
    return (failing, lefschetz_homology(X, ring), finite_space_homology(X, ring))


def search_converse(base_config, ring: Optional[RingSpec] = None,
                    budget: int = 1000, jobs: int = 1) -> Iterator[ConverseCandidate]:
    """Stream every converse candidate among ``budget`` generated complexes.

    Candidate i is generated from a seed derived from (base seed, i), so
    the emitted sequence is deterministic for a fixed configuration and
    identical for any ``jobs`` setting.  Exhausting the budget without a
    hit is normal termination and means only that nothing was found at
    this scale.
    """
    from .formats import random_complex, render_lef

    if budget <= 0:
        raise ValueError("budget must be positive")
    ring = RingSpec.integers() if ring is None else ring

    def emit(index: int) -> ConverseCandidate:
        cfg = replace(base_config, seed=_derive_seed(base_config.seed, index))
        text = render_lef(random_complex(cfg))
        failing, lef, sing = _reverify(text, ring)
        return ConverseCandidate(
            index=index, seed=cfg.seed, mode=cfg.mode, lef_text=text,
            failing_cells=failing, lefschetz_profile=lef,
            singular_profile=sing, reverified=True,
        )

    if jobs <= 1:
        for index in range(budget):
            if _evaluate_index((base_config, ring, index)):
                yield emit(index)
        return

    tasks = ((base_config, ring, index) for index in range(budget))
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        chunk = max(1, budget // (jobs * 8))
        for index, hit in enumerate(pool.map(_evaluate_index, tasks, chunksize=chunk)):
            if hit:
                yield emit(index)
