"""Decision procedures for the matroid classes studied by this workbench.

Every classifier returns a ClassificationResult; a false verdict always
carries the canonically least counterexample, so failure output is identical
across runs and across worker counts.  The minimality checks are exhaustive
searches over subfamilies of the base family and are therefore guarded by a
configurable cap.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice
from math import comb
from typing import Callable, Iterable, Sequence

from .errors import RankZero, SearchCapExceeded, SupportMismatch
from .forming import forming_family, secondary_bases
from .matroid import Matroid, first_exchange_violation
from .setalgebra import (
    Partition,
    SetFamily,
    Subset,
    combination_number,
    is_partition,
    transversals,
)

DEFAULT_SEARCH_CAP = 20

# below this many subfamilies in a size layer, threads cost more than they save
_PARALLEL_MIN = 64


@dataclass(frozen=True)
class ExpansionWitness:
    """Secondary base extended to a base by two distinct elements of one base."""

    secondary: Subset
    base: Subset
    e1: str
    e2: str


@dataclass(frozen=True)
class ExchangeWitness:
    """Two distinct replacements restoring a base after one removal."""

    base1: Subset
    base2: Subset
    removed: str
    y1: str
    y2: str


@dataclass(frozen=True)
class SubfamilyWitness:
    """A proper subfamily that is itself a base family with the same union/intersection."""

    subfamily: SetFamily


@dataclass(frozen=True)
class ClassificationResult:
    verdict: bool
    witness: ExpansionWitness | ExchangeWitness | SubfamilyWitness | None = None

    def __post_init__(self):
        assert self.verdict == (self.witness is None)

    def __bool__(self) -> bool:
        return self.verdict


def _first_hit(items: Sequence, scan: Callable, workers: int):
    # `scan` returns a witness or None per item; the first non-None in item
    # order wins, which matches a sequential left-to-right search exactly.
    if workers <= 1 or len(items) <= 1:
        for item in items:
            found = scan(item)
            if found is not None:
                return found
        return None
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for found in pool.map(scan, items):
            if found is not None:
                return found
    return None


def is_unique_expansion(m: Matroid, workers: int = 1) -> ClassificationResult:
    """Does every secondary base extend into each base in at most one way?

    False as soon as some secondary base A and base B admit two distinct
    elements of B whose addition to A gives a base; the witness is the least
    such (A, B, e1, e2) in canonical order.
    """
    if m.rank == 0:
        raise RankZero("unique expansion is undefined at rank zero")
    base_masks = m.bases.masks()
    ground = m.ground

    def scan(a: Subset) -> ExpansionWitness | None:
        for b in m.bases:
            first = -1
            for e in b.indices():
                if (a.mask | (1 << e)) in base_masks:
                    if first >= 0:
                        return ExpansionWitness(
                            a, b, ground.label(first), ground.label(e)
                        )
                    first = e
        return None

    witness = _first_hit(secondary_bases(m).sets, scan, workers)
    return ClassificationResult(witness is None, witness)


def is_unique_exchange(m: Matroid, workers: int = 1) -> ClassificationResult:
    """After removing x from base1, is the repairing element of base2 unique?

    Vacuously true when no pair of bases offers two repairs (in particular for
    rank zero); the witness is the least (B1, B2, x, y1, y2) otherwise.
    """
    base_masks = m.bases.masks()
    ground = m.ground

    def scan(b1: Subset) -> ExchangeWitness | None:
        for b2 in m.bases:
            if b1 == b2:
                continue
            incoming = (b2 - b1).indices()
            for x in (b1 - b2).indices():
                stripped = b1.mask ^ (1 << x)
                first = -1
                for y in incoming:
                    if (stripped | (1 << y)) in base_masks:
                        if first >= 0:
                            return ExchangeWitness(
                                b1, b2, ground.label(x),
                                ground.label(first), ground.label(y),
                            )
                        first = y
        return None

    witness = _first_hit(m.bases.sets, scan, workers)
    return ClassificationResult(witness is None, witness)


def _minimality_search(
    m: Matroid, same_boundary: Callable[[Iterable[int]], bool],
    cap: int, workers: int,
) -> ClassificationResult:
    bases = m.bases.sets
    if len(bases) > cap:
        raise SearchCapExceeded(
            f"{len(bases)} bases exceed the exhaustive search cap {cap}"
        )

    def valid(combo: tuple[Subset, ...]) -> bool:
        masks = [s.mask for s in combo]
        if not same_boundary(masks):
            return False
        return first_exchange_violation(masks, frozenset(masks)) is None

    # Decreasing size, canonical order within a size; the first valid
    # subfamily found is the canonical witness.  With workers the size range
    # is split into contiguous chunks and the earliest chunk's hit wins.
    for k in range(len(bases) - 1, 0, -1):
        total = comb(len(bases), k)

        def scan_range(bounds: tuple[int, int], _k=k) -> tuple[Subset, ...] | None:
            start, stop = bounds
            for combo in islice(combinations(bases, _k), start, stop):
                if valid(combo):
                    return combo
            return None

        if workers <= 1 or total < _PARALLEL_MIN:
            hit = scan_range((0, total))
        else:
            step = -(-total // workers)
            chunks = [(i, min(i + step, total)) for i in range(0, total, step)]
            hit = _first_hit(chunks, scan_range, workers)
        if hit is not None:
            return ClassificationResult(
                False, SubfamilyWitness(SetFamily(m.ground, hit))
            )
    return ClassificationResult(True, None)


def is_union_minimal(
    m: Matroid, cap: int = DEFAULT_SEARCH_CAP, workers: int = 1
) -> ClassificationResult:
    """Is no proper subfamily of the bases a base family with the same union?

    Exhaustive over all proper nonempty subfamilies, so the base family size
    is capped (default 20, about a million subfamilies).
    """
    support = m.support().mask

    def same_union(masks: Iterable[int]) -> bool:
        u = 0
        for x in masks:
            u |= x
        return u == support

    return _minimality_search(m, same_union, cap, workers)


def is_intersection_minimal(
    m: Matroid, cap: int = DEFAULT_SEARCH_CAP, workers: int = 1
) -> ClassificationResult:
    """Is no proper subfamily of the bases a base family with the same intersection?"""
    common = m.base_intersection().mask
    full = (1 << m.ground.size) - 1

    def same_intersection(masks: Iterable[int]) -> bool:
        c = full
        for x in masks:
            c &= x
        return c == common

    return _minimality_search(m, same_intersection, cap, workers)


def recover_partition(m: Matroid) -> Partition | None:
    """The forming family as a partition of the base support, when it is one.

    When present this is the unique partition of the support that every base
    meets exactly once per block.
    """
    fam = forming_family(m).family
    if is_partition(fam, m.support()):
        return Partition(fam)
    return None


def is_transversal_of(m: Matroid, p: Partition) -> bool:
    """Does every base meet every block of `p` exactly once?

    `p` must partition the union of the bases.  A true verdict is re-verified
    against its two consequences: the base family equals the one-per-block
    transversal product of `p`, and the base count equals the product of the
    block sizes.
    """
    if p.ground != m.ground:
        raise SupportMismatch("partition lives on a different ground set")
    if p.support() != m.support():
        raise SupportMismatch(
            f"partition support {p.support()} differs from base support {m.support()}"
        )
    verdict = all(
        (b.mask & k.mask).bit_count() == 1 for b in m.bases for k in p
    )
    if verdict:
        assert m.bases == transversals(p)
        assert len(m.bases) == combination_number(p)
    return verdict
