"""Exhaustive enumeration of every labeled matroid on a small ground set.

For each rank r the enumerator scans every nonempty family of r-element
subsets and keeps the ones satisfying the base exchange requirement; a family
of equal-size sets is automatically an antichain.  The scan is organized by
the canonically least member: fix it, then extend with canonically greater
r-subsets only, so each family is visited exactly once.

The exchange test here is a standalone bitmask routine kept deliberately
independent of the validating constructor, so the two routes can cross-check
each other (the test suite compares this enumeration against an oracle that
pushes every candidate family through Matroid.from_bases).

Matroid counts grow super-exponentially, so the ground size is hard-capped at
6; sizes up to 5 are instant, size 6 is a slow opt-in scan.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .errors import GroundSetTooLarge
from .matroid import Matroid
from .setalgebra import GroundSet, SetFamily, Subset

MAX_ENUMERATION_SIZE = 6

_GROUNDS: dict[int, GroundSet] = {}


def enumeration_ground(n: int) -> GroundSet:
    """The shared ground set {1..n} used by the enumerated population."""
    if n not in _GROUNDS:
        _GROUNDS[n] = GroundSet(str(i) for i in range(1, n + 1))
    return _GROUNDS[n]


def _exchange_closed(fam: tuple[int, ...], bits_of: list[tuple[int, ...]]) -> bool:
    # bitmask-level base exchange test over an equal-cardinality family
    members = set(fam)
    for b1 in fam:
        for b2 in fam:
            if b1 == b2:
                continue
            incoming = bits_of[b2 & ~b1]
            for x in bits_of[b1 & ~b2]:
                stripped = b1 ^ (1 << x)
                for y in incoming:
                    if stripped | (1 << y) in members:
                        break
                else:
                    return False
    return True


@lru_cache(maxsize=None)
def _rank_families(n: int, r: int) -> tuple[tuple[int, ...], ...]:
    rsets = [sum(1 << i for i in c) for c in combinations(range(n), r)]
    bits_of = [
        tuple(i for i in range(n) if (m >> i) & 1) for m in range(1 << n)
    ]
    found: list[tuple[int, ...]] = []
    for least in range(len(rsets)):
        head = rsets[least]
        tail = rsets[least + 1:]
        for size in range(len(tail) + 1):
            for extra in combinations(tail, size):
                fam = (head, *extra)
                if _exchange_closed(fam, bits_of):
                    found.append(fam)
    # members are already canonically sorted within each family; order the
    # families themselves canonically as well
    found.sort(key=lambda fam: tuple(bits_of[m] for m in fam))
    return tuple(found)


def enumerate_matroids(n: int, rank: int | None = None) -> Iterator[Matroid]:
    """Every labeled matroid on the ground set {1..n}, exactly once.

    Yields in canonical order: rank ascending, then the canonical order of the
    base families.  `rank` restricts the stream to a single rank.
    """
    if not 1 <= n <= MAX_ENUMERATION_SIZE:
        raise GroundSetTooLarge(
            f"enumeration supports 1..{MAX_ENUMERATION_SIZE} elements, got {n}"
        )
    ground = enumeration_ground(n)
    ranks = range(n + 1) if rank is None else [rank]
    for r in ranks:
        if not 0 <= r <= n:
            continue
        for fam in _rank_families(n, r):
            family = SetFamily(ground, (Subset(ground, m) for m in fam))
            yield Matroid._trusted(ground, family)


def count_matroids(n: int, rank: int | None = None) -> int:
    """Number of labeled matroids on {1..n}, optionally of one rank."""
    return sum(1 for _ in enumerate_matroids(n, rank))
