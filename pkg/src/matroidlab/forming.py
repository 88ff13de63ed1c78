"""Secondary bases, the rank-raising expansion operator, and forming families."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotABase, RankZero
from .matroid import Matroid
from .setalgebra import SetFamily, Subset


def secondary_bases(m: Matroid) -> SetFamily:
    """All independent sets one element smaller than a base.

    Undefined for rank-zero matroids.  Every such set arises by deleting one
    element from some base, so no independence scan is needed.
    """
    if m.rank == 0:
        raise RankZero("secondary bases are undefined at rank zero")
    seen: set[int] = set()
    for base in m.bases.masks():
        rest = base
        while rest:
            bit = rest & -rest
            rest ^= bit
            seen.add(base ^ bit)
    return SetFamily(m.ground, (Subset(m.ground, s) for s in seen))


def expansion(m: Matroid, x: Subset) -> Subset:
    """Elements whose addition raises the rank of `x` by one.

    Always disjoint from `x` itself, since adding a present element leaves the
    rank unchanged.
    """
    if x.ground != m.ground:
        raise ValueError("subset lives on a different ground set")
    r = m.rank_of(x)
    out = 0
    for i in range(m.ground.size):
        bit = 1 << i
        if bit & x.mask:
            continue
        if m.rank_of(Subset(m.ground, x.mask | bit)) == r + 1:
            out |= bit
    return Subset(m.ground, out)


@dataclass(frozen=True)
class FormingFamily:
    """Deduplicated family of expansion sets of secondary bases.

    `base` records the base the family is relative to, or None for the global
    family built from every secondary base.
    """

    family: SetFamily
    base: Subset | None = None

    @property
    def is_global(self) -> bool:
        return self.base is None

    def __iter__(self):
        return iter(self.family)

    def __len__(self) -> int:
        return len(self.family)


def forming_family(m: Matroid) -> FormingFamily:
    """Expansion sets of all secondary bases, deduplicated.

    Block order is deterministic because secondary bases are scanned in
    canonical order and the result is itself canonically ordered.
    """
    blocks = {expansion(m, a) for a in secondary_bases(m)}
    return FormingFamily(SetFamily(m.ground, blocks))


def forming_family_wrt(m: Matroid, b: Subset) -> FormingFamily:
    """Expansion sets of the secondary bases contained in the base `b`.

    The secondary bases inside a base are exactly its one-element deletions.
    """
    if m.rank == 0:
        raise RankZero("forming families are undefined at rank zero")
    if b not in m.bases:
        raise NotABase(f"{b} is not a base")
    blocks = set()
    rest = b.mask
    while rest:
        bit = rest & -rest
        rest ^= bit
        blocks.add(expansion(m, Subset(m.ground, b.mask ^ bit)))
    return FormingFamily(SetFamily(m.ground, blocks), base=b)
