"""Ground sets, bitmask subsets, canonically ordered set families, partitions.

Everything here is an immutable value.  A ground set fixes an ordered universe
of at most 64 opaque string labels; subsets are single machine words over the
element indices, so membership, union, intersection and complement are O(1).

Canonical order: subsets compare by (cardinality, sorted index list), families
by the resulting member list.  Two equal families therefore always serialize
identically, which keeps every report and witness deterministic.
"""

from __future__ import annotations

from math import prod
from typing import Iterable, Iterator, Sequence

from .errors import GroundSetTooLarge

MAX_GROUND_SIZE = 64


def _bit_indices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class GroundSet:
    """An ordered universe of distinct element labels."""

    __slots__ = ("labels", "_index", "_hash")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(str(x) for x in labels)
        if not labels:
            raise ValueError("ground set must be nonempty")
        if len(labels) > MAX_GROUND_SIZE:
            raise GroundSetTooLarge(
                f"{len(labels)} elements, cap is {MAX_GROUND_SIZE}"
            )
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError("ground set labels must be distinct")
        self.labels = labels
        self._index = index
        self._hash = hash(labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"label {label!r} not in ground set") from None

    def label(self, index: int) -> str:
        return self.labels[index]

    def subset(self, *labels: str) -> Subset:
        """Subset holding the given labels (duplicates collapse)."""
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(str(lab))
        return Subset(self, mask)

    def subset_of(self, indices: Iterable[int]) -> Subset:
        mask = 0
        for i in indices:
            mask |= 1 << i
        return Subset(self, mask)

    def from_mask(self, mask: int) -> Subset:
        return Subset(self, mask)

    def empty(self) -> Subset:
        return Subset(self, 0)

    def full(self) -> Subset:
        return Subset(self, (1 << self.size) - 1)

    def all_subsets(self) -> Iterator[Subset]:
        """Every subset of the universe, in mask order (not canonical order)."""
        for mask in range(1 << self.size):
            yield Subset(self, mask)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"GroundSet({','.join(self.labels)})"


def _same_ground(a: GroundSet, b: GroundSet) -> None:
    if a != b:
        raise ValueError("operands live on different ground sets")


class Subset:
    """An immutable subset of a ground set, stored as a bitmask of indices."""

    __slots__ = ("ground", "mask")

    def __init__(self, ground: GroundSet, mask: int):
        if mask < 0 or mask >> ground.size:
            raise ValueError("mask has bits outside the ground set")
        self.ground = ground
        self.mask = mask

    def indices(self) -> tuple[int, ...]:
        return _bit_indices(self.mask)

    def labels(self) -> tuple[str, ...]:
        return tuple(self.ground.labels[i] for i in self.indices())

    @property
    def sort_key(self) -> tuple:
        return (self.mask.bit_count(), self.indices())

    def issubset(self, other: Subset) -> bool:
        _same_ground(self.ground, other.ground)
        return self.mask & ~other.mask == 0

    def complement(self) -> Subset:
        return Subset(self.ground, self.mask ^ ((1 << self.ground.size) - 1))

    def subsets(self) -> Iterator[Subset]:
        """All subsets of this subset (submask walk, not canonical order)."""
        sub = self.mask
        while True:
            yield Subset(self.ground, sub)
            if sub == 0:
                return
            sub = (sub - 1) & self.mask

    def __or__(self, other: Subset) -> Subset:
        _same_ground(self.ground, other.ground)
        return Subset(self.ground, self.mask | other.mask)

    def __and__(self, other: Subset) -> Subset:
        _same_ground(self.ground, other.ground)
        return Subset(self.ground, self.mask & other.mask)

    def __sub__(self, other: Subset) -> Subset:
        _same_ground(self.ground, other.ground)
        return Subset(self.ground, self.mask & ~other.mask)

    def __contains__(self, label: str) -> bool:
        return (self.mask >> self.ground.index(str(label))) & 1 == 1

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels())

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subset)
            and self.ground == other.ground
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.mask))

    def __lt__(self, other: Subset) -> bool:
        _same_ground(self.ground, other.ground)
        return self.sort_key < other.sort_key

    def __le__(self, other: Subset) -> bool:
        _same_ground(self.ground, other.ground)
        return self.sort_key <= other.sort_key

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


class SetFamily:
    """A duplicate-free collection of subsets, kept in canonical order."""

    __slots__ = ("ground", "sets", "_masks")

    def __init__(self, ground: GroundSet, subsets: Iterable[Subset] = ()):
        masks = set()
        for s in subsets:
            _same_ground(ground, s.ground)
            masks.add(s.mask)
        self.ground = ground
        self.sets = tuple(
            sorted((Subset(ground, m) for m in masks), key=lambda s: s.sort_key)
        )
        self._masks = frozenset(masks)

    def masks(self) -> frozenset[int]:
        return self._masks

    @property
    def sort_key(self) -> tuple:
        return tuple(s.sort_key for s in self.sets)

    def union(self) -> Subset:
        mask = 0
        for m in self._masks:
            mask |= m
        return Subset(self.ground, mask)

    def intersection(self) -> Subset:
        """Common intersection of all members; the family must be nonempty."""
        if not self.sets:
            raise ValueError("intersection of an empty family is undefined")
        mask = (1 << self.ground.size) - 1
        for m in self._masks:
            mask &= m
        return Subset(self.ground, mask)

    def __contains__(self, s: Subset) -> bool:
        return s.ground == self.ground and s.mask in self._masks

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __bool__(self) -> bool:
        return bool(self.sets)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SetFamily)
            and self.ground == other.ground
            and self._masks == other._masks
        )

    def __hash__(self) -> int:
        return hash((self.ground, self._masks))

    def __repr__(self) -> str:
        return "{" + ",".join(repr(s) for s in self.sets) + "}"


def low(family: SetFamily) -> SetFamily:
    """Downward closure: every subset of every member."""
    seen: set[int] = set()
    for member in family:
        sub = member.mask
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & member.mask
    return SetFamily(family.ground, (Subset(family.ground, m) for m in seen))


def maximal(family: SetFamily) -> SetFamily:
    """Inclusion-maximal members of the family."""
    masks = family.masks()
    keep = [
        m
        for m in masks
        if not any(m != o and m & ~o == 0 for o in masks)
    ]
    return SetFamily(family.ground, (Subset(family.ground, m) for m in keep))


def complements(family: SetFamily) -> SetFamily:
    """Complement of every member, taken in the ground set."""
    full = (1 << family.ground.size) - 1
    return SetFamily(family.ground, (Subset(family.ground, full ^ m) for m in family.masks()))


def is_covering(family: SetFamily, support: Subset) -> bool:
    """True iff the family has no empty block and its union is exactly `support`.

    An empty family covers an empty support vacuously; a nonempty support can
    only be covered by a nonempty family.
    """
    _same_ground(family.ground, support.ground)
    if 0 in family.masks():
        return False
    return family.union().mask == support.mask


def is_partition(family: SetFamily, support: Subset) -> bool:
    """True iff the family covers `support` with pairwise disjoint blocks."""
    if not is_covering(family, support):
        return False
    total = sum(len(s) for s in family)
    return total == len(support)


class Partition:
    """A set family with nonempty, pairwise disjoint blocks.

    A partition partitions its own union; the union is exposed as `support()`.
    The empty partition (no blocks, empty support) is allowed as the degenerate
    case.
    """

    __slots__ = ("family",)

    def __init__(self, family: SetFamily):
        if not is_partition(family, family.union()):
            raise ValueError(f"{family} is not a partition: blocks must be nonempty and disjoint")
        self.family = family

    @property
    def ground(self) -> GroundSet:
        return self.family.ground

    def support(self) -> Subset:
        return self.family.union()

    def block_of(self, label: str) -> Subset:
        i = self.ground.index(label)
        for b in self.family:
            if (b.mask >> i) & 1:
                return b
        raise KeyError(f"label {label!r} not in the partition support")

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.family)

    def __len__(self) -> int:
        return len(self.family)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.family == other.family

    def __hash__(self) -> int:
        return hash(self.family)

    def __repr__(self) -> str:
        return f"Partition({self.family!r})"


def combination_number(p: Partition) -> int:
    """Product of the block sizes; counts the one-per-block transversals."""
    return prod(len(b) for b in p)


def transversals(p: Partition) -> SetFamily:
    """All sets picking exactly one element from every block of `p`.

    For the empty partition this is the single empty set.
    """
    masks = [0]
    for block in p:
        masks = [m | (1 << i) for m in masks for i in block.indices()]
    return SetFamily(p.ground, (Subset(p.ground, m) for m in masks))


def all_partitions(support: Subset) -> Iterator[Partition]:
    """Every partition of `support`, as Partition values over its ground set.

    The number of results is the Bell number of len(support), so keep the
    support small (the verification harness never exceeds 6 elements).
    """
    ground = support.ground
    idxs = support.indices()

    def rec(remaining: Sequence[int]) -> Iterator[list[int]]:
        if not remaining:
            yield []
            return
        first, rest = remaining[0], remaining[1:]
        # first element joins an existing block or opens a new one
        for sub in rec(rest):
            for i in range(len(sub)):
                yield sub[:i] + [sub[i] | (1 << first)] + sub[i + 1:]
            yield sub + [1 << first]

    for block_masks in rec(idxs):
        yield Partition(SetFamily(ground, (Subset(ground, m) for m in block_masks)))

