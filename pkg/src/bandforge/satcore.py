"""Saturation closure on the extreme points and enumeration of (bi)saturated sets.

``sat(M)`` is the set of extreme points lying in the affine hull of ``M``;
``M`` is bisaturated when ``M = sat(sat(M^c)^c)``.  Subsets are carried as
:class:`IndexSet` values (sorted 0-based indices plus the ambient size) and
internally as bitmasks.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .cone import LambdaSet
from .ratmath import ONE, RowSpace

DEFAULT_CAP = 22


class CapExceeded(Exception):
    def __init__(self, size: int, cap: int):
        super().__init__(f"|Lambda| = {size} exceeds the enumeration cap {cap}")
        self.size = size
        self.cap = cap


class NotBisaturated(ValueError):
    pass


def default_cap() -> int:
    env = os.environ.get("BANDFORGE_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass(frozen=True, order=True)
class IndexSet:
    members: tuple
    size: int

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        if members and (members[0] < 0 or members[-1] >= self.size):
            raise ValueError(f"indices {members} out of range for |Lambda| = {self.size}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, members: Iterable[int], size: int) -> "IndexSet":
        return cls(tuple(members), size)

    @classmethod
    def from_mask(cls, mask: int, size: int) -> "IndexSet":
        return cls(tuple(i for i in range(size) if mask >> i & 1), size)

    @classmethod
    def full(cls, size: int) -> "IndexSet":
        return cls(tuple(range(size)), size)

    @classmethod
    def empty(cls, size: int) -> "IndexSet":
        return cls((), size)

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.members)

    def complement(self) -> "IndexSet":
        return IndexSet.from_mask(((1 << self.size) - 1) & ~self.mask, self.size)

    def issubset(self, other: "IndexSet") -> bool:
        return set(self.members) <= set(other.members)

    def __or__(self, other: "IndexSet") -> "IndexSet":
        return IndexSet(self.members + other.members, self.size)

    def __contains__(self, i) -> bool:
        return i in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def one_based(self) -> list[int]:
        return [i + 1 for i in self.members]


class Kind(str, Enum):
    SATURATED = "saturated"
    BISATURATED = "bisaturated"


@dataclass(frozen=True)
class SaturatedFamily:
    sets: tuple
    kind: Kind

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s) -> bool:
        return s in self.sets


def _check(m: IndexSet, lam: LambdaSet) -> None:
    if m.size != len(lam):
        raise ValueError(f"index set is over {m.size} points, Lambda has {len(lam)}")


def _sat_mask(mask: int, lam: LambdaSet) -> int:
    memo = lam._memo.setdefault("sat", {})
    hit = memo.get(mask)
    if hit is not None:
        return hit
    if mask == 0:
        memo[0] = 0
        return 0
    n = lam.dim
    lifted = [f + (ONE,) for f in lam.functionals]
    hull = RowSpace([lifted[i] for i in range(len(lam)) if mask >> i & 1], n + 1)
    out = mask
    for j in range(len(lam)):
        if not out >> j & 1 and hull.contains(lifted[j]):
            out |= 1 << j
    memo[mask] = out
    return out


def saturate(m: IndexSet, lam: LambdaSet) -> IndexSet:
    """``Lambda`` intersected with the affine hull of ``m``; ``sat(empty) = empty``."""
    _check(m, lam)
    return IndexSet.from_mask(_sat_mask(m.mask, lam), m.size)


def is_saturated(m: IndexSet, lam: LambdaSet) -> bool:
    return saturate(m, lam) == m


def _full(size: int) -> int:
    return (1 << size) - 1


def _is_bisat_mask(mask: int, lam: LambdaSet) -> bool:
    full = _full(len(lam))
    return _sat_mask(full & ~_sat_mask(full & ~mask, lam), lam) == mask


def is_bisaturated(m: IndexSet, lam: LambdaSet) -> bool:
    _check(m, lam)
    return _is_bisat_mask(m.mask, lam)


def partner(m: IndexSet, lam: LambdaSet) -> IndexSet:
    """``sat(m^c)``, the other half of the bisaturated pair containing ``m``."""
    if not is_bisaturated(m, lam):
        raise NotBisaturated(f"{m.one_based()} is not bisaturated")
    return saturate(m.complement(), lam)


def is_bisaturated_pair(m1: IndexSet, m2: IndexSet, lam: LambdaSet) -> bool:
    return saturate(m2.complement(), lam) == m1 and saturate(m1.complement(), lam) == m2


def _enforce_cap(lam: LambdaSet, cap) -> None:
    cap = default_cap() if cap is None else cap
    if len(lam) > cap:
        raise CapExceeded(len(lam), cap)


def _saturated_masks_brute(lam: LambdaSet) -> set:
    return {_sat_mask(mask, lam) for mask in range(1 << len(lam))}


def _saturated_masks_incremental(lam: LambdaSet) -> set:
    # Every closed set is reached from sat(empty) by repeatedly adding one point
    # and closing (walk up an affine basis of the set), so this visits them all.
    size = len(lam)
    start = _sat_mask(0, lam)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for j in range(size):
            if not cur >> j & 1:
                nxt = _sat_mask(cur | 1 << j, lam)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return seen


def _family(masks, size: int, kind: Kind) -> SaturatedFamily:
    return SaturatedFamily(tuple(sorted(IndexSet.from_mask(x, size) for x in masks)), kind)


def enumerate_saturated(lam: LambdaSet, cap=None, method: str = "incremental") -> SaturatedFamily:
    """All fixed points of :func:`saturate`, sorted by member list.

    ``method="brute"`` closes every one of the ``2^|Lambda|`` subsets;
    ``"incremental"`` grows closed sets one point at a time.  Both give the
    same family.
    """
    _enforce_cap(lam, cap)
    if method == "brute":
        masks = _saturated_masks_brute(lam)
    elif method == "incremental":
        masks = _saturated_masks_incremental(lam)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _family(masks, len(lam), Kind.SATURATED)


def enumerate_bisaturated(lam: LambdaSet, cap=None, method: str = "incremental") -> SaturatedFamily:
    sat = enumerate_saturated(lam, cap, method)
    masks = [s.mask for s in sat if _is_bisat_mask(s.mask, lam)]
    return _family(masks, len(lam), Kind.BISATURATED)
