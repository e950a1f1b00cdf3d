"""Rational shuffles Q(I1, ..., Ik) and their canonical member lists.

A member list is canonical when it is minimal: no member is an extended
shuffle ``L + Q(S) + R`` of the list (flanks empty or members themselves),
since such a member convexly contains the whole shuffle and dissolves into
its pieces.  Canonical lists are deduplicated and sorted structurally, so
two shuffles are isomorphic exactly when their canonical lists are equal.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .errors import ShapeError
from .orderterm import OrderTerm, Shuffle, normalize, structural_key


@dataclass(frozen=True)
class ShuffleList:
    members: tuple

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def _members(lst) -> tuple:
    return lst.members if isinstance(lst, ShuffleList) else tuple(lst)


def _flanks(j: OrderTerm, base: tuple) -> Optional[tuple]:
    # (L, R) when j = L + Q(base) + R with L, R empty or in base
    target = Shuffle(base)
    for i, b in enumerate(j.blocks):
        if b != target:
            continue
        left, right = OrderTerm(j.blocks[:i]), OrderTerm(j.blocks[i + 1:])
        if (not left or left in base) and (not right or right in base):
            return left, right
    return None


def canonical_minimal_list(raw: Iterable[OrderTerm]) -> ShuffleList:
    return _canonical(tuple(raw))


@lru_cache(maxsize=None)
def _canonical(raw: tuple) -> ShuffleList:
    members = {normalize([m]) for m in raw}
    members.discard(OrderTerm())
    if not members:
        raise ShapeError("a shuffle needs at least one non-empty member")
    members = sorted(members, key=structural_key)
    for m in members:
        for b in m.blocks:
            if not isinstance(b, Shuffle):
                continue
            base = b.members
            if all(x in base or _flanks(x, base) for x in members):
                return ShuffleList(base)
    return ShuffleList(tuple(members))


def lists_equivalent(l1, l2) -> bool:
    return canonical_minimal_list(_members(l1)) == canonical_minimal_list(_members(l2))


def extended_shuffle_decompose(j: OrderTerm, base) -> Optional[tuple]:
    """Flanks (L, R) with j = L + Q(base) + R, or None when j is a member of base."""
    base = _members(base)
    j = normalize([j])
    if j in base:
        return None
    flanks = _flanks(j, base)
    if flanks is None:
        raise ShapeError(f"{j} is neither a member nor an extended shuffle of the list")
    return flanks


def shuffle_members(t: OrderTerm) -> tuple:
    if len(t.blocks) != 1 or not isinstance(t.blocks[0], Shuffle):
        raise ShapeError(f"{t} is not a single shuffle")
    return t.blocks[0].members


def shuffle_sum(a: OrderTerm, b: OrderTerm) -> OrderTerm:
    """The good sum on shuffles: shuffle by the union of both member lists."""
    union = shuffle_members(a) + shuffle_members(b)
    return OrderTerm((Shuffle(canonical_minimal_list(union).members),))
