"""Removable rim hooks, cores, and the recursive hook-pattern partition classes.

A removable ell-rim hook is canonically indexed by its head: the unique box
whose hook length is exactly ell.  The hook itself is the trailing rim strip
running from the end of the head's row to the end of its column, so
enumeration is linear in the number of boxes and removal is deterministic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .partitions import (
    Box,
    Partition,
    check_ell,
    conjugate,
    contains_box,
)

HORIZONTAL = "H"
VERTICAL = "V"
MIXED = "M"


@dataclass(frozen=True)
class RimHook:
    """A removable ell-rim hook of some host partition."""

    head: Box
    boxes: frozenset[Box]
    orientation: str  # HORIZONTAL, VERTICAL, or MIXED

    def to_json(self) -> dict:
        return {
            "head": list(self.head),
            "boxes": [list(b) for b in sorted(self.boxes)],
            "orientation": self.orientation,
        }


def _rim_strip(p: Partition, head: Box, conj: Partition) -> list[Box]:
    """Rim boxes of the hook of `head`: (x, y) in p with (x+1, y+1) not in p."""
    a, b = head
    strip = []
    for x in range(a, conj[b - 1] + 1):
        below = p[x] if x < len(p) else 0
        for y in range(max(b, below), p[x - 1] + 1):
            strip.append((x, y))
    return strip


def _orientation(strip: list[Box]) -> str:
    rows = {x for x, _ in strip}
    if len(rows) == 1:
        return HORIZONTAL
    cols = {y for _, y in strip}
    if len(cols) == 1:
        return VERTICAL
    return MIXED


def removable_rim_hooks(p: Partition, ell: int) -> list[RimHook]:
    """One hook per box with hook length exactly ell, ordered by head."""
    check_ell(ell)
    conj = conjugate(p)
    hooks = []
    for a, row in enumerate(p, start=1):
        for b in range(1, row + 1):
            if (row - b) + (conj[b - 1] - a) + 1 == ell:
                strip = _rim_strip(p, (a, b), conj)
                assert len(strip) == ell, (p, (a, b), strip)
                hooks.append(
                    RimHook((a, b), frozenset(strip), _orientation(strip))
                )
    return hooks


def remove_hook(p: Partition, hook: RimHook) -> Partition:
    """Delete a removable rim hook; the rank drops by its size."""
    if not contains_box(p, hook.head):
        raise ValueError(f"hook at {hook.head} is not removable from {p}")
    conj = conjugate(p)
    a, b = hook.head
    if (p[a - 1] - b) + (conj[b - 1] - a) + 1 != len(hook.boxes):
        raise ValueError(f"hook at {hook.head} is not removable from {p}")
    if frozenset(_rim_strip(p, hook.head, conj)) != hook.boxes:
        raise ValueError(f"hook at {hook.head} is not removable from {p}")
    rows = list(p)
    for x, _ in hook.boxes:
        rows[x - 1] -= 1
    while rows and rows[-1] == 0:
        rows.pop()
    assert all(rows[i] >= rows[i + 1] for i in range(len(rows) - 1)), (p, hook)
    return tuple(rows)


def add_horizontal_hook(p: Partition, row: int, ell: int) -> Partition | None:
    """Lengthen `row` by ell when the result is a partition, else None.

    The added boxes always form a removable horizontal ell-rim hook of the
    result, so no further shape check is needed.
    """
    check_ell(ell)
    if row < 1 or row > len(p) + 1:
        return None
    rows = list(p) + ([0] if row == len(p) + 1 else [])
    rows[row - 1] += ell
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        return None
    return tuple(rows)


def add_vertical_hook(p: Partition, col: int, ell: int) -> Partition | None:
    """Heighten `col` by ell when the result is a partition, else None."""
    q = add_horizontal_hook(conjugate(p), col, ell)
    return conjugate(q) if q is not None else None


def core(p: Partition, ell: int) -> Partition:
    """Remove ell-rim hooks until none remain; order does not matter."""
    check_ell(ell)
    q = p
    while True:
        hooks = removable_rim_hooks(q, ell)
        if not hooks:
            return q
        q = remove_hook(q, hooks[0])


def is_core(p: Partition, ell: int) -> bool:
    """True iff no hook length is divisible by ell."""
    check_ell(ell)
    conj = conjugate(p)
    for a, row in enumerate(p, start=1):
        for b in range(1, row + 1):
            if ((row - b) + (conj[b - 1] - a) + 1) % ell == 0:
                return False
    return True


def adjacent(a: frozenset[Box] | set[Box], b: frozenset[Box] | set[Box]) -> bool:
    """True iff some box of a shares an edge with some box of b."""
    b = set(b)
    for x, y in a:
        if ((x + 1, y) in b or (x - 1, y) in b
                or (x, y + 1) in b or (x, y - 1) in b):
            return True
    return False


@functools.lru_cache(maxsize=None)
def _horizontally_closed(p: Partition, ell: int) -> bool:
    """No removable non-horizontal hook, recursively under horizontal removals."""
    hooks = removable_rim_hooks(p, ell)
    if any(h.orientation != HORIZONTAL for h in hooks):
        return False
    return all(_horizontally_closed(remove_hook(p, h), ell) for h in hooks)


def is_l_partition(p: Partition, ell: int) -> bool:
    """Regular partition with only horizontal hooks under any removal sequence."""
    check_ell(ell)
    from .partitions import is_regular

    return is_regular(p, ell) and _horizontally_closed(p, ell)


@functools.lru_cache(maxsize=None)
def _generalized_ok(p: Partition, ell: int) -> bool:
    hooks = removable_rim_hooks(p, ell)
    if any(h.orientation == MIXED for h in hooks):
        return False
    for first in hooks:
        q = remove_hook(p, first)
        opposite = VERTICAL if first.orientation == HORIZONTAL else HORIZONTAL
        for second in removable_rim_hooks(q, ell):
            if second.orientation == opposite and adjacent(first.boxes, second.boxes):
                return False
        if not _generalized_ok(q, ell):
            return False
    return True


def is_generalized_l_partition(p: Partition, ell: int) -> bool:
    """Only horizontal/vertical hooks, never adjacent across one removal,
    recursively under every sequence of hook removals."""
    check_ell(ell)
    return _generalized_ok(p, ell)
