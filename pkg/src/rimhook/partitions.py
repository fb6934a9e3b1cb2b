"""Partition values and Young-diagram geometry.

A partition is an immutable tuple of weakly decreasing positive integers;
the empty tuple is the empty partition.  Boxes are 1-based ``(row, column)``
pairs in the English convention (row 1 on top).  All functions are pure and
safe to call concurrently.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Literal

Partition = tuple[int, ...]
Box = tuple[int, int]

EMPTY: Partition = ()


def check_ell(ell: int) -> int:
    """Validate the hook-length modulus.  Everything here needs ell >= 3."""
    if not isinstance(ell, int) or ell < 3:
        raise ValueError(f"ell must be an integer >= 3, got {ell!r}")
    return ell


def as_partition(parts: Iterable[int]) -> Partition:
    """Coerce an iterable of parts to a partition, validating its shape."""
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise ValueError(f"parts must be positive integers: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse the canonical text form: comma-separated parts, '-' for empty."""
    text = text.strip()
    if text in ("-", ""):
        return EMPTY
    try:
        return as_partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None


def format_partition(p: Partition) -> str:
    """Canonical text form of a partition; the empty partition is '-'."""
    return ",".join(str(x) for x in p) if p else "-"


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram: result[j-1] = #{i : p_i >= j}."""
    if not p:
        return EMPTY
    cols = []
    k = len(p)
    for j in range(1, p[0] + 1):
        while p[k - 1] < j:
            k -= 1
        cols.append(k)
    return tuple(cols)


def boxes(p: Partition) -> Iterator[Box]:
    """All boxes of the diagram in row-major order."""
    for a, row in enumerate(p, start=1):
        for b in range(1, row + 1):
            yield (a, b)


def contains_box(p: Partition, box: Box) -> bool:
    a, b = box
    return 1 <= a <= len(p) and 1 <= b <= p[a - 1]


def hook_length(p: Partition, box: Box) -> int:
    """Boxes to the right of or below `box`, including the box itself."""
    if not contains_box(p, box):
        raise ValueError(f"box {box} is not in partition {p}")
    a, b = box
    return (p[a - 1] - b) + (conjugate(p)[b - 1] - a) + 1


def hook_lengths(p: Partition) -> dict[Box, int]:
    """Hook lengths of every box, keyed by (row, column)."""
    conj = conjugate(p)
    return {
        (a, b): (p[a - 1] - b) + (conj[b - 1] - a) + 1
        for a, b in boxes(p)
    }


def residue(box: Box, ell: int) -> int:
    """(column - row) mod ell."""
    check_ell(ell)
    a, b = box
    return (b - a) % ell


def m_ell(k: int, ell: int) -> int:
    """Divisibility indicator: 1 if ell divides k, else 0."""
    check_ell(ell)
    return 1 if k % ell == 0 else 0


def is_regular(p: Partition, ell: int) -> bool:
    """True iff no part occurs ell or more times."""
    check_ell(ell)
    return all(mult < ell for mult in Counter(p).values())


def ladder_index(box: Box, ell: int) -> int:
    """Ladder invariant omega = row + (ell-1)(col-1).

    Ladders ascend up-and-right: (a, b) and (a-(ell-1), b+1) share a ladder.
    Every box on ladder omega has residue (1 - omega) mod ell.
    """
    check_ell(ell)
    a, b = box
    return a + (ell - 1) * (b - 1)


def _ladder_top_down(omega: int, ell: int) -> list[Box]:
    """Diagram positions of ladder omega, topmost (smallest row) first."""
    b_max = 1 + (omega - 1) // (ell - 1)
    return [(omega - (ell - 1) * (b - 1), b) for b in range(b_max, 0, -1)]


def regularize(p: Partition, ell: int) -> Partition:
    """Slide every box to the top of its ladder; result is ell-regular."""
    check_ell(ell)
    occupancy = Counter(ladder_index(box, ell) for box in boxes(p))
    new_boxes: set[Box] = set()
    for omega, count in occupancy.items():
        new_boxes.update(_ladder_top_down(omega, ell)[:count])
    if not new_boxes:
        return EMPTY
    row_cols: dict[int, list[int]] = {}
    for a, b in new_boxes:
        row_cols.setdefault(a, []).append(b)
    n_rows = max(row_cols)
    parts = []
    for a in range(1, n_rows + 1):
        cols = sorted(row_cols.get(a, []))
        assert cols == list(range(1, len(cols) + 1)), (p, a, cols)
        parts.append(len(cols))
    assert all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)), (p, parts)
    return tuple(parts)


def regularization_class(p: Partition, ell: int) -> set[Partition]:
    """All partitions of the same rank with the same regularization."""
    check_ell(ell)
    target = regularize(p, ell)
    return {
        q for q in enumerate_partitions(sum(p))
        if regularize(q, ell) == target
    }


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, each exactly once, lexicographically decreasing."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")

    def gen(remaining: int, max_part: int) -> Iterator[Partition]:
        if remaining == 0:
            yield EMPTY
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return gen(n, n)


def addable_boxes(p: Partition) -> list[Box]:
    """Positions not in p whose addition gives a partition, top to bottom."""
    out = []
    for a in range(1, len(p) + 1):
        if a == 1 or p[a - 2] > p[a - 1]:
            out.append((a, p[a - 1] + 1))
    out.append((len(p) + 1, 1))
    return out


def removable_boxes(p: Partition) -> list[Box]:
    """Boxes of p whose deletion gives a partition, top to bottom."""
    out = []
    for a in range(1, len(p) + 1):
        if a == len(p) or p[a - 1] > p[a]:
            out.append((a, p[a - 1]))
    return out


def boxes_of_residue(
    p: Partition,
    i: int,
    ell: int,
    kind: Literal["addable", "removable"],
) -> list[Box]:
    """Addable or removable boxes of residue i, ordered top to bottom."""
    check_ell(ell)
    if not 0 <= i < ell:
        raise ValueError(f"residue {i} out of range [0, {ell})")
    if kind == "addable":
        candidates = addable_boxes(p)
    elif kind == "removable":
        candidates = removable_boxes(p)
    else:
        raise ValueError(f"kind must be 'addable' or 'removable', got {kind!r}")
    return [box for box in candidates if (box[1] - box[0]) % ell == i]


def satisfies_star(p: Partition, ell: int) -> bool:
    """True iff within each column all hook lengths agree on divisibility by ell.

    This is the hook condition equivalent to being an ell-partition for
    ell-regular partitions.
    """
    check_ell(ell)
    if not p:
        return True
    conj = conjugate(p)
    for b in range(1, p[0] + 1):
        col_height = conj[b - 1]
        divisible = {
            ((p[a - 1] - b) + (col_height - a) + 1) % ell == 0
            for a in range(1, col_height + 1)
        }
        if len(divisible) > 1:
            return False
    return True


def hook_divisibility_witness(p: Partition, box: Box, ell: int) -> int | None:
    """Residue i with row-end residue i and column-end residue i+1, if any.

    Such an i exists exactly when ell divides the hook length of `box`.
    """
    check_ell(ell)
    if not contains_box(p, box):
        raise ValueError(f"box {box} is not in partition {p}")
    a, b = box
    conj = conjugate(p)
    row_end = (a, p[a - 1])
    col_end = (conj[b - 1], b)
    i = (row_end[1] - row_end[0]) % ell
    if (col_end[1] - col_end[0]) % ell == (i + 1) % ell:
        return i
    return None
