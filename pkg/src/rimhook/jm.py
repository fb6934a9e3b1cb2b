"""Hook-triple detection of JM partitions and their core/hook coordinates.

A partition is an (ell,0)-JM partition when no box triple (a,b), (a,y), (x,b)
has an ell-divisible hook at the pivot (a,b) and non-divisible hooks at both
mates.  Every such partition is encoded exactly once by a quintuple
(mu, r, s, rho, sigma): an ell-core mu, the counts r and s of leading
(ell-1)-staircase rows and columns around it, and the per-row / per-column
counts rho and sigma of horizontal and vertical hooks stacked on top.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .partitions import (
    Box,
    Partition,
    as_partition,
    check_ell,
    conjugate,
    enumerate_partitions,
    is_regular,
    regularize,
)
from .hooks import (
    HORIZONTAL,
    MIXED,
    is_core,
    remove_hook,
    removable_rim_hooks,
)


@dataclass(frozen=True)
class JMWitness:
    """A reducibility witness: divisible pivot, non-divisible row/column mates."""

    pivot: Box
    row_mate: Box
    col_mate: Box
    normalized: bool  # pivot strictly above the column mate and left of the row mate

    def to_json(self) -> dict:
        return {
            "pivot": list(self.pivot),
            "row_mate": list(self.row_mate),
            "col_mate": list(self.col_mate),
            "normalized": self.normalized,
        }


def _scan_witness(p: Partition, ell: int, normalized_only: bool) -> JMWitness | None:
    conj = conjugate(p)

    def hook(a: int, b: int) -> int:
        return (p[a - 1] - b) + (conj[b - 1] - a) + 1

    for a, row in enumerate(p, start=1):
        for b in range(1, row + 1):
            if hook(a, b) % ell != 0:
                continue
            y_start = b + 1 if normalized_only else 1
            x_start = a + 1 if normalized_only else 1
            row_mate = next(
                ((a, y) for y in range(y_start, row + 1)
                 if y != b and hook(a, y) % ell != 0),
                None,
            )
            if row_mate is None:
                continue
            col_mate = next(
                ((x, b) for x in range(x_start, conj[b - 1] + 1)
                 if x != a and hook(x, b) % ell != 0),
                None,
            )
            if col_mate is None:
                continue
            return JMWitness(
                pivot=(a, b),
                row_mate=row_mate,
                col_mate=col_mate,
                normalized=(col_mate[0] > a and row_mate[1] > b),
            )
    return None


def jm_witness(p: Partition, ell: int) -> JMWitness | None:
    """Some witness triple when one exists; None iff p is an (ell,0)-JM partition.

    Deterministic: pivots are scanned row-major, mates smallest-first.
    """
    check_ell(ell)
    return _scan_witness(p, ell, normalized_only=False)


def normalize_witness(p: Partition, ell: int) -> JMWitness | None:
    """A witness with the pivot strictly up-left of both mates, if p has any witness."""
    check_ell(ell)
    return _scan_witness(p, ell, normalized_only=True)


def is_jm(p: Partition, ell: int) -> bool:
    """True iff p has no reducibility witness."""
    check_ell(ell)
    return _scan_witness(p, ell, normalized_only=False) is None


@dataclass(frozen=True)
class JMQuintuple:
    """Core-plus-hooks coordinates (mu, r, s, rho, sigma) of a JM partition."""

    mu: Partition
    r: int
    s: int
    rho: Partition
    sigma: Partition

    def to_json(self) -> dict:
        return {
            "mu": list(self.mu),
            "r": self.r,
            "s": self.s,
            "rho": list(self.rho),
            "sigma": list(self.sigma),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "JMQuintuple":
        return cls(
            mu=as_partition(obj["mu"]),
            r=int(obj["r"]),
            s=int(obj["s"]),
            rho=as_partition(obj["rho"]),
            sigma=as_partition(obj["sigma"]),
        )


def _part(p: Partition, i: int) -> int:
    """1-based part access with zero padding past the end."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def check_quintuple(q: JMQuintuple, ell: int) -> JMQuintuple:
    """Validate the quintuple invariants, raising ValueError on failure."""
    check_ell(ell)
    as_partition(q.mu)
    as_partition(q.rho)
    as_partition(q.sigma)
    if q.r < 0 or q.s < 0:
        raise ValueError(f"r and s must be nonnegative: r={q.r}, s={q.s}")
    if not is_core(q.mu, ell):
        raise ValueError(f"mu={q.mu} is not an {ell}-core")
    if _part(q.mu, 1) - _part(q.mu, 2) >= ell - 1 and q.mu:
        raise ValueError(f"mu={q.mu} has first row difference >= ell-1")
    conj_mu = conjugate(q.mu)
    if _part(conj_mu, 1) - _part(conj_mu, 2) >= ell - 1 and q.mu:
        raise ValueError(f"mu={q.mu} has first column difference >= ell-1")
    if len(q.rho) > q.r + 1:
        raise ValueError(f"rho={q.rho} longer than r+1={q.r + 1}")
    if len(q.sigma) > q.s + 1:
        raise ValueError(f"sigma={q.sigma} longer than s+1={q.s + 1}")
    if not q.mu and _part(q.rho, q.r + 1) and _part(q.sigma, q.s + 1):
        raise ValueError(
            "empty core needs rho_{r+1} = 0 or sigma_{s+1} = 0, got "
            f"rho={q.rho}, sigma={q.sigma}"
        )
    return q


def compose_quintuple(q: JMQuintuple, ell: int) -> Partition:
    """The JM partition encoded by a valid quintuple.

    Rows 1..r carry the row staircase plus rho_i horizontal hooks; the core's
    rows follow, shifted right by s; the column staircase carries the sigma_j
    vertical hooks.  With an empty core the bare row of length s is omitted
    (it is already part of the column staircase) and rho_{r+1} hooks, when
    present, extend a row of length s directly.
    """
    check_quintuple(q, ell)
    mu, r, s, rho, sigma = q.mu, q.r, q.s, q.rho, q.sigma
    mu1 = _part(mu, 1)
    rows: list[int] = []
    for i in range(1, r + 1):
        rows.append(s + mu1 + (r + 1 - i) * (ell - 1) + _part(rho, i) * ell)
    if mu:
        rows.append(s + mu1 + _part(rho, r + 1) * ell)
        rows.extend(s + mu[j] for j in range(1, len(mu)))
    elif _part(rho, r + 1):
        rows.append(s + _part(rho, r + 1) * ell)
    rows.extend([s + 1] * (_part(sigma, s + 1) * ell))
    for j in range(s, 0, -1):
        rows.extend([j] * (ell - 1 + (_part(sigma, j) - _part(sigma, j + 1)) * ell))
    assert all(rows[i] >= rows[i + 1] for i in range(len(rows) - 1)), (q, rows)
    return tuple(rows)


def decompose(p: Partition, ell: int) -> JMQuintuple:
    """Invert compose_quintuple on a JM partition.

    Hooks are peeled topmost-head first; since a JM partition has no adjacent
    hooks, the per-row and per-column counts do not depend on the order.
    """
    check_ell(ell)
    if not is_jm(p, ell):
        raise ValueError(f"{p} is not an ({ell},0)-JM partition")
    rho_count: Counter[int] = Counter()
    sigma_count: Counter[int] = Counter()
    q = p
    while True:
        hooks = removable_rim_hooks(q, ell)
        if not hooks:
            break
        hook = hooks[0]
        assert hook.orientation != MIXED, (p, q, hook)
        if hook.orientation == HORIZONTAL:
            rho_count[hook.head[0]] += 1
        else:
            sigma_count[hook.head[1]] += 1
        q = remove_hook(q, hook)

    def leading_staircase(c: Partition) -> int:
        count = 0
        for i in range(len(c)):
            below = c[i + 1] if i + 1 < len(c) else 0
            if c[i] - below == ell - 1:
                count += 1
            else:
                break
        return count

    r = leading_staircase(q)
    s = leading_staircase(conjugate(q))
    mu = tuple(x - s for x in q[r:] if x - s > 0)

    def counts_to_partition(counter: Counter[int], limit: int) -> Partition:
        assert all(1 <= idx <= limit for idx in counter), (p, counter, limit)
        vals = [counter.get(i, 0) for i in range(1, limit + 1)]
        while vals and vals[-1] == 0:
            vals.pop()
        assert all(vals[i] >= vals[i + 1] for i in range(len(vals) - 1)), (p, vals)
        return tuple(vals)

    result = JMQuintuple(
        mu=mu,
        r=r,
        s=s,
        rho=counts_to_partition(rho_count, r + 1),
        sigma=counts_to_partition(sigma_count, s + 1),
    )
    return check_quintuple(result, ell)


def is_weak_l_partition(p: Partition, ell: int) -> bool:
    """True iff the regularization class of p contains a JM partition.

    Requires p to be ell-regular.  Runs two independent routes and insists
    they agree: a scan of the whole regularization class, and a lookup of the
    unique ladder-crystal node in the class.
    """
    check_ell(ell)
    if not is_regular(p, ell):
        raise ValueError(f"{p} is not {ell}-regular")
    rc = {q for q in enumerate_partitions(sum(p)) if regularize(q, ell) == p}
    via_scan = any(is_jm(q, ell) for q in rc)

    from .crystal import LADD, is_node

    ladd_members = [q for q in rc if is_node(q, ell, LADD)]
    if len(ladd_members) != 1:
        raise RuntimeError(
            f"expected exactly one ladder-crystal node in the class of {p}, "
            f"found {sorted(ladd_members, reverse=True)}"
        )
    via_crystal = is_jm(ladd_members[0], ell)
    if via_scan != via_crystal:
        raise RuntimeError(
            f"weak-detection routes disagree on {p}: "
            f"class scan says {via_scan}, crystal node says {via_crystal}"
        )
    return via_scan
