"""Exhaustive desk-scale verifiers for every named theorem and lemma.

Each verifier sweeps all qualifying partitions of rank at most ``max_n`` (and
all residues, where relevant) and returns the number of checks performed plus
a list of counterexample descriptions, which must be empty.  Unclaimed
boundary powers of the crystal operators are tallied in ``notes`` and are
never counted as failures.
"""

from __future__ import annotations

import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .partitions import (
    Partition,
    boxes,
    boxes_of_residue,
    check_ell,
    conjugate,
    enumerate_partitions,
    format_partition,
    hook_divisibility_witness,
    hook_length,
    is_regular,
    ladder_index,
    regularize,
    satisfies_star,
)
from .hooks import (
    add_horizontal_hook,
    add_vertical_hook,
    is_core,
    is_generalized_l_partition,
    is_l_partition,
)
from .jm import (
    JMQuintuple,
    compose_quintuple,
    decompose,
    is_jm,
    normalize_witness,
)
from .crystal import (
    LADD,
    REG,
    build_crystal,
    e_op,
    epsilon,
    f_op,
    is_node,
    phi,
    reduce_word,
    signature,
)

log = logging.getLogger("rimhook.verify")

_fmt = format_partition


@dataclass
class VerifyReport:
    """Outcome of one verifier run; empty violations means success."""

    theorem: str
    ell: int
    max_n: int
    checked: int
    violations: list[str]
    elapsed: float
    notes: dict[str, int] = field(default_factory=dict)

    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "ell": self.ell,
            "max_n": self.max_n,
            "checked": self.checked,
            "violations": self.violations,
            "notes": self.notes,
            "elapsed": round(self.elapsed, 3),
        }


def _all_partitions(max_n: int) -> Iterator[Partition]:
    for n in range(max_n + 1):
        yield from enumerate_partitions(n)


def _verify_main_theorem_JM(ell: int, max_n: int):
    violations = []
    checked = 0
    for p in _all_partitions(max_n):
        checked += 1
        via_hooks = is_jm(p, ell)
        via_removals = is_generalized_l_partition(p, ell)
        if via_hooks != via_removals:
            violations.append(
                f"{_fmt(p)}: is_jm={via_hooks} but generalized={via_removals}"
            )
    return checked, violations, {}


def _verify_main_theorem_l_partitions(ell: int, max_n: int):
    violations = []
    checked = 0
    for p in _all_partitions(max_n):
        checked += 1
        lhs = is_l_partition(p, ell)
        rhs = is_regular(p, ell) and satisfies_star(p, ell)
        if lhs != rhs:
            violations.append(
                f"{_fmt(p)}: is_l_partition={lhs} but regular-and-star={rhs}"
            )
    return checked, violations, {}


def _verify_reg_prop(ell: int, max_n: int):
    violations = []
    checked = 0
    for p in _all_partitions(max_n):
        checked += 1
        rp = regularize(p, ell)
        if not is_regular(rp, ell):
            violations.append(f"{_fmt(p)}: regularization {_fmt(rp)} is not regular")
        if (rp == p) != is_regular(p, ell):
            violations.append(f"{_fmt(p)}: fixpoint iff regular fails")
        if regularize(rp, ell) != rp:
            violations.append(f"{_fmt(p)}: regularize is not idempotent")
        if sum(rp) != sum(p):
            violations.append(f"{_fmt(p)}: regularization changed the rank")
    return checked, violations, {}


def _verify_rearrange(ell: int, max_n: int):
    violations = []
    checked = 0
    for p in _all_partitions(max_n):
        checked += 1
        w = normalize_witness(p, ell)
        if is_jm(p, ell):
            if w is not None:
                violations.append(f"{_fmt(p)}: JM partition has a witness {w}")
            continue
        if w is None:
            violations.append(f"{_fmt(p)}: no normalized witness for a non-JM partition")
            continue
        (a, b) = w.pivot
        problems = []
        if not w.normalized or w.col_mate[0] <= a or w.row_mate[1] <= b:
            problems.append("mates are not strictly down/right of the pivot")
        if hook_length(p, w.pivot) % ell != 0:
            problems.append("pivot hook not divisible")
        if hook_length(p, w.row_mate) % ell == 0:
            problems.append("row mate hook divisible")
        if hook_length(p, w.col_mate) % ell == 0:
            problems.append("column mate hook divisible")
        for problem in problems:
            violations.append(f"{_fmt(p)}: {problem}")
    return checked, violations, {}


def _verify_adding(ell: int, max_n: int):
    violations = []
    checked = 0
    for p in _all_partitions(max_n):
        if is_jm(p, ell):
            continue
        grown = []
        for row in range(1, len(p) + 2):
            grown.append(add_horizontal_hook(p, row, ell))
        for col in range(1, (p[0] if p else 0) + 2):
            grown.append(add_vertical_hook(p, col, ell))
        for q in grown:
            if q is None:
                continue
            checked += 1
            if is_jm(q, ell):
                violations.append(
                    f"{_fmt(p)} is not JM but grows to the JM partition {_fmt(q)}"
                )
    return checked, violations, {}


def _verify_JMAAR(ell: int, max_n: int):
    violations = []
    checked = 0
    for p in _all_partitions(max_n):
        if not is_jm(p, ell):
            continue
        for i in range(ell):
            checked += 1
            removable = boxes_of_residue(p, i, ell, "removable")
            addable = boxes_of_residue(p, i, ell, "addable")
            if len(removable) >= 1 and len(addable) >= 2:
                violations.append(
                    f"{_fmt(p)}: residue {i} has a removable box and "
                    f"{len(addable)} addable boxes"
                )
    return checked, violations, {}


def _verify_hook_length_divisible(ell: int, max_n: int):
    violations = []
    checked = 0
    for p in _all_partitions(max_n):
        conj = conjugate(p)
        for (a, b) in boxes(p):
            checked += 1
            h = (p[a - 1] - b) + (conj[b - 1] - a) + 1
            witness = hook_divisibility_witness(p, (a, b), ell)
            if (witness is not None) != (h % ell == 0):
                violations.append(
                    f"{_fmt(p)} box {(a, b)}: hook {h}, witness {witness}"
                )
    return checked, violations, {}


def _box_partitions(max_len: int, max_part: int) -> list[Partition]:
    """All partitions with at most max_len parts, each at most max_part."""
    out: list[Partition] = []

    def extend(prefix: tuple[int, ...], largest: int):
        out.append(prefix)
        if len(prefix) == max_len:
            return
        for part in range(largest, 0, -1):
            extend(prefix + (part,), part)

    extend((), max_part)
    return out


def quintuple_sweep(
    ell: int, max_mu: int = 6, max_rs: int = 3, max_part: int = 3
) -> Iterator[JMQuintuple]:
    """All valid quintuples with small core, staircase counts, and hook counts."""
    check_ell(ell)
    cores = []
    for n in range(max_mu + 1):
        for mu in enumerate_partitions(n):
            if not is_core(mu, ell):
                continue
            mu2 = mu[1] if len(mu) > 1 else 0
            conj_mu = conjugate(mu)
            conj2 = conj_mu[1] if len(conj_mu) > 1 else 0
            if mu and (mu[0] - mu2 >= ell - 1 or conj_mu[0] - conj2 >= ell - 1):
                continue
            cores.append(mu)
    for mu in cores:
        for r in range(max_rs + 1):
            for s in range(max_rs + 1):
                for rho in _box_partitions(r + 1, max_part):
                    for sigma in _box_partitions(s + 1, max_part):
                        if not mu and len(rho) == r + 1 and len(sigma) == s + 1:
                            continue
                        yield JMQuintuple(mu, r, s, rho, sigma)


def _verify_construct_JMs(ell: int, max_n: int):
    violations = []
    checked = 0
    for p in _all_partitions(max_n):
        if not is_jm(p, ell):
            continue
        checked += 1
        quintuple = decompose(p, ell)
        back = compose_quintuple(quintuple, ell)
        if back != p:
            violations.append(
                f"compose(decompose({_fmt(p)})) = {_fmt(back)} via {quintuple}"
            )
    for quintuple in quintuple_sweep(ell):
        checked += 1
        lam = compose_quintuple(quintuple, ell)
        try:
            back = decompose(lam, ell)
        except ValueError:
            violations.append(f"compose({quintuple}) = {_fmt(lam)} is not JM")
            continue
        if back != quintuple:
            violations.append(
                f"decompose(compose({quintuple})) = {back} (via {_fmt(lam)})"
            )
    return checked, violations, {}


def _apply_power(p, i, ell, model, op, times):
    q = p
    for _ in range(times):
        q = op(q, i, ell, model)
        if q is None:
            return None
    return q


def _verify_cores(ell: int, max_n: int):
    violations = []
    checked = 0
    for p in _all_partitions(max_n):
        if not is_core(p, ell):
            continue
        checked += 1
        if not is_node(p, ell, LADD):
            violations.append(f"core {_fmt(p)} is not a ladder-crystal node")
        for i in range(ell):
            checked += 1
            hat_phi = phi(p, i, ell, LADD)
            plain_phi = phi(p, i, ell, REG)
            if hat_phi != plain_phi:
                violations.append(
                    f"core {_fmt(p)} residue {i}: ladder phi {hat_phi} != "
                    f"reg phi {plain_phi}"
                )
                continue
            top_ladd = _apply_power(p, i, ell, LADD, f_op, hat_phi)
            top_reg = _apply_power(p, i, ell, REG, f_op, plain_phi)
            if top_ladd != top_reg or top_ladd is None:
                violations.append(
                    f"core {_fmt(p)} residue {i}: maximal f differs "
                    f"({top_ladd} vs {top_reg})"
                )
    return checked, violations, {}


def _verify_nodes_JM(ell: int, max_n: int):
    violations = []
    checked = 0
    for p in _all_partitions(max_n):
        if not is_jm(p, ell):
            continue
        for i in range(ell):
            checked += 1
            minus_rows: dict[int, list[int]] = {}
            for box in boxes_of_residue(p, i, ell, "removable"):
                minus_rows.setdefault(ladder_index(box, ell), []).append(box[0])
            for box in boxes_of_residue(p, i, ell, "addable"):
                omega = ladder_index(box, ell)
                if omega in minus_rows and min(minus_rows[omega]) < box[0]:
                    violations.append(
                        f"{_fmt(p)} residue {i}: ladder {omega} has a - above a +"
                    )
    return checked, violations, {}


def _verify_cancelation(ell: int, max_n: int):
    violations = []
    checked = 0
    for p in _all_partitions(max_n):
        if not is_jm(p, ell):
            continue
        for i in range(ell):
            checked += 1
            word = signature(p, i, ell, LADD)
            if reduce_word(word).entries != word.entries:
                violations.append(
                    f"{_fmt(p)} residue {i}: ladder signature is not reduced"
                )
    return checked, violations, {}


def _verify_irreducible_nodes(ell: int, max_n: int):
    violations = []
    checked = 0
    for p in _all_partitions(max_n):
        if not is_jm(p, ell):
            continue
        checked += 1
        if not is_node(p, ell, LADD):
            violations.append(f"JM partition {_fmt(p)} is not a ladder-crystal node")
    graph = build_crystal(ell, max_n, LADD)
    for n, layer in enumerate(graph.layers):
        checked += len(layer)
        images = Counter(regularize(p, ell) for p in layer)
        for image, count in images.items():
            if count > 1:
                violations.append(
                    f"rank {n}: {count} ladder nodes share the regularization "
                    f"{_fmt(image)}"
                )
    return checked, violations, {}


def _crystal_theorem_clauses(ell, members, predicate, model, label):
    """The four up/down clauses shared by the ladder-of-powers theorems.

    Claims: the maximal f and e powers preserve the property; intermediate
    powers 0 < k < phi-1 (f side) and 1 < k < epsilon (e side) break it.
    The unclaimed powers k = phi-1 and k = 1 are only tallied in notes.
    """
    violations = []
    checked = 0
    notes: Counter[str] = Counter()

    def holds(q) -> bool | None:
        try:
            return predicate(q)
        except Exception as exc:  # table miss or precondition failure
            violations.append(f"{label} predicate failed on {_fmt(q)}: {exc}")
            return None

    for p in members:
        for i in range(ell):
            checked += 1
            for op, stat, low in ((f_op, phi, 1), (e_op, epsilon, 2)):
                side = "f" if op is f_op else "e"
                power = stat(p, i, ell, model)
                chain = [p]
                q = p
                broken = False
                for _ in range(power):
                    q = op(q, i, ell, model)
                    if q is None:
                        violations.append(
                            f"{_fmt(p)} residue {i}: {side} dies before its "
                            f"stated max power {power}"
                        )
                        broken = True
                        break
                    chain.append(q)
                if broken:
                    continue
                if op(chain[-1], i, ell, model) is not None:
                    violations.append(
                        f"{_fmt(p)} residue {i}: {side} still defined past "
                        f"power {power}"
                    )
                if holds(chain[power]) is False:
                    violations.append(
                        f"{_fmt(p)} residue {i}: {side}^{power} is not {label}"
                    )
                claimed_hi = power - 1 if side == "f" else power
                for k in range(low, claimed_hi):
                    if holds(chain[k]) is True:
                        violations.append(
                            f"{_fmt(p)} residue {i}: {side}^{k} is {label}"
                        )
                if power >= 2:
                    boundary = power - 1 if side == "f" else 1
                    outcome = holds(chain[boundary])
                    if outcome is not None:
                        notes[
                            f"{side}_boundary_{'holds' if outcome else 'fails'}"
                        ] += 1
    return checked, violations, dict(notes)


def _verify_top_and_bottom(ell: int, max_n: int):
    members = [p for p in _all_partitions(max_n) if is_l_partition(p, ell)]
    return _crystal_theorem_clauses(
        ell, members, lambda q: is_l_partition(q, ell), REG, "an ell-partition"
    )


def _verify_top_and_bottom_JM(ell: int, max_n: int):
    members = [p for p in _all_partitions(max_n) if is_jm(p, ell)]
    return _crystal_theorem_clauses(
        ell, members, lambda q: is_jm(q, ell), LADD, "a JM partition"
    )


def weak_partition_table(ell: int, up_to: int) -> dict[Partition, bool]:
    """Weak-partition indicator for every regular partition of rank <= up_to.

    Built from the ladder crystal: the unique ladder node over a regular
    partition is JM exactly when that partition is weak.
    """
    graph = build_crystal(ell, up_to, LADD)
    table: dict[Partition, bool] = {}
    for layer in graph.layers:
        for node in layer:
            table[regularize(node, ell)] = is_jm(node, ell)
    return table


def _verify_top_and_bottom_weak(ell: int, max_n: int):
    table = weak_partition_table(ell, 2 * max_n + 1)
    members = [
        p for p in _all_partitions(max_n)
        if is_regular(p, ell) and table[p]
    ]
    return _crystal_theorem_clauses(
        ell, members, table.__getitem__, REG, "a weak ell-partition"
    )


THEOREMS: dict[str, Callable[[int, int], tuple]] = {
    "main_theorem_l_partitions": _verify_main_theorem_l_partitions,
    "reg_prop": _verify_reg_prop,
    "rearrange": _verify_rearrange,
    "adding": _verify_adding,
    "main_theorem_JM": _verify_main_theorem_JM,
    "JMAAR": _verify_JMAAR,
    "construct_JMs": _verify_construct_JMs,
    "cores": _verify_cores,
    "hook_length_divisible": _verify_hook_length_divisible,
    "nodes_JM": _verify_nodes_JM,
    "cancelation": _verify_cancelation,
    "top_and_bottom": _verify_top_and_bottom,
    "top_and_bottom_JM": _verify_top_and_bottom_JM,
    "irreducible_nodes": _verify_irreducible_nodes,
    "top_and_bottom_weak": _verify_top_and_bottom_weak,
}


def theorem_names() -> list[str]:
    return list(THEOREMS)


def verify_theorem(name: str, ell: int, max_n: int) -> VerifyReport:
    """Run the named exhaustive check over all ranks up to max_n."""
    check_ell(ell)
    if name not in THEOREMS:
        raise ValueError(
            f"unknown theorem {name!r}; known: {', '.join(THEOREMS)}"
        )
    log.info("verifying %s at ell=%d, max_n=%d", name, ell, max_n)
    start = time.perf_counter()
    checked, violations, notes = THEOREMS[name](ell, max_n)
    elapsed = time.perf_counter() - start
    log.info(
        "%s ell=%d: checked=%d violations=%d in %.2fs",
        name, ell, checked, len(violations), elapsed,
    )
    return VerifyReport(name, ell, max_n, checked, violations, elapsed, notes)


def run_verification(task: tuple[str, int, int]) -> VerifyReport:
    """Picklable entry point for worker pools: task = (name, ell, max_n)."""
    return verify_theorem(*task)
