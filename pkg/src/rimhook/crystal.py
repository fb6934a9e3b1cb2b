"""Two crystal models on partitions: signature words, operators, and graphs.

Both models read the same +/- decorations (a - on every removable box of
residue i, a + on every addable position of residue i) but order them
differently:

* ``reg``  -- bottom row first, i.e. strictly decreasing row;
* ``ladd`` -- leftmost ladder first, each ladder read top to bottom.

After cancelling adjacent "- +" pairs, the raising operator removes the box
of the leftmost remaining -, and the lowering operator adds the box of the
rightmost remaining +.  Regularization maps the ladder model onto the
regular-partition model; `check_isomorphism` verifies this edge by edge.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .partitions import (
    Box,
    EMPTY,
    Partition,
    addable_boxes,
    check_ell,
    format_partition,
    is_regular,
    ladder_index,
    regularize,
    removable_boxes,
)
from .hooks import is_l_partition

REG = "reg"
LADD = "ladd"
MODELS = (REG, LADD)

PLUS = "+"
MINUS = "-"


def _check_model(model: str) -> str:
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}, got {model!r}")
    return model


def _check_residue(i: int, ell: int) -> int:
    if not 0 <= i < ell:
        raise ValueError(f"residue {i} out of range [0, {ell})")
    return i


@dataclass(frozen=True)
class SignatureEntry:
    sign: str  # PLUS for an addable box, MINUS for a removable box
    box: Box


@dataclass(frozen=True)
class Word:
    """An i-signature: the +/- entries of one residue in a model's order."""

    entries: tuple[SignatureEntry, ...]
    residue: int
    model: str
    reduced: bool = False


def signature(p: Partition, i: int, ell: int, model: str) -> Word:
    """The i-signature of p in the given model's reading order."""
    check_ell(ell)
    _check_residue(i, ell)
    _check_model(model)
    entries = [
        SignatureEntry(PLUS, box)
        for box in addable_boxes(p)
        if (box[1] - box[0]) % ell == i
    ] + [
        SignatureEntry(MINUS, box)
        for box in removable_boxes(p)
        if (box[1] - box[0]) % ell == i
    ]
    if model == REG:
        entries.sort(key=lambda e: -e.box[0])
    else:
        entries.sort(key=lambda e: (ladder_index(e.box, ell), e.box[0]))
    return Word(tuple(entries), i, model)


def reduce_word(word: Word) -> Word:
    """Cancel adjacent "- +" pairs until none remain.

    The result is independent of cancellation order and always has the shape
    +^a -^b.
    """
    stack: list[SignatureEntry] = []
    for entry in word.entries:
        if stack and stack[-1].sign == MINUS and entry.sign == PLUS:
            stack.pop()
        else:
            stack.append(entry)
    return Word(tuple(stack), word.residue, word.model, reduced=True)


def _add_box(p: Partition, box: Box) -> Partition:
    a, b = box
    rows = list(p)
    if a == len(p) + 1:
        rows.append(0)
    rows[a - 1] += 1
    assert rows[a - 1] == b, (p, box)
    return tuple(rows)


def _remove_box(p: Partition, box: Box) -> Partition:
    a, b = box
    rows = list(p)
    assert rows[a - 1] == b, (p, box)
    rows[a - 1] -= 1
    while rows and rows[-1] == 0:
        rows.pop()
    return tuple(rows)


def e_op(p: Partition, i: int, ell: int, model: str) -> Partition | None:
    """Remove the box of the leftmost - in the reduced i-signature, if any."""
    word = reduce_word(signature(p, i, ell, model))
    minuses = [e for e in word.entries if e.sign == MINUS]
    if not minuses:
        return None
    return _remove_box(p, minuses[0].box)


def f_op(p: Partition, i: int, ell: int, model: str) -> Partition | None:
    """Add the box of the rightmost + in the reduced i-signature, if any."""
    word = reduce_word(signature(p, i, ell, model))
    pluses = [e for e in word.entries if e.sign == PLUS]
    if not pluses:
        return None
    return _add_box(p, pluses[-1].box)


def epsilon(p: Partition, i: int, ell: int, model: str) -> int:
    """Number of - entries in the reduced word = max power of the e operator."""
    word = reduce_word(signature(p, i, ell, model))
    return sum(1 for e in word.entries if e.sign == MINUS)


def phi(p: Partition, i: int, ell: int, model: str) -> int:
    """Number of + entries in the reduced word = max power of the f operator."""
    word = reduce_word(signature(p, i, ell, model))
    return sum(1 for e in word.entries if e.sign == PLUS)


@dataclass(frozen=True)
class CrystalGraph:
    """Rank-layered closure of the empty partition under the f operators."""

    ell: int
    model: str
    max_n: int
    layers: tuple[tuple[Partition, ...], ...]  # layers[n] = nodes of rank n
    edges: tuple[tuple[Partition, int, Partition], ...]

    @property
    def nodes(self) -> set[Partition]:
        return {p for layer in self.layers for p in layer}

    def node_count(self) -> int:
        return sum(len(layer) for layer in self.layers)


@functools.lru_cache(maxsize=None)
def build_crystal(ell: int, max_n: int, model: str) -> CrystalGraph:
    """Breadth-first closure of the empty partition under f, up to rank max_n."""
    check_ell(ell)
    _check_model(model)
    if max_n < 0:
        raise ValueError(f"max_n must be nonnegative, got {max_n}")
    layers: list[tuple[Partition, ...]] = [(EMPTY,)]
    edges: list[tuple[Partition, int, Partition]] = []
    current: list[Partition] = [EMPTY]
    for _ in range(max_n):
        succ: set[Partition] = set()
        for p in current:
            for i in range(ell):
                q = f_op(p, i, ell, model)
                if q is not None:
                    edges.append((p, i, q))
                    succ.add(q)
        current = sorted(succ, reverse=True)  # canonical descending-lex order
        layers.append(tuple(current))
    return CrystalGraph(ell, model, max_n, tuple(layers), tuple(edges))


@functools.lru_cache(maxsize=None)
def _node_layer(ell: int, n: int, model: str) -> frozenset[Partition]:
    return frozenset(build_crystal(ell, n, model).layers[n])


def is_node(p: Partition, ell: int, model: str) -> bool:
    """True iff p appears in the model's crystal at its own rank."""
    check_ell(ell)
    _check_model(model)
    return p in _node_layer(ell, sum(p), model)


@dataclass
class IsomorphismReport:
    ell: int
    max_n: int
    checked_nodes: int
    checked_edges: int
    violations: list[str] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.violations


def check_isomorphism(ell: int, max_n: int) -> IsomorphismReport:
    """Verify that regularization is a crystal isomorphism ladd -> reg.

    Checks per rank that regularize maps the ladder layer bijectively onto
    the regular-partition layer, and per ladder edge that it intertwines the
    f operators.
    """
    check_ell(ell)
    reg_graph = build_crystal(ell, max_n, REG)
    ladd_graph = build_crystal(ell, max_n, LADD)
    report = IsomorphismReport(ell, max_n, 0, 0)
    for n in range(max_n + 1):
        image = [regularize(p, ell) for p in ladd_graph.layers[n]]
        report.checked_nodes += len(image)
        if len(set(image)) != len(image):
            report.violations.append(
                f"rank {n}: regularize is not injective on ladd nodes"
            )
        if set(image) != set(reg_graph.layers[n]):
            report.violations.append(
                f"rank {n}: regularize image differs from reg layer"
            )
    for p, i, q in ladd_graph.edges:
        report.checked_edges += 1
        expected = f_op(regularize(p, ell), i, ell, REG)
        if expected != regularize(q, ell):
            report.violations.append(
                f"edge {format_partition(p)} -{i}-> {format_partition(q)}: "
                f"regularize(f_ladd) = {format_partition(regularize(q, ell))} "
                f"but f_reg(regularize) = "
                f"{format_partition(expected) if expected else 'none'}"
            )
    return report


def _node_flags(p: Partition, ell: int) -> dict[str, bool]:
    from . import jm  # deferred: jm imports this module

    regular = is_regular(p, ell)
    return {
        "jm": jm.is_jm(p, ell),
        "l_partition": is_l_partition(p, ell),
        "weak": bool(regular and jm.is_weak_l_partition(p, ell)),
        "regular": regular,
    }


def to_dot(graph: CrystalGraph, flag_nodes: bool = False) -> str:
    """Graphviz DOT rendering; nodes are labeled with the canonical text form."""
    lines = [f"digraph {graph.model}_{graph.ell} {{"]
    for layer in graph.layers:
        for p in layer:
            name = format_partition(p)
            attrs = [f'label="{name}"']
            if flag_nodes:
                for key, value in _node_flags(p, graph.ell).items():
                    attrs.append(f'{key}="{str(value).lower()}"')
            lines.append(f'  "{name}" [{", ".join(attrs)}];')
    for p, i, q in graph.edges:
        lines.append(
            f'  "{format_partition(p)}" -> "{format_partition(q)}" [label="{i}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(graph: CrystalGraph, flag_nodes: bool = False) -> dict:
    """JSON-ready dict: nodes with rank (and optional flags), labeled edges."""
    nodes = []
    for n, layer in enumerate(graph.layers):
        for p in layer:
            node: dict = {"partition": format_partition(p), "rank": n}
            if flag_nodes:
                node["flags"] = _node_flags(p, graph.ell)
            nodes.append(node)
    edges = [
        {"from": format_partition(p), "to": format_partition(q), "residue": i}
        for p, i, q in graph.edges
    ]
    return {"nodes": nodes, "edges": edges}
