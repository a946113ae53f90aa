"""Instances, solutions, text formats, validation and graph transforms.

Instance file (UTF-8, ``#`` starts a comment)::

    n <vertex_count>          # first record, exactly once
    e <u> <v> [<weight>]      # edge, weight defaults to 1
    s <i> <v1> <v2> ...       # candidate set i, i = 1..k contiguous
    f <i> <v1> ...            # optional fair subset of set i
    a <v> <weight>            # optional anchor entry, repeatable

Set indices are 1-based in files and 0-based in memory.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .graph import (
    Graph,
    connected_components,
    is_connected,
    two_edge_connected_components,
)


class ParseError(ValueError):
    """Malformed input file; ``line`` is 1-based (0 when not line specific)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class Instance:
    """A MinDR instance, optionally extended with anchors and fair subsets.

    ``anchors`` is a multiset: the same vertex may appear more than once and
    each entry contributes ``weight * d(x_i, vertex)`` for every chosen
    ``x_i``.
    """

    graph: Graph
    sets: tuple[tuple[int, ...], ...]
    anchors: tuple[tuple[int, float], ...] = ()
    fair: tuple[tuple[int, ...] | None, ...] | None = None

    def __post_init__(self):
        n = self.graph.n
        sets = tuple(tuple(sorted(set(int(v) for v in s))) for s in self.sets)
        if not sets:
            raise ValueError("an instance needs at least one candidate set")
        for i, s in enumerate(sets):
            if not s:
                raise ValueError(f"candidate set {i + 1} is empty")
            if s[0] < 0 or s[-1] >= n:
                raise ValueError(f"candidate set {i + 1} has a vertex out of range")
        anchors = tuple((int(z), float(b)) for z, b in self.anchors)
        for z, b in anchors:
            if not 0 <= z < n:
                raise ValueError(f"anchor vertex {z} out of range")
            if not b >= 0 or math.isinf(b):
                raise ValueError(f"anchor weight {b} must be finite and nonnegative")
        fair = self.fair
        if fair is not None:
            if len(fair) != len(sets):
                raise ValueError("fair must list one entry (or None) per set")
            fair = tuple(None if f is None else tuple(sorted(set(int(v) for v in f))) for f in fair)
            for i, f in enumerate(fair):
                if f is not None and not set(f) <= set(sets[i]):
                    raise ValueError(f"fair vertices of set {i + 1} are not all candidates")
            if all(f is None for f in fair):
                fair = None
        object.__setattr__(self, "sets", sets)
        object.__setattr__(self, "anchors", anchors)
        object.__setattr__(self, "fair", fair)

    @property
    def k(self) -> int:
        return len(self.sets)

    def with_graph(self, graph: Graph) -> Instance:
        return replace(self, graph=graph)


@dataclass(frozen=True)
class Solution:
    """One chosen vertex per candidate set and the objective value of that choice."""

    choices: tuple[int, ...]
    cost: float

    def __post_init__(self):
        object.__setattr__(self, "choices", tuple(int(x) for x in self.choices))
        object.__setattr__(self, "cost", float(self.cost))


@dataclass(frozen=True)
class ValidationReport:
    connected_graph: bool
    sets_connected: tuple[bool, ...]
    sets_disjoint: bool
    cross_biconnected_clean: bool
    decomposable: bool
    # Per set: fair subset inside the largest component (None when the set has no fair subset).
    fair_in_main_component: tuple[bool | None, ...] | None = None

    def format(self) -> str:
        def b(x):
            return "true" if x else "false"

        lines = [
            f"connected_graph: {b(self.connected_graph)}",
            "sets_connected: " + " ".join(b(x) for x in self.sets_connected),
            f"sets_disjoint: {b(self.sets_disjoint)}",
            f"cross_biconnected_clean: {b(self.cross_biconnected_clean)}",
            f"decomposable: {b(self.decomposable)}",
        ]
        if self.fair_in_main_component is not None:
            missing = [
                str(i + 1) for i, ok in enumerate(self.fair_in_main_component) if ok is False
            ]
            lines.append("fair_outside_main_component: " + (" ".join(missing) or "none"))
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------


def _fmt_num(x: float) -> str:
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def _float(tok: str, lineno: int) -> float:
    try:
        x = float(tok)
    except ValueError:
        raise ParseError(f"expected a number, got {tok!r}", lineno) from None
    if not x >= 0 or math.isinf(x):
        raise ParseError(f"weight must be finite and nonnegative, got {tok!r}", lineno)
    return x


def parse_instance(text: str) -> Instance:
    """Parse the instance format; errors carry the offending line number."""
    n = None
    edges = []
    sets: dict[int, tuple[int, list[int]]] = {}
    fair: dict[int, tuple[int, list[int]]] = {}
    anchors = []

    def vertex(tok, lineno):
        v = _int(tok, lineno)
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} out of range for n={n}", lineno)
        return v

    for lineno, toks in _records(text):
        tag, args = toks[0], toks[1:]
        if n is None:
            if tag != "n" or len(args) != 1:
                raise ParseError("first record must be 'n <vertex_count>'", lineno)
            n = _int(args[0], lineno)
            if n < 0:
                raise ParseError("vertex count must be nonnegative", lineno)
            continue
        if tag == "n":
            raise ParseError("duplicate 'n' record", lineno)
        elif tag == "e":
            if len(args) not in (2, 3):
                raise ParseError("edge record is 'e <u> <v> [<weight>]'", lineno)
            u, v = vertex(args[0], lineno), vertex(args[1], lineno)
            w = _float(args[2], lineno) if len(args) == 3 else 1.0
            edges.append((u, v, w))
        elif tag in ("s", "f"):
            if len(args) < 2:
                raise ParseError(f"'{tag}' record needs an index and at least one vertex", lineno)
            i = _int(args[0], lineno)
            table = sets if tag == "s" else fair
            if i < 1:
                raise ParseError(f"set index must be >= 1, got {i}", lineno)
            if i in table:
                raise ParseError(f"duplicate '{tag}' record for set {i}", lineno)
            table[i] = (lineno, [vertex(t, lineno) for t in args[1:]])
        elif tag == "a":
            if len(args) != 2:
                raise ParseError("anchor record is 'a <v> <weight>'", lineno)
            anchors.append((vertex(args[0], lineno), _float(args[1], lineno)))
        else:
            raise ParseError(f"unknown record type {tag!r}", lineno)

    if n is None:
        raise ParseError("missing 'n' record")
    k = len(sets)
    if k == 0:
        raise ParseError("no candidate sets")
    for i in range(1, k + 1):
        if i not in sets:
            raise ParseError(f"set indices must be contiguous 1..{k}; set {i} missing")
    fair_list = None
    if fair:
        fair_list = []
        for i in range(1, k + 1):
            if i not in fair:
                fair_list.append(None)
                continue
            lineno, members = fair[i]
            if not set(members) <= set(sets[i][1]):
                raise ParseError(f"fair vertices of set {i} are not all candidates", lineno)
            fair_list.append(tuple(members))
        extra = sorted(set(fair) - set(sets))
        if extra:
            raise ParseError(f"fair set {extra[0]} has no candidate set", fair[extra[0]][0])
    return Instance(
        Graph(n, edges),
        tuple(tuple(sets[i][1]) for i in range(1, k + 1)),
        tuple(anchors),
        None if fair_list is None else tuple(fair_list),
    )


def serialize_instance(inst: Instance) -> str:
    g = inst.graph
    lines = [f"n {g.n}"]
    for u, v, w in g.edges:
        lines.append(f"e {u} {v}" if w == 1.0 else f"e {u} {v} {_fmt_num(w)}")
    for i, s in enumerate(inst.sets, start=1):
        lines.append(f"s {i} " + " ".join(map(str, s)))
    if inst.fair is not None:
        for i, f in enumerate(inst.fair, start=1):
            if f is not None:
                lines.append(f"f {i} " + " ".join(map(str, f)))
    for z, b in inst.anchors:
        lines.append(f"a {z} {_fmt_num(b)}")
    return "\n".join(lines) + "\n"


def serialize_graph(g: Graph) -> str:
    """Only the ``n`` and ``e`` records of the instance format."""
    lines = [f"n {g.n}"]
    for u, v, w in g.edges:
        lines.append(f"e {u} {v}" if w == 1.0 else f"e {u} {v} {_fmt_num(w)}")
    return "\n".join(lines) + "\n"


def serialize_solution(sol: Solution) -> str:
    lines = [f"{i} {x}" for i, x in enumerate(sol.choices, start=1)]
    lines.append(f"cost {_fmt_num(sol.cost)}")
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> Solution:
    choices = {}
    cost = None
    for lineno, toks in _records(text):
        if len(toks) != 2:
            raise ParseError("solution lines are '<i> <vertex>' or 'cost <value>'", lineno)
        if toks[0] == "cost":
            try:
                cost = float(toks[1])
            except ValueError:
                raise ParseError(f"bad cost {toks[1]!r}", lineno) from None
            continue
        i, x = _int(toks[0], lineno), _int(toks[1], lineno)
        if i in choices:
            raise ParseError(f"duplicate choice for set {i}", lineno)
        choices[i] = x
    k = len(choices)
    if sorted(choices) != list(range(1, k + 1)):
        raise ParseError("choices must cover set indices 1..k")
    if cost is None:
        raise ParseError("missing 'cost' line")
    return Solution(tuple(choices[i] for i in range(1, k + 1)), cost)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def validate(inst: Instance) -> ValidationReport:
    """Check the conditions under which the exact decomposition applies.

    Two vertices "share a biconnected component" when they lie in the same
    maximal vertex set inducing a connected bridgeless subgraph, i.e. the
    same two-edge-connected class.
    """
    g = inst.graph
    labels = connected_components(g)
    connected_graph = g.n > 0 and max(labels) == 0
    sets_connected = tuple(is_connected(g, s) for s in inst.sets)
    owner: dict[int, int] = {}
    disjoint = True
    for i, s in enumerate(inst.sets):
        for v in s:
            if owner.setdefault(v, i) != i:
                disjoint = False
    clean = disjoint
    if clean:
        cls = two_edge_connected_components(g)
        seen: dict[int, int] = {}
        for v, i in owner.items():
            if seen.setdefault(cls[v], i) != i:
                clean = False
                break
    fair_ok = None
    if inst.fair is not None:
        main = _main_component(labels)
        fair_ok = tuple(
            None if f is None else all(labels[v] == main for v in f) for f in inst.fair
        )
    return ValidationReport(
        connected_graph=connected_graph,
        sets_connected=sets_connected,
        sets_disjoint=disjoint,
        cross_biconnected_clean=clean,
        decomposable=connected_graph and all(sets_connected) and disjoint and clean,
        fair_in_main_component=fair_ok,
    )


def _main_component(labels: Sequence[int]) -> int:
    """Label of the largest component; ties go to the one holding the lowest vertex."""
    sizes = Counter(labels)
    # labels are numbered by lowest vertex, so the smallest label wins ties
    return min(sizes, key=lambda c: (-sizes[c], c))


def drop_missing_fair(inst: Instance) -> tuple[Instance, list[int], list[int]]:
    """Restrict an instance to the largest component of its graph.

    Sets whose fair subset is not inside that component are dropped (sets
    without a fair subset are dropped when none of their candidates is
    inside it); surviving sets lose candidates outside it. Vertices are
    renumbered densely in ascending order.

    Returns ``(instance, kept_set_indices, vertex_ids)`` where
    ``vertex_ids[new] = old``.
    """
    g = inst.graph
    labels = connected_components(g)
    main = _main_component(labels)
    ids = [v for v in range(g.n) if labels[v] == main]
    new = {v: i for i, v in enumerate(ids)}
    kept, sets, fair = [], [], []
    for i, s in enumerate(inst.sets):
        f = None if inst.fair is None else inst.fair[i]
        inside = [new[v] for v in s if v in new]
        if f is not None and not all(v in new for v in f):
            continue
        if not inside:
            continue
        kept.append(i)
        sets.append(tuple(inside))
        fair.append(None if f is None else tuple(new[v] for v in f))
    if not sets:
        raise ValueError("no candidate set survives restriction to the largest component")
    graph = Graph(len(ids), [(new[u], new[v], w) for u, v, w in g.edges if u in new and v in new])
    anchors = tuple((new[z], b) for z, b in inst.anchors if z in new)
    out = Instance(graph, tuple(sets), anchors, tuple(fair) if inst.fair is not None else None)
    return out, kept, ids


# ---------------------------------------------------------------------------
# connection transforms
# ---------------------------------------------------------------------------


def connect_maximal(inst: Instance) -> Instance:
    """Turn every ``G[X_i]`` into a clique; missing pairs get weight-1 edges."""
    g = inst.graph
    extra = []
    for s in inst.sets:
        for a in range(len(s)):
            for b in range(a + 1, len(s)):
                if not g.has_edge(s[a], s[b]):
                    extra.append((s[a], s[b], 1.0))
    return inst if not extra else inst.with_graph(g.with_edges(extra))


def _induced_components(g: Graph, members: Sequence[int]) -> list[list[int]]:
    inside = set(members)
    comps = []
    seen: set[int] = set()
    for s in members:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.nbrs[u]:
                if v in inside and v not in seen:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def connect_minimal(inst: Instance) -> Instance:
    """Join the components of every ``G[X_i]`` with as few weight-1 edges as possible.

    The hub is the highest-degree vertex of the largest component (degree
    in the input graph, ties to the lowest id; among equally large
    components the one holding the lowest id). The hub is linked to the
    lowest-id vertex of every other component.
    """
    g = inst.graph
    extra = []
    for s in inst.sets:
        comps = _induced_components(g, s)
        if len(comps) < 2:
            continue
        # components come out ordered by lowest vertex, so max() keeps the first on ties
        largest = max(comps, key=len)
        hub = max(largest, key=lambda v: (g.degree(v), -v))
        extra.extend((hub, c[0], 1.0) for c in comps if c is not largest)
    return inst if not extra else inst.with_graph(g.with_edges(extra))


def connect(inst: Instance, mode: str) -> Instance:
    if mode == "none":
        return inst
    if mode == "maximal":
        return connect_maximal(inst)
    if mode == "minimal":
        return connect_minimal(inst)
    raise ValueError(f"unknown connection mode {mode!r}")


# ---------------------------------------------------------------------------
# raw graph preprocessing
# ---------------------------------------------------------------------------


def parse_arcs(text: str) -> list[tuple[int, int]]:
    """Whitespace-separated ``<source> <target>`` pairs, one per line."""
    arcs = []
    for lineno, toks in _records(text):
        if len(toks) != 2:
            raise ParseError("arc lines are '<source> <target>'", lineno)
        arcs.append((_int(toks[0], lineno), _int(toks[1], lineno)))
    return arcs


def preprocess_graph(arcs: Iterable[tuple[int, int]]) -> tuple[Graph, list[int]]:
    """Symmetrize a directed arc list and keep its largest connected component.

    Vertices are renumbered densely in ascending order of their original
    ids. Among equally large components, the one containing the smallest
    original id wins. Returns ``(graph, original_ids)``.
    """
    arcs = list(arcs)
    if not arcs:
        raise ValueError("empty arc list")
    ids = sorted({x for arc in arcs for x in arc})
    index = {x: i for i, x in enumerate(ids)}
    full = Graph(len(ids), [(index[a], index[b]) for a, b in arcs])
    labels = connected_components(full)
    main = _main_component(labels)
    keep = [i for i in range(full.n) if labels[i] == main]
    renum = {old: new for new, old in enumerate(keep)}
    g = Graph(len(keep), [(renum[u], renum[v]) for u, v, _ in full.edges if u in renum])
    return g, [ids[i] for i in keep]


def plant_fair(inst: Instance, choices: Sequence[int]) -> Instance:
    """Copy of ``inst`` whose fair subsets are the singletons ``{choices[i]}``."""
    return replace(inst, fair=tuple((x,) for x in choices))


__all__ = [
    "Instance",
    "Solution",
    "ValidationReport",
    "ParseError",
    "parse_instance",
    "serialize_instance",
    "serialize_graph",
    "parse_solution",
    "serialize_solution",
    "validate",
    "drop_missing_fair",
    "connect_maximal",
    "connect_minimal",
    "connect",
    "parse_arcs",
    "preprocess_graph",
    "plant_fair",
]
