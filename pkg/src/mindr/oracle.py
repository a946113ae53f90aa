"""Ground-truth machinery: exhaustive search, the MaxCRS reduction, naive structural checks.

Everything here trades speed for obviousness and is meant to check the
fast code paths on small inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .graph import Graph, connected_components, distances_from
from .instance import Instance, ParseError, Solution, _records

DEFAULT_CAP = 10**6


class CapExceededError(RuntimeError):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"search space has {size} combinations, cap is {cap}")


def solve_bruteforce(inst: Instance, cap: int = DEFAULT_CAP) -> Solution:
    """Exact minimum of the objective over every choice vector.

    Ties go to the lexicographically smallest choice vector.
    """
    size = math.prod(len(s) for s in inst.sets)
    if size > cap:
        raise CapExceededError(size, cap)
    g = inst.graph
    verts = sorted({v for s in inst.sets for v in s})
    anchor_w: dict[int, float] = {}
    for z, b in inst.anchors:
        anchor_w[z] = anchor_w.get(z, 0.0) + b
    dist = {v: distances_from(g, v) for v in verts}
    # anchor term is separable per choice
    anchor_term = {}
    for v in verts:
        row = dist[v]
        anchor_term[v] = sum(b * row.get(z, math.inf) for z, b in anchor_w.items() if b)
    best, best_cost = None, math.inf
    for combo in product(*inst.sets):
        cost = 0.0
        for a in combo:
            row = dist[a]
            for b in combo:
                cost += row.get(b, math.inf)
            cost += anchor_term[a]
        if cost < best_cost:
            best, best_cost = combo, cost
    if best is None:
        raise ValueError("no finite-cost solution; is the graph connected?")
    return Solution(best, best_cost)


@dataclass(frozen=True)
class MaxCrsInstance:
    """Disjoint sets with nonnegative capacities between elements of different sets.

    ``capacity`` maps unordered pairs ``(x, y)``, ``x < y``, to a value;
    missing pairs have capacity 0.
    """

    sets: tuple[tuple[int, ...], ...]
    capacity: dict[tuple[int, int], float] = field(default_factory=dict)

    def __post_init__(self):
        sets = tuple(tuple(sorted(set(s))) for s in self.sets)
        owner = {}
        for i, s in enumerate(sets):
            if not s:
                raise ValueError(f"set {i + 1} is empty")
            for x in s:
                if x in owner:
                    raise ValueError(f"element {x} appears in sets {owner[x] + 1} and {i + 1}")
                owner[x] = i
        cap = {}
        for (x, y), c in self.capacity.items():
            if x not in owner or y not in owner:
                raise ValueError(f"capacity ({x}, {y}) names an unknown element")
            if owner[x] == owner[y]:
                raise ValueError(f"capacity ({x}, {y}) is within one set")
            if not c >= 0:
                raise ValueError(f"capacity ({x}, {y}) is negative")
            key = (x, y) if x < y else (y, x)
            if key in cap and cap[key] != c:
                raise ValueError(f"conflicting capacities for ({x}, {y})")
            cap[key] = float(c)
        object.__setattr__(self, "sets", sets)
        object.__setattr__(self, "capacity", cap)

    @property
    def k(self) -> int:
        return len(self.sets)

    def c(self, x: int, y: int) -> float:
        return self.capacity.get((x, y) if x < y else (y, x), 0.0)


def parse_maxcrs(text: str) -> MaxCrsInstance:
    """``s <i> <x...>`` set lines followed by ``c <x> <y> <capacity>`` lines."""
    sets: dict[int, list[int]] = {}
    caps = {}
    for lineno, toks in _records(text):
        tag = toks[0]
        try:
            if tag == "s":
                i = int(toks[1])
                if i in sets:
                    raise ParseError(f"duplicate set {i}", lineno)
                sets[i] = [int(t) for t in toks[2:]]
                if not sets[i]:
                    raise ParseError(f"set {i} is empty", lineno)
            elif tag == "c":
                if len(toks) != 4:
                    raise ParseError("capacity lines are 'c <x> <y> <capacity>'", lineno)
                caps[(int(toks[1]), int(toks[2]))] = float(toks[3])
            else:
                raise ParseError(f"unknown record type {tag!r}", lineno)
        except (ValueError, IndexError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"malformed record: {' '.join(toks)}", lineno) from None
    k = len(sets)
    if sorted(sets) != list(range(1, k + 1)):
        raise ParseError("set indices must be contiguous from 1")
    try:
        return MaxCrsInstance(tuple(tuple(sets[i]) for i in range(1, k + 1)), caps)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize_maxcrs(mc: MaxCrsInstance) -> str:
    lines = [f"s {i} " + " ".join(map(str, s)) for i, s in enumerate(mc.sets, start=1)]
    for (x, y), c in sorted(mc.capacity.items()):
        lines.append(f"c {x} {y} {int(c) if c.is_integer() else repr(c)}")
    return "\n".join(lines) + "\n"


def maxcrs_alpha(mc: MaxCrsInstance) -> float:
    if mc.k < 2:
        raise ValueError("the reduction needs at least two sets")
    if not mc.capacity:
        raise ValueError("no capacities given; alpha is undefined")
    return 2.0 * max(mc.capacity.values())


def reduce_to_mindir(mc: MaxCrsInstance) -> Instance:
    """MinDR instance whose optima correspond to MaxCRS optima.

    Elements are renumbered ``0..N-1`` in ascending order; every pair of
    elements from different sets gets an edge of weight
    ``alpha - c(x, y)`` with ``alpha`` twice the largest capacity.
    """
    alpha = maxcrs_alpha(mc)
    elems = sorted(x for s in mc.sets for x in s)
    index = {x: i for i, x in enumerate(elems)}
    edges = []
    for a in range(mc.k):
        for b in range(a + 1, mc.k):
            for x in mc.sets[a]:
                for y in mc.sets[b]:
                    edges.append((index[x], index[y], alpha - mc.c(x, y)))
    sets = tuple(tuple(index[x] for x in s) for s in mc.sets)
    return Instance(Graph(len(elems), edges), sets)


def maxcrs_bruteforce(mc: MaxCrsInstance) -> tuple[tuple[int, ...], float]:
    """Best system of representatives and its capacity (summed over ordered pairs)."""
    best, best_cap = None, -math.inf
    for combo in product(*mc.sets):
        total = 0.0
        for x in combo:
            for y in combo:
                if x != y:
                    total += mc.c(x, y)
        if total > best_cap:
            best, best_cap = combo, total
    return best, best_cap


def check_reduction_equivalence(mc: MaxCrsInstance, h: float) -> bool:
    """Whether "best capacity > h" agrees with "best reduced cost < k(k-1)alpha - h"."""
    _, best_cap = maxcrs_bruteforce(mc)
    alpha = maxcrs_alpha(mc)
    best_cost = solve_bruteforce(reduce_to_mindir(mc)).cost
    k = mc.k
    return (best_cap > h) == (best_cost < k * (k - 1) * alpha - h)


def naive_bridges(g: Graph) -> set[tuple[int, int]]:
    """Edges whose deletion increases the number of components."""
    base = max(connected_components(g), default=-1) + 1
    out = set()
    for u, v, _ in g.edges:
        if max(connected_components(g.without_edge(u, v)), default=-1) + 1 > base:
            out.add((u, v))
    return out


def naive_useful_edges(g: Graph, sets: Sequence[Sequence[int]]) -> set[tuple[int, int]]:
    """Useful edges by direct recomputation: delete each edge and inspect the pieces."""
    out = set()
    base = max(connected_components(g), default=-1) + 1
    for u, v, _ in g.edges:
        labels = connected_components(g.without_edge(u, v))
        if max(labels) + 1 == base:
            continue
        if any(u in s and v in s for s in sets):
            continue
        side_u = [i for i, s in enumerate(sets) if all(labels[x] == labels[u] for x in s)]
        side_v = [i for i, s in enumerate(sets) if all(labels[x] == labels[v] for x in s)]
        if side_u and side_v:
            out.add((u, v))
    return out
