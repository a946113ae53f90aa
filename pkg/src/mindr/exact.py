"""Exact solver for decomposable instances.

A *useful* edge is a bridge whose endpoints are not in a common candidate
set and which has at least one candidate set entirely on each side. Cutting
a useful edge ``(t0, t1)`` splits the problem into two independent
subproblems, each inheriting the anchors on its side plus its cut endpoint
as a new anchor of weight ``2 * |sets on the far side| + far-side anchor
weight``. Splitting continues until each subproblem holds one set, where
the choice minimizes the weighted anchor distance.

Subproblems are regions of the original graph: vertex ids are never
renumbered, a shared ``region`` array records which subproblem owns each
vertex, and subproblems wait in an explicit work list instead of the call
stack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .evaluation import objective
from .graph import Graph, distances_from, is_connected
from .instance import Instance, Solution

Anchor = tuple[int, float]


class NotDecomposableError(Exception):
    """No useful edge exists while more than one set remains."""


@dataclass(frozen=True)
class UsefulEdge:
    """A useful edge ``(u, v)``; ``u`` is the endpoint closer to the search root.

    ``side_u_sets`` and ``side_v_sets`` are the (0-based) indices of the
    sets lying entirely in the component of ``u`` and of ``v`` after
    removing the edge.
    """

    u: int
    v: int
    side_u_sets: tuple[int, ...]
    side_v_sets: tuple[int, ...]


def _owner_table(n: int, sets: Sequence[Sequence[int]]) -> list[int]:
    owner = [-1] * n
    for i, s in enumerate(sets):
        for v in s:
            if owner[v] != -1 and owner[v] != i:
                raise ValueError(f"vertex {v} belongs to sets {owner[v] + 1} and {i + 1}; sets must be disjoint")
            owner[v] = i
    return owner


def _search(g, owner, sizes, indices, root, region, rid):
    """Depth-first bridge search that stops at the first useful edge.

    Each call frame accumulates, for the subtree below it, the lowest DFS
    number reachable through a back edge and a count of how many vertices
    of each set it contains. On returning from a child ``v`` of ``u``, the
    tree edge is a bridge when the child's lowest reachable number exceeds
    ``dfs[u]``; it is useful when, in addition, some set is complete inside
    the subtree, some set is absent from it, and ``u``, ``v`` are not in
    the same set.

    Returns ``(edge, subtree)`` where ``subtree`` lists the vertices on the
    ``v`` side, or ``(None, None)``.
    """
    k = len(indices)
    nbrs = g.nbrs
    dfs = [-1] * g.n
    order: list[int] = []

    def frame(u, parent):
        dfs[u] = len(order)
        order.append(u)
        i = owner[u]
        if i == -1:
            counts, complete = None, 0
        else:
            counts, complete = {i: 1}, int(sizes[i] == 1)
        # [vertex, parent, neighbour iterator, furthest ancestor, set counts, complete sets]
        return [u, parent, iter(nbrs[u]), dfs[u] + 1, counts, complete]

    stack = [frame(root, -1)]
    while stack:
        top = stack[-1]
        parent, it = top[1], top[2]
        child = None
        for v in it:
            if v == parent or (region is not None and region[v] != rid):
                continue
            dv = dfs[v]
            if dv < 0:
                child = v
                break
            if dv < top[3]:
                top[3] = dv
        if child is not None:
            stack.append(frame(child, top[0]))
            continue
        stack.pop()
        if not stack:
            break
        u = top[0]
        up = stack[-1]
        p = up[0]
        furthest, counts, complete = top[3], top[4], top[5]
        if (
            furthest > dfs[p]
            and complete > 0
            and len(counts) < k
            and not (owner[p] != -1 and owner[p] == owner[u])
        ):
            inside = tuple(sorted(i for i, c in counts.items() if c == sizes[i]))
            outside = tuple(i for i in indices if i not in counts)
            return UsefulEdge(p, u, outside, inside), order[dfs[u]:]
        if furthest < up[3]:
            up[3] = furthest
        if counts is None:
            continue
        big = up[4]
        if big is None:
            up[4], up[5] = counts, complete
            continue
        # merge the smaller count table into the larger one
        small, done = counts, up[5]
        if len(small) > len(big):
            big, small, done = small, big, complete
        for i, c in small.items():
            new = big.get(i, 0) + c
            big[i] = new
            if new == sizes[i]:
                done += 1
        up[4], up[5] = big, done
    return None, None


def find_useful_edge(g: Graph, sets: Sequence[Sequence[int]]) -> UsefulEdge | None:
    """First useful edge met by a DFS rooted at the lowest vertex of the first set.

    Neighbours are explored in ascending id order; the search unwinds as
    soon as a useful edge is confirmed. ``sets`` must be pairwise disjoint
    and ``g`` connected.
    """
    if not sets:
        return None
    if not is_connected(g):
        raise ValueError("find_useful_edge needs a connected graph")
    owner = _owner_table(g.n, sets)
    sizes = [len(set(s)) for s in sets]
    edge, _ = _search(g, owner, sizes, list(range(len(sets))), min(sets[0]), None, 0)
    return edge


def solve_base_case(
    g: Graph,
    candidates: Sequence[int],
    anchors: Sequence[Anchor] = (),
    allowed=None,
) -> int:
    """Candidate minimizing ``sum_z b(z) * d(x, z)``; ties go to the lowest id.

    One shortest-path sweep per distinct anchor vertex (repeated anchors
    have their weights summed first). ``allowed`` optionally restricts the
    sweeps to a vertex region.
    """
    cands = sorted(set(candidates))
    if not cands:
        raise ValueError("empty candidate set")
    weight: dict[int, float] = {}
    for z, b in anchors:
        weight[z] = weight.get(z, 0.0) + b
    score = dict.fromkeys(cands, 0.0)
    for z in sorted(weight):
        b = weight[z]
        if b == 0:
            continue
        row = distances_from(g, z, allowed=allowed, targets=cands)
        for y in cands:
            score[y] += b * row.get(y, math.inf)
    return min(cands, key=lambda y: (score[y], y))


@dataclass(frozen=True)
class Split:
    """One decomposition step, for inspection and testing."""

    edge: UsefulEdge
    sides: tuple[frozenset[int], frozenset[int]]
    set_indices: tuple[tuple[int, ...], tuple[int, ...]]
    anchors: tuple[tuple[Anchor, ...], tuple[Anchor, ...]]


def _cut(edge, subtree, anchors, region, rid, new_rid, indices):
    """Move the ``v`` side of ``edge`` into region ``new_rid`` and build both anchor lists."""
    if sorted(edge.side_u_sets + edge.side_v_sets) != sorted(indices):
        raise NotDecomposableError(
            f"a candidate set straddles bridge ({edge.u}, {edge.v})"
        )
    for x in subtree:
        region[x] = new_rid
    near = [(z, b) for z, b in anchors if region[z] == rid]
    far = [(z, b) for z, b in anchors if region[z] == new_rid]
    w_u = 2 * len(edge.side_v_sets) + sum(b for _, b in far)
    w_v = 2 * len(edge.side_u_sets) + sum(b for _, b in near)
    return near + [(edge.u, float(w_u))], far + [(edge.v, float(w_v))]


def split(g: Graph, sets: Sequence[Sequence[int]], anchors: Sequence[Anchor] = ()) -> Split | None:
    """Cut ``(g, sets, anchors)`` at its first useful edge, or return None."""
    edge = find_useful_edge(g, sets)
    if edge is None:
        return None
    owner = _owner_table(g.n, sets)
    sizes = [len(set(s)) for s in sets]
    indices = list(range(len(sets)))
    region = [0] * g.n
    _, subtree = _search(g, owner, sizes, indices, min(sets[0]), region, 0)
    a0, a1 = _cut(edge, subtree, anchors, region, 0, 1, indices)
    side1 = frozenset(subtree)
    side0 = frozenset(range(g.n)) - side1
    return Split(edge, (side0, side1), (edge.side_u_sets, edge.side_v_sets), (tuple(a0), tuple(a1)))


@dataclass
class Leaf:
    """A fully decomposed subproblem: one set index inside one region."""

    index: int
    region: int
    anchors: list[Anchor]


def decompose(g: Graph, sets: Sequence[Sequence[int]], anchors: Sequence[Anchor] = ()):
    """Split repeatedly until every subproblem holds a single set.

    Returns ``(leaves, region)``; ``region[v]`` is the id of the subproblem
    that owns vertex ``v`` and matches ``Leaf.region``.

    Any split is checked for sets straddling the cut, so whenever this
    returns, the decomposition is exact.
    """
    if not sets:
        raise ValueError("no candidate sets")
    if not is_connected(g):
        raise ValueError("the graph must be connected")
    owner = _owner_table(g.n, sets)
    sizes = [len(set(s)) for s in sets]
    region = [0] * g.n
    next_rid = 1
    work = [(0, list(range(len(sets))), list(anchors))]
    leaves = []
    while work:
        rid, indices, anc = work.pop()
        if len(indices) == 1:
            leaves.append(Leaf(indices[0], rid, anc))
            continue
        root = min(sets[indices[0]])
        edge, subtree = _search(g, owner, sizes, indices, root, region, rid)
        if edge is None:
            raise NotDecomposableError(
                f"no useful edge among {len(indices)} sets (first set {indices[0] + 1})"
            )
        near, far = _cut(edge, subtree, anc, region, rid, next_rid, indices)
        work.append((next_rid, list(edge.side_v_sets), far))
        work.append((rid, list(edge.side_u_sets), near))
        next_rid += 1
    leaves.sort(key=lambda leaf: leaf.index)
    return leaves, region


def solve_decomposable(g, sets=None, anchors: Sequence[Anchor] = ()) -> Solution:
    """Exact optimum of a decomposable instance.

    Accepts either ``(graph, sets, anchors)`` or a single :class:`Instance`.
    The returned cost includes the anchor term.
    """
    if isinstance(g, Instance):
        g, sets, anchors = g.graph, g.sets, g.anchors
    leaves, region = decompose(g, sets, anchors)
    choices = [0] * len(sets)
    for leaf in leaves:
        rid = leaf.region
        choices[leaf.index] = solve_base_case(
            g, sets[leaf.index], leaf.anchors, allowed=lambda v, rid=rid: region[v] == rid
        )
    return Solution(tuple(choices), objective(g, choices, anchors))
