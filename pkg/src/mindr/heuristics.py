"""Heuristics for general (non-decomposable) instances.

``solve_spanning_tree`` manufactures a decomposable instance by contracting
each group of overlapping candidate sets, keeping a breadth-first spanning
tree of the contracted graph, and running the exact solver on what is left.
``solve_hitting`` scores every candidate by its summed hitting distance to
all sets and picks the best candidate of each set independently.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass

from .evaluation import make_solution
from .exact import decompose, solve_base_case
from .graph import Graph, is_connected, quotient_graph
from .instance import Instance, Solution


@dataclass(frozen=True)
class IndexGrouping:
    """Set indices grouped into the connected components of the overlap relation."""

    groups: tuple[tuple[int, ...], ...]
    merged_sets: tuple[tuple[int, ...], ...]


def group_overlapping_sets(inst: Instance) -> IndexGrouping:
    """Group indices ``i, j`` together whenever ``X_i`` and ``X_j`` share a vertex (transitively).

    Groups are ordered by their smallest index.
    """
    parent = list(range(inst.k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    first_owner: dict[int, int] = {}
    for i, s in enumerate(inst.sets):
        for v in s:
            j = first_owner.setdefault(v, i)
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(inst.k):
        groups.setdefault(find(i), []).append(i)
    ordered = sorted(groups.values())
    merged = tuple(tuple(sorted({v for i in grp for v in inst.sets[i]})) for grp in ordered)
    return IndexGrouping(tuple(tuple(g) for g in ordered), merged)


@dataclass(frozen=True)
class ReducedGraph:
    """Output of :func:`reduce_to_decomposable`.

    ``graph`` keeps every intra-set edge plus one original edge per
    spanning-tree edge of the quotient (``tree_edges``). ``classes`` gives
    the quotient label of every vertex (the lowest vertex of its class).
    """

    graph: Graph
    tree_edges: tuple[tuple[int, int], ...]
    classes: tuple[int, ...]


def reduce_to_decomposable(inst: Instance, grouping: IndexGrouping | None = None):
    """Build the spanning-tree reduction of ``inst``.

    Returns ``(reduced, merged_instance)`` where ``merged_instance`` has
    the reduced graph and one set per group of overlapping sets.
    """
    g = inst.graph
    if grouping is None:
        grouping = group_overlapping_sets(inst)
    for i, s in enumerate(inst.sets):
        if not is_connected(g, s):
            raise ValueError(
                f"G[X_{i + 1}] is not connected; apply a connection transform first"
            )
    classes = list(range(g.n))
    for merged in grouping.merged_sets:
        lab = merged[0]
        for v in merged:
            classes[v] = lab
    q = quotient_graph(g, classes)
    qg = q.graph
    # BFS over the quotient from the class of vertex 0, neighbours in ascending class order
    root = q.class_of[0] if g.n else 0
    seen = [False] * qg.n
    seen[root] = True
    tree = []
    queue = deque([root])
    while queue:
        a = queue.popleft()
        for b in qg.nbrs[a]:
            if not seen[b]:
                seen[b] = True
                tree.append((a, b) if a < b else (b, a))
                queue.append(b)
    if not all(seen):
        raise ValueError("the quotient graph is disconnected; the input graph must be connected")
    tree_edges = tuple(min(q.preimage[t]) for t in tree)
    keep = set(tree_edges)
    for s in inst.sets:
        members = set(s)
        for u in s:
            for v in g.nbrs[u]:
                if u < v and v in members:
                    keep.add((u, v))
    reduced_graph = Graph(g.n, [e for e in g.edges if (e[0], e[1]) in keep])
    reduced = ReducedGraph(reduced_graph, tree_edges, tuple(classes))
    merged_inst = Instance(reduced_graph, grouping.merged_sets, inst.anchors)
    return reduced, merged_inst


def solve_spanning_tree(inst: Instance) -> Solution:
    """Spanning-tree heuristic; the reported cost is measured in the original graph.

    When a group of overlapping sets reaches a leaf of the decomposition,
    each of its sets picks its own candidate against the leaf's anchors,
    with distances taken in the reduced graph.
    """
    grouping = group_overlapping_sets(inst)
    reduced, merged = reduce_to_decomposable(inst, grouping)
    gp = reduced.graph
    leaves, region = decompose(gp, merged.sets, merged.anchors)
    choices = [0] * inst.k
    for leaf in leaves:
        rid = leaf.region
        allowed = lambda v, rid=rid: region[v] == rid  # noqa: E731
        for i in grouping.groups[leaf.index]:
            choices[i] = solve_base_case(gp, inst.sets[i], leaf.anchors, allowed=allowed)
    return make_solution(inst, choices)


def hitting_distance(g: Graph, x: int, targets) -> float:
    """``min_{y in targets} d(x, y)``, by a search from ``x`` that stops at the first hit."""
    targets = set(targets)
    if not targets:
        raise ValueError("hitting distance to an empty set")
    if x in targets:
        return 0.0
    return _hitting_all(g, x, [targets])[0]


def _hitting_all(g: Graph, x: int, target_sets) -> list[float]:
    """Hitting distances from ``x`` to each of ``target_sets`` in one truncated search."""
    owners: dict[int, list[int]] = {}
    for j, s in enumerate(target_sets):
        for v in s:
            owners.setdefault(v, []).append(j)
    result = [math.inf] * len(target_sets)
    left = len(target_sets)

    def settle(v, d):
        nonlocal left
        for j in owners.get(v, ()):
            if result[j] == math.inf:
                result[j] = d
                left -= 1

    nbrs = g.nbrs
    if g.uniform:
        dist = {x: 0.0}
        settle(x, 0.0)
        queue = deque([x])
        while queue and left:
            u = queue.popleft()
            du = dist[u] + 1.0
            for v in nbrs[u]:
                if v not in dist:
                    dist[v] = du
                    settle(v, du)
                    queue.append(v)
        return result
    done = set()
    best = {x: 0.0}
    heap = [(0.0, x)]
    while heap and left:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        settle(u, d)
        for v, w in zip(nbrs[u], g.wts[u]):
            nd = d + w
            if v not in done and nd < best.get(v, math.inf):
                best[v] = nd
                heapq.heappush(heap, (nd, v))
    return result


def hitting_scores(inst: Instance) -> dict[int, float]:
    """``sum_j d(x, X_j)`` for every candidate ``x`` of every set."""
    scores = {}
    for s in inst.sets:
        for x in s:
            if x not in scores:
                scores[x] = sum(_hitting_all(inst.graph, x, inst.sets))
    return scores


def solve_hitting(inst: Instance) -> Solution:
    """Hitting-distance heuristic: each set takes its candidate with the lowest summed hitting distance."""
    scores = hitting_scores(inst)
    choices = [min(s, key=lambda x: (scores[x], x)) for s in inst.sets]
    return make_solution(inst, choices)


__all__ = [
    "IndexGrouping",
    "ReducedGraph",
    "group_overlapping_sets",
    "reduce_to_decomposable",
    "solve_spanning_tree",
    "hitting_distance",
    "hitting_scores",
    "solve_hitting",
]
