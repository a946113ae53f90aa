"""Undirected graphs, shortest paths and connectivity structure.

Vertices are the integers ``0..n-1``. Edges are stored once, as ``(u, v, w)``
with ``u < v``; adjacency lists are sorted by neighbour id so that every
traversal in the package visits vertices in ascending order.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from typing import Iterable, NamedTuple, Sequence

INF = math.inf

Edge = tuple[int, int]


class Graph:
    """Immutable undirected graph with nonnegative edge weights.

    Self-loops are dropped and parallel edges collapse to their minimum
    weight. ``uniform`` is true when every weight equals 1, in which case
    distance queries use breadth-first search.
    """

    __slots__ = ("n", "edges", "nbrs", "wts", "uniform", "_weight")

    def __init__(self, n: int, edges: Iterable[Sequence] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        best: dict[Edge, float] = {}
        for edge in edges:
            if len(edge) == 2:
                u, v = edge
                w = 1.0
            else:
                u, v, w = edge
                w = float(w)
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if not w >= 0 or math.isinf(w):
                raise ValueError(f"edge ({u}, {v}) has invalid weight {w}")
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            old = best.get(key)
            if old is None or w < old:
                best[key] = w
        self.n = n
        self._weight = best
        self.edges = tuple((u, v, w) for (u, v), w in sorted(best.items()))
        adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
        for u, v, w in self.edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        for row in adj:
            row.sort()
        # flat int tuples keep traversals cache-friendly on large graphs
        self.nbrs = tuple(tuple(v for v, _ in row) for row in adj)
        self.wts = tuple(tuple(w for _, w in row) for row in adj)
        self.uniform = all(w == 1.0 for _, _, w in self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def neighbors(self, u: int) -> list[int]:
        return list(self.nbrs[u])

    def degree(self, u: int) -> int:
        return len(self.nbrs[u])

    def weight(self, u: int, v: int) -> float | None:
        """Weight of edge ``{u, v}``, or None if absent."""
        return self._weight.get((u, v) if u < v else (v, u))

    def has_edge(self, u: int, v: int) -> bool:
        return self.weight(u, v) is not None

    def with_edges(self, extra: Iterable[Sequence]) -> Graph:
        """New graph with ``extra`` edges added (parallel edges keep the minimum)."""
        return Graph(self.n, list(self.edges) + list(extra))

    def subgraph(self, vertices: Iterable[int]) -> Graph:
        """Edge-induced restriction to ``vertices``; vertex ids are kept, others become isolated."""
        keep = set(vertices)
        return Graph(self.n, [e for e in self.edges if e[0] in keep and e[1] in keep])

    def without_edge(self, u: int, v: int) -> Graph:
        key = (u, v) if u < v else (v, u)
        return Graph(self.n, [e for e in self.edges if (e[0], e[1]) != key])


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")


def distances_from(g, source, allowed=None, targets=None):
    """Single-source distances as a dict of reached vertices.

    ``allowed`` (a membership predicate) restricts the search to a vertex
    subset. When ``targets`` is given, the search stops once all of them
    have a final distance.
    """
    remaining = None
    if targets is not None:
        remaining = set(targets)
        remaining.discard(source)
    dist = {source: 0.0}
    if remaining is not None and not remaining:
        return dist
    nbrs = g.nbrs
    if g.uniform:
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1.0
            for v in nbrs[u]:
                if v in dist or (allowed is not None and not allowed(v)):
                    continue
                dist[v] = du
                if remaining is not None:
                    remaining.discard(v)
                    if not remaining:
                        return dist
                queue.append(v)
        return dist
    done = set()
    heap = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if remaining is not None:
            remaining.discard(u)
            if not remaining:
                break
        for v, w in zip(nbrs[u], g.wts[u]):
            if v in done or (allowed is not None and not allowed(v)):
                continue
            nd = d + w
            if nd < dist.get(v, INF):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    if remaining is not None:
        # Tentative entries may remain for vertices never settled.
        return {v: dist[v] for v in done}
    return dist


def shortest_paths(g: Graph, source: int) -> list[float]:
    """Distances from ``source`` to every vertex; ``inf`` when unreachable.

    Uses BFS on unit-weight graphs and Dijkstra otherwise.
    """
    _check_vertex(g, source)
    row = [INF] * g.n
    for v, d in distances_from(g, source).items():
        row[v] = d
    return row


def connected_components(g: Graph) -> list[int]:
    """Component label per vertex. Labels are numbered in order of each component's lowest vertex."""
    label = [-1] * g.n
    count = 0
    for s in range(g.n):
        if label[s] != -1:
            continue
        label[s] = count
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.nbrs[u]:
                if label[v] == -1:
                    label[v] = count
                    queue.append(v)
        count += 1
    return label


def is_connected(g: Graph, vertices: Iterable[int] | None = None) -> bool:
    """Whether ``g`` (or the subgraph it induces on ``vertices``) is connected."""
    if vertices is None:
        return g.n == 0 or max(connected_components(g)) == 0
    members = set(vertices)
    if not members:
        return True
    start = min(members)
    seen = distances_from(g, start, allowed=members.__contains__)
    return len(seen) == len(members)


def _lowpoint_dfs(g: Graph):
    """Iterative DFS yielding preorder numbers, low values and tree parents."""
    n = g.n
    pre = [-1] * n
    low = [0] * n
    parent = [-1] * n
    order = []
    counter = 0
    for root in range(n):
        if pre[root] != -1:
            continue
        pre[root] = low[root] = counter
        counter += 1
        order.append(root)
        stack = [(root, iter(g.nbrs[root]))]
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if pre[v] == -1:
                    parent[v] = u
                    pre[v] = low[v] = counter
                    counter += 1
                    order.append(v)
                    stack.append((v, iter(g.nbrs[v])))
                    advanced = True
                    break
                if v != parent[u]:
                    low[u] = min(low[u], pre[v])
            if not advanced:
                stack.pop()
                p = parent[u]
                if p != -1:
                    low[p] = min(low[p], low[u])
    return pre, low, parent, order


def bridges(g: Graph) -> set[Edge]:
    """All bridges, as ``(u, v)`` pairs with ``u < v``."""
    pre, low, parent, _ = _lowpoint_dfs(g)
    out = set()
    for v in range(g.n):
        p = parent[v]
        if p != -1 and low[v] > pre[p]:
            out.add((p, v) if p < v else (v, p))
    return out


def two_edge_connected_components(g: Graph) -> list[int]:
    """Component label per vertex after deleting every bridge.

    Each class is a maximal vertex set inducing a connected bridgeless
    subgraph; a vertex with no cycle through it forms a class of its own.
    """
    cut = bridges(g)
    return connected_components(Graph(g.n, [e for e in g.edges if (e[0], e[1]) not in cut]))


def biconnected_components(g: Graph) -> list[frozenset[int]]:
    """Maximal biconnected vertex sets (blocks), ordered by discovery.

    A bridge is a block of two vertices; cut vertices appear in several
    blocks; isolated vertices belong to none.
    """
    n = g.n
    pre = [-1] * n
    low = [0] * n
    blocks = []
    counter = 0
    for root in range(n):
        if pre[root] != -1 or not g.nbrs[root]:
            continue
        pre[root] = low[root] = counter
        counter += 1
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(g.nbrs[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v == parent:
                    continue
                if pre[v] == -1:
                    edge_stack.append((u, v))
                    pre[v] = low[v] = counter
                    counter += 1
                    stack.append((v, u, iter(g.nbrs[v])))
                    advanced = True
                    break
                if pre[v] < pre[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], pre[v])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= pre[parent]:
                block = set()
                while True:
                    a, b = edge_stack.pop()
                    block.add(a)
                    block.add(b)
                    if (a, b) == (parent, u):
                        break
                blocks.append(frozenset(block))
    return blocks


class Quotient(NamedTuple):
    """Result of :func:`quotient_graph`.

    ``graph`` has one vertex per class, numbered in ascending order of the
    class labels listed in ``labels``. ``preimage`` maps each class edge
    ``(a, b)``, ``a < b``, to the sorted original edges crossing it.
    """

    graph: Graph
    preimage: dict[Edge, list[Edge]]
    labels: list[int]
    class_of: list[int]


def quotient_graph(g: Graph, classes: Sequence[int]) -> Quotient:
    """Contract each class of vertices to a single vertex.

    ``classes[v]`` is an arbitrary integer label for vertex ``v``. Edges
    inside a class disappear; a class edge carries the minimum weight of
    its preimage.
    """
    if len(classes) != g.n:
        raise ValueError("classes must give a label for every vertex")
    labels = sorted(set(classes))
    dense = {lab: i for i, lab in enumerate(labels)}
    class_of = [dense[c] for c in classes]
    preimage: dict[Edge, list[Edge]] = {}
    weights: dict[Edge, float] = {}
    for u, v, w in g.edges:
        a, b = class_of[u], class_of[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        preimage.setdefault(key, []).append((u, v))
        weights[key] = min(w, weights.get(key, INF))
    q = Graph(len(labels), [(a, b, w) for (a, b), w in weights.items()])
    return Quotient(q, preimage, labels, class_of)
