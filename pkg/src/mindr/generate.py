"""Seeded synthetic instance families.

* ``random_decomposable`` -- connected blobs joined in a tree by single
  edges; every candidate set lives in its own blob (possibly with extra
  non-candidate vertices on cycles through it), so the instance satisfies
  the decomposability conditions by construction.
* ``tree_of_cliques`` -- each set is a clique, cliques joined in a tree.
* ``random_general`` -- a connected random graph with randomly grown
  connected candidate sets, optionally overlapping.
* ``random_maxcrs`` -- small MaxCRS instances with integer capacities.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph
from .instance import Instance
from .oracle import MaxCrsInstance


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def _weight(rng, weighted):
    if weighted == "int":
        return float(rng.integers(1, 10))
    if weighted:
        return float(np.round(rng.uniform(0.5, 5.0), 6))
    return 1.0


def _blob_edges(rng, core, halo, extra):
    """Random tree on ``core``, halo vertices hung anywhere, plus ``extra`` random chords."""
    edges = []
    members = list(core)
    for t in range(1, len(core)):
        edges.append((core[t], core[int(rng.integers(t))]))
    for v in halo:
        edges.append((v, members[int(rng.integers(len(members)))]))
        members.append(v)
    if len(members) > 1:
        for _ in range(extra):
            a, b = rng.choice(len(members), size=2, replace=False)
            edges.append((members[a], members[b]))
    return edges


def random_decomposable(
    seed,
    n: int,
    k: int,
    set_size: int,
    extra_edge_ratio: float = 0.5,
    weighted: bool | str = False,
    anchors: int = 0,
    vary_sizes: bool = True,
) -> Instance:
    """Decomposable instance with ``n`` vertices and ``k`` sets of up to ``set_size`` vertices.

    ``weighted`` is False (unit weights), ``"int"`` (integers 1..9) or True
    (reals in [0.5, 5]). ``anchors`` random anchor entries are added with
    weights of the same kind.
    """
    if k < 1 or set_size < 1:
        raise ValueError("k and set_size must be positive")
    if n < k * set_size:
        raise ValueError(f"need n >= k * set_size ({k * set_size}), got n={n}")
    rng = _rng(seed)
    perm = [int(x) for x in rng.permutation(n)]
    sizes = [int(rng.integers(1, set_size + 1)) if vary_sizes else set_size for _ in range(k)]
    pos = 0
    cores = []
    for s in sizes:
        cores.append(perm[pos:pos + s])
        pos += s
    free = perm[pos:]
    # a share of the free vertices joins set blobs as non-candidate halo
    halos = [[] for _ in range(k)]
    loose = []
    for v in free:
        if rng.random() < 0.5:
            halos[int(rng.integers(k))].append(v)
        else:
            loose.append(v)
    units = [(cores[i], halos[i]) for i in range(k)]
    while loose:
        size = int(rng.integers(1, max(2, set_size + 1)))
        units.append((loose[:size], []))
        loose = loose[size:]
    edges = []
    for core, halo in units:
        extra = int(round(extra_edge_ratio * (len(core) + len(halo))))
        edges.extend(_blob_edges(rng, core, halo, extra))
    order = [int(x) for x in rng.permutation(len(units))]
    for t in range(1, len(order)):
        a = units[order[t]]
        b = units[order[int(rng.integers(t))]]
        va = a[0] + a[1]
        vb = b[0] + b[1]
        edges.append((va[int(rng.integers(len(va)))], vb[int(rng.integers(len(vb)))]))
    g = Graph(n, [(u, v, _weight(rng, weighted)) for u, v in edges])
    anchor_list = [(int(rng.integers(n)), _weight(rng, weighted or "int")) for _ in range(anchors)]
    return Instance(g, tuple(tuple(c) for c in cores), tuple(anchor_list))


def tree_of_cliques(seed, k: int, clique_size: int, free: int = 0, weighted: bool | str = False) -> Instance:
    """Cliques of random size ``1..clique_size`` (one per set) and ``free`` loose vertices, joined in a random tree."""
    rng = _rng(seed)
    sizes = [int(rng.integers(1, clique_size + 1)) for _ in range(k)]
    n = sum(sizes) + free
    perm = [int(x) for x in rng.permutation(n)]
    units, pos = [], 0
    for s in sizes:
        units.append(perm[pos:pos + s])
        pos += s
    units.extend([v] for v in perm[pos:])
    edges = []
    for c in units[:k]:
        edges.extend((c[a], c[b]) for a in range(len(c)) for b in range(a + 1, len(c)))
    order = [int(x) for x in rng.permutation(len(units))]
    for t in range(1, len(order)):
        a, b = units[order[t]], units[order[int(rng.integers(t))]]
        edges.append((a[int(rng.integers(len(a)))], b[int(rng.integers(len(b)))]))
    g = Graph(n, [(u, v, _weight(rng, weighted)) for u, v in edges])
    return Instance(g, tuple(tuple(c) for c in units[:k]))


def _grow(rng, g, start, size, allowed):
    chosen = [start]
    inside = {start}
    frontier = {v for v in g.neighbors(start) if allowed(v)}
    while len(chosen) < size and frontier:
        pool = sorted(frontier)
        v = pool[int(rng.integers(len(pool)))]
        frontier.discard(v)
        chosen.append(v)
        inside.add(v)
        frontier.update(w for w in g.neighbors(v) if w not in inside and allowed(w))
    return chosen


def random_general(
    seed,
    n: int,
    k: int,
    set_size: int,
    overlap: float = 0.0,
    extra_edge_ratio: float = 0.6,
    weighted: bool | str = False,
    vary_sizes: bool = True,
) -> Instance:
    """Connected random graph with ``k`` connected candidate sets.

    With ``overlap`` = 0 the sets are pairwise disjoint; otherwise each set
    after the first starts, with that probability, from a vertex already
    used by an earlier set and may grow through used vertices.
    """
    if k < 1 or set_size < 1:
        raise ValueError("k and set_size must be positive")
    if n < k * set_size:
        raise ValueError(f"need n >= k * set_size ({k * set_size}), got n={n}")
    if not 0 <= overlap <= 1:
        raise ValueError("overlap must lie in [0, 1]")
    rng = _rng(seed)
    perm = [int(x) for x in rng.permutation(n)]
    edges = [(perm[t], perm[int(rng.integers(t))]) for t in range(1, n)]
    if n > 1:
        for _ in range(int(round(extra_edge_ratio * n))):
            a, b = rng.choice(n, size=2, replace=False)
            edges.append((int(a), int(b)))
    g = Graph(n, [(u, v, _weight(rng, weighted)) for u, v in edges])
    used: set[int] = set()
    sets = []
    for i in range(k):
        size = int(rng.integers(1, set_size + 1)) if vary_sizes else set_size
        if i > 0 and overlap > 0 and rng.random() < overlap:
            pool = sorted(used)
            start = pool[int(rng.integers(len(pool)))]
            members = _grow(rng, g, start, size, lambda v: True)
        else:
            pool = [v for v in range(n) if v not in used]
            start = pool[int(rng.integers(len(pool)))]
            members = _grow(rng, g, start, size, lambda v: v not in used)
        used.update(members)
        sets.append(tuple(members))
    return Instance(g, tuple(sets))


def random_maxcrs(seed, k: int, max_size: int, max_capacity: int = 20, density: float = 0.85) -> MaxCrsInstance:
    """MaxCRS instance with ``k`` sets of size ``1..max_size`` and integer capacities in ``[0, max_capacity]``.

    Each cross-set pair gets a capacity with probability ``density``; at
    least one pair always does.
    """
    if k < 2:
        raise ValueError("MaxCRS needs at least two sets")
    rng = _rng(seed)
    sizes = [int(rng.integers(1, max_size + 1)) for _ in range(k)]
    elems = [int(x) for x in rng.permutation(sum(sizes))]
    sets, pos = [], 0
    for s in sizes:
        sets.append(tuple(elems[pos:pos + s]))
        pos += s
    caps = {}
    pairs = [(x, y) for a in range(k) for b in range(a + 1, k) for x in sets[a] for y in sets[b]]
    for x, y in pairs:
        if rng.random() < density:
            caps[(x, y)] = float(rng.integers(0, max_capacity + 1))
    if not caps:
        x, y = pairs[int(rng.integers(len(pairs)))]
        caps[(x, y)] = float(rng.integers(0, max_capacity + 1))
    return MaxCrsInstance(tuple(sets), caps)
