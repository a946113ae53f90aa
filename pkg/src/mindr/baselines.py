"""Comparison baselines: greedy sequential selection, highest degree, highest PageRank."""

from __future__ import annotations

import math

import numpy as np
import scipy.sparse as sp

from .evaluation import make_solution
from .graph import Graph, distances_from
from .instance import Instance, Solution

DAMPING = 0.85
PR_TOL = 1e-9
PR_ITERS = 200
TIE_RTOL = 1e-9


def make_rng(seed: int | np.random.Generator = 0) -> np.random.Generator:
    """Seeded source of uniform draws (numpy's PCG64 via ``default_rng``)."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(int(seed))


def _closest(candidates, picked, rows) -> int:
    """Candidate minimizing the summed distance to ``picked``; lowest id on ties."""
    best, best_d = None, math.inf
    for x in candidates:
        d = 0.0
        for y in picked:
            d += rows[y].get(x, math.inf)
        if d < best_d:
            best, best_d = x, d
    return candidates[0] if best is None else best


def solve_greedy(inst: Instance, rng: int | np.random.Generator = 0) -> Solution:
    """Greedy sequential selection with a random start.

    A random set ``i`` and a random candidate of it start the selection;
    sets ``i+1, ..., k, 1, ..., i-1`` then each take the candidate closest
    (summed distance) to everything already chosen. Finally set ``i`` is
    re-chosen the same way against the other ``k-1`` picks.
    """
    rng = make_rng(rng)
    g = inst.graph
    k = inst.k
    start = int(rng.integers(k))
    first = inst.sets[start][int(rng.integers(len(inst.sets[start])))]
    rows: dict[int, dict[int, float]] = {}

    def row(v):
        if v not in rows:
            rows[v] = distances_from(g, v)
        return rows[v]

    choices = [None] * k
    choices[start] = first
    picked = [first]
    row(first)
    for step in range(1, k):
        j = (start + step) % k
        x = _closest(inst.sets[j], picked, rows)
        choices[j] = x
        picked.append(x)
        row(x)
    others = [choices[j] for j in range(k) if j != start]
    if others:
        choices[start] = _closest(inst.sets[start], others, rows)
    return make_solution(inst, choices)


def solve_degree(inst: Instance) -> Solution:
    """Highest-degree candidate of each set (lowest id on ties)."""
    g = inst.graph
    return make_solution(inst, [max(s, key=lambda v: (g.degree(v), -v)) for s in inst.sets])


def pagerank(
    g: Graph,
    damping: float = DAMPING,
    tolerance: float = PR_TOL,
    max_iters: int = PR_ITERS,
) -> np.ndarray:
    """PageRank by power iteration, every edge followed in both directions.

    Edge weights are ignored (they are lengths, not link strengths).
    Isolated vertices spread their mass uniformly. Iteration stops once the
    L1 change drops below ``tolerance`` or after ``max_iters`` steps.
    """
    n = g.n
    if n == 0:
        raise ValueError("pagerank of an empty graph")
    if not 0 <= damping <= 1:
        raise ValueError(f"damping must lie in [0, 1], got {damping}")
    if g.edges:
        src = np.array([e[0] for e in g.edges] + [e[1] for e in g.edges])
        dst = np.array([e[1] for e in g.edges] + [e[0] for e in g.edges])
    else:
        src = dst = np.zeros(0, dtype=int)
    deg = np.bincount(src, minlength=n).astype(float)
    inv = np.divide(1.0, deg, out=np.zeros(n), where=deg > 0)
    # column-stochastic transition: P[dst, src] = 1/deg(src)
    P = sp.csr_matrix((inv[src], (dst, src)), shape=(n, n))
    dangling = deg == 0
    x = np.full(n, 1.0 / n)
    for _ in range(max_iters):
        nxt = damping * (P @ x + x[dangling].sum() / n) + (1.0 - damping) / n
        if not np.all(np.isfinite(nxt)):
            raise FloatingPointError("non-finite PageRank iterate")
        nxt /= nxt.sum()
        delta = np.abs(nxt - x).sum()
        x = nxt
        if delta < tolerance:
            break
    return x


def solve_pagerank(
    inst: Instance,
    damping: float = DAMPING,
    tolerance: float = PR_TOL,
    max_iters: int = PR_ITERS,
) -> Solution:
    """Highest-PageRank candidate of each set.

    Scores within ``TIE_RTOL`` (relative) of the set's best count as tied,
    so round-off cannot break symmetric ties; the lowest id wins.
    """
    scores = pagerank(inst.graph, damping, tolerance, max_iters)
    choices = []
    for s in inst.sets:
        top = max(scores[v] for v in s)
        choices.append(min(v for v in s if scores[v] >= top * (1 - TIE_RTOL)))
    return make_solution(inst, choices)
