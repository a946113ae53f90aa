"""Name-based dispatch over every solver in the package."""

from __future__ import annotations

from functools import partial
from typing import Callable

from .baselines import DAMPING, PR_ITERS, PR_TOL, solve_degree, solve_greedy, solve_pagerank
from .exact import solve_decomposable
from .heuristics import solve_hitting, solve_spanning_tree
from .instance import Instance, Solution
from .oracle import DEFAULT_CAP, solve_bruteforce

ALGORITHMS = ("decomposable", "spanning-tree", "hitting", "greedy", "degree", "pagerank", "brute")


def get_solver(
    name: str,
    seed: int = 0,
    cap: int = DEFAULT_CAP,
    damping: float = DAMPING,
    pr_tol: float = PR_TOL,
    pr_iters: int = PR_ITERS,
) -> Callable[[Instance], Solution]:
    """Return ``instance -> Solution`` for algorithm ``name`` with the given options bound."""
    if name == "decomposable":
        return solve_decomposable
    if name == "spanning-tree":
        return solve_spanning_tree
    if name == "hitting":
        return solve_hitting
    if name == "greedy":
        return lambda inst: solve_greedy(inst, seed)
    if name == "degree":
        return solve_degree
    if name == "pagerank":
        return partial(solve_pagerank, damping=damping, tolerance=pr_tol, max_iters=pr_iters)
    if name == "brute":
        return partial(solve_bruteforce, cap=cap)
    raise ValueError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHMS)}")


def run(name: str, inst: Instance, **options) -> Solution:
    return get_solver(name, **options)(inst)
