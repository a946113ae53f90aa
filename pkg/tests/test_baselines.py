import numpy as np
import pytest

from mindr.baselines import make_rng, pagerank, solve_degree, solve_greedy, solve_pagerank
from mindr.evaluation import distance_cost
from mindr.generate import random_general
from mindr.graph import Graph, shortest_paths
from mindr.instance import Instance, connect_maximal


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


PATH_INST = Instance(path(6), ((0, 1), (4, 5)))


def test_greedy_singletons():
    inst = Instance(path(5), ((0,), (3,), (4,)))
    for seed in range(5):
        assert solve_greedy(inst, seed).choices == (0, 3, 4)


def test_greedy_path_example_any_seed():
    for seed in range(40):
        assert solve_greedy(PATH_INST, seed).choices == (1, 4)


def test_greedy_deterministic():
    inst = random_general(4, 40, 5, 4)
    assert solve_greedy(inst, 7) == solve_greedy(inst, 7)


def test_greedy_reselection_never_hurts():
    for seed in range(40):
        inst = random_general(seed, 30, 4, 4)
        # replay the two random draws the solver makes
        rng = make_rng(seed)
        start = int(rng.integers(inst.k))
        first = inst.sets[start][int(rng.integers(len(inst.sets[start])))]
        sol = solve_greedy(inst, seed)
        others = [x for j, x in enumerate(sol.choices) if j != start]
        row_first = shortest_paths(inst.graph, first)
        row_final = shortest_paths(inst.graph, sol.choices[start])
        assert sum(row_final[y] for y in others) <= sum(row_first[y] for y in others)


def test_degree_examples():
    star = Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    assert solve_degree(Instance(star, ((1, 0, 2),))).choices == (0,)
    assert solve_degree(Instance(path(4), ((3, 2, 1),))).choices == (1,)


def test_degree_counts_added_clique_edges():
    # X = {0, 1, 2, 3}: inside G[X] vertex 0 is a star centre (degree 3), 1 has
    # one extra edge outside (degree 2). After the clique, 1 reaches degree 4.
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 4)])
    inst = Instance(g, ((0, 1, 2, 3),))
    assert solve_degree(inst).choices == (0,)
    assert solve_degree(connect_maximal(inst)).choices == (1,)


def test_pagerank_regular_and_pair():
    cycle = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert np.allclose(pagerank(cycle), 0.2, atol=1e-12)
    assert np.allclose(pagerank(Graph(2, [(0, 1)])), [0.5, 0.5], atol=1e-12)


def test_pagerank_path_matches_linear_system():
    d = 0.85
    P = np.array([[0, 0.5, 0], [1, 0, 1], [0, 0.5, 0]])
    exact = np.linalg.solve(np.eye(3) - d * P, np.full(3, (1 - d) / 3))
    got = pagerank(path(3), damping=d)
    assert np.allclose(got, exact, atol=1e-9)
    assert got[1] > got[0] and got[1] > got[2]
    assert abs(got.sum() - 1) < 1e-9


def test_pagerank_dangling_and_errors():
    x = pagerank(Graph(3, [(0, 1)]))
    assert abs(x.sum() - 1) < 1e-9
    with pytest.raises(ValueError):
        pagerank(Graph(0))


def test_solve_pagerank_examples():
    assert solve_pagerank(Instance(path(3), ((0, 1),))).choices == (1,)
    cycle = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert solve_pagerank(Instance(cycle, ((3, 1, 2),))).choices == (1,)
    assert solve_pagerank(Instance(path(4), ((0,), (3,)))).choices == (0, 3)


def test_baseline_costs_match_distance_cost():
    for seed in range(20):
        inst = random_general(seed, 30, 4, 4)
        for sol in (solve_greedy(inst, seed), solve_degree(inst), solve_pagerank(inst)):
            assert all(x in s for x, s in zip(sol.choices, inst.sets))
            assert sol.cost == distance_cost(inst.graph, sol.choices)
