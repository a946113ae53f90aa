import random

import pytest

from mindr.exact import solve_decomposable
from mindr.generate import random_decomposable, random_general, tree_of_cliques
from mindr.graph import Graph, shortest_paths
from mindr.heuristics import (
    group_overlapping_sets,
    hitting_distance,
    reduce_to_decomposable,
    solve_hitting,
    solve_spanning_tree,
)
from mindr.instance import Instance, validate
from mindr.oracle import solve_bruteforce


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


PATH_INST = Instance(path(6), ((0, 1), (4, 5)))


def test_grouping_examples():
    g = path(8)
    assert group_overlapping_sets(Instance(g, ((0,), (1,), (2,)))).groups == ((0,), (1,), (2,))
    grouping = group_overlapping_sets(Instance(g, ((0, 1), (1, 2), (2, 3), (6, 7))))
    assert grouping.groups == ((0, 1, 2), (3,))
    assert grouping.merged_sets == ((0, 1, 2, 3), (6, 7))


def test_grouping_matches_closure():
    rng = random.Random(1)
    for _ in range(200):
        k = rng.randint(1, 6)
        sets = tuple(tuple(rng.sample(range(12), rng.randint(1, 3))) for _ in range(k))
        got = group_overlapping_sets(Instance(Graph(12), sets)).groups
        # transitive closure of the overlap relation
        reach = [[bool(set(a) & set(b)) for b in sets] for a in sets]
        for m in range(k):
            for i in range(k):
                for j in range(k):
                    reach[i][j] = reach[i][j] or (reach[i][m] and reach[m][j])
        group_of = {i: gi for gi, grp in enumerate(got) for i in grp}
        for i in range(k):
            for j in range(k):
                assert (group_of[i] == group_of[j]) == reach[i][j]


def test_reduction_on_square():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    reduced, merged = reduce_to_decomposable(Instance(g, ((0, 1), (2, 3))))
    assert reduced.tree_edges == ((0, 3),)
    assert (0, 3) in {(u, v) for u, v, _ in reduced.graph.edges}
    assert not reduced.graph.has_edge(1, 2)
    assert validate(merged).decomposable


def test_reduction_keeps_decomposable_path():
    reduced, merged = reduce_to_decomposable(PATH_INST)
    assert reduced.graph == PATH_INST.graph
    assert validate(merged).decomposable


def test_reduction_requires_connected_sets():
    with pytest.raises(ValueError):
        reduce_to_decomposable(Instance(path(3), ((0, 2),)))


def test_reduction_properties_on_general_instances():
    for seed in range(60):
        inst = random_general(seed, 30, 4, 4, overlap=0.3 if seed % 2 else 0.0)
        reduced, merged = reduce_to_decomposable(inst)
        classes = len(set(reduced.classes))
        assert len(reduced.tree_edges) == classes - 1
        assert validate(merged).decomposable
        for s in inst.sets:
            members = set(s)
            inner = {(u, v) for u, v, _ in inst.graph.edges if u in members and v in members}
            assert inner <= {(u, v) for u, v, _ in reduced.graph.edges}


def test_spanning_tree_examples():
    sol = solve_spanning_tree(PATH_INST)
    assert sol.choices == (1, 4) and sol.cost == 6
    assert solve_spanning_tree(Instance(path(4), ((3, 1, 2),))).choices == (1,)


def test_spanning_tree_agrees_with_exact_on_reduced_graph():
    for seed in range(30):
        inst = random_decomposable(seed, 30, 4, 3)
        reduced, merged = reduce_to_decomposable(inst)
        assert solve_spanning_tree(inst).choices == solve_decomposable(merged).choices


def test_spanning_tree_cost_measured_in_original_graph():
    # in the square, the reduction drops (1, 2) and lengthens d(1, 2) from 1 to 3
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    sol = solve_spanning_tree(Instance(g, ((0, 1), (2, 3))))
    assert sol.choices == (0, 3)
    assert sol.cost == 2


def test_spanning_tree_exact_on_tree_of_cliques():
    for seed in range(50):
        inst = tree_of_cliques(seed, 4, 3, free=2)
        assert solve_spanning_tree(inst).cost == solve_bruteforce(inst).cost


def test_hitting_distance_examples():
    g = path(4)
    assert hitting_distance(g, 1, {1, 3}) == 0
    assert hitting_distance(g, 0, {2, 3}) == 2
    assert hitting_distance(Graph(3, [(0, 1)]), 0, {2}) == float("inf")


def test_hitting_distance_matches_full_rows():
    rng = random.Random(3)
    for seed in range(60):
        inst = random_general(seed, 20, 2, 2, weighted="int" if seed % 2 else False)
        g = inst.graph
        for _ in range(5):
            x = rng.randrange(g.n)
            ys = rng.sample(range(g.n), rng.randint(1, 4))
            assert hitting_distance(g, x, ys) == min(shortest_paths(g, x)[y] for y in ys)


def test_hitting_examples():
    sol = solve_hitting(PATH_INST)
    assert sol.choices == (1, 4) and sol.cost == 6
    assert solve_hitting(Instance(path(4), ((3, 2),))).choices == (2,)
    # vertex 2 touches both other sets
    star = Graph(6, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5)])
    assert solve_hitting(Instance(star, ((0, 2), (3,), (4,)))).choices == (2, 3, 4)


def test_heuristics_feasible_and_not_below_optimum():
    for seed in range(80):
        inst = random_general(seed, 25, 4, 3, overlap=0.25 if seed % 3 == 0 else 0.0)
        best = solve_bruteforce(inst).cost
        for solver in (solve_spanning_tree, solve_hitting):
            sol = solver(inst)
            assert all(x in s for x, s in zip(sol.choices, inst.sets))
            assert sol.cost >= best
