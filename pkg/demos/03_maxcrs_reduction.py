"""
From capacities to distances
============================

Picking one element per set to maximize pairwise capacity can be turned
into a distance problem. Each cross-set pair becomes an edge of length
``alpha - c(x, y)``, where ``alpha`` is twice the largest capacity. All
lengths then sit in ``[alpha/2, alpha]``, so no detour is ever shorter
than a direct edge, and high capacity means short distance.
"""

from mindr import MaxCrsInstance, reduce_to_mindir, shortest_paths, solve_bruteforce
from mindr.generate import random_maxcrs
from mindr.oracle import check_reduction_equivalence, maxcrs_alpha, maxcrs_bruteforce

# %%
# Three sets of two elements.
mc = MaxCrsInstance(
    sets=((0, 1), (2, 3), (4, 5)),
    capacity={(0, 2): 9, (0, 4): 1, (2, 4): 3, (1, 3): 6, (1, 5): 6, (3, 5): 6},
)
alpha = maxcrs_alpha(mc)
inst = reduce_to_mindir(mc)
print("alpha =", alpha)
print("edges:", inst.graph.edges[:4], "...")

# %%
# Direct edges are shortest paths.
row = shortest_paths(inst.graph, 0)
print("distances from element 0:", row)

# %%
# The best capacity and the best distance cost line up:
# cost = k(k-1) alpha - capacity.
best_sets, best_cap = maxcrs_bruteforce(mc)
sol = solve_bruteforce(inst)
k = mc.k
print(f"max capacity {best_cap} with {best_sets}")
print(f"min cost {sol.cost} with {sol.choices}; k(k-1)alpha - capacity = {k * (k - 1) * alpha - best_cap}")

# %%
# The threshold form holds across random instances and thresholds.
ok = total = 0
for seed in range(100):
    rnd = random_maxcrs(seed, 3, 3)
    _, cap = maxcrs_bruteforce(rnd)
    for h in (cap - 1, cap, cap + 1, cap / 2):
        total += 1
        ok += check_reduction_equivalence(rnd, h)
print(f"{ok}/{total} threshold checks hold")
