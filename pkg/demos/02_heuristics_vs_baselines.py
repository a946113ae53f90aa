"""
Heuristics and baselines on general graphs
==========================================

Most graphs are not decomposable. Here we generate connected random
graphs with random connected candidate sets, mark the exhaustive optimum
as the "fair" choice, and score every method by how close its cost gets
and how many of its picks are fair.
"""

from mindr import (
    batch_report,
    solve_bruteforce,
    solve_degree,
    solve_greedy,
    solve_hitting,
    solve_pagerank,
    solve_spanning_tree,
    validate,
)
from mindr.generate import random_general
from mindr.instance import plant_fair

# %%
# A typical instance fails the decomposability test, usually because
# sets sit on shared cycles.
sample = random_general(0, 40, 5, 4)
print(validate(sample).format())

# %%
# Forty instances with planted fair vertices.
instances = {}
for seed in range(40):
    inst = random_general(seed, 40, 5, 4)
    instances[f"g{seed}"] = plant_fair(inst, solve_bruteforce(inst).choices)

algorithms = {
    "hitting": solve_hitting,
    "spanning-tree": solve_spanning_tree,
    "greedy": lambda inst: solve_greedy(inst, rng=0),
    "degree": solve_degree,
    "pagerank": solve_pagerank,
}

# %%
# The ratio column is cost relative to the best method on the same
# instance (100 is best). The value column is the share of fair picks.
summary = batch_report(instances, algorithms)
print(summary.to_text())

# %%
# The per-instance table is plain CSV, handy for a spreadsheet.
print(summary.to_csv().splitlines()[:4])
