"""
The command-line pipeline
=========================

Everything above is also reachable from the ``mindr`` command. This script
drives it in-process on temporary files: generate an instance, validate
it, solve it three ways and compare the solutions.
"""

import tempfile
from pathlib import Path

from mindr.cli import main

work = Path(tempfile.mkdtemp(prefix="mindr-demo-"))
inst = work / "inst.txt"

# %%
# A decomposable instance whose fair vertices are the exhaustive optimum.
main(["gen", "--kind", "decomposable", "--n", "60", "--k", "5", "--set-size", "6",
      "--seed", "4", "--plant-fair", "--out", str(inst)])
print(inst.read_text().splitlines()[:6], "...")

# %%
main(["validate", str(inst)])

# %%
# Solve with the exact method, the hitting-distance heuristic and the
# highest-degree baseline. Human-readable notes go to standard error.
algs = ("decomposable", "hitting", "degree")
for alg in algs:
    main(["solve", str(inst), "--alg", alg, "--out", str(work / f"{alg}.sol")])

# %%
# Compare them. The ground-truth row comes from the fair subsets.
report = work / "report.csv"
main(["eval", str(inst), *(str(work / f"{a}.sol") for a in algs), "--out", str(report)])
print(report.read_text())
