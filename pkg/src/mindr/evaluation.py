"""Objective evaluation and comparison metrics.

The distance cost of a choice vector is the double sum of pairwise
distances over ordered pairs, so every unordered pair is counted twice.
Comparison metrics follow the usual benchmark conventions: the
distance-cost ratio normalizes by the best algorithm on the instance
(best = 100), the value is the fraction of fair picks, and aggregates are
reported as mean and standard error.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Mapping, Sequence

import numpy as np

from .graph import Graph, distances_from
from .instance import Instance, Solution


class UnreachableError(ValueError):
    """Two chosen vertices (or a choice and an anchor) are disconnected."""


class DegenerateRatioError(ValueError):
    """The best cost is zero, so the distance-cost ratio is undefined."""


def _rows(g: Graph, sources, targets) -> dict[int, dict[int, float]]:
    targets = set(targets)
    return {s: distances_from(g, s, targets=targets) for s in set(sources)}


def distance_cost(g: Graph, choices: Sequence[int]) -> float:
    """``sum_i sum_j d(x_i, x_j)`` over the chosen vertices."""
    rows = _rows(g, choices, choices)
    total = 0.0
    for a in choices:
        row = rows[a]
        for b in choices:
            d = row.get(b)
            if d is None:
                raise UnreachableError(f"vertices {a} and {b} are not connected")
            total += d
    return total


def anchor_cost(g: Graph, choices: Sequence[int], anchors: Sequence[tuple[int, float]]) -> float:
    """``sum_i sum_{z in B} b(z) d(x_i, z)``."""
    if not anchors:
        return 0.0
    rows = _rows(g, choices, [z for z, _ in anchors])
    total = 0.0
    for x in choices:
        row = rows[x]
        for z, b in anchors:
            d = row.get(z)
            if d is None:
                raise UnreachableError(f"vertex {x} cannot reach anchor {z}")
            total += b * d
    return total


def objective(g: Graph, choices: Sequence[int], anchors: Sequence[tuple[int, float]] = ()) -> float:
    """Distance cost plus the weighted anchor term."""
    return distance_cost(g, choices) + anchor_cost(g, choices, anchors)


def make_solution(inst: Instance, choices: Sequence[int]) -> Solution:
    """Wrap ``choices`` with their objective value on ``inst``."""
    if len(choices) != inst.k:
        raise ValueError(f"expected {inst.k} choices, got {len(choices)}")
    for i, x in enumerate(choices):
        if x not in inst.sets[i]:
            raise ValueError(f"choice {x} is not a candidate of set {i + 1}")
    return Solution(tuple(choices), objective(inst.graph, choices, inst.anchors))


def ratio(costs: Mapping[str, float]) -> dict[str, float]:
    """Each cost divided by the minimum, times 100."""
    if not costs:
        raise ValueError("no costs to compare")
    best = min(costs.values())
    if best <= 0:
        if all(c == best for c in costs.values()):
            raise DegenerateRatioError("all algorithms have zero cost")
        raise DegenerateRatioError("minimum cost is zero; ratio undefined")
    return {name: c / best * 100.0 for name, c in costs.items()}


def value(choices: Sequence[int], fair) -> float | None:
    """Fraction of choices that fall in their fair subset; None if any set lacks one."""
    if fair is None or any(f is None for f in fair):
        return None
    hits = sum(1 for x, f in zip(choices, fair) if x in f)
    return hits / len(choices)


def jaccard(a: Solution | Sequence[int], b: Solution | Sequence[int]) -> float:
    sa = set(a.choices if isinstance(a, Solution) else a)
    sb = set(b.choices if isinstance(b, Solution) else b)
    union = sa | sb
    if not union:
        return 1.0
    return len(sa & sb) / len(union)


@dataclass
class EvalReport:
    """Metrics of several algorithms on one instance.

    ``ratios`` is None when the instance is degenerate (best cost zero);
    such instances are left out of ratio aggregation.
    """

    instance: str
    costs: dict[str, float]
    ratios: dict[str, float] | None
    values: dict[str, float | None]
    jaccard: dict[tuple[str, str], float] = field(default_factory=dict)

    @property
    def degenerate(self) -> bool:
        return self.ratios is None


def evaluate(inst: Instance, solutions: Mapping[str, Solution], instance_id: str = "") -> EvalReport:
    """Compare solutions of one instance. Costs are recomputed from the choices."""
    costs = {}
    values = {}
    for name, sol in solutions.items():
        if len(sol.choices) != inst.k:
            raise ValueError(f"solution {name!r} has {len(sol.choices)} choices, instance has {inst.k} sets")
        costs[name] = objective(inst.graph, sol.choices, inst.anchors)
        values[name] = value(sol.choices, inst.fair)
    try:
        ratios = ratio(costs)
    except DegenerateRatioError:
        ratios = None
    pairs = {
        (a, b): jaccard(solutions[a], solutions[b]) for a, b in combinations(solutions, 2)
    }
    return EvalReport(instance_id, costs, ratios, values, pairs)


def ground_truth(inst: Instance) -> Solution | None:
    """Lowest-id fair vertex per set, or None when fair subsets are incomplete."""
    if inst.fair is None or any(f is None for f in inst.fair):
        return None
    return make_solution(inst, [f[0] for f in inst.fair])


def mean_stderr(xs: Sequence[float]) -> tuple[float, float]:
    """Mean and standard error (sample std / sqrt(n)); the error is 0 for one sample."""
    arr = np.asarray(xs, dtype=float)
    if arr.size == 0:
        return math.nan, math.nan
    if arr.size == 1:
        return float(arr[0]), 0.0
    return float(arr.mean()), float(arr.std(ddof=1) / math.sqrt(arr.size))


@dataclass
class SummaryRow:
    algorithm: str
    ratio_mean: float
    ratio_se: float
    value_mean: float | None
    value_se: float | None
    n_ratio: int
    n_value: int


@dataclass
class BatchSummary:
    rows: list[SummaryRow]
    reports: list[EvalReport]
    mean_jaccard: dict[tuple[str, str], float]

    @property
    def degenerate(self) -> list[str]:
        return [r.instance for r in self.reports if r.degenerate]

    def row(self, algorithm: str) -> SummaryRow:
        for r in self.rows:
            if r.algorithm == algorithm:
                return r
        raise KeyError(algorithm)

    def to_csv(self) -> str:
        """Per-instance table with columns instance, algorithm, cost, ratio, value."""
        return reports_to_csv(self.reports)

    def summary_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["algorithm", "ratio_mean", "ratio_se", "value_mean", "value_se", "n"])
        for r in self.rows:
            w.writerow([r.algorithm, _cell(r.ratio_mean), _cell(r.ratio_se),
                        _cell(r.value_mean), _cell(r.value_se), r.n_ratio])
        return buf.getvalue()

    def to_text(self) -> str:
        head = f"{'algorithm':<16} {'ratio':>10} {'(+-se)':>9} {'value':>7} {'(+-se)':>8}"
        lines = [head, "-" * len(head)]
        for r in self.rows:
            v = "-" if r.value_mean is None else f"{r.value_mean:7.3f}"
            vse = "" if r.value_se is None else f"({r.value_se:.3f})"
            lines.append(f"{r.algorithm:<16} {r.ratio_mean:10.3f} {'(%.3f)' % r.ratio_se:>9} {v:>7} {vse:>8}")
        if self.degenerate:
            lines.append(f"zero-cost instances excluded from ratios: {', '.join(self.degenerate)}")
        for (a, b), jac in self.mean_jaccard.items():
            lines.append(f"jaccard {a} / {b}: {jac:.3f}")
        return "\n".join(lines) + "\n"


def _cell(x) -> str:
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    return repr(float(x))


def reports_to_csv(reports: Sequence[EvalReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["instance", "algorithm", "cost", "ratio", "value"])
    for rep in reports:
        for name, cost in rep.costs.items():
            r = None if rep.ratios is None else rep.ratios[name]
            w.writerow([rep.instance, name, _cell(cost), _cell(r), _cell(rep.values[name])])
    return buf.getvalue()


def summarize(reports: Sequence[EvalReport]) -> BatchSummary:
    """Aggregate per-instance reports into mean and standard error per algorithm."""
    if not reports:
        raise ValueError("no reports to summarize")
    names: list[str] = []
    for rep in reports:
        names.extend(n for n in rep.costs if n not in names)
    rows = []
    for name in names:
        ratios = [rep.ratios[name] for rep in reports if rep.ratios is not None and name in rep.ratios]
        vals = [rep.values[name] for rep in reports if rep.values.get(name) is not None]
        rm, rse = mean_stderr(ratios)
        vm, vse = mean_stderr(vals) if vals else (None, None)
        rows.append(SummaryRow(name, rm, rse, vm, vse, len(ratios), len(vals)))
    jac: dict[tuple[str, str], list[float]] = {}
    for rep in reports:
        for key, x in rep.jaccard.items():
            jac.setdefault(key, []).append(x)
    return BatchSummary(rows, list(reports), {k: float(np.mean(v)) for k, v in jac.items()})


def batch_report(
    instances: Sequence[Instance] | Mapping[str, Instance],
    algorithms: Mapping[str, Callable[[Instance], Solution]],
    include_ground_truth: bool = True,
) -> BatchSummary:
    """Run every algorithm on every instance and aggregate the metrics.

    When an instance carries fair subsets for all sets and
    ``include_ground_truth`` is set, the fair selection is evaluated as an
    extra ``ground-truth`` entry.
    """
    if isinstance(instances, Mapping):
        items = list(instances.items())
    else:
        items = [(str(i), inst) for i, inst in enumerate(instances)]
    if not items:
        raise ValueError("batch_report needs at least one instance")
    reports = []
    for name, inst in items:
        sols = {alg: fn(inst) for alg, fn in algorithms.items()}
        truth = ground_truth(inst) if include_ground_truth else None
        if truth is not None:
            sols["ground-truth"] = truth
        reports.append(evaluate(inst, sols, name))
    return summarize(reports)
