"""Command-line front end: ``mindr <command> ...``.

Exit codes: 0 success, 2 input error, 3 instance not decomposable,
4 brute-force cap exceeded. Artifacts go to ``--out`` or standard output;
progress and summaries go to standard error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import generate
from .algorithms import ALGORITHMS, get_solver
from .baselines import DAMPING, PR_ITERS, PR_TOL
from .evaluation import evaluate, ground_truth, summarize
from .exact import NotDecomposableError
from .instance import (
    ParseError,
    connect,
    drop_missing_fair,
    parse_arcs,
    parse_instance,
    parse_solution,
    plant_fair,
    preprocess_graph,
    serialize_graph,
    serialize_instance,
    serialize_solution,
    validate,
)
from .oracle import DEFAULT_CAP, CapExceededError, parse_maxcrs, reduce_to_mindir, solve_bruteforce

EXIT_OK, EXIT_INPUT, EXIT_NOT_DECOMPOSABLE, EXIT_CAP = 0, 2, 3, 4


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load(args):
    inst = parse_instance(_read(args.instance))
    inst = connect(inst, getattr(args, "connect", "none"))
    if getattr(args, "drop_missing_fair", False):
        inst, kept, _ = drop_missing_fair(inst)
        _log(f"kept sets {' '.join(str(i + 1) for i in kept)} (renumbered 1..{len(kept)})")
    return inst


def cmd_validate(args) -> int:
    inst = _load(args)
    sys.stdout.write(validate(inst).format())
    if args.out:
        Path(args.out).write_text(serialize_instance(inst), encoding="utf-8")
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = _load(args)
    solver = get_solver(
        args.alg, seed=args.seed, cap=args.cap,
        damping=args.damping, pr_tol=args.pr_tol, pr_iters=args.pr_iters,
    )
    sol = solver(inst)
    _emit(serialize_solution(sol), args.out)
    _log(f"{args.alg}: cost {sol.cost:g}")
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        if args.kind == "decomposable":
            inst = generate.random_decomposable(
                args.seed, args.n, args.k, args.set_size,
                weighted=args.weighted, anchors=args.anchors,
            )
        else:
            inst = generate.random_general(
                args.seed, args.n, args.k, args.set_size,
                overlap=args.overlap, weighted=args.weighted,
            )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.plant_fair:
        inst = plant_fair(inst, solve_bruteforce(inst, cap=args.cap).choices)
    _emit(serialize_instance(inst), args.out)
    return EXIT_OK


def cmd_eval(args) -> int:
    inst = _load(args)
    names = args.name or [Path(p).stem for p in args.solutions]
    if len(names) != len(args.solutions):
        raise InputError("give one --name per solution file")
    if len(set(names)) != len(names):
        raise InputError("solution names must be distinct")
    sols = {}
    for name, path in zip(names, args.solutions):
        sol = parse_solution(_read(path))
        if len(sol.choices) != inst.k:
            raise InputError(f"{path}: {len(sol.choices)} choices for {inst.k} sets")
        for i, x in enumerate(sol.choices):
            if x not in inst.sets[i]:
                raise InputError(f"{path}: vertex {x} is not a candidate of set {i + 1}")
        sols[name] = sol
    if args.ground_truth:
        truth = ground_truth(inst)
        if truth is None:
            _log("no complete fair sets; ground truth skipped")
        else:
            sols["ground-truth"] = truth
    report = evaluate(inst, sols, args.id or Path(args.instance).stem)
    summary = summarize([report])
    _emit(summary.to_csv(), args.out)
    if args.text:
        Path(args.text).write_text(summary.to_text(), encoding="utf-8")
    else:
        sys.stderr.write(summary.to_text())
    return EXIT_OK


def cmd_preprocess(args) -> int:
    try:
        g, ids = preprocess_graph(parse_arcs(_read(args.arcs)))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise InputError(str(exc)) from None
    _emit(serialize_graph(g), args.out)
    mapping = "".join(f"{new} {old}\n" for new, old in enumerate(ids))
    if args.map:
        Path(args.map).write_text(mapping, encoding="utf-8")
    _log(f"kept {g.n} vertices, {g.m} edges")
    return EXIT_OK


def cmd_reduce(args) -> int:
    mc = parse_maxcrs(_read(args.maxcrs))
    try:
        inst = reduce_to_mindir(mc)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(serialize_instance(inst), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mindr", description="Minimum distance representative solvers.")
    sub = p.add_subparsers(dest="command", required=True)

    def instance_opts(sp):
        sp.add_argument("instance")
        sp.add_argument("--connect", choices=("none", "maximal", "minimal"), default="none")
        sp.add_argument("--drop-missing-fair", action="store_true",
                        help="restrict to the largest component, dropping sets whose fair subset lies outside it")

    sp = sub.add_parser("validate", help="report decomposability conditions")
    instance_opts(sp)
    sp.add_argument("--out", help="write the (transformed) instance here")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("solve", help="solve an instance")
    instance_opts(sp)
    sp.add_argument("--alg", required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--damping", type=float, default=DAMPING)
    sp.add_argument("--pr-tol", type=float, default=PR_TOL)
    sp.add_argument("--pr-iters", type=int, default=PR_ITERS)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("gen", help="generate a synthetic instance")
    sp.add_argument("--kind", choices=("decomposable", "general"), default="decomposable")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--set-size", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--overlap", type=float, default=0.0)
    sp.add_argument("--weighted", action="store_true")
    sp.add_argument("--anchors", type=int, default=0)
    sp.add_argument("--plant-fair", action="store_true", help="mark the brute-force optimum as fair")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("eval", help="compare solution files on one instance")
    instance_opts(sp)
    sp.add_argument("solutions", nargs="+")
    sp.add_argument("--name", action="append", help="algorithm name per solution (default: file stem)")
    sp.add_argument("--id", help="instance id for the report (default: file stem)")
    sp.add_argument("--no-ground-truth", dest="ground_truth", action="store_false")
    sp.add_argument("--out", help="CSV report path (default: stdout)")
    sp.add_argument("--text", help="text summary path (default: stderr)")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("preprocess", help="symmetrize an arc list and keep its largest component")
    sp.add_argument("arcs")
    sp.add_argument("--out")
    sp.add_argument("--map", help="write '<new> <original>' id lines here")
    sp.set_defaults(func=cmd_preprocess)

    sp = sub.add_parser("reduce", help="MaxCRS file -> equivalent MinDR instance")
    sp.add_argument("maxcrs")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_reduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "alg", None) is not None and args.alg not in ALGORITHMS:
        _log(f"error: unknown algorithm {args.alg!r}; choose from {', '.join(ALGORITHMS)}")
        return EXIT_INPUT
    try:
        return args.func(args)
    except NotDecomposableError as exc:
        _log(f"error: not decomposable: {exc}")
        return EXIT_NOT_DECOMPOSABLE
    except CapExceededError as exc:
        _log(f"error: {exc}")
        return EXIT_CAP
    except (InputError, ParseError) as exc:
        _log(f"error: {exc}")
        return EXIT_INPUT
    except ValueError as exc:
        _log(f"error: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
