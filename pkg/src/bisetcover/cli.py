"""Command-line front end.

Exit codes: 0 optimal / feasible, 1 input or promise error, 2 infeasible,
3 exceeds_parameter.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .instances import (
    InstanceFile,
    InstanceFormatError,
    dumps_result,
    loads_instance,
    loads_result,
    random_enca,
    random_koca,
    solve_instance,
    verifier_for,
)
from .oracles import EncaOracle, KocaOracle, PromiseError, find_root_core
from .separability import build_separability_graph
from .solver import EXCEEDS_PARAMETER, INFEASIBLE, OPTIMAL, brute_force_min_cover
from .steiner import DEFAULT_Q_LIMIT, ParameterTooLarge

EXIT = {OPTIMAL: 0, INFEASIBLE: 2, EXCEEDS_PARAMETER: 3}


class CliError(Exception):
    pass


def _read_instance(path: str) -> InstanceFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    return loads_instance(text)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_solve(args) -> int:
    inst = _read_instance(args.inp)
    sol = solve_instance(inst, args.max_size, args.q_limit)
    _write(args.out, dumps_result(sol, timing=not args.no_timing))
    return EXIT[sol.status]


def cmd_verify(args) -> int:
    inst = _read_instance(args.inp)
    sol = loads_result(Path(args.solution).read_text(encoding="utf-8"))
    by_index = {e.index: e for e in inst.candidates}
    try:
        J = [by_index[i] for i in sol.edges]
    except KeyError as exc:
        raise CliError(f"solution names unknown candidate {exc}") from exc
    return 0 if verifier_for(inst)(J) else 2


def cmd_bruteforce(args) -> int:
    inst = _read_instance(args.inp)
    # the promise is checked so that both solvers see the same inputs
    inst.koca() if inst.problem == "koca" else inst.enca()
    p = args.max_size
    if p is None:
        p = inst.p if inst.p is not None else len(inst.candidates)
    try:
        sol = brute_force_min_cover(verifier_for(inst), inst.candidates, p)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _write(args.out, dumps_result(sol, timing=not args.no_timing))
    return EXIT[sol.status]


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    if args.problem == "koca":
        inst = random_koca(rng, args.n, args.k, args.edges)
    else:
        inst = random_enca(rng, args.n, args.k, args.edges)
    _write(args.out, inst.dumps())
    return 0


def cmd_export_dot(args) -> int:
    inst = _read_instance(args.inp)
    if inst.problem == "koca":
        oracle = KocaOracle(inst.koca())
    else:
        found = find_root_core(inst.enca())
        if found is None:
            raise CliError("base graph is already feasible; the family is empty")
        oracle = EncaOracle(inst.enca(), found[1])
    H = build_separability_graph(oracle, inst.candidates)
    _write(args.out, H.to_dot())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bisetcover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance exactly")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.add_argument("--max-size", type=int, dest="max_size")
    p.add_argument("--q-limit", type=int, default=DEFAULT_Q_LIMIT, dest="q_limit")
    p.add_argument("--threads", type=int, default=1, help="accepted; solves run single-threaded")
    p.add_argument("--no-timing", action="store_true", help="write millis as 0")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a result file against an instance")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--solution", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bruteforce", help="enumerate candidate subsets")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.add_argument("--max-size", type=int, dest="max_size")
    p.add_argument("--no-timing", action="store_true")
    p.set_defaults(func=cmd_bruteforce)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--problem", choices=["koca", "enca"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export-dot", help="write the separability graph as DOT")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PromiseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InstanceFormatError, CliError, ParameterTooLarge, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
