"""Command line front end.

Subcommands:
    gen         write generated instance files
    solve-fvs   randomized feedback vertex set solver
    solve-sfvs  randomized subset feedback vertex set solver (tournaments)
    baseline    local-ratio baseline for either problem
    exact       brute-force optimum for either problem
    bench       run a benchmark sweep from a config file
    validate    check a solution JSON against an instance file

Exit codes: 0 ok, 1 infeasible solution, 2 malformed input or config,
3 instance exceeds the exact solver limit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .bench import BenchConfigError, InvalidSolutionError, format_csv, load_bench_config, run_bench
from .config import AlgoConfig, desk_profile, paper_profile
from .exact import EXACT_LIMIT_DEFAULT, exact_fvs, exact_sfvs
from .fvs import find_fvs, local_ratio_fvs_baseline
from .generators import GenSpec, gen_instance
from .graphio import (
    GraphFormatError,
    dump_graph,
    genspec_comment,
    genspec_from_text,
    parse_graph,
)
from .graphs import ExactLimitError, WeightedDigraph, is_acyclic, s_acyclic
from .sfvs import SfvsInstance, find_sfvs, local_ratio_sfvs_baseline
from .solution import Solution


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="fvs-toolkit", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate instance files")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--alpha", type=int, default=1)
    gen.add_argument("--cross-p", type=float, default=0.5)
    gen.add_argument("--digons", action="store_true")
    gen.add_argument("--weight-max", type=int, default=3)
    gen.add_argument("--terminal-fraction", type=float, default=0.0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--out", required=True, help="output directory")

    for name in ("solve-fvs", "solve-sfvs"):
        p = sub.add_parser(name, help=f"run the randomized {name.split('-')[1]} solver")
        p.add_argument("instance")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--profile", choices=("desk", "paper"), default="desk")
        p.add_argument("--reps", type=int, help="override the trial count per level")
        p.add_argument("--base-case-n", type=int,
                       help="override the exhaustive base-case size")
        if name == "solve-fvs":
            p.add_argument("--alpha", type=int,
                           help="independence bound (default: genspec header, else 1)")
        else:
            p.add_argument("--subset-cap", type=int,
                           help="override the max enumerated terminal subset size")
        p.add_argument("--out", help="write the solution JSON here instead of stdout")

    base = sub.add_parser("baseline", help="local-ratio baseline")
    base.add_argument("instance")
    base.add_argument("--problem", choices=("auto", "fvs", "sfvs"), default="auto")
    base.add_argument("--out")

    ex = sub.add_parser("exact", help="brute-force optimum")
    ex.add_argument("instance")
    ex.add_argument("--problem", choices=("auto", "fvs", "sfvs"), default="auto")
    ex.add_argument("--oracle-limit", type=int, default=EXACT_LIMIT_DEFAULT)
    ex.add_argument("--out")

    bench = sub.add_parser("bench", help="run a benchmark sweep")
    bench.add_argument("config")
    bench.add_argument("--out", help="override the CSV path from the config")

    val = sub.add_parser("validate", help="check a solution JSON against an instance")
    val.add_argument("instance")
    val.add_argument("solution")
    val.add_argument("--problem", choices=("auto", "fvs", "sfvs"), default="auto")
    return top


def _load_instance(path: str) -> tuple[WeightedDigraph, frozenset[int] | None, str]:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    g, terminals = parse_graph(text)
    return g, terminals, text


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _solution_payload(sol: Solution, profile: str | None) -> dict:
    return {
        "vertices": sol.sorted_vertices(),
        "weight": sol.weight,
        "algorithm": sol.algorithm,
        "seed": sol.seed,
        "profile": profile,
    }


def _require_valid(sol: Solution) -> None:
    if not sol.valid:
        raise InvalidSolutionError(f"{sol.algorithm} produced an infeasible solution")


def _pick_problem(flag: str, terminals: frozenset[int] | None) -> str:
    if flag != "auto":
        return flag
    return "sfvs" if terminals is not None else "fvs"


def _cmd_gen(args) -> int:
    os.makedirs(args.out, exist_ok=True)
    for i in range(args.count):
        spec = GenSpec(
            n=args.n,
            alpha=args.alpha,
            cross_arc_prob=args.cross_p,
            digon_allowed=args.digons,
            weight_max=args.weight_max,
            terminal_fraction=args.terminal_fraction,
            seed=args.seed + i,
        )
        g, terminals = gen_instance(spec)
        terms = terminals if args.terminal_fraction > 0 else None
        path = os.path.join(args.out, f"inst_{i:03d}.graph")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dump_graph(g, terms, comments=(genspec_comment(spec),)))
        print(path)
    return 0


def _fvs_config(args, alpha: int, terminal_variant: bool = False) -> AlgoConfig:
    cfg = desk_profile(alpha) if args.profile == "desk" else paper_profile(alpha)
    updates = {}
    if args.reps is not None:
        updates["repetitions"] = args.reps
    if args.base_case_n is not None:
        # the terminal solver's exhaustive base case is keyed on |S|, not n
        updates["sfvs_base_s" if terminal_variant else "base_case_n"] = args.base_case_n
    if getattr(args, "subset_cap", None) is not None:
        updates["sfvs_subset_cap"] = args.subset_cap
    if updates:
        from dataclasses import replace
        cfg = replace(cfg, **updates)
    return cfg


def _cmd_solve_fvs(args) -> int:
    g, _, text = _load_instance(args.instance)
    alpha = args.alpha
    if alpha is None:
        spec = genspec_from_text(text)
        alpha = spec.alpha if spec is not None else 1
    cfg = _fvs_config(args, alpha)
    sol = find_fvs(g, alpha, cfg, args.seed)
    _require_valid(sol)
    _emit(_solution_payload(sol, args.profile), args.out)
    return 0


def _cmd_solve_sfvs(args) -> int:
    g, terminals, _ = _load_instance(args.instance)
    if terminals is None:
        raise GraphFormatError(0, "instance has no terminal line (S ...)")
    cfg = _fvs_config(args, 1, terminal_variant=True)
    sol = find_sfvs(SfvsInstance(g, terminals), cfg, args.seed)
    _require_valid(sol)
    _emit(_solution_payload(sol, args.profile), args.out)
    return 0


def _cmd_baseline(args) -> int:
    g, terminals, _ = _load_instance(args.instance)
    problem = _pick_problem(args.problem, terminals)
    if problem == "sfvs":
        if terminals is None:
            raise GraphFormatError(0, "instance has no terminal line (S ...)")
        sol = local_ratio_sfvs_baseline(SfvsInstance(g, terminals))
    else:
        sol = local_ratio_fvs_baseline(g)
    _require_valid(sol)
    _emit(_solution_payload(sol, None), args.out)
    return 0


def _cmd_exact(args) -> int:
    g, terminals, _ = _load_instance(args.instance)
    problem = _pick_problem(args.problem, terminals)
    if problem == "sfvs":
        if terminals is None:
            raise GraphFormatError(0, "instance has no terminal line (S ...)")
        sol = exact_sfvs(SfvsInstance(g, terminals), args.oracle_limit)
    else:
        sol = exact_fvs(g, args.oracle_limit)
    _require_valid(sol)
    _emit(_solution_payload(sol, None), args.out)
    return 0


def _cmd_bench(args) -> int:
    cfg = load_bench_config(args.config)
    rows = run_bench(cfg)
    out = args.out or cfg.out
    csv_text = format_csv(rows)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
        print(f"wrote {len(rows)} rows to {out}")
    else:
        sys.stdout.write(csv_text)
    return 0


def _cmd_validate(args) -> int:
    g, terminals, _ = _load_instance(args.instance)
    with open(args.solution, encoding="utf-8") as fh:
        payload = json.load(fh)
    if not isinstance(payload, dict) or "vertices" not in payload:
        raise ValueError("solution JSON must be an object with a 'vertices' list")
    vertices = payload["vertices"]
    if (not isinstance(vertices, list)
            or any(not isinstance(v, int) or isinstance(v, bool) for v in vertices)):
        raise ValueError("'vertices' must be a list of integers")
    if len(set(vertices)) != len(vertices):
        print("invalid: duplicate vertices")
        return 1
    if any(not 0 <= v < g.n for v in vertices):
        print("invalid: vertex out of range")
        return 1
    chosen = frozenset(vertices)
    weight = sum(g.weights[v] for v in chosen)
    if "weight" in payload and payload["weight"] != weight:
        print(f"invalid: stated weight {payload['weight']} != recomputed {weight}")
        return 1
    algorithm = payload.get("algorithm", "")
    problem = args.problem
    if problem == "auto" and isinstance(algorithm, str) and algorithm:
        problem = "sfvs" if "sfvs" in algorithm else "fvs"
    problem = _pick_problem(problem, terminals)
    rest = g.without(chosen)
    if problem == "sfvs":
        if terminals is None:
            raise GraphFormatError(0, "instance has no terminal line (S ...)")
        # without() relabels, so map the surviving terminals to the new ids
        left = frozenset(i for i, p in enumerate(rest.parent_ids) if p in terminals)
        feasible = s_acyclic(rest, left)
    else:
        feasible = is_acyclic(rest)
    if not feasible:
        print("invalid: leftover graph still has a forbidden cycle")
        return 1
    print(f"valid: weight {weight}, {len(chosen)} vertices")
    return 0


_HANDLERS = {
    "gen": _cmd_gen,
    "solve-fvs": _cmd_solve_fvs,
    "solve-sfvs": _cmd_solve_sfvs,
    "baseline": _cmd_baseline,
    "exact": _cmd_exact,
    "bench": _cmd_bench,
    "validate": _cmd_validate,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ExactLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InvalidSolutionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GraphFormatError, BenchConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
