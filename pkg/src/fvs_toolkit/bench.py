"""Benchmark harness: generated instances x seeds x algorithms -> CSV.

The sweep is described by a flat key-value config file::

    problem = fvs            # fvs | sfvs
    profile = desk           # desk | paper
    algorithms = find,baseline
    count = 6                # instances; n cycles through [n_min, n_max]
    n_min = 5
    n_max = 10
    alpha = 1
    cross_p = 0.5
    digons = 0
    weight_max = 3
    terminal_fraction = 0.5  # sfvs only
    seeds = 2                # runs per instance per randomized algorithm
    base_seed = 0
    oracle = 1               # record the exact optimum per instance
    oracle_limit = 15
    out = results.csv

Rows come out in (instance, seed, algorithm) order and rerunning the same
config reproduces the identical CSV except for the wall-time column.  Any
infeasible solution aborts the sweep.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .config import AlgoConfig, desk_profile, paper_profile
from .exact import exact_fvs, exact_sfvs
from .fvs import find_fvs, local_ratio_fvs_baseline
from .generators import GenSpec, gen_instance
from .graphs import ExactLimitError, WeightedDigraph
from .rng import derive_seed
from .sfvs import SfvsInstance, find_sfvs, local_ratio_sfvs_baseline
from .solution import Solution

THREADS_ENV = "FVS_TOOLKIT_THREADS"

CSV_COLUMNS = [
    "instance", "n", "alpha", "s", "algorithm", "profile", "seed",
    "weight", "opt", "ratio", "valid", "time_us",
]


class BenchConfigError(ValueError):
    """Malformed benchmark config."""


class InvalidSolutionError(RuntimeError):
    """A solver returned an infeasible solution; the sweep must stop."""


@dataclass(frozen=True)
class ExperimentRow:
    instance: str
    n: int
    alpha: int
    s: int
    algorithm: str
    profile: str
    seed: int | None
    weight: int
    opt: int | None
    ratio: float | None
    valid: bool
    time_us: int


_DEFAULTS = {
    "problem": None,
    "profile": "desk",
    "algorithms": "find,baseline",
    "count": "5",
    "n_min": "5",
    "n_max": "10",
    "alpha": "1",
    "cross_p": "0.5",
    "digons": "0",
    "weight_max": "3",
    "terminal_fraction": "0.5",
    "seeds": "1",
    "base_seed": "0",
    "oracle": "1",
    "oracle_limit": "15",
    "out": "",
}


@dataclass(frozen=True)
class BenchConfig:
    problem: str
    profile: str
    algorithms: tuple[str, ...]
    count: int
    n_min: int
    n_max: int
    alpha: int
    cross_p: float
    digons: bool
    weight_max: int
    terminal_fraction: float
    seeds: int
    base_seed: int
    oracle: bool
    oracle_limit: int
    out: str


def parse_bench_config(text: str) -> BenchConfig:
    raw = dict(_DEFAULTS)
    for line_no, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise BenchConfigError(f"line {line_no}: expected 'key = value'")
        key, value = (part.strip() for part in body.split("=", 1))
        if key not in raw:
            raise BenchConfigError(f"line {line_no}: unknown key {key!r}")
        raw[key] = value
    if raw["problem"] not in ("fvs", "sfvs"):
        raise BenchConfigError("problem must be 'fvs' or 'sfvs'")
    if raw["profile"] not in ("desk", "paper"):
        raise BenchConfigError("profile must be 'desk' or 'paper'")
    algorithms = tuple(a.strip() for a in raw["algorithms"].split(",") if a.strip())
    bad = [a for a in algorithms if a not in ("find", "baseline")]
    if bad or not algorithms:
        raise BenchConfigError("algorithms must list 'find' and/or 'baseline'")
    try:
        cfg = BenchConfig(
            problem=raw["problem"],
            profile=raw["profile"],
            algorithms=algorithms,
            count=int(raw["count"]),
            n_min=int(raw["n_min"]),
            n_max=int(raw["n_max"]),
            alpha=int(raw["alpha"]),
            cross_p=float(raw["cross_p"]),
            digons=bool(int(raw["digons"])),
            weight_max=int(raw["weight_max"]),
            terminal_fraction=float(raw["terminal_fraction"]),
            seeds=int(raw["seeds"]),
            base_seed=int(raw["base_seed"]),
            oracle=bool(int(raw["oracle"])),
            oracle_limit=int(raw["oracle_limit"]),
            out=raw["out"],
        )
    except ValueError as exc:
        raise BenchConfigError(f"bad value: {exc}") from None
    if cfg.count < 1 or cfg.seeds < 1:
        raise BenchConfigError("count and seeds must be at least 1")
    if not 1 <= cfg.n_min <= cfg.n_max:
        raise BenchConfigError("need 1 <= n_min <= n_max")
    if cfg.alpha < 1:
        raise BenchConfigError("alpha must be at least 1")
    return cfg


def load_bench_config(path: str) -> BenchConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_bench_config(fh.read())


def _algo_config(cfg: BenchConfig, alpha: int) -> AlgoConfig:
    return desk_profile(alpha) if cfg.profile == "desk" else paper_profile(alpha)


def _instances(cfg: BenchConfig):
    span = cfg.n_max - cfg.n_min + 1
    for i in range(cfg.count):
        spec = GenSpec(
            n=cfg.n_min + i % span,
            alpha=cfg.alpha if cfg.problem == "fvs" else 1,
            cross_arc_prob=cfg.cross_p,
            digon_allowed=cfg.digons,
            weight_max=cfg.weight_max,
            terminal_fraction=cfg.terminal_fraction if cfg.problem == "sfvs" else 0.0,
            seed=derive_seed(cfg.base_seed, 1000 + i),
        )
        g, terminals = gen_instance(spec)
        yield f"{cfg.problem}-{i:03d}", g, terminals


def _run_one(
    cfg: BenchConfig,
    name: str,
    g: WeightedDigraph,
    terminals: frozenset[int],
    algo: str,
    seed: int | None,
    opt: int | None,
) -> ExperimentRow:
    acfg = _algo_config(cfg, cfg.alpha if cfg.problem == "fvs" else 1)
    start = time.perf_counter_ns()
    sol: Solution
    if cfg.problem == "fvs":
        if algo == "find":
            sol = find_fvs(g, cfg.alpha, acfg, seed)
        else:
            sol = local_ratio_fvs_baseline(g)
    else:
        inst = SfvsInstance(g, terminals)
        sol = find_sfvs(inst, acfg, seed) if algo == "find" else local_ratio_sfvs_baseline(inst)
    elapsed_us = (time.perf_counter_ns() - start) // 1000
    if not sol.valid:
        raise InvalidSolutionError(
            f"{sol.algorithm} returned an infeasible solution on {name} (seed {seed})")
    ratio = (sol.weight / opt) if opt else None
    return ExperimentRow(
        instance=name,
        n=g.n,
        alpha=cfg.alpha if cfg.problem == "fvs" else 1,
        s=len(terminals) if cfg.problem == "sfvs" else 0,
        algorithm=sol.algorithm,
        profile=cfg.profile,
        seed=sol.seed,
        weight=sol.weight,
        opt=opt,
        ratio=ratio,
        valid=sol.valid,
        time_us=elapsed_us,
    )


def run_bench(cfg: BenchConfig) -> list[ExperimentRow]:
    tasks = []
    for i, (name, g, terminals) in enumerate(_instances(cfg)):
        opt = None
        if cfg.oracle:
            if g.n > cfg.oracle_limit:
                raise ExactLimitError(
                    f"instance {name} has n={g.n} > oracle_limit={cfg.oracle_limit}")
            if cfg.problem == "fvs":
                opt = exact_fvs(g, cfg.oracle_limit).weight
            else:
                opt = exact_sfvs(SfvsInstance(g, terminals), cfg.oracle_limit).weight
        for j in range(cfg.seeds):
            seed = derive_seed(cfg.base_seed, i, j)
            for algo in cfg.algorithms:
                run_seed = seed if algo == "find" else None
                tasks.append((cfg, name, g, terminals, algo, run_seed, opt))
    workers = max(1, int(os.environ.get(THREADS_ENV, "1")))
    if workers == 1:
        return [_run_one(*task) for task in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda t: _run_one(*t), tasks))


def format_csv(rows: list[ExperimentRow]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for r in rows:
        lines.append(",".join([
            r.instance,
            str(r.n),
            str(r.alpha),
            str(r.s),
            r.algorithm,
            r.profile,
            "" if r.seed is None else str(r.seed),
            str(r.weight),
            "" if r.opt is None else str(r.opt),
            "" if r.ratio is None else f"{r.ratio:.6f}",
            "1" if r.valid else "0",
            str(r.time_us),
        ]))
    return "\n".join(lines) + "\n"


def write_csv(rows: list[ExperimentRow], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_csv(rows))
