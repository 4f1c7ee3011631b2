"""
Running a benchmark sweep in-process
====================================

"""

# A benchmark is described by a small key = value config: which problem,
# how many instances, the size range, and how many seeds per instance.
from fvs_toolkit import format_csv, parse_bench_config, run_bench

cfg = parse_bench_config("""
problem = fvs
count = 6
n_min = 6
n_max = 11
alpha = 2
weight_max = 5
seeds = 2
base_seed = 17
""")

# Each row is one (instance, seed, algorithm) combination; the exact
# optimum is attached whenever the instance is small enough to solve, so
# ratios come for free.  The same config and base seed always reproduce
# the same rows (only the wall-time column varies).
rows = run_bench(cfg)
print(f"{len(rows)} rows")
for line in format_csv(rows).splitlines()[:9]:
    print(line)

# A quick aggregate: mean ratio per algorithm over the sweep.
by_alg = {}
for r in rows:
    if r.ratio is not None:
        by_alg.setdefault(r.algorithm, []).append(r.ratio)
for alg, ratios in sorted(by_alg.items()):
    print(f"{alg}: mean ratio {sum(ratios) / len(ratios):.3f} "
          f"over {len(ratios)} runs")
