"""
Quickselect rounds and running time
===================================

On a single-ballot election the Schulze order is a chain, the worst case
for the number of pivot rounds. The mean is compared with the exact
recurrence, then quickselect is timed against the cubic oracle.
"""

import statistics

from beatpath import bench, quickselect_winner
from beatpath.oracle import expected_iterations, harmonic_number, linear_order_margins

m = 256
g = linear_order_margins(m)
rounds = [quickselect_winner(g, seed).iterations for seed in range(300)]
print(f"m={m}: mean rounds {statistics.fmean(rounds):.3f}, "
      f"exact expectation {float(expected_iterations(m)):.3f}, H_m {float(harmonic_number(m)):.3f}")

sizes = [128, 256, 512]
for algo in ("quickselect", "oracle"):
    results = bench.run_bench(sizes, trials=3, seed=0, algo=algo, instance="random")
    summary = bench.summarize(results)
    secs = {k: v["median_seconds"] for k, v in summary.items()}
    ratios = ", ".join(f"{r:.1f}x" for r in bench.growth_ratios(sizes, secs))
    print(f"{algo:>11}: " + ", ".join(f"m={k} {v * 1000:.1f} ms" for k, v in secs.items())
          + f"  (growth per doubling: {ratios})")
