"""Timing harness comparing quickselect with the cubic all-pairs oracle."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from .core import WeightedDigraph
from .oracle import floyd_warshall_beatpaths, linear_order_margins, random_margins, schulze_order
from .winner import derive_seed, make_rng, quickselect_winner

ALGOS = ("quickselect", "oracle")
INSTANCES = ("linear", "random")


@dataclass
class Trial:
    m: int
    trial: int
    seconds: float
    iterations: int | None
    winner: int


def make_instance(kind: str, m: int, seed: int, trial: int, max_weight: int = 100) -> WeightedDigraph:
    if kind == "linear":
        return linear_order_margins(m)
    if kind == "random":
        return random_margins(m, max_weight, make_rng(derive_seed(seed, m, trial, 0)))
    raise ValueError(f"unknown instance kind {kind!r}")


def run_trial(g: WeightedDigraph, algo: str, seed: int, trial: int) -> Trial:
    start = time.perf_counter()
    if algo == "quickselect":
        res = quickselect_winner(g, derive_seed(seed, g.m, trial, 1))
        elapsed = time.perf_counter() - start
        return Trial(g.m, trial, elapsed, res.iterations, res.winner)
    if algo == "oracle":
        order = schulze_order(floyd_warshall_beatpaths(g))
        elapsed = time.perf_counter() - start
        return Trial(g.m, trial, elapsed, None, min(order.maximal()))
    raise ValueError(f"unknown algorithm {algo!r}")


def run_bench(ms: list[int], trials: int, seed: int = 0, algo: str = "quickselect",
              instance: str = "linear", max_weight: int = 100) -> list[Trial]:
    out = []
    for m in ms:
        if m < 2:
            raise ValueError("benchmark sizes must be at least 2")
        for t in range(trials):
            g = make_instance(instance, m, seed, t, max_weight)
            out.append(run_trial(g, algo, seed, t))
    return out


def summarize(results: list[Trial]) -> dict[int, dict[str, float | None]]:
    by_m: dict[int, list[Trial]] = {}
    for r in results:
        by_m.setdefault(r.m, []).append(r)
    summary = {}
    for m, rs in by_m.items():
        secs = [r.seconds for r in rs]
        iters = [r.iterations for r in rs if r.iterations is not None]
        summary[m] = {
            "mean_seconds": statistics.fmean(secs),
            "median_seconds": statistics.median(secs),
            "mean_iterations": statistics.fmean(iters) if iters else None,
            "median_iterations": statistics.median(iters) if iters else None,
        }
    return summary


def growth_ratios(ms: list[int], seconds: dict[int, float]) -> list[float]:
    """Time ratio between each consecutive pair of sizes."""
    return [seconds[b] / seconds[a] for a, b in zip(ms, ms[1:])]
