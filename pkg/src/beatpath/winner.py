"""Quickselect for the Schulze winner, all maximal candidates, and tiebreaking.

Randomness comes from numpy's PCG64 generator seeded with a 64-bit integer,
so a fixed (graph, seed) pair always picks the same pivots.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import (
    INT64_MAX,
    INT64_MIN,
    CandidateSet,
    ElectionResult,
    MarginMatrix,
    ModelError,
    WeightedDigraph,
)
from .paths import pivot_partition

SEED_MASK = 2**64 - 1


def make_rng(seed: int) -> np.random.Generator:
    if not 0 <= seed <= SEED_MASK:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def derive_seed(seed: int, *path: int) -> int:
    """Independent child seed for sub-computation ``path`` of ``seed``."""
    ss = np.random.SeedSequence([seed, *path])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def quickselect_winner(g: WeightedDigraph, seed: int = 0,
                       initial: Iterable[int] | None = None,
                       trace: list | None = None) -> ElectionResult:
    """A maximal element of the Schulze order restricted to ``initial``.

    Each round draws a uniform pivot from the survivors and keeps only the
    candidates that beat it; the survivor is then checked against the whole
    initial set to decide whether it is the only maximal element there.
    When ``trace`` is a list, the surviving set after each round is appended.
    """
    pool = sorted(set(range(g.m) if initial is None else (int(v) for v in initial)))
    if not pool:
        raise ModelError("the initial candidate set is empty")
    rng = make_rng(seed)
    survivors = pool
    iterations = 0
    while len(survivors) > 1:
        p = survivors[int(rng.integers(len(survivors)))]
        part = pivot_partition(g, p, survivors)
        nxt = sorted(part.high) if part.high else [p]
        assert len(nxt) < len(survivors)
        survivors = nxt
        iterations += 1
        if trace is not None:
            trace.append(tuple(survivors))
    (p,) = survivors
    final = pivot_partition(g, p, pool)
    assert not final.high, "survivor of quickselect is beaten by a candidate"
    return ElectionResult(
        winner=p,
        is_unique=final.incomparable == {p},
        iterations=iterations,
        seed=seed,
        candidates=g.candidates,
    )


@dataclass(frozen=True)
class MaximalSet:
    """Schulze-maximal candidates in the order they were found."""

    members: tuple[int, ...]
    rounds: tuple[int, ...]
    candidates: CandidateSet

    @property
    def names(self) -> list[str]:
        return [self.candidates.names[v] for v in self.members]


def all_maximal(g: WeightedDigraph, seed: int = 0) -> MaximalSet:
    """Every maximal element of the Schulze order.

    Repeatedly finds a maximal element of the remaining pool, then drops it
    together with everything it beats.
    """
    remaining = set(range(g.m))
    members, rounds = [], []
    while remaining:
        found = quickselect_winner(g, derive_seed(seed, len(members)), remaining)
        p = found.winner
        members.append(p)
        rounds.append(found.iterations)
        part = pivot_partition(g, p, remaining)
        assert not part.high
        remaining = set(part.incomparable) - {p}
    return MaximalSet(tuple(members), tuple(rounds), g.candidates)


class PerturbationOverflow(OverflowError):
    pass


def perturb(margins: WeightedDigraph, seed: int = 0) -> WeightedDigraph:
    """Break every tie with a random, order-preserving perturbation.

    Edges are put in a random order; the edge at 1-based position i gets
    weight ``w * m**2 + i``. This is the integer form of adding ``i / m**2``:
    scaling by m**2 keeps every strict beatpath comparison, and the added
    ranks make all weights distinct.
    """
    m = margins.m
    scale = m * m
    w = margins.w
    off = ~np.eye(m, dtype=bool)
    if m > 1:
        extreme = max(int(w[off].max()), -int(w[off].min()))
        if extreme * scale + scale > INT64_MAX or -extreme * scale < INT64_MIN:
            raise PerturbationOverflow(
                f"margin magnitude {extreme} times {scale} does not fit in 64 bits"
            )
    rng = make_rng(seed)
    n_edges = m * (m - 1)
    ranks = rng.permutation(n_edges).astype(np.int64) + 1
    out = w * scale
    out[off] += ranks
    return WeightedDigraph(margins.candidates, out)


def schulze_winner(margins: MarginMatrix, seed: int = 0, tiebreak: bool = False) -> ElectionResult:
    """Convenience wrapper: quickselect, optionally on a perturbed copy."""
    g = perturb(margins, seed) if tiebreak else margins
    return quickselect_winner(g, seed)
