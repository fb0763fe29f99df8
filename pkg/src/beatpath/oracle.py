"""Slow reference computations and instance generators.

Everything here is cubic or worse and meant for cross-checking the fast
winner path, generating test instances, and benchmarking against.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import (
    BeatpathMatrix,
    CandidateSet,
    MarginMatrix,
    ModelError,
    PartialOrderSpec,
    WeightedDigraph,
    transitive_closure,
)


class OracleInconsistency(AssertionError):
    """The oracle produced something that cannot be a strict partial order."""


def floyd_warshall_beatpaths(g: WeightedDigraph) -> BeatpathMatrix:
    """All-pairs maxmin path strengths in Theta(m^3).

    For each intermediate z, ``b[x][y] = max(b[x][y], min(b[x][z], b[z][y]))``;
    the x and y loops are vectorized. The diagonal is never read through a
    relaxation that could change an off-diagonal entry, so it is simply
    reset to +inf at the end.
    """
    b = g.w.copy()
    via = np.empty_like(b)
    for z in range(g.m):
        np.minimum(b[:, z, None], b[None, z, :], out=via)
        np.maximum(b, via, out=b)
    np.fill_diagonal(b, 0)
    return BeatpathMatrix(g.candidates, b)


def brute_force_beatpaths(g: WeightedDigraph) -> BeatpathMatrix:
    """Beatpaths by enumerating bottleneck thresholds; for tiny graphs only.

    ``B(x, y)`` is the largest edge weight t such that y is reachable from x
    using only edges of weight >= t.
    """
    m = g.m
    b = np.zeros((m, m), dtype=np.int64)
    thresholds = sorted({int(v) for v in g.w[~np.eye(m, dtype=bool)]}, reverse=True)
    for x in range(m):
        for y in range(m):
            if x == y:
                continue
            for t in thresholds:
                if _reachable(g.w >= t, x, y):
                    b[x, y] = t
                    break
    return BeatpathMatrix(g.candidates, b)


def _reachable(adj: np.ndarray, x: int, y: int) -> bool:
    seen = {x}
    stack = [x]
    while stack:
        u = stack.pop()
        for v in np.flatnonzero(adj[u]):
            v = int(v)
            if v == y:
                return True
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def schulze_order(b: BeatpathMatrix) -> PartialOrderSpec:
    less = b.less_mask()
    relation = frozenset((int(x), int(y)) for x, y in np.argwhere(less))
    try:
        return PartialOrderSpec(b.candidates, relation)
    except ModelError as exc:
        raise OracleInconsistency(f"beatpath matrix does not induce a strict partial order: {exc}") from exc


def maximal_elements(order: PartialOrderSpec) -> set[int]:
    return order.maximal()


def oracle_maximal(g: WeightedDigraph) -> set[int]:
    """Shorthand for the maximal set of ``g``'s Schulze order."""
    return maximal_elements(schulze_order(floyd_warshall_beatpaths(g)))


def realize_partial_order(spec: PartialOrderSpec, top: int, bottom: int) -> MarginMatrix:
    """Antisymmetric weights whose Schulze order is exactly ``spec``.

    Four bands of distinct positive weights, each E = m(m-1)/2 wide:
    tiny in [1, E], small in (E, 2E], medium in (2E, 3E], large in (3E, 4E].

    * top -> x and x -> bottom get large weights,
    * x -> y gets a medium weight when y < x,
    * bottom -> top gets the single small weight,
    * incomparable x, y get a tiny weight on the lower-index -> higher-index edge,

    for x, y other than top and bottom; each reverse edge gets the negation.
    With only two candidates the bottom -> top rule would invert the order,
    so the lone edge top -> bottom gets the large weight instead.
    """
    m = spec.candidates.m
    if m < 2:
        raise ModelError("realization needs at least two candidates")
    if top == bottom:
        raise ModelError("top and bottom must differ")
    if spec.maximal() != {top}:
        raise ModelError(f"{spec.candidates.names[top]} is not the unique maximal element")
    if spec.minimal() != {bottom}:
        raise ModelError(f"{spec.candidates.names[bottom]} is not the unique minimal element")

    e = m * (m - 1) // 2
    pools = {name: iter(range(base * e + 1, (base + 1) * e + 1))
             for base, name in enumerate(("tiny", "small", "medium", "large"))}
    w = np.zeros((m, m), dtype=np.int64)

    def assign(x: int, y: int, pool: str) -> None:
        value = next(pools[pool])
        w[x, y] = value
        w[y, x] = -value

    if m == 2:
        assign(top, bottom, "large")
        return MarginMatrix(spec.candidates, w)

    middle = [v for v in range(m) if v not in (top, bottom)]
    for x in middle:
        assign(top, x, "large")
        assign(x, bottom, "large")
    for i, x in enumerate(middle):
        for y in middle[i + 1:]:
            if spec.less(y, x):
                assign(x, y, "medium")
            elif spec.less(x, y):
                assign(y, x, "medium")
            else:
                assign(x, y, "tiny")
    assign(bottom, top, "small")
    return MarginMatrix(spec.candidates, w)


@lru_cache(maxsize=None)
def _recurrence(m: int, base_one: int) -> Fraction:
    # iterative to avoid deep recursion; cache keyed on the target m
    values = [Fraction(0), Fraction(base_one)]
    total = values[0] + values[1]
    for k in range(2, m + 1):
        values.append(1 + total / k)
        total += values[-1]
    return values[m]


def expected_iterations(m: int) -> Fraction:
    """Exact expected loop rounds on a worst-case (linear order) input.

    ``R(m) = 1 + (1/m) * sum_{i=1..m} R(i-1)`` with ``R(0) = R(1) = 0``.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    return _recurrence(m, 0)


def harmonic_recurrence(m: int) -> Fraction:
    """The same recurrence started from ``rho(1) = 1``; equals H_m."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return _recurrence(m, 1)


def harmonic_number(m: int) -> Fraction:
    return sum((Fraction(1, i) for i in range(1, m + 1)), Fraction(0))


# instance generators ---------------------------------------------------------

def random_margins(m: int, max_weight: int, rng: np.random.Generator,
                   candidates: CandidateSet | None = None) -> MarginMatrix:
    """Uniform antisymmetric margins in ``[-max_weight, max_weight]``."""
    upper = np.triu(rng.integers(-max_weight, max_weight + 1, size=(m, m), dtype=np.int64), 1)
    return MarginMatrix(candidates or CandidateSet.letters(m), upper - upper.T)


def random_distinct_digraph(m: int, rng: np.random.Generator) -> WeightedDigraph:
    """Complete digraph whose m(m-1) off-diagonal weights are all distinct."""
    n_edges = m * (m - 1)
    values = rng.permutation(np.arange(-n_edges, n_edges + 1, dtype=np.int64))[:n_edges]
    w = np.zeros((m, m), dtype=np.int64)
    w[~np.eye(m, dtype=bool)] = values
    return WeightedDigraph(CandidateSet.letters(m), w)


def random_distinct_margins(m: int, rng: np.random.Generator) -> MarginMatrix:
    """Antisymmetric margins with distinct magnitudes on the pairs."""
    n_pairs = m * (m - 1) // 2
    mags = rng.permutation(np.arange(1, n_pairs + 1, dtype=np.int64))
    signs = rng.choice(np.array([-1, 1], dtype=np.int64), size=n_pairs)
    upper = np.zeros((m, m), dtype=np.int64)
    upper[np.triu_indices(m, 1)] = mags * signs
    return MarginMatrix(CandidateSet.letters(m), upper - upper.T)


def linear_order_margins(m: int, candidates: CandidateSet | None = None) -> MarginMatrix:
    """Margins of a single-ballot election ranking candidate 0 first."""
    w = np.ones((m, m), dtype=np.int64)
    w = np.triu(w, 1) - np.tril(w, -1)
    return MarginMatrix(candidates or CandidateSet.letters(m), w)


def random_bounded_order(m: int, rng: np.random.Generator, density: float = 0.3) -> tuple[PartialOrderSpec, int, int]:
    """Random partial order on ``m >= 3`` elements with a unique top and bottom.

    Random edges among the m - 2 middle elements (from lower to higher index
    in a shuffled labelling, so no cycles), closed transitively; then a fresh
    bottom below everything and a fresh top above everything.
    """
    if m < 3:
        raise ValueError("need m >= 3")
    labels = rng.permutation(m)
    bottom, top = int(labels[0]), int(labels[1])
    middle = [int(v) for v in labels[2:]]
    pairs = []
    for i, x in enumerate(middle):
        for y in middle[i + 1:]:
            if rng.random() < density:
                pairs.append((x, y))
    for x in middle:
        pairs.append((bottom, x))
        pairs.append((x, top))
    pairs.append((bottom, top))
    spec = PartialOrderSpec(CandidateSet.letters(m), transitive_closure(m, pairs))
    return spec, top, bottom
