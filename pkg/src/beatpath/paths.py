"""Dense single-source / single-destination maxmin paths and pivot partitions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import (
    POS_INF,
    BeatpathValue,
    CandidateSet,
    IntMatrix,
    ModelError,
    PivotPartition,
    WeightedDigraph,
)


class Direction(enum.Enum):
    FROM_SOURCE = "from_source"
    TO_DESTINATION = "to_destination"


@dataclass(frozen=True, eq=False)
class PriorityVector:
    """Beatpath strengths between an anchor vertex and every vertex.

    ``values[anchor]`` is unused (stored as 0); the anchor's strength is
    always +inf.
    ``order`` lists vertices in extraction order and ``bottlenecks`` the
    priority each one had when extracted (finite entries only).
    """

    candidates: CandidateSet
    values: np.ndarray
    direction: Direction
    anchor: int
    order: tuple[int, ...] = ()
    bottlenecks: tuple[int, ...] = ()

    def __getitem__(self, v: int) -> BeatpathValue:
        if v == self.anchor:
            return POS_INF
        return BeatpathValue.finite(int(self.values[v]))

    def __len__(self) -> int:
        return self.candidates.m

    def as_list(self) -> list[BeatpathValue]:
        return [self[v] for v in range(len(self))]


def _scan_maxmin(w: IntMatrix, anchor: int) -> tuple[np.ndarray, list[int], list[int]]:
    m = w.shape[0]
    # Extracting the anchor (priority +inf) sets every other priority to
    # min(+inf, w[anchor, v]) = w[anchor, v]; start from that state.
    prio = w[anchor].copy()
    # U is a swap-remove list: unprocessed[:n] with their priorities in live[:n].
    # Ties go to the earliest position in U.
    unprocessed = np.delete(np.arange(m), anchor)
    live = prio[unprocessed]
    n = m - 1
    order = [anchor]
    betas = []
    while n:
        k = int(np.argmax(live[:n]))
        u = int(unprocessed[k])
        beta = live[k]
        prio[u] = beta
        order.append(u)
        betas.append(int(beta))
        n -= 1
        unprocessed[k] = unprocessed[n]
        live[k] = live[n]
        if n:
            reach = w[u, unprocessed[:n]]
            np.minimum(reach, beta, out=reach)
            np.maximum(live[:n], reach, out=live[:n])
    prio[anchor] = 0
    prio.setflags(write=False)
    return prio, order, betas


def single_source_maxmin(g: WeightedDigraph, source: int) -> PriorityVector:
    """``B(source, v)`` for every v, by a Dijkstra scan with no heap."""
    _check_vertex(g, source)
    values, order, betas = _scan_maxmin(g.w, source)
    return PriorityVector(g.candidates, values, Direction.FROM_SOURCE, source, tuple(order), tuple(betas))


def single_destination_maxmin(g: WeightedDigraph, destination: int) -> PriorityVector:
    """``B(v, destination)`` for every v: the same scan on reversed edges."""
    _check_vertex(g, destination)
    values, order, betas = _scan_maxmin(g.wt, destination)
    return PriorityVector(
        g.candidates, values, Direction.TO_DESTINATION, destination, tuple(order), tuple(betas)
    )


def pivot_partition(g: WeightedDigraph, p: int, s: Iterable[int]) -> PivotPartition:
    """Split ``s`` into the candidates below, incomparable to and above ``p``.

    Both path computations run on the whole graph. Restricting them to the
    subgraph induced by ``s`` gives wrong answers.
    """
    members = np.fromiter(sorted(set(int(v) for v in s)), dtype=np.int64)
    if p not in members:
        raise ModelError(f"pivot {p} is not in the queried set")
    if members.size and (members[0] < 0 or members[-1] >= g.m):
        raise ModelError("queried set references an unknown candidate")
    from_p = single_source_maxmin(g, p).values
    to_p = single_destination_maxmin(g, p).values
    others = members[members != p]
    b_vp = to_p[others]
    b_pv = from_p[others]
    low = others[b_vp < b_pv]
    high = others[b_vp > b_pv]
    inc = others[b_vp == b_pv]
    return PivotPartition(
        pivot=p,
        low=frozenset(low.tolist()),
        incomparable=frozenset(inc.tolist()) | {p},
        high=frozenset(high.tolist()),
    )


def _check_vertex(g: WeightedDigraph, v: int) -> None:
    if not 0 <= v < g.m:
        raise ModelError(f"vertex {v} out of range for {g.m} candidates")
