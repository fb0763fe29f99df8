"""Shared domain types: candidates, weighted graphs, beatpath values and orders.

Every type here is immutable once built. Candidates are addressed by dense
index; names only live in :class:`CandidateSet`.
"""

from __future__ import annotations

import enum
from functools import cached_property
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
import numpy.typing as npt

INT64_MIN = int(np.iinfo(np.int64).min)
INT64_MAX = int(np.iinfo(np.int64).max)

IntMatrix = npt.NDArray[np.int64]


class ModelError(ValueError):
    """Raised when a domain object would violate its invariants."""


@dataclass(frozen=True)
class CandidateSet:
    names: tuple[str, ...]

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ModelError("a candidate set needs at least one candidate")
        for name in names:
            if not isinstance(name, str) or not name:
                raise ModelError(f"invalid candidate name {name!r}")
        if len(set(names)) != len(names):
            dupes = sorted({n for n in names if names.count(n) > 1})
            raise ModelError(f"duplicate candidate names: {', '.join(dupes)}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @property
    def m(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ModelError(f"unknown candidate {name!r}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._index

    @classmethod
    def letters(cls, m: int) -> "CandidateSet":
        """Names ``A, B, ..., Z, C26, C27, ...`` for quick test instances."""
        alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
        return cls(alphabet[i] if i < 26 else f"C{i}" for i in range(m))


def _frozen_int_matrix(w, m: int) -> IntMatrix:
    arr = np.asarray(w)
    if arr.shape != (m, m):
        raise ModelError(f"weight matrix must be {m}x{m}, got shape {arr.shape}")
    if arr.dtype == object or not np.issubdtype(arr.dtype, np.integer):
        # python ints (possibly huge) or floats: check exactness and range by hand
        for value in arr.flat:
            if isinstance(value, (bool, np.bool_)) or int(value) != value:
                raise ModelError(f"weights must be integers, got {value!r}")
            if not INT64_MIN < int(value) <= INT64_MAX:
                raise OverflowError(f"weight {int(value)} outside the 64-bit range")
        arr = np.array([[int(v) for v in row] for row in arr], dtype=np.int64).reshape(m, m)
    else:
        arr = arr.astype(np.int64, copy=True)
    arr.setflags(write=False)
    return arr


class WeightedDigraph:
    """Complete directed graph with an integer weight on every ordered pair.

    The diagonal is zero and otherwise ignored. No antisymmetry is assumed.
    """

    def __init__(self, candidates: CandidateSet, w):
        self.candidates = candidates
        self.w: IntMatrix = _frozen_int_matrix(w, candidates.m)
        if np.any(np.diagonal(self.w) != 0):
            raise ModelError("diagonal weights must be zero")

    @property
    def m(self) -> int:
        return self.candidates.m

    def weight(self, x: int, y: int) -> int:
        return int(self.w[x, y])

    @cached_property
    def wt(self) -> IntMatrix:
        """Contiguous copy of the transposed weights (reversed edges)."""
        t = np.ascontiguousarray(self.w.T)
        t.setflags(write=False)
        return t

    def transposed(self) -> "WeightedDigraph":
        return WeightedDigraph(self.candidates, self.w.T)

    def induced(self, members: Sequence[int]) -> "WeightedDigraph":
        members = list(members)
        cands = CandidateSet(self.candidates.names[i] for i in members)
        return WeightedDigraph(cands, self.w[np.ix_(members, members)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedDigraph):
            return NotImplemented
        return self.candidates == other.candidates and np.array_equal(self.w, other.w)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.candidates.names)}, {self.w.tolist()})"


class MarginMatrix(WeightedDigraph):
    """Pairwise margins ``P(x, y) - P(y, x)``; antisymmetric, zero diagonal."""

    def __init__(self, candidates: CandidateSet, w):
        super().__init__(candidates, w)
        bad = np.argwhere(self.w != -self.w.T)
        if len(bad):
            x, y = bad[0]
            raise ModelError(
                f"margins are not antisymmetric: w[{candidates.names[x]}][{candidates.names[y]}]"
                f"={self.w[x, y]} but w[{candidates.names[y]}][{candidates.names[x]}]={self.w[y, x]}"
            )
        if np.any(self.w == INT64_MIN):
            raise OverflowError("margin -2**63 has no 64-bit negation")

    @classmethod
    def from_upper(cls, candidates: CandidateSet, upper: dict[tuple[str, str], int]) -> "MarginMatrix":
        """Build from ``{(x, y): w[x][y]}``; the reverse edges get the negation."""
        w = np.zeros((candidates.m, candidates.m), dtype=np.int64)
        for (x, y), value in upper.items():
            i, j = candidates.index(x), candidates.index(y)
            w[i, j] = value
            w[j, i] = -value
        return cls(candidates, w)


@dataclass(frozen=True, order=True)
class BeatpathValue:
    """Extended integer: ``-inf < finite < +inf``.

    Ordering is lexicographic on ``(tier, value)`` so the two infinities
    never need a sentinel integer.
    """

    tier: int
    value: int = 0

    @classmethod
    def finite(cls, value: int) -> "BeatpathValue":
        return cls(0, int(value))

    @property
    def is_finite(self) -> bool:
        return self.tier == 0

    def __str__(self) -> str:
        if self.tier > 0:
            return "inf"
        if self.tier < 0:
            return "-inf"
        return str(self.value)


POS_INF = BeatpathValue(1)
NEG_INF = BeatpathValue(-1)


class SchulzeComparison(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"
    SAME = "same"

    def inverse(self) -> "SchulzeComparison":
        return _INVERSE[self]


_INVERSE = {
    SchulzeComparison.LESS: SchulzeComparison.GREATER,
    SchulzeComparison.GREATER: SchulzeComparison.LESS,
    SchulzeComparison.INCOMPARABLE: SchulzeComparison.INCOMPARABLE,
    SchulzeComparison.SAME: SchulzeComparison.SAME,
}


def compare_by_beatpaths(b_xy: BeatpathValue, b_yx: BeatpathValue) -> SchulzeComparison:
    """Compare x with y from the two beatpath strengths between them."""
    if b_xy < b_yx:
        return SchulzeComparison.LESS
    if b_xy > b_yx:
        return SchulzeComparison.GREATER
    return SchulzeComparison.INCOMPARABLE


class BeatpathMatrix:
    """All-pairs beatpath strengths with explicit infinity tags.

    ``tiers[x, y]`` is -1, 0 or +1 and ``values[x, y]`` is only meaningful
    where the tier is 0.
    """

    def __init__(self, candidates: CandidateSet, values, tiers=None):
        m = candidates.m
        self.candidates = candidates
        values = np.array(values, dtype=np.int64).reshape(m, m)
        if tiers is None:
            tiers = np.zeros((m, m), dtype=np.int8)
            np.fill_diagonal(tiers, 1)
        tiers = np.array(tiers, dtype=np.int8).reshape(m, m)
        if np.any(np.diagonal(tiers) != 1):
            raise ModelError("B(x, x) must be +inf")
        values[tiers != 0] = 0
        values.setflags(write=False)
        tiers.setflags(write=False)
        self.values = values
        self.tiers = tiers

    @property
    def m(self) -> int:
        return self.candidates.m

    def __getitem__(self, xy: tuple[int, int]) -> BeatpathValue:
        x, y = xy
        return BeatpathValue(int(self.tiers[x, y]), int(self.values[x, y]))

    def compare(self, x: int, y: int) -> SchulzeComparison:
        if x == y:
            return SchulzeComparison.SAME
        return compare_by_beatpaths(self[x, y], self[y, x])

    def less_mask(self) -> npt.NDArray[np.bool_]:
        """Boolean matrix whose ``[x, y]`` entry says ``B(x, y) < B(y, x)``."""
        t, v = self.tiers, self.values
        return (t < t.T) | ((t == t.T) & (v < v.T))

    def rows(self) -> list[list[BeatpathValue]]:
        return [[self[x, y] for y in range(self.m)] for x in range(self.m)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BeatpathMatrix):
            return NotImplemented
        return (
            self.candidates == other.candidates
            and np.array_equal(self.tiers, other.tiers)
            and np.array_equal(self.values, other.values)
        )

    def __repr__(self) -> str:
        body = [[str(v) for v in row] for row in self.rows()]
        return f"BeatpathMatrix({list(self.candidates.names)}, {body})"


def transitive_closure(m: int, pairs: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    reach = np.zeros((m, m), dtype=bool)
    for x, y in pairs:
        reach[x, y] = True
    for z in range(m):
        reach |= reach[:, z, None] & reach[None, z, :]
    return frozenset((int(x), int(y)) for x, y in np.argwhere(reach))


@dataclass(frozen=True)
class PartialOrderSpec:
    """Strict partial order; ``(x, y)`` in ``relation`` means ``x < y``."""

    candidates: CandidateSet
    relation: frozenset[tuple[int, int]]

    def __post_init__(self):
        rel = frozenset((int(x), int(y)) for x, y in self.relation)
        object.__setattr__(self, "relation", rel)
        m = self.candidates.m
        for x, y in rel:
            if not (0 <= x < m and 0 <= y < m):
                raise ModelError(f"pair ({x}, {y}) references an unknown candidate")
            if x == y:
                raise ModelError(f"irreflexivity violated at {self.candidates.names[x]}")
            if (y, x) in rel:
                raise ModelError(
                    f"asymmetry violated: {self.candidates.names[x]} < {self.candidates.names[y]} and back"
                )
        if transitive_closure(m, rel) != rel:
            raise ModelError("relation is not transitively closed")

    @classmethod
    def from_pairs(cls, candidates: CandidateSet, pairs: Iterable[tuple[int, int]]) -> "PartialOrderSpec":
        """Close ``pairs`` transitively and validate the result."""
        return cls(candidates, transitive_closure(candidates.m, pairs))

    def less(self, x: int, y: int) -> bool:
        return (x, y) in self.relation

    def maximal(self) -> set[int]:
        below = {x for x, _ in self.relation}
        return set(range(self.candidates.m)) - below

    def minimal(self) -> set[int]:
        above = {y for _, y in self.relation}
        return set(range(self.candidates.m)) - above


@dataclass(frozen=True)
class PivotPartition:
    pivot: int
    low: frozenset[int]
    incomparable: frozenset[int]
    high: frozenset[int]


@dataclass(frozen=True)
class ElectionResult:
    winner: int
    is_unique: bool
    iterations: int
    seed: int
    candidates: CandidateSet = field(repr=False, compare=False, default=None)

    @property
    def winner_name(self) -> str:
        return self.candidates.names[self.winner]
