"""Ballot parsing, aggregation into margins, and McGarvey-style synthesis."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .core import INT64_MAX, CandidateSet, MarginMatrix, ModelError

MAX_MULTIPLICITY = 2**32 - 1

_NAME = re.compile(r"[A-Za-z0-9_.-]+")
_COUNT = re.compile(r"^\s*(\d+)\s*x\s+(.*)$")


class BallotSyntaxError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Ballot:
    """Ranked groups of candidate indices, best first; ties within a group."""

    groups: tuple[frozenset[int], ...]
    multiplicity: int = 1

    def __post_init__(self):
        groups = tuple(frozenset(int(c) for c in g) for g in self.groups)
        object.__setattr__(self, "groups", groups)
        seen: set[int] = set()
        for g in groups:
            if not g:
                raise ModelError("ballot groups must be non-empty")
            if seen & g:
                raise ModelError(f"candidate {min(seen & g)} ranked twice on one ballot")
            seen |= g
        if not 1 <= self.multiplicity <= MAX_MULTIPLICITY:
            raise ModelError(f"multiplicity {self.multiplicity} outside [1, {MAX_MULTIPLICITY}]")

    @classmethod
    def ranking(cls, order: Iterable[int], multiplicity: int = 1) -> "Ballot":
        """A ballot with one candidate per group."""
        return cls(tuple(frozenset((c,)) for c in order), multiplicity)

    def ranks(self, m: int) -> np.ndarray:
        """Group position per candidate, ``-1`` when the candidate is unranked."""
        r = np.full(m, -1, dtype=np.int64)
        for pos, g in enumerate(self.groups):
            r[list(g)] = pos
        return r


@dataclass(frozen=True)
class BallotSet:
    candidates: CandidateSet
    ballots: tuple[Ballot, ...]

    def __post_init__(self):
        object.__setattr__(self, "ballots", tuple(self.ballots))
        m = self.candidates.m
        for b in self.ballots:
            for g in b.groups:
                if any(not 0 <= c < m for c in g):
                    raise ModelError("ballot references an unknown candidate")

    @property
    def n(self) -> int:
        """Number of voters."""
        return sum(b.multiplicity for b in self.ballots)


def parse_ballots(text: str, candidates: CandidateSet) -> BallotSet:
    """Parse the line-oriented ballot format.

    ``[count x] group (> group)*`` where a group is ``name (= name)*``;
    ``#`` starts a comment line and blank lines are skipped.
    """
    ballots = []
    for lineno, ballot in _scan_lines(text):
        count, groups = ballot
        try:
            idx_groups = [frozenset(candidates.index(n) for n in g) for g in groups]
        except ModelError as exc:
            raise BallotSyntaxError(str(exc), lineno) from None
        ballots.append(Ballot(tuple(idx_groups), count))
    return BallotSet(candidates, tuple(ballots))


def candidate_names(text: str) -> list[str]:
    """Sorted set of every name mentioned in a ballot file."""
    names = set()
    for _, (_, groups) in _scan_lines(text):
        for g in groups:
            names.update(g)
    return sorted(names)


def _scan_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, _parse_line(line, lineno)


def _parse_line(line: str, lineno: int) -> tuple[int, list[list[str]]]:
    count = 1
    match = _COUNT.match(line)
    if match:
        count = int(match.group(1))
        line = match.group(2)
        if count == 0:
            raise BallotSyntaxError("multiplicity must be positive", lineno)
        if count > MAX_MULTIPLICITY:
            raise BallotSyntaxError(f"multiplicity exceeds {MAX_MULTIPLICITY}", lineno)
    groups = []
    seen = set()
    for chunk in line.split(">"):
        group = []
        for name in chunk.split("="):
            name = name.strip()
            if not _NAME.fullmatch(name):
                what = "empty name" if not name else f"bad candidate name {name!r}"
                raise BallotSyntaxError(what, lineno)
            if name in seen:
                raise BallotSyntaxError(f"duplicate candidate {name!r}", lineno)
            seen.add(name)
            group.append(name)
        groups.append(group)
    return count, groups


def format_ballots(ballots: BallotSet) -> str:
    names = ballots.candidates.names
    lines = []
    for b in ballots.ballots:
        body = " > ".join(" = ".join(names[c] for c in sorted(g)) for g in b.groups)
        lines.append(body if b.multiplicity == 1 else f"{b.multiplicity}x {body}")
    return "\n".join(lines) + ("\n" if lines else "")


def aggregate(ballots: BallotSet) -> MarginMatrix:
    """Net pairwise margins ``P(x, y) - P(y, x)``.

    A ballot prefers x to y only when both are ranked and x's group comes
    first; unranked candidates are incomparable to everyone.
    """
    m = ballots.candidates.m
    w = np.zeros((m, m), dtype=np.int64)
    for b in ballots.ballots:
        r = b.ranks(m)
        ranked = r >= 0
        prefers = ranked[:, None] & ranked[None, :] & (r[:, None] < r[None, :])
        w += b.multiplicity * (prefers.astype(np.int64) - prefers.T.astype(np.int64))
    return MarginMatrix(ballots.candidates, w)


def mcgarvey_ballots(target: MarginMatrix, seed: int = 0) -> BallotSet:
    """Total-order ballots whose aggregate is exactly ``target``.

    With ``k = max(1, ceil(max|w| / 2))``, each unordered pair {x, y} gets
    2k ballots that put x and y on top: ``k + w[x][y]/2`` rank x over y and
    the rest y over x. Half of the 2k list the remaining candidates in a
    seeded random order and half in its reverse, so they cancel elsewhere.
    Identical ballots are merged through their multiplicity.
    """
    w = target.w
    if np.any(w % 2):
        raise ModelError("McGarvey construction needs even margins; double them first")
    m = target.m
    k = max(1, -(-int(np.abs(w).max()) // 2)) if m > 1 else 1
    rng = np.random.default_rng(seed)
    ballots = []
    for x in range(m):
        for y in range(x + 1, m):
            rest = [v for v in range(m) if v not in (x, y)]
            sigma = [rest[i] for i in rng.permutation(len(rest))]
            reverse = sigma[::-1]
            x_first = k + int(w[x, y]) // 2
            # the k forward-tail ballots come first, then the k reversed ones
            split = _split_counts(x_first, k)
            for tail, (n_xy, n_yx) in ((sigma, split[0]), (reverse, split[1])):
                if n_xy:
                    ballots.append(Ballot.ranking([x, y, *tail], n_xy))
                if n_yx:
                    ballots.append(Ballot.ranking([y, x, *tail], n_yx))
    return BallotSet(target.candidates, tuple(ballots))


def _split_counts(x_first: int, k: int) -> tuple[tuple[int, int], tuple[int, int]]:
    # x_first of the 2k ballots rank x over y; the first k use sigma
    fwd_xy = min(x_first, k)
    rev_xy = x_first - fwd_xy
    return (fwd_xy, k - fwd_xy), (rev_xy, k - rev_xy)


def mcgarvey_voter_count(target: MarginMatrix) -> int:
    m = target.m
    k = max(1, -(-int(np.abs(target.w).max()) // 2)) if m > 1 else 1
    return 2 * k * (m * (m - 1) // 2)


def double_if_odd(target: MarginMatrix) -> tuple[MarginMatrix, int]:
    """Return ``(matrix, scale)`` with every margin even; scale is 1 or 2."""
    if not np.any(target.w % 2):
        return target, 1
    if np.abs(target.w).max() > INT64_MAX // 2:
        raise OverflowError("doubling the margins would overflow 64 bits")
    return MarginMatrix(target.candidates, target.w * 2), 2
