"""Schulze (beatpath) election winners in O(m^2 log m) expected time."""

from .ballots import Ballot, BallotSet, aggregate, mcgarvey_ballots, parse_ballots
from .core import (
    NEG_INF,
    POS_INF,
    BeatpathMatrix,
    BeatpathValue,
    CandidateSet,
    ElectionResult,
    MarginMatrix,
    ModelError,
    PartialOrderSpec,
    PivotPartition,
    SchulzeComparison,
    WeightedDigraph,
    compare_by_beatpaths,
)
from .oracle import (
    expected_iterations,
    floyd_warshall_beatpaths,
    maximal_elements,
    realize_partial_order,
    schulze_order,
)
from .paths import PriorityVector, pivot_partition, single_destination_maxmin, single_source_maxmin
from .winner import MaximalSet, all_maximal, perturb, quickselect_winner, schulze_winner

__version__ = "0.1.0"
