"""
From ballots to margins, and back
=================================

Parses a ballot file, tallies it into a margin matrix, and then
synthesizes a fresh electorate whose tally is that same matrix.
"""

import numpy as np

from beatpath import CandidateSet, aggregate, mcgarvey_ballots, parse_ballots
from beatpath.ballots import double_if_odd, format_ballots
from beatpath.formats import write_matrix
from beatpath.oracle import random_margins

text = """
# ties and partial ballots are allowed
3x A > B = C > D
2x D > C
B > A > D > C
"""
cands = CandidateSet("ABCD")
ballots = parse_ballots(text, cands)
margins = aggregate(ballots)
print(f"{ballots.n} voters")
print(write_matrix(margins))

# The synthetic electorate needs even margins; doubling keeps every comparison.
even, scale = double_if_odd(margins)
synthetic = mcgarvey_ballots(even, seed=1)
print(f"scale {scale}, {synthetic.n} synthetic voters, e.g.:")
print("\n".join(format_ballots(synthetic).splitlines()[:4]))
assert aggregate(synthetic) == even

# Any antisymmetric integer matrix can be realized this way.
target = random_margins(6, 5, np.random.default_rng(0))
target, _ = double_if_odd(target)
assert aggregate(mcgarvey_ballots(target, seed=2)) == target
print("round trip ok for a random 6x6 matrix")
