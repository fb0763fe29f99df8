"""
Beatpaths and winners on two small elections
============================================

Builds two weighted majority graphs by hand, prints their all-pairs
beatpath strengths, and finds the winner with quickselect.
"""

from beatpath import CandidateSet, MarginMatrix, all_maximal, quickselect_winner
from beatpath.formats import write_beatpaths
from beatpath.oracle import floyd_warshall_beatpaths, schulze_order

# Three candidates where only A vs B is decided (by two votes).
tied = MarginMatrix.from_upper(CandidateSet("ABC"), {("A", "B"): 2})
print(write_beatpaths(floyd_warshall_beatpaths(tied)))

# B reaches A through C at strength 0, still below the 2 from A to B, so A
# beats B. C ties with both, which leaves two maximal candidates.
result = quickselect_winner(tied, seed=0)
print("winner:", result.winner_name, "unique:", result.is_unique)
print("all maximal:", all_maximal(tied).names)

# Four candidates with positive edges forming a strongly connected cycle.
chain = MarginMatrix.from_upper(
    CandidateSet("ABCD"),
    {("B", "A"): 1, ("D", "B"): 2, ("C", "D"): 3, ("A", "D"): 4, ("A", "C"): 6, ("B", "C"): 5},
)
print(write_beatpaths(floyd_warshall_beatpaths(chain)))

order = schulze_order(floyd_warshall_beatpaths(chain))
names = chain.candidates.names
print("comparisons:", sorted(f"{names[x]} < {names[y]}" for x, y in order.relation))

# Different seeds pick different pivots, but the answer never changes.
for seed in range(3):
    r = quickselect_winner(chain, seed)
    print(f"seed {seed}: winner {r.winner_name} after {r.iterations} round(s)")
