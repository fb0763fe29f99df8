"""
Ties: listing every maximal candidate, or breaking them
========================================================

With many equal margins the Schulze order can have several maximal
candidates. ``all_maximal`` lists them; ``perturb`` breaks ties without
reversing any comparison that already holds.
"""

import numpy as np

from beatpath import all_maximal, perturb, quickselect_winner
from beatpath.oracle import floyd_warshall_beatpaths, random_margins, schulze_order

g = random_margins(12, 3, np.random.default_rng(6))
res = quickselect_winner(g, seed=0)
print("quickselect:", res.winner_name, "unique:", res.is_unique)

found = all_maximal(g, seed=0)
print("maximal set:", found.names, "rounds per member:", found.rounds)

before = schulze_order(floyd_warshall_beatpaths(g)).relation
for seed in range(4):
    p = perturb(g, seed)
    after = schulze_order(floyd_warshall_beatpaths(p)).relation
    r = quickselect_winner(p, seed)
    print(
        f"perturbation {seed}: winner {r.winner_name} (unique {r.is_unique}), "
        f"{len(before)} -> {len(after)} comparisons, old ones kept: {before <= after}"
    )
