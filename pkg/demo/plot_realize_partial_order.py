"""
Any bounded partial order is a Schulze order
============================================

Builds margins whose Schulze order is a prescribed partial order with a
unique top and bottom, and checks the result against the all-pairs oracle.
"""

from beatpath import CandidateSet, PartialOrderSpec, realize_partial_order
from beatpath.formats import write_matrix
from beatpath.oracle import floyd_warshall_beatpaths, schulze_order

names = ["bottom", "x", "y", "z", "top"]
cands = CandidateSet(names)
i = cands.index
# x < z, and y is incomparable to both x and z
spec = PartialOrderSpec.from_pairs(
    cands,
    [(i("bottom"), v) for v in (i("x"), i("y"), i("z"))]
    + [(v, i("top")) for v in (i("x"), i("y"), i("z"))]
    + [(i("x"), i("z"))],
)
g = realize_partial_order(spec, top=i("top"), bottom=i("bottom"))
print(write_matrix(g))

got = schulze_order(floyd_warshall_beatpaths(g))
print("realized order matches:", got == spec)
print("relations:", sorted(f"{names[a]} < {names[b]}" for a, b in got.relation))
