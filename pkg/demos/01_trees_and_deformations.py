"""Walk through the five strata trees and the ordered deformations between them.

Run: python3 demos/01_trees_and_deformations.py
"""

from chowm0.deformations import edge_correspondence, ordered_deformations, quotient_by_source
from chowm0.trees import NAMED_TREES, STRATUM_NAMES, automorphism_group, canonical_encode, enumerate_trees, parse_tree

print("Trees with at most three edges and multiplicity at most three:")
for t in enumerate_trees(3, 3):
    print(f"  {canonical_encode(t):12s} vertices={t.n_vertices} |Aut|={len(automorphism_group(t))}")

print("\nThe named strata and their text form:")
for k in STRATUM_NAMES:
    print(f"  {k:7s} {NAMED_TREES[k].to_text()}")

# A one-edge tree degenerating to a five-vertex tree with a trivalent vertex.
source = parse_tree("edges=0-2,1-2,2-3,3-4")
defs = ordered_deformations(NAMED_TREES["chain2"], source)
print(f"\nchain2 -> {source.to_text()}: {len(defs)} ordered deformations")
for d in defs:
    corr = edge_correspondence(d)
    print(f"  map={d.vertex_map} contracted={corr.contracted}")
print("orbits under the source automorphisms:", [len(c) for c in quotient_by_source(defs)])

# The star and the 4-chain are both codimension three, so neither degenerates to the other.
print("\nstar3 -> chain4:", len(ordered_deformations(NAMED_TREES["star3"], NAMED_TREES["chain4"])))
print("chain3 -> star3:", len(ordered_deformations(NAMED_TREES["chain3"], NAMED_TREES["star3"])))
