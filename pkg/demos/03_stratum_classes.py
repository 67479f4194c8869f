"""psi classes, normal-bundle top Chern classes and Mumford classes on each stratum.

Run: python3 demos/03_stratum_classes.py
"""

from chowm0.classes import chern_classes, mumford_k, normal_top_chern, verify_newton_link
from chowm0.strata import StratumRing
from chowm0.trees import STRATUM_NAMES, ZERODIV_TREE

print("Top Chern class of the normal bundle:")
for k in STRATUM_NAMES:
    print(f"  {k:7s} {normal_top_chern(k)}")

# Two trivalent vertices joined by an edge: the psi sums cancel on that edge.
Z = StratumRing(ZERODIV_TREE)
print(f"\n{ZERODIV_TREE.to_text()}: top Chern class = {normal_top_chern(Z)}")

print("\nMumford classes k1..k3 and Chern classes c1..c3 on star3:")
for m in (1, 2, 3):
    print(f"  k{m} = {mumford_k('star3', m)}")
for i, c in enumerate(chern_classes("star3"), 1):
    print(f"  c{i} = {c}")

print("\nNewton link between k and c on every stratum:")
for k in STRATUM_NAMES:
    print(f"  {k:7s} {'ok' if verify_newton_link(k, strict=False).passed else 'FAILED'}")
