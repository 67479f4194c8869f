"""Invariant rings of the strata: Reynolds operator, Molien series and presentations.

Run: python3 demos/02_invariant_rings.py
"""

from chowm0.strata import stratum_generators, stratum, verify_generators_and_relation
from chowm0.trees import STRATUM_NAMES

for k in STRATUM_NAMES:
    S = stratum(k)
    print(f"{k:7s} vars={' '.join(S.variables):12s} |G|={S.order}  molien: {S.molien_series(8)}")

c3 = stratum("chain3")
# the automorphism swapping the two leaves also flips the sign of r
print("\nReynolds of r*t1 on chain3:", c3.reynolds(c3.parse("r*t1")))
print("Reynolds of r^2 on chain3:", c3.reynolds(c3.parse("r^2")))

# the generator sets for the chain rings, checked by exact dimension counts
for k in ("chain3", "chain4"):
    gens, rels = stratum_generators(k)
    rep = verify_generators_and_relation(k, gens, rels, 8, strict=False)
    print(f"\n{k}: generators {[str(g) for g in gens]}")
    print(f"  relation: {rels[0]}")
    print("  " + rep.text().splitlines()[-1])
