"""Checking ring presentations of the <=1, <=2 and <=3 node loci degree by degree.

Run: python3 demos/05_presentation.py   (about ten seconds)
"""

from chowm0.chowring import (corrected_presentation, hilbert_profile, presentation,
                             theorem_presentation, verify_presentation)

print("Hilbert profile up to degree 10:", hilbert_profile(10))

for n in (1, 2):
    rep = verify_presentation(presentation(n), 10, strict=False)
    print(f"\n<= {n} node(s): {presentation(n).title}")
    print("  " + rep.notes[-1])

# The ten-generator list with eleven relations as printed does not check out:
rep = verify_presentation(theorem_presentation(), 10, strict=False)
print("\n<= 3 nodes, printed relation list:")
for line in rep.text().splitlines():
    if line.startswith("FAIL"):
        print("  " + line[:110])
print("  " + rep.notes[-1])

# Relations recomputed from the tuple values; these do verify.
P = corrected_presentation(10)
rep = verify_presentation(P, 10, strict=False)
print(f"\n<= 3 nodes, corrected list ({len(P.relations)} relations):")
print("  " + rep.notes[-1])
