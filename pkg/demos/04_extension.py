"""Extending stratum classes to the whole locus as tuples of restrictions.

Run: python3 demos/04_extension.py
"""

from chowm0.chowring import eta
from chowm0.extension import extend_class, restrict_pushforward
from chowm0.strata import stratum

g2 = extend_class(1, "chain3")
print("gamma2 = closure of the chain3 stratum:")
for k, p in g2.entries.items():
    print(f"  {k:7s} {p}")

q = extend_class(eta(), "chain3")
print("\nq on star3:", q["star3"])

# The same restriction computed after swapping which chain3 edge sits at infinity.
S = stratum("chain3")
F = S.flipped(1)
x = S.parse("t1*t2 + r^2")
xf = x.substitute(S.flip_map(1)).extend(F.variables, F.degrees)
a = restrict_pushforward(x, S, "chain4")
b = restrict_pushforward(xf, F, "chain4")
print("\nrestriction to chain4 with either orientation agrees:", a == b)

print("\nstar3 and chain4 closures meet trivially:",
      (extend_class(1, "star3") * extend_class(1, "chain4")).is_zero())
