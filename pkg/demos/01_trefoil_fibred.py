"""Trefoil: a fibred knot, where the zeta function alone recovers Delta.

The trefoil's Seifert surface is a fibre, so the flow has no critical points,
the torsion is 1 by convention, and det(I - tG) is the Alexander polynomial.
"""

from morsezeta import trefoil, zeta, torsion, alexander_recover, lefschetz_number

rec = trefoil()
G = rec.monodromy
print("monodromy rows:", G.entries)

# Lefschetz numbers L(g^n) = 1 - trace(G^n) repeat with period 6 because G^6 = I.
print("L(g^n), n = 1..12:", [lefschetz_number(G, n) for n in range(1, 13)])

z = zeta(G, order=10)
print("zeta closed form:  ", z.rational)
print("zeta as a series:  ", z.series)

print("torsion:           ", torsion(G).rational)
print("tau*zeta*(1-t):    ", alexander_recover(G).raw)
