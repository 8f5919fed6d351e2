"""Pretzel knot P(5,5,5): two handles, a 2x2 matrix of flow generating functions.

The torsion is the determinant of that matrix; each entry is a rational
function whose Taylor coefficients are entries of powers of G.
"""

from morsezeta import pretzel_555, zeta, torsion, census, alexander_recover

G = pretzel_555().monodromy
t = torsion(G)
for i, row in enumerate(t.flow_matrix, start=1):
    for j, d in enumerate(row, start=1):
        print(f"D_{i}{j}(t) = {d}")
print("tau  =", t.rational)
print("zeta =", zeta(G).rational)

res = alexander_recover(G)
print("tau * zeta * (1 - t) =", res.raw)

# Flow counts at level n and the intersection numbers <g^n c_i, c_j>
# differ exactly by sign (d_j . c_j = -1).
for lv in census(G, depth=3).levels:
    print(f"level {lv.n}: L = {lv.lefschetz}, D = {lv.flow_counts}, pairing = {lv.pairing_counts}")
