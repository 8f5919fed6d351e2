"""Twist knots K_{2n-1}: non-fibred, one handle, one flow-line generating function.

For every n the zeta function is (1 - t)^3 while the torsion carries the
knot-specific information; their product times (1 - t) is the Alexander
polynomial -n + (2n - 1)t - nt^2.
"""

from morsezeta import twist_knot, zeta, torsion, census, verify_identity

for n in range(2, 7):
    rec = twist_knot(n)
    G = rec.monodromy
    print(f"n = {n}")
    print("  zeta    =", zeta(G).rational)
    print("  tau     =", torsion(G).rational)
    print("  check   :", verify_identity(rec))

# The torsion series counts flow lines from q_1 to p_1 level by level.
G = twist_knot(2).monodromy
report = census(G, depth=8)
print("K_3 flow counts D^(n)_11, n = 1..8:", [lv.flow_counts[0][0] for lv in report.levels])
print("K_3 tau as a series:              ", torsion(G, order=8).series.integer_coeffs())
