"""
Initial degrees of star configurations
======================================

Take u general lines in the plane. Their pairwise intersections form the
star configuration S(2, 2, u). We compute the initial degree of the
reduced star A and of its fat versions r·e·A by interpolation, and compare
with the values ru and u - e + 1.
"""

from inclics import build_star, oracle_alpha, oracle_reg_points

star = build_star(2, 2, 4)
print(len(star.components), "points from", len(star.hyperplanes), "lines")

A = star.scheme()
print("alpha(A) =", oracle_alpha(A), " expected", 4 - 2 + 1)
print("reg(I_A) =", oracle_reg_points(A), " expected", 4 - 2 + 1)

###############################################################################
# Fat stars: multiplicity r·e forces degree exactly r·u
# ------------------------------------------------------

for r in (1, 2, 3):
    m = r * star.e
    print(f"r={r}: alpha({m}A) = {oracle_alpha(star.scheme(m))}, ru = {r * star.u}")

###############################################################################
# Lines in P^3
# ------------
#
# The same holds for codimension 2 stars in P^3, which are unions of lines.

star3 = build_star(3, 2, 4)
print("alpha(A) for 6 lines in P^3:", oracle_alpha(star3.scheme()))
print("alpha(2A):", oracle_alpha(star3.scheme(2)))
