"""
The Waldschmidt constant of a galaxy
====================================

A galaxy puts a star in a plane P^n of P^{n+N} and adds N general halo
points. Each step G_{i-1} -> G_i is an inclic: the new halo point is the
lead component, the span of G_{i-1} is the distinguished hyperplane.
"""

from fractions import Fraction

from inclics import GalaxyParams, build_galaxy, verify_galaxy_chain, waldschmidt

params = GalaxyParams(n=2, N=1, e=2, u=3)
galaxy = build_galaxy(params)
for i, G in enumerate(galaxy.chain):
    print(f"G_{i}: {len(G.components)} points in P^{G.ambient_dim}")

###############################################################################
# The a-sequence and its witnesses
# --------------------------------
#
# a_i = i·r·u - (i-1)·r·e. The fat scheme a_i·G_i starts in degree a_{i+1};
# we check this with the inclic recursion and with plain interpolation.

for r in (1, 2):
    for step in verify_galaxy_chain(params, r):
        print(f"r={r} i={step.i}: alpha({step.multiplicity} G_{step.i}) "
              f"recursion={step.recursion} oracle={step.oracle} expected={step.expected}")

###############################################################################
# The constant and the resurgence bounds
# --------------------------------------

rep = waldschmidt(params, rs=(1, 2, 10))
print("gamma =", rep.gamma)
for r, seq in rep.alpha_sequences.items():
    print(f"r={r}: a = {seq}, last ratio {rep.ratios[r][-1]}")
print(f"rho in [{rep.rho_lower}, {rep.rho_upper}] ({rep.upper_kind})")
assert rep.gamma == Fraction(4, 3)
