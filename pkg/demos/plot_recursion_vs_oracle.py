"""
Hilbert functions by recursion and by interpolation
===================================================

An inclic X splits into a lead component l_0·L_0 off a hyperplane H_0,
fat components inside H_0, and extra hyperplanes. Its Hilbert function is
assembled from Hilbert functions of trace schemes in H_0, which have one
less dimension. Here we compare that recursion with brute force linear
algebra over the rationals.
"""

import random
import time

from inclics import (FatComponent, InclicScheme, LinearSubspace, RecursiveProvider, alpha_inclic,
                     hf_inclic, oracle_hilbert)
from inclics.families import random_inclic

H0 = LinearSubspace.hyperplane([0, 0, 0, 1])
X = InclicScheme(
    3,
    FatComponent(LinearSubspace(3, [[1, 0, 0, 1], [0, 1, 0, 2]]), 2),    # a double line
    H0,
    [FatComponent(LinearSubspace.point([1, 2, 3, 0]), 3),
     FatComponent(LinearSubspace(3, [[0, 0, 0, 1], [1, -1, 1, 0]]), 1)],
    [FatComponent(LinearSubspace.hyperplane([1, 1, 1, 1]), 1)],
)

provider = RecursiveProvider()
fat = X.to_fat_scheme()
print(" t  recursion  oracle")
for t in range(9):
    print(f"{t:2d}  {hf_inclic(X, t, provider):9d}  {oracle_hilbert(fat, t):6d}")

res = alpha_inclic(X, provider)
print(f"alpha = {res.alpha}, d = {res.d}, bounds [{res.lower_bound}, {res.upper_bound}]")

###############################################################################
# A random family
# ---------------

rng = random.Random(2013)
start = time.perf_counter()
agree = 0
for _ in range(10):
    Y = random_inclic(rng, rng.choice([2, 3]))
    p, fatY = RecursiveProvider(), Y.to_fat_scheme()
    agree += all(hf_inclic(Y, t, p) == oracle_hilbert(fatY, t) for t in range(8))
print(f"{agree}/10 agree through degree 7 ({time.perf_counter() - start:.1f}s)")
