"""
Flags of projective spaces
==========================

Start with a line V_1 inside a plane V_2 = P^2. Level 1 puts fat points
on V_1. Level 2 adds a fat point off V_1 and some lines of P^2. Each level
is an inclic over the one below, so the Hilbert function needs nothing
beyond closed forms for points on a line.
"""

from inclics import FatComponent, FlagInclic, FlagLevel, LinearSubspace, hf_flag, oracle_hilbert

V1 = LinearSubspace.hyperplane([0, 0, 1])
flag = FlagInclic(2, (V1,), (
    FlagLevel(None, (FatComponent(LinearSubspace.point([1, 0, 0]), 2),
                     FatComponent(LinearSubspace.point([1, 1, 0]), 1))),
    FlagLevel(FatComponent(LinearSubspace.point([1, 1, 1]), 2),
              (FatComponent(LinearSubspace.hyperplane([1, 2, 3]), 1),)),
))

fat = flag.to_fat_scheme()
for t in range(7):
    print(t, hf_flag(flag, t), oracle_hilbert(fat, t))
