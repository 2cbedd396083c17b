"""
Sets, windows and gaps
======================

Every set is a small descriptor that answers membership exactly and lists
its elements inside a finite window.
"""
from largeness.sets import (Complement, ConstructionBacked, ExplicitSorted, IntervalUnion,
                            gap_profile, member, normalize)

# an explicit list and its complement inside the naturals
listed = ExplicitSorted((2, 4, 6))
print("4 in {2,4,6}:", member(listed, 4))
print("4 in complement:", member(Complement(listed), 4))

# adjacent intervals collapse when normalized
print(normalize(IntervalUnion(((1, 3), (4, 6)))).intervals)

# the images t^2 + t over nonempty sums t of distinct powers of two
S = ConstructionBacked("ip_star", {"coeffs": [0, 1], "N": 1})
print("S in [1, 250]:", S.enumerate((1, 250)))

# gaps between consecutive members keep growing
profile = gap_profile(S, (1, 250))
print("gaps:", profile.gap_values, "max:", profile.max_gap)

# membership is exact even for 150-digit values
t = 2 ** 256 + 2 ** 4
print("huge member:", member(S, t * t + t), member(S, t * t + t + 1))
