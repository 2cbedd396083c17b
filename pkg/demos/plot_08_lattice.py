"""
The implication lattice
=======================

Edges point from the stronger family to the weaker one.
"""
from largeness.lattice import family_implies, family_lattice

lat = family_lattice(4)
for a, b in lat.edges:
    print(f"{a:>18} -> {b}")

for f1, f2 in [("delta-star", "central-star"), ("thick", "ip"), ("syndetic", "thick")]:
    print(f"{f1} implies {f2}: {family_implies(f1, f2)}")
