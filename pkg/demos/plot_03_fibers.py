"""
Polynomial fibers in the plane
==============================

The fiber of a set A under polynomials p_i collects the points (m, n)
with every m + p_i(n) in A.
"""
import sys
import tempfile
from pathlib import Path

from largeness.fiber import pbm_bytes, poly_fiber, slice_fiber, write_csv
from largeness.sets import multiples

evens = multiples(2, 1, 10_000)

# n^2 has the parity of n, so the fiber is a checkerboard
fiber, pts = poly_fiber(evens, ["n^2"], (1, 8, 0, 7))
print(len(pts), "points, first few:", pts[:4])
print("slice n = 3:", slice_fiber(fiber, 3, (1, 10)))

# adding a second polynomial can only shrink the fiber
_, both = poly_fiber(evens, ["n^2", "n"], (1, 8, 0, 7))
print("with n as well:", len(both), "points")

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp())
write_csv(pts, out / "fiber.csv")
(out / "fiber.pbm").write_bytes(pbm_bytes(fiber.grid((1, 40, 0, 40))))
print("wrote", out / "fiber.csv", "and", out / "fiber.pbm")
