"""
Thick and syndetic sets survive a polynomial shift
==================================================

Blocks [2^n, 2^n + n] make a thick set, and its fiber under n^2 holds a
full square block. Multiples of five stay five-syndetic in every slice.
"""
from largeness.claims import replay_all
from largeness.constructions import (PowerBlocks, syndetic_construction,
                                     syndetic_preservation_check, thick_block_witness)

for N in (1, 3, 6):
    blk = thick_block_witness(PowerBlocks(2), ["n^2"], N)
    print(f"N = {N}: block index {blk.n_N}, square {blk.rect}")

res = syndetic_construction("n^3", modulus=5, radius=20)
for outcome in replay_all(res):
    print(outcome.id, outcome.status, outcome.detail)

chk = syndetic_preservation_check(res.A, "n^3", (-20, 20, -5, 5))
print("slice gaps:", sorted(set(chk.slice_gaps.values())))
