"""
A large set whose fiber misses every finite sum
===============================================

S collects q(t) = t^2 + t for nonempty sums t of the generators. Its gaps
grow, so the complement A is large, yet the diagonal finite sums of the
generators all land outside the fiber of A.
"""
from largeness.claims import replay_all
from largeness.constructions import gap_divergence_evidence, ipstar_counterexample

res = ipstar_counterexample("n^2", 10)
print("generators:", res.generators[:4], "...")
for outcome in replay_all(res):
    print(outcome.id, outcome.kind, outcome.status, outcome.detail)

ev = gap_divergence_evidence(res.S, 6, 8)
for lo, hi, g in ev.windows:
    print(f"  [{lo}, {hi}] min gap {g}")

# a shifted cubic needs a larger exponent before q becomes increasing
res = ipstar_counterexample("n^3 - 300n", 2)
print("N =", res.parameters["N"], "generators", res.generators)
