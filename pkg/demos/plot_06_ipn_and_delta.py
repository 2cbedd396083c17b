"""
Sum-free towers and difference sets
===================================

Generators built from towers 2^(2^i) keep every pairwise sum out of S.
A finite S made from differences blocks a whole difference set.
"""
from largeness.claims import replay_all
from largeness.constructions import (beta_inequality, delta_free_solution_count,
                                     deltastar_counterexample, ipnstar_counterexample)

res = ipnstar_counterexample("n^2", 4)
print("beta =", res.parameters["beta"])
for alpha in (2, 3, 4, 5):
    lhs, rhs = beta_inequality(res.polys[0], alpha)
    print(f"  alpha {alpha}: {lhs} > {rhs}")
print("S prefix head:", res.parameters["S_prefix"][:3])
for outcome in replay_all(res):
    print(outcome.id, outcome.status, outcome.detail)

res = deltastar_counterexample("n^2", 6)
print("S =", res.parameters["S_values"])
for outcome in replay_all(res):
    print(outcome.id, outcome.status, outcome.detail)

for d in (2, 16, 40):
    sc = delta_free_solution_count("n^2", d, 200)
    print(f"x^2 - y^2 = {d}: {sc.count} solutions, stable: {sc.stabilized}")
