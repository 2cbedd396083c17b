"""
Greedy sum-free blocks and where they stop
==========================================

Square blocks [s_n, s_n + n]^2 are placed greedily so that their images
D stay sum-free. Block n contains n + 1 consecutive values, so once n
reaches min D no placement can work.
"""
from largeness.claims import replay_all
from largeness.constructions import centralstar_counterexample
from largeness.errors import BoundsError

res = centralstar_counterexample("n^2", 5)
print("starts:", res.parameters["starts"])
print("rejected first candidates:", res.parameters["first_block_rejections"])
for outcome in replay_all(res):
    print(outcome.id, outcome.kind, outcome.status, outcome.detail)

try:
    centralstar_counterexample("n^2", 8)
except BoundsError as exc:
    print("eight blocks:", exc)
