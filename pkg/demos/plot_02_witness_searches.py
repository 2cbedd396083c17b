"""
Bounded witness searches
========================

Each search returns the lexicographically first witness inside its box,
or says the box was exhausted.
"""
import json
from pathlib import Path

from largeness.families import (find_delta_witness, find_ip_witness, pws_witness, replay,
                                syndetic_max_gap, thick_run)
from largeness.sets import descriptor_from_json

data = Path(__file__).parent / "data"


def load(name):
    return descriptor_from_json(json.loads((data / f"{name}.json").read_text()))


evens, odds, squares = load("evens"), load("odds"), load("squares")

# two evens whose sum is even
rep = find_ip_witness(evens, 2, 100)
print(rep.verdict, rep.witness, "replays:", replay(rep, evens))

# odd plus odd is never odd, so the box is exhausted
print(find_ip_witness(odds, 2, 99).verdict)

# three numbers whose pairwise differences are all squares
rep = find_delta_witness(squares, 3, 30)
print(rep.verdict, rep.witness)

# the evens contain no two consecutive numbers but have bounded gaps
print(thick_run(evens, 2, (1, 1000)).verdict, syndetic_max_gap(evens, (1, 1000)))
print(pws_witness(evens, 2, 40, (1, 100)).witness)
