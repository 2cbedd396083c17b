"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from largeness.sets import (INTEGERS, NATURALS, Complement, ConstructionBacked, ExplicitSorted,
                            IntervalUnion)

universes = st.sampled_from([NATURALS, INTEGERS])


@st.composite
def intervals(draw, universe):
    lo_min = 1 if universe is NATURALS else -200
    pairs = draw(st.lists(st.tuples(st.integers(lo_min, 200), st.integers(0, 30)), max_size=6))
    return IntervalUnion(tuple((a, a + w) for a, w in pairs), universe)


@st.composite
def explicit(draw, universe):
    lo_min = 1 if universe is NATURALS else -200
    xs = draw(st.sets(st.integers(lo_min, 250), max_size=40))
    return ExplicitSorted(tuple(sorted(xs)), universe)


@st.composite
def construction(draw, universe):
    rule = draw(st.sampled_from(["ip_star", "ipn_star", "delta_star"]))
    coeffs = draw(st.sampled_from([[0, 1], [1, 1], [-3, 0, 1], [0, 0, 2]]))
    if rule == "ip_star":
        params = {"coeffs": coeffs, "N": draw(st.integers(1, 3))}
    elif rule == "ipn_star":
        params = {"coeffs": coeffs, "beta": draw(st.integers(0, 2))}
    else:
        ds = draw(st.sets(st.integers(1, 12), min_size=1, max_size=5))
        params = {"coeffs": coeffs, "differences": sorted(ds)}
    return ConstructionBacked(rule, params, universe)


@st.composite
def descriptors(draw, universe=None, depth=2):
    u = draw(universes) if universe is None else universe
    options = [intervals(u), explicit(u), construction(u)]
    if depth > 0:
        options.append(descriptors(u, depth - 1).map(lambda s: Complement(s, s.universe)))
    return draw(st.one_of(*options))


@st.composite
def windows(draw, universe, max_width=400):
    lo_min = 1 if universe is NATURALS else -300
    lo = draw(st.integers(lo_min, 300))
    return (lo, lo + draw(st.integers(0, max_width)))
