import pytest
from hypothesis import given, strategies as st

from largeness.errors import PreconditionError
from largeness.lattice import family_implies, family_lattice

DIAGRAM = {
    ("delta-star", "ip-star"), ("ip-star", "central-star"), ("central-star", "syndetic"),
    ("syndetic", "piecewise-syndetic"), ("central-star", "central"),
    ("central", "piecewise-syndetic"), ("ps-star", "central-star"), ("ps-star", "thick"),
    ("thick", "central"), ("central", "ip"), ("ip", "delta"),
}


def chains(max_n):
    up = ["ip", "ip-lt-omega"] + [f"ip-{n}" for n in range(max_n, 1, -1)]
    down = [f"ip-{n}-star" for n in range(2, max_n + 1)] + ["ip-lt-omega-star", "ip-star"]
    return set(zip(up, up[1:])) | set(zip(down, down[1:]))


@pytest.mark.parametrize("max_n", [2, 3, 8])
def test_edges_are_diagram_plus_chains(max_n):
    assert set(family_lattice(max_n).edges) == DIAGRAM | chains(max_n)


def test_spot_checks():
    assert family_implies("delta-star", "central-star")
    assert family_implies("Δ*", "central*")
    assert family_implies("thick", "ip")
    assert family_implies("thick", "delta")
    assert not family_implies("syndetic", "thick")
    assert not family_implies("central", "central-star")


def test_chains_hold():
    for n in range(2, 9):
        assert family_implies("ip", f"ip-{n}")
        assert family_implies("ip-lt-omega", f"ip-{n}")
        assert family_implies(f"ip-{n}-star", "ip-star")
        assert family_implies(f"ip-{n}-star", "ip-lt-omega-star")
        for m in range(2, n):
            assert family_implies(f"ip-{n}", f"ip-{m}")
            assert family_implies(f"ip-{m}-star", f"ip-{n}-star")
            assert not family_implies(f"ip-{m}", f"ip-{n}")
    assert family_implies("delta-star", "syndetic")


def test_acyclic_and_irreflexive():
    lat = family_lattice(8)
    assert lat.is_acyclic()
    assert not any(lat.implies(x, x) for x in lat.nodes)


def test_unknown_family():
    with pytest.raises(PreconditionError):
        family_implies("bogus", "ip")
    with pytest.raises(PreconditionError):
        family_lattice(1)


NODES = family_lattice(8).nodes


@given(st.sampled_from(NODES), st.sampled_from(NODES), st.sampled_from(NODES))
def test_transitive_and_antisymmetric(a, b, c):
    if family_implies(a, b) and family_implies(b, c) and a != c:
        assert family_implies(a, c)
    assert not (family_implies(a, b) and family_implies(b, a))
