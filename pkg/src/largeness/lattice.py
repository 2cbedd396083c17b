"""Implication lattice between the largeness families.

An edge ``a -> b`` means every a-set is a b-set. The IP_n chains are
materialized for ``2 <= n <= max_n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError

BASE_EDGES = (
    ("delta-star", "ip-star"),
    ("ip-star", "central-star"),
    ("central-star", "syndetic"),
    ("syndetic", "piecewise-syndetic"),
    ("central-star", "central"),
    ("central", "piecewise-syndetic"),
    ("ps-star", "central-star"),
    ("ps-star", "thick"),
    ("thick", "central"),
    ("central", "ip"),
    ("ip", "delta"),
)

ALIASES = {
    "Δ*": "delta-star",
    "Δ": "delta",
    "thickly-syndetic": "ps-star",
    "PS*": "ps-star",
    "ps": "piecewise-syndetic",
    "syndetic-star": "thick",
    "ip-omega": "ip-lt-omega",
    "ip-omega-star": "ip-lt-omega-star",
}


def ip_n(n: int) -> str:
    return f"ip-{n}"


def ip_n_star(n: int) -> str:
    return f"ip-{n}-star"


def chain_edges(max_n: int) -> list[tuple[str, str]]:
    edges = [("ip", "ip-lt-omega"), ("ip-lt-omega", ip_n(max_n))]
    edges += [(ip_n(n), ip_n(n - 1)) for n in range(max_n, 2, -1)]
    edges += [(ip_n_star(n), ip_n_star(n + 1)) for n in range(2, max_n)]
    edges += [(ip_n_star(max_n), "ip-lt-omega-star"), ("ip-lt-omega-star", "ip-star")]
    return edges


@dataclass(frozen=True)
class FamilyLattice:
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def successors(self, node: str) -> list[str]:
        return [b for a, b in self.edges if a == node]

    def reachable(self, src: str) -> set[str]:
        seen: set[str] = set()
        stack = [src]
        while stack:
            for nxt in self.successors(stack.pop()):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return seen

    def canonical(self, name: str) -> str:
        key = ALIASES.get(name, name).lower().replace("_", "-").replace("*", "-star")
        key = ALIASES.get(key, key).replace("--", "-")
        if key not in self.nodes:
            raise PreconditionError(f"unknown family {name!r}")
        return key

    def implies(self, f1: str, f2: str) -> bool:
        a, b = self.canonical(f1), self.canonical(f2)
        return a != b and b in self.reachable(a)

    def is_acyclic(self) -> bool:
        return all(n not in self.reachable(n) for n in self.nodes)


@lru_cache(maxsize=None)
def family_lattice(max_n: int = 8) -> FamilyLattice:
    if max_n < 2:
        raise PreconditionError("max_n must be >= 2")
    edges = tuple(BASE_EDGES) + tuple(chain_edges(max_n))
    nodes = tuple(sorted({x for e in edges for x in e}))
    return FamilyLattice(nodes, edges)


def family_implies(f1: str, f2: str, max_n: int = 8) -> bool:
    return family_lattice(max_n).implies(f1, f2)
