"""Windowed checkers and bounded witness searches for the largeness families.

Every infinitary notion gets a finite analogue parameterized by explicit
bounds. A verdict of ``"exhausted"`` only ever means "no witness inside the
searched box".
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import BoundsError, PreconditionError
from .fiber import PlaneSet, as_rect
from .sets import SetDescriptor, as_window

FOUND = "witness_found"
EXHAUSTED = "exhausted"
INCONCLUSIVE = "inconclusive"

MAX_FS_GENERATORS = 24
DEFAULT_BUDGET = 10_000_000


def search_budget() -> int:
    """Node budget for searches, read from ``LARGENESS_BUDGET``."""
    raw = os.environ.get("LARGENESS_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass
class WitnessReport:
    kind: str
    verdict: str
    witness: list = field(default_factory=list)
    bounds: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.verdict == FOUND

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "verdict": self.verdict,
            "witness": _jsonify(self.witness),
            "bounds": _jsonify(self.bounds),
        }


def _jsonify(v):
    if isinstance(v, dict):
        return {k: _jsonify(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonify(x) for x in v]
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return v


# -- finite sums and differences ---------------------------------------------

def fs_closure(generators: Sequence[int]) -> list[int]:
    """All sums over nonempty subsets of ``generators``, sorted and deduplicated."""
    gens = [int(g) for g in generators]
    if not gens:
        raise PreconditionError("fs_closure needs at least one generator")
    if len(gens) > MAX_FS_GENERATORS:
        raise BoundsError(f"{len(gens)} generators exceeds the limit of {MAX_FS_GENERATORS}")
    if any(g <= 0 for g in gens):
        raise PreconditionError("generators must be positive")
    sums: set[int] = set()
    for g in gens:
        sums |= {g + s for s in sums}
        sums.add(g)
    return sorted(sums)


def fs_closure_2d(generators: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    gens = [(int(m), int(n)) for m, n in generators]
    if not gens:
        raise PreconditionError("fs_closure_2d needs at least one generator")
    if len(gens) > MAX_FS_GENERATORS:
        raise BoundsError(f"{len(gens)} generators exceeds the limit of {MAX_FS_GENERATORS}")
    sums: set[tuple[int, int]] = set()
    for gm, gn in gens:
        sums |= {(gm + m, gn + n) for m, n in sums}
        sums.add((gm, gn))
    return sorted(sums)


def delta_of(sequence: Sequence[int]) -> list[int]:
    """Forward differences ``x_j - x_i`` (``j > i``) of a strictly increasing sequence."""
    xs = [int(x) for x in sequence]
    if len(xs) < 2:
        raise PreconditionError("delta_of needs at least two terms")
    if any(a >= b for a, b in zip(xs, xs[1:])):
        raise PreconditionError("delta_of needs a strictly increasing sequence")
    return sorted({b - a for a, b in combinations(xs, 2)})


def delta_of_2d(points: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Differences ``x_j - x_i`` for ``j > i`` in the given order."""
    pts = [(int(m), int(n)) for m, n in points]
    if len(pts) < 2:
        raise PreconditionError("delta_of_2d needs at least two points")
    return sorted({(b[0] - a[0], b[1] - a[1]) for a, b in combinations(pts, 2)})


# -- bounded searches --------------------------------------------------------

class _Budget:
    def __init__(self, limit: int | None):
        self.limit = search_budget() if limit is None else limit
        self.used = 0

    def tick(self) -> bool:
        self.used += 1
        return self.used > self.limit


def find_ip_witness(s: SetDescriptor, k: int, bound: int, budget: int | None = None) -> WitnessReport:
    """Lexicographically first ``x_1 < ... < x_k <= bound`` with every finite sum in ``s``."""
    if k < 1 or bound < 1:
        raise PreconditionError("need k >= 1 and bound >= 1")
    bounds = {"k": k, "bound": bound}
    cands = s.enumerate((1, bound))
    ticker = _Budget(budget)
    chosen: list[int] = []

    def dfs(start: int, sums: frozenset) -> bool | None:
        if len(chosen) == k:
            return True
        for idx in range(start, len(cands)):
            if ticker.tick():
                return None
            x = cands[idx]
            new = {x + t for t in sums}
            if all(v in s for v in new):
                chosen.append(x)
                r = dfs(idx + 1, sums | new | {x})
                if r is not False:
                    return r
                chosen.pop()
        return False

    res = dfs(0, frozenset())
    if res is None:
        return WitnessReport("ip", INCONCLUSIVE, [], dict(bounds, nodes=ticker.used))
    if res:
        return WitnessReport("ip", FOUND, list(chosen), bounds)
    return WitnessReport("ip", EXHAUSTED, [], bounds)


def find_delta_witness(s: SetDescriptor, k: int, bound: int, budget: int | None = None) -> WitnessReport:
    """Lexicographically first ``x_1 < ... < x_k <= bound`` with every forward difference in ``s``."""
    if k < 2 or bound < 1:
        raise PreconditionError("need k >= 2 and bound >= 1")
    bounds = {"k": k, "bound": bound}
    steps = s.enumerate((1, max(bound - 1, 1))) if bound > 1 else []
    ticker = _Budget(budget)
    chosen: list[int] = []

    def dfs() -> bool | None:
        if len(chosen) == k:
            return True
        last = chosen[-1]
        for d in steps:
            x = last + d
            if x > bound:
                break
            if ticker.tick():
                return None
            if all((x - y) in s for y in chosen[:-1]):
                chosen.append(x)
                r = dfs()
                if r is not False:
                    return r
                chosen.pop()
        return False

    # differences are translation invariant: a witness exists iff one starts at 1
    chosen[:] = [1]
    r = dfs()
    if r is None:
        return WitnessReport("delta", INCONCLUSIVE, [], dict(bounds, nodes=ticker.used))
    if r:
        return WitnessReport("delta", FOUND, list(chosen), bounds)
    return WitnessReport("delta", EXHAUSTED, [], bounds)


def thick_run(s: SetDescriptor, L: int, window) -> WitnessReport:
    """First run of ``L`` consecutive members inside ``window``; witness is ``[start, end]``."""
    if L < 1:
        raise PreconditionError("L must be >= 1")
    w = as_window(window)
    bounds = {"L": L, "window": [w.lo, w.hi]}
    xs = s.enumerate(w)
    run_start, run_len, prev = None, 0, None
    for x in xs:
        if prev is not None and x == prev + 1:
            run_len += 1
        else:
            run_start, run_len = x, 1
        if run_len >= L:
            return WitnessReport("thick", FOUND, [run_start, run_start + L - 1], bounds)
        prev = x
    return WitnessReport("thick", EXHAUSTED, [], bounds)


def syndetic_max_gap(s: SetDescriptor, window) -> int | None:
    """Largest gap between consecutive members inside ``window``.

    Gaps cut off by the window edges are not counted. ``None`` when the
    window holds fewer than two members.
    """
    xs = s.enumerate(as_window(window))
    if len(xs) < 2:
        return None
    return max(b - a for a, b in zip(xs, xs[1:]))


def pws_witness(s: SetDescriptor, g: int, L: int, window) -> WitnessReport:
    """Members ``x <= y`` with ``y - x >= L`` and every gap between them at most ``g``.

    Returns the first such ``x`` together with the nearest qualifying ``y``.
    """
    if g < 1 or L < 1:
        raise PreconditionError("need g >= 1 and L >= 1")
    w = as_window(window)
    bounds = {"g": g, "L": L, "window": [w.lo, w.hi]}
    xs = s.enumerate(w)
    start = 0
    for i in range(len(xs)):
        if i > 0 and xs[i] - xs[i - 1] > g:
            start = i
        # xs[start] is the earliest member chained to xs[i] by gaps <= g
        if xs[i] - xs[start] >= L:
            # earliest left end is the run start; nearest right end for it
            lo = xs[start]
            j = start
            while xs[j] - lo < L:
                j += 1
            return WitnessReport("pws", FOUND, [lo, xs[j]], bounds)
    return WitnessReport("pws", EXHAUSTED, [], bounds)


def block_witness_2d(plane: PlaneSet, L: int, window) -> WitnessReport:
    """Lower-left corner (least in ``(m, n)`` order) of an ``L x L`` block inside ``plane``."""
    if L < 1:
        raise PreconditionError("L must be >= 1")
    r = as_rect(window)
    bounds = {"L": L, "window": [r.m_lo, r.m_hi, r.n_lo, r.n_hi]}
    rows, cols = r.shape
    if L > rows or L > cols:
        return WitnessReport("block_2d", EXHAUSTED, [], bounds)
    grid = plane.grid(r).astype(np.int64)
    acc = np.zeros((rows + 1, cols + 1), dtype=np.int64)
    acc[1:, 1:] = grid.cumsum(0).cumsum(1)
    sums = acc[L:, L:] - acc[:-L, L:] - acc[L:, :-L] + acc[:-L, :-L]
    hits = np.argwhere(sums == L * L)
    if len(hits) == 0:
        return WitnessReport("block_2d", EXHAUSTED, [], bounds)
    i, j = hits[0]
    return WitnessReport("block_2d", FOUND, [[r.m_lo + int(i), r.n_lo + int(j)]], bounds)


# -- replay ------------------------------------------------------------------

def replay(report: WitnessReport, target) -> bool:
    """Re-check a found witness against the defining predicate."""
    if not report.found:
        raise PreconditionError("only witness_found reports can be replayed")
    w = report.witness
    b = report.bounds
    if report.kind == "ip":
        return all(v in target for v in fs_closure(w))
    if report.kind == "delta":
        return all(v in target for v in delta_of(w))
    if report.kind == "thick":
        start, end = w
        return end - start + 1 >= b["L"] and all(x in target for x in range(start, end + 1))
    if report.kind == "pws":
        lo, hi = w
        xs = target.enumerate((lo, hi))
        return (xs and xs[0] == lo and xs[-1] == hi and hi - lo >= b["L"]
                and all(y - x <= b["g"] for x, y in zip(xs, xs[1:])))
    if report.kind == "block_2d":
        (m0, n0), = w
        L = b["L"]
        return all((m, n) in target for m in range(m0, m0 + L) for n in range(n0, n0 + L))
    raise PreconditionError(f"unknown witness kind {report.kind!r}")
