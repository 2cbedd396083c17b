"""Deterministic generators for the explicit constructions.

Each generator returns a :class:`ConstructionResult` carrying the sets it
built and a list of claim records. Claims are replayed independently by
:mod:`largeness.claims`; the generators never mark their own work.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Sequence

from . import __version__
from .errors import BoundsError, BudgetExceeded, PreconditionError
from .families import WitnessReport, EXHAUSTED, FOUND, fs_closure, search_budget
from .fiber import INTEGERS2, BlockUnion, FiberBacked, Rect
from .polynomials import (IntPolynomial, as_poly, as_polys, choose_shift_exponent,
                          derivative, monotone_threshold)
from .sets import (INTEGERS, NATURALS, Complement, ConstructionBacked,
                   IntervalUnion, SetDescriptor, _params_from_json, _params_to_json,
                   descriptor_from_json, gaps_of, multiples)

THEOREMS = ("thick", "syndetic-d1", "ip-star", "ipn-star", "delta-star",
            "central-star", "remark1", "remark2")


@dataclass
class ConstructionResult:
    name: str
    polys: list[IntPolynomial]
    parameters: dict
    generators: list
    S: SetDescriptor | None
    A: SetDescriptor | None
    claims: list[dict]
    fiber_universe: str = "naturals2"
    enumeration_window: tuple[int, int] | None = None

    def fiber(self) -> FiberBacked:
        return FiberBacked(self.A, tuple(self.polys), self.fiber_universe)

    def claim(self, claim_id: str) -> dict:
        for c in self.claims:
            if c["id"] == claim_id:
                return c
        raise KeyError(claim_id)

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "polys": [p.to_json() for p in self.polys],
            "parameters": _params_to_json(self.parameters),
            "generators": _params_to_json(self.generators),
            "S": self.S.to_json() if self.S is not None else None,
            "A": self.A.to_json() if self.A is not None else None,
            "fiber_universe": self.fiber_universe,
            "claims": _params_to_json(self.claims),
            "provenance": {"package": "largeness", "version": __version__},
        }
        if self.S is not None and self.enumeration_window is not None:
            lo, hi = self.enumeration_window
            out["S_enumeration"] = {
                "window": [str(lo), str(hi)],
                "elements": [str(x) for x in self.S.enumerate((lo, hi))],
            }
        return out

    @classmethod
    def from_json(cls, obj: dict) -> ConstructionResult:
        window = obj.get("S_enumeration", {}).get("window")
        return cls(
            name=obj["name"],
            polys=[IntPolynomial.from_json(p) for p in obj["polys"]],
            parameters=_params_from_json(obj["parameters"]),
            generators=_params_from_json(obj["generators"]),
            S=descriptor_from_json(obj["S"]) if obj.get("S") else None,
            A=descriptor_from_json(obj["A"]) if obj.get("A") else None,
            claims=_params_from_json(obj["claims"]),
            fiber_universe=obj.get("fiber_universe", "naturals2"),
            enumeration_window=tuple(int(v) for v in window) if window else None,
        )


def _require_counterexample_poly(p: IntPolynomial) -> None:
    if p.degree < 2:
        raise PreconditionError(
            f"{p} has degree {p.degree}; the counterexamples need max deg p_i >= 2")
    if p.lead <= 0:
        raise PreconditionError(f"{p} needs a positive leading coefficient")


# -- thick sets ----------------------------------------------------------------

@dataclass(frozen=True)
class PowerBlocks:
    """Thick set ``A = union of [base^n, base^n + n]`` over ``n >= 1``."""

    base: int = 2

    def __call__(self, n: int) -> int:
        return self.base ** n

    def set_upto(self, n_max: int) -> IntervalUnion:
        return IntervalUnion(tuple((self(n), self(n) + n) for n in range(1, n_max + 1)))


@dataclass(frozen=True)
class ThickBlock:
    b: int
    n_N: int
    N: int
    N_min: int
    N_max: int

    @property
    def rect(self) -> Rect:
        return Rect(self.b, self.b + self.N, 0, self.N)


def thick_block_witness(blocks: Callable[[int], int], polys, N: int,
                        max_n: int = 100_000) -> ThickBlock:
    """Block ``[b, b+N] x [0, N]`` inside the fiber of a thick set.

    ``blocks(n) = a_n`` with ``[a_n, a_n + n]`` contained in the thick set.
    Picks the smallest ``n(N)`` and then the smallest ``b >= 1`` with
    ``a_n < b + N_min`` and ``b + N_max + N < a_n + n``.
    """
    polys = as_polys(polys)
    if N < 1:
        raise PreconditionError("N must be >= 1")
    vals = [p(n) for p in polys for n in range(N + 1)]
    n_min, n_max = min(vals), max(vals)
    for n in range(1, max_n + 1):
        a = blocks(n)
        b = max(1, a - n_min + 1)
        if b + n_max + N < a + n:
            return ThickBlock(b, n, N, n_min, n_max)
    raise BoundsError(f"no admissible n(N) up to {max_n}")


def thick_construction(polys, N: int, base: int = 2) -> ConstructionResult:
    polys = as_polys(polys)
    rule = PowerBlocks(base)
    blk = thick_block_witness(rule, polys, N)
    A = rule.set_upto(blk.n_N)
    r = blk.rect
    claims = [{
        "id": "C1", "kind": "block_in_fiber",
        "description": f"[{r.m_lo},{r.m_hi}]x[{r.n_lo},{r.n_hi}] lies in the fiber",
        "rect": [r.m_lo, r.m_hi, r.n_lo, r.n_hi], "L": N + 1,
    }]
    params = {"N": N, "N_min": blk.N_min, "N_max": blk.N_max, "n_N": blk.n_N, "b": blk.b,
              "block_rule": f"{base}^n", "base": base}
    return ConstructionResult("thick", polys, params, [], None, A, claims, "naturals2")


# -- syndetic sets -----------------------------------------------------------

@dataclass
class SyndeticCheck:
    g: int
    max_slice_gap: int | None
    slice_gaps: dict[int, int]
    inconclusive_slices: list[int]

    @property
    def ok(self) -> bool:
        return self.max_slice_gap is not None and self.max_slice_gap <= self.g


def syndetic_preservation_check(A: SetDescriptor, p, window, g: int | None = None) -> SyndeticCheck:
    """Slice-wise gap check of the fiber ``{(m, n) in Z^2 : m + p(n) in A}``.

    ``g`` defaults to the largest gap of ``A`` over the shifted windows the
    slices read from.
    """
    p = as_poly(p)
    r = window if isinstance(window, Rect) else Rect(*window)
    fiber = FiberBacked(A, (p,), INTEGERS2)
    if g is None:
        shifts = [p(n) for n in range(r.n_lo, r.n_hi + 1)]
        lo, hi = r.m_lo + min(shifts), r.m_hi + max(shifts)
        xs = A.enumerate((lo, hi))
        if len(xs) < 2:
            raise PreconditionError("A has fewer than two members over the shifted windows")
        g = max(b - a for a, b in zip(xs, xs[1:]))
    slice_gaps: dict[int, int] = {}
    vacuous = []
    for n in range(r.n_lo, r.n_hi + 1):
        ms = fiber.slice_members(n, r.m_lo, r.m_hi)
        if len(ms) < 2:
            vacuous.append(n)
            continue
        slice_gaps[n] = max(b - a for a, b in zip(ms, ms[1:]))
    top = max(slice_gaps.values()) if slice_gaps else None
    return SyndeticCheck(g, top, slice_gaps, vacuous)


def syndetic_construction(p, modulus: int = 5, radius: int = 50) -> ConstructionResult:
    """A = multiples of ``modulus`` in Z, checked on ``[-radius, radius]^2``."""
    p = as_poly(p)
    ns = range(-radius, radius + 1)
    span = max(abs(p(n)) for n in ns) + radius + modulus
    A = multiples(modulus, -span, span, INTEGERS)
    rect = [-radius, radius, -radius, radius]
    claims = [{
        "id": "C1", "kind": "slice_gaps",
        "description": f"every slice of the fiber has m-gap at most {modulus}",
        "rect": rect, "g": modulus, "exact": True,
    }]
    params = {"modulus": modulus, "radius": radius, "A_span": span}
    return ConstructionResult("syndetic-d1", [p], params, [], None, A, claims, "integers2")


@dataclass(frozen=True)
class NegLeadWitness:
    n_N: int
    region: Rect | None
    min_A: int
    status: str   # "certified" or "inconclusive"


def syndetic_failure_witness_neg_lead(A: SetDescriptor, p, N: int, cap: int) -> NegLeadWitness:
    """Region ``{1 <= m <= N, n_N < n <= cap}`` missed by the fiber of ``A`` over N^2.

    ``n_N`` is the least threshold with ``min(A) - p(n) > N`` for every
    ``n`` in ``(n_N, cap]``.
    """
    from .sets import min_element

    p = as_poly(p)
    if p.lead >= 0:
        raise PreconditionError("the leading coefficient must be negative")
    if N < 1 or cap < 1:
        raise PreconditionError("need N >= 1 and cap >= 1")
    a_min = min_element(A)
    if a_min is None:
        raise PreconditionError("A has no members")
    n = cap
    while n >= 1 and a_min - p(n) > N:
        n -= 1
    if n == cap:
        return NegLeadWitness(cap, None, a_min, "inconclusive")
    return NegLeadWitness(n, Rect(1, N, n + 1, cap), a_min, "certified")


def remark2_construction(p="-n^2", N: int = 10, cap: int = 100) -> ConstructionResult:
    p = as_poly(p)
    A = multiples(2, 2, max(2 * N, 100), NATURALS)
    w = syndetic_failure_witness_neg_lead(A, p, N, cap)
    params = {"N": N, "cap": cap, "n_N": w.n_N, "min_A": w.min_A, "status": w.status}
    claims = []
    if w.region is not None:
        r = w.region
        claims.append({
            "id": "C1", "kind": "region_disjoint",
            "description": f"[1,{N}]x({w.n_N},{cap}] misses the fiber",
            "rect": [r.m_lo, r.m_hi, r.n_lo, r.n_hi],
        })
    return ConstructionResult("remark2", [p], params, [], None, A, claims, "naturals2")


@dataclass
class TwoPolyBlocks:
    polys: tuple[IntPolynomial, IntPolynomial]
    blocks: list[Rect]

    @property
    def B(self) -> BlockUnion:
        return BlockUnion(tuple(self.blocks), INTEGERS2)

    def image(self, i: int) -> set[int]:
        p = self.polys[i]
        return {m + p(n) for r in self.blocks for (m, n) in r.points()}


def syndetic_failure_witness_d2(cap: int, polys=("n^2", "2n^2"), budget: int | None = None) -> TwoPolyBlocks:
    """Square blocks ``[1, 1+k] x [n_k, n_k+k]`` whose images under the two polynomials never meet.

    ``n_k`` is chosen greedily, scanning upward; images are compared by
    their exact hulls during the search and replayed pointwise afterwards.
    """
    p1, p2 = as_polys(polys)
    if p1 == p2:
        raise PreconditionError("the two polynomials must differ")
    budget = search_budget() if budget is None else budget
    hulls: tuple[list, list] = ([], [])
    blocks: list[Rect] = []
    n_next, tried = 1, 0

    def hull(p, r):
        vals = [p(n) for n in range(r.n_lo, r.n_hi + 1)]
        return r.m_lo + min(vals), r.m_hi + max(vals)

    def meets(iv, ivs):
        return any(iv[0] <= b and a <= iv[1] for a, b in ivs)

    for k in range(1, cap + 1):
        n = n_next
        while True:
            tried += 1
            if tried > budget:
                raise BudgetExceeded(f"greedy block search exceeded {budget} candidates")
            r = Rect(1, 1 + k, n, n + k)
            h1, h2 = hull(p1, r), hull(p2, r)
            if not (h1[0] <= h2[1] and h2[0] <= h1[1]) and not meets(h1, hulls[1]) \
                    and not meets(h2, hulls[0]):
                break
            n += 1
        blocks.append(r)
        hulls[0].append(h1)
        hulls[1].append(h2)
        n_next = n + k + 1
    return TwoPolyBlocks((p1, p2), blocks)


def remark1_construction(cap: int = 5, polys=("n^2", "2n^2")) -> ConstructionResult:
    res = syndetic_failure_witness_d2(cap, polys)
    params = {"cap": cap, "blocks": [[r.m_lo, r.m_hi, r.n_lo, r.n_hi] for r in res.blocks]}
    claims = [{
        "id": "C1", "kind": "images_disjoint",
        "description": "the images of B under p_1 and p_2 are disjoint",
        "blocks": params["blocks"],
    }, {
        "id": "C2", "kind": "thick_blocks",
        "description": "B holds a (k+1)x(k+1) block for every k <= cap",
        "blocks": params["blocks"], "first_size": 2,
    }]
    return ConstructionResult("remark1", list(res.polys), params, [], None, None, claims,
                              "integers2")


# -- gap evidence --------------------------------------------------------------

@dataclass
class GapEvidence:
    start: int
    doublings: int
    windows: list[tuple[int, int, int | None]]
    increasing: bool

    @property
    def flagged(self) -> list[int]:
        return [j for j, (_, _, g) in enumerate(self.windows) if g is None]


def gap_divergence_evidence(S: SetDescriptor, start: int, doublings: int) -> GapEvidence:
    """Minimum gap of ``S`` on each window ``[start 2^j, start 2^(j+1))``.

    A gap is charged to the window holding its right end; the first member
    at or above ``start`` has no left neighbour and contributes nothing.
    Windows without any gap are flagged (``None``). ``increasing`` requires
    at least two unflagged windows with strictly increasing minima.
    """
    if start < 1 or doublings < 1:
        raise PreconditionError("need start >= 1 and doublings >= 1")
    xs = S.enumerate((start, start * (1 << doublings) - 1))
    pairs = gaps_of(xs)
    windows = []
    for j in range(doublings):
        lo, hi = start << j, (start << (j + 1)) - 1
        gs = [g for a, g in pairs if lo <= a + g <= hi]
        windows.append((lo, hi, min(gs) if gs else None))
    minima = [g for _, _, g in windows if g is not None]
    increasing = len(minima) >= 2 and all(a < b for a, b in zip(minima, minima[1:]))
    return GapEvidence(start, doublings, windows, increasing)


# -- IP* -----------------------------------------------------------------------

def _measurable_doublings(S: SetDescriptor, start: int, least: int, ceiling: int = 256) -> int:
    """Fewest doublings (at least ``least``) giving three windows with a measurable gap."""
    d = least
    while d < ceiling:
        ev = gap_divergence_evidence(S, start, d)
        if sum(g is not None for _, _, g in ev.windows) >= 3:
            return d
        d += 1
    return d


def ipstar_counterexample(p, index_cap: int, doublings: int = 6) -> ConstructionResult:
    p = as_poly(p)
    _require_counterexample_poly(p)
    if not 1 <= index_cap <= 24:
        raise PreconditionError("index_cap must be in [1, 24]")
    N = choose_shift_exponent(p)
    gens = [(1 << (i * N), 1 << (i * N)) for i in range(1, index_cap + 1)]
    S = ConstructionBacked("ip_star", {"coeffs": list(p.coeffs), "N": N}, NATURALS)
    A = Complement(S, NATURALS)
    q = p.plus_identity()
    images = sorted(q(t) for t in fs_closure([g for g, _ in gens]))
    positive = [v for v in images if v >= 1]
    start = positive[0] if positive else 1
    doublings = _measurable_doublings(S, start, doublings)
    claims = [{
        "id": "C1", "kind": "gap_divergence",
        "description": "per-window minimum gaps of S strictly increase",
        "start": start, "doublings": doublings,
    }, {
        "id": "C2", "kind": "fs_exclusion",
        "description": f"all {2 ** index_cap - 1} finite sums of the generators miss the fiber",
    }]
    params = {"N": N, "index_cap": index_cap, "monotone_threshold": monotone_threshold(p),
              "S_prefix": positive}
    hi = max(positive[-1] if positive else 1, 250)
    return ConstructionResult("ip-star", [p], params, [list(g) for g in gens], S, A, claims,
                              "naturals2", (1, hi))


# -- IP_n* ---------------------------------------------------------------------

def tower(i: int) -> int:
    """``2^(2^i)``."""
    return 1 << (1 << i)


def beta_inequality(p: IntPolynomial, alpha: int) -> tuple[int, int]:
    """Both sides of ``p(2^2^a + 2) > p(2^2^a) + p(2^2^1 + ... + 2^2^(a-1))``."""
    big = tower(alpha)
    lhs = p(big + 2)
    rhs = p(big) + p(sum(tower(i) for i in range(1, alpha)))
    return lhs, rhs


def beta_holds(p: IntPolynomial, alpha: int) -> bool:
    dp = derivative(p)
    lhs, rhs = beta_inequality(p, alpha)
    return p(alpha) > 0 and dp(alpha) > 0 and lhs > rhs


def choose_beta(p: IntPolynomial, index_cap: int, ceiling: int = 64) -> int:
    """Smallest ``beta >= 1`` whose certificate holds for every alpha in ``(beta, beta + index_cap]``."""
    for beta in range(1, ceiling + 1):
        if all(beta_holds(p, a) for a in range(beta + 1, beta + index_cap + 1)):
            return beta
    raise BoundsError(f"no beta found up to {ceiling}")


def ipnstar_counterexample(p, index_cap: int, beta_ceiling: int = 64) -> ConstructionResult:
    p = as_poly(p)
    _require_counterexample_poly(p)
    if not 1 <= index_cap <= 8:
        raise PreconditionError("index_cap must be in [1, 8]")
    beta = choose_beta(p, index_cap, beta_ceiling)
    gens = [(tower(i + beta), tower(i + beta)) for i in range(1, index_cap + 1)]
    S = ConstructionBacked("ipn_star", {"coeffs": list(p.coeffs), "beta": beta}, NATURALS)
    A = Complement(S, NATURALS)
    q = p.plus_identity()
    prefix = sorted(q(t) for t in fs_closure([g for g, _ in gens]))
    alphas = list(range(beta + 1, beta + index_cap + 1))
    claims = [{
        "id": "C0", "kind": "beta_certificate",
        "description": f"beta = {beta} certified for alpha in {alphas[0]}..{alphas[-1]}",
        "beta": beta, "alphas": alphas,
    }, {
        "id": "C1", "kind": "n_sum_free",
        "description": "no sum of two distinct materialized elements of S lies in S",
        "n": 2, "prefix": prefix,
    }, {
        "id": "C2", "kind": "fs_exclusion",
        "description": f"all {2 ** index_cap - 1} finite sums of the generators miss the fiber",
    }]
    params = {"beta": beta, "index_cap": index_cap, "certificate_scope": alphas,
              "S_prefix": prefix}
    return ConstructionResult("ipn-star", [p], params, [list(g) for g in gens], S, A, claims,
                              "naturals2", (1, 10 ** 6))


def n_sum_free_check(prefix: Sequence[int], n: int, S: SetDescriptor,
                     budget: int | None = None) -> WitnessReport:
    """Look for distinct indices whose elements sum into ``S``.

    ``exhausted`` means the sum-freeness hypothesis holds on the prefix.
    """
    if n < 2:
        raise PreconditionError("n must be >= 2")
    xs = list(prefix)
    budget = search_budget() if budget is None else budget
    from math import comb

    if comb(len(xs), n) > budget:
        raise BudgetExceeded(f"C({len(xs)}, {n}) exceeds the budget {budget}")
    bounds = {"n": n, "prefix_size": len(xs)}
    for idx in combinations(range(len(xs)), n):
        if sum(xs[i] for i in idx) in S:
            return WitnessReport("n_sum", FOUND, list(idx), bounds)
    return WitnessReport("n_sum", EXHAUSTED, [], bounds)


# -- Delta* --------------------------------------------------------------------

@dataclass
class SolutionCount:
    count: int
    half_count: int
    stabilized: bool
    solutions: list[tuple[int, int]] = field(default_factory=list)


def delta_free_solution_count(p, d: int, bound: int) -> SolutionCount:
    """Integer pairs ``|x|, |y| <= bound`` with ``p(x) - p(y) = d``.

    Stabilized when the count at ``bound`` equals the count at ``bound // 2``.
    """
    p = as_poly(p)
    if p.degree < 2:
        raise PreconditionError("degree must be >= 2")
    if d == 0:
        raise PreconditionError("d must be nonzero")

    def solve(b):
        by_value: dict[int, list[int]] = {}
        for y in range(-b, b + 1):
            by_value.setdefault(p(y), []).append(y)
        return sorted((x, y) for x in range(-b, b + 1) for y in by_value.get(p(x) - d, ()))

    sols = solve(bound)
    half = solve(bound // 2)
    return SolutionCount(len(sols), len(half), len(sols) == len(half), sols)


def deltastar_counterexample(p, count: int, solution_bound: int = 200) -> ConstructionResult:
    p = as_poly(p)
    _require_counterexample_poly(p)
    if count < 2:
        raise PreconditionError("count must be >= 2")
    gens = [(i, i) for i in range(1, count + 1)]
    diffs = list(range(1, count))
    S = ConstructionBacked("delta_star", {"coeffs": list(p.coeffs), "differences": diffs},
                           INTEGERS)
    A = Complement(S, INTEGERS)
    q = p.plus_identity()
    probe = sorted({q(d) for d in diffs} - {0})[:3]
    claims = [{
        "id": "C1", "kind": "delta_exclusion",
        "description": f"all {count * (count - 1) // 2} difference points miss the fiber",
    }, {
        "id": "C2", "kind": "solution_count",
        "description": "q(x) - q(y) = d has a stable, finite solution count for q = p + n",
        "coeffs": list(q.coeffs), "ds": probe, "bound": solution_bound,
    }]
    values = sorted({q(d) for d in diffs})
    params = {"count": count, "universe": "integers", "S_values": values}
    return ConstructionResult("delta-star", [p], params, [list(g) for g in gens], S, A, claims,
                              "naturals2", (min(values), max(values)))


# -- central* ------------------------------------------------------------------

def block_images(p: IntPolynomial, s: int, n: int) -> set[int]:
    vals = [p(nu) for nu in range(s, s + n + 1)]
    return {v + mu for v in vals for mu in range(s, s + n + 1)}


def centralstar_counterexample(p, n_blocks: int, budget: int | None = None) -> ConstructionResult:
    """Greedy thick set of square blocks whose polynomial image ``D`` is sum-free.

    Block n is ``[s_n, s_n + n]^2``; ``s_n`` is the least value passing the
    sum-freeness oracle and ``min D_n > 2 max D_(n-1)``.
    """
    p = as_poly(p)
    _require_counterexample_poly(p)
    if n_blocks < 0:
        raise PreconditionError("n_blocks must be >= 0")
    budget = search_budget() if budget is None else budget
    s0 = 1
    while p(s0) <= 1:
        s0 += 1
    starts = [s0]
    D = block_images(p, s0, 0)
    if any(a + b in D for a in D for b in D):
        raise PreconditionError("the first block is not sum-free")
    prev_max = max(D)
    rejected: list[int] = []
    tried = 0
    d_min = min(D)
    for n in range(1, n_blocks + 1):
        if n >= d_min:
            # every block n holds runs of n + 1 consecutive values, so some a and
            # a + min(D) both land in D_n whatever s_n is
            raise BoundsError(
                f"block {n} cannot be sum-free: its runs of {n + 1} consecutive values "
                f"contain a and a + {d_min} with {d_min} = min D; partial s = {starts}")
        s = starts[-1] + n
        forbidden = {a + b for a in D for b in D}
        while True:
            tried += 1
            if tried > budget:
                raise BudgetExceeded(f"block scan exceeded {budget} candidates; s = {starts}")
            Dn = block_images(p, s, n)
            if _accept_block(Dn, D, forbidden, prev_max):
                break
            if n == 1 and len(rejected) < 8:
                rejected.append(s)
            s += 1
        starts.append(s)
        D |= Dn
        prev_max = max(Dn)
    blocks = [[s, s + n, s, s + n] for n, s in enumerate(starts)]
    S = ConstructionBacked("central_star", {"coeffs": list(p.coeffs), "starts": starts}, NATURALS)
    A = Complement(S, NATURALS)
    claims = [{
        "id": "C1", "kind": "sum_free",
        "description": "a + b is never in D for a, b in D (doubles included)",
    }, {
        "id": "C2", "kind": "thick_blocks",
        "description": "each block n holds an (n+1)x(n+1) square",
        "blocks": blocks, "first_size": 1,
    }, {
        "id": "C3", "kind": "block_exclusion",
        "description": "every point of every block misses the fiber",
        "blocks": blocks,
    }]
    params = {"n_blocks": n_blocks, "starts": starts, "blocks": blocks,
              "first_block_rejections": rejected, "D_size": len(D)}
    return ConstructionResult("central-star", [p], params, [], S, A, claims, "naturals2",
                              (1, max(D)))


def _accept_block(Dn: set[int], D: set[int], forbidden: set[int], prev_max: int) -> bool:
    if min(Dn) <= 2 * prev_max:
        return False
    if Dn & forbidden:
        return False
    union = D | Dn
    for a in Dn:
        for b in union:
            if a + b in union:
                return False
    return True


# -- dispatcher ----------------------------------------------------------------

def construct(theorem: str, poly: str | None = None, cap: int | None = None, **kw) -> ConstructionResult:
    """Build the named construction with CLI-style arguments."""
    if theorem == "thick":
        return thick_construction([poly or "n^2"], cap or 3, kw.get("base", 2))
    if theorem == "syndetic-d1":
        return syndetic_construction(poly or "n^3", kw.get("modulus", 5), cap or 50)
    if theorem == "ip-star":
        return ipstar_counterexample(poly or "n^2", cap or 3)
    if theorem == "ipn-star":
        return ipnstar_counterexample(poly or "n^2", cap or 3)
    if theorem == "delta-star":
        return deltastar_counterexample(poly or "n^2", cap or 4)
    if theorem == "central-star":
        return centralstar_counterexample(poly or "n^2", cap if cap is not None else 4)
    if theorem == "remark1":
        return remark1_construction(cap or 5)
    if theorem == "remark2":
        return remark2_construction(poly or "-n^2", kw.get("N", 10), cap or 100)
    raise PreconditionError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
