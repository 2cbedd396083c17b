"""Independent replay of the claim records attached to a construction.

Replays only read the frozen data in a :class:`ConstructionResult` (or its
JSON form) and route each claim through one family or fiber operation.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .constructions import (ConstructionResult, beta_holds, beta_inequality,
                            delta_free_solution_count, gap_divergence_evidence,
                            n_sum_free_check, syndetic_preservation_check)
from .errors import BoundsError
from .families import block_witness_2d, delta_of_2d, fs_closure_2d
from .fiber import BlockUnion, Rect
from .polynomials import IntPolynomial
from .sets import _params_to_json

VERIFIED = "verified"
VIOLATED = "violated"
INCONCLUSIVE = "inconclusive"


@dataclass
class ClaimOutcome:
    id: str
    kind: str
    status: str
    detail: str = ""
    witness: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "status": self.status,
            "detail": self.detail,
            "witness": _params_to_json(list(self.witness)),
        }


def _first_in_fiber(fiber, points):
    """First point that IS in the fiber, or None."""
    for pt in points:
        if pt in fiber:
            return pt
    return None


def _replay_fs_exclusion(res, claim):
    pts = fs_closure_2d([tuple(g) for g in res.generators])
    hit = _first_in_fiber(res.fiber(), pts)
    if hit is not None:
        return VIOLATED, f"finite sum {hit} lies in the fiber", [list(hit)]
    return VERIFIED, f"{len(pts)} finite-sum points excluded", []


def _replay_delta_exclusion(res, claim):
    pts = delta_of_2d([tuple(g) for g in res.generators])
    hit = _first_in_fiber(res.fiber(), pts)
    if hit is not None:
        return VIOLATED, f"difference {hit} lies in the fiber", [list(hit)]
    n = len(res.generators)
    return VERIFIED, f"{n * (n - 1) // 2} difference pairs ({len(pts)} points) excluded", []


def _replay_gap_divergence(res, claim):
    ev = gap_divergence_evidence(res.S, claim["start"], claim["doublings"])
    minima = [g for _, _, g in ev.windows]
    if ev.increasing:
        return VERIFIED, f"window minima {minima}", []
    valid = [g for g in minima if g is not None]
    if len(valid) < 2:
        return INCONCLUSIVE, f"too few measurable windows: {minima}", []
    return VIOLATED, f"window minima not increasing: {minima}", []


def _replay_n_sum_free(res, claim):
    prefix = claim["prefix"]
    bad = [x for x in prefix if x not in res.S]
    if bad:
        return VIOLATED, f"prefix element {bad[0]} is not in S", [bad[0]]
    rep = n_sum_free_check(prefix, claim["n"], res.S)
    if rep.found:
        idx = rep.witness
        return VIOLATED, f"sum of prefix indices {idx} lies in S", idx
    return VERIFIED, f"all C({len(prefix)}, {claim['n']}) sums avoid S", []


def _replay_beta(res, claim):
    p = res.polys[0]
    beta = claim["beta"]
    for a in claim["alphas"]:
        if a <= beta or not beta_holds(p, a):
            lhs, rhs = beta_inequality(p, a)
            return VIOLATED, f"alpha = {a}: {lhs} vs {rhs}", [a]
    return VERIFIED, f"inequality holds for alpha in {claim['alphas']}", []


def _replay_solution_count(res, claim):
    q = IntPolynomial(tuple(claim["coeffs"]))
    counts = []
    for d in claim["ds"]:
        sc = delta_free_solution_count(q, d, claim["bound"])
        counts.append((d, sc.count))
        if not sc.stabilized:
            return INCONCLUSIVE, f"d = {d}: {sc.half_count} -> {sc.count} not stable", [d]
    return VERIFIED, f"stable counts {counts}", []


def _replay_sum_free(res, claim):
    D = res.S.enumerate(res.enumeration_window)
    members = set(D)
    for i, a in enumerate(D):
        for b in D[i:]:
            if a + b in members:
                return VIOLATED, f"{a} + {b} lies in D", [a, b]
    return VERIFIED, f"{len(D)} elements, {len(D) * (len(D) + 1) // 2} sums checked", []


def _replay_thick_blocks(res, claim):
    rects = [Rect(*b) for b in claim["blocks"]]
    plane = BlockUnion(tuple(rects), res.fiber_universe)
    first = claim.get("first_size", 1)
    for i, r in enumerate(rects):
        L = first + i
        rep = block_witness_2d(plane, L, r)
        if not rep.found:
            return VIOLATED, f"no {L}x{L} square inside {r}", [i]
    return VERIFIED, f"squares of side {first}..{first + len(rects) - 1} found", []


def _replay_block_exclusion(res, claim):
    fiber = res.fiber()
    total = 0
    for b in claim["blocks"]:
        r = Rect(*b)
        hit = _first_in_fiber(fiber, r.points())
        if hit is not None:
            return VIOLATED, f"block point {hit} lies in the fiber", [list(hit)]
        total += r.shape[0] * r.shape[1]
    return VERIFIED, f"{total} block points excluded", []


def _replay_block_in_fiber(res, claim):
    r = Rect(*claim["rect"])
    fiber = res.fiber()
    missing = [pt for pt in r.points() if pt not in fiber]
    if missing:
        return VIOLATED, f"{missing[0]} is not in the fiber", [list(missing[0])]
    rep = block_witness_2d(fiber, claim["L"], r)
    if not rep.found:
        return VIOLATED, "block search failed", []
    return VERIFIED, f"all {r.shape[0] * r.shape[1]} points in the fiber", []


def _replay_slice_gaps(res, claim):
    chk = syndetic_preservation_check(res.A, res.polys[0], Rect(*claim["rect"]), claim["g"])
    if chk.inconclusive_slices:
        return INCONCLUSIVE, f"vacuous slices {chk.inconclusive_slices[:5]}", []
    if not chk.ok:
        worst = max(chk.slice_gaps, key=chk.slice_gaps.get)
        return VIOLATED, f"slice n = {worst} has gap {chk.slice_gaps[worst]}", [worst]
    if claim.get("exact"):
        off = [n for n, g in chk.slice_gaps.items() if g != claim["g"]]
        if off:
            return VIOLATED, f"slice n = {off[0]} has gap {chk.slice_gaps[off[0]]}", [off[0]]
    return VERIFIED, f"max slice gap {chk.max_slice_gap} over {len(chk.slice_gaps)} slices", []


def _replay_region_disjoint(res, claim):
    r = Rect(*claim["rect"])
    hit = _first_in_fiber(res.fiber(), r.points())
    if hit is not None:
        return VIOLATED, f"{hit} lies in the fiber", [list(hit)]
    return VERIFIED, f"{r.shape[0] * r.shape[1]} region points miss the fiber", []


def _replay_images_disjoint(res, claim):
    rects = [Rect(*b) for b in claim["blocks"]]
    p1, p2 = res.polys
    img1 = {m + p1(n) for r in rects for m, n in r.points()}
    img2 = {m + p2(n) for r in rects for m, n in r.points()}
    common = sorted(img1 & img2)
    if common:
        return VIOLATED, f"{common[0]} lies in both images", common[:1]
    return VERIFIED, f"|B'_1| = {len(img1)}, |B'_2| = {len(img2)}, no overlap", []


_REPLAYERS = {
    "fs_exclusion": _replay_fs_exclusion,
    "delta_exclusion": _replay_delta_exclusion,
    "gap_divergence": _replay_gap_divergence,
    "n_sum_free": _replay_n_sum_free,
    "beta_certificate": _replay_beta,
    "solution_count": _replay_solution_count,
    "sum_free": _replay_sum_free,
    "thick_blocks": _replay_thick_blocks,
    "block_exclusion": _replay_block_exclusion,
    "block_in_fiber": _replay_block_in_fiber,
    "slice_gaps": _replay_slice_gaps,
    "region_disjoint": _replay_region_disjoint,
    "images_disjoint": _replay_images_disjoint,
}

CLAIM_KINDS = tuple(sorted(_REPLAYERS))


def replay_claim(res: ConstructionResult, claim: dict) -> ClaimOutcome:
    kind = claim["kind"]
    fn = _REPLAYERS.get(kind)
    if fn is None:
        return ClaimOutcome(claim["id"], kind, INCONCLUSIVE, f"unknown claim kind {kind!r}")
    try:
        status, detail, witness = fn(res, claim)
    except BoundsError as exc:
        return ClaimOutcome(claim["id"], kind, INCONCLUSIVE, str(exc))
    return ClaimOutcome(claim["id"], kind, status, detail, witness)


def replay_all(res: ConstructionResult) -> list[ClaimOutcome]:
    return [replay_claim(res, c) for c in res.claims]
