"""Plane sets and the polynomial fiber ``{(m, n) : m + p_i(n) in A for all i}``."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, ParseError, PreconditionError
from .polynomials import IntPolynomial, as_polys
from .sets import SetDescriptor, as_window, descriptor_from_json


class PlaneUniverse(enum.Enum):
    """``naturals2`` allows ``m >= 1`` and ``n >= 0``; ``integers2`` is all of Z^2."""

    NATURALS2 = "naturals2"
    INTEGERS2 = "integers2"

    def contains(self, m: int, n: int) -> bool:
        return self is PlaneUniverse.INTEGERS2 or (m >= 1 and n >= 0)


NATURALS2 = PlaneUniverse.NATURALS2
INTEGERS2 = PlaneUniverse.INTEGERS2


@dataclass(frozen=True)
class Rect:
    """Closed rectangle ``[m_lo, m_hi] x [n_lo, n_hi]``."""

    m_lo: int
    m_hi: int
    n_lo: int
    n_hi: int

    def __post_init__(self):
        if self.m_lo > self.m_hi or self.n_lo > self.n_hi:
            raise DomainError(f"inverted rectangle {self}")

    @property
    def shape(self) -> tuple[int, int]:
        return self.m_hi - self.m_lo + 1, self.n_hi - self.n_lo + 1

    def points(self):
        for m in range(self.m_lo, self.m_hi + 1):
            for n in range(self.n_lo, self.n_hi + 1):
                yield (m, n)

    def __contains__(self, pt) -> bool:
        m, n = pt
        return self.m_lo <= m <= self.m_hi and self.n_lo <= n <= self.n_hi

    def to_json(self) -> list[str]:
        return [str(self.m_lo), str(self.m_hi), str(self.n_lo), str(self.n_hi)]

    @classmethod
    def from_json(cls, obj) -> Rect:
        return cls(*(int(v) for v in obj))


def as_rect(r) -> Rect:
    return r if isinstance(r, Rect) else Rect(*(int(v) for v in r))


class PlaneSet:
    universe: PlaneUniverse

    def member(self, pt) -> bool:
        m, n = pt
        if not self.universe.contains(m, n):
            raise DomainError(f"{pt} is outside {self.universe.value}")
        return self._member(m, n)

    def __contains__(self, pt) -> bool:
        m, n = pt
        return self.universe.contains(m, n) and self._member(m, n)

    def grid(self, rect) -> np.ndarray:
        """Boolean array indexed ``[m - m_lo, n - n_lo]``."""
        r = as_rect(rect)
        out = np.zeros(r.shape, dtype=bool)
        for i, m in enumerate(range(r.m_lo, r.m_hi + 1)):
            for j, n in enumerate(range(r.n_lo, r.n_hi + 1)):
                out[i, j] = (m, n) in self
        return out

    def points(self, rect) -> list[tuple[int, int]]:
        """Members inside ``rect``, sorted by ``(m, n)``."""
        r = as_rect(rect)
        return [pt for pt in r.points() if pt in self]

    def _member(self, m: int, n: int) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class ExplicitPoints(PlaneSet):
    pts: frozenset
    universe: PlaneUniverse = NATURALS2

    def __post_init__(self):
        object.__setattr__(self, "pts", frozenset((int(m), int(n)) for m, n in self.pts))
        object.__setattr__(self, "universe", PlaneUniverse(self.universe))

    def _member(self, m, n):
        return (m, n) in self.pts

    def to_json(self):
        return {
            "variant": "explicit_points",
            "universe": self.universe.value,
            "points": [[str(m), str(n)] for m, n in sorted(self.pts)],
        }


@dataclass(frozen=True)
class BlockUnion(PlaneSet):
    """Union of rectangles; overlapping rectangles are kept as given."""

    blocks: tuple[Rect, ...]
    universe: PlaneUniverse = NATURALS2

    def __post_init__(self):
        blocks = tuple(sorted({as_rect(b) for b in self.blocks},
                              key=lambda r: (r.m_lo, r.n_lo, r.m_hi, r.n_hi)))
        # drop rectangles contained in another one
        kept = [b for b in blocks
                if not any(o != b and o.m_lo <= b.m_lo and b.m_hi <= o.m_hi
                           and o.n_lo <= b.n_lo and b.n_hi <= o.n_hi for o in blocks)]
        object.__setattr__(self, "blocks", tuple(kept))
        object.__setattr__(self, "universe", PlaneUniverse(self.universe))

    def _member(self, m, n):
        return any((m, n) in b for b in self.blocks)

    def to_json(self):
        return {
            "variant": "block_union",
            "universe": self.universe.value,
            "blocks": [b.to_json() for b in self.blocks],
        }


@dataclass(frozen=True)
class FiberBacked(PlaneSet):
    """``{(m, n) : m + p(n) in A for every p in polys}``.

    Values outside A's universe (e.g. ``<= 0`` for a naturals set) are
    non-members rather than errors.
    """

    A: SetDescriptor
    polys: tuple[IntPolynomial, ...]
    universe: PlaneUniverse = NATURALS2

    def __post_init__(self):
        polys = tuple(as_polys(self.polys))
        if not polys:
            raise PreconditionError("fiber needs at least one polynomial")
        object.__setattr__(self, "polys", polys)
        object.__setattr__(self, "universe", PlaneUniverse(self.universe))

    def values(self, m: int, n: int) -> list[int]:
        return [m + p(n) for p in self.polys]

    def _member(self, m, n):
        return all((m + p(n)) in self.A for p in self.polys)

    def slice_members(self, n: int, lo: int, hi: int) -> list[int]:
        """``m`` in ``[lo, hi]`` with every ``m + p_i(n)`` in A."""
        if self.universe is NATURALS2:
            if n < 0:
                return []
            lo = max(lo, 1)
            if lo > hi:
                return []
        keep = None
        for p in self.polys:
            shift = p(n)
            vlo, vhi = lo + shift, hi + shift
            if self.A.universe.value == "naturals":
                vlo = max(vlo, 1)
                if vlo > vhi:
                    return []
            ms = {v - shift for v in self.A.enumerate((vlo, vhi))}
            keep = ms if keep is None else keep & ms
            if not keep:
                return []
        return sorted(keep)

    def grid(self, rect) -> np.ndarray:
        r = as_rect(rect)
        out = np.zeros(r.shape, dtype=bool)
        for j, n in enumerate(range(r.n_lo, r.n_hi + 1)):
            for m in self.slice_members(n, r.m_lo, r.m_hi):
                out[m - r.m_lo, j] = True
        return out

    def points(self, rect) -> list[tuple[int, int]]:
        r = as_rect(rect)
        pts = []
        for n in range(r.n_lo, r.n_hi + 1):
            pts.extend((m, n) for m in self.slice_members(n, r.m_lo, r.m_hi))
        return sorted(pts)

    def to_json(self):
        return {
            "variant": "fiber_backed",
            "universe": self.universe.value,
            "A": self.A.to_json(),
            "polys": [p.to_json() for p in self.polys],
        }


def plane_from_json(obj: dict) -> PlaneSet:
    try:
        variant = obj["variant"]
        u = PlaneUniverse(obj.get("universe", "naturals2"))
        if variant == "explicit_points":
            return ExplicitPoints(frozenset((int(m), int(n)) for m, n in obj["points"]), u)
        if variant == "block_union":
            return BlockUnion(tuple(Rect.from_json(b) for b in obj["blocks"]), u)
        if variant == "fiber_backed":
            return FiberBacked(descriptor_from_json(obj["A"]),
                               tuple(IntPolynomial.from_json(p) for p in obj["polys"]), u)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad plane set: {exc}") from exc
    raise ParseError(f"unknown plane set variant {obj.get('variant')!r}")


def poly_fiber(A: SetDescriptor, polys: Sequence, window=None,
               universe=NATURALS2) -> tuple[FiberBacked, list[tuple[int, int]]]:
    """The fiber of ``A`` under ``polys``, plus its points inside ``window``.

    The returned plane set stays queryable outside the window.
    """
    fiber = FiberBacked(A, tuple(as_polys(polys)), PlaneUniverse(universe))
    pts = fiber.points(window) if window is not None else []
    return fiber, pts


def slice_fiber(fiber: FiberBacked, n: int, m_window) -> list[int]:
    if not isinstance(fiber, FiberBacked):
        raise PreconditionError("slice needs a fiber-backed plane set")
    w = as_window(m_window)
    return fiber.slice_members(n, w.lo, w.hi)


def write_csv(points: Iterable[tuple[int, int]], path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("m,n\n")
        for m, n in points:
            fh.write(f"{m},{n}\n")


def pbm_bytes(grid: np.ndarray) -> bytes:
    """Plain (P1) portable bitmap; rows are n descending so n grows upward, columns are m."""
    img = grid.T[::-1].astype(np.uint8)
    lines = [f"P1\n{img.shape[1]} {img.shape[0]}"]
    lines.extend(" ".join(str(v) for v in row) for row in img)
    return ("\n".join(lines) + "\n").encode("ascii")
