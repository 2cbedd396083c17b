"""Exact subsets of the naturals {1, 2, ...} or of the integers.

Four descriptor variants share one contract: ``member(x)`` and
``enumerate(window)`` agree pointwise, elements are Python ints of any size,
and descriptors are immutable.
"""
from __future__ import annotations

import bisect
import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .errors import DomainError, ParseError, PreconditionError
from .polynomials import IntPolynomial, monotone_threshold


class Universe(enum.Enum):
    NATURALS = "naturals"
    INTEGERS = "integers"

    def contains(self, x: int) -> bool:
        return self is Universe.INTEGERS or x >= 1


NATURALS = Universe.NATURALS
INTEGERS = Universe.INTEGERS


def _universe(u) -> Universe:
    return u if isinstance(u, Universe) else Universe(u)


@dataclass(frozen=True)
class Window1D:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError(f"inverted window [{self.lo}, {self.hi}]")

    def check(self, universe: Universe) -> None:
        if universe is NATURALS and self.lo < 1:
            raise DomainError(f"window [{self.lo}, {self.hi}] leaves the naturals")

    def __len__(self) -> int:
        return self.hi - self.lo + 1


def as_window(w) -> Window1D:
    if isinstance(w, Window1D):
        return w
    lo, hi = w
    return Window1D(int(lo), int(hi))


class SetDescriptor:
    """Base class; subclasses implement ``_member`` and ``_enumerate``."""

    universe: Universe

    def member(self, x: int) -> bool:
        if not self.universe.contains(x):
            raise DomainError(f"{x} is outside the {self.universe.value}")
        return self._member(x)

    def __contains__(self, x: int) -> bool:
        return self.universe.contains(x) and self._member(x)

    def enumerate(self, window) -> list[int]:
        w = as_window(window)
        w.check(self.universe)
        return self._enumerate(w.lo, w.hi)

    def contains_value(self, x: int) -> bool:
        """Membership where values outside the universe count as non-members."""
        return x in self

    def _member(self, x: int) -> bool:
        raise NotImplementedError

    def _enumerate(self, lo: int, hi: int) -> list[int]:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class IntervalUnion(SetDescriptor):
    """Union of closed integer intervals, stored sorted, disjoint and non-adjacent."""

    intervals: tuple[tuple[int, int], ...]
    universe: Universe = NATURALS

    def __post_init__(self):
        object.__setattr__(self, "universe", _universe(self.universe))
        ivs = []
        for lo, hi in self.intervals:
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise DomainError(f"inverted interval [{lo}, {hi}]")
            if self.universe is NATURALS and lo < 1:
                raise DomainError(f"interval [{lo}, {hi}] leaves the naturals")
            ivs.append((lo, hi))
        object.__setattr__(self, "intervals", _merge(ivs))
        object.__setattr__(self, "_starts", [lo for lo, _ in self.intervals])

    def _member(self, x):
        i = bisect.bisect_right(self._starts, x) - 1
        return i >= 0 and x <= self.intervals[i][1]

    def _enumerate(self, lo, hi):
        out = []
        i = max(bisect.bisect_right(self._starts, lo) - 1, 0)
        for a, b in self.intervals[i:]:
            if a > hi:
                break
            out.extend(range(max(a, lo), min(b, hi) + 1))
        return out

    def to_json(self):
        return {
            "variant": "interval_union",
            "universe": self.universe.value,
            "intervals": [[str(a), str(b)] for a, b in self.intervals],
        }


def _merge(ivs: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out: list[list[int]] = []
    for lo, hi in sorted(ivs):
        if out and lo <= out[-1][1] + 1:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return tuple((a, b) for a, b in out)


@dataclass(frozen=True)
class ExplicitSorted(SetDescriptor):
    elements: tuple[int, ...]
    universe: Universe = NATURALS

    def __post_init__(self):
        object.__setattr__(self, "universe", _universe(self.universe))
        els = tuple(int(x) for x in self.elements)
        if any(a >= b for a, b in zip(els, els[1:])):
            raise PreconditionError("ExplicitSorted elements must be strictly increasing")
        if els and not self.universe.contains(els[0]):
            raise DomainError(f"element {els[0]} is outside the {self.universe.value}")
        object.__setattr__(self, "elements", els)
        object.__setattr__(self, "_lookup", frozenset(els))

    @classmethod
    def of(cls, xs: Iterable[int], universe=NATURALS) -> ExplicitSorted:
        return cls(tuple(sorted(set(xs))), universe)

    def _member(self, x):
        return x in self._lookup

    def _enumerate(self, lo, hi):
        i = bisect.bisect_left(self.elements, lo)
        j = bisect.bisect_right(self.elements, hi)
        return list(self.elements[i:j])

    def to_json(self):
        return {
            "variant": "explicit_sorted",
            "universe": self.universe.value,
            "elements": [str(x) for x in self.elements],
        }


@dataclass(frozen=True)
class Complement(SetDescriptor):
    inner: SetDescriptor
    universe: Universe = NATURALS

    def __post_init__(self):
        object.__setattr__(self, "universe", _universe(self.universe))

    def _member(self, x):
        return x not in self.inner

    def _enumerate(self, lo, hi):
        if self.inner.universe is NATURALS and lo < 1:
            taken = set(self.inner.enumerate((1, hi))) if hi >= 1 else set()
        else:
            taken = set(self.inner.enumerate((lo, hi)))
        return [x for x in range(lo, hi + 1) if x not in taken]

    def to_json(self):
        return {
            "variant": "complement",
            "universe": self.universe.value,
            "inner": self.inner.to_json(),
        }


def everything(universe=NATURALS) -> Complement:
    """The whole universe, as the complement of the empty set."""
    u = _universe(universe)
    return Complement(ExplicitSorted((), u), u)


def multiples(k: int, lo: int, hi: int, universe=NATURALS, offset: int = 0) -> ExplicitSorted:
    """Members of ``offset + kZ`` inside ``[lo, hi]`` as an explicit list."""
    first = lo + ((offset - lo) % k)
    return ExplicitSorted(tuple(range(first, hi + 1, k)), universe)


# -- construction-backed sets -------------------------------------------------

class _ImageStream:
    """Values ``q(t(k))`` for ``k = 1, 2, ...`` with ``t`` strictly increasing.

    ``q`` is eventually strictly increasing; the finitely many values before
    that point are kept explicitly, the rest are located by bisection on k.
    """

    def __init__(self, q: IntPolynomial, index: Callable[[int], int], limit: int | None):
        self.q = q
        self.index = index
        self.limit = limit
        threshold = monotone_threshold(q)
        k = 1
        early = []
        while (limit is None or k <= limit) and index(k) < threshold:
            early.append(q(index(k)))
            k += 1
        self.first_monotone = k
        self.early = sorted(early)
        self.early_set = frozenset(early)

    def value(self, k: int) -> int:
        return self.q(self.index(k))

    def first_at_least(self, x: int) -> int | None:
        """Smallest monotone-range k with ``value(k) >= x``, or None if none exists."""
        lo = self.first_monotone
        if self.limit is not None and lo > self.limit:
            return None
        if self.value(lo) >= x:
            return lo
        step = 1
        hi = lo + step
        while True:
            if self.limit is not None and hi >= self.limit:
                hi = self.limit
                if self.value(hi) < x:
                    return None
                break
            if self.value(hi) >= x:
                break
            lo = hi
            step *= 2
            hi = lo + step
        # value(lo) < x <= value(hi)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.value(mid) >= x:
                hi = mid
            else:
                lo = mid
        return hi

    def contains(self, x: int) -> bool:
        if x in self.early_set:
            return True
        k = self.first_at_least(x)
        return k is not None and self.value(k) == x

    def between(self, lo: int, hi: int) -> list[int]:
        out = {v for v in self.early if lo <= v <= hi}
        k = self.first_at_least(lo)
        while k is not None and (self.limit is None or k <= self.limit):
            v = self.value(k)
            if v > hi:
                break
            out.add(v)
            k += 1
        return sorted(out)


def binary_digit_index(base_exponent: Callable[[int], int]) -> Callable[[int], int]:
    """Map k to ``sum 2**base_exponent(j)`` over the set bits j of k.

    Strictly increasing in k whenever ``base_exponent`` is strictly increasing.
    """

    def index(k: int) -> int:
        total = 0
        j = 0
        while k:
            if k & 1:
                total += 1 << base_exponent(j)
            k >>= 1
            j += 1
        return total

    return index


def _ip_star_stream(params: dict) -> _ImageStream:
    p = IntPolynomial(tuple(params["coeffs"]))
    shift = params["N"]
    # generator i (1-based) is 2**(i*N); bit j of k selects generator j + 1
    return _ImageStream(p.plus_identity(), binary_digit_index(lambda j: (j + 1) * shift),
                        _subset_limit(params.get("index_cap")))


def _ipn_star_stream(params: dict) -> _ImageStream:
    p = IntPolynomial(tuple(params["coeffs"]))
    beta = params["beta"]
    return _ImageStream(p.plus_identity(), binary_digit_index(lambda j: 1 << (beta + 1 + j)),
                        _subset_limit(params.get("index_cap")))


def _subset_limit(cap):
    return None if cap is None else (1 << cap) - 1


def _delta_star_values(params: dict) -> list[int]:
    q = IntPolynomial(tuple(params["coeffs"])).plus_identity()
    return sorted({q(d) for d in params["differences"]})


def central_star_images(coeffs: Sequence[int], starts: Sequence[int]) -> list[int]:
    """All values ``p(nu) + mu`` with ``mu, nu`` in ``[s_n, s_n + n]`` for each block n."""
    p = IntPolynomial(tuple(coeffs))
    out = set()
    for n, s in enumerate(starts):
        for nu in range(s, s + n + 1):
            pv = p(nu)
            out.update(pv + mu for mu in range(s, s + n + 1))
    return sorted(out)


_STREAM_RULES = {"ip_star": _ip_star_stream, "ipn_star": _ipn_star_stream}
_FINITE_RULES = {
    "delta_star": _delta_star_values,
    "central_star": lambda prm: central_star_images(prm["coeffs"], prm["starts"]),
}
RULES = tuple(sorted(_STREAM_RULES) + sorted(_FINITE_RULES))


@dataclass(frozen=True)
class ConstructionBacked(SetDescriptor):
    """A set defined by one of the counterexample constructions.

    ``params`` is frozen as a tuple of items; integers inside may be huge.
    Rules:

    * ``ip_star`` -- ``{p(t) + t : t a nonempty subset sum of {2^(iN)}}``
    * ``ipn_star`` -- ``{p(t) + t : t a nonempty subset sum of {2^(2^i)}, i > beta}``
    * ``delta_star`` -- ``{p(d) + d : d in differences}``
    * ``central_star`` -- ``{p(nu) + mu : (mu, nu) in the square blocks}``

    An optional ``index_cap`` limits the stream rules to the first
    ``index_cap`` generators; without it the set is infinite.
    """

    rule: str
    params: tuple
    universe: Universe = NATURALS
    _impl: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "universe", _universe(self.universe))
        params = self.params
        if isinstance(params, dict):
            params = tuple(sorted((k, _freeze(v)) for k, v in params.items()))
            object.__setattr__(self, "params", params)
        prm = self.param_dict()
        if self.rule in _STREAM_RULES:
            impl = _STREAM_RULES[self.rule](prm)
        elif self.rule in _FINITE_RULES:
            vals = _FINITE_RULES[self.rule](prm)
            if self.universe is NATURALS:
                vals = [v for v in vals if v >= 1]
            impl = ExplicitSorted(tuple(vals), self.universe)
        else:
            raise PreconditionError(f"unknown construction rule {self.rule!r}")
        object.__setattr__(self, "_impl", impl)

    def param_dict(self) -> dict:
        return {k: _thaw(v) for k, v in self.params}

    def _member(self, x):
        if isinstance(self._impl, ExplicitSorted):
            return x in self._impl
        return self._impl.contains(x)

    def _enumerate(self, lo, hi):
        if isinstance(self._impl, ExplicitSorted):
            return [v for v in self._impl.elements if lo <= v <= hi]
        return self._impl.between(lo, hi)

    def to_json(self):
        return {
            "variant": "construction_backed",
            "universe": self.universe.value,
            "rule": self.rule,
            "params": _params_to_json(self.param_dict()),
        }


def _freeze(v):
    if isinstance(v, list):
        return tuple(_freeze(x) for x in v)
    return v


def _thaw(v):
    if isinstance(v, tuple):
        return [_thaw(x) for x in v]
    return v


def _params_to_json(v):
    if isinstance(v, dict):
        return {k: _params_to_json(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_params_to_json(x) for x in v]
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    return v


def _params_from_json(v):
    if isinstance(v, dict):
        return {k: _params_from_json(x) for k, x in v.items()}
    if isinstance(v, list):
        return [_params_from_json(x) for x in v]
    if isinstance(v, str):
        try:
            return int(v)
        except ValueError:
            return v
    return v


def descriptor_from_json(obj: dict) -> SetDescriptor:
    try:
        variant = obj["variant"]
        universe = Universe(obj.get("universe", "naturals"))
        if variant == "interval_union":
            return IntervalUnion(tuple((int(a), int(b)) for a, b in obj["intervals"]), universe)
        if variant == "explicit_sorted":
            return ExplicitSorted(tuple(int(x) for x in obj["elements"]), universe)
        if variant == "complement":
            return Complement(descriptor_from_json(obj["inner"]), universe)
        if variant == "construction_backed":
            return ConstructionBacked(obj["rule"], _params_from_json(obj["params"]), universe)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (DomainError, PreconditionError)):
            raise ParseError(str(exc)) from exc
        raise ParseError(f"bad set descriptor: {exc}") from exc
    raise ParseError(f"unknown descriptor variant {obj.get('variant')!r}")


# -- module-level operations ---------------------------------------------------

def member(s: SetDescriptor, x: int) -> bool:
    return s.member(x)


def enumerate_window(s: SetDescriptor, window) -> list[int]:
    return s.enumerate(window)


def normalize(s: SetDescriptor) -> SetDescriptor:
    """Unique normal form: intervals are merged on construction, double complements cancel."""
    if isinstance(s, Complement):
        inner = normalize(s.inner)
        if isinstance(inner, Complement) and inner.universe is s.universe:
            return inner.inner if inner.inner.universe is s.universe else inner
        if inner is s.inner:
            return s
        return Complement(inner, s.universe)
    if isinstance(s, IntervalUnion):
        return IntervalUnion(s.intervals, s.universe)
    return s


@dataclass(frozen=True)
class GapProfile:
    """Gaps between consecutive members inside a window.

    ``status`` is ``"ok"``, ``"empty"`` (no members) or ``"insufficient"``
    (one member). ``gaps`` holds ``(left member, gap)`` pairs.
    ``left_truncated`` / ``right_truncated`` flag that the window edge cuts
    off a stretch with no members, so the true gap there is unknown.
    """

    window: Window1D
    gaps: tuple[tuple[int, int], ...]
    max_gap: int | None
    status: str
    left_truncated: bool = False
    right_truncated: bool = False

    @property
    def gap_values(self) -> list[int]:
        return [g for _, g in self.gaps]


def gaps_of(xs: Sequence[int]) -> list[tuple[int, int]]:
    return [(a, b - a) for a, b in zip(xs, xs[1:])]


def gap_profile(s: SetDescriptor, window) -> GapProfile:
    w = as_window(window)
    xs = s.enumerate(w)
    if not xs:
        return GapProfile(w, (), None, "empty", True, True)
    left, right = xs[0] > w.lo, xs[-1] < w.hi
    if len(xs) < 2:
        return GapProfile(w, (), None, "insufficient", left, right)
    gaps = tuple(gaps_of(xs))
    return GapProfile(w, gaps, max(g for _, g in gaps), "ok", left, right)


def min_element(s: SetDescriptor, search_limit: int = 1 << 64) -> int | None:
    """Least member of a naturals-universe set, scanning dyadic windows."""
    if s.universe is not NATURALS:
        raise PreconditionError("min_element needs a naturals-universe set")
    lo, hi = 1, 1
    while lo <= search_limit:
        xs = s.enumerate((lo, hi))
        if xs:
            return xs[0]
        lo, hi = hi + 1, 2 * hi + 1
    return None


def iter_members(s: SetDescriptor, start: int, chunk: int = 4096) -> Iterator[int]:
    """Members ``>= start`` in increasing order, fetched in growing windows."""
    lo = start
    width = chunk
    while True:
        xs = s.enumerate((lo, lo + width - 1))
        yield from xs
        lo += width
        width *= 2
