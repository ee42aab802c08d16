"""Exact algebra of finite unions of rational intervals.

An IntervalSet is a canonical, sorted union of disjoint non-adjacent
intervals with open/closed endpoint flags tracked exactly.  Canonical
form is unique: two IntervalSets describe the same point set if and
only if their component tuples are equal.  All operations are pure and
exact; values are immutable and safe to share between threads.

Endpoint topology matters here: adjoining or removing single endpoints
changes which sets are sum-free, so measure-only representations are
not enough.  Measure itself ignores endpoints (a singleton has measure
zero), and for these sets inner measure coincides with measure.

Canonical text form, accepted and emitted by :meth:`IntervalSet.parse`
and ``str()``::

    {}                                     the empty set
    (8/177,4/59)|(28/177,14/59)|(2/3,1)    components joined by "|"

``(`` / ``)`` mark open endpoints, ``[`` / ``]`` closed ones.  The
parser tolerates overlaps, unreduced fractions and arbitrary order and
normalizes; the emitter always prints canonical form.
"""

from __future__ import annotations

import re
from bisect import bisect_right
from dataclasses import dataclass

from .rationals import Rational, rational

__all__ = [
    "Interval",
    "IntervalSet",
    "EmptySetError",
    "ParseError",
]


class EmptySetError(ValueError):
    """Raised when an extremum (inf/sup/diameter) of the empty set is asked for."""


class ParseError(ValueError):
    """Malformed set text; carries the character position of the defect."""

    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}: {text!r}")


@dataclass(frozen=True)
class Interval:
    """One connected piece with rational endpoints and open/closed flags.

    A raw Interval may be degenerate (lo > hi, or lo == hi without both
    endpoints closed); normalization drops such pieces.  Inside a
    canonical IntervalSet every component satisfies lo < hi, or
    lo == hi with both ends closed (a singleton point).
    """

    lo: Rational
    hi: Rational
    lo_closed: bool = False
    hi_closed: bool = False

    @property
    def is_empty(self) -> bool:
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and not (self.lo_closed and self.hi_closed)

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi and self.lo_closed and self.hi_closed

    @property
    def length(self) -> Rational:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    __contains__ = contains

    def sum(self, other: "Interval") -> "Interval":
        """Pointwise sum of two pieces.

        An endpoint of the sum is attained (closed) iff both
        contributing endpoints are attained.
        """
        return Interval(
            self.lo + other.lo,
            self.hi + other.hi,
            self.lo_closed and other.lo_closed,
            self.hi_closed and other.hi_closed,
        )

    def scaled(self, alpha) -> "Interval":
        if alpha <= 0:
            raise ValueError("dilation factor must be positive")
        return Interval(self.lo * alpha, self.hi * alpha, self.lo_closed, self.hi_closed)

    def shifted(self, t) -> "Interval":
        return Interval(self.lo + t, self.hi + t, self.lo_closed, self.hi_closed)

    def reflected(self) -> "Interval":
        return Interval(-self.hi, -self.lo, self.hi_closed, self.lo_closed)

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo},{self.hi}{right}"


def _normalize(pieces) -> tuple:
    """Sort, drop degenerate pieces, merge overlapping/touching ones."""
    live = [p for p in pieces if not p.is_empty]
    live.sort(key=lambda p: (p.lo, not p.lo_closed))
    out: list[Interval] = []
    for p in live:
        if out:
            c = out[-1]
            # connected iff the pieces overlap or touch at a point that
            # belongs to at least one side
            if p.lo < c.hi or (p.lo == c.hi and (p.lo_closed or c.hi_closed)):
                if p.hi > c.hi or (p.hi == c.hi and p.hi_closed and not c.hi_closed):
                    out[-1] = Interval(c.lo, p.hi, c.lo_closed, p.hi_closed)
                continue
        out.append(p)
    return tuple(out)


_PIECE_RE = re.compile(
    r"\s*([(\[])\s*(-?\d+(?:\s*/\s*\d+)?)\s*,\s*(-?\d+(?:\s*/\s*\d+)?)\s*([)\]])\s*"
)


class IntervalSet:
    """Canonical finite union of disjoint, sorted, maximal intervals."""

    __slots__ = ("_components", "_los")

    def __init__(self, pieces=()):
        comps = _normalize(list(pieces))
        object.__setattr__(self, "_components", comps)
        object.__setattr__(self, "_los", [c.lo for c in comps])

    def __setattr__(self, name, value):
        raise AttributeError("IntervalSet is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def _wrap(cls, comps: tuple) -> "IntervalSet":
        """Trusting constructor for component tuples already canonical."""
        s = object.__new__(cls)
        object.__setattr__(s, "_components", comps)
        object.__setattr__(s, "_los", [c.lo for c in comps])
        return s

    @classmethod
    def empty(cls) -> "IntervalSet":
        return _EMPTY

    @classmethod
    def interval(cls, lo, hi, lo_closed=False, hi_closed=False) -> "IntervalSet":
        return cls([Interval(rational(lo), rational(hi), lo_closed, hi_closed)])

    @classmethod
    def point(cls, x) -> "IntervalSet":
        x = rational(x)
        return cls([Interval(x, x, True, True)])

    @classmethod
    def parse(cls, text: str) -> "IntervalSet":
        """Parse the canonical text form (leniently) into a set."""
        stripped = text.strip()
        if stripped == "{}":
            return cls.empty()
        if not stripped:
            raise ParseError("empty set text (use '{}' for the empty set)", text, 0)
        pieces = []
        pos = 0
        for chunk in text.split("|"):
            m = _PIECE_RE.fullmatch(chunk)
            if m is None:
                raise ParseError("expected an interval like '(p/q,r/s)'", text, pos)
            try:
                lo = _parse_rational(m.group(2))
                hi = _parse_rational(m.group(3))
            except ZeroDivisionError:
                raise ParseError("zero denominator", text, pos + m.start(2)) from None
            pieces.append(Interval(lo, hi, m.group(1) == "[", m.group(4) == "]"))
            pos += len(chunk) + 1
        return cls(pieces)

    # -- basic queries -------------------------------------------------

    @property
    def components(self) -> tuple:
        return self._components

    @property
    def is_empty(self) -> bool:
        return not self._components

    def __len__(self) -> int:
        return len(self._components)

    def __iter__(self):
        return iter(self._components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._components == other._components

    def __hash__(self) -> int:
        return hash(self._components)

    def __bool__(self) -> bool:
        return bool(self._components)

    def contains(self, x) -> bool:
        """Exact membership of a rational point."""
        i = bisect_right(self._los, x)
        return i > 0 and self._components[i - 1].contains(x)

    __contains__ = contains

    def measure(self) -> Rational:
        """Total length of the components (singletons contribute 0)."""
        total = rational(0)
        for c in self._components:
            total += c.hi - c.lo
        return total

    def inf(self) -> Rational:
        if not self._components:
            raise EmptySetError("inf of the empty set")
        return self._components[0].lo

    def sup(self) -> Rational:
        if not self._components:
            raise EmptySetError("sup of the empty set")
        return self._components[-1].hi

    def diameter(self) -> Rational:
        if not self._components:
            raise EmptySetError("diameter of the empty set")
        return self.sup() - self.inf()

    # -- geometric operations ------------------------------------------

    def dilate(self, alpha) -> "IntervalSet":
        """{ alpha*x : x in self } for alpha > 0; scales measure by alpha."""
        alpha = rational(alpha)
        if alpha <= 0:
            raise ValueError(f"dilation factor must be positive, got {alpha}")
        return IntervalSet._wrap(tuple(c.scaled(alpha) for c in self._components))

    def translate(self, t) -> "IntervalSet":
        t = rational(t)
        return IntervalSet._wrap(tuple(c.shifted(t) for c in self._components))

    def reflect(self) -> "IntervalSet":
        """{ -x : x in self }."""
        return IntervalSet._wrap(tuple(c.reflected() for c in reversed(self._components)))

    def minkowski(self, other: "IntervalSet") -> "IntervalSet":
        """Pointwise sumset { a+b }.  Empty if either operand is empty."""
        if self.is_empty or other.is_empty:
            return _EMPTY
        return IntervalSet(
            [a.sum(b) for a in self._components for b in other._components]
        )

    __add__ = minkowski

    # -- boolean operations --------------------------------------------

    def _combine(self, other: "IntervalSet", keep) -> "IntervalSet":
        """Rebuild the pointwise combination of two sets.

        Membership is constant between consecutive endpoints, so probing
        every endpoint and one interior point per gap reconstructs the
        exact result.
        """
        pts = sorted(
            {e for c in self._components for e in (c.lo, c.hi)}
            | {e for c in other._components for e in (c.lo, c.hi)}
        )
        pieces = []
        for i, p in enumerate(pts):
            if keep(self.contains(p), other.contains(p)):
                pieces.append(Interval(p, p, True, True))
            if i + 1 < len(pts):
                q = pts[i + 1]
                mid = (p + q) / 2
                if keep(self.contains(mid), other.contains(mid)):
                    pieces.append(Interval(p, q, False, False))
        return IntervalSet(pieces)

    def union(self, other: "IntervalSet") -> "IntervalSet":
        if self.is_empty:
            return other
        if other.is_empty:
            return self
        return self._combine(other, lambda a, b: a or b)

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        if self.is_empty or other.is_empty:
            return _EMPTY
        return self._combine(other, lambda a, b: a and b)

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        if self.is_empty or other.is_empty:
            return self
        return self._combine(other, lambda a, b: a and not b)

    def symmetric_difference(self, other: "IntervalSet") -> "IntervalSet":
        return self._combine(other, lambda a, b: a != b)

    __or__ = union
    __and__ = intersect
    __sub__ = difference
    __xor__ = symmetric_difference

    def is_subset_of(self, other: "IntervalSet") -> bool:
        return self.difference(other).is_empty

    # -- text form ------------------------------------------------------

    def __str__(self) -> str:
        if not self._components:
            return "{}"
        return "|".join(str(c) for c in self._components)

    def __repr__(self) -> str:
        return f"IntervalSet.parse({str(self)!r})"


def _parse_rational(token: str):
    token = token.replace(" ", "")
    if "/" in token:
        num, den = token.split("/")
        return rational(int(num), int(den))
    return rational(int(token))


_EMPTY = IntervalSet._wrap(())
