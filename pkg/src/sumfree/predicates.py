"""k-sum-free predicates on interval sets.

A set A is k-sum-free when no x, y, z in A satisfy x + y = k*z (x = y
is allowed).  Set-theoretically this says (A+A) and k*A are disjoint,
or equivalently that (1/k)*(A+A) misses A, which is how the exact
predicate is evaluated here.  When a violation exists we extract an
explicit witness triple constructively, so a "not sum-free" verdict is
always checkable by plain arithmetic.

k = 2 is degenerate: x + x = 2x for every x, so any nonempty set fails
with a witness (x, x, x).  The predicate accepts k = 2 and reports
exactly that; nothing is special-cased.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intervals import Interval, IntervalSet
from .rationals import Rational, rational

__all__ = ["Witness", "NotSumFreeError", "is_k_sum_free", "forbidden_region"]


@dataclass(frozen=True)
class Witness:
    """An explicit solution x + y = k*z with all three members of the set."""

    x: Rational
    y: Rational
    z: Rational
    k: int

    def holds_in(self, A: IntervalSet) -> bool:
        return (
            self.x + self.y == self.k * self.z
            and self.x in A
            and self.y in A
            and self.z in A
        )

    def __str__(self) -> str:
        return f"x={self.x}, y={self.y}, z={self.z} with x+y = {self.k}*z"


class NotSumFreeError(ValueError):
    """A precondition demanded a k-sum-free set; carries the violating triple."""

    def __init__(self, witness: Witness):
        self.witness = witness
        super().__init__(f"set is not {witness.k}-sum-free: {witness}")


def is_k_sum_free(A: IntervalSet, k: int):
    """Exact predicate; returns (True, None) or (False, witness).

    A must be bounded (always true for finite interval unions); k >= 1.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if A.is_empty:
        return True, None
    sums = A.minkowski(A)
    conflict = sums.dilate(rational(1, k)).intersect(A)
    if conflict.is_empty:
        return True, None
    return False, _extract_witness(A, conflict, k)


def _extract_witness(A: IntervalSet, conflict: IntervalSet, k: int) -> Witness:
    """Pick z from the first conflict component, then split k*z as x + y.

    Midpoints keep the choice deterministic and inside the set: the
    midpoint of a component is interior (or the point itself for a
    singleton), and the overlap I & (k*z - J) is nonempty by
    construction whenever k*z lies in I + J.
    """
    first = conflict.components[0]
    z = (first.lo + first.hi) / 2
    target = k * z
    comps = A.components
    for i, I in enumerate(comps):
        for J in comps[i:]:
            s = I.sum(J)
            if not s.contains(target):
                continue
            overlap = _intersect_pieces(I, Interval(
                target - J.hi, target - J.lo, J.hi_closed, J.lo_closed))
            x = (overlap.lo + overlap.hi) / 2
            y = target - x
            w = Witness(min(x, y), max(x, y), z, k)
            if not w.holds_in(A):
                raise AssertionError(f"internal witness extraction failed: {w}")
            return w
    raise AssertionError("conflict component without a contributing pair")


def _intersect_pieces(a: Interval, b: Interval) -> Interval:
    if a.lo > b.lo or (a.lo == b.lo and not a.lo_closed):
        lo, lo_closed = a.lo, a.lo_closed
    else:
        lo, lo_closed = b.lo, b.lo_closed
    if a.hi < b.hi or (a.hi == b.hi and not a.hi_closed):
        hi, hi_closed = a.hi, a.hi_closed
    else:
        hi, hi_closed = b.hi, b.hi_closed
    return Interval(lo, hi, lo_closed, hi_closed)


def forbidden_region(A: IntervalSet) -> IntervalSet:
    """Region no 3-sum-free superset of A may meet: (1/3)(A+A) | (3A - A).

    The first part collects points that would close a triple as z, the
    second those that would close one as x or y.  A itself is
    3-sum-free iff it misses (1/3)(A+A); the difference form is the
    equivalent reformulation used for containment arguments.
    """
    if A.is_empty:
        raise ValueError("forbidden region of the empty set is undefined")
    sums = A.minkowski(A)
    return sums.dilate(rational(1, 3)).union(A.dilate(3).minkowski(A.reflect()))
