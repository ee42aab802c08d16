"""Executable verifiers for the measure inequalities of 3-sum-free sets.

Each checker evaluates one proved inequality on a concrete interval
set, with exact rational arithmetic and no tolerance.  The inequalities
are theorems, so a failing verdict on a genuinely 3-sum-free input
means an implementation bug (or a falsified theorem) and the caller is
expected to treat it as fatal.

Checkers that assume sup(A) = 1 reject other inputs by default; pass
``rescale=True`` to have them work on (1/sup A) * A instead, which is
flagged in the aggregate report.

Notation used throughout (all exact rationals):

    a    = inf A
    A1   = A & [2/3, 1]          the top window
    eps1 = inf(A1) - 2/3         slack before the top window starts
    eps2 = (1/3 - eps1) - mu(A1) mass missing from the top window

When A1 is empty its infimum is taken to be 1, so eps1 = 1/3 and
eps2 = 0; this keeps eps2 = 1/3 - eps1 - mu(A1) an identity for every
input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .intervals import IntervalSet
from .predicates import NotSumFreeError, Witness, is_k_sum_free
from .rationals import Rational, rational

__all__ = [
    "LemmaContext",
    "CheckRecord",
    "LemmaReport",
    "PreconditionError",
    "check_extent_bound",
    "check_top_window_bound",
    "check_tail_bound",
    "check_tail_equality",
    "check_dense_tail_bound",
    "check_superadditivity",
    "check_sumset_min_bound",
    "lemma_report",
    "window",
    "tail_cut",
]

_THIRD = rational(1, 3)
_TWO_THIRDS = rational(2, 3)


class PreconditionError(ValueError):
    """A checker precondition does not hold for the given set."""


@dataclass(frozen=True)
class CheckRecord:
    """One exact inequality verdict: lhs <= rhs (or = for equalities)."""

    name: str
    lhs: Rational
    rhs: Rational
    passed: bool
    note: str = ""

    def __str__(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.note})" if self.note else ""
        return f"[{mark}] {self.name}: {self.lhs} <= {self.rhs}{extra}"


@dataclass(frozen=True)
class LemmaContext:
    """The standard quantities a, A1, eps1, eps2 of a set with sup = 1."""

    a: Rational
    A1: IntervalSet
    eps1: Rational
    eps2: Rational

    @classmethod
    def from_set(cls, A: IntervalSet) -> "LemmaContext":
        if A.is_empty:
            raise PreconditionError("context of the empty set is undefined")
        if A.sup() != 1:
            raise PreconditionError(f"context requires sup(A) = 1, got {A.sup()}")
        A1 = A.intersect(window(_TWO_THIRDS, rational(1)))
        inf_A1 = rational(1) if A1.is_empty else A1.inf()
        eps1 = inf_A1 - _TWO_THIRDS
        eps2 = (_THIRD - eps1) - A1.measure()
        return cls(A.inf(), A1, eps1, eps2)


def window(lo, hi) -> IntervalSet:
    """Closed interval [lo, hi] as a set; empty when lo > hi."""
    lo, hi = rational(lo), rational(hi)
    if lo > hi:
        return IntervalSet.empty()
    return IntervalSet.interval(lo, hi, True, True)


def tail_cut(a) -> Rational:
    """The cut point 2/9 + a/3 splitting a set into head and tail."""
    return rational(2, 9) + rational(a) / 3


def _require_sum_free(A: IntervalSet) -> None:
    ok, witness = is_k_sum_free(A, 3)
    if not ok:
        raise NotSumFreeError(witness)


def _rescaled(A: IntervalSet, rescale: bool) -> tuple[IntervalSet, bool]:
    if A.is_empty:
        raise PreconditionError("checker requires a nonempty set")
    s = A.sup()
    if s == 1:
        return A, False
    if not rescale:
        raise PreconditionError(f"checker requires sup(A) = 1, got {s} (pass rescale=True)")
    if s <= 0:
        raise PreconditionError("cannot rescale a set with sup <= 0")
    return A.dilate(1 / s), True


class ExtentBound(NamedTuple):
    bound: Rational
    passed: bool


def check_extent_bound(A: IntervalSet) -> ExtentBound:
    """mu(A) <= (2 sup A - inf A) / 4 for bounded 3-sum-free A in R+."""
    if A.is_empty:
        raise PreconditionError("extent bound requires a nonempty set")
    if A.inf() < 0:
        raise PreconditionError("extent bound requires A inside [0, +inf)")
    _require_sum_free(A)
    bound = (2 * A.sup() - A.inf()) / 4
    return ExtentBound(bound, A.measure() <= bound)


class TopWindowBound(NamedTuple):
    bound: Rational
    passed: bool


def check_top_window_bound(A: IntervalSet, rescale: bool = False) -> TopWindowBound:
    """mu(A) <= 1/3 + mu(A & [2/3,1]) / 2 for 3-sum-free A with sup = 1."""
    A, _ = _rescaled(A, rescale)
    _require_sum_free(A)
    bound = _THIRD + A.intersect(window(_TWO_THIRDS, 1)).measure() / 2
    return TopWindowBound(bound, A.measure() <= bound)


class TailBound(NamedTuple):
    applicable: bool
    bound: Optional[Rational]
    passed: Optional[bool]
    branch: Optional[str]


def check_tail_bound(A: IntervalSet, rescale: bool = False) -> TailBound:
    """Piecewise bound on the tail mass mu(A & [2/9 + a/3, 1]).

    Applicable when eps1 + 2*eps2 <= 1/3.  The bound is
    1/3 - eps1/6 when eps1 <= 2a/3 (branch "small-eps1"), and
    1/3 - (eps1 - 2a/3)/24 otherwise (branch "large-eps1").
    """
    A, _ = _rescaled(A, rescale)
    _require_sum_free(A)
    ctx = LemmaContext.from_set(A)
    if ctx.eps1 + 2 * ctx.eps2 > _THIRD:
        return TailBound(False, None, None, None)
    if ctx.eps1 <= 2 * ctx.a / 3:
        branch, bound = "small-eps1", _THIRD - ctx.eps1 / 6
    else:
        branch, bound = "large-eps1", _THIRD - (ctx.eps1 - 2 * ctx.a / 3) / 24
    tail = A.intersect(window(tail_cut(ctx.a), 1)).measure()
    return TailBound(True, bound, tail <= bound, branch)


class TailEquality(NamedTuple):
    triggered: bool
    eps_zero: Optional[bool]


def check_tail_equality(A: IntervalSet, rescale: bool = False) -> TailEquality:
    """Tail mass exactly 1/3 forces eps1 = eps2 = 0 (given a > 0).

    A verdict of (triggered=True, eps_zero=False) would falsify the
    rigidity statement; the suite treats it as fatal.
    """
    A, _ = _rescaled(A, rescale)
    _require_sum_free(A)
    ctx = LemmaContext.from_set(A)
    if ctx.a <= 0:
        raise PreconditionError(f"tail equality requires inf A > 0, got {ctx.a}")
    if ctx.eps1 + 2 * ctx.eps2 > _THIRD:
        raise PreconditionError("tail equality requires eps1 + 2*eps2 <= 1/3")
    tail = A.intersect(window(tail_cut(ctx.a), 1)).measure()
    if tail != _THIRD:
        return TailEquality(False, None)
    return TailEquality(True, ctx.eps1 == 0 and ctx.eps2 == 0)


class DenseTailBound(NamedTuple):
    applicable: bool
    passed: Optional[bool]


def check_dense_tail_bound(A: IntervalSet, rescale: bool = False) -> DenseTailBound:
    """mu(A) >= 5/12 implies tail mass mu(A & [a/3 + 2/9, 1]) <= 1/3."""
    A, _ = _rescaled(A, rescale)
    _require_sum_free(A)
    if A.measure() < rational(5, 12):
        return DenseTailBound(False, None)
    tail = A.intersect(window(tail_cut(A.inf()), 1)).measure()
    return DenseTailBound(True, tail <= _THIRD)


def check_superadditivity(A: IntervalSet, B: IntervalSet) -> CheckRecord:
    """mu(A+B) >= mu(A) + mu(B) for nonempty bounded sets."""
    if A.is_empty or B.is_empty:
        raise PreconditionError("superadditivity requires nonempty operands")
    lhs = A.measure() + B.measure()
    rhs = A.minkowski(B).measure()
    return CheckRecord("sumset-superadditive", lhs, rhs, lhs <= rhs)


def check_sumset_min_bound(A: IntervalSet, B: IntervalSet) -> CheckRecord:
    """mu(A+B) >= min(2 mu(A) + mu(B), mu(A) + diam(B)) with mu(A) <= mu(B).

    Operands are swapped internally if needed.
    """
    if A.is_empty or B.is_empty:
        raise PreconditionError("sumset bound requires nonempty operands")
    if A.measure() > B.measure():
        A, B = B, A
    lhs = min(2 * A.measure() + B.measure(), A.measure() + B.diameter())
    rhs = A.minkowski(B).measure()
    return CheckRecord("sumset-min-bound", lhs, rhs, lhs <= rhs)


@dataclass
class LemmaReport:
    """All lemma verdicts for one set, plus the context they used."""

    original: IntervalSet
    checked: IntervalSet
    rescaled: bool
    context: LemmaContext
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]


def lemma_report(A: IntervalSet, rescale: bool = True) -> LemmaReport:
    """Run every applicable inequality check on one 3-sum-free set.

    Rejects sets that are not 3-sum-free (with the witness), empty, or
    not inside [0, +inf).
    """
    if A.is_empty:
        raise PreconditionError("lemma report requires a nonempty set")
    if A.inf() < 0:
        raise PreconditionError("lemma report requires A inside [0, +inf)")
    _require_sum_free(A)
    S, was_rescaled = _rescaled(A, rescale)
    ctx = LemmaContext.from_set(S)
    records = []

    extent = check_extent_bound(S)
    records.append(CheckRecord("extent-bound", S.measure(), extent.bound, extent.passed))

    top = check_top_window_bound(S)
    records.append(CheckRecord("top-window-bound", S.measure(), top.bound, top.passed))

    tail = check_tail_bound(S)
    if tail.applicable:
        tail_mass = S.intersect(window(tail_cut(ctx.a), 1)).measure()
        records.append(
            CheckRecord(f"tail-bound[{tail.branch}]", tail_mass, tail.bound, tail.passed)
        )
        if ctx.a > 0:
            eq = check_tail_equality(S)
            if eq.triggered:
                records.append(
                    CheckRecord(
                        "tail-equality-rigidity",
                        ctx.eps1 + ctx.eps2,
                        rational(0),
                        bool(eq.eps_zero),
                        note="tail mass is exactly 1/3",
                    )
                )

    dense = check_dense_tail_bound(S)
    if dense.applicable:
        tail_mass = S.intersect(window(tail_cut(ctx.a), 1)).measure()
        records.append(
            CheckRecord("dense-tail-bound", tail_mass, _THIRD, bool(dense.passed),
                        note="mu(A) >= 5/12")
        )

    comps = [IntervalSet([c]) for c in S.components]
    for i in range(len(comps)):
        for j in range(i, len(comps)):
            rec = check_sumset_min_bound(comps[i], comps[j])
            records.append(
                CheckRecord(f"sumset-min-bound({i},{j})", rec.lhs, rec.rhs, rec.passed)
            )

    return LemmaReport(A, S, was_rescaled, ctx, records)
