"""Exact search for maximum k-sum-free subsets of {1..n}.

The heavy lifting happens in a bitmask kernel: a compiled extension
when available, otherwise a pure-Python twin with identical semantics.
The backend is chosen once at import; set ``SUMFREE_PURE_KERNEL=1`` to
force the pure one.  Results never depend on the backend.

Searches are exhaustive with a guaranteed-correct answer, so they are
gated by a size budget and refuse loudly beyond it rather than degrade
into heuristics.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from ..intervals import IntervalSet
from ..rationals import Rational, rational
from . import _kernel_py

if os.environ.get("SUMFREE_PURE_KERNEL", "") == "1":
    _kernel = _kernel_py
    KERNEL_BACKEND = "python"
else:
    try:
        from . import _kernel  # type: ignore[attr-defined]

        KERNEL_BACKEND = "cython"
    except ImportError:
        _kernel = _kernel_py
        KERNEL_BACKEND = "python"

__all__ = [
    "IntSet",
    "SearchResult",
    "DensityReport",
    "BudgetError",
    "KERNEL_BACKEND",
    "DEFAULT_BUDGET",
    "NAIVE_BUDGET",
    "EXTREMAL_CAP",
    "is_k_sum_free_int",
    "max_k_sum_free",
    "max_k_sum_free_naive",
    "discretize",
    "density_report",
]

#: largest n the pruned search accepts by default
DEFAULT_BUDGET = 34
#: largest n the unpruned oracle accepts by default
NAIVE_BUDGET = 26
#: extremal sets stored per search (the exact count is always kept)
EXTREMAL_CAP = 10000


class BudgetError(ValueError):
    """The requested n exceeds the exhaustive-search budget."""

    def __init__(self, n: int, budget: int):
        super().__init__(
            f"n = {n} exceeds the exhaustive budget ({budget}); "
            "raise the budget explicitly if you accept the cost"
        )


@dataclass(frozen=True)
class IntSet:
    """A subset of {1..n}, canonical text form ``{1,3,5}``."""

    n: int
    elements: tuple

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        if elems and not (1 <= elems[0] and elems[-1] <= self.n):
            raise ValueError(f"elements must lie in 1..{self.n}")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "IntSet":
        return cls(n, tuple(i for i in range(1, n + 1) if (mask >> (i - 1)) & 1))

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "IntSet":
        body = text.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise ValueError(f"expected '{{a,b,...}}', got {text!r}")
        inner = body[1:-1].strip()
        elems = tuple(int(tok) for tok in inner.split(",") if tok.strip()) if inner else ()
        return cls(n if n is not None else (max(elems) if elems else 0), elems)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"


@dataclass(frozen=True)
class SearchResult:
    n: int
    k: int
    max_size: int
    extremal_count: int
    extremal_sets: Optional[tuple]
    nodes_explored: int
    backend: str = KERNEL_BACKEND


@dataclass(frozen=True)
class DensityReport:
    """Side-by-side desk-scale ratio and asymptotic density for k >= 4.

    Convergence is asymptotic; no equality between the two columns is
    claimed or tested at small n.
    """

    n: int
    k: int
    max_size: int
    search_ratio: Rational
    asymptotic_density: Rational

    def __str__(self) -> str:
        return (f"k={self.k} n={self.n}: search max {self.max_size} "
                f"(ratio {self.search_ratio} ~ {float(self.search_ratio):.6f}), "
                f"asymptotic density {self.asymptotic_density} "
                f"~ {float(self.asymptotic_density):.6f}")


def is_k_sum_free_int(S, k: int):
    """Exact predicate on an IntSet or iterable of positive integers.

    Returns (True, None) or (False, (x, y, z)) with x + y = k*z.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    elems = set(S.elements if isinstance(S, IntSet) else S)
    for z in sorted(elems):
        target = k * z
        for x in sorted(elems):
            y = target - x
            if y >= x and y in elems:
                return False, (x, y, z)
    return True, None


def max_k_sum_free(n: int, k: int, enumerate_sets: bool = False,
                   budget: int = DEFAULT_BUDGET, cap: int = EXTREMAL_CAP) -> SearchResult:
    """Exact maximum k-sum-free subset of {1..n}, with extremal census.

    The extremal count is exact; listed sets are capped at ``cap``.
    Refuses n beyond ``budget`` (raise it explicitly to go further).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    if n > budget:
        raise BudgetError(n, budget)
    kern = _kernel if n <= getattr(_kernel, "MAX_N", n) else _kernel_py
    best, count, masks, nodes = kern.search(n, k, enumerate_sets, cap)
    sets = tuple(IntSet.from_mask(m, n) for m in masks) if enumerate_sets else None
    return SearchResult(n, k, best, count, sets, nodes)


def max_k_sum_free_naive(n: int, k: int, budget: int = NAIVE_BUDGET):
    """Unpruned exhaustive oracle; returns (max_size, count, nodes)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > budget:
        raise BudgetError(n, budget)
    kern = _kernel if n <= getattr(_kernel, "MAX_N", n) else _kernel_py
    return kern.search_naive(n, k)


def discretize(A: IntervalSet, n: int) -> IntSet:
    """{ i in 1..n : i/n in A }, membership decided exactly.

    If A is k-sum-free so is the result: x + y = k*z over the integers
    gives the same relation for x/n, y/n, z/n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return IntSet(n, tuple(i for i in range(1, n + 1) if A.contains(rational(i, n))))


def density_report(k: int, n: int, budget: int = DEFAULT_BUDGET) -> DensityReport:
    """Exhaustive desk-scale maximum next to the k >= 4 asymptotic density."""
    from ..constructions import cg_density

    result = max_k_sum_free(n, k, budget=budget)
    return DensityReport(n, k, result.max_size,
                         rational(result.max_size, n), cg_density(k))
