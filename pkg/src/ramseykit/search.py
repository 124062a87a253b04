"""Exhaustive searches for small Ramsey and van der Waerden numbers.

Verdicts are exact within budget: "arrows" always rests on an exhaustive
uncolourability proof, budget exhaustion is reported as such and never
silently converted into a verdict.  Number sweeps ascend so every failing
size produces a verified witness colouring along the way.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .colouring import ARROWS, BUDGET_EXCEEDED, NOT_ARROWS, ArrowsResult, arrows
from .graphs import InputError, complete_graph
from .hypergraphs import ap_count_formula

EXACT = "exact"
LOWER_BOUND_ONLY = "lower-bound-only"


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int | None = None
    wall_secs: float | None = None

    def start(self) -> "BudgetTracker":
        return BudgetTracker(self)


class BudgetTracker:
    """Shared accounting across the calls of one sweep."""

    def __init__(self, budget: SearchBudget | None):
        budget = budget or SearchBudget()
        self.remaining = budget.node_limit
        self.deadline = (time.monotonic() + budget.wall_secs
                         if budget.wall_secs is not None else None)

    def exhausted(self) -> bool:
        if self.remaining is not None and self.remaining <= 0:
            return True
        return self.deadline is not None and time.monotonic() > self.deadline

    def charge(self, nodes: int):
        if self.remaining is not None:
            self.remaining -= nodes


def _tracked_arrows(base, kind: str, k: int, r: int,
                    tracker: BudgetTracker) -> ArrowsResult:
    if tracker.exhausted():
        return ArrowsResult(BUDGET_EXCEEDED, None, 0)
    res = arrows(base, kind, k, r, budget=tracker.remaining,
                 deadline=tracker.deadline)
    tracker.charge(res.nodes)
    return res


def ramsey_decide(kind: str, k: int, r: int, n: int,
                  budget: SearchBudget | None = None) -> ArrowsResult:
    """Does the complete graph on n vertices arrow the pattern?"""
    if kind not in ("clique", "cycle"):
        raise InputError(f"unknown pattern kind {kind!r}")
    if kind == "clique" and k == 2:
        # a 2-clique is an edge; one edge forces a monochromatic copy
        from .colouring import Colouring

        if n >= 2:
            return ArrowsResult(ARROWS, None, 0)
        return ArrowsResult(NOT_ARROWS, Colouring({}, r), 0)
    if n < k:
        raise InputError(f"hosting {k}-vertex patterns needs n >= {k}")
    tracker = budget.start() if budget else BudgetTracker(None)
    return _tracked_arrows(complete_graph(n), kind, k, r, tracker)


@dataclass(frozen=True)
class NumberResult:
    status: str  # EXACT | LOWER_BOUND_ONLY
    value: int | None  # the number itself when exact
    n_reached: int  # largest size proven not to arrow
    nodes: int

    @property
    def lower_bound(self) -> int:
        return self.n_reached + 1


def ramsey_number(kind: str, k: int, r: int,
                  budget: SearchBudget | None = None) -> NumberResult:
    """Least n such that the complete graph on n vertices arrows the pattern."""
    if kind == "clique" and k == 2:
        return NumberResult(EXACT, 2, 1, 0)
    tracker = (budget or SearchBudget()).start()
    nodes = 0
    n = k
    while True:
        res = _tracked_arrows(complete_graph(n), kind, k, r, tracker)
        nodes += res.nodes
        if res.status == ARROWS:
            return NumberResult(EXACT, n, n - 1, nodes)
        if res.status == BUDGET_EXCEEDED:
            return NumberResult(LOWER_BOUND_ONLY, None, n - 1, nodes)
        n += 1


def vdw_decide(n: int, k: int, r: int,
               budget: SearchBudget | None = None) -> ArrowsResult:
    """Does every r-colouring of {1..n} contain a monochromatic k-term AP?"""
    if n < 1:
        raise InputError(f"interval length must be positive, got {n}")
    tracker = (budget or SearchBudget()).start()
    return _tracked_arrows(n, "ap", k, r, tracker)


def vdw_number(k: int, r: int,
               budget: SearchBudget | None = None) -> NumberResult:
    """Least n with the van der Waerden property for (k, r)."""
    tracker = (budget or SearchBudget()).start()
    nodes = 0
    n = k
    while True:
        res = _tracked_arrows(n, "ap", k, r, tracker)
        nodes += res.nodes
        if res.status == ARROWS:
            return NumberResult(EXACT, n, n - 1, nodes)
        if res.status == BUDGET_EXCEEDED:
            return NumberResult(LOWER_BOUND_ONLY, None, n - 1, nodes)
        n += 1


class FactViolationError(RuntimeError):
    """Neither disjunct of the colouring dichotomy held.

    Signals a bug or an interval too short for the counting argument.
    """


FIRST_BRANCH = "first"
SECOND_BRANCH = "second"
BOTH_BRANCHES = "both"


@dataclass(frozen=True)
class FactCheckResult:
    branch: str  # FIRST_BRANCH | SECOND_BRANCH | BOTH_BRANCHES
    mono_count: int  # monochromatic k-APs within the first r colours
    mono_threshold: float  # ap_count(n, k) / W^3
    last_class_size: int
    last_threshold: float  # n / (4 W)


def count_monochromatic_aps(colour_of: np.ndarray, n: int, k: int,
                            max_colour: int) -> int:
    """Monochromatic k-term APs of {1..n} in colours 1..max_colour.

    `colour_of` is indexed 1..n (slot 0 ignored).  Vectorised over the
    common difference, exact integer result.
    """
    total = 0
    for d in range(1, (n - 1) // (k - 1) + 1):
        length = n - (k - 1) * d
        first = colour_of[1:1 + length]
        mono = first <= max_colour
        for t in range(1, k):
            mono &= colour_of[1 + t * d: 1 + t * d + length] == first
        total += int(np.count_nonzero(mono))
    return total


def fact_vdw_check(colours, k: int, r: int, w: int,
                   verify_w: bool = False,
                   budget: SearchBudget | None = None) -> FactCheckResult:
    """Which disjunct holds for an (r+1)-colouring of an interval?

    Either the first r colours already carry more than ap_count(n,k)/W^3
    monochromatic k-APs, or more than n/(4W) elements wear colour r+1.
    The counting argument behind the dichotomy needs the interval to carry
    at least n^2/(2W) W-term APs; shorter intervals are refused outright
    rather than guessed at.
    """
    mapping = colours.colours if hasattr(colours, "colours") else dict(colours)
    n = len(mapping)
    if set(mapping) != set(range(1, n + 1)):
        raise InputError("colouring must cover an interval {1..n} totally")
    arr = np.zeros(n + 1, dtype=np.int64)
    for v, c in mapping.items():
        if not 1 <= c <= r + 1:
            raise InputError(f"colour {c} outside 1..{r + 1}")
        arr[v] = c
    if verify_w:
        res = vdw_decide(w, k, r, budget)
        if res.status != ARROWS:
            raise InputError(
                f"W={w} is not verified to force monochromatic {k}-APs "
                f"with {r} colours (got {res.status})")
    long_aps = ap_count_formula(n, w) if n >= w else 0
    if 2 * w * long_aps < n * n:
        raise InputError(
            f"interval too short for the dichotomy: {long_aps} {w}-term APs "
            f"in {{1..{n}}} but the argument needs at least n^2/(2W) = "
            f"{n * n / (2 * w):.0f}")

    mono = count_monochromatic_aps(arr, n, k, r)
    last_size = int(np.count_nonzero(arr == r + 1))
    ap_total = ap_count_formula(n, k)
    first = mono * w**3 > ap_total
    second = 4 * w * last_size > n
    if first and second:
        branch = BOTH_BRANCHES
    elif first:
        branch = FIRST_BRANCH
    elif second:
        branch = SECOND_BRANCH
    else:
        raise FactViolationError(
            f"neither branch holds: {mono} monochromatic APs "
            f"(threshold {ap_total / w**3:.2f}), last colour class "
            f"{last_size} (threshold {n / (4 * w):.2f})")
    return FactCheckResult(branch, mono, ap_total / w**3, last_size,
                           n / (4 * w))
