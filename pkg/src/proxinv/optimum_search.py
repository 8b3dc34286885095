"""Exact brute-force optimization of finite gap-constraint instances.

Given finitely many points and a constraint function, find an assignment of
non-negative rational values whose pairwise gaps meet the constraint while
the largest assigned value is as small as possible.

The search fixes an ascending order of values and propagates the minimal
feasible value point by point (each new value is the max over already-placed
points of their value plus the required gap); minimizing over all orders is
exact because constraints depend only on pairwise distances and 0 is the
natural floor. Reversing an order never changes its propagated maximum, so
only orders whose first point is below their last are evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Mapping, Sequence

from .errors import PreconditionError, ResourceLimitError
from .fib_core import fib
from .generic_proxinv import ConstraintFunction
from .proxinv_fib import f_value, max_f_up_to_length

__all__ = [
    "DEFAULT_MAX_POINTS",
    "FiniteInstance",
    "OptimumResult",
    "ConjectureReport",
    "minimal_max_for_order",
    "exact_optimum",
    "conjectured_bound",
    "compare_with_conjecture",
]

DEFAULT_MAX_POINTS = 9


@dataclass(frozen=True)
class FiniteInstance:
    """A finite set of points (strictly increasing) with a constraint."""

    points: tuple[int, ...]
    constraint: ConstraintFunction

    def __post_init__(self) -> None:
        pts = tuple(int(p) for p in self.points)
        if not pts:
            raise PreconditionError("an instance needs at least one point")
        if any(p < 0 for p in pts):
            raise PreconditionError(f"points must be non-negative integers, got {pts}")
        if any(pts[i] >= pts[i + 1] for i in range(len(pts) - 1)):
            raise PreconditionError(f"points must be strictly increasing, got {pts}")
        object.__setattr__(self, "points", pts)


@dataclass(frozen=True)
class OptimumResult:
    """Outcome of the exact search.

    ``witness`` maps every point to its assigned value; it satisfies every
    pairwise constraint, its minimum is 0 and its maximum is ``optimum``.
    ``order`` is the ascending value order that achieved the optimum
    (lexicographically smallest among optimal orders), and
    ``orders_explored`` counts the orders actually evaluated after reversal
    symmetry halved the space.
    """

    optimum: Fraction
    witness: dict[int, Fraction]
    order: tuple[int, ...]
    orders_explored: int


def _pair_costs(inst: FiniteInstance) -> dict[tuple[int, int], Fraction]:
    pts = inst.points
    costs: dict[tuple[int, int], Fraction] = {}
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            c = inst.constraint(q - p)
            costs[(p, q)] = c
            costs[(q, p)] = c
    return costs


def _propagate(perm: Sequence[int], costs: Mapping[tuple[int, int], Fraction]) -> list[Fraction]:
    values = [Fraction(0)]
    for j in range(1, len(perm)):
        pj = perm[j]
        values.append(max(values[i] + costs[(perm[i], pj)] for i in range(j)))
    return values


def _assert_feasible(witness: Mapping[int, Fraction], inst: FiniteInstance) -> None:
    pts = inst.points
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            if abs(witness[p] - witness[q]) < inst.constraint(q - p):
                raise ArithmeticError(
                    f"internal error: witness violates the pair ({p}, {q})"
                )


def minimal_max_for_order(
    perm: Sequence[int], inst: FiniteInstance
) -> tuple[Fraction, dict[int, Fraction]]:
    """Treat ``perm`` as the ascending order of assigned values and return
    the minimal achievable maximum for that order with the full assignment.

    The first point gets 0; every later point gets the smallest value
    compatible with all already-placed points. The returned assignment
    satisfies every pairwise constraint.
    """
    order = tuple(perm)
    if sorted(order) != list(inst.points):
        raise PreconditionError(
            f"{order} is not a permutation of the instance points {inst.points}"
        )
    values = _propagate(order, _pair_costs(inst))
    assignment = {p: v for p, v in sorted(zip(order, values))}
    return max(values), assignment


def exact_optimum(inst: FiniteInstance, *, max_points: int = DEFAULT_MAX_POINTS) -> OptimumResult:
    """Minimize the per-order maximum over every ascending value order.

    Ties between equally optimal orders break to the lexicographically
    smallest order. The witness is re-verified against every pairwise
    constraint before returning.
    """
    m = len(inst.points)
    if m > max_points:
        raise ResourceLimitError(
            f"{m} points exceed the exact-search limit of {max_points} "
            f"(the search is factorial in the point count)"
        )
    costs = _pair_costs(inst)
    best_value: Fraction | None = None
    best_order: tuple[int, ...] = ()
    best_values: list[Fraction] = []
    explored = 0
    # permutations() yields in lexicographic order, so the first optimum seen
    # is the lexicographically smallest. A permutation and its reverse always
    # propagate to the same maximum; keeping first < last picks the smaller
    # of each such pair.
    for perm in permutations(inst.points):
        if m > 1 and perm[0] > perm[-1]:
            continue
        explored += 1
        values = _propagate(perm, costs)
        top = max(values)
        if best_value is None or top < best_value:
            best_value = top
            best_order = perm
            best_values = values
    assert best_value is not None
    witness = {p: v for p, v in sorted(zip(best_order, best_values))}
    _assert_feasible(witness, inst)
    if min(witness.values()) != 0:
        raise ArithmeticError("internal error: witness floor is not 0")
    return OptimumResult(best_value, witness, best_order, explored)


def conjectured_bound(n: int) -> Fraction:
    """Return 1 + sum(1/fib(2i), i = 1..n-1) + 1/fib(2n+1) exactly.

    This is the proposed optimal maximum for the instance {1, ..., fib(2n)}
    with the reciprocal constraint; it is reported as a reference value and
    never asserted as ground truth.
    """
    if n < 2:
        raise PreconditionError(f"the bound is stated for n > 1, got {n}")
    return (
        1
        + sum(Fraction(1, fib(2 * i)) for i in range(1, n))
        + Fraction(1, fib(2 * n + 1))
    )


@dataclass(frozen=True)
class ConjectureReport:
    """Exact optimum versus the conjectured bound versus the constructed map.

    ``f_length_max`` is the maximum of the constructed map over integers of
    representation length at most n (achieved at ``f_length_argmax``);
    ``f_max_on_points`` is its maximum over the instance points themselves.
    ``flags`` records the exact order relations; no claim is made about which
    value should win.
    """

    n: int
    points: tuple[int, ...]
    optimum: OptimumResult
    conjectured: Fraction
    f_length_max: Fraction
    f_length_argmax: int
    f_max_on_points: Fraction
    flags: dict[str, str]


def _relation(x: Fraction, y: Fraction) -> str:
    if x < y:
        return "less"
    return "equal" if x == y else "greater"


def compare_with_conjecture(n: int, *, max_points: int = DEFAULT_MAX_POINTS) -> ConjectureReport:
    """Brute-force the instance {1, ..., fib(2n)} with the reciprocal
    constraint and report the optimum, the conjectured bound, and the maxima
    of the constructed map, all exactly."""
    if n < 2:
        raise PreconditionError(f"the comparison is stated for n > 1, got {n}")
    size = fib(2 * n)
    if size > max_points:
        raise ResourceLimitError(
            f"the instance for n = {n} has {size} points, above the exact-search "
            f"limit of {max_points}; raise max_points to force the search"
        )
    inst = FiniteInstance(tuple(range(1, size + 1)), ConstraintFunction.reciprocal())
    optimum = exact_optimum(inst, max_points=max_points)
    bound = conjectured_bound(n)
    argmax, length_max = max_f_up_to_length(n)
    on_points = max(f_value(p) for p in inst.points)
    flags = {
        "optimum_vs_conjectured": _relation(optimum.optimum, bound),
        "optimum_vs_f_length_max": _relation(optimum.optimum, length_max),
        "conjectured_vs_f_length_max": _relation(bound, length_max),
    }
    return ConjectureReport(
        n=n,
        points=inst.points,
        optimum=optimum,
        conjectured=bound,
        f_length_max=length_max,
        f_length_argmax=argmax,
        f_max_on_points=on_points,
        flags=flags,
    )
