"""Reciprocal digit maps over arbitrary numeration systems, constraint
functions, and the exhaustive pairwise gap checker.

The metric throughout is the absolute difference |a - b| on the non-negative
integers; its positive values are integers, so constraint functions only need
to be defined on positive integer distances.

The checker makes no assumption that the digit map is injective for a given
system: two integers mapping to the same value count as a violation whenever
the required gap at their distance is positive.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Sequence, Union

from .errors import PreconditionError, ResourceLimitError
from .numeration import FIB_EVEN, NumerationSystem, encode

__all__ = [
    "NATURAL_METRIC",
    "ConstraintFunction",
    "Violation",
    "ViolationReport",
    "exhaustive_gap_check",
    "f_generic",
    "check_system",
    "DEFAULT_MAX_PAIRS",
]

# The one metric in play; kept as documentation of the fixed choice.
NATURAL_METRIC = "d(a, b) = |a - b|"

DEFAULT_MAX_PAIRS = 100_000_000

RationalLike = Union[Fraction, int, str]


class ConstraintFunction:
    """A non-increasing map from positive integer distances to required gaps.

    Values are exact rationals and must be non-negative. Evaluations are
    cached as a prefix 1..n; each newly evaluated value is checked against
    its predecessor, so any violation of monotonicity on the evaluated prefix
    is reported as soon as it is observable.
    """

    def __init__(self, rule: Callable[[int], Fraction], description: str):
        self._rule = rule
        self.description = description
        self._values: list[Fraction] = []

    def __call__(self, n: int) -> Fraction:
        if n < 1:
            raise PreconditionError(f"distances are positive integers, got {n}")
        while len(self._values) < n:
            m = len(self._values) + 1
            value = Fraction(self._rule(m))
            if value < 0:
                raise PreconditionError(
                    f"constraint '{self.description}' is negative at {m}: {value}"
                )
            if self._values and value > self._values[-1]:
                raise PreconditionError(
                    f"constraint '{self.description}' increases from {self._values[-1]} "
                    f"at {m - 1} to {value} at {m}; it must be non-increasing"
                )
            self._values.append(value)
        return self._values[n - 1]

    def __repr__(self) -> str:
        return f"ConstraintFunction({self.description!r})"

    @classmethod
    def reciprocal(cls, scale: RationalLike = 1) -> "ConstraintFunction":
        """c(n) = scale / n; the default scale of 1 gives c(n) = 1/n."""
        k = Fraction(scale)
        if k < 0:
            raise PreconditionError(f"reciprocal scale must be non-negative, got {k}")
        description = "1/n" if k == 1 else f"{k}/n"
        return cls(lambda n: k / n, description)

    @classmethod
    def constant(cls, value: RationalLike) -> "ConstraintFunction":
        v = Fraction(value)
        return cls(lambda n: v, f"constant {v}")

    @classmethod
    def from_table(cls, values: Sequence[RationalLike], tail: RationalLike = 0) -> "ConstraintFunction":
        """Explicit values for distances 1..len(values), then a flat tail."""
        table = tuple(Fraction(v) for v in values)
        t = Fraction(tail)
        description = "table[" + ",".join(str(v) for v in table) + f"] tail {t}"
        return cls(lambda n: table[n - 1] if n <= len(table) else t, description)


@dataclass(frozen=True)
class Violation:
    """One pair whose value gap fell short of the required gap (gap < required)."""

    a: int
    b: int
    gap: Fraction
    required: Fraction


@dataclass(frozen=True)
class ViolationReport:
    """Result of exhaustively checking every pair in a range.

    Violations are sorted by (a, b) and the report is identical regardless of
    how the pair space was partitioned across workers.
    """

    range_checked: tuple[int, int]
    constraint: str
    violations: tuple[Violation, ...]
    pairs_checked: int

    @property
    def ok(self) -> bool:
        return not self.violations


def _scan_block(args: tuple[list[int], list[tuple[int, int]], int, int, int]) -> list[tuple[int, int]]:
    # Pure integer inner loop: values are pre-scaled to a common denominator
    # D, and required gaps are stored as (num * D, den), so the exact test
    # |v_a - v_b| >= required becomes |s_a - s_b| * den >= num * D.
    scaled, thresholds, start, step, n = args
    found: list[tuple[int, int]] = []
    for a in range(start, n, step):
        sa = scaled[a]
        for b in range(a + 1, n + 1):
            delta = sa - scaled[b]
            if delta < 0:
                delta = -delta
            num_d, den = thresholds[b - a]
            if delta * den < num_d:
                found.append((a, b))
    return found


def exhaustive_gap_check(
    values: Sequence[Fraction],
    constraint: ConstraintFunction,
    *,
    workers: int = 1,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> ViolationReport:
    """Check |values[a] - values[b]| >= constraint(b - a) for every pair
    0 <= a < b <= n, where n = len(values) - 1. Entirely exact.

    The scan rescales all values to a shared denominator and works on
    integers; reported gaps are reconstructed as reduced fractions. With
    workers > 1 the pair space is split by residue classes of a; the merged,
    sorted report does not depend on the worker count.
    """
    if not values:
        raise PreconditionError("need at least the value at 0")
    n = len(values) - 1
    pairs = n * (n + 1) // 2
    if pairs > max_pairs:
        raise ResourceLimitError(
            f"{pairs} pairs exceed the configured bound of {max_pairs} pairs"
        )
    report_range = (0, n)
    if n == 0:
        return ViolationReport(report_range, constraint.description, (), 0)

    denom = lcm(*(v.denominator for v in values))
    scaled = [v.numerator * (denom // v.denominator) for v in values]
    thresholds = [(0, 1)]  # distance 0 is unused
    for d in range(1, n + 1):
        req = constraint(d)
        thresholds.append((req.numerator * denom, req.denominator))

    workers = max(1, workers)
    if workers == 1 or pairs < 100_000:
        raw = _scan_block((scaled, thresholds, 0, 1, n))
    else:
        blocks = [(scaled, thresholds, w, workers, n) for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            raw = [pair for chunk in pool.map(_scan_block, blocks) for pair in chunk]
        raw.sort()

    violations = tuple(
        Violation(a, b, Fraction(abs(scaled[a] - scaled[b]), denom), constraint(b - a))
        for a, b in raw
    )
    return ViolationReport(report_range, constraint.description, violations, pairs)


def f_generic(a: int, system: NumerationSystem) -> Fraction:
    """Map an integer to the sum of digit / basis-element over its greedy
    representation in the given system. f_generic(0, S) = 0 for every S."""
    if a < 0:
        raise PreconditionError(f"the digit map is defined on non-negative integers, got {a}")
    digits = encode(a, system)
    return sum(
        (Fraction(d, system.u(i)) for i, d in enumerate(digits, start=1) if d),
        Fraction(0),
    )


def check_system(
    system: NumerationSystem,
    constraint: ConstraintFunction,
    n: int,
    *,
    workers: int = 1,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> ViolationReport:
    """Exhaustively test the digit map of a system against a constraint
    function on 0..n. Returns every violating pair, sorted."""
    if n < 0:
        raise PreconditionError(f"range end must be >= 0, got {n}")
    values = [f_generic(a, system) for a in range(n + 1)]
    return exhaustive_gap_check(values, constraint, workers=workers, max_pairs=max_pairs)
