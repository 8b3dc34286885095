"""The constructed value map on the even-Fibonacci system and its exhaustive
verification.

f maps an integer to the sum of digit / basis-element over its canonical
representation in the even-Fibonacci system. Nearby integers receive values
at least 1/distance apart; :func:`verify_range` checks that property for
every pair in a range, exactly.

Two ordering shortcuts hold and are exposed as operations: integer order is
decided by the most-significant differing digit, while f-order is decided by
the least-significant differing digit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import PreconditionError
from .fib_core import basis, below_golden_ratio
from .generic_proxinv import (
    DEFAULT_MAX_PAIRS,
    ConstraintFunction,
    Violation,
    ViolationReport,
    exhaustive_gap_check,
)
from .numeration import DigitString, _fib_even_digits, decode

__all__ = [
    "OrderingVerdict",
    "Violation",
    "ViolationReport",
    "f_value",
    "compare_by_value",
    "compare_by_f",
    "verify_range",
    "max_f_up_to_length",
    "supremum_partial",
]


@dataclass(frozen=True)
class OrderingVerdict:
    """Relative order of two quantities, with the 1-based digit position that
    decided it. ``witness_position`` is None exactly when the inputs were the
    same integer."""

    relation: str  # "less" | "equal" | "greater"
    witness_position: int | None = None


@lru_cache(maxsize=None)
def f_value(a: int) -> Fraction:
    """Return sum(d_i / u_i) over the canonical digits of a. f_value(0) = 0."""
    if a < 0:
        raise PreconditionError(f"f is defined on non-negative integers, got {a}")
    return sum(
        (Fraction(d, basis(i)) for i, d in enumerate(_fib_even_digits(a), start=1) if d),
        Fraction(0),
    )


def compare_by_value(a: int, b: int) -> OrderingVerdict:
    """Order a and b by the most-significant position where their digit
    strings differ (zero-padded). Agrees with the integer order."""
    xa, xb = _fib_even_digits(a), _fib_even_digits(b)
    la, lb = len(xa), len(xb)
    if la != lb:
        # Canonical strings: the longer one has a nonzero top digit where the
        # shorter has an implicit zero, and everything above is zero in both.
        return OrderingVerdict("less" if la < lb else "greater", max(la, lb))
    for i in range(la - 1, -1, -1):
        if xa[i] != xb[i]:
            return OrderingVerdict("less" if xa[i] < xb[i] else "greater", i + 1)
    return OrderingVerdict("equal")


def compare_by_f(a: int, b: int) -> OrderingVerdict:
    """Order f(a) and f(b) by the least-significant position where the digit
    strings differ. Equality occurs only for a = b, since the digit map is
    injective on canonical representations."""
    xa, xb = _fib_even_digits(a), _fib_even_digits(b)
    la, lb = len(xa), len(xb)
    for i in range(max(la, lb)):
        da = xa[i] if i < la else 0
        db = xb[i] if i < lb else 0
        if da != db:
            return OrderingVerdict("less" if da < db else "greater", i + 1)
    return OrderingVerdict("equal")


def verify_range(
    n: int,
    constraint: ConstraintFunction | None = None,
    *,
    workers: int = 1,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> ViolationReport:
    """Check |f(a) - f(b)| >= constraint(b - a) for every 0 <= a < b <= n.

    The default constraint is 1/n. All comparisons are exact; pairs that meet
    the bound with equality (consecutive integers do) are not violations.
    Workers may split the pair space; the report is deterministic either way.
    """
    if n < 0:
        raise PreconditionError(f"range end must be >= 0, got {n}")
    constraint = constraint if constraint is not None else ConstraintFunction.reciprocal()
    values = [f_value(a) for a in range(n + 1)]
    return exhaustive_gap_check(values, constraint, workers=workers, max_pairs=max_pairs)


def max_f_up_to_length(n: int) -> tuple[int, Fraction]:
    """Return the integer maximizing f among those of representation length
    at most n, together with its f-value.

    The maximizer is the integer whose digits are 2 followed by n - 1 ones,
    and the value is 1 + sum(1/u_i, i = 1..n).
    """
    if n < 1:
        raise PreconditionError(f"length bound must be >= 1, got {n}")
    argmax = decode(DigitString((2,) + (1,) * (n - 1)))
    value = 1 + sum(Fraction(1, basis(i)) for i in range(1, n + 1))
    return argmax, value


def supremum_partial(n: int) -> Fraction:
    """Return 1 + sum(1/u_i, i = 1..n) exactly.

    The sequence is strictly increasing in n and converges to the supremum of
    f, approximately 2.5353. Each partial sum term is confirmed to stay below
    the golden ratio, so every value here is below 1 + golden ratio.
    """
    if n < 1:
        raise PreconditionError(f"partial sums are indexed from 1, got {n}")
    total = sum(Fraction(1, basis(i)) for i in range(1, n + 1))
    if not below_golden_ratio(total):  # pragma: no cover - mathematically impossible
        raise ArithmeticError(f"partial sum {total} exceeded the golden ratio bound")
    return 1 + total
