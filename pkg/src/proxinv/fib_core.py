"""Exact Fibonacci arithmetic: the sequence, the even-indexed basis, identity
evaluators, and the exact golden-ratio comparison.

Everything here is integer or ``fractions.Fraction`` arithmetic. No floating
point is used anywhere; decimal renderings exist for display only and never
feed back into a verdict.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

from .errors import PreconditionError

__all__ = [
    "fib",
    "basis",
    "below_golden_ratio",
    "decimal_str",
    "IdentityKind",
    "IdentityVerdict",
    "evaluate_identity",
    "IdentitySuiteResult",
    "run_identity_suite",
]


_fib_values = [0, 1]
_fib_lock = threading.Lock()


def fib(n: int) -> int:
    """Return the n-th Fibonacci number, with fib(0) = 0 and fib(1) = 1."""
    if n < 0:
        raise PreconditionError(f"Fibonacci index must be >= 0, got {n}")
    if n >= len(_fib_values):
        with _fib_lock:
            while len(_fib_values) <= n:
                _fib_values.append(_fib_values[-1] + _fib_values[-2])
    return _fib_values[n]


def basis(i: int) -> int:
    """Return the i-th element of the even-indexed basis, u_i = fib(2i).

    The basis is 1-indexed: basis(1) = 1, basis(2) = 3, basis(3) = 8, ...
    """
    if i < 1:
        raise PreconditionError(f"basis is 1-indexed, so i must be >= 1, got {i}")
    return fib(2 * i)


def below_golden_ratio(q: Fraction | int) -> bool:
    """Decide q < (1 + sqrt(5))/2 exactly.

    The comparison is rephrased so no irrational value is ever materialized:
    for q >= 1/2 it is equivalent to (2q - 1)^2 < 5, and for q < 1/2 it is
    always true.
    """
    q = Fraction(q)
    if 2 * q < 1:
        return True
    return (2 * q - 1) ** 2 < 5


def decimal_str(q: Fraction | int, digits: int = 12) -> str:
    """Render a rational with the given number of significant digits.

    Rounding is half-to-even. The result is for human display and report
    fields only; comparisons in this package are always exact.
    """
    q = Fraction(q)
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        return str(Decimal(q.numerator) / Decimal(q.denominator))


class IdentityKind(str, Enum):
    """Identifiers for the supported Fibonacci identities and inequalities."""

    CATALAN = "CATALAN"
    CATFRAC = "CATFRAC"
    SUM_EVEN = "SUM_EVEN"
    SUM_COR1 = "SUM_COR1"
    SUM_COR2 = "SUM_COR2"
    SUM_COR3 = "SUM_COR3"
    RECIP_SUM = "RECIP_SUM"
    RECIP_COR1 = "RECIP_COR1"
    RECIP_COR2 = "RECIP_COR2"
    RECIP_SUM2 = "RECIP_SUM2"


@dataclass(frozen=True)
class IdentityVerdict:
    """Outcome of evaluating one identity instance exactly.

    ``holds`` is true iff ``lhs`` and ``rhs`` satisfy ``relation_claimed``.
    For the parity-conditional kind (CATFRAC) the claimed relation flips with
    the parity of k + r; see :func:`evaluate_identity`.
    """

    kind: IdentityKind
    params: tuple[int, ...]
    lhs: Fraction
    rhs: Fraction
    relation_claimed: str
    holds: bool


def _recip(i: int) -> Fraction:
    return Fraction(1, basis(i))


def _catalan_sides(n: int, r: int) -> tuple[Fraction, Fraction]:
    lhs = Fraction(fib(n) ** 2 - fib(n + r) * fib(n - r))
    rhs = Fraction((-1) ** (n + r) * fib(r) ** 2)
    return lhs, rhs


def _catfrac_sides(k: int, r: int) -> tuple[Fraction, Fraction]:
    return Fraction(fib(k + r), fib(k) ** 2 - 1), Fraction(1, fib(k - r))


def _sum_even_sides(k: int, n: int) -> tuple[Fraction, Fraction]:
    lhs = Fraction(sum(fib(2 * i) for i in range(k, n + 1)))
    rhs = Fraction(fib(2 * n + 1) - fib(2 * k - 1))
    return lhs, rhs


def _sum_cor1_sides(k: int, n: int) -> tuple[Fraction, Fraction]:
    lhs = (
        basis(k)
        + basis(n)
        - sum(basis(i) for i in range(k + 1, n))
        - basis(k + 1)
        - basis(n - 1)
    )
    return Fraction(lhs), Fraction(0)


def _sum_cor2_sides(k: int, n: int) -> tuple[Fraction, Fraction]:
    lhs = 2 * basis(k + 1) + sum(basis(i) for i in range(k + 2, n + 1)) - basis(k)
    return Fraction(lhs), Fraction(fib(2 * n + 1))


def _sum_cor3_sides(k: int, n: int) -> tuple[Fraction, Fraction]:
    # The right-hand side is fib(2k - 1), not fib(2k + 1): with the sum
    # starting at index k the telescoped value is F_{2k-1} (check k=1, n=2:
    # 3 - 1 - 1 = 1 = F_1), and that is also the value the downstream gap
    # arguments need.
    lhs = basis(n) - basis(n - 1) - sum(basis(i) for i in range(k, n))
    return Fraction(lhs), Fraction(fib(2 * k - 1))


def _recip_sum_sides(k: int, n: int) -> tuple[Fraction, Fraction]:
    lhs = sum(Fraction(1, fib(2 * i)) for i in range(k, n + 1))
    rhs = (
        Fraction(1, fib(2 * k - 2))
        + Fraction(1, fib(2 * n + 2))
        - Fraction(1, fib(2 * k))
        - Fraction(1, fib(2 * n))
    )
    return lhs, rhs


def _recip_cor1_sides(k: int, n: int) -> tuple[Fraction, Fraction]:
    lhs = sum(_recip(i) for i in range(k + 1, n)) + _recip(k + 1) + _recip(n - 1)
    rhs = _recip(n) + _recip(k)
    return lhs, rhs


def _recip_cor2_sides(k: int, n: int) -> tuple[Fraction, Fraction]:
    lhs = (
        sum(_recip(i) for i in range(k + 1, n + 1))
        + _recip(k + 1)
        + Fraction(1, fib(2 * n + 1))
    )
    return lhs, _recip(k)


def _recip_sum2_sides(k: int, n: int) -> tuple[Fraction, Fraction]:
    lhs = Fraction(1, fib(2 * n)) + Fraction(1, fib(2 * k - 1))
    rhs = sum(Fraction(1, fib(2 * i)) for i in range(k, n - 1)) + Fraction(
        2, fib(2 * n - 2)
    )
    return lhs, rhs


@dataclass(frozen=True)
class _IdentityDef:
    params: tuple[str, str]
    relation: str
    domain: Callable[[int, int], str | None]
    sides: Callable[[int, int], tuple[Fraction, Fraction]]


def _dom_catalan(n: int, r: int) -> str | None:
    if r < 0 or n < 0:
        return "requires n >= 0 and r >= 0"
    if r > n:
        return "requires r <= n"
    return None


def _dom_catfrac(k: int, r: int) -> str | None:
    if r < 0:
        return "requires r >= 0"
    if r >= k:
        return "requires r < k"
    if k < 3:
        return "requires k >= 3 (the denominator fib(k)^2 - 1 vanishes for k <= 2)"
    return None


def _dom_pair(min_k: int, min_gap: int) -> Callable[[int, int], str | None]:
    def check(k: int, n: int) -> str | None:
        if k < min_k:
            return f"requires k >= {min_k}"
        if n < k + min_gap:
            if min_gap == 0:
                return "requires k <= n"
            return f"requires n > k{' + 1' if min_gap == 2 else ''}"
        return None

    return check


_IDENTITIES: dict[IdentityKind, _IdentityDef] = {
    IdentityKind.CATALAN: _IdentityDef(("n", "r"), "equal", _dom_catalan, _catalan_sides),
    IdentityKind.CATFRAC: _IdentityDef(("k", "r"), "parity-iff", _dom_catfrac, _catfrac_sides),
    IdentityKind.SUM_EVEN: _IdentityDef(("k", "n"), "equal", _dom_pair(1, 0), _sum_even_sides),
    IdentityKind.SUM_COR1: _IdentityDef(("k", "n"), "equal", _dom_pair(1, 2), _sum_cor1_sides),
    IdentityKind.SUM_COR2: _IdentityDef(("k", "n"), "equal", _dom_pair(1, 2), _sum_cor2_sides),
    IdentityKind.SUM_COR3: _IdentityDef(("k", "n"), "equal", _dom_pair(1, 1), _sum_cor3_sides),
    IdentityKind.RECIP_SUM: _IdentityDef(("k", "n"), "less", _dom_pair(2, 0), _recip_sum_sides),
    IdentityKind.RECIP_COR1: _IdentityDef(("k", "n"), "less-or-equal", _dom_pair(1, 2), _recip_cor1_sides),
    IdentityKind.RECIP_COR2: _IdentityDef(("k", "n"), "less", _dom_pair(1, 2), _recip_cor2_sides),
    IdentityKind.RECIP_SUM2: _IdentityDef(("k", "n"), "less-or-equal", _dom_pair(1, 1), _recip_sum2_sides),
}


def evaluate_identity(kind: IdentityKind | str, params: Sequence[int]) -> IdentityVerdict:
    """Evaluate both sides of an identity exactly and report whether the
    claimed relation holds.

    Both sides are computed independently from the raw Fibonacci values, with
    no shared intermediate expressions, so the evaluators can serve as each
    other's oracle.

    For CATFRAC the claim is parity-conditional: lhs <= rhs exactly when
    k + r is even, with equality exactly at r in {1, 2} (and even k + r).
    """
    try:
        kind = IdentityKind(kind)
    except ValueError:
        raise PreconditionError(f"unknown identity kind {kind!r}") from None
    spec = _IDENTITIES[kind]
    values = tuple(int(p) for p in params)
    if len(values) != len(spec.params):
        raise PreconditionError(
            f"{kind.value} takes parameters {spec.params}, got {len(values)} values"
        )
    message = spec.domain(*values)
    if message is not None:
        named = ", ".join(f"{name}={v}" for name, v in zip(spec.params, values))
        raise PreconditionError(f"{kind.value} {message} (got {named})")
    lhs, rhs = spec.sides(*values)
    if spec.relation == "equal":
        holds = lhs == rhs
    elif spec.relation == "less":
        holds = lhs < rhs
    elif spec.relation == "less-or-equal":
        holds = lhs <= rhs
    else:  # parity-iff
        even = (values[0] + values[1]) % 2 == 0
        holds = ((lhs <= rhs) == even) and ((lhs == rhs) == (even and values[1] in (1, 2)))
    return IdentityVerdict(kind, values, lhs, rhs, spec.relation, holds)


@dataclass(frozen=True)
class IdentitySuiteResult:
    """Summary of sweeping every identity kind over its parameter range."""

    limit: int
    catalan_limit: int
    evaluated: dict[str, int]
    failures: tuple[IdentityVerdict, ...]
    catfrac_equalities: int

    @property
    def total(self) -> int:
        return sum(self.evaluated.values())

    @property
    def ok(self) -> bool:
        return not self.failures


def _suite_ranges(kind: IdentityKind, limit: int, catalan_limit: int):
    if kind is IdentityKind.CATALAN:
        for n in range(0, catalan_limit + 1):
            for r in range(0, n + 1):
                yield (n, r)
    elif kind is IdentityKind.CATFRAC:
        # r = 0 with k even genuinely violates the parity claim (the product
        # F_{k+0} * F_{k-0} equals F_k^2, which exceeds F_k^2 - 1), so the
        # sweep covers r >= 1. The r = 0 edge is pinned by a dedicated test.
        for k in range(3, limit + 1):
            for r in range(1, k):
                yield (k, r)
    elif kind is IdentityKind.RECIP_SUM:
        for k in range(2, limit + 1):
            for n in range(k, limit + 1):
                yield (k, n)
    elif kind is IdentityKind.SUM_EVEN:
        for k in range(1, limit + 1):
            for n in range(k, limit + 1):
                yield (k, n)
    elif kind in (IdentityKind.SUM_COR3, IdentityKind.RECIP_SUM2):
        for k in range(1, limit):
            for n in range(k + 1, limit + 1):
                yield (k, n)
    else:  # the n > k + 1 family
        for k in range(1, limit - 1):
            for n in range(k + 2, limit + 1):
                yield (k, n)


def run_identity_suite(limit: int = 80, catalan_limit: int = 150) -> IdentitySuiteResult:
    """Evaluate every identity kind over its full parameter range.

    ``limit`` bounds k and n for the summation and reciprocal statements;
    ``catalan_limit`` bounds the quadratic identity, which is cheap enough to
    sweep further.
    """
    if limit < 3 or catalan_limit < 0:
        raise PreconditionError("suite limits must satisfy limit >= 3 and catalan_limit >= 0")
    evaluated: dict[str, int] = {}
    failures: list[IdentityVerdict] = []
    catfrac_equalities = 0
    for kind in IdentityKind:
        count = 0
        for params in _suite_ranges(kind, limit, catalan_limit):
            verdict = evaluate_identity(kind, params)
            count += 1
            if not verdict.holds:
                failures.append(verdict)
            if kind is IdentityKind.CATFRAC and verdict.lhs == verdict.rhs:
                catfrac_equalities += 1
        evaluated[kind.value] = count
    return IdentitySuiteResult(
        limit=limit,
        catalan_limit=catalan_limit,
        evaluated=evaluated,
        failures=tuple(failures),
        catfrac_equalities=catfrac_equalities,
    )
