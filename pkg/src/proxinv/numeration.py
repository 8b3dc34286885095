"""Numeration systems and digit-string arithmetic.

Digit strings are stored least-significant digit first: position 1 is the
digit multiplying u_1. This matches the word convention used throughout the
package, so "prefix" always refers to the low-order digits. The canonical
form of an integer has no trailing zeros at the most-significant end, and the
empty string represents 0.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence, Union

from .errors import PreconditionError, ResourceLimitError
from .fib_core import fib

__all__ = [
    "DigitString",
    "NumerationSystem",
    "FraenkelRecurrence",
    "FIB_EVEN",
    "BINARY",
    "encode",
    "decode",
    "is_valid_fraenkel",
    "is_valid_fib",
    "check_two_fold_condition",
    "fib_two_fold",
    "enumerate_valid",
    "length_of",
    "DEFAULT_ENUM_BOUND",
]

DEFAULT_ENUM_BOUND = 16

Digits = Union["DigitString", Iterable[int]]


@dataclass(frozen=True)
class DigitString:
    """A finite digit sequence, least-significant digit first.

    Any non-negative digits are allowed; validity with respect to a
    particular numeration system is checked separately. Instances are
    immutable and hashable.
    """

    digits: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        clean = tuple(int(d) for d in self.digits)
        if any(d < 0 for d in clean):
            raise PreconditionError(f"digits must be non-negative, got {clean}")
        object.__setattr__(self, "digits", clean)

    @classmethod
    def coerce(cls, value: Digits) -> "DigitString":
        if isinstance(value, DigitString):
            return value
        return cls(tuple(value))

    def canonical(self) -> "DigitString":
        """Strip trailing most-significant zeros; the empty string is 0."""
        digits = self.digits
        end = len(digits)
        while end > 0 and digits[end - 1] == 0:
            end -= 1
        return self if end == len(digits) else DigitString(digits[:end])

    @property
    def is_canonical(self) -> bool:
        return not self.digits or self.digits[-1] != 0

    def digit(self, i: int) -> int:
        """Return the digit at 1-based position i (0 beyond the string)."""
        if i < 1:
            raise PreconditionError(f"digit positions are 1-based, got {i}")
        return self.digits[i - 1] if i <= len(self.digits) else 0

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __str__(self) -> str:
        if not self.digits:
            return "ε"
        return "[" + ",".join(str(d) for d in self.digits) + "]"


class NumerationSystem:
    """A strictly increasing basis u_1 = 1 < u_2 < ..., materialized lazily.

    The basis may come from a callable rule, a linear recurrence, or an
    explicit finite list. Monotonicity and u_1 = 1 are validated as elements
    are materialized; extension is guarded by a lock so concurrent readers
    always observe a consistent strictly increasing prefix.
    """

    def __init__(
        self,
        name: str,
        rule: Callable[[int, tuple[int, ...]], int] | None = None,
        initial: Sequence[int] = (),
    ):
        self.name = name
        self._rule = rule
        self._known: list[int] = []
        self._lock = threading.Lock()
        for value in initial:
            self._append(int(value))

    @classmethod
    def from_callable(cls, name: str, fn: Callable[[int], int]) -> "NumerationSystem":
        return cls(name, rule=lambda i, _known: fn(i))

    @classmethod
    def from_basis(cls, name: str, values: Sequence[int]) -> "NumerationSystem":
        """Build a system from an explicit finite basis list.

        Encoding an integer that needs elements beyond the list fails with a
        precondition error rather than guessing a continuation.
        """
        if not values:
            raise PreconditionError("an explicit basis needs at least one element")
        return cls(name, rule=None, initial=values)

    @classmethod
    def from_recurrence(
        cls, name: str, coefficients: Sequence[int], initial_values: Sequence[int]
    ) -> "NumerationSystem":
        """Build a system from u_n = sum(coefficients[j] * u_{n-1-j}).

        ``initial_values`` are u_1, u_2, ... and must cover at least as many
        terms as there are coefficients, so the recurrence never reaches below
        index 1.
        """
        coeffs = tuple(int(c) for c in coefficients)
        if not coeffs:
            raise PreconditionError("a recurrence needs at least one coefficient")
        if len(initial_values) < len(coeffs):
            raise PreconditionError(
                f"need at least {len(coeffs)} initial values for {len(coeffs)} coefficients"
            )

        def rule(i: int, known: tuple[int, ...]) -> int:
            return sum(c * known[i - 2 - j] for j, c in enumerate(coeffs))

        return cls(name, rule=rule, initial=initial_values)

    def _append(self, value: int) -> None:
        index = len(self._known) + 1
        if index == 1:
            if value != 1:
                raise PreconditionError(f"u_1 must be 1 in system '{self.name}', got {value}")
        elif value <= self._known[-1]:
            raise PreconditionError(
                f"basis of system '{self.name}' must be strictly increasing: "
                f"u_{index} = {value} <= u_{index - 1} = {self._known[-1]}"
            )
        self._known.append(value)

    def u(self, i: int) -> int:
        """Return u_i (1-based), materializing the basis as needed."""
        if i < 1:
            raise PreconditionError(f"basis indices are 1-based, got {i}")
        if i > len(self._known):
            with self._lock:
                while len(self._known) < i:
                    if self._rule is None:
                        raise PreconditionError(
                            f"finite basis '{self.name}' has only {len(self._known)} "
                            f"elements; u_{len(self._known) + 1} is not defined"
                        )
                    self._append(int(self._rule(len(self._known) + 1, tuple(self._known))))
        return self._known[i - 1]

    def largest_index_at_most(self, n: int) -> int:
        """Return the largest i with u_i <= n, or 0 when n < u_1."""
        if n < 1:
            return 0
        i = 1
        while self.u(i) <= n:
            i += 1
        return i - 1

    def __repr__(self) -> str:
        return f"NumerationSystem({self.name!r})"


FIB_EVEN = NumerationSystem.from_callable("fib-even", lambda i: fib(2 * i))
BINARY = NumerationSystem.from_callable("binary", lambda i: 1 << (i - 1))


def encode(n: int, system: NumerationSystem = FIB_EVEN) -> DigitString:
    """Encode a non-negative integer by greedy most-significant-first digit
    extraction.

    The output is canonical and always satisfies the prefix-sum validity
    condition: at every position the already-consumed remainder is below the
    next basis element. encode(0) is the empty string.
    """
    if n < 0:
        raise PreconditionError(f"only non-negative integers have representations, got {n}")
    top = system.largest_index_at_most(n)
    digits = [0] * top
    rem = n
    for i in range(top, 0, -1):
        digits[i - 1], rem = divmod(rem, system.u(i))
    return DigitString(tuple(digits))


def decode(x: Digits, system: NumerationSystem = FIB_EVEN) -> int:
    """Return sum(x[i] * u_i). Decodes any digit string, valid or not."""
    digits = DigitString.coerce(x).digits
    return sum(d * system.u(i) for i, d in enumerate(digits, start=1) if d)


def is_valid_fraenkel(x: Digits, system: NumerationSystem = FIB_EVEN) -> bool:
    """Check the prefix-sum condition: for every i,
    x[i]*u_i + ... + x[1]*u_1 < u_{i+1}.

    Trailing zeros never affect the answer, so only positions up to the
    length of x are examined.
    """
    digits = DigitString.coerce(x).digits
    total = 0
    for i, d in enumerate(digits, start=1):
        total += d * system.u(i)
        if total >= system.u(i + 1):
            return False
    return True


def is_valid_fib(x: Digits) -> bool:
    """Check validity for the even-Fibonacci system: digits in {0, 1, 2} and
    no factor of the form 2 1* 2, in one linear scan."""
    open_two = False  # a 2 has been seen with only 1s after it
    for d in DigitString.coerce(x).digits:
        if d > 2:
            return False
        if d == 2:
            if open_two:
                return False
            open_two = True
        elif d == 0:
            open_two = False
    return True


@dataclass(frozen=True)
class FraenkelRecurrence:
    """Parameters of the two-fold digit condition for recurrence systems.

    ``b`` is the non-increasing coefficient sequence b_1 >= ... >= b_m >= 1.
    ``initial_values`` holds the fixed non-negative values below index 0 in
    nearest-first order: initial_values[t] is u_{-(t+1)}. Missing entries are
    0, and u_0 = 1 is implied.
    """

    b: tuple[int, ...]
    initial_values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        b = tuple(int(v) for v in self.b)
        init = tuple(int(v) for v in self.initial_values)
        if not b:
            raise PreconditionError("coefficient sequence b must be non-empty")
        if b[-1] < 1:
            raise PreconditionError(f"coefficients must satisfy b_m >= 1, got b_m = {b[-1]}")
        if any(b[i] < b[i + 1] for i in range(len(b) - 1)):
            raise PreconditionError(f"coefficients must be non-increasing, got {b}")
        if any(v < 0 for v in init):
            raise PreconditionError(f"initial values must be non-negative, got {init}")
        if len(init) > len(b) - 1:
            raise PreconditionError(
                f"at most m - 1 = {len(b) - 1} initial values are meaningful, got {len(init)}"
            )
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "initial_values", init)

    def u_at(self, index: int) -> int:
        """Return u_index for index <= 0 (u_0 = 1, fixed values below)."""
        if index > 0:
            raise PreconditionError("u_at covers indices <= 0 only")
        if index == 0:
            return 1
        t = -index - 1
        return self.initial_values[t] if t < len(self.initial_values) else 0

    def boundary_sum(self, k: int) -> int:
        """Return sum(b_i * u_{k+1-i}) for i from k + 1 to m."""
        m = len(self.b)
        return sum(self.b[i - 1] * self.u_at(k + 1 - i) for i in range(k + 1, m + 1))


def check_two_fold_condition(x: Digits, rec: FraenkelRecurrence) -> bool:
    """Apply the two-fold digit condition literally.

    Digits here are numbered from 0, so DigitString position j corresponds
    to digit d_{j-1}. Writing m for the number of coefficients, the rules
    are, for every digit index k:

    * k >= m - 1: whenever (d_k, ..., d_{k-j+1}) = (b_1, ..., b_j) for some
      0 <= j <= m - 2, then d_{k-j} <= b_{j+1}; and if the match extends to
      j = m - 1 then d_{k-m+1} < b_m.
    * k < m - 1: the same bounded-digit rule for 0 <= j <= k - 1; and if the
      match extends to j = k, then d_0 < sum(b_i * u_{k+1-i}, i = k+1 .. m).

    The empty match (j = 0) counts as a match, which is what bounds every
    digit by b_1 and, at k = 0, bounds d_0 by the boundary sum. Matches are
    prefix-closed, so only the longest match at each k needs an explicit
    check; shorter matches satisfy their rule with equality.
    """
    d = DigitString.coerce(x).digits
    b = rec.b
    m = len(b)
    for k in range(len(d)):
        cap = m - 1 if k >= m - 1 else k
        j = 0
        while j < cap and d[k - j] == b[j]:
            j += 1
        if k >= m - 1:
            if j == m - 1:
                if not d[k - m + 1] < b[m - 1]:
                    return False
            elif not d[k - j] <= b[j]:
                return False
        else:
            if j == k:
                if not d[0] < rec.boundary_sum(k):
                    return False
            elif not d[k - j] <= b[j]:
                return False
    return True


def fib_two_fold(x: Digits) -> bool:
    """Validity via the two-fold condition, instantiated for the
    even-Fibonacci system.

    The instantiation for a string of length n uses m = n + 1 coefficients
    b = (2, 1, ..., 1) and fixed values u_0 = 1, u_{-1} = 1, u_{-t} = 0 for
    t >= 2. The u_{-1} = 1 term is forced by the recurrence identity
    fib(2n) = 2*fib(2n-2) + sum(fib(2i), i=1..n-2) + 1, whose trailing + 1
    is exactly the u_{-1} contribution; with a zero there the condition
    would wrongly reject the single digit 2. Agrees with
    :func:`is_valid_fib` on every string over {0, 1, 2}.
    """
    digits = DigitString.coerce(x)
    if not digits.digits:
        return True
    m = len(digits.digits) + 1
    rec = FraenkelRecurrence(b=(2,) + (1,) * (m - 1), initial_values=(1,))
    return check_two_fold_condition(digits, rec)


def _enumerate_fib(max_len: int) -> Iterator[tuple[int, ...]]:
    stack: list[tuple[tuple[int, ...], bool]] = [((), False)]
    while stack:
        prefix, open_two = stack.pop()
        if not prefix or prefix[-1] != 0:
            yield prefix
        if len(prefix) == max_len:
            continue
        for d in (0, 1, 2):
            if d == 2 and open_two:
                continue
            stack.append((prefix + (d,), open_two if d == 1 else d == 2))


def _enumerate_system(max_len: int, system: NumerationSystem) -> Iterator[tuple[int, ...]]:
    stack: list[tuple[tuple[int, ...], int]] = [((), 0)]
    while stack:
        prefix, total = stack.pop()
        if not prefix or prefix[-1] != 0:
            yield prefix
        if len(prefix) == max_len:
            continue
        i = len(prefix) + 1
        u_i, u_next = system.u(i), system.u(i + 1)
        d = 0
        while total + d * u_i < u_next:
            stack.append((prefix + (d,), total + d * u_i))
            d += 1


def enumerate_valid(
    max_len: int,
    system: Union[str, NumerationSystem] = "fib",
    *,
    max_len_bound: int = DEFAULT_ENUM_BOUND,
) -> list[DigitString]:
    """List every canonical valid digit string of length <= max_len, in
    increasing order of decoded value. The empty string is always included.

    The selector is either the literal "fib" (forbidden-factor rule over
    {0, 1, 2}, decoded in the even-Fibonacci system) or a NumerationSystem
    (prefix-sum rule). Strings are generated combinatorially, digit by
    digit, independently of :func:`encode`, so the two can check each other.
    """
    if max_len < 0:
        raise PreconditionError(f"max_len must be >= 0, got {max_len}")
    if max_len > max_len_bound:
        raise ResourceLimitError(
            f"enumeration length {max_len} exceeds the bound {max_len_bound}"
        )
    if isinstance(system, str):
        if system != "fib":
            raise PreconditionError(f"unknown validity rule {system!r}; use 'fib' or a system")
        raw = _enumerate_fib(max_len)
        decoder = FIB_EVEN
    else:
        raw = _enumerate_system(max_len, system)
        decoder = system
    strings = [DigitString(t) for t in raw]
    strings.sort(key=lambda s: decode(s, decoder))
    return strings


@lru_cache(maxsize=None)
def _fib_even_digits(n: int) -> tuple[int, ...]:
    return encode(n, FIB_EVEN).digits


def length_of(n: int) -> int:
    """Return the canonical digit count of n in the even-Fibonacci system.

    This is the minimal l >= 0 with every digit above position l equal to
    zero; length_of(0) = 0.
    """
    if n < 0:
        raise PreconditionError(f"length is defined for non-negative integers, got {n}")
    return len(_fib_even_digits(n))
