"""Exact verification toolkit for a Fibonacci-based proximity inversion
function on the non-negative integers.

The package provides:

* an even-indexed Fibonacci numeration system (digits 0..2, forbidden factor
  2 1* 2), with general numeration systems, greedy encoding, and three
  independent validity checkers;
* the reciprocal digit map f with exhaustive, exact-rational verification
  that |f(a) - f(b)| >= 1/|a - b| on any finite range;
* exact evaluators for the supporting Fibonacci identities and inequalities;
* a brute-force exact optimizer for finite gap-constraint instances, used to
  compare true optima against a conjectured bound;
* a CLI (``proxinv``) exposing all of the above with table, json-lines, and
  csv output.

All arithmetic is integer/rational and exact; floating point never decides
anything.
"""

from .errors import ConfigError, PreconditionError, ProxinvError, ResourceLimitError
from .fib_core import (
    IdentityKind,
    IdentitySuiteResult,
    IdentityVerdict,
    basis,
    below_golden_ratio,
    decimal_str,
    evaluate_identity,
    fib,
    run_identity_suite,
)
from .generic_proxinv import (
    DEFAULT_MAX_PAIRS,
    NATURAL_METRIC,
    ConstraintFunction,
    Violation,
    ViolationReport,
    check_system,
    exhaustive_gap_check,
    f_generic,
)
from .numeration import (
    BINARY,
    DEFAULT_ENUM_BOUND,
    DigitString,
    FIB_EVEN,
    FraenkelRecurrence,
    NumerationSystem,
    check_two_fold_condition,
    decode,
    encode,
    enumerate_valid,
    fib_two_fold,
    is_valid_fib,
    is_valid_fraenkel,
    length_of,
)
from .optimum_search import (
    DEFAULT_MAX_POINTS,
    ConjectureReport,
    FiniteInstance,
    OptimumResult,
    compare_with_conjecture,
    conjectured_bound,
    exact_optimum,
    minimal_max_for_order,
)
from .proxinv_fib import (
    OrderingVerdict,
    compare_by_f,
    compare_by_value,
    f_value,
    max_f_up_to_length,
    supremum_partial,
    verify_range,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "ProxinvError",
    "PreconditionError",
    "ResourceLimitError",
    "ConfigError",
    "fib",
    "basis",
    "below_golden_ratio",
    "decimal_str",
    "IdentityKind",
    "IdentityVerdict",
    "IdentitySuiteResult",
    "evaluate_identity",
    "run_identity_suite",
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
    "NATURAL_METRIC",
    "ConstraintFunction",
    "Violation",
    "ViolationReport",
    "exhaustive_gap_check",
    "f_generic",
    "check_system",
    "DEFAULT_MAX_PAIRS",
    "OrderingVerdict",
    "f_value",
    "compare_by_value",
    "compare_by_f",
    "verify_range",
    "max_f_up_to_length",
    "supremum_partial",
    "DEFAULT_MAX_POINTS",
    "FiniteInstance",
    "OptimumResult",
    "ConjectureReport",
    "minimal_max_for_order",
    "exact_optimum",
    "conjectured_bound",
    "compare_with_conjecture",
]
