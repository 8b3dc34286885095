from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from proxinv import (
    ConstraintFunction,
    PreconditionError,
    ResourceLimitError,
    compare_by_f,
    compare_by_value,
    decimal_str,
    f_value,
    max_f_up_to_length,
    supremum_partial,
    verify_range,
)


class TestFValue:
    def test_examples(self):
        assert f_value(0) == 0
        assert f_value(5) == Fraction(7, 3)
        assert f_value(13) == Fraction(59, 24)

    def test_single_digits(self):
        assert f_value(1) == 1
        assert f_value(2) == 2
        assert f_value(3) == Fraction(1, 3)

    def test_injective_prefix(self):
        values = {f_value(a) for a in range(2001)}
        assert len(values) == 2001

    def test_negative_rejected(self):
        with pytest.raises(PreconditionError):
            f_value(-3)


class TestOrderings:
    def test_compare_by_value_examples(self):
        assert compare_by_value(5, 7).relation == "less"
        assert compare_by_value(5, 7).witness_position == 2
        assert compare_by_value(4, 4).relation == "equal"
        assert compare_by_value(4, 4).witness_position is None
        assert compare_by_value(3, 2).relation == "greater"
        assert compare_by_value(3, 2).witness_position == 2

    def test_compare_by_f_examples(self):
        assert compare_by_f(2, 3).relation == "greater"
        assert compare_by_f(2, 3).witness_position == 1
        assert compare_by_f(3, 4).relation == "less"
        assert compare_by_f(3, 4).witness_position == 1
        assert compare_by_f(9, 9).relation == "equal"

    def test_duality_against_direct_comparison(self):
        values = [f_value(a) for a in range(301)]
        for a in range(301):
            for b in range(301):
                expected = "less" if a < b else ("greater" if a > b else "equal")
                assert compare_by_value(a, b).relation == expected
                fa, fb = values[a], values[b]
                expected_f = "less" if fa < fb else ("greater" if fa > fb else "equal")
                assert compare_by_f(a, b).relation == expected_f

    @given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=200)
    def test_duality_property(self, a, b):
        expected = "less" if a < b else ("greater" if a > b else "equal")
        assert compare_by_value(a, b).relation == expected
        fa, fb = f_value(a), f_value(b)
        expected_f = "less" if fa < fb else ("greater" if fa > fb else "equal")
        assert compare_by_f(a, b).relation == expected_f


def _oracle_violations(n, constraint):
    # Straightforward double loop on raw fractions, kept independent of the
    # scaled-integer engine.
    found = []
    for a in range(n + 1):
        for b in range(a + 1, n + 1):
            gap = abs(f_value(a) - f_value(b))
            required = constraint(b - a)
            if gap < required:
                found.append((a, b, gap, required))
    return found


class TestVerifyRange:
    def test_empty_range(self):
        report = verify_range(0)
        assert report.pairs_checked == 0
        assert report.ok

    def test_tiny_range_by_hand(self):
        # f over 0..3 is 0, 1, 2, 1/3; all six gaps meet 1/(b-a).
        report = verify_range(3)
        assert report.pairs_checked == 6
        assert report.violations == ()

    def test_medium_ranges_clean(self):
        for n in (100, 500):
            report = verify_range(n)
            assert report.pairs_checked == n * (n + 1) // 2
            assert report.ok

    def test_equality_pairs_are_not_violations(self):
        # consecutive integers can meet the bound exactly
        assert abs(f_value(4) - f_value(3)) == Fraction(1, 1)
        assert verify_range(4).ok

    def test_tightness_exists_in_prefix(self):
        tight = [
            (a, b)
            for a in range(101)
            for b in range(a + 1, 101)
            if abs(f_value(a) - f_value(b)) == Fraction(1, b - a)
        ]
        assert (3, 4) in tight

    def test_matches_fraction_oracle_under_failing_constraint(self):
        constraint = ConstraintFunction.constant(Fraction(1, 2))
        report = verify_range(40, constraint)
        expected = _oracle_violations(40, ConstraintFunction.constant(Fraction(1, 2)))
        assert [(v.a, v.b, v.gap, v.required) for v in report.violations] == expected
        assert not report.ok

    def test_matches_fraction_oracle_default_constraint(self):
        report = verify_range(60)
        assert _oracle_violations(60, ConstraintFunction.reciprocal()) == []
        assert report.ok

    def test_zero_constraint_never_violated(self):
        report = verify_range(50, ConstraintFunction.constant(0))
        assert report.ok

    def test_violations_sorted_and_exact(self):
        report = verify_range(30, ConstraintFunction.constant(Fraction(3, 4)))
        pairs = [(v.a, v.b) for v in report.violations]
        assert pairs == sorted(pairs)
        for v in report.violations:
            assert v.gap < v.required

    def test_worker_partitioning_is_invisible(self):
        serial = verify_range(600)
        parallel = verify_range(600, workers=2)
        assert serial == parallel

    def test_pair_budget_enforced(self):
        with pytest.raises(ResourceLimitError, match="exceed the configured bound"):
            verify_range(100, max_pairs=10)

    def test_negative_range_rejected(self):
        with pytest.raises(PreconditionError):
            verify_range(-1)


class TestSupremum:
    def test_first_partials(self):
        assert supremum_partial(1) == 2
        assert supremum_partial(2) == Fraction(7, 3)
        assert supremum_partial(4) == Fraction(421, 168)

    def test_strictly_increasing(self):
        previous = supremum_partial(1)
        for n in range(2, 30):
            current = supremum_partial(n)
            assert current > previous
            previous = current

    def test_decimal_rendering_at_40(self):
        assert decimal_str(supremum_partial(40)).startswith("2.5353")

    def test_max_f_examples(self):
        assert max_f_up_to_length(1) == (2, Fraction(2))
        assert max_f_up_to_length(2) == (5, Fraction(7, 3))
        assert max_f_up_to_length(3) == (13, Fraction(59, 24))

    def test_max_f_matches_brute_force(self):
        from proxinv import FIB_EVEN, length_of

        for n in range(1, 7):
            argmax, value = max_f_up_to_length(n)
            candidates = range(FIB_EVEN.u(n + 1))
            brute = max(candidates, key=f_value)
            assert argmax == brute
            assert value == f_value(brute)
            assert length_of(argmax) == n

    def test_partial_equals_length_max(self):
        for n in range(1, 12):
            assert supremum_partial(n) == max_f_up_to_length(n)[1]

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            supremum_partial(0)
        with pytest.raises(PreconditionError):
            max_f_up_to_length(0)
