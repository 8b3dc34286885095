from fractions import Fraction

import pytest

from proxinv import (
    BINARY,
    ConstraintFunction,
    FIB_EVEN,
    NumerationSystem,
    PreconditionError,
    check_system,
    f_generic,
    f_value,
    verify_range,
)


class TestConstraintFunction:
    def test_reciprocal(self):
        c = ConstraintFunction.reciprocal()
        assert c(1) == 1
        assert c(4) == Fraction(1, 4)
        assert c.description == "1/n"

    def test_scaled_reciprocal(self):
        c = ConstraintFunction.reciprocal(Fraction(3, 2))
        assert c(3) == Fraction(1, 2)
        assert c.description == "3/2/n"

    def test_constant(self):
        c = ConstraintFunction.constant(Fraction(1, 4))
        assert c(1) == c(100) == Fraction(1, 4)

    def test_table_with_tail(self):
        c = ConstraintFunction.from_table([1, Fraction(1, 2)], tail=Fraction(1, 8))
        assert c(1) == 1
        assert c(2) == Fraction(1, 2)
        assert c(3) == c(50) == Fraction(1, 8)

    def test_increasing_table_rejected_on_evaluation(self):
        c = ConstraintFunction.from_table([Fraction(1, 2), 1])
        assert c(1) == Fraction(1, 2)
        with pytest.raises(PreconditionError, match="increases"):
            c(2)

    def test_negative_value_rejected(self):
        c = ConstraintFunction.from_table([Fraction(-1, 2)])
        with pytest.raises(PreconditionError, match="negative"):
            c(1)

    def test_zero_distance_rejected(self):
        with pytest.raises(PreconditionError):
            ConstraintFunction.reciprocal()(0)


class TestFGeneric:
    def test_zero_maps_to_zero(self):
        assert f_generic(0, BINARY) == 0
        assert f_generic(0, FIB_EVEN) == 0

    def test_binary_example(self):
        assert f_generic(5, BINARY) == Fraction(5, 4)

    def test_agrees_with_fib_specific_map(self):
        for a in range(500):
            assert f_generic(a, FIB_EVEN) == f_value(a)

    def test_injective_for_tested_systems(self):
        zeck = NumerationSystem.from_recurrence("zeckendorf", [1, 1], [1, 2])
        for system in (FIB_EVEN, BINARY, zeck):
            values = {f_generic(a, system) for a in range(2001)}
            assert len(values) == 2001

    def test_invalid_system_rejected(self):
        bad = NumerationSystem.from_callable("bad", lambda i: 2 * i)
        with pytest.raises(PreconditionError, match="u_1 must be 1"):
            f_generic(5, bad)


class TestCheckSystem:
    def test_fib_even_clean(self):
        report = check_system(FIB_EVEN, ConstraintFunction.reciprocal(), 300)
        assert report.ok
        assert report.pairs_checked == 300 * 301 // 2

    def test_consistency_with_verify_range(self):
        direct = verify_range(200)
        generic = check_system(FIB_EVEN, ConstraintFunction.reciprocal(), 200)
        assert direct == generic

    def test_binary_first_violation(self):
        report = check_system(BINARY, ConstraintFunction.reciprocal(), 10)
        assert not report.ok
        first = report.violations[0]
        assert (first.a, first.b) == (1, 2)
        assert first.gap == Fraction(1, 2)
        assert first.required == 1

    def test_zero_constraint_always_clean(self):
        report = check_system(BINARY, ConstraintFunction.constant(0), 50)
        assert report.ok
        assert report.pairs_checked == 50 * 51 // 2

    def test_monotone_constraint_sanity(self):
        # pointwise smaller constraints can only lose violations
        weaker = ConstraintFunction.reciprocal(Fraction(1, 2))
        stronger = ConstraintFunction.reciprocal()
        weak_pairs = {(v.a, v.b) for v in check_system(BINARY, weaker, 30).violations}
        strong_pairs = {(v.a, v.b) for v in check_system(BINARY, stronger, 30).violations}
        assert weak_pairs <= strong_pairs

    def test_value_collisions_are_reported(self):
        # In the basis 1, 2, 6, ... the integers 1 and 4 both map to 1
        # (digits [1] and [0,2]); with a positive required gap that pair must
        # appear as a violation rather than being assumed away.
        system = NumerationSystem.from_basis("collide", [1, 2, 6, 20, 50])
        assert f_generic(1, system) == f_generic(4, system) == 1
        report = check_system(system, ConstraintFunction.reciprocal(), 6)
        colliding = [v for v in report.violations if (v.a, v.b) == (1, 4)]
        assert len(colliding) == 1
        assert colliding[0].gap == 0
        assert colliding[0].required == Fraction(1, 3)

    def test_negative_range_rejected(self):
        with pytest.raises(PreconditionError):
            check_system(BINARY, ConstraintFunction.reciprocal(), -1)
