from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from proxinv import (
    ConstraintFunction,
    FiniteInstance,
    PreconditionError,
    ResourceLimitError,
    compare_with_conjecture,
    conjectured_bound,
    exact_optimum,
    minimal_max_for_order,
)


def _reciprocal_instance(points):
    return FiniteInstance(tuple(points), ConstraintFunction.reciprocal())


def _feasible(witness, constraint):
    points = sorted(witness)
    return all(
        abs(witness[p] - witness[q]) >= constraint(q - p)
        for p, q in combinations(points, 2)
    )


class TestFiniteInstance:
    def test_requires_strictly_increasing(self):
        with pytest.raises(PreconditionError, match="strictly increasing"):
            FiniteInstance((1, 1, 2), ConstraintFunction.reciprocal())
        with pytest.raises(PreconditionError, match="strictly increasing"):
            FiniteInstance((3, 1), ConstraintFunction.reciprocal())

    def test_requires_at_least_one_point(self):
        with pytest.raises(PreconditionError, match="at least one point"):
            FiniteInstance((), ConstraintFunction.reciprocal())


class TestMinimalMaxForOrder:
    def test_two_points_adjacent(self):
        inst = _reciprocal_instance((1, 2))
        value, assignment = minimal_max_for_order((1, 2), inst)
        assert value == 1
        assert assignment == {1: Fraction(0), 2: Fraction(1)}

    def test_two_points_at_distance_two(self):
        inst = _reciprocal_instance((1, 3))
        value, assignment = minimal_max_for_order((3, 1), inst)
        assert value == Fraction(1, 2)
        assert assignment == {3: Fraction(0), 1: Fraction(1, 2)}

    def test_three_point_chain(self):
        inst = _reciprocal_instance((1, 2, 3))
        value, assignment = minimal_max_for_order((2, 1, 3), inst)
        assert value == Fraction(3, 2)
        assert assignment == {2: Fraction(0), 1: Fraction(1), 3: Fraction(3, 2)}

    def test_rejects_non_permutation(self):
        inst = _reciprocal_instance((1, 2))
        with pytest.raises(PreconditionError, match="not a permutation"):
            minimal_max_for_order((1, 3), inst)

    def test_assignment_feasible_for_every_order(self):
        inst = _reciprocal_instance((1, 2, 4, 7))
        from itertools import permutations

        for perm in permutations(inst.points):
            value, assignment = minimal_max_for_order(perm, inst)
            assert _feasible(assignment, inst.constraint)
            assert max(assignment.values()) == value
            assert min(assignment.values()) == 0


class TestExactOptimum:
    def test_pair(self):
        result = exact_optimum(_reciprocal_instance((1, 2)))
        assert result.optimum == 1

    def test_single_point(self):
        result = exact_optimum(_reciprocal_instance((7,)))
        assert result.optimum == 0
        assert result.witness == {7: Fraction(0)}
        assert result.orders_explored == 1

    def test_three_points(self):
        result = exact_optimum(_reciprocal_instance((1, 2, 3)))
        assert result.optimum == Fraction(3, 2)
        assert result.order == (1, 3, 2)  # lexicographically smallest optimum
        assert _feasible(result.witness, ConstraintFunction.reciprocal())

    def test_reversal_halving_counts(self):
        result = exact_optimum(_reciprocal_instance((1, 2, 3)))
        assert result.orders_explored == 3

    def test_reversed_order_has_same_value(self):
        inst = _reciprocal_instance((1, 2, 4, 6))
        result = exact_optimum(inst)
        forward, _ = minimal_max_for_order(result.order, inst)
        backward, _ = minimal_max_for_order(tuple(reversed(result.order)), inst)
        assert forward == backward == result.optimum

    def test_size_two_closed_form(self):
        for p, q in combinations(range(1, 7), 2):
            result = exact_optimum(_reciprocal_instance((p, q)))
            assert result.optimum == Fraction(1, q - p)

    def test_size_three_closed_form(self):
        # Independent oracle: each reversal class is determined by the middle
        # point m, worth max(c(|a-m|) + c(|m-b|), c(|a-b|)).
        c = ConstraintFunction.reciprocal()
        for pts in combinations(range(1, 7), 3):
            expected = min(
                max(c(abs(a - m)) + c(abs(m - b)), c(abs(a - b)))
                for m in pts
                for a, b in [tuple(p for p in pts if p != m)]
            )
            assert exact_optimum(_reciprocal_instance(pts)).optimum == expected

    def test_size_four_feasible_and_symmetric(self):
        for pts in combinations(range(1, 7), 4):
            inst = _reciprocal_instance(pts)
            result = exact_optimum(inst)
            assert _feasible(result.witness, inst.constraint)
            assert min(result.witness.values()) == 0
            assert max(result.witness.values()) == result.optimum

    def test_monotone_in_points(self):
        base = exact_optimum(_reciprocal_instance((1, 3, 4))).optimum
        extended = exact_optimum(_reciprocal_instance((1, 3, 4, 6))).optimum
        assert extended >= base

    @given(st.sets(st.integers(min_value=0, max_value=12), min_size=1, max_size=5))
    @settings(max_examples=60, deadline=None)
    def test_monotone_property(self, points):
        pts = tuple(sorted(points))
        inst = _reciprocal_instance(pts)
        result = exact_optimum(inst)
        assert _feasible(result.witness, inst.constraint)
        if len(pts) > 1:
            sub = exact_optimum(_reciprocal_instance(pts[:-1]))
            assert result.optimum >= sub.optimum

    def test_point_limit(self):
        with pytest.raises(ResourceLimitError, match="exceed the exact-search limit"):
            exact_optimum(_reciprocal_instance(range(1, 12)))
        # the limit is overridable
        result = exact_optimum(_reciprocal_instance(range(1, 5)), max_points=4)
        assert result.optimum > 0


class TestConjecturedBound:
    def test_values(self):
        assert conjectured_bound(2) == Fraction(11, 5)
        assert conjectured_bound(3) == Fraction(94, 39)

    def test_requires_n_above_one(self):
        with pytest.raises(PreconditionError, match="n > 1"):
            conjectured_bound(1)


class TestCompareWithConjecture:
    def test_n2_report(self):
        report = compare_with_conjecture(2)
        assert report.points == (1, 2, 3)
        assert report.optimum.optimum == Fraction(3, 2)
        assert report.conjectured == Fraction(11, 5)
        assert report.f_length_max == Fraction(7, 3)
        assert report.f_length_argmax == 5
        assert report.f_max_on_points == 2
        assert report.flags["optimum_vs_conjectured"] == "less"
        assert _feasible(report.optimum.witness, ConstraintFunction.reciprocal())

    def test_too_large_instance(self):
        with pytest.raises(ResourceLimitError, match="21 points"):
            compare_with_conjecture(4)

    def test_requires_n_above_one(self):
        with pytest.raises(PreconditionError):
            compare_with_conjecture(1)
