"""Digit machinery, per-level conditions, Manhattan searches, classifications."""

from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefschetz import (
    PrimeField,
    base_p_digits,
    classify,
    classify_n_ge_3,
    classify_two_p2,
    classify_two_p_odd,
    delta_zero_criterion,
    digit_decomposition,
    manhattan_check,
    slp_step_check,
)

F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)
F7 = PrimeField(7)


class TestDigits:
    def test_examples(self):
        assert base_p_digits(9, F3) == (0, 0, 1)
        assert base_p_digits(7, F5) == (2, 1)
        assert base_p_digits(1, F7) == (1,)

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError):
            base_p_digits(0, F3)

    @given(st.sampled_from((2, 3, 5, 7)), st.integers(1, 10**9))
    def test_reconstruction(self, p, n):
        digits = base_p_digits(n, PrimeField(p))
        assert digits[-1] != 0
        assert sum(d * p**i for i, d in enumerate(digits)) == n
        assert all(0 <= d < p for d in digits)

    def test_decomposition_reconstructs(self):
        dec = digit_decomposition(14, 9, 2, F3)
        assert (dec.quot_a, dec.rem_a) == (1, 5)
        assert (dec.quot_b, dec.rem_b) == (1, 0)
        assert dec.quot_a * 9 + dec.rem_a == 14


class TestStepCheck:
    def test_satisfied_example(self):
        assert slp_step_check(F3, 4, 4).satisfied

    def test_violation_on_unbalanced_pair(self):
        report = slp_step_check(F3, 2, 9)
        assert not report.satisfied
        assert report.violations[0] == (1, 2)

    def test_violation_at_p2(self):
        report = slp_step_check(F2, 2, 2)
        assert report.violations == ((1, 3),)

    def test_exponent_bounds(self):
        with pytest.raises(ValueError):
            slp_step_check(F3, 1, 4)


class TestManhattan:
    def test_examples(self):
        assert manhattan_check(F3, 2, 2)
        assert not manhattan_check(F2, 2, 2)
        assert manhattan_check(F5, 3, 3)

    def test_wide_window_agrees(self):
        for p in (2, 3, 5):
            field = PrimeField(p)
            for a in range(2, 16):
                for b in range(a, 16):
                    assert manhattan_check(field, a, b) == manhattan_check(
                        field, a, b, window=2
                    ), (p, a, b)

    def test_agrees_with_step_conditions(self):
        for p in (2, 3, 5, 7):
            field = PrimeField(p)
            for a in range(2, 21):
                for b in range(a, 21):
                    assert manhattan_check(field, a, b) == slp_step_check(field, a, b).satisfied


class TestTwoVariableClassification:
    def test_odd_p_examples(self):
        assert classify_two_p_odd(F5, 3, 3).has_slp
        assert classify_two_p_odd(F5, 3, 3).condition == "case 1"
        v = classify_two_p_odd(F3, 2, 9)
        assert not v.has_slp and v.condition == "case 2"
        v = classify_two_p_odd(F3, 4, 4)
        assert v.has_slp and v.condition == "case 3"

    def test_odd_p_case3_subconditions(self):
        assert classify_two_p_odd(F5, 6, 7).condition == "case 3(a)"  # 6 ends in digit 1
        assert classify_two_p_odd(F5, 42, 27).condition == "case 3(b)"  # middle digit 3
        assert classify_two_p_odd(F5, 22, 23).condition == "case 3(c)"  # leading 4+4 > 4

    def test_odd_p_argument_order_is_irrelevant(self):
        for field in (F3, F5, F7):
            for a in range(2, 30):
                for b in range(2, 30):
                    assert (
                        classify_two_p_odd(field, a, b).has_slp
                        == classify_two_p_odd(field, b, a).has_slp
                    )

    def test_odd_p_rejects_p2(self):
        with pytest.raises(ValueError):
            classify_two_p_odd(F2, 2, 3)

    def test_p2_examples(self):
        assert classify_two_p2(2, 5).has_slp
        assert classify_two_p2(3, 6).has_slp
        assert not classify_two_p2(3, 4).has_slp
        assert not classify_two_p2(2, 2).has_slp


class TestManyVariableClassification:
    def test_examples(self):
        assert classify_n_ge_3(F7, (2, 2, 2)).has_slp
        assert not classify_n_ge_3(F3, (3, 2, 2)).has_slp
        assert classify_n_ge_3(F5, (7, 2, 2)).has_slp

    def test_largest_exponent_equal_to_p_never_works(self):
        for p in (2, 3, 5):
            field = PrimeField(p)
            for rest in [(2, 2), (2, 3), (3, 3)]:
                ds = (p,) + rest
                if max(ds) == p:
                    assert not classify_n_ge_3(field, ds).has_slp, ds

    def test_needs_three_variables(self):
        with pytest.raises(ValueError):
            classify_n_ge_3(F3, (2, 2))


class TestClassify:
    def test_examples(self):
        v = classify(F2, (5,))
        assert v.has_slp and v.condition.startswith("condition 1")
        v = classify(F2, (2, 3))
        assert v.has_slp and v.condition.startswith("condition 2")
        v = classify(F5, (2, 2, 2))
        assert v.has_slp and v.condition.startswith("condition 4")

    def test_condition_numbers(self):
        assert classify(F3, (4, 4)).condition.startswith("condition 3")
        assert classify(F5, (2, 3)).condition.startswith("condition 4")
        assert classify(F3, (2, 4)).condition.startswith("condition 5")
        assert classify(F5, (7, 2, 2)).condition.startswith("condition 5")

    def test_negative_verdicts_have_no_failure_payload(self):
        v = classify(F2, (2, 2))
        assert not v.has_slp and v.failing_exponent is None and v.witness is None

    def test_agrees_with_dedicated_classifiers(self):
        for a in range(2, 30):
            for b in range(a, 30):
                assert classify(F2, (a, b)).has_slp == classify_two_p2(a, b).has_slp
                for field in (F3, F5):
                    assert (
                        classify(field, (a, b)).has_slp
                        == classify_two_p_odd(field, a, b).has_slp
                    )

    @settings(max_examples=80, deadline=None)
    @given(st.data())
    def test_invariant_under_permutation(self, data):
        p = data.draw(st.sampled_from((2, 3, 5, 7)))
        ds = tuple(data.draw(st.lists(st.integers(2, 30), min_size=1, max_size=4)))
        field = PrimeField(p)
        base = classify(field, ds).has_slp
        for perm in permutations(ds):
            assert classify(field, perm).has_slp == base

    def test_exponent_bounds(self):
        with pytest.raises(ValueError):
            classify(F3, (1, 4))
        with pytest.raises(ValueError):
            classify(F3, ())


class TestDeltaZeroCriterion:
    def test_examples(self):
        assert delta_zero_criterion(F3, 2, 2, 2)
        assert not delta_zero_criterion(F2, 2, 2, 2)
        assert not delta_zero_criterion(F2, 1, 1, 1)

    def test_odd_total_always_fails(self):
        assert not delta_zero_criterion(F5, 2, 3, 4)

    def test_hypothesis_violation_rejected(self):
        with pytest.raises(ValueError):
            delta_zero_criterion(F3, 3, 2, 2)
        with pytest.raises(ValueError):
            delta_zero_criterion(F3, 2, 3, 5)

    def test_wide_window_agrees(self):
        for p in (2, 3, 5):
            field = PrimeField(p)
            for d1 in range(1, 9):
                for d2 in range(d1, 9):
                    for d3 in range(d2, d1 + d2):
                        assert delta_zero_criterion(field, d1, d2, d3) == (
                            delta_zero_criterion(field, d1, d2, d3, window=2)
                        ), (p, d1, d2, d3)
