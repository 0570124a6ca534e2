"""Rank oracle: reduced power sets, verdicts, and kernel witnesses."""

from __future__ import annotations

import random

import pytest

from conftest import count_monomials, power_times_monomial_is_zero
from lefschetz import (
    MonomialCI,
    PrimeField,
    is_slp_oracle,
    is_wlp_oracle,
    kernel_witness,
    max_rank_in_every_degree,
    slp_step_check,
)

F2 = PrimeField(2)
F3 = PrimeField(3)


def full_slp_check(algebra) -> bool:
    """Unreduced oracle: test every power from 1 to the top degree."""
    return all(
        max_rank_in_every_degree(algebra, m) for m in range(1, algebra.top_degree + 1)
    )


class TestMaxRank:
    def test_examples(self):
        assert max_rank_in_every_degree(MonomialCI(F3, (2, 2)), 2)
        assert not max_rank_in_every_degree(MonomialCI(F2, (2, 2)), 2)

    def test_power_above_top_degree_is_vacuous(self):
        a = MonomialCI(F2, (2, 2))
        assert max_rank_in_every_degree(a, a.top_degree + 1)

    def test_power_validation(self):
        with pytest.raises(ValueError):
            max_rank_in_every_degree(MonomialCI(F2, (2, 2)), 0)


class TestSlpOracle:
    def test_examples(self):
        assert is_slp_oracle(MonomialCI(F3, (2, 2))).has_slp
        v = is_slp_oracle(MonomialCI(F2, (2, 2)))
        assert not v.has_slp and v.failing_exponent == 2 and v.method == "oracle"
        assert is_slp_oracle(MonomialCI(PrimeField(7), (2, 2, 2))).has_slp

    def test_first_failing_power_is_reported(self):
        # candidate powers descend from a+b-2; for (4,5) over GF(2) the top
        # power still has maximal rank and the failure first shows at 5
        v = is_slp_oracle(MonomialCI(F2, (4, 5)))
        assert not v.has_slp and v.failing_exponent == 5

    def test_single_variable_is_trivial(self):
        for d in (1, 2, 5, 9):
            assert is_slp_oracle(MonomialCI(F2, (d,))).has_slp

    def test_exponent_one_reduces_to_fewer_variables(self):
        assert is_slp_oracle(MonomialCI(F2, (1, 4))).has_slp

    def test_reduced_checks_match_full_sweep_two_variables(self):
        for p in (2, 3, 5):
            field = PrimeField(p)
            for a in range(2, 13):
                for b in range(a, 13):
                    algebra = MonomialCI(field, (a, b))
                    assert is_slp_oracle(algebra).has_slp == full_slp_check(algebra), (p, a, b)

    def test_reduced_checks_match_full_sweep_three_variables(self):
        for p in (2, 3):
            field = PrimeField(p)
            for ds in [(2, 2, 2), (2, 2, 3), (2, 3, 4), (3, 3, 3), (2, 2, 5)]:
                algebra = MonomialCI(field, ds)
                assert is_slp_oracle(algebra).has_slp == full_slp_check(algebra), (p, ds)

    def test_slp_implies_wlp_on_sweep(self):
        for p in (2, 3, 5):
            field = PrimeField(p)
            for a in range(2, 13):
                for b in range(a, 13):
                    algebra = MonomialCI(field, (a, b))
                    if is_slp_oracle(algebra).has_slp:
                        assert is_wlp_oracle(algebra), (p, a, b)

    def test_large_characteristic_always_works(self):
        rng = random.Random(11)
        for _ in range(12):
            n = rng.choice((2, 3))
            ds = tuple(rng.randint(2, 6) for _ in range(n))
            t = sum(d - 1 for d in ds)
            p = next(q for q in (17, 19, 23, 29, 31) if q > t)
            algebra = MonomialCI(PrimeField(p), ds)
            assert is_slp_oracle(algebra).has_slp
            assert is_wlp_oracle(algebra)


class TestWlpOracle:
    def test_examples(self):
        assert is_wlp_oracle(MonomialCI(F2, (2, 3)))
        assert is_wlp_oracle(MonomialCI(F2, (2, 2)))

    def test_wlp_can_fail(self):
        # three squares in characteristic two: x+y+z squares to zero,
        # and already the first power misses maximal rank
        assert not is_wlp_oracle(MonomialCI(F2, (2, 2, 2)))


class TestKernelWitness:
    def test_char_two_square(self):
        w = kernel_witness(MonomialCI(F2, (2, 2)))
        assert w.monomial == (0, 0) and w.power == 2 and w.target_degree == 2

    def test_unbalanced_pair(self):
        w = kernel_witness(MonomialCI(F3, (2, 9)))
        assert w.monomial == (0, 0) and w.power == 9

    def test_slp_algebra_has_no_witness(self):
        with pytest.raises(ValueError, match="no witness"):
            kernel_witness(MonomialCI(PrimeField(5), (7, 7)))

    def test_two_variables_only(self):
        with pytest.raises(ValueError, match="two variables"):
            kernel_witness(MonomialCI(F2, (2, 2, 2)))

    def test_witnesses_verify_independently(self):
        for p in (2, 3, 5):
            field = PrimeField(p)
            for a in range(2, 16):
                for b in range(a, 16):
                    if slp_step_check(field, a, b).satisfied:
                        continue
                    w = kernel_witness(MonomialCI(field, (a, b)))
                    e1, e2 = w.monomial
                    assert e1 < a and e2 < b
                    assert power_times_monomial_is_zero(p, a, b, e1, e2, w.power)
                    assert count_monomials((a, b), w.degree) <= count_monomials(
                        (a, b), w.target_degree
                    )
                    assert w.target_degree == w.degree + w.power

    def test_tie_break_takes_lowest_condition(self):
        # a=5, b=7 over GF(5) violates conditions 1 and 3 at level one;
        # the fixed order picks condition 1: monomial x^0, power (1+1)*5
        report = slp_step_check(PrimeField(5), 5, 7)
        assert report.violations[0] == (1, 1) and (1, 3) in report.violations
        w = kernel_witness(MonomialCI(PrimeField(5), (5, 7)))
        assert w.monomial == (0, 0) and w.power == 10

    def test_witness_power_fails_the_oracle(self):
        for p, pair in [(2, (2, 2)), (2, (4, 5)), (3, (2, 9)), (5, (5, 5))]:
            algebra = MonomialCI(PrimeField(p), pair)
            w = kernel_witness(algebra)
            assert not max_rank_in_every_degree(algebra, w.power)
