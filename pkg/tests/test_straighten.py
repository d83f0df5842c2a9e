"""Straightening of operator words to the partition basis."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinkostka.partitions import is_partition
from spinkostka.polynomial import LaurentPoly, ONE, T
from spinkostka.straighten import Straightener, step_coeff, straighten_to_vacuum

vectors = st.lists(
    st.integers(min_value=-2, max_value=6), min_size=0, max_size=4
).map(tuple)


def test_step_coeff_boundaries():
    assert step_coeff(1, 0) == T
    assert step_coeff(2, 0) == T
    assert step_coeff(2, 1) == T - ONE
    assert step_coeff(3, 1) == LaurentPoly({2: 1, 0: -1})
    assert step_coeff(4, 1) == LaurentPoly({2: 1, 0: -1})
    assert step_coeff(4, 2) == LaurentPoly({2: 1, 1: -1})
    assert step_coeff(5, 2) == LaurentPoly({3: 1, 1: -1})
    with pytest.raises(ValueError):
        step_coeff(0, 0)
    with pytest.raises(ValueError):
        step_coeff(2, 2)


def test_single_ascent():
    assert straighten_to_vacuum((1, 3)) == {(3, 1): T, (2, 2): T - ONE}


def test_vacuum_rules():
    assert straighten_to_vacuum((2, 0)) == {(2,): ONE}
    assert straighten_to_vacuum((2, -1)) == {}
    assert straighten_to_vacuum(()) == {(): ONE}
    assert straighten_to_vacuum((0, 0)) == {(): ONE}
    assert straighten_to_vacuum((3, 2, 1)) == {(3, 2, 1): ONE}


@given(vectors)
@settings(max_examples=200)
def test_results_are_partitions_of_same_weight(nu):
    for lam, coeff in straighten_to_vacuum(nu).items():
        assert is_partition(lam)
        assert sum(lam) == sum(nu)
        assert not coeff.is_zero()


@given(vectors)
@settings(max_examples=150)
def test_confluence_leftmost_rightmost(nu):
    left = Straightener(strategy="leftmost").straighten(nu)
    right = Straightener(strategy="rightmost").straighten(nu)
    assert left == right


@given(vectors)
@settings(max_examples=150)
def test_primitive_rule_equivalence(nu):
    table = Straightener(rule="table").straighten(nu)
    primitive = Straightener(rule="primitive").straighten(nu)
    assert table == primitive


def test_memo_shared_across_calls():
    s = Straightener()
    first = s.straighten((1, 3))
    assert s.straighten((1, 3)) is first


def _check_against_oracle(nu):
    """H_nu.1 expanded by the oracle equals the straightened combination."""
    from spinkostka.oracle import PExpansion, apply_word, hl_Q, op_H
    from spinkostka.polynomial import RatFunc

    cap = sum(abs(x) for x in nu) + 2
    direct = apply_word(op_H, nu, PExpansion.vacuum(cap))
    combo = PExpansion.zero(cap)
    for lam, coeff in straighten_to_vacuum(nu).items():
        combo = combo + hl_Q(lam, cap).scale(RatFunc.from_laurent(coeff))
    assert direct == combo, nu


@given(
    st.lists(st.integers(min_value=-2, max_value=4), min_size=0, max_size=3).map(tuple)
)
@settings(max_examples=40, deadline=None)
def test_oracle_consistency_short_words(nu):
    _check_against_oracle(nu)


@pytest.mark.parametrize(
    "nu",
    [(1, 3), (2, -1, 3, 1), (1, 3, 0, 2), (6, -2, 1, 1), (0, 2, 2, 4), (-2, 6, 1, 2)],
)
def test_oracle_consistency_length_four(nu):
    _check_against_oracle(nu)
