"""Closed-form evaluators checked against the determinant engine."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexatile.exactmath import PoleError, binom
from hexatile.formulas import (
    OutOfValidityError,
    UnknownQError,
    ansatz_factors,
    byun_even,
    byun_odd,
    byun_odd_corrected,
    count_a1_reflection,
    d1_corollary,
    detF_factorized,
    f_sum,
    macmahon,
    p_one_minus_d_alt,
    p_one_minus_d_simple,
    prefactor_P,
    q_known,
    special_prefactor,
    verify_identities,
)
from hexatile.lgv import even_count, odd_count


def test_macmahon_values():
    assert macmahon(2, 2, 2) == 20
    assert macmahon(1, 3, 4) == binom(7, 4)
    assert macmahon(5, 4, 0) == 1
    assert macmahon(0, 6, 6) == 1


@given(
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=0, max_value=6),
)
@settings(max_examples=50, deadline=None)
def test_macmahon_symmetric_in_b_c(a, b, c):
    assert macmahon(a, b, c) == macmahon(a, c, b)


def test_byun_even_examples():
    assert byun_even(2, 3, 3, 0) == macmahon(4, 3, 3)
    assert byun_even(1, 2, 2, 1) == 8


def test_byun_even_matches_determinant():
    for p in range(0, 3):
        for b in range(1, 7):
            for c in range(1, 7):
                for d in range(1, min(b, c) + 1):
                    try:
                        val = byun_even(p, b, c, d)
                    except PoleError:
                        continue
                    assert val == even_count(2 * p, b, c, d, p).value, (p, b, c, d)


def test_byun_odd_printed_form_is_systematically_wrong():
    # The transcribed odd product disagrees with the determinant for every
    # d >= 1 we checked; sometimes it is not even an integer.  These frozen
    # instances document the discrepancy (|O| from the determinant engine).
    assert abs(odd_count(1, 1, 1, 1, 0).value) == 1
    assert byun_odd(0, 1, 1, 1) == 2
    assert abs(odd_count(1, 3, 5, 1, 0).value) == 15
    assert byun_odd(0, 3, 5, 1) == 24
    with pytest.raises(ValueError, match="not an integer"):
        byun_odd(0, 4, 4, 2)  # evaluates to 100/7
    with pytest.raises(ValueError, match="not an integer"):
        byun_odd(3, 5, 3, 3)
    assert byun_odd(1, 4, 4, 0) == macmahon(3, 4, 4)  # d=0 stays MacMahon


def test_byun_odd_corrected_matches_determinant():
    for p in range(0, 3):
        a = 2 * p + 1
        for b in range(1, 7):
            for c in range(1, 7):
                for d in range(1, min(b, c) + 1):
                    expect = odd_count(a, b, c, d, p)
                    assert byun_odd_corrected(p, b, c, d) == expect.tilings, (p, b, c, d)
                    assert (-1) ** d * byun_odd_corrected(p, b, c, d) == expect.value


def test_byun_odd_corrected_spot_value():
    assert byun_odd_corrected(3, 5, 3, 3) == 2642640
    assert odd_count(7, 5, 3, 3, 3).value == -2642640


def test_count_a1_reflection_examples():
    assert count_a1_reflection(2, 2, 1, 0) == 3
    assert count_a1_reflection(6, 4, 3, -2) == binom(10, 4) - binom(5, 4) == 205
    assert count_a1_reflection(5, 3, 2, -2) == binom(8, 5)  # d+p <= 0: empty sum
    with pytest.raises(OutOfValidityError):
        count_a1_reflection(2, 2, 1, 1)


def test_count_a1_reflection_matches_determinant():
    for b in range(1, 8):
        for c in range(1, 8):
            for d in range(1, (b + c + 1) // 2 + 1):
                for p in range(-d - 1, 1):
                    assert count_a1_reflection(b, c, d, p) == even_count(1, b, c, d, p).value


def test_p_one_minus_d_simple():
    assert p_one_minus_d_simple(3, 2, 5, 2) == macmahon(3, 2, 5)  # d >= b/2+1 branch
    for a in range(0, 6):
        for b in range(1, 8):
            for c in range(1, 8):
                for d in range(1, 5):
                    assert p_one_minus_d_simple(a, b, c, d) == even_count(a, b, c, d, 1 - d).value
    with pytest.raises(OutOfValidityError):
        p_one_minus_d_simple(2, 2, 2, 0)


def test_p_one_minus_d_simple_agrees_with_a1_reflection():
    for b in range(2, 7):
        for c in range(2, 7):
            for d in range(1, (b + c + 1) // 2):
                assert p_one_minus_d_simple(1, b, c, d) == count_a1_reflection(b, c, d, 1 - d)


def test_p_one_minus_d_alt_variants():
    for a in range(0, 5):
        for b in range(1, 7):
            for c in range(1, 7):
                for d in range(1, 4):
                    expect = even_count(a, b, c, d, 1 - d).value
                    if 2 * d <= b + 1:
                        assert p_one_minus_d_alt(a, b, c, d, "sum") == expect
                    if b > d:
                        assert p_one_minus_d_alt(a, b, c, d, "polynomial") == expect
    with pytest.raises(OutOfValidityError):
        p_one_minus_d_alt(2, 2, 4, 3, "polynomial")
    with pytest.raises(ValueError):
        p_one_minus_d_alt(2, 4, 4, 1, "horner")


def test_f_sum_small_cases():
    assert f_sum(0, 3, 4, 2) == 0
    for b in range(1, 5):
        for c in range(1, 5):
            for d in range(1, 5):
                from hexatile.exactmath import factorial

                assert f_sum(1, b, c, d) == factorial(2 * d - 2)


def test_d1_corollary():
    assert d1_corollary(2, 2, 2) == 6
    assert d1_corollary(4, 3, 1) == 1
    for a in range(0, 8):
        for b in range(0, 8):
            for c in range(1, 8):
                assert d1_corollary(a, b, c) == even_count(a, b, c, 1, 0).value
    with pytest.raises(OutOfValidityError):
        d1_corollary(2, 2, 0)


def test_prefactor_P():
    # d=1, p=0 collapses to the intact hexagon with c shortened by one
    for a in range(1, 6):
        for b in range(2, 7):
            for c in range(2, 7):
                assert prefactor_P(a, b, c, 1, 0) == macmahon(a, b, c - 1)
    with pytest.raises(OutOfValidityError):
        prefactor_P(2, 2, 2, 2, 0)  # needs b > d
    with pytest.raises(OutOfValidityError):
        prefactor_P(2, 4, 4, 1, 3)  # needs p <= a


def test_q_known():
    assert q_known(5, 7, 9, 1, 3) == 1
    assert q_known(2, 3, 4, 2, 1) == Fraction(2 * 3 + 2 * 4)
    with pytest.raises(UnknownQError):
        q_known(3, 4, 4, 3, 1)


def test_q_known_d2_matches_determinant():
    for a in range(1, 7):
        for p in range(0, a + 1):
            for b in range(3, 8):
                for c in range(p + 3, p + 8):
                    lhs = prefactor_P(a, b, c, 2, p) * q_known(a, b, c, 2, p)
                    assert lhs == even_count(a, b, c, 2, p).value


def test_special_prefactor():
    # p <= -d: empty product, intrusion does no damage
    assert special_prefactor(3, 4, 4, 2, -2) == 1
    assert special_prefactor(3, 4, 4, 2, -5) == 1
    with pytest.raises(OutOfValidityError):
        special_prefactor(3, 4, 4, 2, 1)


def test_ansatz_factor_relations():
    for a in range(1, 5):
        for b in range(3, 6):
            for c in range(4, 7):
                for d, p in [(1, 0), (1, 1), (2, 0), (2, 1)]:
                    if not (0 <= p <= a and b > d and c > d + p):
                        continue
                    f = ansatz_factors(a, b, c, d, p)
                    e = even_count(a, b, c, d, p).value
                    assert macmahon(a, b, c) * f.G == e
                    assert f.prefactor_P * f.Q == e


def test_ansatz_special_relation_nonpositive_p():
    for a in range(1, 5):
        for b in range(3, 6):
            for c in range(4, 7):
                for d in (1, 2):
                    for p in range(-d - 1, 1):
                        f = ansatz_factors(a, b, c, d, p)
                        e = even_count(a, b, c, d, p).value
                        assert macmahon(a, b, c) * f.special_prefactor * f.R == e


def test_detF_factorized():
    assert detF_factorized(1, 2, 2, 1) == Fraction(2, 5)
    assert detF_factorized(2, 5, 5, 0) == 1
    for p in range(1, 3):
        for b in range(2, 6):
            for c in range(2, 6):
                for d in range(1, min(b, c) + 1):
                    expect = Fraction(even_count(2 * p, b, c, d, p).value, macmahon(2 * p, b, c))
                    assert detF_factorized(p, b, c, d) == expect


def test_verify_identities_all_pass():
    report = verify_identities("all", amax=5, bmax=5, cmax=5, dmax=3)
    assert report
    for item in report:
        assert item.cases > 0, item.name
        assert not item.failures, item.name


def test_verify_identities_unknown_suite():
    with pytest.raises(ValueError):
        verify_identities("nonsense")
