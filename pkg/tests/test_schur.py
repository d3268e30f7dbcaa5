"""Triangular decomposition, explicit inverse, and block reduction of the
binomial matrix behind the intact-hexagon count."""

from fractions import Fraction

import pytest

from hexatile.detkernel import det_rational, identity, mat_mul
from hexatile.exactmath import binom, factorial
from hexatile.formulas import detF_factorized, macmahon
from hexatile.hexmodel import EVEN, HexSpec
from hexatile.lgv import build_matrix, even_count
from hexatile.schur import (
    build_blocks,
    build_bundle,
    count_via_F,
    triple_sum_entry,
    verify_inverse,
    verify_sum_formula,
    verify_triple_sum,
)


def test_bundle_a1():
    bundle = build_bundle(1, 3, 4)
    assert bundle.M == [[Fraction(binom(7, 3))]]
    assert bundle.L == [[Fraction(1)]]
    assert bundle.T == [[Fraction(1)]]
    assert bundle.U == [[Fraction(binom(7, 3))]]
    assert bundle.D == [[Fraction(factorial(3) * factorial(4), factorial(7))]]


def test_bundle_shapes_and_triangularity():
    bundle = build_bundle(4, 3, 2)
    for mat in (bundle.M, bundle.L, bundle.T, bundle.D, bundle.U):
        assert len(mat) == 4 and all(len(row) == 4 for row in mat)
    for i in range(4):
        assert bundle.L[i][i] == 1
        assert bundle.T[i][i] == 1
        for j in range(i + 1, 4):
            assert bundle.L[i][j] == 0  # lower triangular
            assert bundle.U[j][i] == 0  # upper triangular
            assert bundle.T[j][i] == 0
        for j in range(4):
            if j != i:
                assert bundle.D[i][j] == 0


def test_bundle_products():
    for a in range(1, 6):
        for b in range(0, 6):
            for c in range(0, 6):
                bundle = build_bundle(a, b, c)
                assert bundle.U == mat_mul(bundle.L, bundle.M)
                inv = mat_mul(bundle.T, mat_mul(bundle.D, bundle.L))
                assert mat_mul(bundle.M, inv) == [
                    [Fraction(v) for v in row] for row in identity(a)
                ]


def test_det_u_is_macmahon():
    for a in range(1, 6):
        for b, c in [(2, 3), (4, 4), (5, 1)]:
            bundle = build_bundle(a, b, c)
            diag = Fraction(1)
            for i in range(a):
                diag *= bundle.U[i][i]
            assert diag == macmahon(a, b, c)
            assert det_rational(bundle.M) == macmahon(a, b, c)


def test_verify_inverse():
    assert verify_inverse(build_bundle(4, 3, 2))
    for a in range(1, 6):
        for b in range(0, 6):
            for c in range(0, 6):
                assert verify_inverse(build_bundle(a, b, c)), (a, b, c)


def test_blocks_reassemble_to_lgv_matrix():
    for a, b, c, d, p in [(4, 5, 3, 2, 4), (2, 3, 3, 1, 0), (3, 4, 5, 2, 2), (1, 2, 2, 1, 1)]:
        blocks = build_blocks(a, b, c, d, p)
        full = build_matrix(HexSpec(a, b, c, d, p, EVEN))
        for i in range(a):
            for j in range(a):
                assert blocks.Q2[i][j] == full[i][j]
            for j in range(d):
                assert blocks.Q1[i][j] == full[i][a + j]
        for i in range(d):
            for j in range(a):
                assert blocks.Q3[i][j] == full[a + i][j]
            for j in range(d):
                assert blocks.Q4[i][j] == full[a + i][a + j]


def test_q4_structure():
    blocks = build_blocks(3, 4, 4, 3, 1)
    for i in range(3):
        assert blocks.Q4[i][i] == 1
        for j in range(i):
            assert blocks.Q4[i][j] == 0


def test_f_entries_do_not_depend_on_d():
    base = build_blocks(4, 5, 5, 4, 2).F
    for d in range(1, 4):
        smaller = build_blocks(4, 5, 5, d, 2).F
        for i in range(d):
            for j in range(d):
                assert smaller[i][j] == base[i][j]


def test_count_via_F():
    assert count_via_F(2, 2, 2, 1, 1) == 8
    assert count_via_F(4, 5, 3, 2, 4) == even_count(4, 5, 3, 2, 4).value
    for a in range(1, 5):
        for b in range(1, 6):
            for c in range(1, 6):
                for d in range(1, 4):
                    for p in range(0, a + 1):
                        assert count_via_F(a, b, c, d, p) == even_count(a, b, c, d, p).value


def test_count_via_F_d0_degenerates_to_macmahon():
    assert count_via_F(3, 4, 5, 0, 1) == macmahon(3, 4, 5)


def test_detF_matches_factorized_at_a_2p():
    for p in range(1, 3):
        for b in range(2, 6):
            for c in range(2, 6):
                for d in range(1, min(b, c) + 1):
                    f = build_blocks(2 * p, b, c, d, p).F
                    assert det_rational(f) == detF_factorized(p, b, c, d)


def test_triple_sum_entries():
    for i in range(1, 4):
        for j in range(1, 4):
            assert verify_triple_sum(3, 3, 3, 1, i, j)
    # a=1 collapses the sums to the single k=l=1 term
    assert verify_triple_sum(1, 4, 2, 0, 1, 1)
    for a, b, c, p in [(2, 3, 4, 1), (4, 2, 2, 2), (3, 5, 2, 0)]:
        for i in range(1, 3):
            for j in range(1, 3):
                assert verify_triple_sum(a, b, c, p, i, j), (a, b, c, p, i, j)


def test_triple_sum_entry_value():
    from hexatile.detkernel import solve_exact

    blocks = build_blocks(3, 3, 3, 2, 1)
    product = mat_mul(blocks.Q3, solve_exact(blocks.Q2, blocks.Q1))
    # triple_sum_entry uses 1-based indices into Q3.Q2^{-1}.Q1
    for i in range(1, 3):
        for j in range(1, 3):
            assert triple_sum_entry(3, 3, 3, 1, i, j) == product[i - 1][j - 1]


def test_verify_sum_formula():
    from hexatile.formulas import OutOfValidityError

    assert verify_sum_formula(3, 4, 5, 1)
    checked = 0
    for a in range(1, 6):
        for b in range(1, 6):
            for c in range(1, 6):
                for p in range(0, a + 1):
                    try:
                        ok = verify_sum_formula(a, b, c, p)
                    except OutOfValidityError:
                        continue
                    assert ok, (a, b, c, p)
                    checked += 1
    assert checked > 300
