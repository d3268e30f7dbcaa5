"""MacMahon-matrix structure: LU factorization, explicit inverse, and the
block reduction of the intrusion determinant to a small d x d matrix F.

All matrices are dense lists of Fractions; every check is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .detkernel import (
    RatMatrix,
    det_rational,
    identity,
    mat_mul,
    mat_sub,
    solve_exact,
)
from .exactmath import as_int, binom, factorial, pochhammer
from .formulas import OutOfValidityError, macmahon


@dataclass(frozen=True)
class MacMahonBundle:
    a: int
    b: int
    c: int
    M: RatMatrix
    L: RatMatrix
    T: RatMatrix
    D: RatMatrix
    U: RatMatrix


@dataclass(frozen=True)
class BlockDecomposition:
    a: int
    b: int
    c: int
    d: int
    p: int
    Q1: list
    Q2: list
    Q3: list
    Q4: list
    F: RatMatrix


def build_bundle(a: int, b: int, c: int) -> MacMahonBundle:
    """The five a x a matrices M, L, T, D, U with U = L.M and M^-1 = T.D.L."""
    if a < 0 or b < 0 or c < 0:
        raise ValueError("a, b, c must be nonnegative")
    rng = range(1, a + 1)
    M = [[Fraction(binom(b + c, b + i - j)) for j in rng] for i in rng]
    L = [
        [
            Fraction(0)
            if j > i
            else (-1) ** (i + j) * binom(i - 1, j - 1) * pochhammer(c, i - j) / pochhammer(b + j, i - j)
            for j in rng
        ]
        for i in rng
    ]
    T = [
        [
            Fraction(0)
            if i > j
            else (-1) ** (i + j) * binom(j - 1, i - 1) * pochhammer(b, j - i) / pochhammer(c + i, j - i)
            for j in rng
        ]
        for i in rng
    ]
    D = [
        [
            Fraction(factorial(b + i - 1) * factorial(c + i - 1), factorial(b + c + i - 1) * factorial(i - 1))
            if i == j
            else Fraction(0)
            for j in rng
        ]
        for i in rng
    ]
    U = []
    for i in rng:
        row = []
        for j in rng:
            lead = pochhammer(-i + j + 1, i - 1)
            if lead == 0 or b + i - j < 0:
                row.append(Fraction(0))
            else:
                row.append(
                    lead
                    * Fraction(
                        factorial(b) * factorial(b + c + i - 1),
                        factorial(b + i - 1) * factorial(c + j - 1) * factorial(b + i - j),
                    )
                )
        U.append(row)
    return MacMahonBundle(a=a, b=b, c=c, M=M, L=L, T=T, D=D, U=U)


def inverse_entry(a: int, b: int, c: int, i: int, j: int) -> Fraction:
    """(i,j)-entry of M^-1 as the explicit single sum (1-based indices)."""
    s = Fraction(0)
    for k in range(max(i, j), a + 1):
        coef = binom(k - 1, i - 1) * binom(k - 1, j - 1)
        if coef == 0:
            continue
        s += coef * pochhammer(b, k - i) * pochhammer(c, k - j) / (
            factorial(k - 1) * factorial(b + c + k - 1)
        )
    return (-1) ** (i + j) * factorial(b + j - 1) * factorial(c + i - 1) * s


def verify_inverse(bundle: MacMahonBundle) -> bool:
    """Check U = L.M, M.(T.D.L) = I, and the entrywise inverse formula."""
    a = bundle.a
    if mat_mul(bundle.L, bundle.M) != bundle.U:
        return False
    inv = mat_mul(bundle.T, mat_mul(bundle.D, bundle.L))
    if mat_mul(bundle.M, inv) != identity(a):
        return False
    for i in range(1, a + 1):
        for j in range(1, a + 1):
            if inv[i - 1][j - 1] != inverse_entry(a, bundle.b, bundle.c, i, j):
                return False
    return True


def build_blocks(a: int, b: int, c: int, d: int, p: int) -> BlockDecomposition:
    """Q1, Q2, Q3, Q4 blocks of the even-intrusion matrix and F = Q4 - Q3.Q2^-1.Q1."""
    if a < 1 or d < 1:
        raise ValueError("block decomposition needs a >= 1 and d >= 1")
    q1 = [[binom(2 * j - 1, -i + j + p) for j in range(1, d + 1)] for i in range(1, a + 1)]
    q2 = [[binom(b + c, c - i + j) for j in range(1, a + 1)] for i in range(1, a + 1)]
    q3 = [[binom(b + c - 2 * i + 1, c - i + j - p) for j in range(1, a + 1)] for i in range(1, d + 1)]
    q4 = [[binom(2 * (j - i), j - i) for j in range(1, d + 1)] for i in range(1, d + 1)]
    x = solve_exact(q2, q1)
    f = mat_sub(q4, mat_mul(q3, x))
    return BlockDecomposition(a=a, b=b, c=c, d=d, p=p, Q1=q1, Q2=q2, Q3=q3, Q4=q4, F=f)


def count_via_F(a: int, b: int, c: int, d: int, p: int) -> int:
    """E(a,b,c,d,p) as det(F) times the MacMahon count (det of empty F is 1)."""
    if d == 0:
        return macmahon(a, b, c)
    blocks = build_blocks(a, b, c, d, p)
    return as_int(det_rational(blocks.F) * macmahon(a, b, c), "count_via_F")


def _inner_sum(a: int, b: int, c: int, i: int, l: int) -> Fraction:
    # sum over k of the M^-1-shaped kernel; zero-binomial terms skipped so no
    # negative-length Pochhammer is ever formed
    s = Fraction(0)
    for k in range(max(i, l), a + 1):
        coef = binom(k - 1, i - 1) * binom(k - 1, l - 1)
        if coef == 0:
            continue
        s += coef * pochhammer(b, k - i) * pochhammer(c, k - l) / (
            factorial(k - 1) * factorial(b + c + k - 1)
        )
    return s


def double_sum_entry(a: int, b: int, c: int, p: int, i: int, j: int) -> Fraction:
    """(i,j)-entry of Q2^-1.Q1 as the displayed double sum (1-based)."""
    out = Fraction(0)
    for l in range(1, a + 1):
        outer = binom(2 * j - 1, l + j - p - 1)
        if outer == 0:
            continue
        out += (
            (-1) ** (i + l)
            * factorial(b + l - 1)
            * factorial(c + i - 1)
            * outer
            * _inner_sum(a, b, c, i, l)
        )
    return out


def triple_sum_entry(a: int, b: int, c: int, p: int, i: int, j: int) -> Fraction:
    """(i,j)-entry of Q3.Q2^-1.Q1 as the displayed triple sum (1-based)."""
    out = Fraction(0)
    for t in range(1, a + 1):
        outer = binom(b + c - 2 * i + 1, c - i + t - p)
        if outer == 0:
            continue
        out += outer * double_sum_entry(a, b, c, p, t, j)
    return out


def verify_triple_sum(a: int, b: int, c: int, p: int, i: int, j: int) -> bool:
    """Check the double- and triple-sum displays against direct linear algebra."""
    d = max(i, j)
    blocks = build_blocks(a, b, c, d, p)
    x = solve_exact(blocks.Q2, blocks.Q1)
    ok = True
    if i <= a:
        ok = ok and double_sum_entry(a, b, c, p, i, j) == x[i - 1][j - 1]
    q3x = mat_mul(blocks.Q3, x)
    ok = ok and triple_sum_entry(a, b, c, p, i, j) == q3x[i - 1][j - 1]
    return ok


def verify_sum_formula(a: int, b: int, c: int, p: int) -> bool:
    """Check the closed summation identity extracted from F_{1,1} at d=1.

    The k = p summand contains (c)_{-1} = 1/(c-1), so the display requires
    c >= 2 when p >= 1 (the c = 1 singularity is removable but the printed
    form is literally 0/0 there); p = 0 requires c >= 1 and the whole
    identity needs b+p >= 1.
    """
    if a < 1 or p < 0 or b + p < 1 or (p >= 1 and c < 2) or (p == 0 and c < 1):
        raise OutOfValidityError("outside the displayed sum's pole-free window")

    rhs = 1 - binom(a, a - p) * pochhammer(b, p) * pochhammer(c, a - p) / pochhammer(b + c, a)

    def outer(coef_fn):
        total = Fraction(0)
        for t in range(1, a + 1):
            inner = Fraction(0)
            for k in range(t, a + 1):
                tb = binom(k - 1, t - 1)
                if tb == 0:
                    continue
                coef = coef_fn(k)
                if coef == 0:
                    continue
                inner += (
                    coef
                    * pochhammer(b, k - t)
                    * pochhammer(c, k - p - 1)
                    * tb
                    / (factorial(k - 1) * factorial(b + c + k - 1))
                )
            total += (-1) ** t * binom(b + c - 1, c - p + t - 1) * factorial(c + t - 1) * inner
        return (-1) ** p * factorial(b + p - 1) * total

    lhs = outer(lambda k: -(b + p) * binom(k - 1, p) + (c + k - p - 1) * binom(k - 1, p - 1))
    if lhs != rhs:
        return False

    if p == 0:
        variant = Fraction(0)
        for t in range(0, a):
            inner = Fraction(0)
            for k in range(t, a):
                inner += (
                    pochhammer(b, k - t)
                    * binom(k, t)
                    * binom(c + k - 1, k)
                    / Fraction(factorial(b + c + k))
                )
            variant += (-1) ** t * pochhammer(b - t, c + t) * inner
        if factorial(b) * variant != 1 - pochhammer(c, a) / pochhammer(b + c, a):
            return False
    else:
        lhs2 = outer(
            lambda k: (Fraction(-b * k, p) + b + c - 1) * binom(k - 1, p - 1)
        )
        if lhs2 != rhs:
            return False
    return True
