"""Exact dense determinant and linear-solve kernels over int and Fraction.

Matrices are dense row-major lists of lists.  Two determinant kernels with
identical contracts cross-validate each other: fraction-free Bareiss
elimination (baseline) and a multi-modular/CRT kernel for larger instances.
The prime pool is a fixed, deterministic sequence (the largest primes below
2^62, in descending order), so every run is reproducible.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

IntMatrix = list[list[int]]
RatMatrix = list[list[Fraction]]


class SingularMatrixError(ArithmeticError):
    pass


def _check_square(m: Sequence[Sequence]) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    return n


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    """Exact matrix product; works for int and Fraction entries alike."""
    if not a or not b:
        return []
    if len(a[0]) != len(b):
        raise ValueError("inner dimensions do not match")
    cols = range(len(b[0]))
    return [[sum(row[k] * b[k][j] for k in range(len(b))) for j in cols] for row in a]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def det_bareiss(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = _check_square(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                # every division here is exact (Sylvester identity)
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


# --- multi-modular kernel ---------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)  # deterministic below 3.3e24


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


_PRIME_CACHE: list[int] = []


def prime_pool(count: int) -> list[int]:
    """First `count` primes of the fixed pool: largest primes below 2^62, descending."""
    candidate = _PRIME_CACHE[-1] - 2 if _PRIME_CACHE else (1 << 62) - 1
    while len(_PRIME_CACHE) < count:
        if _is_prime(candidate):
            _PRIME_CACHE.append(candidate)
        candidate -= 2
    return _PRIME_CACHE[:count]


_SMALL_PRIME_CACHE: list[int] = []


def small_prime_pool(count: int) -> list[int]:
    """Largest primes below 2^31, descending; two residues multiply within int64."""
    candidate = _SMALL_PRIME_CACHE[-1] - 2 if _SMALL_PRIME_CACHE else (1 << 31) - 1
    while len(_SMALL_PRIME_CACHE) < count:
        if _is_prime(candidate):
            _SMALL_PRIME_CACHE.append(candidate)
        candidate -= 2
    return _SMALL_PRIME_CACHE[:count]


def _det_mod(m: IntMatrix, p: int) -> int:
    n = len(m)
    a = [[x % p for x in row] for row in m]
    det = 1
    for k in range(n):
        piv = k
        while piv < n and a[piv][k] == 0:
            piv += 1
        if piv == n:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = p - det
        pivot = a[k][k]
        det = det * pivot % p
        inv = pow(pivot, p - 2, p)
        for i in range(k + 1, n):
            f = a[i][k]
            if f == 0:
                continue
            f = f * inv % p
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] - f * row_k[j]) % p
    return det


def _hadamard_bound(m: IntMatrix) -> int:
    bound = 1
    for row in m:
        norm_sq = sum(x * x for x in row)
        if norm_sq == 0:
            return 0
        s = math.isqrt(norm_sq)
        if s * s < norm_sq:
            s += 1
        bound *= s
    return bound


def det_modular(m: IntMatrix) -> int:
    """Same value as det_bareiss, via residues mod 62-bit primes and CRT.

    The prime product is grown past twice the Hadamard bound, so the
    symmetric CRT representative is the exact determinant.
    """
    n = _check_square(m)
    if n == 0:
        return 1
    bound = _hadamard_bound(m)
    if bound == 0:
        return 0
    target = 2 * bound + 1
    primes = []
    prod = 1
    k = 0
    while prod < target:
        k += 16
        primes = prime_pool(k)
        prod = math.prod(primes)
    residue, modulus = 0, 1
    for p in primes:
        r = _det_mod(m, p)
        # CRT merge
        inv = pow(modulus % p, p - 2, p)
        residue += modulus * ((r - residue) * inv % p)
        modulus *= p
        if modulus >= target:
            break
    residue %= modulus
    if residue > modulus // 2:
        residue -= modulus
    return residue


def det_rational(m: RatMatrix) -> Fraction:
    """Exact determinant of a Fraction matrix (clear denominators per row)."""
    n = _check_square(m)
    if n == 0:
        return Fraction(1)
    scaled = []
    scale = 1
    for row in m:
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        scaled.append([int(x * lcm) for x in row])
        scale *= lcm
    return Fraction(det_bareiss(scaled), scale)


def solve_exact(m: IntMatrix, rhs: IntMatrix) -> RatMatrix:
    """Exact X with m X = rhs, by fraction-free forward elimination.

    Raises SingularMatrixError when m is singular.
    """
    n = _check_square(m)
    if any(len(row) != len(rhs[0]) for row in rhs) or len(rhs) != n:
        raise ValueError("rhs has incompatible dimensions")
    r = len(rhs[0]) if rhs else 0
    w = n + r
    aug = [list(m[i]) + list(rhs[i]) for i in range(n)]
    prev = 1
    for k in range(n):
        if aug[k][k] == 0:
            for i in range(k + 1, n):
                if aug[i][k] != 0:
                    aug[k], aug[i] = aug[i], aug[k]
                    break
            else:
                raise SingularMatrixError("matrix is singular")
        pivot = aug[k][k]
        for i in range(k + 1, n):
            row_i, row_k = aug[i], aug[k]
            aik = row_i[k]
            for j in range(k + 1, w):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    x: RatMatrix = [[Fraction(0)] * r for _ in range(n)]
    for k in range(n - 1, -1, -1):
        for j in range(r):
            acc = Fraction(aug[k][n + j])
            for t in range(k + 1, n):
                acc -= aug[k][t] * x[t][j]
            x[k][j] = acc / aug[k][k]
    return x
