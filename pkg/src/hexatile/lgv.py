"""LGV determinants for damaged hexagons: E(a,b,c,d,p) and O(a,b,c,d,p).

E and O denote the determinants of the path-count matrix with lateral
points first and intrusive points last.  For even intrusions the
determinant is the tiling count; for odd intrusions it may be the
negative of the count (the admissible permutation can be odd).
"""

from __future__ import annotations

from dataclasses import dataclass

from .detkernel import IntMatrix, det_bareiss, det_modular
from .hexmodel import EVEN, ODD, HexSpec, all_ends, all_starts, binom, path_count

# Bareiss wins while entries stay binomial-sized; modular takes over beyond this.
_MODULAR_DIM = 60


@dataclass(frozen=True)
class SignedCount:
    value: int
    tilings: int
    sign: int

    @staticmethod
    def of(value: int) -> "SignedCount":
        return SignedCount(value, abs(value), 0 if value == 0 else (1 if value > 0 else -1))


def _entries(a: int, b: int, c: int, d: int, p: int, parity: str) -> IntMatrix:
    """Path-count matrix for arbitrary integer b, c (formal extension).

    The condensation recursion shifts b and c below zero; the binomial
    convention keeps every entry well defined there.
    """
    n = a + d
    starts = [(1 - i, i - 1) for i in range(1, a + 1)]
    ends = [(b + 1 - j, c + j - 1) for j in range(1, a + 1)]
    if parity == EVEN:
        mids = [(-p + i, p + i - 1) for i in range(1, d + 1)]
        starts += mids
        ends += mids
    else:
        starts += [(-p + i, p + i) for i in range(1, d + 1)]
        ends += [(-p + j - 1, p + j - 1) for j in range(1, d + 1)]
    out = []
    for (x, y) in starts:
        out.append([binom((u - x) + (v - y), u - x) for (u, v) in ends])
    assert len(out) == n
    return out


def build_matrix(spec: HexSpec) -> IntMatrix:
    """Square LGV matrix of dimension a+d; entry (i,j) counts paths start_i -> end_j."""
    starts = all_starts(spec)
    ends = all_ends(spec)
    return [[path_count(s, e) for e in ends] for s in starts]


def _det(m: IntMatrix) -> int:
    if len(m) >= _MODULAR_DIM:
        return det_modular(m)
    return det_bareiss(m)


def _signed(a: int, b: int, c: int, d: int, p: int, parity: str) -> SignedCount:
    if min(a, b, c, d) < 0:
        raise ValueError("a, b, c, d must be nonnegative")
    return SignedCount.of(_det(_entries(a, b, c, d, p, parity)))


def even_count(a: int, b: int, c: int, d: int, p: int) -> SignedCount:
    return _signed(a, b, c, d, p, EVEN)


def odd_count(a: int, b: int, c: int, d: int, p: int) -> SignedCount:
    return _signed(a, b, c, d, p, ODD)


def even_count_by_condensation(a: int, b: int, c: int, d: int, p: int) -> int:
    """E(a,b,c,d,p) via the condensation recursion in a, memoized per call.

    Recurses through E(a-1, b+-1, c-+1, d, p or p-1) down to the base cases
    E(0,...) = 1 and a direct (1+d)-dimensional determinant at a = 1.  A zero
    divisor is a condensation breakdown; those nodes fall back to the direct
    determinant.
    """
    if min(a, b, c, d) < 0:
        raise ValueError("a, b, c, d must be nonnegative")
    memo: dict[tuple[int, int, int, int], int] = {}

    def rec(a: int, b: int, c: int, p: int) -> int:
        if a == 0:
            return 1
        key = (a, b, c, p)
        if key in memo:
            return memo[key]
        if a == 1:
            v = _det(_entries(1, b, c, d, p, EVEN))
        else:
            lower = rec(a - 2, b, c, p - 1)
            if lower == 0:
                v = _det(_entries(a, b, c, d, p, EVEN))
            else:
                num = rec(a - 1, b, c, p - 1) * rec(a - 1, b, c, p) - rec(
                    a - 1, b + 1, c - 1, p - 1
                ) * rec(a - 1, b - 1, c + 1, p)
                q, r = divmod(num, lower)
                if r:
                    v = _det(_entries(a, b, c, d, p, EVEN))
                else:
                    v = q
        memo[key] = v
        return v

    return rec(a, b, c, p)


def verify_symmetry(a: int, b: int, c: int, d: int, p: int) -> bool:
    """Reflection at a vertical axis: E(a,b,c,d,p) = E(a,c,b,d,a-p) and
    O(a,b,c,d,p) = O(a,c,b,d,a-1-p).

    Intrusion positions are counted from 0 for both parities, so the p
    positions of the odd family are 0..a-1 and the mirror sends p to a-1-p.
    """
    if even_count(a, b, c, d, p).value != even_count(a, c, b, d, a - p).value:
        return False
    return odd_count(a, b, c, d, p).value == odd_count(a, c, b, d, a - 1 - p).value


def _condensation_holds(a: int, b: int, c: int, d: int, p: int, parity: str) -> bool:
    def x(a_, b_, c_, p_):
        # a_ = 0 stays meaningful: the intrusive-only determinant (1 when d = 0,
        # and 0 for the odd family once d > 0, where the diagonal vanishes).
        return _det(_entries(a_, b_, c_, d, p_, parity))

    lhs = x(a, b, c, p) * x(a - 2, b, c, p - 1)
    rhs = x(a - 1, b, c, p - 1) * x(a - 1, b, c, p) - x(a - 1, b + 1, c - 1, p - 1) * x(
        a - 1, b - 1, c + 1, p
    )
    return lhs == rhs


def verify_dodgson_even(a: int, b: int, c: int, d: int, p: int) -> bool:
    """Condensation identity on E-values (a >= 2); b, c shifts taken formally."""
    if a < 2:
        raise ValueError("condensation needs a >= 2")
    return _condensation_holds(a, b, c, d, p, EVEN)


def verify_dodgson_odd(a: int, b: int, c: int, d: int, p: int) -> bool:
    """Condensation identity on O-values (a >= 2)."""
    if a < 2:
        raise ValueError("condensation needs a >= 2")
    return _condensation_holds(a, b, c, d, p, ODD)
