"""Stembridge coefficients and related counting formulas.

b_{xi,lam} is the coefficient of the Schur function s_lam in the Schur
Q-function Q_xi; g_{xi,lam} = b_{xi,lam} / 2^l(xi).  The recursion peels
the largest part of lam and sums over vertical-strip subshapes of the
remaining rows.  Closed forms: hooks for one-row xi, the vertical-strip
counts N^(s), the two-row formula, and the square-shape expansion of the
Schur P-function at t = -1 (Aokage's values on hooks).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import (
    ShapeKind,
    classify_shape,
    is_hook,
    is_partition,
    is_strict_partition,
    vertical_strip_subshapes,
)


@lru_cache(maxsize=None)
def b_coeff(xi, lam):
    """Coefficient of s_lam in Q_xi, by the vertical-strip recursion."""
    xi, lam = tuple(xi), tuple(lam)
    if not is_strict_partition(xi):
        raise ValueError("xi must be a strict partition, got %r" % (xi,))
    if not is_partition(lam):
        raise ValueError("lam must be a partition, got %r" % (lam,))
    if sum(xi) != sum(lam):
        return 0
    if not xi:
        return 1
    if len(xi) == 1:
        return 2 if is_hook(lam) else 0
    lam1, rest = lam[0], lam[1:]
    total = 0
    for i, part in enumerate(xi):
        if part < lam1:
            break
        sign = -1 if i % 2 else 1
        xi_hat = xi[:i] + xi[i + 1:]
        for rho in vertical_strip_subshapes(rest, part - lam1):
            total += sign * 2 * b_coeff(xi_hat, rho)
    return total


def g_coeff(xi, lam):
    """g = b / 2^l(xi); the division is exact by construction."""
    b = b_coeff(xi, lam)
    q, r = divmod(b, 2 ** len(tuple(xi)))
    if r:
        raise ArithmeticError("b_coeff %d not divisible by 2^%d" % (b, len(tuple(xi))))
    return q


def count_Ns(lam, s, brute_force=False):
    """Number of hook subshapes rho of lam^(1) (lam minus its first row)
    with lam^(1)/rho a vertical s-strip."""
    lam = tuple(lam)
    if brute_force:
        return sum(1 for rho in vertical_strip_subshapes(lam[1:], s) if is_hook(rho))
    shape = classify_shape(lam)
    if shape.kind is ShapeKind.OTHER:
        return 0
    rest_weight = sum(lam[1:])
    if s < 0 or s > rest_weight:
        return 0
    if shape.kind is ShapeKind.HOOK:
        return 1
    m2, m1 = shape.m2, shape.m1
    if s <= m2 - 1 or s >= m1 + m2 + 2:
        return 0
    if s == m2 or s == m1 + m2 + 1:
        return 1
    return 2


def b_two_row(n, m, lam):
    """b_{(n-m,m),lam} for 1 <= m < n/2 via the N^(s) counts."""
    if not (1 <= m and 2 * m < n):
        raise ValueError("need 1 <= m < n/2")
    lam = tuple(lam)
    if sum(lam) != n:
        raise ValueError("lam must have weight n")
    lam1 = lam[0]
    return 4 * (count_Ns(lam, n - m - lam1) - count_Ns(lam, m - lam1))


def hook_arm(lam):
    """j such that lam = (|lam|-j, 1^j), or None when lam is not a hook."""
    lam = tuple(lam)
    if not lam or not is_hook(lam):
        return None
    return len(lam) - 1


def g_square(r, lam):
    """g_{(r,r),lam}: coefficient of s_lam in the Schur P-function of the
    square shape at t = -1, by the closed forms."""
    lam = tuple(lam)
    if r < 1 or sum(lam) != 2 * r:
        raise ValueError("need |lam| = 2r, r >= 1")
    shape = classify_shape(lam)
    if shape.kind is ShapeKind.OTHER:
        return 0
    if shape.kind is ShapeKind.HOOK:
        j = hook_arm(lam)
        if j < r:
            return 0
        return -1 if (r + j) % 2 else 1
    if shape.lam2 + shape.m1 - 1 <= shape.lam1 <= shape.lam2 + shape.m1 + 1:
        return 1
    return 0


def g_square_alternating_sum(r, lam):
    """Cross-check for g_square via the alternating sum of one- and two-row
    b-coefficients plus the hook delta term."""
    lam = tuple(lam)
    n = 2 * r
    if sum(lam) != n:
        raise ValueError("need |lam| = 2r")
    total = Fraction(0)
    for i in range(r):
        xi = (n,) if i == 0 else (n - i, i)
        sign = -1 if (i + r + 1) % 2 else 1
        total += Fraction(sign * b_coeff(xi, lam), 4)
    j = hook_arm(lam)
    if j is not None:
        total += Fraction(-1 if (r + j) % 2 else 1, 2)
    if total.denominator != 1:
        raise ArithmeticError("non-integer g value %s for lam=%r" % (total, lam))
    return int(total)
