"""Partitions, strict partitions, integer vectors and their statistics.

Partitions are plain tuples of weakly decreasing positive integers, stored
without trailing zeros; the empty tuple is the empty partition.  Integer
vectors (compositions, possibly with zero or negative entries) are plain
tuples as well and keep their entries verbatim.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import factorial

from .polynomial import Q_ONE, QPoly, RatFunc


def is_partition(seq):
    return all(a >= b for a, b in zip(seq, seq[1:])) and all(a >= 1 for a in seq)


def is_strict_partition(seq):
    return all(a > b for a, b in zip(seq, seq[1:])) and all(a >= 1 for a in seq)


def weight(lam):
    return sum(lam)


def multiplicities(lam):
    return Counter(lam)


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def dominates(lam, mu):
    """lam >= mu in dominance order (equal weights, partial sums)."""
    if sum(lam) != sum(mu):
        return False
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam[i] if i < len(lam) else 0
        total_m += mu[i] if i < len(mu) else 0
        if total_l < total_m:
            return False
    return True


@lru_cache(maxsize=None)
def partitions(n, max_part=None):
    """All partitions of n with parts <= max_part, in reverse lex order."""
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def strict_partitions(n, max_part=None):
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            out.append((first,) + rest)
    return tuple(out)


# -- statistics ---------------------------------------------------------


def z_stat(lam):
    z = 1
    for part, m in multiplicities(lam).items():
        z *= part ** m * factorial(m)
    return z


def z_t(lam):
    """z_lam / prod (1 - t^lam_i) as a reduced rational function."""
    den = Q_ONE
    for part in lam:
        den = den * QPoly([1] + [0] * (part - 1) + [-1])
    return RatFunc(QPoly([z_stat(lam)]), den)


def n_stat(lam):
    return sum(i * part for i, part in enumerate(lam))


def eps(lam):
    return -1 if (weight(lam) - len(lam)) % 2 else 1


def u_stat(lam):
    u = factorial(len(lam))
    for m in multiplicities(lam).values():
        u //= factorial(m)
    return u


def partition_stats(lam):
    """(z, z_t, n_stat, eps, u) for a partition."""
    return z_stat(lam), z_t(lam), n_stat(lam), eps(lam), u_stat(lam)


# -- enumeration helpers ------------------------------------------------


def weak_compositions(k, positions):
    """All vectors of `positions` nonnegative integers summing to k,
    in lexicographic order."""
    if positions == 0:
        if k == 0:
            yield ()
        return
    for first in range(k + 1):
        for rest in weak_compositions(k - first, positions - 1):
            yield (first,) + rest


def support_size(vec):
    return sum(1 for x in vec if x > 0)


def vertical_strip_subshapes(lam, k):
    """Partitions rho inside lam with lam/rho a vertical k-strip
    (k cells removed, at most one per row)."""
    if k < 0 or k > len(lam):
        return []
    out = []
    for rows in combinations(range(len(lam)), k):
        removed = set(rows)
        vec = tuple(part - (1 if i in removed else 0) for i, part in enumerate(lam))
        if all(a >= b for a, b in zip(vec, vec[1:])):
            out.append(tuple(p for p in vec if p > 0))
    return out


def is_hook(lam):
    """Hook shapes (lam_1, 1^m); the empty partition counts as a hook."""
    return all(part == 1 for part in lam[1:])


class ShapeKind(enum.Enum):
    HOOK = "hook"
    DOUBLE_HOOK_PROPER = "double_hook_proper"
    OTHER = "other"


@dataclass(frozen=True)
class ShapeClass:
    kind: ShapeKind
    lam1: int = 0
    lam2: int = 0
    m2: int = 0
    m1: int = 0

    def reconstruct(self):
        if self.kind is ShapeKind.OTHER:
            raise ValueError("no decomposition for kind OTHER")
        parts = []
        if self.lam1:
            parts.append(self.lam1)
        if self.lam2:
            parts.append(self.lam2)
        parts.extend([2] * self.m2)
        parts.extend([1] * self.m1)
        return tuple(parts)


def classify_shape(lam):
    """Hook (lam1, 1^m1), proper double hook (lam1, lam2, 2^m2, 1^m1) with
    lam2 >= 2, or Other."""
    if is_hook(lam):
        lam1 = lam[0] if lam else 0
        return ShapeClass(ShapeKind.HOOK, lam1=lam1, m1=len(lam) - 1 if lam else 0)
    # here len(lam) >= 2 and lam[1] >= 2
    lam1, lam2 = lam[0], lam[1]
    rest = lam[2:]
    m2 = sum(1 for p in rest if p == 2)
    m1 = sum(1 for p in rest if p == 1)
    if m2 + m1 == len(rest):
        return ShapeClass(ShapeKind.DOUBLE_HOOK_PROPER, lam1, lam2, m2, m1)
    return ShapeClass(ShapeKind.OTHER)
