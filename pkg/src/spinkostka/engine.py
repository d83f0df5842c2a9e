"""Iterative computation of spin Kostka polynomials.

The engine implements the vertex-operator recurrence: peeling the largest
part of mu produces, for each part xi_i >= mu_1, a sum over weak
compositions tau of xi_i - mu_1 placed against the remaining parts of mu.
Each term contributes t^(k-l(tau)) (1+t)^l(tau) times the straightening of
the integer vector mu^(1) - tau, recursing on strictly smaller data.

Closed forms (one-row, two-part mu, matching leading parts) are used as
fast paths; ``debug_check=True`` recomputes them via the recurrence and
asserts agreement.
"""

from __future__ import annotations

import json

from .partitions import (
    dominates,
    is_partition,
    is_strict_partition,
    n_stat,
    support_size,
    weak_compositions,
)
from .polynomial import ONE, ZERO, LaurentPoly, T, t_binomial
from .straighten import Straightener

_ONE_PLUS_T = LaurentPoly({0: 1, 1: 1})


def htilde_expand(k, mu):
    """Terms (coefficient, mu - tau) of the degree-k spin-h component pushed
    through H_mu on the vacuum: tau runs over weak compositions of k placed
    in the positions of mu."""
    if k < 0:
        return []
    out = []
    for tau in weak_compositions(k, len(mu)):
        l = support_size(tau)
        coeff = _ONE_PLUS_T ** l
        if k - l:
            coeff = coeff.shift(k - l)
        out.append((coeff, tuple(m - t for m, t in zip(mu, tau))))
    return out


def spin_kostka_one_row(mu):
    """Closed form for xi = (n): t^n(mu) * prod_i (1 + t^(1-i))."""
    out = LaurentPoly({n_stat(mu): 1})
    for i in range(1, len(mu) + 1):
        out = out * (ONE + LaurentPoly.term(1, 1 - i))
    return out


def spin_kostka_two_part(xi, mu):
    """Closed form for mu with at most two parts."""
    if len(mu) > 2:
        raise ValueError("two-part closed form needs l(mu) <= 2")
    xi, mu = tuple(xi), tuple(mu)
    if sum(xi) != sum(mu):
        return ZERO
    if xi == mu:
        return LaurentPoly.const(2 ** len(xi))
    if not dominates(xi, mu):
        return ZERO
    scale = 2 if len(xi) == 1 else 4
    d = xi[0] - mu[0]
    return LaurentPoly({d: scale, d - 1: scale})


def kostka_hook(n, k, mu):
    """Kostka-Foulkes polynomial K_{(n-k,1^k),mu}(t) by the hook closed form."""
    if sum(mu) != n or not 0 <= k <= n - 1:
        raise ValueError("need |mu| = n and 0 <= k <= n-1")
    l = len(mu)
    if k > l - 1:
        return ZERO
    exp = n_stat(mu) + k * (k + 1 - 2 * l) // 2
    return t_binomial(l - 1, k).shift(exp)


class SpinKostkaEngine:
    """Memoized recurrence engine.  Instances are cheap; the memo table is
    per-instance, so concurrent use either shares one instance read-only
    after warmup or gives each worker its own."""

    def __init__(self, use_fast_paths=True, debug_check=False):
        self.use_fast_paths = use_fast_paths
        self.debug_check = debug_check
        self._memo = {}
        self._straightener = Straightener()

    def spin_kostka(self, xi, mu):
        xi, mu = tuple(xi), tuple(mu)
        if not is_strict_partition(xi):
            raise ValueError("xi must be a strict partition, got %r" % (xi,))
        if not is_partition(mu):
            raise ValueError("mu must be a partition, got %r" % (mu,))
        return self._compute(xi, mu)

    def _compute(self, xi, mu):
        if sum(xi) != sum(mu):
            return ZERO
        if not xi:
            return ONE
        key = (xi, mu)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        result = None
        if self.use_fast_paths:
            result = self._fast_path(xi, mu)
            if result is not None and self.debug_check:
                recur = self._recurrence(xi, mu)
                if recur != result:
                    raise AssertionError(
                        "fast path disagrees with recurrence at xi=%r mu=%r: %s vs %s"
                        % (xi, mu, result, recur)
                    )
        if result is None:
            result = self._recurrence(xi, mu)
        self._memo[key] = result
        return result

    def _fast_path(self, xi, mu):
        if xi and mu and xi[0] == mu[0]:
            return 2 * self._compute(xi[1:], mu[1:])
        if len(xi) == 1:
            return spin_kostka_one_row(mu)
        if len(mu) <= 2:
            return spin_kostka_two_part(xi, mu)
        return None

    def _recurrence(self, xi, mu):
        mu1, rest = mu[0], mu[1:]
        total = ZERO
        for i, part in enumerate(xi):
            if part < mu1:
                break
            sign = -1 if i % 2 else 1
            xi_hat = xi[:i] + xi[i + 1:]
            for coeff, vec in htilde_expand(part - mu1, rest):
                for lam, b in self._straightener.straighten(vec).items():
                    sub = self._compute(xi_hat, lam)
                    if not sub.is_zero():
                        term = coeff * b * sub
                        total = total + (term if sign == 1 else -term)
        return 2 * total

    # -- memo persistence ------------------------------------------------

    def save_cache(self, path):
        data = {
            "%s|%s" % (",".join(map(str, xi)), ",".join(map(str, mu))): poly.to_json()
            for (xi, mu), poly in self._memo.items()
        }
        with open(path, "w") as fh:
            json.dump(data, fh)

    def load_cache(self, path):
        with open(path) as fh:
            data = json.load(fh)
        for key, poly in data.items():
            xi_s, mu_s = key.split("|")
            xi = tuple(int(x) for x in xi_s.split(",") if x)
            mu = tuple(int(x) for x in mu_s.split(",") if x)
            self._memo[(xi, mu)] = LaurentPoly.from_json(poly)


_default_engine = SpinKostkaEngine()


def spin_kostka(xi, mu):
    """Module-level convenience entry using a shared engine."""
    return _default_engine.spin_kostka(xi, mu)
