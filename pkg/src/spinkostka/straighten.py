"""Straightening of Hall-Littlewood operator words applied to the vacuum.

``straighten_to_vacuum`` rewrites H_{nu_1}...H_{nu_r}.1 (nu an arbitrary
integer vector) into the basis {H_lam.1 : lam a partition}.  The rules:

* a trailing zero entry drops (H_0.1 = 1);
* a trailing negative entry annihilates the whole term (H_{-m}.1 = 0);
* at an ascent nu_i < nu_{i+1} with gap g = nu_{i+1} - nu_i, the pair is
  replaced by sum over a = 0..g//2 of a quadratic-relation coefficient
  times the pair (nu_{i+1} - a, nu_i + a).

The statistic sum(i * nu_i) strictly decreases at every rewrite, so the
procedure terminates; leftmost- and rightmost-ascent strategies agree
(tested, not assumed).
"""

from __future__ import annotations

from .polynomial import ONE, LaurentPoly, T


def step_coeff(gap, a):
    """Coefficient of the move sending (x, x+gap) to (x+gap-a, x+a)."""
    if gap <= 0:
        raise ValueError("gap must be positive")
    if not 0 <= a <= gap // 2:
        raise ValueError("move amount a=%d out of range for gap=%d" % (a, gap))
    if a == 0:
        return T
    if a < gap // 2:
        return LaurentPoly({a + 1: 1, a - 1: -1})
    epsilon = gap % 2
    return LaurentPoly({a + epsilon: 1, a - 1: -1})


def _normalize(nu):
    """Strip trailing zeros; None signals an annihilated term."""
    i = len(nu)
    while i and nu[i - 1] == 0:
        i -= 1
    if i and nu[i - 1] < 0:
        return None
    return nu[:i]


def _find_ascent(nu, strategy):
    indices = range(len(nu) - 1)
    if strategy == "rightmost":
        indices = reversed(indices)
    for i in indices:
        if nu[i] < nu[i + 1]:
            return i
    return None


class Straightener:
    """Memoizing straightener.  ``strategy`` picks which ascent to rewrite;
    ``rule`` 'table' uses the closed-form move coefficients, 'primitive'
    uses only the two-term quadratic relation (adjacent swap special-cased).
    Both must produce identical results."""

    def __init__(self, strategy="leftmost", rule="table"):
        if strategy not in ("leftmost", "rightmost"):
            raise ValueError("unknown strategy %r" % strategy)
        if rule not in ("table", "primitive"):
            raise ValueError("unknown rule %r" % rule)
        self.strategy = strategy
        self.rule = rule
        self._memo = {}

    def straighten(self, nu):
        nu = tuple(nu)
        hit = self._memo.get(nu)
        if hit is not None:
            return hit
        result = self._compute(nu)
        self._memo[nu] = result
        return result

    def _compute(self, nu):
        stripped = _normalize(nu)
        if stripped is None:
            return {}
        if stripped != nu:
            return self.straighten(stripped)
        i = _find_ascent(nu, self.strategy)
        if i is None:
            # weakly decreasing; entries are positive after normalization
            return {nu: ONE}
        out = {}
        for coeff, child in self._rewrites(nu, i):
            for lam, c in self.straighten(child).items():
                acc = out.get(lam)
                acc = coeff * c if acc is None else acc + coeff * c
                if acc.is_zero():
                    out.pop(lam, None)
                else:
                    out[lam] = acc
        return out

    def _rewrites(self, nu, i):
        lo, hi = nu[i], nu[i + 1]
        if self.rule == "table":
            gap = hi - lo
            for a in range(gap // 2 + 1):
                yield step_coeff(gap, a), nu[:i] + (hi - a, lo + a) + nu[i + 2:]
        else:
            head, tail = nu[:i], nu[i + 2:]
            if hi == lo + 1:
                yield T, head + (hi, lo) + tail
            else:
                yield T, head + (hi, lo) + tail
                yield T, head + (lo + 1, hi - 1) + tail
                yield -ONE, head + (hi - 1, lo + 1) + tail


def straighten_to_vacuum(nu, strategy="leftmost", rule="table"):
    """One-shot convenience wrapper around :class:`Straightener`."""
    return Straightener(strategy=strategy, rule=rule).straighten(nu)
