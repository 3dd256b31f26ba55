"""Sign-change analysis for systems with ``g = t^(n-1)``, ``n`` even.

Writing ``f(t) = p(t^2) + t q(t^2)``, the even part controls the sign of

    psi(u) = (1 + n u)^(-(n-1)/n) * [f(T) + f(-T)],   T = (1 + n u)^(1/n),

on ``[-1/n, 0]``, and ``f(T) + f(-T) = 2 p(T^2)``. Sign changes of ``p`` on
``(0, 1)`` are counted exactly with Sturm sequences over the rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DomainError, HypothesisFailed, InternalCheckFailed, ZeroPolynomial
from .exact import Poly, poly_gcd, to_rational
from .system import AbelSystem, moment_report


@dataclass(frozen=True)
class EvenOddSplit:
    p: Poly
    q: Poly

    def recompose(self) -> Poly:
        t = Poly.t()
        t2 = Poly.monomial(2)
        return self.p.compose(t2) + t * self.q.compose(t2)


def even_odd_split(f: Poly) -> EvenOddSplit:
    even = f.coeffs[0::2]
    odd = f.coeffs[1::2]
    return EvenOddSplit(Poly(even), Poly(odd))


def psi_eval(f: Poly, n: int, u) -> float:
    """Closed-form ``psi(u)``; at ``u = -1/n`` the limit sign datum.

    The endpoint returns ``0.0`` when ``p(0) = 0`` and ``+-inf`` otherwise.
    """
    if n <= 0 or n % 2:
        raise DomainError("n must be a positive even integer")
    u = to_rational(u) if not isinstance(u, float) else u
    lo = Fraction(-1, n)
    if u < lo or u > 0:
        raise DomainError(f"u = {u} outside [-1/{n}, 0]")
    if u == lo:
        p0 = even_odd_split(f).p.coeff(0)
        return 0.0 if not p0 else math.copysign(math.inf, p0)
    base = 1.0 + n * float(u)
    T = base ** (1.0 / n)
    return (f.eval_float(T) + f.eval_float(-T)) / base ** ((n - 1) / n)


# -- exact real-root machinery -----------------------------------------------


def squarefree_decomposition(p: Poly) -> list[Poly]:
    """Yun's algorithm: monic ``a_1, a_2, ...`` with ``p ~ prod a_i^i``."""
    if p.degree < 1:
        return []
    dp = p.derivative()
    a0 = poly_gcd(p, dp)
    b = p // a0
    c = dp // a0
    d = c - b.derivative()
    factors = []
    while b.degree >= 1:
        a = poly_gcd(b, d)
        factors.append(a)
        b = b // a
        c = d // a
        d = c - b.derivative()
    return factors


def odd_multiplicity_part(p: Poly) -> Poly:
    """Product of the square-free factors of odd multiplicity: the sign changers."""
    out = Poly.const(1)
    for i, a in enumerate(squarefree_decomposition(p), start=1):
        if i % 2:
            out = out * a
    return out


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero:
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def _variations(seq: list[Poly], x: Fraction) -> int:
    signs = [v for v in (s(x) for s in seq) if v]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def _isolate(seq: list[Poly], lo: Fraction, hi: Fraction, count: int, out: list):
    # precondition: neither lo nor hi is a root; count = roots in (lo, hi)
    if count == 0:
        return
    if count == 1:
        out.append((lo, hi))
        return
    mid = (lo + hi) / 2
    if not seq[0](mid):
        out.append((mid, mid))
        # nudge off the root without crossing another one
        eps = (hi - lo) / 4
        while True:
            left, right = mid - eps, mid + eps
            if seq[0](left) and seq[0](right):
                cl = _variations(seq, lo) - _variations(seq, left)
                cr = _variations(seq, right) - _variations(seq, hi)
                if cl + cr == count - 1:
                    break
            eps /= 2
        _isolate(seq, lo, left, cl, out)
        _isolate(seq, right, hi, cr, out)
        return
    vm = _variations(seq, mid)
    _isolate(seq, lo, mid, _variations(seq, lo) - vm, out)
    _isolate(seq, mid, hi, vm - _variations(seq, hi), out)


def real_roots_isolated(p: Poly, a: Fraction, b: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the distinct roots of ``p`` in the open ``(a, b)``.

    Degenerate intervals ``(r, r)`` mark exact rational roots.
    """
    if p.degree < 1:
        return []
    sf = p // poly_gcd(p, p.derivative())
    # drop endpoint roots; the count is over the open interval
    for x in (a, b):
        if not sf(x):
            sf = sf // Poly([-x, 1])
    if sf.degree < 1:
        return []
    seq = sturm_sequence(sf)
    out: list = []
    _isolate(seq, a, b, _variations(seq, a) - _variations(seq, b), out)
    return sorted(out)


@dataclass
class SignChangeReport:
    count: int
    locations: list[tuple[Fraction, Fraction]]
    psi_description: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "locations": [[str(lo), str(hi)] for lo, hi in self.locations],
            "psi": self.psi_description,
        }


def sturm_sign_changes(p: Poly, a=0, b=1) -> SignChangeReport:
    """Exact number of sign changes of ``p`` on the open interval ``(a, b)``."""
    a, b = to_rational(a), to_rational(b)
    if not a < b:
        raise ValueError("need a < b")
    if p.is_zero:
        raise ZeroPolynomial("sign changes of the zero polynomial are undefined")
    locs = real_roots_isolated(odd_multiplicity_part(p), a, b)
    return SignChangeReport(len(locs), locs)


# -- moment propagation --------------------------------------------------------

SIGN_CHANGE_THRESHOLD = 2


def monomial_g(n: int, scale=1) -> Poly:
    return Poly.monomial(n - 1, scale)


def moment_propagation_check(f: Poly, n: int, Kmax: int = 20, g_scale=1) -> dict:
    """Check the hypotheses of the moment-propagation theorem, then its conclusion.

    ``g = g_scale * t^(n-1)`` on ``[-1, 1]``. Raises :class:`HypothesisFailed`
    if ``p`` changes sign more than twice on ``(0, 1)`` or if one of
    ``m_0, m_1, m_2`` is nonzero. When both hold, every ``m_k`` with
    ``k <= Kmax`` must vanish; a nonzero one raises
    :class:`InternalCheckFailed`.
    """
    if n <= 0 or n % 2:
        raise DomainError("n must be a positive even integer")
    split = even_odd_split(f)
    if split.p.is_zero:
        signs = SignChangeReport(0, [])
    else:
        signs = sturm_sign_changes(split.p, 0, 1)
    signs.psi_description = {"n": n, "f": f.to_json()}
    if signs.count > SIGN_CHANGE_THRESHOLD:
        raise HypothesisFailed(
            "sign changes", {"count": signs.count, "threshold": SIGN_CHANGE_THRESHOLD}
        )
    sys = AbelSystem.polynomial(f, monomial_g(n, g_scale))
    report = moment_report(sys, max(Kmax, 2))
    for k in range(3):
        if report.moments[k]:
            raise HypothesisFailed(f"m_{k} = 0", {"m_" + str(k): str(report.moments[k])})
    violation: Optional[int] = report.first_nonzero_index
    if violation is not None and violation <= Kmax:
        raise InternalCheckFailed(
            f"m_{violation} = {report.moments[violation]} although the hypotheses hold"
        )
    return {
        "n": n,
        "split": {"p": split.p.to_json(), "q": split.q.to_json()},
        "sign_changes": signs.to_json(),
        "moments": report.to_json(),
        "Kmax": Kmax,
        "all_moments_zero": True,
    }
