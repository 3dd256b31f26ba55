"""Polynomial composition condition: ``F = Ft(W)``, ``G = Gt(W)``, ``W(a) = W(b)``.

Right factors are put in normal form (monic, zero constant term). Any
affine change ``W -> lam W + mu`` is absorbed into ``Ft`` and ``Gt`` and
leaves ``W(a) = W(b)`` unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import DegreeMismatch, NoFactor
from .exact import Poly
from .system import AbelSystem, primitive_F, primitive_G


@dataclass(frozen=True)
class PCCWitness:
    W: Poly
    Ftilde: Poly
    Gtilde: Poly

    @property
    def degenerate(self) -> bool:
        """True when ``Ft`` or ``Gt`` is constant (``f = 0`` or ``g = 0``)."""
        return self.Ftilde.degree <= 0 or self.Gtilde.degree <= 0

    def to_json(self, sys: Optional[AbelSystem] = None) -> dict:
        doc = {
            "W": self.W.to_json(),
            "Ftilde": self.Ftilde.to_json(),
            "Gtilde": self.Gtilde.to_json(),
            "degenerate": self.degenerate,
        }
        if sys is not None:
            doc["W_endpoint"] = str(self.W(sys.a))
        return doc


def w_adic_expansion(P: Poly, W: Poly) -> Optional[Poly]:
    """``Q`` with ``P = Q(W)``, or ``None`` if some W-adic digit is nonconstant."""
    if W.degree < 1:
        raise ValueError("W must be nonconstant")
    digits = []
    rest = P
    while not rest.is_zero:
        rest, digit = divmod(rest, W)
        if digit.degree > 0:
            return None
        digits.append(digit.coeff(0))
    return Poly(digits)


def right_factor(P: Poly, d: int) -> Poly:
    """Monic ``W`` with ``W(0) = 0``, ``deg W = d`` and ``P = Q(W)`` for some ``Q``.

    The top ``d`` coefficients of ``P`` fix ``W``: with ``e = deg P / d``, the
    coefficient of ``t^(deg P - k)`` in ``W^e`` depends on ``w_{d-k}`` only
    through ``e * w_{d-k}`` plus terms in higher coefficients. The candidate
    is then confirmed by W-adic expansion of ``P``.
    """
    if d < 2:
        raise ValueError("factor degree must be at least 2")
    if P.degree < 1:
        raise ValueError("P must be nonconstant")
    n = P.degree
    if n % d:
        raise DegreeMismatch(f"{d} does not divide deg P = {n}")
    e = n // d
    target = P.monic()
    w = [Fraction(0)] * d + [Fraction(1)]
    for k in range(1, d):
        current = Poly(w) ** e
        w[d - k] += (target.coeff(n - k) - current.coeff(n - k)) / e
    W = Poly(w)
    if w_adic_expansion(P, W) is None:
        raise NoFactor(f"no right composition factor of degree {d}")
    return W


def _divisors_desc(m: int) -> list[int]:
    return [d for d in range(m, 1, -1) if m % d == 0]


def _witness_from(F: Poly, G: Poly, W: Poly, a: Fraction, b: Fraction) -> Optional[PCCWitness]:
    if W(a) != W(b):
        return None
    Ft = w_adic_expansion(F, W)
    Gt = w_adic_expansion(G, W)
    if Ft is None or Gt is None:
        return None
    return PCCWitness(W, Ft, Gt)


def check_pcc(sys: AbelSystem) -> Optional[PCCWitness]:
    """Search for a composition witness, largest ``deg W`` first."""
    sys.require_poly("the composition condition")
    F, G = primitive_F(sys), primitive_G(sys)
    a, b = sys.a, sys.b
    if F.is_zero and G.is_zero:
        # every W works; take the quadratic symmetric about the midpoint
        return PCCWitness(Poly([0, -(a + b), 1]), Poly.zero(), Poly.zero())
    if F.is_zero or G.is_zero:
        P = G if F.is_zero else F
        m = P.degree
    else:
        P = None
        m = gcd(F.degree, G.degree)
    for d in _divisors_desc(m):
        sources = [P] if P is not None else [F, G]
        for src in sources:
            try:
                W = right_factor(src, d)
            except NoFactor:
                continue
            wit = _witness_from(F, G, W, a, b)
            if wit is not None:
                return wit
    return None


def verify_witness(sys: AbelSystem, w: PCCWitness) -> bool:
    sys.require_poly("witness verification")
    F, G = primitive_F(sys), primitive_G(sys)
    return (
        w.W.degree >= 1
        and w.Ftilde.compose(w.W) == F
        and w.Gtilde.compose(w.W) == G
        and w.W(sys.a) == w.W(sys.b)
    )
