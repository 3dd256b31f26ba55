"""Reduction of ``x' = -y + P_n, y' = x + Q_n`` to a trigonometric Abel equation.

Coefficient lists are ordered by descending power of ``x``: entry ``j`` is
the coefficient of ``x^(n-j) y^j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import format_rational, to_rational
from .system import AbelSystem
from .trigpoly import TrigPoly

COS = TrigPoly.cos_k(1)
SIN = TrigPoly.sin_k(1)


@dataclass(frozen=True)
class PlanarSystem:
    n: int
    P: tuple[Fraction, ...]
    Q: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("degree n must be at least 2")
        object.__setattr__(self, "P", tuple(to_rational(c) for c in self.P))
        object.__setattr__(self, "Q", tuple(to_rational(c) for c in self.Q))
        if len(self.P) != self.n + 1 or len(self.Q) != self.n + 1:
            raise ValueError(f"P and Q need {self.n + 1} coefficients each")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "P": [format_rational(c) for c in self.P],
            "Q": [format_rational(c) for c in self.Q],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "PlanarSystem":
        if not isinstance(doc, dict) or not {"n", "P", "Q"} <= set(doc):
            raise ValueError("planar system needs keys n, P, Q")
        n = doc["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError("n must be an integer")
        return cls(n, tuple(doc["P"]), tuple(doc["Q"]))


def _powers(base: TrigPoly, m: int) -> list[TrigPoly]:
    out = [TrigPoly(1)]
    for _ in range(m):
        out.append(out[-1] * base)
    return out


def trig_expand_homogeneous(coeffs, n: int) -> TrigPoly:
    """``sum_j coeffs[j] cos^(n-j) sin^j`` in Fourier form."""
    if len(coeffs) != n + 1:
        raise ValueError(f"expected {n + 1} coefficients, got {len(coeffs)}")
    cp, sp = _powers(COS, n), _powers(SIN, n)
    out = TrigPoly()
    for j, c in enumerate(coeffs):
        c = to_rational(c)
        if c:
            out = out + (cp[n - j] * sp[j]).scale(c)
    return out


def radial_angular(sys: PlanarSystem) -> tuple[TrigPoly, TrigPoly]:
    """``A = cos P + sin Q`` and ``B = cos Q - sin P`` on the unit circle."""
    P = trig_expand_homogeneous(sys.P, sys.n)
    Q = trig_expand_homogeneous(sys.Q, sys.n)
    return COS * P + SIN * Q, COS * Q - SIN * P


def cherkas_reduce(sys: PlanarSystem) -> AbelSystem:
    """``f = -(n-1) A B``, ``g = (n-1) A - B'`` on ``[0, 2 pi]``."""
    A, B = radial_angular(sys)
    m = sys.n - 1
    f = (A * B).scale(-m)
    g = A.scale(m) - B.derivative()
    return AbelSystem.trigonometric(f, g)
