"""Trigonometric polynomials ``c0 + sum_k (a_k cos k th + b_k sin k th)``.

Coefficients are exact rationals. Integrals over a full period are returned
as the rational factor ``q`` of ``q * pi``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .errors import NonZeroMean
from .exact import Scalar, format_rational, to_rational


def _rstrip(xs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    n = len(xs)
    while n and not xs[n - 1]:
        n -= 1
    return xs[:n]


class TrigPoly:
    __slots__ = ("constant", "cos", "sin")

    def __init__(self, constant: Scalar = 0, cos: Iterable = (), sin: Iterable = ()):
        c = [to_rational(x) for x in cos]
        s = [to_rational(x) for x in sin]
        n = max(len(c), len(s))
        c += [Fraction(0)] * (n - len(c))
        s += [Fraction(0)] * (n - len(s))
        while n and not c[n - 1] and not s[n - 1]:
            n -= 1
        self.constant: Fraction = to_rational(constant)
        self.cos: tuple[Fraction, ...] = tuple(c[:n])
        self.sin: tuple[Fraction, ...] = tuple(s[:n])

    @classmethod
    def zero(cls) -> "TrigPoly":
        return cls()

    @classmethod
    def cos_k(cls, k: int, c: Scalar = 1) -> "TrigPoly":
        if k == 0:
            return cls(c)
        return cls(0, [0] * (k - 1) + [c])

    @classmethod
    def sin_k(cls, k: int, c: Scalar = 1) -> "TrigPoly":
        if k == 0:
            return cls()
        return cls(0, (), [0] * (k - 1) + [c])

    @property
    def degree(self) -> int:
        """Highest harmonic present (0 for constants, including zero)."""
        return len(self.cos)

    @property
    def is_zero(self) -> bool:
        return not self.constant and not self.cos

    def a(self, k: int) -> Fraction:
        """Cosine coefficient of harmonic ``k`` (``k = 0`` is the constant)."""
        if k == 0:
            return self.constant
        return self.cos[k - 1] if 0 < k <= len(self.cos) else Fraction(0)

    def b(self, k: int) -> Fraction:
        return self.sin[k - 1] if 0 < k <= len(self.sin) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = TrigPoly(other)
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return (self.constant, self.cos, self.sin) == (other.constant, other.cos, other.sin)

    def __hash__(self) -> int:
        return hash((self.constant, self.cos, self.sin))

    def __repr__(self) -> str:
        return (
            f"TrigPoly({self.constant}, cos=[{', '.join(map(str, self.cos))}], "
            f"sin=[{', '.join(map(str, self.sin))}])"
        )

    def __str__(self) -> str:
        terms = [str(self.constant)] if self.constant else []
        for k in range(1, self.degree + 1):
            for coef, name in ((self.a(k), "cos"), (self.b(k), "sin")):
                if coef:
                    arg = "th" if k == 1 else f"{k}th"
                    terms.append(f"({coef})*{name}({arg})")
        return " + ".join(terms) if terms else "0"

    # -- algebra ----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "TrigPoly":
        if isinstance(other, TrigPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return TrigPoly(other)
        raise TypeError(f"unsupported operand {other!r}")

    def __add__(self, other) -> "TrigPoly":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        n = max(self.degree, o.degree)
        return TrigPoly(
            self.constant + o.constant,
            [self.a(k) + o.a(k) for k in range(1, n + 1)],
            [self.b(k) + o.b(k) for k in range(1, n + 1)],
        )

    __radd__ = __add__

    def __neg__(self) -> "TrigPoly":
        return TrigPoly(-self.constant, [-x for x in self.cos], [-x for x in self.sin])

    def __sub__(self, other) -> "TrigPoly":
        try:
            return self + (-self._coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other) -> "TrigPoly":
        return (-self) + other

    def scale(self, c: Scalar) -> "TrigPoly":
        c = to_rational(c)
        return TrigPoly(self.constant * c, [x * c for x in self.cos], [x * c for x in self.sin])

    def __mul__(self, other) -> "TrigPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, TrigPoly):
            return NotImplemented
        n = self.degree + other.degree
        ca = [Fraction(0)] * (n + 1)
        sa = [Fraction(0)] * (n + 1)
        for j in range(self.degree + 1):
            aj, bj = self.a(j), self.b(j)
            if not aj and not bj:
                continue
            for k in range(other.degree + 1):
                ak, bk = other.a(k), other.b(k)
                if not ak and not bk:
                    continue
                s, d = j + k, abs(j - k)
                sign = 1 if j >= k else -1
                # cos j cos k = (cos(j+k) + cos(j-k)) / 2
                if aj and ak:
                    h = aj * ak / 2
                    ca[s] += h
                    ca[d] += h
                # sin j sin k = (cos(j-k) - cos(j+k)) / 2
                if bj and bk:
                    h = bj * bk / 2
                    ca[d] += h
                    ca[s] -= h
                # sin j cos k = (sin(j+k) + sin(j-k)) / 2
                if bj and ak:
                    h = bj * ak / 2
                    sa[s] += h
                    sa[d] += sign * h
                # cos j sin k = (sin(j+k) - sin(j-k)) / 2
                if aj and bk:
                    h = aj * bk / 2
                    sa[s] += h
                    sa[d] -= sign * h
        return TrigPoly(ca[0], ca[1:], sa[1:])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TrigPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = TrigPoly(1)
        for _ in range(k):
            result = result * self
        return result

    # -- calculus ---------------------------------------------------------

    def derivative(self) -> "TrigPoly":
        n = self.degree
        return TrigPoly(
            0,
            [k * self.b(k) for k in range(1, n + 1)],
            [-k * self.a(k) for k in range(1, n + 1)],
        )

    def antiderivative(self) -> "TrigPoly":
        """Primitive vanishing at 0; requires zero mean."""
        if self.constant:
            raise NonZeroMean(
                f"mean {self.constant} is nonzero; the primitive has a linear term"
            )
        n = self.degree
        cos = [-self.b(k) / k for k in range(1, n + 1)]
        sin = [self.a(k) / k for k in range(1, n + 1)]
        # value at 0 is sum of cos coefficients
        return TrigPoly(-sum(cos, Fraction(0)), cos, sin)

    def period_integral(self) -> Fraction:
        """``q`` with ``integral_0^{2 pi} self = q * pi``."""
        return 2 * self.constant

    def eval_float(self, theta: float) -> float:
        acc = float(self.constant)
        for k in range(1, self.degree + 1):
            a, b = self.a(k), self.b(k)
            if a:
                acc += float(a) * math.cos(k * theta)
            if b:
                acc += float(b) * math.sin(k * theta)
        return acc

    __call__ = eval_float

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "constant": format_rational(self.constant),
            "cos": [format_rational(x) for x in _rstrip(self.cos)],
            "sin": [format_rational(x) for x in _rstrip(self.sin)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TrigPoly":
        if not isinstance(data, dict):
            raise ValueError("trigonometric polynomial must be a JSON object")
        unknown = set(data) - {"constant", "cos", "sin"}
        if unknown:
            raise ValueError(f"unknown trigonometric polynomial keys: {sorted(unknown)}")
        return cls(data.get("constant", 0), data.get("cos", ()), data.get("sin", ()))


def trig_derivative(p: TrigPoly) -> TrigPoly:
    return p.derivative()


def trig_antiderivative_from_zero(p: TrigPoly) -> TrigPoly:
    return p.antiderivative()


def trig_integral_over_period(p: TrigPoly) -> Fraction:
    return p.period_integral()


def trig_eval_float(p: TrigPoly, theta: float) -> float:
    return p.eval_float(theta)

