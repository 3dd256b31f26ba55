"""Exact rational scalars and dense univariate polynomials.

Scalars are :class:`fractions.Fraction`; a :class:`Poly` stores its
coefficients in ascending degree order with trailing zeros stripped, so the
zero polynomial has no coefficients at all.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

# Degree of the zero polynomial. Never used arithmetically.
NEG_INF = float("-inf")


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(x: Fraction) -> str:
    """Canonical ``num/den`` string, denominator always written."""
    return f"{x.numerator}/{x.denominator}"


def _strip(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Immutable polynomial in one variable with rational coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs: tuple[Fraction, ...] = _strip([to_rational(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "Poly":
        # coeffs already normalized Fractions
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw(())

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def t(cls) -> "Poly":
        return cls.monomial(1)

    # -- basic properties -------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            elif mono:
                terms.append(f"({c})*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms).replace("+ -", "- ")

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.const(other)
        raise TypeError(f"unsupported operand {other!r}")

    def __add__(self, other) -> "Poly":
        try:
            b = self._coerce(other).coeffs
        except TypeError:
            return NotImplemented
        a = self.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(_strip(out))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        try:
            return self + (-self._coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        if not c:
            return Poly.zero()
        return Poly._raw(tuple(x * c for x in self.coeffs))

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not isinstance(other, Poly):
            other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        if len(rem) - 1 < db:
            return Poly.zero(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c / lead
            quot[k - db] = q
            for i, b in enumerate(other.coeffs):
                rem[k - db + i] -= q * b
        return Poly._raw(_strip(quot)), Poly._raw(_strip(rem[:db]))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    # -- evaluation and calculus -----------------------------------------

    def __call__(self, x):
        """Horner evaluation. Exact for rational ``x``; float in, float out."""
        if isinstance(x, Poly):
            return self.compose(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if isinstance(x, float):
            return float(acc)
        return Fraction(acc)

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        """``self(inner(t))`` by Horner's scheme in ``inner``."""
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self) -> "Poly":
        return Poly._raw(_strip([k * c for k, c in enumerate(self.coeffs)][1:]))

    def antiderivative(self, base: Scalar = 0) -> "Poly":
        """The primitive ``P`` with ``P' = self`` and ``P(base) = 0``."""
        if self.is_zero:
            return self
        raw = Poly._raw((Fraction(0),) + tuple(c / (k + 1) for k, c in enumerate(self.coeffs)))
        return raw - raw(to_rational(base))

    def integrate(self, a: Scalar, b: Scalar) -> Fraction:
        """Exact value of the definite integral over ``[a, b]``."""
        raw = Poly._raw((Fraction(0),) + tuple(c / (k + 1) for k, c in enumerate(self.coeffs)))
        return raw(to_rational(b)) - raw(to_rational(a))

    # -- serialization ----------------------------------------------------

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "Poly":
        if not isinstance(data, (list, tuple)):
            raise ValueError("polynomial must be a JSON array of coefficients")
        return cls(data)


def _mul(a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        return Poly.zero()
    # Integer convolution over a common denominator is much cheaper than
    # Fraction arithmetic on every partial product.
    da = reduce(lcm, (c.denominator for c in a.coeffs), 1)
    db = reduce(lcm, (c.denominator for c in b.coeffs), 1)
    ia = [c.numerator * (da // c.denominator) for c in a.coeffs]
    ib = [c.numerator * (db // c.denominator) for c in b.coeffs]
    out = [0] * (len(ia) + len(ib) - 1)
    for i, x in enumerate(ia):
        if x:
            for j, y in enumerate(ib):
                out[i + j] += x * y
    den = da * db
    return Poly._raw(_strip([Fraction(c, den) for c in out]))


# Functional aliases mirroring the ring/calculus operations.

def poly_compose(outer: Poly, inner: Poly) -> Poly:
    return outer.compose(inner)


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def poly_antiderivative_from(p: Poly, a: Scalar) -> Poly:
    return p.antiderivative(a)


def poly_definite_integral(p: Poly, a: Scalar, b: Scalar) -> Fraction:
    return p.integrate(a, b)


def poly_eval(p: Poly, x: Scalar) -> Fraction:
    return p(to_rational(x))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()
