"""Abel systems ``x' = f(t) x^3 + g(t) x^2`` and their moment sequences.

A polynomial system lives on an interval ``[a, b]`` (default ``[-1, 1]``);
a trigonometric system lives on ``[0, 2 pi]``. Moments

    m_k = integral of f * G^k,   G the primitive of g vanishing at the start,

are computed by exact expansion. For trigonometric systems every integral
is a rational multiple of pi and is returned as a :class:`PiMultiple`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import InvalidKind
from .exact import Poly, format_rational, to_rational
from .trigpoly import TrigPoly

POLY = "poly"
TRIG = "trig"


@dataclass(frozen=True)
class PiMultiple:
    """The exact real number ``coeff * pi``."""

    coeff: Fraction

    def __bool__(self) -> bool:
        return bool(self.coeff)

    def __eq__(self, other) -> bool:
        if isinstance(other, PiMultiple):
            return self.coeff == other.coeff
        if isinstance(other, (int, Fraction)) and other == 0:
            return self.coeff == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("pi", self.coeff))

    def __float__(self) -> float:
        import math

        return float(self.coeff) * math.pi

    def __str__(self) -> str:
        return "0" if not self.coeff else f"{self.coeff}*pi"


Exact = Union[Fraction, PiMultiple]


def format_exact(x: Exact) -> str:
    """Report string: ``"-2/3"``, ``"0"``, ``"1/2*pi"``."""
    return str(x)


def parse_exact(s: str) -> Exact:
    s = s.strip()
    if s.endswith("*pi"):
        return PiMultiple(Fraction(s[:-3]))
    return Fraction(s)


@dataclass(frozen=True)
class AbelSystem:
    kind: str
    f: Union[Poly, TrigPoly]
    g: Union[Poly, TrigPoly]
    a: Fraction = Fraction(-1)
    b: Fraction = Fraction(1)

    def __post_init__(self):
        if self.kind == POLY:
            if not (isinstance(self.f, Poly) and isinstance(self.g, Poly)):
                raise TypeError("polynomial system needs Poly coefficients")
            object.__setattr__(self, "a", to_rational(self.a))
            object.__setattr__(self, "b", to_rational(self.b))
            if not self.a < self.b:
                raise ValueError(f"interval [{self.a}, {self.b}] is empty")
        elif self.kind == TRIG:
            if not (isinstance(self.f, TrigPoly) and isinstance(self.g, TrigPoly)):
                raise TypeError("trigonometric system needs TrigPoly coefficients")
            # interval is fixed; a/b are not meaningful
            object.__setattr__(self, "a", Fraction(0))
            object.__setattr__(self, "b", Fraction(0))
        else:
            raise ValueError(f"unknown system kind {self.kind!r}")

    @classmethod
    def polynomial(cls, f, g, a=-1, b=1) -> "AbelSystem":
        f = f if isinstance(f, Poly) else Poly(f)
        g = g if isinstance(g, Poly) else Poly(g)
        return cls(POLY, f, g, to_rational(a), to_rational(b))

    @classmethod
    def trigonometric(cls, f: TrigPoly, g: TrigPoly) -> "AbelSystem":
        return cls(TRIG, f, g)

    @property
    def is_poly(self) -> bool:
        return self.kind == POLY

    def interval_float(self) -> tuple[float, float]:
        if self.is_poly:
            return float(self.a), float(self.b)
        import math

        return 0.0, 2 * math.pi

    def require_poly(self, what: str) -> None:
        if not self.is_poly:
            raise InvalidKind(f"{what} is only defined for polynomial systems")

    def to_json(self) -> dict:
        doc = {"kind": self.kind, "f": self.f.to_json(), "g": self.g.to_json()}
        if self.is_poly:
            doc["a"] = format_rational(self.a)
            doc["b"] = format_rational(self.b)
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "AbelSystem":
        if not isinstance(doc, dict):
            raise ValueError("system must be a JSON object")
        kind = doc.get("kind")
        if kind == POLY:
            return cls.polynomial(
                Poly.from_json(doc["f"]), Poly.from_json(doc["g"]),
                doc.get("a", "-1/1"), doc.get("b", "1/1"),
            )
        if kind == TRIG:
            return cls.trigonometric(TrigPoly.from_json(doc["f"]), TrigPoly.from_json(doc["g"]))
        raise ValueError(f"system kind must be 'poly' or 'trig', got {kind!r}")


def primitive_G(sys: AbelSystem):
    if sys.is_poly:
        return sys.g.antiderivative(sys.a)
    return sys.g.antiderivative()


def primitive_F(sys: AbelSystem):
    if sys.is_poly:
        return sys.f.antiderivative(sys.a)
    return sys.f.antiderivative()


def _integral(sys: AbelSystem, p) -> Exact:
    if sys.is_poly:
        return p.integrate(sys.a, sys.b)
    return PiMultiple(p.period_integral())


def moment(sys: AbelSystem, k: int) -> Exact:
    """Exact ``m_k``; a :class:`PiMultiple` for trigonometric systems."""
    if k < 0:
        raise ValueError("moment index must be non-negative")
    G = primitive_G(sys)
    return _integral(sys, sys.f * G ** k)


@dataclass
class MomentReport:
    moments: list
    g_integral: Exact
    first_nonzero_index: Optional[int] = field(default=None)

    @property
    def all_zero(self) -> bool:
        return self.first_nonzero_index is None

    def to_json(self) -> dict:
        return {
            "g_integral": format_exact(self.g_integral),
            "moments": [format_exact(m) for m in self.moments],
            "first_nonzero_index": self.first_nonzero_index,
        }


def moment_report(sys: AbelSystem, K: int) -> MomentReport:
    """Moments ``m_0..m_K`` with ``G^k`` accumulated incrementally."""
    if K < 0:
        raise ValueError("K must be non-negative")
    G = primitive_G(sys)
    g_int = _integral(sys, sys.g)
    moments = []
    power = Poly.const(1) if sys.is_poly else TrigPoly(1)
    for k in range(K + 1):
        if k:
            power = power * G
        moments.append(_integral(sys, sys.f * power))
    first = next((k for k, m in enumerate(moments) if m), None)
    return MomentReport(moments, g_int, first)


@dataclass
class LinearSystemResult:
    """Moment conditions for ``g = t^(n-1)`` as a linear system with its kernel.

    ``matrix`` holds the raw moments of the monomials; ``normalized`` has row
    ``k`` multiplied by ``row_scales[k]``. Both have the same kernel.
    """

    n: int
    even_degrees: list[int]
    moment_indices: list[int]
    matrix: list[list[Fraction]]
    normalized: list[list[Fraction]]
    row_scales: list[Fraction]
    determinant: Optional[Fraction]
    kernel: list[list[Fraction]]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "even_degrees": self.even_degrees,
            "moment_indices": self.moment_indices,
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "normalized": [[str(x) for x in row] for row in self.normalized],
            "row_scales": [str(x) for x in self.row_scales],
            "det": None if self.determinant is None else str(self.determinant),
            "kernel": [[str(x) for x in v] for v in self.kernel],
        }


def _row_scale(k: int) -> Fraction:
    # (-1)^k / (2 k!) turns row k into the entries 1 / prod_{i<=k} (d + 1 + i n)
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return Fraction((-1) ** k, 2 * fact)


def moment_linear_system(
    n: int,
    even_degrees: Sequence[int] = (0, 2, 4),
    moment_indices: Sequence[int] = (0, 1, 2),
) -> LinearSystemResult:
    """Linear conditions ``m_k = 0`` on the coefficients of ``t^d`` in ``f``.

    Raw entry ``(i, j)`` is ``integral_{-1}^{1} t^{d_j} ((t^n - 1)/n)^{k_i} dt``.
    The normalized matrix for the default degrees and indices is

        [1,                 1/3,                   1/5                 ]
        [1/(1+n),           1/(3(3+n)),            1/(5(5+n))          ]
        [1/((1+2n)(1+n)),   1/(3(3+2n)(3+n)),      1/(5(5+2n)(5+n))    ]

    with determinant ``-16 / (15 (n+1)(n+3)(n+5)(1+2n)(3+2n)(5+2n))``.
    ``determinant`` is that of the normalized matrix (``None`` if not square).
    """
    if n <= 0 or n % 2:
        raise ValueError("n must be a positive even integer")
    G = Poly.monomial(n, Fraction(1, n)) - Fraction(1, n)
    scales = [_row_scale(k) for k in moment_indices]
    raw = []
    for k in moment_indices:
        Gk = G ** k
        raw.append([(Poly.monomial(d) * Gk).integrate(-1, 1) for d in even_degrees])
    normalized = [[s * x for x in row] for s, row in zip(scales, raw)]
    det = determinant(normalized) if len(raw) == len(even_degrees) else None
    return LinearSystemResult(
        n, list(even_degrees), list(moment_indices), raw, normalized, scales, det,
        kernel_basis(raw),
    )


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(map(Fraction, r)) for r in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                fac = m[i][c]
                m[i] = [x - fac * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def kernel_basis(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact basis of the right null space, one vector per free column."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    red, pivots = _rref(matrix)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def determinant(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    m = [list(map(Fraction, r)) for r in matrix]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    det = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                fac = m[i][c] / m[c][c]
                m[i] = [x - fac * y for x, y in zip(m[i], m[c])]
    return det


def det_closed_form(n: int) -> Fraction:
    return Fraction(-16, 15 * (n + 1) * (n + 3) * (n + 5) * (1 + 2 * n) * (3 + 2 * n) * (5 + 2 * n))


def ff_identity(sys: AbelSystem) -> tuple[Fraction, Fraction]:
    """Both sides of ``int f F = (F(b)^2 - F(a)^2) / 2``."""
    sys.require_poly("ff_identity")
    F = primitive_F(sys)
    lhs = (sys.f * F).integrate(sys.a, sys.b)
    rhs = (F(sys.b) ** 2 - F(sys.a) ** 2) / 2
    return lhs, rhs
