"""Exact power series of the solution in its initial value.

For a polynomial system with ``x(a, rho) = rho`` we write

    x(t, rho) = rho + sum_{k >= 2} r_k(t) rho^k

and, with ``c_1 = 1`` and ``c_k = r_k``, substituting into
``x' = f x^3 + g x^2`` gives

    r_m(t) = integral_a^t [ f * S3_m + g * S2_m ] ds,
    S2_m = sum_{i+j=m} c_i c_j,   S3_m = sum_{i+j+l=m} c_i c_j c_l.

``S2`` is memoized and ``S3_m = sum_i c_i S2_{m-i}``, so each order costs
O(m) polynomial products.

The companion series ``H(b, rho) = integral_a^b (f x + g)`` has coefficients
``[G(b), F(b), int f r_2, ..., int f r_N]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import Poly
from .system import AbelSystem, primitive_F, primitive_G

DEFAULT_ORDER = 12


@dataclass
class ReturnMapSeries:
    order: int
    r: dict[int, Poly]
    endpoint_values: list[Fraction]
    h_coeffs: list[Fraction]

    def r_k(self, k: int) -> Poly:
        if k == 1:
            return Poly.const(1)
        return self.r[k]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "r": {str(k): self.r[k].to_json() for k in sorted(self.r)},
            "endpoint_values": [str(v) for v in self.endpoint_values],
            "h_coeffs": [str(v) for v in self.h_coeffs],
            "center_order": center_order(self),
        }


def compute_return_series(sys: AbelSystem, N: int = DEFAULT_ORDER) -> ReturnMapSeries:
    sys.require_poly("the return-map series")
    if N < 2:
        raise ValueError("series order must be at least 2")
    f, g, a, b = sys.f, sys.g, sys.a, sys.b
    c: dict[int, Poly] = {1: Poly.const(1)}
    s2: dict[int, Poly] = {}

    def S2(m: int) -> Poly:
        if m not in s2:
            acc = Poly.zero()
            for i in range(1, m // 2 + 1):
                j = m - i
                prod = c[i] * c[j]
                acc = acc + (prod if i == j else prod * 2)
            s2[m] = acc
        return s2[m]

    for m in range(2, N + 1):
        integrand = g * S2(m)
        if m >= 3:
            s3 = Poly.zero()
            for i in range(1, m - 1):
                s3 = s3 + c[i] * S2(m - i)
            integrand = integrand + f * s3
        c[m] = integrand.antiderivative(a)

    r = {k: c[k] for k in range(2, N + 1)}
    F, G = primitive_F(sys), primitive_G(sys)
    h = [G(b), F(b)] + [(f * r[k]).integrate(a, b) for k in range(2, N + 1)]
    return ReturnMapSeries(N, r, [r[k](b) for k in range(2, N + 1)], h)


def center_order(series: ReturnMapSeries) -> Optional[int]:
    """Least ``k`` with ``r_k(b) != 0``; ``None`` means a center up to order N."""
    for k, v in enumerate(series.endpoint_values, start=2):
        if v:
            return k
    return None


def integral_conditions(sys: AbelSystem, series: ReturnMapSeries) -> list[Fraction]:
    """``[int g, int f r_2, ..., int f r_N]``, each integral recomputed."""
    sys.require_poly("the integral center conditions")
    out = [sys.g.integrate(sys.a, sys.b)]
    for k in range(2, series.order + 1):
        out.append((sys.f * series.r[k]).integrate(sys.a, sys.b))
    return out


def derivative_identities_check(sys: AbelSystem, series: ReturnMapSeries) -> tuple[bool, bool, bool]:
    """The first three rho-derivatives of ``H(b, rho)`` at 0 in closed form.

    Compares the series coefficients against expressions built only from the
    primitives ``F`` and ``G``:

        h_1 = int f,   h_2 = int f G,   h_3 = int f G^2 + int f F.
    """
    sys.require_poly("the derivative identities")
    if series.order < 3:
        raise ValueError("need a series of order at least 3")
    f, a, b = sys.f, sys.a, sys.b
    F, G = primitive_F(sys), primitive_G(sys)
    h = series.h_coeffs
    j1 = h[1] == f.integrate(a, b)
    j2 = h[2] == (f * G).integrate(a, b)
    j3 = h[3] == (f * G * G).integrate(a, b) + (f * F).integrate(a, b)
    return j1, j2, j3


def truncated_residual(sys: AbelSystem, series: ReturnMapSeries) -> dict[int, Poly]:
    """Coefficients of ``rho^k`` (``k <= N``) in ``x_N' - f x_N^3 - g x_N^2``.

    All of them vanish when the series is correct. The products are expanded
    directly here, independently of the recurrence's memoized sums.
    """
    sys.require_poly("the residual check")
    N = series.order
    x = {1: Poly.const(1)}
    x.update(series.r)

    def truncated_mul(p: dict[int, Poly], q: dict[int, Poly]) -> dict[int, Poly]:
        out: dict[int, Poly] = {}
        for i, pi in p.items():
            for j, qj in q.items():
                if i + j <= N:
                    out[i + j] = out.get(i + j, Poly.zero()) + pi * qj
        return out

    x2 = truncated_mul(x, x)
    x3 = truncated_mul(x2, x)
    res = {}
    for k in range(1, N + 1):
        dx = x[k].derivative() if k in x else Poly.zero()
        res[k] = dx - sys.f * x3.get(k, Poly.zero()) - sys.g * x2.get(k, Poly.zero())
    return res


def endpoint_from_h(h: list[Fraction], N: int) -> list[Fraction]:
    """``r_k(b)`` for ``k = 2..N`` from ``x(b) = rho / (1 - rho H(b, rho))``.

    Uses ``h_0..h_{N-2}`` only, since ``r_k(b)`` involves ``h_j`` with
    ``j <= k - 2``.
    """
    # y = 1/(1 - rho H): y_0 = 1, y_m = sum_{j<m} h_j y_{m-1-j}
    y = [Fraction(1)]
    for m in range(1, N):
        y.append(sum((h[j] * y[m - 1 - j] for j in range(m) if j < len(h)), Fraction(0)))
    return y[1:N]
