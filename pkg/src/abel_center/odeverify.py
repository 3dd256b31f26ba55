"""Floating-point cross-check of symbolic center results.

Integrates ``x' = f x^3 + g x^2`` from ``x(a) = rho`` with an adaptive
embedded Runge-Kutta pair (scipy's DOP853) and studies the displacement
``d(rho) = x(b) - rho``. Exact coefficients are converted to floats once
per system; the symbolic modules never see floats.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.integrate import solve_ivp

from .errors import BlowUp, Mismatch, StepFailure
from .returnmap import ReturnMapSeries, center_order
from .system import AbelSystem

DEFAULT_GRID = (-0.05, -0.02, -0.01, -0.005, -0.002, -0.001,
                0.001, 0.002, 0.005, 0.01, 0.02, 0.05)
DEFAULT_REL_TOL = 1e-10
DEFAULT_ABS_TOL = 1e-14
DEFAULT_BOUND = 1e6
NOISE_FACTOR = 100.0
FIT_POINTS = 3
RATIO_TOL = 0.05


@dataclass(frozen=True)
class Tolerances:
    rel_tol: float = DEFAULT_REL_TOL
    abs_tol: float = DEFAULT_ABS_TOL
    bound: float = DEFAULT_BOUND

    def noise_floor(self, rho: float) -> float:
        """Below this a displacement is treated as numerically zero."""
        return NOISE_FACTOR * max(self.abs_tol, self.rel_tol * abs(rho))


def _coefficient_functions(sys: AbelSystem) -> tuple[Callable, Callable]:
    if sys.is_poly:
        fc = np.array([float(c) for c in sys.f.coeffs] or [0.0])
        gc = np.array([float(c) for c in sys.g.coeffs] or [0.0])
        return (lambda t: npoly.polyval(t, fc)), (lambda t: npoly.polyval(t, gc))

    def trig(p):
        ks = np.arange(1, p.degree + 1)
        a = np.array([float(x) for x in p.cos])
        b = np.array([float(x) for x in p.sin])
        c0 = float(p.constant)
        return lambda th: c0 + a @ np.cos(ks * th) + b @ np.sin(ks * th)

    return trig(sys.f), trig(sys.g)


@dataclass
class _Integrator:
    sys: AbelSystem
    tol: Tolerances = field(default_factory=Tolerances)

    def __post_init__(self):
        self.f, self.g = _coefficient_functions(self.sys)
        self.t0, self.t1 = self.sys.interval_float()

    def run(self, rho: float) -> tuple[float, int]:
        if not math.isfinite(rho):
            raise ValueError("initial value must be finite")
        if rho == 0.0:
            return 0.0, 0
        f, g, bound = self.f, self.g, self.tol.bound

        def rhs(t, y):
            x = y[0]
            return [x * x * (f(t) * x + g(t))]

        def escape(t, y):
            return bound - abs(y[0])

        escape.terminal = True
        sol = solve_ivp(
            rhs, (self.t0, self.t1), [rho], method="DOP853",
            rtol=self.tol.rel_tol, atol=self.tol.abs_tol, events=escape,
        )
        steps = len(sol.t) - 1
        if sol.status == 1:
            raise BlowUp(f"|x| exceeded {bound} at t = {sol.t_events[0][0]:.6g}")
        if sol.status != 0:
            raise StepFailure(sol.message)
        return float(sol.y[0, -1]), steps


def integrate_abel(
    sys: AbelSystem,
    rho: float,
    rel_tol: float = DEFAULT_REL_TOL,
    abs_tol: float = DEFAULT_ABS_TOL,
    bound: float = DEFAULT_BOUND,
) -> float:
    """``x(b)`` for the solution with ``x(a) = rho``."""
    return _Integrator(sys, Tolerances(rel_tol, abs_tol, bound)).run(rho)[0]


@dataclass
class DisplacementScan:
    rho_grid: list[float]
    displacements: list[float]
    failures: list[tuple[float, str]]
    estimated_order: Optional[int] = None
    fit_slope: Optional[float] = None
    fit_residual: Optional[float] = None
    steps: list[int] = field(default_factory=list)
    tolerances: Tolerances = field(default_factory=Tolerances)

    def successful(self) -> list[tuple[float, float]]:
        failed = {r for r, _ in self.failures}
        return list(zip([r for r in self.rho_grid if r not in failed], self.displacements))

    def max_abs(self) -> float:
        return max((abs(d) for d in self.displacements), default=0.0)

    def points(self) -> list[dict]:
        done = dict(zip([r for r, _ in self.successful()], zip(self.displacements, self.steps)))
        reasons = dict(self.failures)
        out = []
        for rho in self.rho_grid:
            if rho in done:
                d, steps = done[rho]
                out.append({"rho": rho, "d": d, "steps": steps, "status": "ok"})
            else:
                out.append({"rho": rho, "d": None, "steps": None, "status": reasons[rho]})
        return out

    def to_json(self) -> dict:
        return {
            "points": self.points(),
            "max_abs_d": self.max_abs(),
            "estimated_order": self.estimated_order,
            "fit_slope": self.fit_slope,
            "fit_residual": self.fit_residual,
            "rel_tol": self.tolerances.rel_tol,
            "abs_tol": self.tolerances.abs_tol,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["rho", "d", "steps", "status"])
        for p in self.points():
            w.writerow([p["rho"], "" if p["d"] is None else repr(p["d"]),
                        "" if p["steps"] is None else p["steps"], p["status"]])
        return buf.getvalue()


def _fit_order(points: list[tuple[float, float]], tol: Tolerances):
    usable = sorted(
        ((r, d) for r, d in points if abs(d) > tol.noise_floor(r)), key=lambda p: abs(p[0])
    )[:FIT_POINTS]
    if len({abs(r) for r, _ in usable}) < 2:
        return None, None, None
    x = np.log([abs(r) for r, _ in usable])
    y = np.log([abs(d) for _, d in usable])
    (slope, intercept), res, *_ = np.polyfit(x, y, 1, full=True)
    resid = float(np.sqrt(res[0] / len(x))) if len(res) else 0.0
    return int(round(slope)), float(slope), resid


def displacement_scan(
    sys: AbelSystem,
    rho_values: Sequence[float] = DEFAULT_GRID,
    tolerances: Optional[Tolerances] = None,
) -> DisplacementScan:
    tol = tolerances or Tolerances()
    integ = _Integrator(sys, tol)
    disp, fails, steps = [], [], []
    for rho in rho_values:
        try:
            x, n = integ.run(float(rho))
        except (BlowUp, StepFailure) as exc:
            fails.append((float(rho), f"{type(exc).__name__}: {exc}"))
            continue
        disp.append(x - float(rho))
        steps.append(n)
    scan = DisplacementScan([float(r) for r in rho_values], disp, fails, steps=steps, tolerances=tol)
    scan.estimated_order, scan.fit_slope, scan.fit_residual = _fit_order(scan.successful(), tol)
    return scan


def cross_validate(sys: AbelSystem, series: ReturnMapSeries, scan: DisplacementScan) -> dict:
    """Compare ``d(rho)`` with the leading term ``r_k(b) rho^k`` of the series.

    With a finite center order ``k`` the ratios ``d(rho) / rho^k`` over the
    smallest grid points above the noise floor must lie within 5% of
    ``r_k(b)``. Otherwise every displacement must sit below the noise floor.
    Raises :class:`Mismatch`.
    """
    sys.require_poly("cross-validation")
    k = center_order(series)
    pts = sorted(scan.successful(), key=lambda p: abs(p[0]))
    if not pts:
        raise Mismatch("no successful integrations", {"failures": scan.failures})
    tol = scan.tolerances
    if k is None:
        worst = max(pts, key=lambda p: abs(p[1]) / tol.noise_floor(p[0]))
        if abs(worst[1]) > tol.noise_floor(worst[0]):
            raise Mismatch(
                f"series vanishes to order {series.order} but d is not numerically zero",
                {"rho": worst[0], "d": worst[1], "floor": tol.noise_floor(worst[0])},
            )
        return {"center_order": None, "order": series.order, "max_abs_d": scan.max_abs(),
                "status": "consistent"}
    v = float(series.endpoint_values[k - 2])
    used = [p for p in pts if abs(p[1]) > tol.noise_floor(p[0])][:FIT_POINTS]
    if not used:
        return {"center_order": k, "leading_coefficient": str(series.endpoint_values[k - 2]),
                "status": "inconclusive: displacements below the noise floor"}
    ratios = [d / r ** k for r, d in used]
    bad = [q for q in ratios if abs(q - v) > RATIO_TOL * abs(v)]
    if bad:
        raise Mismatch(
            f"d(rho)/rho^{k} does not approach r_{k}(b)",
            {"expected": v, "ratios": ratios, "rho": [r for r, _ in used]},
        )
    return {"center_order": k, "leading_coefficient": str(series.endpoint_values[k - 2]),
            "ratios": ratios, "rho": [r for r, _ in used], "status": "consistent"}
