import math

import pytest

from abel_center.errors import BlowUp, InvalidKind, Mismatch
from abel_center.odeverify import (
    DEFAULT_GRID,
    DisplacementScan,
    Tolerances,
    cross_validate,
    displacement_scan,
    integrate_abel,
)
from abel_center.returnmap import compute_return_series
from abel_center.system import AbelSystem

from conftest import rand_poly

riccati = AbelSystem.polynomial([], [0, 1])
focus = AbelSystem.polynomial([1], [0, 1])
odd = AbelSystem.polynomial([0, -1, 0, 1], [0, 1])


def test_closed_forms():
    # G(1) = 0, so the Riccati solution returns to rho
    assert abs(integrate_abel(riccati, 0.1) - 0.1) < 1e-12
    # g = 1 on [0, 1]: x(1) = rho / (1 - rho)
    s = AbelSystem.polynomial([], [1], 0, 1)
    assert abs(integrate_abel(s, 0.1) - 0.1 / 0.9) < 1e-12
    # x' = x^3 on [-1, 1]
    cubic = AbelSystem.polynomial([1], [])
    for rho in (0.05, -0.2, 0.3):
        exact = rho / math.sqrt(1 - 4 * rho * rho)
        assert abs(integrate_abel(cubic, rho) - exact) < 1e-11


def test_zero_initial_value():
    assert integrate_abel(focus, 0.0) == 0.0


def test_tolerance_convergence():
    coarse = integrate_abel(focus, 0.05, rel_tol=1e-6, abs_tol=1e-10)
    fine = integrate_abel(focus, 0.05, rel_tol=1e-12, abs_tol=1e-16)
    assert abs(coarse - fine) < 1e-6


def test_tolerance_monotone():
    # tightening rel_tol never makes the error more than 4x worse
    cubic = AbelSystem.polynomial([1], [], 0, 1)
    exact = 0.1 / math.sqrt(1 - 2 * 0.01)
    errs = [abs(integrate_abel(cubic, 0.1, rel_tol=tol, abs_tol=tol * 1e-4) - exact)
            for tol in (1e-5, 5e-6, 2.5e-6, 1.25e-6)]
    assert all(b <= 4 * a + 1e-15 for a, b in zip(errs, errs[1:]))


def test_odd_coefficients_antisymmetric():
    s = AbelSystem.polynomial([0, 2, 0, -1], [0, 0, 0, 1])
    for rho in (0.01, 0.02, 0.05):
        d_plus = integrate_abel(s, rho) - rho
        d_minus = integrate_abel(s, -rho) + rho
        assert abs(d_plus + d_minus) < 1e-9


def test_sign_symmetry(rng):
    # with g = 0 the equation is odd in x
    for _ in range(5):
        s = AbelSystem.polynomial(rand_poly(rng, 3), [])
        for rho in (0.01, 0.03):
            assert abs(integrate_abel(s, rho) + integrate_abel(s, -rho)) < 1e-12


def test_blow_up():
    with pytest.raises(BlowUp):
        integrate_abel(AbelSystem.polynomial([1], [], 0, 1), 2.0)


def test_scan_orders():
    scan = displacement_scan(focus)
    assert scan.estimated_order == 3
    assert scan.failures == []
    assert len(scan.displacements) == len(DEFAULT_GRID)
    other = displacement_scan(focus, [0.0015, 0.003, 0.007, 0.015, -0.0015, -0.007])
    assert other.estimated_order == 3
    g_only = AbelSystem.polynomial([], [1], 0, 1)
    assert displacement_scan(g_only).estimated_order == 2


def test_scan_center():
    scan = displacement_scan(odd)
    assert scan.max_abs() < 1e-10
    assert scan.estimated_order is None


def test_scan_trig(trig_center):
    scan = displacement_scan(trig_center)
    assert scan.max_abs() < 1e-8


def test_scan_records_failures():
    s = AbelSystem.polynomial([1], [], 0, 1)
    scan = displacement_scan(s, [0.1, 5.0])
    assert len(scan.failures) == 1 and scan.failures[0][0] == 5.0
    pts = scan.points()
    assert pts[0]["status"] == "ok" and pts[1]["d"] is None
    assert pts[1]["status"].startswith("BlowUp")


def test_csv():
    scan = displacement_scan(focus, [0.01, 0.02])
    lines = scan.to_csv().splitlines()
    assert lines[0] == "rho,d,steps,status"
    assert len(lines) == 3
    rho, d, steps, status = lines[1].split(",")
    assert float(rho) == 0.01 and float(d) == scan.displacements[0] and status == "ok"


def test_cross_validate():
    ser = compute_return_series(focus, 6)
    rep = cross_validate(focus, ser, displacement_scan(focus))
    assert rep["status"] == "consistent" and rep["center_order"] == 3
    assert all(abs(q - 2) < 0.1 for q in rep["ratios"])

    ser_odd = compute_return_series(odd, 8)
    assert cross_validate(odd, ser_odd, displacement_scan(odd))["status"] == "consistent"

    # a series claiming a center against a focus must be rejected
    with pytest.raises(Mismatch):
        cross_validate(focus, ser_odd, displacement_scan(focus))
    # and the wrong leading coefficient too
    ser_wrong = compute_return_series(AbelSystem.polynomial([2], [0, 1]), 4)
    with pytest.raises(Mismatch):
        cross_validate(focus, ser_wrong, displacement_scan(focus))


def test_cross_validate_below_floor():
    ser = compute_return_series(focus, 4)
    scan = DisplacementScan([1e-9], [1e-26], [], steps=[3], tolerances=Tolerances())
    assert cross_validate(focus, ser, scan)["status"].startswith("inconclusive")


def test_cross_validate_trig_rejected(trig_center):
    with pytest.raises(InvalidKind):
        cross_validate(trig_center, compute_return_series(odd, 3), displacement_scan(odd, [0.01]))
