import math
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from abel_center.planar import PlanarSystem, cherkas_reduce, radial_angular, trig_expand_homogeneous
from abel_center.trigpoly import TrigPoly

from conftest import rand_fraction

half = Fraction(1, 2)
th = sympy.symbols("theta", real=True)


def to_sympy(p: TrigPoly):
    expr = sympy.Rational(p.constant.numerator, p.constant.denominator)
    for k in range(1, p.degree + 1):
        a, b = p.a(k), p.b(k)
        expr += sympy.Rational(a.numerator, a.denominator) * sympy.cos(k * th)
        expr += sympy.Rational(b.numerator, b.denominator) * sympy.sin(k * th)
    return expr


def same_function(expr, p: TrigPoly) -> bool:
    diff = (expr - to_sympy(p)).rewrite(sympy.exp)
    return sympy.simplify(sympy.expand(diff)) == 0


def rand_planar(rng: random.Random, n: int) -> PlanarSystem:
    return PlanarSystem(n, [rand_fraction(rng) for _ in range(n + 1)],
                        [rand_fraction(rng) for _ in range(n + 1)])


def test_homogeneous_examples():
    assert trig_expand_homogeneous([1, 0, 0], 2) == TrigPoly(half, [0, half])
    assert trig_expand_homogeneous([0, 1, 0], 2) == TrigPoly(0, [], [0, half])
    assert trig_expand_homogeneous([1, 0, 0, 0], 3) == TrigPoly(0, [Fraction(3, 4), 0, Fraction(1, 4)])
    with pytest.raises(ValueError):
        trig_expand_homogeneous([1, 2], 2)


def test_radial_angular_example():
    # P = y^2, Q = -xy: A = cos s^2 - sin c s = 0, B = -c^2 s - s^3 = -sin
    A, B = radial_angular(PlanarSystem(2, [0, 0, 1], [0, -1, 0]))
    assert A.is_zero
    assert B == TrigPoly(0, [], [-1])


def test_reduction_against_sympy(rng):
    c, s = sympy.cos(th), sympy.sin(th)
    for n in (2, 3):
        sys = rand_planar(rng, n)
        rat = lambda q: sympy.Rational(q.numerator, q.denominator)
        P = sum(rat(v) * c ** (n - j) * s ** j for j, v in enumerate(sys.P))
        Q = sum(rat(v) * c ** (n - j) * s ** j for j, v in enumerate(sys.Q))
        A = c * P + s * Q
        B = c * Q - s * P
        red = cherkas_reduce(sys)
        assert same_function(-(n - 1) * A * B, red.f)
        assert same_function((n - 1) * A - sympy.diff(B, th), red.g)


def test_degree_bounds(rng):
    for n in (2, 3, 4):
        for _ in range(10):
            red = cherkas_reduce(rand_planar(rng, n))
            assert red.f.degree <= 2 * (n + 1)
            assert red.g.degree <= n + 1


def test_pythagorean_collapse():
    # x^2 + y^2 expands to the constant 1
    assert trig_expand_homogeneous([1, 0, 1], 2) == TrigPoly(1)
    assert trig_expand_homogeneous([1, 0, 2, 0, 1], 4) == TrigPoly(1)


def test_float_evaluation(rng):
    for n in (2, 3, 4):
        sys = rand_planar(rng, n)
        red = cherkas_reduce(sys)
        Pf = [float(v) for v in sys.P]
        Qf = [float(v) for v in sys.Q]
        for t in np.linspace(0, 2 * math.pi, 100):
            c, s = math.cos(t), math.sin(t)
            P = sum(v * c ** (n - j) * s ** j for j, v in enumerate(Pf))
            Q = sum(v * c ** (n - j) * s ** j for j, v in enumerate(Qf))
            dP = sum(v * ((n - j) * c ** max(n - j - 1, 0) * (-s) * s ** j
                          + j * s ** max(j - 1, 0) * c * c ** (n - j)) for j, v in enumerate(Pf))
            dQ = sum(v * ((n - j) * c ** max(n - j - 1, 0) * (-s) * s ** j
                          + j * s ** max(j - 1, 0) * c * c ** (n - j)) for j, v in enumerate(Qf))
            A, B = c * P + s * Q, c * Q - s * P
            dB = -s * Q + c * dQ - c * P - s * dP
            assert abs(red.f.eval_float(t) + (n - 1) * A * B) < 1e-10
            assert abs(red.g.eval_float(t) - ((n - 1) * A - dB)) < 1e-10


def test_zero_system():
    red = cherkas_reduce(PlanarSystem(3, [0] * 4, [0] * 4))
    assert red.f.is_zero and red.g.is_zero


def test_json_round_trip(rng):
    sys = rand_planar(rng, 3)
    assert PlanarSystem.from_json(sys.to_json()) == sys
    with pytest.raises(ValueError):
        PlanarSystem.from_json({"n": 2, "P": [1, 0], "Q": [0, 0, 0]})
    with pytest.raises(ValueError):
        PlanarSystem.from_json({"n": "2", "P": [], "Q": []})
    with pytest.raises(ValueError):
        PlanarSystem(1, [0, 0], [0, 0])
