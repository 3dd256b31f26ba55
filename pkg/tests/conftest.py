import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from abel_center.exact import Poly
from abel_center.system import AbelSystem

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def polys(max_degree=5):
    return st.lists(small_fractions, max_size=max_degree + 1).map(Poly)


def rand_fraction(rng: random.Random, span: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span * den, span * den), rng.randint(1, den))


def rand_poly(rng: random.Random, max_degree: int, min_degree: int = 0) -> Poly:
    deg = rng.randint(min_degree, max_degree)
    coeffs = [rand_fraction(rng) for _ in range(deg + 1)]
    while not coeffs[-1]:
        coeffs[-1] = rand_fraction(rng)
    return Poly(coeffs)


def rand_system(rng: random.Random, max_degree: int = 6) -> AbelSystem:
    return AbelSystem.polynomial(rand_poly(rng, max_degree), rand_poly(rng, max_degree))


def composite_system(rng: random.Random, a=-1, b=1, w_extra: int = 1, outer_degree: int = 2):
    """A system built to satisfy the composition condition on [a, b].

    W = (t-a)(t-b) R(t) + c so W(a) = W(b); F and G are random polynomials in
    W shifted to vanish at a.
    """
    a, b = Fraction(a), Fraction(b)
    t = Poly.t()
    R = rand_poly(rng, w_extra)
    W = (t - a) * (t - b) * R + rand_fraction(rng)
    if W.degree < 2:
        W = (t - a) * (t - b) + rand_fraction(rng)
    Ft = rand_poly(rng, outer_degree, 1)
    Gt = rand_poly(rng, outer_degree, 1)
    F = Ft.compose(W)
    G = Gt.compose(W)
    F, G = F - F(a), G - G(a)
    return AbelSystem.polynomial(F.derivative(), G.derivative(), a, b), W


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def trig_center():
    from abel_center.trigpoly import TrigPoly

    f = TrigPoly(0, [], [1, -1, 1])
    g = TrigPoly(0, [1, 2])
    return AbelSystem.trigonometric(f, g)
