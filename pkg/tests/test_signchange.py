import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from abel_center.errors import DomainError, HypothesisFailed, ZeroPolynomial
from abel_center.exact import Poly
from abel_center.signchange import (
    even_odd_split,
    odd_multiplicity_part,
    psi_eval,
    real_roots_isolated,
    squarefree_decomposition,
    sturm_sequence,
    sturm_sign_changes,
    moment_propagation_check,
)
from abel_center.system import moment_linear_system

from conftest import polys, rand_poly

s = Poly.t()
F = Fraction


def test_split_examples():
    a0, a1, a2 = F(3), F(-2), F(5, 7)
    sp = even_odd_split(Poly([a0, a1, a2]))
    assert sp.p == Poly([a0, a2]) and sp.q == Poly([a1])
    assert even_odd_split(Poly([0, 1, 0, -4])).p.is_zero
    sp = even_odd_split(Poly([0, 1, -1, 0, 1]))
    assert sp.p == Poly([0, -1, 1]) and sp.q == Poly([1])


@settings(max_examples=200, deadline=None)
@given(polys(9))
def test_split_round_trip(f):
    assert even_odd_split(f).recompose() == f


def test_psi_examples():
    odd = Poly([0, 2, 0, -1])
    for u in (F(-1, 3), F(-1, 10), 0):
        assert psi_eval(odd, 2, u) == 0.0
    assert abs(psi_eval(Poly([1]), 2, F(-1, 4)) - 2 * math.sqrt(2)) < 1e-12
    assert psi_eval(Poly([0, 0, 1]), 2, 0) == 2.0
    with pytest.raises(DomainError):
        psi_eval(Poly([1]), 2, F(1, 10))
    with pytest.raises(DomainError):
        psi_eval(Poly([1]), 2, F(-1))


def test_psi_endpoint_marker():
    assert psi_eval(Poly([0, 0, 1]), 4, F(-1, 4)) == 0.0
    assert psi_eval(Poly([-3, 0, 1]), 4, F(-1, 4)) == -math.inf
    assert psi_eval(Poly([2]), 2, F(-1, 2)) == math.inf


def test_psi_sign_matches_even_part(rng):
    for _ in range(20):
        f = rand_poly(rng, 7, 1)
        p = even_odd_split(f).p
        for n in (2, 4, 6):
            for u in np.linspace(-1 / n, 0, 52)[1:-1]:
                psi = psi_eval(f, n, float(u))
                sval = (1 + n * u) ** (2 / n)
                pv = p.eval_float(sval)
                if abs(pv) > 1e-9:
                    assert np.sign(psi) == np.sign(pv)


def test_sturm_examples():
    assert sturm_sign_changes((s - F(1, 4)) * (s - F(3, 4)), 0, 1).count == 2
    assert sturm_sign_changes((s - F(1, 2)) ** 2, 0, 1).count == 0
    assert sturm_sign_changes(s, 0, 1).count == 0
    with pytest.raises(ZeroPolynomial):
        sturm_sign_changes(Poly.zero())


def test_sturm_sequence_known_case():
    # x^3 - 2x^2 + 3x - 5 has remainder chain ending in a negative constant
    f = Poly([-5, 3, -2, 1])
    seq = sturm_sequence(f)
    assert seq[:2] == [f, Poly([3, -4, 3])]
    assert seq[2] == Poly([F(13, 3), F(-10, 9)])
    assert seq[3] == Poly([F(-3303, 100)])


def test_multiplicity_parity():
    p = (s - F(1, 2)) ** 3 * (s - F(1, 3)) ** 2 * (s - F(1, 5)) * (s * s + 1)
    parts = squarefree_decomposition(p)
    assert parts[1] == s - F(1, 3) and parts[2] == s - F(1, 2)
    assert odd_multiplicity_part(p) == (s - F(1, 2)) * (s - F(1, 5)) * (s * s + 1)
    rep = sturm_sign_changes(p, 0, 1)
    assert rep.count == 2
    assert any(lo == hi == F(1, 2) for lo, hi in rep.locations)


def test_isolating_intervals_are_disjoint_and_exact(rng):
    for _ in range(30):
        roots = sorted({F(rng.randint(1, 60), 61) for _ in range(rng.randint(1, 6))})
        p = Poly([1])
        for r in roots:
            p = p * (s - r)
        iv = real_roots_isolated(p, F(0), F(1))
        assert len(iv) == len(roots)
        for (lo, hi), r in zip(iv, roots):
            assert lo <= r <= hi
        for (_, h1), (l2, _) in zip(iv, iv[1:]):
            assert h1 <= l2


def _sampled_sign_changes(p: Poly, n: int = 10**6) -> int:
    xs = np.linspace(0.0, 1.0, n + 2)[1:-1]
    vals = np.polynomial.polynomial.polyval(xs, [float(c) for c in p.coeffs])
    sg = np.sign(vals)
    sg = sg[sg != 0]
    return int(np.count_nonzero(sg[1:] != sg[:-1]))


def random_squarefree(rng: random.Random, max_degree: int = 6) -> Poly:
    """Well-separated real roots plus irreducible quadratics; degree <= 6."""
    deg = rng.randint(1, max_degree)
    nreal = rng.randint(0, deg)
    if (deg - nreal) % 2:
        nreal += 1
    roots: list[Fraction] = []
    while len(roots) < nreal:
        r = F(rng.randint(-300, 1300), 1000)
        if min(abs(r), abs(r - 1)) < F(1, 100):
            continue
        if all(abs(r - q) >= F(1, 50) for q in roots):
            roots.append(r)
    p = Poly([F(rng.randint(1, 9), rng.randint(1, 4)) * rng.choice((-1, 1))])
    for r in roots:
        p = p * (s - r)
    for _ in range((deg - nreal) // 2):
        alpha, beta = F(rng.randint(-10, 20), 10), F(rng.randint(1, 10), 10)
        p = p * ((s - alpha) ** 2 + beta * beta)
    return p


def test_sturm_against_sampling(rng):
    for _ in range(10):
        p = random_squarefree(rng)
        assert sturm_sign_changes(p, 0, 1).count == _sampled_sign_changes(p, 10**5)


def test_propagation_examples():
    rep = moment_propagation_check(Poly([0, -1, 0, 1]), 2, 20)
    assert rep["sign_changes"]["count"] == 0 and rep["all_moments_zero"]
    rng = random.Random(4)
    f = Poly([0 if k % 2 == 0 else F(rng.randint(-9, 9), 3) for k in range(6)])
    assert moment_propagation_check(f, 4, 20)["all_moments_zero"]
    with pytest.raises(HypothesisFailed) as exc:
        moment_propagation_check(Poly([1]), 2, 5)
    assert exc.value.which == "m_0 = 0"


def test_propagation_higher_degree_even_parts(rng):
    # even part of degree 4 in s constrained by m_0 = m_1 = m_2 = 0: either the
    # sign-change hypothesis fails or every moment vanishes
    for n in (2, 4):
        res = moment_linear_system(n, [0, 2, 4, 6, 8], [0, 1, 2])
        for v in res.kernel:
            f = Poly([v[j // 2] if j % 2 == 0 else 0 for j in range(9)])
            f = f + Poly([0, rng.randint(-3, 3), 0, rng.randint(-3, 3)])
            try:
                out = moment_propagation_check(f, n, 12)
            except HypothesisFailed as exc:
                assert exc.which == "sign changes"
            else:
                assert out["all_moments_zero"]


def test_propagation_bad_n():
    with pytest.raises(DomainError):
        moment_propagation_check(Poly([1]), 3, 5)
