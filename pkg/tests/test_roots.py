import cmath
import math

import numpy as np
import pytest
from scipy.optimize import linear_sum_assignment

from blaschke import maps, roots
from blaschke.errors import InvalidParamsError, NoConvergenceError


def test_quadratic():
    rs = roots.polynomial_roots([1, 0, -1])
    assert np.allclose(rs.roots, [-1.0, 1.0])
    assert rs.all_converged


def test_fifth_roots_de_moivre():
    # oracle: the five roots of z^5 = c by de Moivre
    c = 2.0 * (1e-6 + 3e-7j) / (3 * 0.5)
    expected = sorted(
        (abs(c) ** 0.2 * cmath.exp(1j * (cmath.phase(c) + 2 * math.pi * k) / 5)
         for k in range(5)),
        key=lambda z: (z.real, z.imag))
    rs = roots.polynomial_roots([1, 0, 0, 0, 0, -c])
    assert np.allclose(rs.roots, expected, atol=1e-12)


def test_random_degree_six_residuals(rng):
    for _ in range(30):
        coeffs = rng.normal(size=7) + 1j * rng.normal(size=7)
        coeffs[0] += 2.0
        rs = roots.polynomial_roots(coeffs)
        assert len(rs.roots) == 6
        assert rs.residuals.max() <= 1e-10 * np.abs(coeffs).max()


def test_degree_and_leading_checks():
    with pytest.raises(InvalidParamsError):
        roots.polynomial_roots([0, 1, 2])
    with pytest.raises(InvalidParamsError):
        roots.polynomial_roots([1] * 19)
    with pytest.raises(InvalidParamsError):
        roots.polynomial_roots([3.0])


def test_preimages_at_infinity():
    p = maps.MapParams.perturbed(0.5, 1e-6)
    rs = roots.preimages_of_point(maps.INF, p)
    finite = [z for z in rs.roots if not maps.is_infinity(z)]
    infinite = [z for z in rs.roots if maps.is_infinity(z)]
    assert len(infinite) == 3
    assert sorted(np.round(np.real(finite), 12)) == [0.0, 0.0, 2.0]


def test_preimage_vieta(rng):
    for _ in range(100):
        a = (0.15 + 0.7 * rng.random()) * np.exp(2j * math.pi * rng.random())
        lam = 10.0 ** rng.uniform(-8, -4) * np.exp(2j * math.pi * rng.random())
        p = maps.MapParams.perturbed(a, lam)
        rs = roots.preimages_of_point(0.0, p)
        assert len(rs.roots) == 6
        assert abs(np.sum(rs.roots) - a) <= 1e-9
        assert abs(np.prod(rs.roots) - lam) <= 1e-9


def test_preimage_map_residual(rng):
    p = maps.MapParams.perturbed(0.31 + 0.4j, 2e-6 - 5e-7j)
    for _ in range(25):
        w = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        rs = roots.preimages_of_point(w, p)
        for r in rs.roots:
            assert abs(maps.eval_map(r, p) - w) <= 1e-9 * max(1.0, abs(w))


def test_preimage_continuity_under_w_perturbation(rng):
    p = maps.MapParams.perturbed(0.5j, 1e-6)
    for _ in range(20):
        w = complex(rng.uniform(0.2, 1.5), rng.uniform(0.2, 1.5))
        r1 = roots.preimages_of_point(w, p).roots
        r2 = roots.preimages_of_point(w + 1e-8, p).roots
        cost = np.abs(r1[:, None] - r2[None, :])
        rows, cols = linear_sum_assignment(cost)
        assert cost[rows, cols].max() <= 1e-3


def test_newton_fixed_point_identity():
    p = maps.MapParams.unperturbed(0.5)
    res = roots.newton_refine(1.0, roots.TARGET_FIXED, p)
    assert res.root == 1.0
    assert res.iterations == 0


def test_newton_critical_closed_form():
    p = maps.MapParams.unperturbed(0.5)
    res = roots.newton_refine(0.38, roots.TARGET_CRITICAL, p)
    assert abs(res.root - (3 - math.sqrt(5)) / 2) < 1e-12
    assert res.iterations <= 50
    assert res.residual <= 1e-12


def test_newton_continuation_step_is_fast():
    # small perturbation refined from the unperturbed value
    c_minus, _ = maps.unperturbed_criticals(0.5)
    p = maps.MapParams.perturbed(0.5, 1e-8)
    res = roots.newton_refine(c_minus, roots.TARGET_CRITICAL, p)
    assert res.iterations <= 10


def test_newton_reports_failure():
    # far seeds approach at one halving per step; 1e30 cannot land in 50
    p = maps.MapParams.perturbed(0.5, 1e-6)
    with pytest.raises(NoConvergenceError) as e:
        roots.newton_refine(1e30 + 1e30j, roots.TARGET_PREIMAGE, p, w=0.0)
    assert e.value.iterations is not None


def test_newton_derivative_vanished():
    # the unperturbed product has an exactly vanishing derivative at 0
    from blaschke.errors import DerivativeVanishedError
    p = maps.MapParams.unperturbed(0.5)
    with pytest.raises(DerivativeVanishedError):
        roots.newton_refine(0.0, roots.TARGET_PREIMAGE, p, w=0.6)


def test_ring_seeds_magnitudes():
    p = maps.MapParams.perturbed(0.5, 1e-5)
    # |(lam/a)^(1/5)| and |(2 lam / 3a)^(1/5)| oracles
    assert np.allclose(np.abs(roots.ring_zero_seeds(p)), (1e-5 / 0.5) ** 0.2)
    assert np.allclose(np.abs(roots.ring_critical_seeds(p)), (2e-5 / 1.5) ** 0.2)
    assert (1e-5 / 0.5) ** 0.2 == pytest.approx(0.1149, abs=5e-5)
