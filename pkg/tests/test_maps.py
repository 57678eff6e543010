import math

import numpy as np
import pytest

from blaschke import kernels, maps
from blaschke.errors import InvalidParamsError


def test_value_at_one_real_params():
    # for real a the Blaschke factor fixes 1, so B(1) = 1 + lam
    p = maps.MapParams.perturbed(0.5, 0.001)
    assert maps.eval_map(1.0, p) == pytest.approx(1.001, abs=1e-15)


def test_pole_maps_to_infinity_marker():
    p = maps.MapParams.perturbed(0.5, 0.001)
    z = 1.0 / p.a.conjugate()
    assert z == 2.0
    out = maps.eval_map(z, p)
    assert maps.is_infinity(out)
    assert not maps.is_nan(out)
    assert maps.is_infinity(maps.eval_map(0.0, p))
    assert maps.is_infinity(maps.eval_map(maps.INF, p))


def test_zero_perturbation_matches_unperturbed():
    rng = np.random.default_rng(7)
    a = 0.3 + 0.4j
    un = maps.MapParams.unperturbed(a)
    for _ in range(50):
        z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        direct = kernels.step_pb(z.real, z.imag, a.real, a.imag, 0.0, 0.0)
        assert maps.eval_map(z, un) == complex(*direct)


def test_unperturbed_critical_point_closed_form():
    c_minus, c_plus = maps.unperturbed_criticals(0.5)
    assert c_minus.real == pytest.approx((3 - math.sqrt(5)) / 2, abs=1e-14)
    assert c_plus.real == pytest.approx((3 + math.sqrt(5)) / 2, abs=1e-14)
    p = maps.MapParams.unperturbed(0.5)
    assert abs(maps.eval_derivative(c_minus, p)) < 1e-13


def test_derivative_matches_finite_differences(rng):
    p = maps.MapParams.perturbed(0.5 + 0.1j, 1e-6 + 2e-6j)
    h = 1e-6
    checked = 0
    while checked < 100:
        z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if abs(z) < 0.05 or abs(z - 1 / p.a.conjugate()) < 0.05:
            continue
        fd = (maps.eval_map(z + h, p) - maps.eval_map(z - h, p)) / (2 * h)
        d = maps.eval_derivative(z, p)
        assert abs(d - fd) <= 1e-5 * max(1.0, abs(fd))
        checked += 1


def test_second_derivative_matches_finite_differences(rng):
    p = maps.MapParams.perturbed(0.4 - 0.2j, -3e-6 + 1e-6j)
    h = 1e-6
    for _ in range(40):
        z = complex(rng.uniform(0.2, 1.5), rng.uniform(0.2, 1.5))
        fd = (maps.eval_derivative(z + h, p) - maps.eval_derivative(z - h, p)) / (2 * h)
        d2 = maps.eval_second_derivative(z, p)
        assert abs(d2 - fd) <= 1e-4 * max(1.0, abs(fd))


def test_mcmullen_eval_and_derivative():
    p = maps.MapParams.mcmullen(1e-5, n=3, d=2)
    z = 0.7 + 0.2j
    assert maps.eval_map(z, p) == pytest.approx(z ** 3 + 1e-5 / z ** 2, abs=1e-15)
    # derivative pole at the origin
    assert maps.is_infinity(maps.eval_derivative(0.0, p))
    fd = (maps.eval_map(z + 1e-6, p) - maps.eval_map(z - 1e-6, p)) / 2e-6
    assert abs(maps.eval_derivative(z, p) - fd) < 1e-5


def test_conjugation_symmetry(rng):
    p = maps.MapParams.perturbed(0.37 + 0.21j, 2.3e-6 - 1.1e-6j)
    q = p.conjugate()
    for _ in range(200):
        z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        lhs = maps.eval_map(z, p).conjugate()
        rhs = maps.eval_map(z.conjugate(), q)
        if maps.is_infinity(lhs) or maps.is_infinity(rhs):
            assert maps.is_infinity(lhs) == maps.is_infinity(rhs)
            continue
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))


def test_real_axis_invariant_for_real_params(rng):
    p = maps.MapParams.perturbed(0.6, 2e-6)
    for _ in range(50):
        x = rng.uniform(-2, 2)
        out = maps.eval_map(complex(x, 0.0), p)
        if not maps.is_infinity(out):
            assert out.imag == 0.0


def test_param_invariants():
    with pytest.raises(InvalidParamsError):
        maps.MapParams.perturbed(0.0, 1e-6)
    with pytest.raises(InvalidParamsError):
        maps.MapParams.perturbed(1.2, 1e-6)
    with pytest.raises(InvalidParamsError):
        maps.MapParams.perturbed(0.5, 0.0)
    with pytest.raises(InvalidParamsError):
        maps.MapParams.mcmullen(1e-6, n=1, d=2)
    # unperturbed ignores lam
    assert maps.MapParams.unperturbed(0.5).lam == 0
