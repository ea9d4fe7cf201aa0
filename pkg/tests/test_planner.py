import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from detsearch import planner

# Frozen from a 40-digit mpmath evaluation of the same closed forms.
K_AT_0375 = 0.691698030678919425
PHI_AT_0375 = 1.230959417340774682
PHI_AT_0625 = 1.772154247585227411


def test_compute_k_worked_example():
    assert planner.compute_k(0.375) == pytest.approx(0.6917, abs=5e-5)
    assert planner.compute_k(0.375) == pytest.approx(K_AT_0375, abs=1e-12)


def test_compute_k_exact_values():
    assert planner.compute_k(0.25) == pytest.approx(1.0, abs=1e-12)
    assert planner.compute_k(math.sin(math.pi / 10) ** 2) == pytest.approx(2.0, abs=1e-12)


@pytest.mark.parametrize("p", [0.0, 1.0, -0.1, 1.5])
def test_invalid_p(p):
    for fn in (planner.compute_k, planner.make_plan, planner.no_advantage_check):
        with pytest.raises(ValueError):
            fn(p)
    with pytest.raises(ValueError):
        planner.predicted_success(p, 1)


def test_predicted_success():
    assert planner.predicted_success(0.375, 1) == pytest.approx(27 / 32, abs=1e-12)
    assert planner.predicted_success(0.5, 1) == pytest.approx(0.5, abs=1e-12)
    for p in (0.01, 0.3, 0.77):
        assert planner.predicted_success(p, 0) == pytest.approx(p, abs=1e-15)


def test_plan_worked_example():
    plan = planner.make_plan(0.375)
    assert plan.needs_auxiliary
    assert plan.k_prime == 1
    assert plan.p_prime == pytest.approx(0.25, abs=1e-15)
    assert plan.phi == pytest.approx(PHI_AT_0375, abs=1e-12)
    assert plan.alpha_sq == pytest.approx(2 / 3, abs=1e-15)


def test_plan_natural_k():
    plan = planner.make_plan(0.25)
    assert not plan.needs_auxiliary
    assert plan.k_prime == 1 and plan.phi == 0.0 and plan.p_prime == 0.25


def test_plan_above_half():
    plan = planner.make_plan(0.625)
    assert plan.needs_auxiliary and plan.k_prime == 1
    assert plan.p_prime == pytest.approx(0.25, abs=1e-15)
    assert plan.phi == pytest.approx(PHI_AT_0625, abs=1e-12)


def test_plan_phi_matches_mpmath():
    mpmath.mp.dps = 30
    for p in (0.001, 0.07, 0.2, 0.4, 0.9):
        plan = planner.make_plan(p)
        mp_p = mpmath.mpf(p)
        k = mpmath.pi / (4 * mpmath.asin(mpmath.sqrt(mp_p))) - mpmath.mpf(1) / 2
        k_prime = int(mpmath.floor(k)) + 1
        p_prime = mpmath.sin(mpmath.pi / (4 * (k_prime + mpmath.mpf(1) / 2))) ** 2
        assert plan.k_prime == k_prime
        assert plan.phi == pytest.approx(float(2 * mpmath.acos(mpmath.sqrt(p_prime / mp_p))), abs=1e-10)


def test_tolerance_boundary():
    # k sits 5e-10 below 2: inside the tolerance, so treated as natural
    theta = math.pi / (4 * (2 - 5e-10 + 0.5))
    plan = planner.make_plan(math.sin(theta) ** 2)
    assert not plan.needs_auxiliary and plan.k_prime == 2
    strict = planner.make_plan(math.sin(theta) ** 2, natural_tolerance=0.0)
    assert strict.needs_auxiliary and strict.k_prime == 2


def test_no_advantage_check():
    assert planner.no_advantage_check(0.5)
    assert planner.predicted_success(0.5, 1) == pytest.approx(0.5)
    assert planner.no_advantage_check(0.625)
    assert planner.predicted_success(0.625, 1) == pytest.approx(0.15625, abs=1e-12)
    assert not planner.no_advantage_check(0.1)


def test_approx_iterations():
    approx = planner.approx_iterations(1_000_000, 1)
    assert approx == pytest.approx(784.898163397448, abs=1e-9)
    assert planner.compute_k(1e-6) == pytest.approx(approx, rel=1e-3)
    assert planner.approx_iterations(4, 1) == pytest.approx(1.0708, abs=1e-4)
    with pytest.raises(ValueError):
        planner.approx_iterations(4, 4)
    with pytest.raises(ValueError):
        planner.approx_iterations(4, 0)


def test_standard_iterations_round_half_up():
    assert planner.standard_iterations(0.375) == 1
    assert planner.standard_iterations(0.625) == 0
    assert planner.standard_iterations(0.25) == 1
    # p = 0.5 gives k = 1/2, which rounds up
    assert planner.standard_iterations(0.5) == 1


def test_plan_to_dict():
    d = planner.make_plan(0.375).to_dict()
    assert set(d) == {"p", "k", "k_prime", "needs_auxiliary", "p_prime", "phi", "alpha_sq"}


# ---- properties ----

@pytest.mark.parametrize("k_prime", range(1, 200))
def test_round_trip(k_prime):
    assert planner.compute_k(planner.probability_for_iterations(k_prime)) == pytest.approx(k_prime, abs=1e-9)


def test_certainty_identity_grid():
    for p in np.linspace(0.0001, 0.9999, 9999):
        plan = planner.make_plan(float(p))
        assert planner.predicted_success(plan.p_prime, plan.k_prime) == pytest.approx(1.0, abs=1e-9)
        assert plan.k_prime - plan.k < 1
        assert plan.k_prime <= math.floor(plan.k) + 1
        if plan.needs_auxiliary:
            assert plan.p_prime < plan.p and plan.alpha_sq < 1 and 0 < plan.phi < math.pi
        else:
            assert plan.p_prime == plan.p and plan.phi == 0


def test_no_advantage_inequality_grid():
    p = np.linspace(0.5, 1, 10_000, endpoint=False)
    theta = np.arcsin(np.sqrt(p))
    assert np.all(np.sin(theta) ** 2 >= np.sin(3 * theta) ** 2 - 1e-15)


@settings(max_examples=500)
@given(st.floats(min_value=1e-6, max_value=1 - 1e-6))
def test_plan_invariants(p):
    plan = planner.make_plan(p)
    angles = planner.SearchAngles.from_p(p)
    assert math.sin(angles.theta) ** 2 == pytest.approx(p, abs=1e-12)
    assert 0 < angles.theta < math.pi / 2
    assert plan.k_prime <= math.floor(plan.k) + 1
    assert plan.p_prime <= plan.p
    assert plan.alpha_sq == pytest.approx(math.cos(plan.phi / 2) ** 2, abs=1e-12)
    assert plan.beta_sq == pytest.approx(math.sin(plan.phi / 2) ** 2, abs=1e-12)
    assert planner.predicted_success(plan.p_prime, plan.k_prime) == pytest.approx(1.0, abs=1e-9)
