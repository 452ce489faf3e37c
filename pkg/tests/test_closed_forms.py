import numpy as np
import pytest

import skewcoh.closed_forms as cf
from skewcoh.channels import (
    amplitude_damping_nonunital,
    amplitude_damping_unital,
    bit_flip,
    depolarizing,
    pauli_channel,
    phase_flip,
)
from skewcoh.errors import InvariantViolation
from skewcoh.measures import SkewParams, channel_skew_info, channel_weighted_skew_info
from skewcoh.states import from_bloch
from skewcoh.verification import random_bloch, random_params

P14 = SkewParams(0.25, 0.25)


def test_all_forms_vanish_at_maximally_mixed():
    zero = np.zeros(3)
    p = SkewParams(0.3, 0.2)
    assert cf.i_pauli(zero, (0.2, 0.3, 0.5), p) == 0.0
    assert cf.i_depolarizing(zero, 0.2, p) == 0.0
    assert cf.i_bit_flip(zero, 0.7, p) == 0.0
    assert cf.i_phase_flip(zero, 0.7, p) == 0.0
    assert cf.i_ad_unital(zero, 0.7, p) == 0.0
    assert cf.i_ad_nonunital(zero, 0.7, p) == 0.0
    assert cf.v_pauli(zero, (0.2, 0.3, 0.5), p) == 0.0
    assert cf.v_ad_nonunital(zero, 0.7, p) == 0.0


def test_pure_state_quarter_values():
    # full phase flip on the +x pure state at alpha = beta = 1/4
    assert abs(cf.i_pauli([1, 0, 0], (0, 0, 1), P14) - 0.25) < 1e-15
    assert abs(cf.i_phase_flip([1, 0, 0], 1.0, P14) - 0.25) < 1e-15
    # bit flip on +z is the symmetric case
    assert abs(cf.i_bit_flip([0, 0, 1], 1.0, P14) - 0.25) < 1e-15


def test_fixed_points_give_zero():
    p = SkewParams(0.35, 0.15)
    assert cf.i_bit_flip([1, 0, 0], 0.8, p) == 0.0  # +x is fixed by sigma1
    assert cf.i_phase_flip([0, 0, 0.9], 0.8, p) == 0.0  # diagonal state
    assert cf.i_ad_unital([0, 0, -0.7], 0.8, p) == 0.0  # diagonal Kraus
    assert cf.i_ad_unital([0.5, 0.1, 0.2], 0.0, p) == 0.0  # q = 0 is identity
    assert cf.i_ad_nonunital([0.5, 0.1, 0.2], 0.0, p) == 0.0


def test_alpha_beta_symmetry():
    r = [0.4, -0.2, 0.6]
    p = SkewParams(0.1, 0.7)
    for fn, arg in ((cf.i_pauli, (0.1, 0.5, 0.4)), (cf.i_ad_nonunital, 0.6),
                    (cf.v_pauli, (0.1, 0.5, 0.4)), (cf.v_ad_nonunital, 0.6)):
        assert fn(r, arg, p) == pytest.approx(fn(r, arg, p.swapped()), abs=1e-15)


def test_weighted_equals_plain_at_equal_exponents():
    r = [0.1, 0.55, -0.3]
    p = SkewParams(0.3, 0.3)
    assert abs(cf.v_depolarizing(r, 0.25, p) - cf.i_depolarizing(r, 0.25, p)) < 1e-15
    assert abs(cf.v_ad_nonunital(r, 0.8, p) - cf.i_ad_nonunital(r, 0.8, p)) < 1e-15


def test_depolarizing_monotone_in_strength():
    r = [0.3, 0.3, 0.5]
    p = SkewParams(0.25, 0.5)
    grid = np.linspace(0.0, 1.0 / 3.0, 15)
    for fn in (cf.i_depolarizing, cf.v_depolarizing):
        vals = [fn(r, float(x), p) for x in grid]
        assert all(b >= a for a, b in zip(vals, vals[1:]))


def test_rejects_invalid_inputs():
    with pytest.raises(InvariantViolation):
        cf.i_depolarizing([0.3, 0, 0], 0.5, P14)  # p > 1/3
    with pytest.raises(InvariantViolation):
        cf.i_bit_flip([0.3, 0, 0], 1.2, P14)
    with pytest.raises(InvariantViolation):
        cf.i_pauli([0.3, 0, 0], (0.5, 0.4, 0.3), P14)  # sums past 1
    with pytest.raises(InvariantViolation):
        cf.i_phase_flip([1.2, 0, 0], 0.3, P14)  # |r| > 1


def _oracle_pairs(rng):
    """(closed form value, kernel value) for every family at one draw."""
    r = random_bloch(rng)
    rho = from_bloch(r)
    params = random_params(rng)
    probs = rng.dirichlet(np.ones(4))
    p = float(rng.uniform(0.0, 1.0))
    pd = float(rng.uniform(0.0, 1.0 / 3.0))
    q = float(rng.uniform(0.0, 1.0))
    return [
        (cf.i_pauli(r, probs[1:], params),
         channel_skew_info(rho, pauli_channel(*probs), params)),
        (cf.i_depolarizing(r, pd, params),
         channel_skew_info(rho, depolarizing(pd), params)),
        (cf.i_bit_flip(r, p, params),
         channel_skew_info(rho, bit_flip(p), params)),
        (cf.i_phase_flip(r, p, params),
         channel_skew_info(rho, phase_flip(p), params)),
        (cf.i_ad_unital(r, q, params),
         channel_skew_info(rho, amplitude_damping_unital(q), params)),
        (cf.i_ad_nonunital(r, q, params),
         channel_skew_info(rho, amplitude_damping_nonunital(q), params)),
        (cf.v_pauli(r, probs[1:], params),
         channel_weighted_skew_info(rho, pauli_channel(*probs), params)),
        (cf.v_depolarizing(r, pd, params),
         channel_weighted_skew_info(rho, depolarizing(pd), params)),
        (cf.v_bit_flip(r, p, params),
         channel_weighted_skew_info(rho, bit_flip(p), params)),
        (cf.v_phase_flip(r, p, params),
         channel_weighted_skew_info(rho, phase_flip(p), params)),
        (cf.v_ad_unital(r, q, params),
         channel_weighted_skew_info(rho, amplitude_damping_unital(q), params)),
        (cf.v_ad_nonunital(r, q, params),
         channel_weighted_skew_info(rho, amplitude_damping_nonunital(q), params)),
    ]


def test_closed_forms_match_matrix_kernel():
    rng = np.random.default_rng(100)
    for _ in range(120):
        for closed, kernel in _oracle_pairs(rng):
            assert abs(closed - kernel) < 1e-10


def test_pure_state_boundary_is_finite_and_exact():
    rng = np.random.default_rng(101)
    for _ in range(20):
        v = rng.standard_normal(3)
        v /= np.linalg.norm(v)
        params = SkewParams(*np.array([0.3, 0.3]))
        rho = from_bloch(v)
        q = 0.65
        closed = cf.i_ad_nonunital(v, q, params)
        kernel = channel_skew_info(rho, amplitude_damping_nonunital(q), params)
        assert np.isfinite(closed)
        assert abs(closed - kernel) < 1e-12


def test_sum_rule_consistency_across_pauli_split():
    # pauli with all weight on one flip reproduces the dedicated forms
    r = [0.2, -0.6, 0.5]
    p = SkewParams(0.45, 0.3)
    assert cf.i_pauli(r, (0.7, 0, 0), p) == pytest.approx(cf.i_bit_flip(r, 0.7, p), abs=1e-15)
    assert cf.i_pauli(r, (0, 0, 0.7), p) == pytest.approx(cf.i_phase_flip(r, 0.7, p), abs=1e-15)
