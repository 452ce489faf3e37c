import numpy as np
import pytest

from skewcoh.channels import validate
from skewcoh.errors import InvariantViolation
from skewcoh.interferometer import (
    BEAM_SPLITTER,
    MIRROR,
    MachZehnderConfig,
    build_mz_channel,
    extremize_over_theta,
    interferometer_unitary,
    mz_skew_info,
    mz_sym_info,
    path_information,
    visibility,
)
from skewcoh.linalg import dagger, kron, partial_trace
from skewcoh.measures import SkewParams, channel_skew_info, channel_sym_info
from skewcoh.states import DensityMatrix, from_bloch, random_density, random_pure
from skewcoh.verification import random_bloch, random_unitary

I2 = np.eye(2, dtype=complex)


def config(rng, db=2, pure_external=True, theta=None):
    tau = random_density(db, int(rng.integers(0, 2**31)))
    det = random_unitary(rng, db)
    v = rng.standard_normal(3)
    v /= np.linalg.norm(v)
    if not pure_external:
        v = v * rng.uniform(0.1, 0.95)
    theta = float(rng.uniform(0, 2 * np.pi)) if theta is None else theta
    return MachZehnderConfig(tuple(v), tau, det, theta)


def test_config_validation():
    tau = random_density(2, 0)
    with pytest.raises(InvariantViolation):
        MachZehnderConfig((0, 0, 1), tau, np.diag([1.0, 0.5]), 0.0)  # not unitary
    with pytest.raises(InvariantViolation):
        MachZehnderConfig((0, 0, 1), tau, np.eye(3), 0.0)  # dim mismatch
    with pytest.raises(InvariantViolation):
        MachZehnderConfig((1, 1, 1), tau, I2, 0.0)  # |r| > 1


def test_trivial_detector_reduces_to_unitary_conjugation():
    # V = 1, theta = 0: the detector decouples and the channel is
    # conjugation by (beam splitter, mirror, beam splitter)
    rng = np.random.default_rng(0)
    tau = random_density(3, 5)
    cfg = MachZehnderConfig((0.3, -0.2, 0.4), tau, np.eye(3), 0.0)
    ch = build_mz_channel(cfg)
    u = BEAM_SPLITTER @ MIRROR @ BEAM_SPLITTER
    for seed in range(4):
        rho = random_density(2, seed)
        assert np.linalg.norm(ch.apply(rho) - u @ rho.matrix @ dagger(u)) < 1e-12


def test_channel_is_trace_preserving():
    rng = np.random.default_rng(1)
    for _ in range(5):
        cfg = config(rng, db=int(rng.integers(2, 4)))
        assert validate(build_mz_channel(cfg)).trace_preserving


def test_channel_matches_direct_partial_trace():
    rng = np.random.default_rng(2)
    for _ in range(5):
        db = int(rng.integers(2, 4))
        cfg = config(rng, db=db)
        ch = build_mz_channel(cfg)
        u = interferometer_unitary(cfg)
        rho = random_density(2, int(rng.integers(0, 100)))
        direct = partial_trace(u @ kron(rho.matrix, cfg.tau.matrix) @ dagger(u), 2, db, "a")
        assert np.linalg.norm(ch.apply(rho) - direct) < 1e-12


def test_kraus_list_drops_zero_weights():
    tau = random_pure(3, 7)  # rank one: only one tau eigenvector survives
    rng = np.random.default_rng(3)
    cfg = MachZehnderConfig((0, 0, 1), tau, random_unitary(rng, 3), 0.3)
    assert len(build_mz_channel(cfg)) == 3  # d_b Kraus ops, not d_b**2


def test_degenerate_tau_basis_freedom_is_harmless():
    # maximally mixed tau: any eigenbasis gives the same channel action
    rng = np.random.default_rng(4)
    det = random_unitary(rng, 2)
    tau_plain = DensityMatrix(I2 / 2)
    u = random_unitary(rng, 2)
    tau_rotated = DensityMatrix(u @ (I2 / 2) @ dagger(u))  # same matrix, new eigh call
    cfg_a = MachZehnderConfig((0.2, 0.5, -0.3), tau_plain, det, 1.1)
    cfg_b = MachZehnderConfig((0.2, 0.5, -0.3), tau_rotated, det, 1.1)
    ch_a, ch_b = build_mz_channel(cfg_a), build_mz_channel(cfg_b)
    for seed in range(4):
        rho = random_density(2, seed)
        assert np.linalg.norm(ch_a.apply(rho) - ch_b.apply(rho)) < 1e-12


# ---------------------------------------------------------------- closed forms

def test_maximally_mixed_external_state():
    rng = np.random.default_rng(5)
    tau = random_density(2, 8)
    cfg = MachZehnderConfig((0, 0, 0), tau, random_unitary(rng, 2), 0.7)
    for alpha in (0.0, 0.3, 0.5, 1.0):
        assert abs(mz_skew_info(cfg, alpha)) < 1e-14
        assert abs(mz_sym_info(cfg, alpha) - 1.0) < 1e-14


def test_closed_form_sum_is_one_for_every_theta():
    rng = np.random.default_rng(6)
    cfg = config(rng, pure_external=False)
    for theta in np.linspace(0, 2 * np.pi, 17):
        at = cfg.with_theta(float(theta))
        for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
            assert abs(mz_skew_info(at, alpha) + mz_sym_info(at, alpha) - 1.0) < 1e-12


def test_closed_form_matches_kernel_for_pure_states():
    rng = np.random.default_rng(7)
    for _ in range(10):
        db = int(rng.integers(2, 4))
        cfg = config(rng, db=db, pure_external=True)
        alpha = float(rng.uniform(0.0, 1.0))
        rho = from_bloch(cfg.bloch)
        ch = build_mz_channel(cfg)
        params = SkewParams(alpha, 1.0 - alpha)
        assert abs(channel_skew_info(rho, ch, params) - mz_skew_info(cfg, alpha)) < 1e-8
        assert abs(channel_sym_info(rho, ch, params) - mz_sym_info(cfg, alpha)) < 1e-8


def test_kernel_sum_is_one_even_for_mixed_states():
    # the channel is unital and trace preserving, so I + J = 1 at
    # alpha + beta = 1 regardless of the closed-form mismatch
    rng = np.random.default_rng(8)
    cfg = config(rng, pure_external=False)
    rho = from_bloch(cfg.bloch)
    ch = build_mz_channel(cfg)
    for alpha in (0.2, 0.5, 0.9):
        params = SkewParams(alpha, 1.0 - alpha)
        total = channel_skew_info(rho, ch, params) + channel_sym_info(rho, ch, params)
        assert abs(total - 1.0) < 1e-12


def test_alpha_symmetry_of_closed_form():
    rng = np.random.default_rng(9)
    cfg = config(rng)
    for alpha in (0.1, 0.35, 0.5):
        assert abs(mz_skew_info(cfg, alpha) - mz_skew_info(cfg, 1.0 - alpha)) < 1e-13


# ---------------------------------------------------------------- extrema and duality

def test_path_information_examples():
    # pure +z external state with |Tr(V tau)| = 1: no which-path information
    tau = DensityMatrix(np.diag([1.0, 0.0]).astype(complex))
    cfg = MachZehnderConfig((0, 0, 1), tau, I2, 0.0)
    for alpha in (0.25, 0.5, 0.75):
        assert abs(path_information(cfg, alpha)) < 1e-13
        assert abs(visibility(cfg, alpha) - 1.0) < 1e-13


def test_path_information_of_maximally_mixed():
    rng = np.random.default_rng(10)
    cfg = MachZehnderConfig((0, 0, 0), random_density(2, 3), random_unitary(rng, 2), 0.0)
    assert abs(path_information(cfg, 0.5)) < 1e-13
    assert abs(visibility(cfg, 0.5) - 1.0) < 1e-13


def test_duality_identity():
    rng = np.random.default_rng(11)
    for _ in range(15):
        cfg = config(rng, db=int(rng.integers(2, 4)), pure_external=bool(rng.integers(0, 2)))
        for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
            assert abs(path_information(cfg, alpha) + visibility(cfg, alpha) - 1.0) < 1e-10


def test_grid_extremization_matches_closed_forms():
    rng = np.random.default_rng(12)
    for _ in range(3):
        cfg = config(rng)
        alpha = float(rng.uniform(0.1, 0.9))
        theta_min, low = extremize_over_theta(
            lambda t: mz_skew_info(cfg.with_theta(t), alpha), minimize=True)
        theta_max, high = extremize_over_theta(
            lambda t: mz_sym_info(cfg.with_theta(t), alpha), minimize=False)
        assert abs(low - path_information(cfg, alpha)) < 1e-8
        assert abs(high - visibility(cfg, alpha)) < 1e-8
        # I and J are complementary, so their extremizers coincide
        assert abs((theta_min - theta_max + np.pi) % (2 * np.pi) - np.pi) < 1e-4


def test_kernel_extremum_matches_closed_form_min_for_pure_state():
    # numeric minimization of the matrix kernel over theta lands on the
    # closed-form which-path information when the external state is pure
    rng = np.random.default_rng(13)
    cfg = config(rng, pure_external=True)
    alpha = 0.4
    rho = from_bloch(cfg.bloch)
    params = SkewParams(alpha, 1.0 - alpha)

    def kernel_at(theta):
        return channel_skew_info(rho, build_mz_channel(cfg.with_theta(theta)), params)

    _, low = extremize_over_theta(kernel_at, minimize=True, n_grid=180)
    assert abs(low - path_information(cfg, alpha)) < 1e-8
