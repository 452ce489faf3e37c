import json

import numpy as np
import pytest

from skewcoh.descriptors import (
    channel_from_json,
    complex_matrix_from_json,
    complex_matrix_to_json,
    mz_config_from_json,
    scalar_channel_builder,
    state_from_json,
)
from skewcoh.errors import DescriptorError, InvariantViolation
from skewcoh.states import from_bloch


def test_complex_matrix_roundtrip():
    rng = np.random.default_rng(0)
    m = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    assert np.array_equal(complex_matrix_from_json(complex_matrix_to_json(m)), m)


def test_complex_matrix_shape_errors():
    with pytest.raises(DescriptorError):
        complex_matrix_from_json([[1.0, 2.0], [3.0, 4.0]])
    with pytest.raises(DescriptorError):
        complex_matrix_from_json([[[1.0, 0.0]], [[0.0, 1.0]]])


def test_state_from_bloch_descriptor():
    rho = state_from_json('{"bloch": [0.3, 0.0, -0.4]}')
    assert np.allclose(rho.matrix, from_bloch([0.3, 0, -0.4]).matrix, atol=1e-15)


def test_state_from_matrix_descriptor():
    obj = {"matrix": complex_matrix_to_json(np.diag([0.25, 0.75]))}
    rho = state_from_json(json.dumps(obj))
    assert np.allclose(rho.matrix, np.diag([0.25, 0.75]), atol=1e-15)


def test_state_descriptor_errors():
    with pytest.raises(DescriptorError):
        state_from_json('{"wrong": 1}')
    with pytest.raises(DescriptorError):
        state_from_json("not json")
    with pytest.raises(InvariantViolation):
        state_from_json('{"bloch": [1.0, 1.0, 1.0]}')


def test_named_channels():
    for name, params in [
        ("depolarizing", {"p": 0.1}),
        ("bit_flip", {"p": 0.4}),
        ("phase_flip", {"p": 0.4}),
        ("ad_unital", {"q": 0.5}),
        ("ad_nonunital", {"q": 0.5}),
        ("pauli", {"probs": [0.4, 0.3, 0.2, 0.1]}),
        ("twirl_z2", {}),
        ("twirl_pauli", {}),
    ]:
        ch = channel_from_json(json.dumps({"name": name, "params": params}))
        assert ch.dim == 2


def test_raw_kraus_channel():
    ops = [complex_matrix_to_json(np.sqrt(0.5) * np.eye(2)),
           complex_matrix_to_json(np.sqrt(0.5) * np.array([[1, 0], [0, -1]]))]
    ch = channel_from_json(json.dumps({"kraus": ops}))
    assert len(ch) == 2 and ch.label == "custom"


def test_channel_descriptor_errors():
    with pytest.raises(DescriptorError):
        channel_from_json('{"name": "unknown"}')
    with pytest.raises(DescriptorError):
        channel_from_json('{"name": "depolarizing", "params": {}}')
    with pytest.raises(DescriptorError):
        channel_from_json('{"name": "pauli", "params": {"probs": [1, 0]}}')
    with pytest.raises(InvariantViolation):
        channel_from_json('{"name": "depolarizing", "params": {"p": 0.9}}')


def test_scalar_channel_builder_rejects_fixed_channels():
    assert scalar_channel_builder("phase_flip")(0.3).label == "phase_flip"
    with pytest.raises(DescriptorError):
        scalar_channel_builder("pauli")
    with pytest.raises(DescriptorError):
        scalar_channel_builder("twirl_z2")


def test_mz_config_parsing():
    obj = {
        "bloch": [0.0, 0.0, 1.0],
        "tau": {"matrix": complex_matrix_to_json(np.diag([1.0, 0.0]))},
        "V": complex_matrix_to_json(np.eye(2)),
        "alpha": 0.5,
        "theta_grid": 16,
    }
    cfg, alpha, n_grid = mz_config_from_json(json.dumps(obj))
    assert alpha == 0.5 and n_grid == 16
    assert cfg.tau.dim == 2
    with pytest.raises(DescriptorError):
        mz_config_from_json(json.dumps({k: v for k, v in obj.items() if k != "V"}))
    bad = dict(obj)
    bad["alpha"] = 1.5
    with pytest.raises(InvariantViolation):
        mz_config_from_json(json.dumps(bad))
