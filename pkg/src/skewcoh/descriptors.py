"""JSON descriptors for states, channels and interferometer configs.

Complex matrices travel as nested lists of [re, im] pairs:
[[[re, im], ...], ...], row major. States are either
{"bloch": [r1, r2, r3]} or {"matrix": <complex matrix>}; channels are
{"name": <zoo name>, "params": {...}} or {"kraus": [<complex matrix>, ...]}.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from . import channels
from .errors import DescriptorError, InvariantViolation
from .interferometer import MachZehnderConfig
from .states import SIGMA_1, SIGMA_2, SIGMA_3, DensityMatrix, from_bloch


def complex_matrix_to_json(m: np.ndarray) -> list:
    return [[[float(x.real), float(x.imag)] for x in row] for row in np.asarray(m, dtype=complex)]


def complex_matrix_from_json(rows: Any, what: str = "matrix") -> np.ndarray:
    try:
        arr = np.asarray(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DescriptorError(f"{what}: expected nested [re, im] lists: {exc}") from None
    if arr.ndim != 3 or arr.shape[2] != 2 or arr.shape[0] != arr.shape[1]:
        raise DescriptorError(
            f"{what}: expected shape (n, n, 2) of [re, im] pairs, got {arr.shape}")
    return arr[:, :, 0] + 1j * arr[:, :, 1]


def _load_obj(source: Any, what: str) -> dict:
    if isinstance(source, str):
        try:
            source = json.loads(source)
        except json.JSONDecodeError as exc:
            raise DescriptorError(f"{what}: invalid JSON: {exc}") from None
    if not isinstance(source, dict):
        raise DescriptorError(f"{what}: expected a JSON object, got {type(source).__name__}")
    return source


def state_from_json(source: Any) -> DensityMatrix:
    obj = _load_obj(source, "state descriptor")
    if "bloch" in obj:
        v = obj["bloch"]
        if not isinstance(v, (list, tuple)) or len(v) != 3:
            raise DescriptorError("state descriptor: 'bloch' must be a 3-list")
        return from_bloch([float(x) for x in v])
    if "matrix" in obj:
        return DensityMatrix(complex_matrix_from_json(obj["matrix"], "state matrix"))
    raise DescriptorError("state descriptor needs 'bloch' or 'matrix'")


_SCALAR_CHANNELS = {
    "depolarizing": ("p", channels.depolarizing),
    "bit_flip": ("p", channels.bit_flip),
    "phase_flip": ("p", channels.phase_flip),
    "ad_unital": ("q", channels.amplitude_damping_unital),
    "ad_nonunital": ("q", channels.amplitude_damping_nonunital),
}


def channel_from_json(source: Any) -> channels.KrausChannel:
    obj = _load_obj(source, "channel descriptor")
    if "kraus" in obj:
        if not isinstance(obj["kraus"], list) or not obj["kraus"]:
            raise DescriptorError("channel descriptor: 'kraus' must be a nonempty list")
        ops = [complex_matrix_from_json(k, f"kraus[{i}]") for i, k in enumerate(obj["kraus"])]
        return channels.KrausChannel(ops, label="custom")
    name = obj.get("name")
    params = obj.get("params", {})
    if not isinstance(params, dict):
        raise DescriptorError("channel descriptor: 'params' must be an object")
    if name == "pauli":
        probs = params.get("probs")
        if not isinstance(probs, list) or len(probs) != 4:
            raise DescriptorError("pauli channel needs params.probs = [p0, p1, p2, p3]")
        return channels.pauli_channel(*(float(p) for p in probs))
    if name in _SCALAR_CHANNELS:
        key, ctor = _SCALAR_CHANNELS[name]
        if key not in params:
            raise DescriptorError(f"channel '{name}' needs params.{key}")
        return ctor(float(params[key]))
    if name == "twirl_z2":
        return channels.group_twirl([np.eye(2, dtype=complex), SIGMA_3])
    if name == "twirl_pauli":
        return channels.group_twirl(
            [np.eye(2, dtype=complex), SIGMA_1, SIGMA_2, SIGMA_3])
    raise DescriptorError(f"unknown channel name {name!r}")


def scalar_channel_builder(name: str):
    """Constructor for the named one-parameter channel, used by sweeps."""
    if name not in _SCALAR_CHANNELS:
        raise DescriptorError(
            f"channel {name!r} is not strength-parameterized; sweep needs one of "
            f"{sorted(_SCALAR_CHANNELS)}")
    return _SCALAR_CHANNELS[name][1]


def mz_config_from_json(source: Any) -> tuple[MachZehnderConfig, float, int]:
    """Parse {"bloch", "tau", "V", "alpha", "theta_grid"} into a config
    (theta = 0) plus the exponent and grid size."""
    obj = _load_obj(source, "interferometer config")
    for key in ("bloch", "tau", "V", "alpha"):
        if key not in obj:
            raise DescriptorError(f"interferometer config needs '{key}'")
    v = obj["bloch"]
    if not isinstance(v, (list, tuple)) or len(v) != 3:
        raise DescriptorError("interferometer config: 'bloch' must be a 3-list")
    tau = state_from_json(obj["tau"])
    det = complex_matrix_from_json(obj["V"], "path detector")
    alpha = float(obj["alpha"])
    if not 0.0 <= alpha <= 1.0:
        raise InvariantViolation(f"alpha {alpha} outside [0, 1]")
    n_grid = int(obj.get("theta_grid", 360))
    if n_grid < 1:
        raise DescriptorError("theta_grid must be >= 1")
    cfg = MachZehnderConfig(tuple(float(x) for x in v), tau, det, theta=0.0)
    return cfg, alpha, n_grid
