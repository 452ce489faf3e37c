"""Kraus-form quantum channels: the standard qubit zoo, finite-group
twirls, validation flags and the transformations needed by the
measure-property suites.

A channel here is completely positive and trace nonincreasing; the
trace-preserving and unital cases are detected by :func:`validate`
rather than assumed.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .errors import InvariantViolation
from .linalg import as_matrix, dagger, kron
from .states import PAULI

UNITARY_TOL = 1e-10
PROBABILITY_TOL = 1e-12


class KrausChannel:
    """Ordered list of equal-dimension Kraus operators K_i defining
    Phi(rho) = sum_i K_i rho K_i^dag."""

    __slots__ = ("kraus_ops", "dim", "label")

    def __init__(self, kraus_ops: Sequence, label: str = "custom"):
        ops = tuple(as_matrix(k).copy() for k in kraus_ops)
        if not ops:
            raise InvariantViolation("a channel needs at least one Kraus operator")
        dim = ops[0].shape[0]
        for k in ops:
            if k.shape[0] != dim:
                raise InvariantViolation("Kraus operators must share one dimension")
            k.setflags(write=False)
        gram = sum(dagger(k) @ k for k in ops)
        top = float(np.linalg.eigvalsh(0.5 * (gram + dagger(gram))).max())
        if top > 1.0 + UNITARY_TOL:
            raise InvariantViolation(
                f"trace increasing: max eigenvalue of sum K^dag K is {top:.12g}")
        self.kraus_ops = ops
        self.dim = dim
        self.label = label

    def apply(self, rho) -> np.ndarray:
        """Phi(rho) = sum_i K_i rho K_i^dag."""
        m = as_matrix(getattr(rho, "matrix", rho))
        if m.shape[0] != self.dim:
            raise InvariantViolation(
                f"state dimension {m.shape[0]} != channel dimension {self.dim}")
        return sum(k @ m @ dagger(k) for k in self.kraus_ops)

    def adjoint_apply(self, x) -> np.ndarray:
        """Dual map Phi^dag(X) = sum_i K_i^dag X K_i."""
        m = as_matrix(getattr(x, "matrix", x))
        if m.shape[0] != self.dim:
            raise InvariantViolation(
                f"operator dimension {m.shape[0]} != channel dimension {self.dim}")
        return sum(dagger(k) @ m @ k for k in self.kraus_ops)

    def __len__(self) -> int:
        return len(self.kraus_ops)

    def __repr__(self) -> str:
        return f"KrausChannel({self.label!r}, dim={self.dim}, n_kraus={len(self)})"


class ChannelFlags(NamedTuple):
    trace_preserving: bool
    unital: bool
    trace_nonincreasing: bool


def validate(ch: KrausChannel, tol: float = UNITARY_TOL) -> ChannelFlags:
    """Trace-preservation, unitality and trace-nonincrease flags."""
    eye = np.eye(ch.dim)
    gram = sum(dagger(k) @ k for k in ch.kraus_ops)
    cogram = sum(k @ dagger(k) for k in ch.kraus_ops)
    tp = float(np.linalg.norm(gram - eye)) <= tol
    unital = float(np.linalg.norm(cogram - eye)) <= tol
    top = float(np.linalg.eigvalsh(0.5 * (gram + dagger(gram))).max())
    return ChannelFlags(tp, unital, top <= 1.0 + tol)


def identity_channel(dim: int = 2) -> KrausChannel:
    return KrausChannel([np.eye(dim, dtype=complex)], label="identity")


def pauli_channel(p0: float, p1: float, p2: float, p3: float,
                  label: str = "pauli") -> KrausChannel:
    """Kraus operators sqrt(p_j) sigma_j for a probability vector p."""
    probs = np.array([p0, p1, p2, p3], dtype=float)
    if probs.min() < -PROBABILITY_TOL:
        raise InvariantViolation(f"negative Pauli probability in {probs}")
    if abs(probs.sum() - 1.0) > PROBABILITY_TOL:
        raise InvariantViolation(f"Pauli probabilities sum to {probs.sum():.12g} != 1")
    probs = np.clip(probs, 0.0, None)
    ops = [np.sqrt(p) * s for p, s in zip(probs, PAULI)]
    return KrausChannel(ops, label=label)


def depolarizing(p: float) -> KrausChannel:
    """Pauli channel with p1 = p2 = p3 = p and p0 = 1 - 3p, so 0 <= p <= 1/3."""
    if not -PROBABILITY_TOL <= p <= 1.0 / 3.0 + PROBABILITY_TOL:
        raise InvariantViolation(f"depolarizing strength {p} outside [0, 1/3]")
    return pauli_channel(1.0 - 3.0 * p, p, p, p, label="depolarizing")


def bit_flip(p: float) -> KrausChannel:
    if not -PROBABILITY_TOL <= p <= 1.0 + PROBABILITY_TOL:
        raise InvariantViolation(f"bit-flip probability {p} outside [0, 1]")
    return pauli_channel(1.0 - p, p, 0.0, 0.0, label="bit_flip")


def phase_flip(p: float) -> KrausChannel:
    if not -PROBABILITY_TOL <= p <= 1.0 + PROBABILITY_TOL:
        raise InvariantViolation(f"phase-flip probability {p} outside [0, 1]")
    return pauli_channel(1.0 - p, 0.0, 0.0, p, label="phase_flip")


def amplitude_damping_unital(q: float) -> KrausChannel:
    """Diagonal-Kraus damping: K1 = |0><0| + sqrt(1-q)|1><1|, K2 = sqrt(q)|1><1|."""
    if not 0.0 <= q <= 1.0:
        raise InvariantViolation(f"damping strength {q} outside [0, 1]")
    k1 = np.diag([1.0, np.sqrt(1.0 - q)]).astype(complex)
    k2 = np.diag([0.0, np.sqrt(q)]).astype(complex)
    return KrausChannel([k1, k2], label="ad_unital")


def amplitude_damping_nonunital(q: float) -> KrausChannel:
    """Standard amplitude damping: K1 as above, K2 = sqrt(q)|0><1|."""
    if not 0.0 <= q <= 1.0:
        raise InvariantViolation(f"damping strength {q} outside [0, 1]")
    k1 = np.diag([1.0, np.sqrt(1.0 - q)]).astype(complex)
    k2 = np.zeros((2, 2), dtype=complex)
    k2[0, 1] = np.sqrt(q)
    return KrausChannel([k1, k2], label="ad_nonunital")


def group_twirl(unitaries: Sequence) -> KrausChannel:
    """Averaging channel rho -> (1/|G|) sum_g U(g) rho U(g)^dag."""
    mats = [as_matrix(u) for u in unitaries]
    if not mats:
        raise InvariantViolation("twirl needs at least one unitary")
    dim = mats[0].shape[0]
    eye = np.eye(dim)
    for u in mats:
        if u.shape[0] != dim:
            raise InvariantViolation("twirl unitaries must share one dimension")
        if float(np.linalg.norm(dagger(u) @ u - eye)) > UNITARY_TOL:
            raise InvariantViolation("twirl element is not unitary within tolerance")
    scale = 1.0 / np.sqrt(len(mats))
    return KrausChannel([scale * u for u in mats], label="twirl")


def remix_kraus(ch: KrausChannel, w) -> KrausChannel:
    """Re-express the channel through an isometry on the Kraus index.

    w is m x n with w^dag w = 1_n and n = len(ch); the new operators
    K'_j = sum_i w[j, i] K_i generate the same map.
    """
    w = np.asarray(w, dtype=complex)
    n = len(ch.kraus_ops)
    if w.ndim != 2 or w.shape[1] != n:
        raise InvariantViolation(f"remix matrix must have {n} columns, got {w.shape}")
    if w.shape[0] < n:
        raise InvariantViolation("remix matrix cannot shrink the Kraus index")
    if float(np.linalg.norm(dagger(w) @ w - np.eye(n))) > UNITARY_TOL:
        raise InvariantViolation("remix matrix is not an isometry")
    stack = np.stack(ch.kraus_ops)
    new_ops = np.einsum("ji,iab->jab", w, stack)
    return KrausChannel(list(new_ops), label=ch.label)


def tensor_with_identity(ch: KrausChannel, dim_b: int) -> KrausChannel:
    """Extend the channel to act as Phi x 1 on an appended dim_b factor."""
    if dim_b < 1:
        raise InvariantViolation("ancilla dimension must be >= 1")
    eye = np.eye(dim_b, dtype=complex)
    return KrausChannel([kron(k, eye) for k in ch.kraus_ops],
                        label=f"{ch.label}_x_id{dim_b}")


def choi_matrix(ch: KrausChannel) -> np.ndarray:
    """sum_{kl} |k><l| x Phi(|k><l|), positive semidefinite for any Kraus list."""
    d = ch.dim
    c = np.zeros((d * d, d * d), dtype=complex)
    for k in range(d):
        for l in range(d):
            e = np.zeros((d, d), dtype=complex)
            e[k, l] = 1.0
            c[k * d:(k + 1) * d, l * d:(l + 1) * d] = ch.apply(e)
    return c
