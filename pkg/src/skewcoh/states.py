"""Validated density matrices, Bloch-sphere constructors and seeded
random-state generation."""

from __future__ import annotations

import numpy as np

from .errors import InvariantViolation
from .linalg import (
    EigenSystem,
    as_matrix,
    clamp_spectrum,
    dagger,
    is_hermitian,
    power_from_eig,
)

TRACE_TOL = 1e-10
BLOCH_TOL = 1e-12

SIGMA_0 = np.eye(2, dtype=complex)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_0, SIGMA_1, SIGMA_2, SIGMA_3)


class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace matrix with a cached
    eigendecomposition.

    The cache drives every fractional power. Constructors that know the
    spectrum analytically (``from_bloch``, ``random_pure``) snap the cached
    eigenvalues to their exact values: ``x**t`` is not Lipschitz at x = 0,
    so a stray 1e-16 eigenvalue from the factorization would otherwise
    pollute rank-deficient powers at the 1e-4 level.
    """

    __slots__ = ("matrix", "eig", "dim")

    def __init__(self, matrix, eig: EigenSystem | None = None):
        m = as_matrix(matrix).copy()
        if not is_hermitian(m):
            raise InvariantViolation("density matrix is not Hermitian within tolerance")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise InvariantViolation(f"density matrix trace {tr:.12g} != 1")
        if eig is None:
            w, u = np.linalg.eigh(0.5 * (m + dagger(m)))
            eig = EigenSystem(clamp_spectrum(w), u)
        else:
            eig = EigenSystem(clamp_spectrum(eig.eigenvalues), eig.eigenvectors.copy())
        m.setflags(write=False)
        eig.eigenvalues.setflags(write=False)
        eig.eigenvectors.setflags(write=False)
        self.matrix = m
        self.eig = eig
        self.dim = m.shape[0]

    def power(self, t: float) -> np.ndarray:
        """rho**t from the cached eigendecomposition (0**0 = 1)."""
        return power_from_eig(self.eig, t)

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.eig.eigenvalues

    def bloch_vector(self) -> np.ndarray:
        """(r1, r2, r3) with rj = Tr(rho sigma_j); qubit states only."""
        if self.dim != 2:
            raise InvariantViolation("Bloch vector is defined for qubits only")
        return np.array([np.trace(self.matrix @ s).real for s in PAULI[1:]])

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim})"


def _bloch_norm(r) -> tuple[np.ndarray, float]:
    v = np.asarray(r, dtype=float)
    if v.shape != (3,):
        raise InvariantViolation(f"Bloch vector must have 3 components, got shape {v.shape}")
    n = float(np.linalg.norm(v))
    if n > 1.0 + BLOCH_TOL:
        raise InvariantViolation(f"Bloch vector norm {n:.12g} exceeds 1")
    return v, n


def bloch_eigenvalues(r) -> tuple[float, float]:
    """Eigenvalues ((1-|r|)/2, (1+|r|)/2) of the qubit state with Bloch vector r.

    Norm rounding can push |r| past 1 by ~1e-16; the lower eigenvalue is
    clamped at 0 so fractional powers stay real.
    """
    _, n = _bloch_norm(r)
    return max(0.0, (1.0 - n) / 2.0), (1.0 + n) / 2.0


def from_bloch(r) -> DensityMatrix:
    """Qubit state (1 + r.sigma)/2 with eigenvalues snapped to (1 -+ |r|)/2."""
    v, _ = _bloch_norm(r)
    m = 0.5 * (SIGMA_0 + v[0] * SIGMA_1 + v[1] * SIGMA_2 + v[2] * SIGMA_3)
    _, u = np.linalg.eigh(m)
    lo, hi = bloch_eigenvalues(v)
    return DensityMatrix(m, EigenSystem(np.array([lo, hi]), u))


def random_density(dim: int, seed: int) -> DensityMatrix:
    """Full-rank random state G G^dag / Tr(G G^dag) from a seeded complex
    Gaussian G (Hilbert-Schmidt ensemble); deterministic per seed."""
    if dim < 1:
        raise InvariantViolation("dimension must be >= 1")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = g @ dagger(g)
    return DensityMatrix(m / np.trace(m).real)


def random_pure(dim: int, seed: int) -> DensityMatrix:
    """Rank-one projector onto a seeded Gaussian-normalized vector.

    The cached spectrum is snapped to (0, ..., 0, 1) exactly.
    """
    if dim < 1:
        raise InvariantViolation("dimension must be >= 1")
    rng = np.random.default_rng(seed)
    psi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    psi /= np.linalg.norm(psi)
    m = np.outer(psi, psi.conj())
    _, u = np.linalg.eigh(m)
    w = np.zeros(dim)
    w[-1] = 1.0
    return DensityMatrix(m, EigenSystem(w, u))
