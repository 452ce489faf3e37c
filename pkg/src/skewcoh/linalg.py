"""Dense complex matrix arithmetic and Hermitian functional calculus.

Everything downstream (states, channels, measures) is built on the
half-bracket convention [X,Y] = (XY - YX)/2, {X,Y} = (XY + YX)/2 and on
fractional matrix powers evaluated by eigendecomposition with the
convention 0**0 = 1, so that rho**0 is the full identity even for
rank-deficient states.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import InvariantViolation

HERMITIAN_TOL = 1e-10
EIGENVALUE_FLOOR = -1e-10


class EigenSystem(NamedTuple):
    """Ascending eigenvalues and the unitary matrix of column eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_matrix(a) -> np.ndarray:
    """Coerce input to a square complex matrix with finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise InvariantViolation(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvariantViolation("matrix has non-finite entries")
    return m


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a).conj().T


def _check_same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise InvariantViolation(f"dimension mismatch: {a.shape} vs {b.shape}")


def half_commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(AB - BA)/2."""
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    return 0.5 * (a @ b - b @ a)


def half_anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """(AB + BA)/2."""
    a, b = as_matrix(a), as_matrix(b)
    _check_same_dim(a, b)
    return 0.5 * (a @ b + b @ a)


def is_hermitian(a: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    """Frobenius distance to the adjoint below tol."""
    m = as_matrix(a)
    return float(np.linalg.norm(m - dagger(m))) <= tol


def hermitian_eig(a) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    The input is hermitized before factorization, so the reconstruction
    U diag(w) U^dag agrees with the Hermitian part of the input to
    machine precision. Deterministic for identical input.
    """
    m = as_matrix(a)
    if not is_hermitian(m):
        raise InvariantViolation("matrix is not Hermitian within tolerance")
    w, u = np.linalg.eigh(0.5 * (m + dagger(m)))
    return EigenSystem(w, u)


def clamp_spectrum(w: np.ndarray) -> np.ndarray:
    """Zero eigenvalues in [EIGENVALUE_FLOOR, 0); reject anything below."""
    w = np.asarray(w, dtype=float)
    if w.size and float(w.min()) < EIGENVALUE_FLOOR:
        raise InvariantViolation(f"negative eigenvalue {w.min():.3e} below floor")
    return np.clip(w, 0.0, None)


def power_from_eig(eig: EigenSystem, t: float) -> np.ndarray:
    """U diag(w**t) U^dag with the 0**0 = 1 convention.

    Exponents outside [0, 1] are rejected: negative powers of singular
    spectra are undefined here and nothing in the package needs t > 1.
    """
    if not 0.0 <= t <= 1.0:
        raise InvariantViolation(f"matrix power exponent {t} outside [0, 1]")
    w = clamp_spectrum(eig.eigenvalues)
    u = eig.eigenvectors
    return (u * w**t) @ dagger(u)


def matrix_power(rho, t: float) -> np.ndarray:
    """Fractional power of a Hermitian PSD matrix via functional calculus."""
    return power_from_eig(hermitian_eig(rho), t)


def kron(a, b) -> np.ndarray:
    """Kronecker product."""
    return np.kron(as_matrix(a), as_matrix(b))


def partial_trace(m, dim_a: int, dim_b: int, keep: str = "a") -> np.ndarray:
    """Trace out one tensor factor of a (dim_a*dim_b)-dimensional matrix.

    keep="a" returns the dim_a x dim_a reduction, keep="b" the dim_b one.
    The total trace is preserved.
    """
    m = as_matrix(m)
    if dim_a < 1 or dim_b < 1 or m.shape[0] != dim_a * dim_b:
        raise InvariantViolation(
            f"cannot factor dimension {m.shape[0]} as {dim_a} x {dim_b}")
    t = m.reshape(dim_a, dim_b, dim_a, dim_b)
    if keep == "a":
        return np.einsum("ibjb->ij", t)
    if keep == "b":
        return np.einsum("aiaj->ij", t)
    raise InvariantViolation(f"keep must be 'a' or 'b', got {keep!r}")


def hs_norm_sq(a) -> float:
    """Squared Hilbert-Schmidt norm: sum of squared entry moduli = Tr(A^dag A)."""
    m = as_matrix(a)
    return float(np.vdot(m, m).real)
