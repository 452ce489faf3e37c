"""Analytic qubit expressions for the channel skew informations.

Two families, one per measure: i_* evaluates the commutator quantity I
and v_* the weighted quantity V, for the Pauli, depolarizing, bit-flip,
phase-flip and both amplitude-damping channels acting on the qubit state
with Bloch vector r.

Shared notation, with l1 = (1-|r|)/2 <= l2 = (1+|r|)/2 and 0**0 = 1:

    A(t) = l1**t - l2**t,   S(t) = l1**t + l2**t.

Every formula carries the product A(a)*A(b) (i_*) or (A(a)+A(b))**2 / 4
(v_*), which vanishes for the maximally mixed state; the r_j**2/|r|**2
coefficients then have a removable singularity at |r| = 0, so all
functions return exactly 0 below |r| = 1e-12. These are the fast scalar
paths; the matrix kernel in :mod:`skewcoh.measures` is the reference
they are tested against.
"""

from __future__ import annotations

import numpy as np

from .errors import InvariantViolation
from .measures import SkewParams, _exp
from .states import bloch_eigenvalues

DEGENERATE_NORM = 1e-12


def _spectral_factors(r, params: SkewParams):
    """(|r|, A(a)*A(b), (A(a)+A(b))**2/4, S(1-a-b), A(1-a-b))."""
    v = np.asarray(r, dtype=float)
    l1, l2 = bloch_eigenvalues(v)
    n = float(np.linalg.norm(v))
    a, b, c = _exp(params.alpha), _exp(params.beta), params.tail
    aa = (l1**a - l2**a) * (l1**b - l2**b)
    ww = 0.25 * ((l1**a - l2**a) + (l1**b - l2**b)) ** 2
    return n, aa, ww, l1**c + l2**c, l1**c - l2**c


def _check_prob(p: float, hi: float = 1.0, name: str = "probability") -> float:
    if not -1e-12 <= p <= hi + 1e-12:
        raise InvariantViolation(f"{name} {p} outside [0, {hi:g}]")
    return float(p)


def i_pauli(r, probs, params: SkewParams) -> float:
    """I for the Pauli channel with flip probabilities (p1, p2, p3)."""
    p1, p2, p3 = (float(x) for x in probs)
    if min(p1, p2, p3) < -1e-12 or p1 + p2 + p3 > 1.0 + 1e-12:
        raise InvariantViolation(f"invalid Pauli probabilities ({p1}, {p2}, {p3})")
    n, aa, _, s, _ = _spectral_factors(r, params)
    if n < DEGENERATE_NORM:
        return 0.0
    v = np.asarray(r, dtype=float)
    coeff = sum(p * (n**2 - rj**2) / n**2 for p, rj in zip((p1, p2, p3), v))
    return 0.25 * coeff * aa * s


def i_depolarizing(r, p: float, params: SkewParams) -> float:
    """I for the depolarizing channel; increasing in p on [0, 1/3]."""
    p = _check_prob(p, 1.0 / 3.0, "depolarizing strength")
    n, aa, _, s, _ = _spectral_factors(r, params)
    if n < DEGENERATE_NORM:
        return 0.0
    return 0.5 * p * aa * s


def i_bit_flip(r, p: float, params: SkewParams) -> float:
    p = _check_prob(p)
    n, aa, _, s, _ = _spectral_factors(r, params)
    if n < DEGENERATE_NORM:
        return 0.0
    v = np.asarray(r, dtype=float)
    return 0.25 * p * (v[1]**2 + v[2]**2) / n**2 * aa * s


def i_phase_flip(r, p: float, params: SkewParams) -> float:
    p = _check_prob(p)
    n, aa, _, s, _ = _spectral_factors(r, params)
    if n < DEGENERATE_NORM:
        return 0.0
    v = np.asarray(r, dtype=float)
    return 0.25 * p * (v[0]**2 + v[1]**2) / n**2 * aa * s


def i_ad_unital(r, q: float, params: SkewParams) -> float:
    """I for the diagonal-Kraus (unital) amplitude damping channel."""
    q = _check_prob(q, name="damping strength")
    n, aa, _, s, _ = _spectral_factors(r, params)
    if n < DEGENERATE_NORM:
        return 0.0
    v = np.asarray(r, dtype=float)
    coeff = (1.0 - np.sqrt(1.0 - q)) * (v[0]**2 + v[1]**2) / (2.0 * n**2)
    return 0.25 * coeff * aa * s


def i_ad_nonunital(r, q: float, params: SkewParams) -> float:
    """I for standard (nonunital) amplitude damping; the A(1-a-b) term is
    odd in r3, matching decay toward |0><0|."""
    q = _check_prob(q, name="damping strength")
    n, aa, _, s, d = _spectral_factors(r, params)
    if n < DEGENERATE_NORM:
        return 0.0
    v = np.asarray(r, dtype=float)
    even = ((1.0 - np.sqrt(1.0 - q)) * (v[0]**2 + v[1]**2) + q * v[2]**2) / (2.0 * n**2)
    odd = q * v[2] / (2.0 * n)
    return 0.25 * (even * s + odd * d) * aa


def v_pauli(r, probs, params: SkewParams) -> float:
    """V for the Pauli channel with flip probabilities (p1, p2, p3)."""
    p1, p2, p3 = (float(x) for x in probs)
    if min(p1, p2, p3) < -1e-12 or p1 + p2 + p3 > 1.0 + 1e-12:
        raise InvariantViolation(f"invalid Pauli probabilities ({p1}, {p2}, {p3})")
    n, _, ww, s, _ = _spectral_factors(r, params)
    if n < DEGENERATE_NORM:
        return 0.0
    v = np.asarray(r, dtype=float)
    coeff = sum(p * (n**2 - rj**2) / n**2 for p, rj in zip((p1, p2, p3), v))
    return 0.25 * coeff * ww * s


def v_depolarizing(r, p: float, params: SkewParams) -> float:
    p = _check_prob(p, 1.0 / 3.0, "depolarizing strength")
    n, _, ww, s, _ = _spectral_factors(r, params)
    if n < DEGENERATE_NORM:
        return 0.0
    return 0.5 * p * ww * s


def v_bit_flip(r, p: float, params: SkewParams) -> float:
    p = _check_prob(p)
    n, _, ww, s, _ = _spectral_factors(r, params)
    if n < DEGENERATE_NORM:
        return 0.0
    v = np.asarray(r, dtype=float)
    return 0.25 * p * (v[1]**2 + v[2]**2) / n**2 * ww * s


def v_phase_flip(r, p: float, params: SkewParams) -> float:
    p = _check_prob(p)
    n, _, ww, s, _ = _spectral_factors(r, params)
    if n < DEGENERATE_NORM:
        return 0.0
    v = np.asarray(r, dtype=float)
    return 0.25 * p * (v[0]**2 + v[1]**2) / n**2 * ww * s


def v_ad_unital(r, q: float, params: SkewParams) -> float:
    q = _check_prob(q, name="damping strength")
    n, _, ww, s, _ = _spectral_factors(r, params)
    if n < DEGENERATE_NORM:
        return 0.0
    v = np.asarray(r, dtype=float)
    coeff = (1.0 - np.sqrt(1.0 - q)) * (v[0]**2 + v[1]**2) / (2.0 * n**2)
    return 0.25 * coeff * ww * s


def v_ad_nonunital(r, q: float, params: SkewParams) -> float:
    q = _check_prob(q, name="damping strength")
    n, _, ww, s, d = _spectral_factors(r, params)
    if n < DEGENERATE_NORM:
        return 0.0
    v = np.asarray(r, dtype=float)
    even = ((1.0 - np.sqrt(1.0 - q)) * (v[0]**2 + v[1]**2) + q * v[2]**2) / (2.0 * n**2)
    odd = q * v[2] / (2.0 * n)
    return 0.25 * (even * s + odd * d) * ww
