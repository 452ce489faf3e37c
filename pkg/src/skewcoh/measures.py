"""Skew-information measures of state-channel interaction.

Four quantities are computed for a state rho, an operator K (not
necessarily Hermitian) and exponents (alpha, beta) with alpha, beta >= 0
and alpha + beta <= 1, all using half-brackets:

* skew_info            I = Tr([rho^a, K]^dag [rho^b, K] rho^(1-a-b)),
  the asymmetry / coherence part of the interaction;
* sym_info             J, the same with anticommutators (symmetry part);
* weighted_skew_info   V, commutators of the averaged power
  M = (rho^a + rho^b)/2 against rho^(1-a-b);
* weighted_sym_info    W, its anticommutator counterpart.

Channel-level versions sum the operator-level quantity over any Kraus
representation; the value is representation independent. I + J and V + W
obey conservation identities whose right-hand sides are exposed as
:func:`conservation_rhs_ij` and :func:`conservation_rhs_vw`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import KrausChannel
from .errors import InvariantViolation
from .linalg import as_matrix, dagger, half_anticommutator, half_commutator
from .states import DensityMatrix

PARAM_TOL = 1e-12
IMAG_TOL = 1e-10
NEGATIVE_TOL = -1e-10


@dataclass(frozen=True)
class SkewParams:
    """Exponent pair (alpha, beta): both >= 0, alpha + beta <= 1."""

    alpha: float
    beta: float

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise InvariantViolation(
                f"exponents must be nonnegative, got ({self.alpha}, {self.beta})")
        if self.alpha + self.beta > 1.0 + PARAM_TOL:
            raise InvariantViolation(
                f"alpha + beta = {self.alpha + self.beta:.12g} exceeds 1")

    @property
    def tail(self) -> float:
        """The residual exponent 1 - alpha - beta, clipped at 0."""
        return max(0.0, 1.0 - self.alpha - self.beta)

    def swapped(self) -> "SkewParams":
        return SkewParams(self.beta, self.alpha)


def _exp(t: float) -> float:
    """Clip an exponent derived from SkewParams into [0, 1]; the parameter
    tolerance allows alpha + beta to overshoot 1 by ~1e-12."""
    return min(1.0, max(0.0, t))


def _real_trace(m: np.ndarray) -> float:
    """Trace that is real by construction; a large imaginary residue
    signals a formula bug rather than rounding and is rejected."""
    t = complex(np.trace(m))
    if abs(t.imag) > IMAG_TOL:
        raise InvariantViolation(f"trace has imaginary residue {t.imag:.3e}")
    return t.real


def _finalize(value: float) -> float:
    """Clamp the tiny negative values rounding can produce; reject worse."""
    if value < NEGATIVE_TOL:
        raise InvariantViolation(f"measure evaluated to {value:.3e} < 0")
    return max(value, 0.0)


def _as_state(rho) -> DensityMatrix:
    return rho if isinstance(rho, DensityMatrix) else DensityMatrix(rho)


def _check_op(rho: DensityMatrix, k) -> np.ndarray:
    k = as_matrix(k)
    if k.shape[0] != rho.dim:
        raise InvariantViolation(
            f"operator dimension {k.shape[0]} != state dimension {rho.dim}")
    return k


def _bracket_value(ra, rb, rc, k, bracket) -> float:
    return _real_trace(dagger(bracket(ra, k)) @ bracket(rb, k) @ rc)


def skew_info(rho, k, params: SkewParams) -> float:
    """Commutator quantity I for a single operator."""
    rho = _as_state(rho)
    k = _check_op(rho, k)
    ra, rb, rc = rho.power(_exp(params.alpha)), rho.power(_exp(params.beta)), rho.power(params.tail)
    return _finalize(_bracket_value(ra, rb, rc, k, half_commutator))


def sym_info(rho, k, params: SkewParams) -> float:
    """Anticommutator quantity J for a single operator."""
    rho = _as_state(rho)
    k = _check_op(rho, k)
    ra, rb, rc = rho.power(_exp(params.alpha)), rho.power(_exp(params.beta)), rho.power(params.tail)
    return _finalize(_bracket_value(ra, rb, rc, k, half_anticommutator))


def _averaged_power(rho: DensityMatrix, params: SkewParams) -> np.ndarray:
    return 0.5 * (rho.power(_exp(params.alpha)) + rho.power(_exp(params.beta)))


def weighted_skew_info(rho, k, params: SkewParams) -> float:
    """Weighted commutator quantity V built on M = (rho^a + rho^b)/2."""
    rho = _as_state(rho)
    k = _check_op(rho, k)
    m = _averaged_power(rho, params)
    return _finalize(_bracket_value(m, m, rho.power(params.tail), k, half_commutator))


def weighted_sym_info(rho, k, params: SkewParams) -> float:
    """Weighted anticommutator quantity W."""
    rho = _as_state(rho)
    k = _check_op(rho, k)
    m = _averaged_power(rho, params)
    return _finalize(_bracket_value(m, m, rho.power(params.tail), k, half_anticommutator))


def _channel_sum(rho, ch: KrausChannel, params: SkewParams, weighted: bool,
                 bracket) -> float:
    rho = _as_state(rho)
    if ch.dim != rho.dim:
        raise InvariantViolation(
            f"channel dimension {ch.dim} != state dimension {rho.dim}")
    if weighted:
        ra = rb = _averaged_power(rho, params)
    else:
        ra, rb = rho.power(_exp(params.alpha)), rho.power(_exp(params.beta))
    rc = rho.power(params.tail)
    return _finalize(sum(_bracket_value(ra, rb, rc, k, bracket) for k in ch.kraus_ops))


def channel_skew_info(rho, ch: KrausChannel, params: SkewParams) -> float:
    """I summed over the Kraus operators of a channel."""
    return _channel_sum(rho, ch, params, False, half_commutator)


def channel_sym_info(rho, ch: KrausChannel, params: SkewParams) -> float:
    """J summed over the Kraus operators of a channel."""
    return _channel_sum(rho, ch, params, False, half_anticommutator)


def channel_weighted_skew_info(rho, ch: KrausChannel, params: SkewParams) -> float:
    """V summed over the Kraus operators of a channel."""
    return _channel_sum(rho, ch, params, True, half_commutator)


def channel_weighted_sym_info(rho, ch: KrausChannel, params: SkewParams) -> float:
    """W summed over the Kraus operators of a channel."""
    return _channel_sum(rho, ch, params, True, half_anticommutator)


def cross_term(rho, k, params: SkewParams) -> float:
    """C = (Tr(rho^(1-a) K^dag rho^a K) + Tr(rho^(1-b) K^dag rho^b K))/2.

    Nonnegative, and J - I = C for any operator.
    """
    rho = _as_state(rho)
    k = _check_op(rho, k)
    ta = _real_trace(rho.power(_exp(1.0 - params.alpha)) @ dagger(k) @ rho.power(_exp(params.alpha)) @ k)
    tb = _real_trace(rho.power(_exp(1.0 - params.beta)) @ dagger(k) @ rho.power(_exp(params.beta)) @ k)
    return _finalize(0.5 * (ta + tb))


def weighted_cross_term(rho, k, params: SkewParams) -> float:
    """D = Tr(N K^dag M K) with M = (rho^a + rho^b)/2, N = (rho^(1-a) + rho^(1-b))/2.

    Nonnegative, and W - V = D for any operator.
    """
    rho = _as_state(rho)
    k = _check_op(rho, k)
    m = _averaged_power(rho, params)
    n = 0.5 * (rho.power(_exp(1.0 - params.alpha)) + rho.power(_exp(1.0 - params.beta)))
    return _finalize(_real_trace(n @ dagger(k) @ m @ k))


def conservation_rhs_ij(rho, ch: KrausChannel, params: SkewParams) -> float:
    """Tr(rho^(1-a-b) Phi^dag(rho^(a+b)) + Phi(rho))/2, which equals I + J
    for every channel, trace preserving or not."""
    rho = _as_state(rho)
    pow_sum = rho.power(_exp(params.alpha + params.beta))
    t1 = _real_trace(rho.power(params.tail) @ ch.adjoint_apply(pow_sum))
    t2 = _real_trace(ch.apply(rho))
    return 0.5 * (t1 + t2)


def conservation_rhs_vw(rho, ch: KrausChannel, params: SkewParams) -> float:
    """Tr(rho^(1-a-b) Phi^dag(M^2) + Phi(N M))/2, which equals V + W.

    M and N as in :func:`weighted_cross_term`. The one-half prefactor is
    forced by the per-operator expansions: V + W = (T1 + T4)/2 where T1,
    T4 are the two traces here, and only this normalization reduces to
    Tr(Phi^dag(rho) + Phi(rho))/2 at alpha = beta = 1/2.
    """
    rho = _as_state(rho)
    m = _averaged_power(rho, params)
    n = 0.5 * (rho.power(_exp(1.0 - params.alpha)) + rho.power(_exp(1.0 - params.beta)))
    t1 = _real_trace(rho.power(params.tail) @ ch.adjoint_apply(m @ m))
    t2 = _real_trace(ch.apply(n @ m))
    return 0.5 * (t1 + t2)


def skew_info_trace_form(rho, ch: KrausChannel, params: SkewParams) -> float:
    """Commutator-free evaluation of the channel quantity I:

        Tr(rho^(1-a-b) Phi^dag(rho^(a+b)) + Phi(rho)
           - rho^(1-a) Phi^dag(rho^a) - rho^(1-b) Phi^dag(rho^b)) / 4.

    Independent path used to cross-check :func:`channel_skew_info`; the
    two must agree to rounding, which pins the half-bracket convention.
    """
    rho = _as_state(rho)
    pow_sum = rho.power(_exp(params.alpha + params.beta))
    t1 = _real_trace(rho.power(params.tail) @ ch.adjoint_apply(pow_sum))
    t2 = _real_trace(ch.apply(rho))
    t3 = _real_trace(rho.power(_exp(1.0 - params.alpha)) @ ch.adjoint_apply(rho.power(_exp(params.alpha))))
    t4 = _real_trace(rho.power(_exp(1.0 - params.beta)) @ ch.adjoint_apply(rho.power(_exp(params.beta))))
    return _finalize(0.25 * (t1 + t2 - t3 - t4))


@dataclass(frozen=True)
class MeasureReport:
    """All four measures plus conservation sums for one (state, channel,
    params) triple; the serializable unit of CLI output."""

    I: float
    J: float
    V: float
    W: float
    sum_ij: float
    sum_vw: float
    rhs_ij: float
    rhs_vw: float
    params: SkewParams
    channel_label: str

    def __post_init__(self):
        if self.I < NEGATIVE_TOL or self.V < NEGATIVE_TOL:
            raise InvariantViolation("negative skew information in report")
        if self.I > self.J + 1e-10 or self.V > self.W + 1e-10:
            raise InvariantViolation("ordering I <= J, V <= W violated in report")

    def to_dict(self) -> dict:
        return {
            "alpha": self.params.alpha,
            "beta": self.params.beta,
            "channel": self.channel_label,
            "I": self.I,
            "J": self.J,
            "V": self.V,
            "W": self.W,
            "sum_IJ": self.sum_ij,
            "rhs_IJ": self.rhs_ij,
            "sum_VW": self.sum_vw,
            "rhs_VW": self.rhs_vw,
        }


def measure_report(rho, ch: KrausChannel, params: SkewParams) -> MeasureReport:
    """Evaluate all four channel measures and both conservation sums."""
    rho = _as_state(rho)
    i = channel_skew_info(rho, ch, params)
    j = channel_sym_info(rho, ch, params)
    v = channel_weighted_skew_info(rho, ch, params)
    w = channel_weighted_sym_info(rho, ch, params)
    return MeasureReport(
        I=i, J=j, V=v, W=w,
        sum_ij=i + j, sum_vw=v + w,
        rhs_ij=conservation_rhs_ij(rho, ch, params),
        rhs_vw=conservation_rhs_vw(rho, ch, params),
        params=params, channel_label=ch.label,
    )
