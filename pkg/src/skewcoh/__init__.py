"""Skew-information coherence and complementarity measures for quantum
states interacting with Kraus channels."""

from .channels import (
    ChannelFlags,
    KrausChannel,
    amplitude_damping_nonunital,
    amplitude_damping_unital,
    bit_flip,
    choi_matrix,
    depolarizing,
    group_twirl,
    identity_channel,
    pauli_channel,
    phase_flip,
    remix_kraus,
    tensor_with_identity,
    validate,
)
from .errors import DescriptorError, InvariantViolation
from .interferometer import (
    MachZehnderConfig,
    build_mz_channel,
    extremize_over_theta,
    mz_skew_info,
    mz_sym_info,
    path_information,
    visibility,
)
from .linalg import (
    EigenSystem,
    dagger,
    half_anticommutator,
    half_commutator,
    hermitian_eig,
    hs_norm_sq,
    kron,
    matrix_power,
    partial_trace,
)
from .measures import (
    MeasureReport,
    SkewParams,
    channel_skew_info,
    channel_sym_info,
    channel_weighted_skew_info,
    channel_weighted_sym_info,
    conservation_rhs_ij,
    conservation_rhs_vw,
    cross_term,
    measure_report,
    skew_info,
    skew_info_trace_form,
    sym_info,
    weighted_cross_term,
    weighted_skew_info,
    weighted_sym_info,
)
from .states import (
    DensityMatrix,
    bloch_eigenvalues,
    from_bloch,
    random_density,
    random_pure,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
