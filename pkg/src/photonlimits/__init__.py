"""Fidelity limits for on-demand generation of near-photon optical states."""

from .bounds import (
    BoundInputs,
    BoundReport,
    bounds_causal_target,
    bounds_physical_target,
    evaluate_causal,
    evaluate_physical,
    first_order_check,
)
from .construction import (
    ConstructionResult,
    closed_form_fidelity,
    closed_form_fidelity_n,
    construct_localized_state,
    overlap_integral,
    polylog_neg_half,
)
from .errors import (
    CausalityError,
    ConsistencyError,
    ConvergenceError,
    CoverageError,
    DegenerateMeasurementError,
    DegenerateTargetError,
    DomainError,
    InfeasibleSeedError,
    InvalidGridError,
    NormalizationError,
    PhotonLimitsError,
    TruncationError,
)
from .measurement import (
    HermiteTable,
    SmearingResult,
    build_smearing,
    hermite_integral_bound_check,
    hermite_psi,
    indicator_distance,
    optimal_phase,
    projector_density_n_photon,
    spectral_overlap_c_xi,
)
from .pulses import (
    EffectiveParams,
    GaussianSpec,
    effective_params,
    gaussian_pulse,
    physical_target_from_seed,
)
from .demos import (
    SpacetimeField,
    coherent_localization_check,
    instantaneous_localized_spectrum,
    photon_energy_envelope,
)
from .fock import (
    FockOperator,
    FockTensor,
    commutator_residuals,
    default_truncation,
    eigenvector_overlap,
    factorized_squeeze_vacuum,
    gamma_for_eta_tilde,
    isometry_residual,
    licht_operator,
    position_operator_check,
    squeeze_operator,
    state_coefficients,
)
from .signals import (
    Grid,
    SampledSignal,
    Spectrum,
    VacuumModeWeights,
    fourier_forward,
    fourier_inverse,
    is_causal,
    max_abs,
    negative_frequency_weight,
    negative_time_weight,
    nu_constant,
    pulse_mode_time_function,
    reflected,
    split_causal,
    warn_if_infrared_divergent,
)

__version__ = "0.1.0"
