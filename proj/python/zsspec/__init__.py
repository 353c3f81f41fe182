"""Zakharov-Shabat eigenvalues by Chebyshev collocation with a tanh map."""

from ._core import (
    ChebyshevBasis,
    ClassifierOptions,
    ConvergenceRecord,
    Eigenfunction,
    EvolutionResult,
    InvalidArgument,
    IoError,
    NumericError,
    Potential,
    SpectrumResult,
    chebyshev_basis,
    compute_spectrum,
    confirmation_size,
    convergence_study,
    count_structures,
    default_route,
    eigenfunction,
    eigenvalues,
    evolve,
    fcm_spectrum,
    mass,
    operator_matrix,
    raw_spectrum,
)

__version__ = "0.1.0"
