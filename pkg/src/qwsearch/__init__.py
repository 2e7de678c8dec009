"""Quantum-walk search on complete bipartite graphs: dynamics, resources, noise."""

from .closedform import (
    coherence_at,
    complementarity_residual,
    normalized_coherence,
    phase_args,
    state_at,
    success_probability,
)
from .errors import (
    DimensionTooLarge,
    EncodingMismatch,
    InvalidMarkedCount,
    InvalidPartition,
    InvalidQubitIndex,
    NotTwoQubit,
    OutOfRange,
    QWSearchError,
    SubspaceLeak,
    TooManyQubits,
)
from .model import AngleParams, InitialState, SearchInstance, SubspaceAmplitudes, angles, initial_amplitudes, make_instance

__version__ = "0.1.0"
