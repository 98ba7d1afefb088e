"""walkmem: a discrete-time quantum walk used as a qubit memory.

A qubit is written into the walker's internal state, evolved under a
coin schedule — constant or temporally disordered — and read back by
merging every lattice site at a single read-out node.  The merged state
is always ``exp(-i Theta sigma_x)`` times the input, with ``Theta`` the
accumulated coin angle, so the owner can retrieve the qubit exactly;
a Hadamard encode/decode plus a phase corrector makes that work at any
storage time.  Temporal disorder keeps the walker spatially localized
while it waits, which also starves any adversary who can only read a
window of the lattice.

The :mod:`~walkmem.oracle` module re-derives the dynamics by dense
matrix products as an independent cross-check; ``walkmem verify`` runs
it from the command line.
"""

from . import oracle
from .analysis import (
    EavesdropperResult,
    EmptyCaptureError,
    EnsembleStats,
    LocalizationReport,
    eavesdrop,
    eavesdrop_curve,
    ensemble_stats,
    localization_report,
    spread_curve,
)
from .memory import (
    CollectionNormError,
    MemoryConfig,
    RetrievalRecord,
    collect,
    decode_retrieved,
    decoded_prediction,
    probability_sweep,
    retrieval_prediction,
    store_retrieve,
)
from .qubit import (
    Qubit,
    apply,
    coin_matrix,
    diagonal_phase,
    fidelity,
    hadamard,
    identity,
    is_unitary,
    sigma_x,
    sigma_x_exponential,
)
from .walk import (
    CapacityExceededError,
    CoinSchedule,
    PositionDistribution,
    WalkState,
    evolve,
    initial_state,
    iter_states,
    make_schedule,
    position_distribution,
    step,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityExceededError",
    "CoinSchedule",
    "CollectionNormError",
    "EavesdropperResult",
    "EmptyCaptureError",
    "EnsembleStats",
    "LocalizationReport",
    "MemoryConfig",
    "PositionDistribution",
    "Qubit",
    "RetrievalRecord",
    "WalkState",
    "apply",
    "coin_matrix",
    "collect",
    "decode_retrieved",
    "decoded_prediction",
    "diagonal_phase",
    "eavesdrop",
    "eavesdrop_curve",
    "ensemble_stats",
    "evolve",
    "fidelity",
    "hadamard",
    "identity",
    "initial_state",
    "is_unitary",
    "iter_states",
    "localization_report",
    "make_schedule",
    "oracle",
    "position_distribution",
    "probability_sweep",
    "retrieval_prediction",
    "sigma_x",
    "sigma_x_exponential",
    "spread_curve",
    "step",
    "store_retrieve",
]
