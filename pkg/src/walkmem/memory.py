"""Store a qubit in a walk, then merge it back out.

Writing is just evolution: the input qubit rides the walker's internal
degree of freedom while the schedule runs.  Reading merges the
amplitudes of every lattice site at a single read-out node, i.e. it
sums the alpha column and the beta column of the walk state.  For any
schedule with accumulated angle ``Theta = sum(theta_k)`` the merged
state is

    exp(-i * Theta * sigma_x) |input>,

so a constant-angle walk returns the input exactly at t = n*pi/theta.
Sandwiching the walk between Hadamards turns the sigma_x rotation into
the diagonal phase diag(e^{-i Theta}, e^{i Theta}); the owner, who knows
the schedule, can cancel it exactly and recover the input at *any* time,
disordered schedules included.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .qubit import Qubit, apply, diagonal_phase, fidelity, hadamard, sigma_x_exponential
from .walk import CoinSchedule, WalkState, evolve

__all__ = [
    "COLLECTION_NORM_TOL",
    "CollectionNormError",
    "MemoryConfig",
    "RetrievalRecord",
    "collect",
    "decode_retrieved",
    "decoded_prediction",
    "probability_sweep",
    "retrieval_prediction",
    "store_retrieve",
]

COLLECTION_NORM_TOL = 1e-6
"""Merged amplitudes further than this from unit norm are rejected."""

_ENCODINGS = ("none", "hadamard")


class CollectionNormError(ValueError):
    """Merged amplitudes are not a unit vector.

    States produced by the walk always merge to unit norm (that is the
    constructive-interference content of the retrieval identities); a
    hand-built amplitude array generally does not.
    """


@dataclass(frozen=True)
class MemoryConfig:
    """How to run one store/retrieve cycle.

    Parameters
    ----------
    schedule : CoinSchedule
        Coin angles for the storage period; its length is the storage time.
    encoding : str
        ``"none"`` stores the raw qubit; ``"hadamard"`` conjugates the
        whole walk by H, which makes the retrieval phase diagonal.
    phase_correction : bool
        Cancel the residual diag(e^{-i Theta}, e^{i Theta}) phase using
        the schedule's known angle sum.  Only meaningful (and only
        allowed) together with Hadamard encoding.
    """

    schedule: CoinSchedule
    encoding: str = "none"
    phase_correction: bool = False

    def __post_init__(self) -> None:
        if self.encoding not in _ENCODINGS:
            raise ValueError(
                f"encoding must be one of {_ENCODINGS}, got {self.encoding!r}"
            )
        if self.phase_correction and self.encoding != "hadamard":
            raise ValueError("phase correction requires hadamard encoding")


@dataclass(frozen=True)
class RetrievalRecord:
    """Outcome of one store/retrieve cycle.

    ``retrieved`` is the state at the read-out node right after merging,
    before any decoding; ``final`` is what the owner ends up with after
    the optional Hadamard decode and phase correction.  ``fidelity_to_input``
    compares ``final`` with the original input, ignoring global phase.
    """

    retrieved: Qubit
    final: Qubit
    theta_sum: float
    fidelity_to_input: float


def collect(state: WalkState) -> Qubit:
    """Merge every lattice site into the read-out node.

    Returns the component-wise amplitude sums (sum_j alpha_j,
    sum_j beta_j) as a qubit.  No renormalization is applied: for
    walk-generated states the sums interfere to unit norm on their own
    (within 1e-10), and anything further off than ``COLLECTION_NORM_TOL``
    raises :class:`CollectionNormError`.
    """
    a = complex(state.alpha.sum())
    b = complex(state.beta.sum())
    deviation = abs(abs(a) ** 2 + abs(b) ** 2 - 1.0)
    if deviation > COLLECTION_NORM_TOL:
        raise CollectionNormError(
            f"merged amplitudes have |norm^2 - 1| = {deviation:.3e}; "
            "the input does not look like a walk-generated state"
        )
    return Qubit(a, b, atol=COLLECTION_NORM_TOL)


def retrieval_prediction(q: Qubit, theta: float, steps: int) -> Qubit:
    """Closed-form retrieved state for a constant-angle walk.

    After ``steps`` steps at coin angle ``theta``, merging returns
    ``exp(-i * steps * theta * sigma_x)`` applied to the input — the walk
    acts on the stored qubit as a pure internal rotation.
    """
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    return apply(sigma_x_exponential(steps * theta), q)


def decoded_prediction(q: Qubit, theta_sum: float) -> Qubit:
    """Closed-form decoded state under Hadamard encode/decode.

    H exp(-i Theta sigma_x) H = diag(e^{-i Theta}, e^{i Theta}), so the
    decoded output is the input with opposite phases on the two basis
    amplitudes.  Probabilities are untouched for any schedule.
    """
    return apply(diagonal_phase(theta_sum), q)


def decode_retrieved(retrieved: Qubit, cfg: MemoryConfig) -> Qubit:
    """Owner-side decode of a merged read-out state.

    Undoes the Hadamard encoding and, if ``cfg.phase_correction`` is set,
    cancels the residual diagonal phase using the schedule's angle sum.
    A window-limited adversary who knows the protocol applies exactly
    this chain to their reconstruction.
    """
    out = retrieved
    if cfg.encoding == "hadamard":
        out = apply(hadamard(), out)
        if cfg.phase_correction:
            out = apply(diagonal_phase(-cfg.schedule.theta_sum), out)
    return out


def store_retrieve(q: Qubit, cfg: MemoryConfig) -> RetrievalRecord:
    """Run the full cycle: encode, evolve, merge, decode, correct.

    With ``encoding="hadamard"`` and ``phase_correction=True`` the final
    state equals the input to ~1e-10 for every schedule, ordered or
    disordered.  A zero-length schedule returns the input unchanged.
    """
    stored = apply(hadamard(), q) if cfg.encoding == "hadamard" else q
    retrieved = collect(evolve(stored, cfg.schedule))
    final = decode_retrieved(retrieved, cfg)
    return RetrievalRecord(
        retrieved=retrieved,
        final=final,
        theta_sum=cfg.schedule.theta_sum,
        fidelity_to_input=fidelity(final, q),
    )


def probability_sweep(
    theta: float,
    t_values: "np.ndarray | list[int]",
    grid: np.ndarray,
    vary: str = "delta",
    fixed: float = 0.0,
) -> np.ndarray:
    """P(|0>) of the retrieved state over a grid of input qubits.

    For each storage time in ``t_values`` and each point of ``grid``,
    build the input ``cos(delta)|0> + e^{i eta} sin(delta)|1>`` (the grid
    supplies ``vary``, either ``"delta"`` or ``"eta"``; ``fixed`` supplies
    the other), store it for that many steps at constant coin angle
    ``theta`` with no encoding, and record ``|final alpha|^2``.

    Returns an array of shape ``(len(t_values), len(grid))``.
    """
    if vary not in ("delta", "eta"):
        raise ValueError(f"vary must be 'delta' or 'eta', got {vary!r}")
    grid = np.asarray(grid, dtype=np.float64)
    if grid.size == 0:
        raise ValueError("grid must be nonempty")

    out = np.empty((len(t_values), grid.size), dtype=np.float64)
    for row, t in enumerate(t_values):
        cfg = MemoryConfig(schedule=CoinSchedule.constant(theta, int(t)))
        for col, value in enumerate(grid):
            if vary == "delta":
                q = Qubit.from_angles(value, fixed)
            else:
                q = Qubit.from_angles(fixed, value)
            record = store_retrieve(q, cfg)
            out[row, col] = abs(record.final.alpha) ** 2
    return out
