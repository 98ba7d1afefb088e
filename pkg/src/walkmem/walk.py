"""Coin-and-shift evolution of the full internal ⊗ position state.

The walker lives on the 1-D integer lattice.  Amplitudes are stored
densely as a (2, 2*capacity+1) complex array: row 0 holds the |0>
(left-moving) amplitudes and row 1 the |1> (right-moving) amplitudes,
with lattice site ``j`` at column ``j + capacity``.  One step applies
the coin rotation at every site and then shifts the |0> component one
site left and the |1> component one site right, which is exactly the
amplitude recurrence

    alpha[j, t] = cos(theta) alpha[j+1, t-1] - i sin(theta) beta[j+1, t-1]
    beta[j, t]  = cos(theta) beta[j-1, t-1]  - i sin(theta) alpha[j-1, t-1]

Every step writes a fresh buffer; sites outside the light cone and
sites of the wrong parity stay exactly zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .qubit import Qubit

__all__ = [
    "ANGLE_HALF_RANGE",
    "CapacityExceededError",
    "CoinSchedule",
    "PositionDistribution",
    "WalkState",
    "evolve",
    "initial_state",
    "iter_states",
    "make_schedule",
    "position_distribution",
    "step",
]

ANGLE_HALF_RANGE = math.pi / 2
"""Disorder angles are drawn uniformly from [-pi/2, pi/2]."""


class CapacityExceededError(ValueError):
    """Raised when stepping a state whose lattice is already full."""


@dataclass(frozen=True, eq=False)
class CoinSchedule:
    """Sequence of per-step coin angles plus the recipe that built it.

    ``kind`` is ``"constant"`` (every angle equal to ``theta``) or
    ``"temporal-disorder"`` (independent uniform draws from
    [-pi/2, pi/2], reproducible from ``seed``).  Disorder draws use
    NumPy's seeded PCG64 generator (``numpy.random.default_rng``), so a
    given (seed, length) pair yields the same angle sequence everywhere.
    """

    angles: np.ndarray
    kind: str
    theta: float | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        angles = np.asarray(self.angles, dtype=np.float64)
        angles.flags.writeable = False
        object.__setattr__(self, "angles", angles)

    def __len__(self) -> int:
        return self.angles.size

    @property
    def theta_sum(self) -> float:
        """Accumulated coin angle of the whole schedule."""
        return float(self.angles.sum())

    @classmethod
    def constant(cls, theta: float, steps: int) -> "CoinSchedule":
        """Schedule repeating one coin angle.  Any finite angle is allowed."""
        if steps < 0:
            raise ValueError(f"steps must be >= 0, got {steps}")
        if not math.isfinite(theta):
            raise ValueError(f"coin angle must be finite, got {theta!r}")
        return cls(np.full(steps, theta), kind="constant", theta=float(theta))

    @classmethod
    def temporal_disorder(cls, steps: int, seed: int) -> "CoinSchedule":
        """Schedule of i.i.d. uniform angles in [-pi/2, pi/2] from ``seed``."""
        if steps < 0:
            raise ValueError(f"steps must be >= 0, got {steps}")
        if seed is None:
            raise ValueError("temporal disorder requires a seed")
        rng = np.random.default_rng(seed)
        angles = rng.uniform(-ANGLE_HALF_RANGE, ANGLE_HALF_RANGE, steps)
        return cls(angles, kind="temporal-disorder", seed=int(seed))


def make_schedule(
    kind: str,
    length: int,
    theta: float | None = None,
    seed: int | None = None,
) -> CoinSchedule:
    """Build a schedule from plain parameters (convenience dispatcher).

    ``kind`` is ``"constant"`` (requires ``theta``) or
    ``"temporal-disorder"`` (requires ``seed``).
    """
    if kind == "constant":
        if theta is None:
            raise ValueError("constant schedule requires theta")
        return CoinSchedule.constant(theta, length)
    if kind == "temporal-disorder":
        if seed is None:
            raise ValueError("temporal-disorder schedule requires a seed")
        return CoinSchedule.temporal_disorder(length, seed)
    raise ValueError(f"unknown schedule kind {kind!r}")


@dataclass(frozen=True, eq=False)
class WalkState:
    """Dense walker state after some number of steps.

    ``amplitudes`` has shape (2, 2*capacity+1); site ``j`` sits at column
    ``j + capacity``.  The array is frozen (non-writable): states are
    immutable snapshots and safe to share.
    """

    amplitudes: np.ndarray
    steps_elapsed: int
    capacity: int

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (2, 2 * self.capacity + 1):
            raise ValueError(
                f"amplitude array has shape {amps.shape}, "
                f"expected (2, {2 * self.capacity + 1})"
            )
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def alpha(self) -> np.ndarray:
        """|0>-component amplitudes over the lattice."""
        return self.amplitudes[0]

    @property
    def beta(self) -> np.ndarray:
        """|1>-component amplitudes over the lattice."""
        return self.amplitudes[1]

    @property
    def positions(self) -> np.ndarray:
        """Lattice site labels, -capacity .. +capacity."""
        return np.arange(-self.capacity, self.capacity + 1)

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


@dataclass(frozen=True)
class PositionDistribution:
    """Per-site measurement probabilities of a walk state."""

    positions: np.ndarray
    probabilities: np.ndarray
    steps_elapsed: int

    def __post_init__(self) -> None:
        for name in ("positions", "probabilities"):
            arr = np.asarray(getattr(self, name))
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    def support(self) -> tuple[np.ndarray, np.ndarray]:
        """Sites inside the light cone with the right parity, and their masses."""
        t = self.steps_elapsed
        mask = (np.abs(self.positions) <= t) & ((self.positions + t) % 2 == 0)
        return self.positions[mask], self.probabilities[mask]

    def as_dict(self) -> dict[int, float]:
        """{site: probability} over the structural support."""
        sites, probs = self.support()
        return {int(j): float(p) for j, p in zip(sites, probs)}


def initial_state(q: Qubit, capacity: int) -> WalkState:
    """Walker localized at the origin with internal state ``q``."""
    if capacity < 0:
        raise ValueError(f"capacity must be >= 0, got {capacity}")
    amps = np.zeros((2, 2 * capacity + 1), dtype=np.complex128)
    amps[0, capacity] = q.alpha
    amps[1, capacity] = q.beta
    return WalkState(amps, steps_elapsed=0, capacity=capacity)


def step(state: WalkState, theta: float) -> WalkState:
    """Advance one coin-and-shift step with coin angle ``theta``."""
    if state.steps_elapsed >= state.capacity:
        raise CapacityExceededError(
            f"cannot step beyond capacity {state.capacity}"
        )
    if not math.isfinite(theta):
        raise ValueError(f"coin angle must be finite, got {theta!r}")
    c, s = math.cos(theta), math.sin(theta)
    old = state.amplitudes
    new = np.zeros_like(old)
    new[0, :-1] = c * old[0, 1:] - 1j * s * old[1, 1:]
    new[1, 1:] = c * old[1, :-1] - 1j * s * old[0, :-1]
    return WalkState(new, state.steps_elapsed + 1, state.capacity)


def iter_states(q: Qubit, schedule: CoinSchedule) -> Iterator[WalkState]:
    """Yield the walk state after 0, 1, ..., len(schedule) steps."""
    state = initial_state(q, capacity=len(schedule))
    yield state
    for theta in schedule.angles:
        state = step(state, float(theta))
        yield state


def evolve(q: Qubit, schedule: CoinSchedule) -> WalkState:
    """Run the whole schedule from a walker at the origin.

    The lattice capacity is the schedule length, so the light cone never
    reaches the boundary.
    """
    state = initial_state(q, capacity=len(schedule))
    for theta in schedule.angles:
        state = step(state, float(theta))
    return state


def position_distribution(state: WalkState) -> PositionDistribution:
    """Probability per lattice site, |alpha_j|^2 + |beta_j|^2."""
    probs = np.abs(state.alpha) ** 2 + np.abs(state.beta) ** 2
    return PositionDistribution(
        positions=state.positions,
        probabilities=probs,
        steps_elapsed=state.steps_elapsed,
    )
