"""Brute-force cross-check of the recurrence engine and the merge step.

Everything here rebuilds the dynamics the expensive way:

* the one-step walk unitary is formed as an explicit dense matrix — the
  coin rotation on every site followed by the coin-conditioned shift —
  and states evolve by matrix-vector products;
* the read-out merge is additionally realized as two explicit
  permutation-with-merge matrices acting on a lattice enlarged by one
  read-out node: the first stage routes every coin-|0> amplitude to the
  read-out node, the second routes every coin-|1> amplitude there.

Basis ordering is position-major, coin-minor throughout: entry
``2*(j + capacity) + coin`` holds the coin-``coin`` amplitude at site
``j``.  On the enlarged space the read-out node takes the last position
slot.  The shift matrix wraps around at the truncation boundary; the
boundary is never exercised because capacity always exceeds the step
count, so no amplitude can reach the edge.

This module is a test fixture: clarity over speed, O(t^3) is fine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .memory import (
    MemoryConfig,
    decode_retrieved,
    decoded_prediction,
    retrieval_prediction,
    store_retrieve,
)
from .qubit import Qubit, apply, coin_matrix, hadamard, sigma_x_exponential
from .walk import CoinSchedule, WalkState, evolve

__all__ = [
    "OracleCheck",
    "build_walk_unitary",
    "collection_stages",
    "dense_initial",
    "dense_vector",
    "oracle_collect",
    "oracle_evolve",
    "oracle_evolve_and_collect",
    "sequential_collect",
    "verification_suite",
]


def basis_index(j: int, coin: int, capacity: int) -> int:
    """Vector index of the coin-``coin`` amplitude at site ``j``."""
    return 2 * (j + capacity) + coin


def build_walk_unitary(theta: float, capacity: int) -> np.ndarray:
    """One walk step as a dense matrix: shift after coin, wrap-around edges.

    The returned matrix is exactly unitary (the wrap-around closes the
    shift into a cyclic permutation); it only matches the infinite
    lattice on states that stay at least one site away from the edge.
    """
    if capacity < 1:
        raise ValueError(f"capacity must be >= 1, got {capacity}")
    n_sites = 2 * capacity + 1
    dim = 2 * n_sites

    coin_everywhere = np.kron(np.eye(n_sites), coin_matrix(theta))

    shift = np.zeros((dim, dim), dtype=np.complex128)
    for p in range(n_sites):
        shift[2 * ((p - 1) % n_sites), 2 * p] = 1.0  # coin |0>: one site left
        shift[2 * ((p + 1) % n_sites) + 1, 2 * p + 1] = 1.0  # coin |1>: right

    return shift @ coin_everywhere


def dense_initial(q: Qubit, capacity: int) -> np.ndarray:
    """Origin-localized global state vector for input ``q``."""
    vec = np.zeros(2 * (2 * capacity + 1), dtype=np.complex128)
    vec[basis_index(0, 0, capacity)] = q.alpha
    vec[basis_index(0, 1, capacity)] = q.beta
    return vec


def dense_vector(state: WalkState, capacity: int | None = None) -> np.ndarray:
    """Flatten a recurrence-engine state into the oracle's basis ordering.

    ``capacity`` zero-pads the lattice outward when the oracle worked on
    a wider truncation than the recurrence engine did.
    """
    if capacity is None:
        capacity = state.capacity
    if capacity < state.capacity:
        raise ValueError("cannot shrink a state to a smaller capacity")
    pad = capacity - state.capacity
    amps = state.amplitudes
    if pad:
        amps = np.pad(amps, ((0, 0), (pad, pad)))
    return amps.T.reshape(-1).copy()


def oracle_evolve(q: Qubit, schedule: CoinSchedule, capacity: int | None = None) -> np.ndarray:
    """Evolve by dense matrix-vector products; capacity defaults to t + 1."""
    if capacity is None:
        capacity = len(schedule) + 1
    if capacity < len(schedule) + 1:
        raise ValueError(
            f"capacity {capacity} too small for {len(schedule)} steps; "
            "amplitudes would touch the wrap-around boundary"
        )
    vec = dense_initial(q, capacity)
    for theta in schedule.angles:
        vec = build_walk_unitary(float(theta), capacity) @ vec
    return vec


def oracle_collect(vec: np.ndarray) -> Qubit:
    """Merge a dense global state by plain component-wise summation."""
    pairs = vec.reshape(-1, 2)
    return Qubit(complex(pairs[:, 0].sum()), complex(pairs[:, 1].sum()), atol=1e-6)


def oracle_evolve_and_collect(q: Qubit, schedule: CoinSchedule) -> Qubit:
    """Independent dense path to the retrieved state."""
    return oracle_collect(oracle_evolve(q, schedule))


def collection_stages(capacity: int) -> tuple[np.ndarray, np.ndarray]:
    """The two merge stages as explicit matrices on the enlarged space.

    The enlarged space appends one read-out node after the lattice
    sites.  Stage 0 sends every coin-|0> amplitude (read-out node
    included) to the read-out node and leaves all coin-|1> amplitudes in
    place; stage 1 does the opposite.  Each matrix has only 0/1 entries:
    rows either copy a single amplitude or merge a whole coin component.
    Their product, restricted to lattice-supported states, is exactly
    the component-wise summation performed by ``oracle_collect``.
    """
    n_sites = 2 * capacity + 1
    dim = 2 * (n_sites + 1)
    read_out = n_sites  # position slot of the read-out node

    stage0 = np.zeros((dim, dim), dtype=np.complex128)
    stage1 = np.zeros((dim, dim), dtype=np.complex128)
    for p in range(n_sites + 1):
        stage0[2 * read_out, 2 * p] = 1.0  # |0> at p -> |0> at read-out
        stage0[2 * p + 1, 2 * p + 1] = 1.0  # |1> stays
        stage1[2 * p, 2 * p] = 1.0  # |0> stays
        stage1[2 * read_out + 1, 2 * p + 1] = 1.0  # |1> at p -> read-out
    return stage0, stage1


def sequential_collect(vec: np.ndarray, capacity: int) -> Qubit:
    """Merge by applying the two stage matrices, then read the read-out node.

    ``vec`` is a plain (no read-out node) global state; it is embedded
    in the enlarged space first.
    """
    n_sites = 2 * capacity + 1
    if vec.size != 2 * n_sites:
        raise ValueError(f"expected a vector of size {2 * n_sites}, got {vec.size}")
    enlarged = np.zeros(2 * (n_sites + 1), dtype=np.complex128)
    enlarged[: 2 * n_sites] = vec

    stage0, stage1 = collection_stages(capacity)
    merged = stage1 @ (stage0 @ enlarged)
    return Qubit(complex(merged[2 * n_sites]), complex(merged[2 * n_sites + 1]), atol=1e-6)


@dataclass(frozen=True)
class OracleCheck:
    """One differential-test verdict: worst error against its tolerance."""

    name: str
    max_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tolerance

    def __str__(self) -> str:
        verdict = "ok" if self.passed else "FAIL"
        return f"{verdict:4s} {self.name}: max error {self.max_error:.3e} (tol {self.tolerance:.0e})"


def _qubit_error(a: Qubit, b: Qubit) -> float:
    return float(np.max(np.abs(a.as_array() - b.as_array())))


def verification_suite(
    trials: int = 100,
    max_steps: int = 12,
    seed: int = 20260815,
) -> list[OracleCheck]:
    """Run the full differential suite; deterministic for a given seed.

    Covers: dense state vs recurrence state; dense merge vs recurrence
    merge vs the constant-angle closed form (all on a grid of coin
    angles, every step count up to ``max_steps``); the same three-way
    agreement on random disorder schedules plus the Hadamard-decoded
    closed form; and the two-stage merge matrices vs plain summation.
    """
    rng = np.random.default_rng(seed)

    def random_qubit() -> Qubit:
        raw = rng.normal(size=4)
        a = complex(raw[0], raw[1])
        b = complex(raw[2], raw[3])
        n = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
        return Qubit(a / n, b / n)

    checks: list[OracleCheck] = []

    # Constant angles: dense vs recurrence states, merges, and closed form.
    state_err = 0.0
    merge_err = 0.0
    closed_err = 0.0
    for theta in (0.0, math.pi / 6, math.pi / 4, math.pi / 3):
        for t in range(max_steps + 1):
            q = random_qubit()
            schedule = CoinSchedule.constant(theta, t)
            walked = evolve(q, schedule)
            dense = oracle_evolve(q, schedule)
            state_err = max(
                state_err,
                float(np.max(np.abs(dense - dense_vector(walked, capacity=t + 1)))),
            )
            merged = oracle_collect(dense)
            record = store_retrieve(q, MemoryConfig(schedule=schedule))
            merge_err = max(merge_err, _qubit_error(merged, record.retrieved))
            closed_err = max(
                closed_err, _qubit_error(merged, retrieval_prediction(q, theta, t))
            )
    checks.append(OracleCheck("dense state vs recurrence (constant)", state_err, 1e-12))
    checks.append(OracleCheck("dense merge vs recurrence merge (constant)", merge_err, 1e-12))
    checks.append(OracleCheck("dense merge vs constant-angle closed form", closed_err, 1e-12))

    # Disorder schedules: same comparisons plus both closed forms — the
    # accumulated-angle rotation for the raw merge and the diagonal phase
    # for the Hadamard-decoded merge.
    state_err = 0.0
    merge_err = 0.0
    rotation_err = 0.0
    decoded_err = 0.0
    for _ in range(trials):
        q = random_qubit()
        t = int(rng.integers(1, max_steps + 1))
        schedule = CoinSchedule.temporal_disorder(t, int(rng.integers(2**32)))

        walked = evolve(q, schedule)
        dense = oracle_evolve(q, schedule)
        state_err = max(
            state_err,
            float(np.max(np.abs(dense - dense_vector(walked, capacity=t + 1)))),
        )
        merged = oracle_collect(dense)
        merge_err = max(
            merge_err,
            _qubit_error(merged, store_retrieve(q, MemoryConfig(schedule=schedule)).retrieved),
        )
        rotation_err = max(
            rotation_err,
            _qubit_error(merged, apply(sigma_x_exponential(schedule.theta_sum), q)),
        )

        cfg = MemoryConfig(schedule=schedule, encoding="hadamard")
        encoded_dense = oracle_evolve(apply(hadamard(), q), schedule)
        decoded = decode_retrieved(oracle_collect(encoded_dense), cfg)
        decoded_err = max(
            decoded_err, _qubit_error(decoded, decoded_prediction(q, schedule.theta_sum))
        )
    checks.append(OracleCheck("dense state vs recurrence (disorder)", state_err, 1e-12))
    checks.append(OracleCheck("dense merge vs recurrence merge (disorder)", merge_err, 1e-12))
    checks.append(
        OracleCheck("dense merge vs accumulated-angle closed form", rotation_err, 1e-12)
    )
    checks.append(OracleCheck("dense decoded vs diagonal-phase closed form", decoded_err, 1e-12))

    # Two-stage merge matrices vs plain summation, short walks.
    stage_err = 0.0
    for _ in range(trials // 2):
        q = random_qubit()
        t = int(rng.integers(0, 7))
        kind = rng.integers(2)
        if kind == 0:
            theta = float(rng.uniform(-math.pi / 2, math.pi / 2))
            schedule = CoinSchedule.constant(theta, t)
        else:
            schedule = CoinSchedule.temporal_disorder(t, int(rng.integers(2**32)))
        dense = oracle_evolve(q, schedule)
        capacity = len(schedule) + 1
        stage_err = max(
            stage_err,
            _qubit_error(sequential_collect(dense, capacity), oracle_collect(dense)),
        )
    checks.append(OracleCheck("two-stage merge vs plain summation", stage_err, 1e-12))

    return checks
