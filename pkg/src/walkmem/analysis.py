"""Spread statistics, disorder-ensemble averages, and a window-limited adversary.

A temporally disordered walk localizes: the position distribution stays
concentrated near the origin with nearly constant width instead of
spreading ballistically.  This module quantifies that (standard
deviation, participation ratio, window capture), averages the metrics
over disorder seeds, and models the security side effect: an adversary
who can only read a contiguous window of lattice sites captures little
probability and reconstructs the stored qubit poorly, while the owner
— who merges the full lattice — retrieves it exactly.

The adversary here is deliberately strong: they read amplitudes (not
just probabilities) on their window, know the protocol and the coin
schedule, and apply the owner's own merge-and-decode chain restricted
to the window.  Anything weaker only looks safer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .memory import MemoryConfig, collect, decode_retrieved
from .qubit import Qubit, apply, fidelity, hadamard
from .walk import (
    CoinSchedule,
    PositionDistribution,
    WalkState,
    evolve,
    iter_states,
    position_distribution,
)

__all__ = [
    "EMPTY_CAPTURE_TOL",
    "EmptyCaptureError",
    "EnsembleStats",
    "EavesdropperResult",
    "LocalizationReport",
    "eavesdrop",
    "eavesdrop_curve",
    "ensemble_stats",
    "localization_report",
    "spread_curve",
]

EMPTY_CAPTURE_TOL = 1e-15
"""Windows holding less probability than this have no defined guess."""


class EmptyCaptureError(ValueError):
    """The adversary's window contains (numerically) nothing to read."""


@dataclass(frozen=True)
class LocalizationReport:
    """Spread metrics of one position distribution.

    ``std_dev`` is the position standard deviation about the mean;
    ``participation_ratio`` is 1 / sum(p_j^2), an effective count of
    occupied sites (1 for a single site, N for N equal sites).  The
    underlying distribution is kept so capture probabilities for any
    window can be read off later.
    """

    std_dev: float
    participation_ratio: float
    distribution: PositionDistribution

    def window_capture(self, halfwidth: float) -> float:
        """Probability mass on sites with |j| <= halfwidth.

        Exactly nondecreasing in ``halfwidth``: the mass is accumulated
        radius by radius, so widening the window only ever adds
        nonnegative terms to the same running sum.
        """
        radii, cumulative = self._capture_cumulative()
        idx = int(np.searchsorted(radii, halfwidth, side="right")) - 1
        return float(cumulative[idx]) if idx >= 0 else 0.0

    def _capture_cumulative(self) -> tuple[np.ndarray, np.ndarray]:
        radii = np.abs(self.distribution.positions)
        order = np.argsort(radii, kind="stable")
        return radii[order], np.cumsum(self.distribution.probabilities[order])


@dataclass(frozen=True)
class EavesdropperResult:
    """What a window-limited adversary gets from one stored state.

    ``best_guess`` is the renormalized component-wise amplitude sum over
    the window (the windowed analogue of the owner's merge), before
    decoding.  ``guess_fidelity`` compares the decoded guess with the
    qubit originally stored, ignoring global phase.
    """

    window: tuple[int, int]
    captured_probability: float
    best_guess: Qubit
    guess_fidelity: float


def localization_report(state: WalkState) -> LocalizationReport:
    """Spread metrics of a walk state's position distribution."""
    dist = position_distribution(state)
    p = dist.probabilities
    j = dist.positions.astype(np.float64)
    mean = float(p @ j)
    var = float(p @ j**2) - mean**2
    std_dev = math.sqrt(max(var, 0.0))
    participation = 1.0 / float(np.sum(p**2))
    return LocalizationReport(
        std_dev=std_dev,
        participation_ratio=participation,
        distribution=dist,
    )


def eavesdrop(
    state: WalkState,
    window: tuple[int, int],
    true_input: Qubit,
    cfg: MemoryConfig,
) -> EavesdropperResult:
    """Reconstruct the stored qubit from a contiguous window of sites.

    The adversary sums the amplitudes over ``window = (lo, hi)``
    (inclusive), renormalizes, and decodes exactly as the owner would.
    Raises :class:`EmptyCaptureError` when the window probability is
    below ``EMPTY_CAPTURE_TOL`` — or when the windowed sums interfere to
    numerical zero — since no guess is defined there.
    """
    lo, hi = window
    t = state.steps_elapsed
    if lo > hi:
        raise ValueError(f"window must satisfy lo <= hi, got {window}")
    if lo < -t or hi > t:
        raise ValueError(f"window {window} exceeds the reachable sites [-{t}, {t}]")

    cols = slice(lo + state.capacity, hi + state.capacity + 1)
    amps = state.amplitudes[:, cols]
    captured = float(np.sum(np.abs(amps) ** 2))
    if captured < EMPTY_CAPTURE_TOL:
        raise EmptyCaptureError(
            f"window {window} captures probability {captured:.3e}; no guess defined"
        )

    a = complex(amps[0].sum())
    b = complex(amps[1].sum())
    merged_norm = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
    if merged_norm**2 < EMPTY_CAPTURE_TOL:
        raise EmptyCaptureError(
            f"window {window} sums interfere to norm {merged_norm:.3e}; "
            "no guess defined"
        )
    guess = Qubit(a / merged_norm, b / merged_norm)
    decoded = decode_retrieved(guess, cfg)
    return EavesdropperResult(
        window=(int(lo), int(hi)),
        captured_probability=min(captured, 1.0),
        best_guess=guess,
        guess_fidelity=fidelity(decoded, true_input),
    )


def eavesdrop_curve(
    state: WalkState,
    true_input: Qubit,
    cfg: MemoryConfig,
    halfwidths: "np.ndarray | list[int] | None" = None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Capture and guess quality for origin-centered windows |j| <= w.

    Returns parallel arrays ``(halfwidths, captured_probability,
    guess_fidelity)``; half-widths default to 0..t.  Windows with
    nothing to read get captured probability 0 and fidelity NaN instead
    of an error, so the curve is always complete.

    The capture column is accumulated radius by radius — widening a
    window adds nonnegative mass to a single running sum — so it is
    exactly nondecreasing, with no floating-point jitter between
    independently summed windows.
    """
    t = state.steps_elapsed
    if halfwidths is None:
        halfwidths = np.arange(t + 1)
    halfwidths = np.asarray(halfwidths, dtype=np.int64)
    if halfwidths.size and (halfwidths.min() < 0 or halfwidths.max() > t):
        raise ValueError(f"half-widths must lie in [0, {t}]")

    # Per-radius amplitude sums and probability mass, then prefix sums.
    origin = state.capacity
    amps = state.amplitudes
    radius_amps = np.empty((2, t + 1), dtype=np.complex128)
    radius_mass = np.empty(t + 1, dtype=np.float64)
    radius_amps[:, 0] = amps[:, origin]
    radius_mass[0] = float(np.sum(np.abs(amps[:, origin]) ** 2))
    for k in range(1, t + 1):
        ring = amps[:, origin - k] + amps[:, origin + k]
        radius_amps[:, k] = ring
        radius_mass[k] = float(
            np.sum(np.abs(amps[:, origin - k]) ** 2)
            + np.sum(np.abs(amps[:, origin + k]) ** 2)
        )
    cum_amps = np.cumsum(radius_amps, axis=1)
    cum_mass = np.minimum(np.cumsum(radius_mass), 1.0)

    captured = np.empty(halfwidths.size, dtype=np.float64)
    guess_fid = np.empty(halfwidths.size, dtype=np.float64)
    for i, w in enumerate(halfwidths):
        mass = float(cum_mass[w])
        captured[i] = mass
        a, b = complex(cum_amps[0, w]), complex(cum_amps[1, w])
        merged_norm = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
        if mass < EMPTY_CAPTURE_TOL or merged_norm**2 < EMPTY_CAPTURE_TOL:
            if mass < EMPTY_CAPTURE_TOL:
                captured[i] = 0.0
            guess_fid[i] = math.nan
            continue
        guess = Qubit(a / merged_norm, b / merged_norm)
        guess_fid[i] = fidelity(decode_retrieved(guess, cfg), true_input)
    return halfwidths, captured, guess_fid


def spread_curve(
    q: Qubit,
    schedule: CoinSchedule,
    times: "np.ndarray | list[int]",
) -> np.ndarray:
    """Position standard deviation after each requested number of steps.

    ``times`` must be nondecreasing step counts within the schedule
    length; one pass over the walk serves all of them.
    """
    times = np.asarray(times, dtype=np.int64)
    if times.size and (times[0] < 0 or times[-1] > len(schedule)):
        raise ValueError("requested times fall outside the schedule")
    if np.any(np.diff(times) < 0):
        raise ValueError("times must be nondecreasing")

    out = np.empty(times.size, dtype=np.float64)
    want = 0
    for state in iter_states(q, schedule):
        while want < times.size and times[want] == state.steps_elapsed:
            out[want] = localization_report(state).std_dev
            want += 1
        if want == times.size:
            break
    return out


@dataclass(frozen=True)
class EnsembleStats:
    """Per-seed metrics and their aggregates over a disorder ensemble.

    Aggregates are unweighted means with standard errors (sample std /
    sqrt(n); zero for a single seed).
    """

    seeds: tuple[int, ...]
    reports: tuple[LocalizationReport, ...]
    fidelities: np.ndarray
    mean_std_dev: float
    stderr_std_dev: float
    mean_participation: float
    stderr_participation: float
    mean_fidelity: float
    stderr_fidelity: float


def _mean_stderr(values: np.ndarray) -> tuple[float, float]:
    mean = float(values.mean())
    if values.size < 2:
        return mean, 0.0
    return mean, float(values.std(ddof=1) / math.sqrt(values.size))


def ensemble_stats(
    q: Qubit,
    steps: int,
    seeds: "list[int] | np.ndarray",
    encoding: str = "hadamard",
    phase_correction: bool = True,
) -> EnsembleStats:
    """Run one disordered storage cycle per seed and aggregate the metrics.

    Each seed gets its own temporal-disorder schedule of length
    ``steps``; the walk is run once per seed and yields both the
    localization report of the stored state and the owner's retrieval
    fidelity under the given encoding/correction choice.  Deterministic:
    the same seeds give the same stats.
    """
    seeds = [int(s) for s in seeds]
    if not seeds:
        raise ValueError("seeds must be nonempty")

    reports: list[LocalizationReport] = []
    fidelities = np.empty(len(seeds), dtype=np.float64)
    for i, seed in enumerate(seeds):
        schedule = CoinSchedule.temporal_disorder(steps, seed)
        cfg = MemoryConfig(
            schedule=schedule, encoding=encoding, phase_correction=phase_correction
        )
        stored = apply(hadamard(), q) if cfg.encoding == "hadamard" else q
        state = evolve(stored, schedule)
        reports.append(localization_report(state))
        final = decode_retrieved(collect(state), cfg)
        fidelities[i] = fidelity(final, q)

    stds = np.array([r.std_dev for r in reports])
    prs = np.array([r.participation_ratio for r in reports])
    mean_std, se_std = _mean_stderr(stds)
    mean_pr, se_pr = _mean_stderr(prs)
    mean_fid, se_fid = _mean_stderr(fidelities)
    return EnsembleStats(
        seeds=tuple(seeds),
        reports=tuple(reports),
        fidelities=fidelities,
        mean_std_dev=mean_std,
        stderr_std_dev=se_std,
        mean_participation=mean_pr,
        stderr_participation=se_pr,
        mean_fidelity=mean_fid,
        stderr_fidelity=se_fid,
    )
