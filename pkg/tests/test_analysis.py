"""Localization metrics, seed ensembles, and the window-limited adversary."""

import math

import numpy as np
import pytest

from walkmem.analysis import (
    EmptyCaptureError,
    eavesdrop,
    eavesdrop_curve,
    ensemble_stats,
    localization_report,
    spread_curve,
)
from walkmem.memory import MemoryConfig, store_retrieve
from walkmem.qubit import Qubit, apply, hadamard
from walkmem.walk import CoinSchedule, evolve, initial_state, step

RT2 = math.sqrt(2.0)
SYMMETRIC = Qubit(1 / RT2, 1j / RT2)


class TestLocalizationReport:
    def test_single_site(self):
        report = localization_report(initial_state(Qubit(1, 0), 3))
        assert report.std_dev == 0.0
        assert report.participation_ratio == pytest.approx(1.0)

    def test_two_equal_sites(self):
        state = step(initial_state(Qubit(1, 0), 1), math.pi / 4)
        report = localization_report(state)
        assert report.std_dev == pytest.approx(1.0, abs=1e-12)
        assert report.participation_ratio == pytest.approx(2.0, abs=1e-12)

    def test_participation_bounded_by_occupied_sites(self):
        state = evolve(SYMMETRIC, CoinSchedule.temporal_disorder(50, seed=1))
        report = localization_report(state)
        occupied = int(np.count_nonzero(report.distribution.probabilities))
        assert 1.0 <= report.participation_ratio <= occupied + 1e-9

    def test_window_capture_monotone_and_complete(self):
        state = evolve(SYMMETRIC, CoinSchedule.temporal_disorder(40, seed=2))
        report = localization_report(state)
        captures = [report.window_capture(w) for w in range(41)]
        assert all(b >= a for a, b in zip(captures, captures[1:]))
        assert captures[-1] == pytest.approx(1.0, abs=1e-12)

    def test_ordered_spread_dominates_disordered(self):
        # At t = 100 the constant-angle walk is several times wider than
        # the disorder-ensemble average.
        t = 100
        ordered = localization_report(
            evolve(SYMMETRIC, CoinSchedule.constant(math.pi / 4, t))
        ).std_dev
        disordered = [
            localization_report(
                evolve(SYMMETRIC, CoinSchedule.temporal_disorder(t, seed))
            ).std_dev
            for seed in range(20)
        ]
        assert ordered >= 3.0 * float(np.mean(disordered))


class TestSpreadCurve:
    def test_matches_pointwise_reports(self):
        sched = CoinSchedule.constant(math.pi / 4, 30)
        sigmas = spread_curve(SYMMETRIC, sched, [0, 10, 30])
        expected = [
            localization_report(
                evolve(SYMMETRIC, CoinSchedule.constant(math.pi / 4, t))
            ).std_dev
            for t in (0, 10, 30)
        ]
        assert sigmas == pytest.approx(expected, abs=1e-12)

    def test_validates_times(self):
        sched = CoinSchedule.constant(0.2, 10)
        with pytest.raises(ValueError):
            spread_curve(SYMMETRIC, sched, [0, 20])
        with pytest.raises(ValueError):
            spread_curve(SYMMETRIC, sched, [5, 3])


class TestEavesdrop:
    def test_one_step_window_hand_case(self):
        cfg = MemoryConfig(CoinSchedule.constant(math.pi / 4, 1))
        state = evolve(Qubit(1, 0), cfg.schedule)
        result = eavesdrop(state, (-1, -1), Qubit(1, 0), cfg)
        assert result.captured_probability == pytest.approx(0.5, abs=1e-15)
        assert result.best_guess.alpha == 1.0
        assert result.best_guess.beta == 0.0
        assert result.guess_fidelity == pytest.approx(1.0, abs=1e-15)

    def test_full_window_matches_owner_fidelity(self):
        rng = np.random.default_rng(5)
        for seed in range(10):
            raw = rng.normal(size=4)
            n = math.sqrt(np.sum(raw**2))
            q = Qubit(complex(raw[0], raw[1]) / n, complex(raw[2], raw[3]) / n)
            t = int(rng.integers(1, 50))
            for encoding, correction in (("none", False), ("hadamard", True)):
                cfg = MemoryConfig(
                    CoinSchedule.temporal_disorder(t, seed),
                    encoding=encoding,
                    phase_correction=correction,
                )
                stored = apply(hadamard(), q) if encoding == "hadamard" else q
                state = evolve(stored, cfg.schedule)
                result = eavesdrop(state, (-t, t), q, cfg)
                owner = store_retrieve(q, cfg)
                assert result.captured_probability == pytest.approx(1.0, abs=1e-10)
                assert result.guess_fidelity == pytest.approx(
                    owner.fidelity_to_input, abs=1e-10
                )

    def test_empty_window_raises(self):
        # After one step nothing sits at the origin.
        state = evolve(Qubit(1, 0), CoinSchedule.constant(math.pi / 4, 1))
        cfg = MemoryConfig(CoinSchedule.constant(math.pi / 4, 1))
        with pytest.raises(EmptyCaptureError):
            eavesdrop(state, (0, 0), Qubit(1, 0), cfg)

    def test_window_bounds_validated(self):
        state = evolve(Qubit(1, 0), CoinSchedule.constant(math.pi / 4, 2))
        cfg = MemoryConfig(CoinSchedule.constant(math.pi / 4, 2))
        with pytest.raises(ValueError):
            eavesdrop(state, (-5, 5), Qubit(1, 0), cfg)
        with pytest.raises(ValueError):
            eavesdrop(state, (2, -2), Qubit(1, 0), cfg)

    def test_partial_windows_capture_less_under_disorder(self):
        q = SYMMETRIC
        cfg = MemoryConfig(
            CoinSchedule.temporal_disorder(60, seed=9),
            encoding="hadamard",
            phase_correction=True,
        )
        state = evolve(apply(hadamard(), q), cfg.schedule)
        halfwidths, captured, _ = eavesdrop_curve(state, q, cfg)
        assert np.all(np.diff(captured) >= -1e-15)  # monotone in width
        assert captured[-1] == pytest.approx(1.0, abs=1e-10)
        assert captured[0] < 0.5  # a single site never holds the bulk

    def test_curve_marks_unreadable_windows(self):
        # Odd time, so |j| <= 0 is structurally empty: probability 0, NaN guess.
        state = evolve(Qubit(1, 0), CoinSchedule.constant(math.pi / 3, 1))
        cfg = MemoryConfig(CoinSchedule.constant(math.pi / 3, 1))
        halfwidths, captured, guess_fid = eavesdrop_curve(state, Qubit(1, 0), cfg)
        assert list(halfwidths) == [0, 1]
        assert captured[0] == 0.0
        assert math.isnan(guess_fid[0])
        assert captured[1] == pytest.approx(1.0, abs=1e-12)


class TestEnsembleStats:
    def test_single_seed_aggregate_equals_report(self):
        stats = ensemble_stats(SYMMETRIC, 40, [7])
        assert stats.mean_std_dev == stats.reports[0].std_dev
        assert stats.stderr_std_dev == 0.0
        assert stats.mean_fidelity == stats.fidelities[0]

    def test_corrected_retrieval_perfect_for_every_seed(self):
        stats = ensemble_stats(
            SYMMETRIC, 60, range(12), encoding="hadamard", phase_correction=True
        )
        assert np.all(np.abs(stats.fidelities - 1.0) < 1e-10)

    def test_deterministic_given_seeds(self):
        a = ensemble_stats(SYMMETRIC, 30, [1, 2, 3])
        b = ensemble_stats(SYMMETRIC, 30, [1, 2, 3])
        assert a.mean_std_dev == b.mean_std_dev
        assert np.array_equal(a.fidelities, b.fidelities)

    def test_disjoint_seed_lists_statistically_consistent(self):
        first = ensemble_stats(SYMMETRIC, 100, range(0, 50))
        second = ensemble_stats(SYMMETRIC, 100, range(50, 100))
        gap = abs(first.mean_std_dev - second.mean_std_dev)
        combined = math.hypot(first.stderr_std_dev, second.stderr_std_dev)
        assert gap <= 3.0 * combined

    def test_requires_seeds(self):
        with pytest.raises(ValueError):
            ensemble_stats(SYMMETRIC, 10, [])
