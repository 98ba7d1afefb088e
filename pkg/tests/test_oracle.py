"""Dense-matrix cross-checks of the recurrence engine and the merge step."""

import math

import numpy as np
import pytest

from walkmem.oracle import (
    build_walk_unitary,
    collection_stages,
    dense_initial,
    dense_vector,
    oracle_collect,
    oracle_evolve,
    oracle_evolve_and_collect,
    sequential_collect,
    verification_suite,
)
from walkmem.qubit import Qubit, is_unitary
from walkmem.walk import CoinSchedule, evolve


class TestWalkUnitary:
    def test_zero_angle_is_permutation(self):
        w = build_walk_unitary(0.0, capacity=2)
        assert np.all(np.isin(w, (0.0, 1.0)))
        assert np.all(w.sum(axis=0) == 1.0)
        assert np.all(w.sum(axis=1) == 1.0)

    def test_unitary_for_random_angles(self):
        rng = np.random.default_rng(1)
        for theta in rng.uniform(-math.pi, math.pi, 10):
            w = build_walk_unitary(theta, capacity=3)
            assert np.allclose(w.conj().T @ w, np.eye(w.shape[0]), atol=1e-12)

    def test_single_step_matches_engine(self):
        q = Qubit(0.6, 0.8j)
        vec = build_walk_unitary(0.7, capacity=2) @ dense_initial(q, 2)
        walked = evolve(q, CoinSchedule.constant(0.7, 1))
        assert np.allclose(vec, dense_vector(walked, capacity=2), atol=1e-15)

    def test_capacity_guard(self):
        with pytest.raises(ValueError):
            build_walk_unitary(0.1, capacity=0)
        with pytest.raises(ValueError):
            oracle_evolve(Qubit(1, 0), CoinSchedule.constant(0.1, 5), capacity=5)


class TestCollection:
    def test_dense_collect_matches_summation_identity(self):
        q = Qubit(1, 0)
        got = oracle_evolve_and_collect(q, CoinSchedule.constant(math.pi / 4, 2))
        assert got.alpha == pytest.approx(0.0, abs=1e-15)
        assert got.beta == pytest.approx(-1j, abs=1e-15)

    def test_stage_matrices_are_permutation_with_merge(self):
        stage0, stage1 = collection_stages(capacity=2)
        for stage in (stage0, stage1):
            assert np.all(np.isin(stage, (0.0, 1.0)))
            # every column routes its amplitude to exactly one slot
            assert np.all(stage.sum(axis=0) == 1.0)

    def test_sequential_equals_plain_summation(self):
        rng = np.random.default_rng(3)
        for seed in range(10):
            t = int(rng.integers(0, 7))
            sched = CoinSchedule.temporal_disorder(t, seed)
            raw = rng.normal(size=4)
            n = math.sqrt(np.sum(raw**2))
            q = Qubit(complex(raw[0], raw[1]) / n, complex(raw[2], raw[3]) / n)
            vec = oracle_evolve(q, sched)
            a = sequential_collect(vec, t + 1)
            b = oracle_collect(vec)
            assert a.alpha == pytest.approx(b.alpha, abs=1e-14)
            assert a.beta == pytest.approx(b.beta, abs=1e-14)

    def test_sequential_collect_checks_vector_size(self):
        with pytest.raises(ValueError):
            sequential_collect(np.zeros(4, dtype=complex), capacity=3)


def test_verification_suite_all_green():
    checks = verification_suite(trials=30, max_steps=8, seed=5)
    assert len(checks) == 8
    failures = [str(c) for c in checks if not c.passed]
    assert not failures, "\n".join(failures)


def test_verification_suite_deterministic():
    a = verification_suite(trials=10, max_steps=5, seed=2)
    b = verification_suite(trials=10, max_steps=5, seed=2)
    assert [(c.name, c.max_error) for c in a] == [(c.name, c.max_error) for c in b]
