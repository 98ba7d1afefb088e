"""Walk engine: schedules, stepping, structural invariants, distributions."""

import math

import numpy as np
import pytest

from walkmem.qubit import Qubit
from walkmem.walk import (
    CapacityExceededError,
    CoinSchedule,
    evolve,
    initial_state,
    iter_states,
    make_schedule,
    position_distribution,
    step,
)

RT2 = math.sqrt(2.0)


def random_qubit(rng):
    raw = rng.normal(size=4)
    a = complex(raw[0], raw[1])
    b = complex(raw[2], raw[3])
    n = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
    return Qubit(a / n, b / n)


def site(state, j):
    """(alpha_j, beta_j) of a walk state."""
    return state.alpha[j + state.capacity], state.beta[j + state.capacity]


class TestSchedules:
    def test_constant(self):
        sched = CoinSchedule.constant(math.pi / 6, 3)
        assert len(sched) == 3
        assert np.all(sched.angles == math.pi / 6)
        assert sched.theta_sum == pytest.approx(math.pi / 2, abs=1e-12)

    def test_theta_sum_matches_plain_sum(self):
        sched = CoinSchedule.temporal_disorder(500, seed=4)
        assert sched.theta_sum == pytest.approx(float(np.sum(sched.angles)), abs=1e-12)

    def test_disorder_reproducible(self):
        a = CoinSchedule.temporal_disorder(100, seed=12345)
        b = CoinSchedule.temporal_disorder(100, seed=12345)
        assert np.array_equal(a.angles, b.angles)  # bit-for-bit

    def test_disorder_seeds_differ(self):
        a = CoinSchedule.temporal_disorder(100, seed=1)
        b = CoinSchedule.temporal_disorder(100, seed=2)
        assert not np.array_equal(a.angles, b.angles)

    def test_disorder_range(self):
        sched = CoinSchedule.temporal_disorder(10_000, seed=8)
        assert np.all(sched.angles >= -math.pi / 2)
        assert np.all(sched.angles <= math.pi / 2)

    def test_disorder_mean_near_zero(self):
        # Law of large numbers for uniform(-pi/2, pi/2).
        sched = CoinSchedule.temporal_disorder(100_000, seed=99)
        assert abs(float(sched.angles.mean())) < 0.02

    def test_make_schedule_dispatch(self):
        const = make_schedule("constant", 3, theta=math.pi / 6)
        assert const.kind == "constant" and len(const) == 3
        dis = make_schedule("temporal-disorder", 7, seed=42)
        assert dis.kind == "temporal-disorder" and len(dis) == 7

    def test_make_schedule_errors(self):
        with pytest.raises(ValueError):
            make_schedule("constant", 3)  # no theta
        with pytest.raises(ValueError):
            make_schedule("temporal-disorder", 3)  # no seed
        with pytest.raises(ValueError):
            make_schedule("spatial", 3, theta=0.1)
        with pytest.raises(ValueError):
            CoinSchedule.constant(math.nan, 3)
        with pytest.raises(ValueError):
            CoinSchedule.constant(0.1, -1)

    def test_angles_immutable(self):
        sched = CoinSchedule.constant(0.2, 5)
        with pytest.raises(ValueError):
            sched.angles[0] = 0.0


class TestStepping:
    def test_initial_state_places_qubit_at_origin(self):
        q = Qubit(1 / RT2, 1j / RT2)
        state = initial_state(q, capacity=4)
        assert site(state, 0) == (q.alpha, q.beta)
        assert state.norm_squared() == pytest.approx(1.0, abs=1e-15)
        assert state.steps_elapsed == 0

    def test_one_step_hand_values(self):
        state = step(initial_state(Qubit(1, 0), 1), math.pi / 4)
        a_minus, b_minus = site(state, -1)
        a_plus, b_plus = site(state, +1)
        assert a_minus == pytest.approx(1 / RT2)
        assert b_plus == pytest.approx(-1j / RT2)
        assert b_minus == 0 and a_plus == 0

    def test_zero_angle_is_pure_shift(self):
        state = step(initial_state(Qubit(1, 0), 1), 0.0)
        assert site(state, -1)[0] == 1.0
        assert np.count_nonzero(state.amplitudes) == 1

    def test_two_step_hand_values(self):
        state = evolve(Qubit(1, 0), CoinSchedule.constant(math.pi / 4, 2))
        assert site(state, -2)[0] == pytest.approx(0.5)
        assert site(state, 0)[0] == pytest.approx(-0.5)
        assert site(state, 0)[1] == pytest.approx(-0.5j)
        assert site(state, +2)[1] == pytest.approx(-0.5j)

    def test_evolve_empty_schedule_is_initial_state(self):
        q = Qubit(0.6, 0.8j)
        state = evolve(q, CoinSchedule.constant(0.3, 0))
        assert state.steps_elapsed == 0
        assert site(state, 0) == (q.alpha, q.beta)

    def test_capacity_exceeded(self):
        state = initial_state(Qubit(1, 0), 0)
        with pytest.raises(CapacityExceededError):
            step(state, 0.1)

    def test_step_rejects_non_finite_angle(self):
        with pytest.raises(ValueError):
            step(initial_state(Qubit(1, 0), 1), math.inf)

    def test_amplitudes_not_writable(self):
        state = initial_state(Qubit(1, 0), 2)
        with pytest.raises(ValueError):
            state.amplitudes[0, 0] = 1.0

    def test_iter_states_yields_every_prefix(self):
        sched = CoinSchedule.constant(math.pi / 5, 6)
        states = list(iter_states(Qubit(1, 0), sched))
        assert [s.steps_elapsed for s in states] == list(range(7))
        final = evolve(Qubit(1, 0), sched)
        assert np.array_equal(states[-1].amplitudes, final.amplitudes)


class TestInvariants:
    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_norm_conserved_along_every_prefix(self, seed):
        rng = np.random.default_rng(seed)
        q = random_qubit(rng)
        sched = CoinSchedule.temporal_disorder(80, seed=seed)
        for state in iter_states(q, sched):
            assert state.norm_squared() == pytest.approx(1.0, abs=1e-12)

    def test_support_and_parity_zeros_are_exact(self):
        rng = np.random.default_rng(7)
        q = random_qubit(rng)
        for state in iter_states(q, CoinSchedule.temporal_disorder(40, seed=3)):
            t = state.steps_elapsed
            j = state.positions
            outside = np.abs(j) > t
            wrong_parity = (j + t) % 2 != 0
            assert np.all(state.amplitudes[:, outside] == 0)
            assert np.all(state.amplitudes[:, wrong_parity] == 0)

    def test_evolution_is_linear(self):
        rng = np.random.default_rng(13)
        sched = CoinSchedule.temporal_disorder(25, seed=6)
        q1, q2 = random_qubit(rng), random_qubit(rng)
        # A normalized superposition of the two inputs.
        w1, w2 = 0.6, complex(0.48, 0.64)
        a = w1 * q1.alpha + w2 * q2.alpha
        b = w1 * q1.beta + w2 * q2.beta
        n = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
        mixed = evolve(Qubit(a / n, b / n), sched)
        combined = (
            w1 * evolve(q1, sched).amplitudes + w2 * evolve(q2, sched).amplitudes
        ) / n
        assert np.allclose(mixed.amplitudes, combined, atol=1e-12)


class TestPositionDistribution:
    def test_initial_distribution(self):
        dist = position_distribution(initial_state(Qubit(1, 0), 3))
        assert dist.as_dict() == {0: 1.0}

    def test_one_step_distribution(self):
        state = step(initial_state(Qubit(1, 0), 1), math.pi / 4)
        dist = position_distribution(state).as_dict()
        assert dist[-1] == pytest.approx(0.5)
        assert dist[+1] == pytest.approx(0.5)

    def test_two_step_distribution(self):
        state = evolve(Qubit(1, 0), CoinSchedule.constant(math.pi / 4, 2))
        dist = position_distribution(state).as_dict()
        assert dist[-2] == pytest.approx(0.25)
        assert dist[0] == pytest.approx(0.5)
        assert dist[+2] == pytest.approx(0.25)

    def test_probabilities_sum_to_one(self):
        rng = np.random.default_rng(19)
        state = evolve(random_qubit(rng), CoinSchedule.temporal_disorder(60, seed=10))
        dist = position_distribution(state)
        assert float(dist.probabilities.sum()) == pytest.approx(1.0, abs=1e-12)

    def test_support_respects_parity(self):
        state = evolve(Qubit(1, 0), CoinSchedule.constant(0.4, 5))
        sites, _ = position_distribution(state).support()
        assert np.all((sites + 5) % 2 == 0)
        assert np.all(np.abs(sites) <= 5)
