"""Two-level-system primitives: qubits, 2x2 unitaries, and fidelity.

All matrices are plain ``numpy`` arrays of shape (2, 2) and dtype
complex128.  The constructors in this module always return exactly
unitary matrices (up to floating-point rounding); :func:`is_unitary`
is the corresponding validator.  States are represented by the small
immutable :class:`Qubit` value type, which enforces normalization at
construction time.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import InitVar, dataclass

import numpy as np

__all__ = [
    "NORM_ATOL",
    "Qubit",
    "apply",
    "coin_matrix",
    "diagonal_phase",
    "fidelity",
    "hadamard",
    "identity",
    "is_unitary",
    "sigma_x",
    "sigma_x_exponential",
]

NORM_ATOL = 1e-12
"""Default tolerance on ``|alpha|**2 + |beta|**2 - 1`` at construction."""

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Qubit:
    """Normalized amplitude pair (alpha, beta) for the basis states |0>, |1>.

    Parameters
    ----------
    alpha, beta:
        Complex amplitudes of |0> and |1>.
    atol:
        Allowed deviation of ``|alpha|**2 + |beta|**2`` from one.  The
        default is strict; operations that legitimately produce slightly
        off-normalized states (amplitude collection after a long walk)
        pass a looser value.
    """

    alpha: complex
    beta: complex
    atol: InitVar[float] = NORM_ATOL

    def __post_init__(self, atol: float) -> None:
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        n2 = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if not math.isfinite(n2) or abs(n2 - 1.0) > atol:
            raise ValueError(
                f"amplitudes are not normalized: |alpha|^2 + |beta|^2 = {n2!r}"
            )

    @classmethod
    def from_angles(cls, delta: float, eta: float) -> "Qubit":
        """Build cos(delta)|0> + e^(i eta) sin(delta)|1>."""
        return cls(math.cos(delta), cmath.exp(1j * eta) * math.sin(delta))

    def as_array(self) -> np.ndarray:
        """Amplitudes as a length-2 complex vector."""
        return np.array([self.alpha, self.beta], dtype=np.complex128)

    def probabilities(self) -> tuple[float, float]:
        """Measurement probabilities (P(|0>), P(|1>))."""
        return abs(self.alpha) ** 2, abs(self.beta) ** 2


def identity() -> np.ndarray:
    """2x2 identity matrix."""
    return np.eye(2, dtype=np.complex128)


def sigma_x() -> np.ndarray:
    """Pauli X matrix [[0, 1], [1, 0]]."""
    return np.array([[0, 1], [1, 0]], dtype=np.complex128)


def hadamard() -> np.ndarray:
    """Hadamard matrix (1/sqrt(2)) [[1, 1], [1, -1]]."""
    return np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2.0)


def coin_matrix(theta: float) -> np.ndarray:
    """Coin rotation [[cos t, -i sin t], [-i sin t, cos t]] for angle ``theta``.

    This is the internal-state mixing operation applied before every
    conditional shift of the walk.

    Raises
    ------
    ValueError
        If ``theta`` is not finite.
    """
    if not math.isfinite(theta):
        raise ValueError(f"coin angle must be finite, got {theta!r}")
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)


def sigma_x_exponential(angle: float) -> np.ndarray:
    """exp(-i * angle * sigma_x) = cos(angle) I - i sin(angle) sigma_x."""
    if not math.isfinite(angle):
        raise ValueError(f"angle must be finite, got {angle!r}")
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)


def diagonal_phase(phi: float) -> np.ndarray:
    """diag(e^(-i phi), e^(i phi)).

    ``phi`` is reduced modulo 2*pi before the exponentials are formed, so
    accumulated angle sums from long schedules stay well-conditioned.
    """
    if not math.isfinite(phi):
        raise ValueError(f"phase must be finite, got {phi!r}")
    r = math.remainder(phi, _TWO_PI)
    return np.array([[cmath.exp(-1j * r), 0], [0, cmath.exp(1j * r)]], dtype=np.complex128)


def is_unitary(m: np.ndarray, atol: float = 1e-12) -> bool:
    """True when ``m`` satisfies m^dagger m = I entrywise within ``atol``."""
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (2, 2):
        return False
    return bool(np.all(np.abs(m.conj().T @ m - np.eye(2)) <= atol))


def apply(u: np.ndarray, q: Qubit) -> Qubit:
    """Apply a 2x2 unitary to a qubit.

    The result is constructed with a normalization tolerance that allows
    for the input's own deviation plus rounding, so chained applications
    never tighten the norm requirement.
    """
    vec = np.asarray(u, dtype=np.complex128) @ q.as_array()
    slack = abs(abs(q.alpha) ** 2 + abs(q.beta) ** 2 - 1.0)
    return Qubit(vec[0], vec[1], atol=slack + NORM_ATOL)


def fidelity(a: Qubit, b: Qubit) -> float:
    """Squared overlap |<a|b>|^2, insensitive to global phase.

    Returns 1 exactly when the states agree up to a global phase and 0
    for orthogonal states.  Clipped into [0, 1] to absorb rounding.
    """
    overlap = a.alpha.conjugate() * b.alpha + a.beta.conjugate() * b.beta
    return float(min(1.0, max(0.0, abs(overlap) ** 2)))
