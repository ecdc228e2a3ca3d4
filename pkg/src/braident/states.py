"""Qubit register states: named states, measurement, partial trace, local action.

Indexing convention: qubit 1 is the leftmost symbol of a ket string and the
most significant bit of the amplitude index, so ``basis_state("101")`` puts
amplitude 1 at index 5.  Measurement removes the measured qubit and returns a
renormalized state on the remaining ones.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .linalg import (
    complex_from_json,
    complex_to_json,
    hermitian_eigenvalues,
    is_unitary,
    kron,
)

NORM_TOL = 1e-10
DRIFT_TOL = 1e-8
PROB_FLOOR = 1e-12


class ImpossibleOutcomeError(ValueError):
    """Requested measurement outcome has (numerically) zero probability."""


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class PureState:
    """Normalized amplitude vector over ``qubits`` qubits."""

    qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.qubits < 1:
            raise ValueError(f"need at least one qubit, got {self.qubits}")
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != 2**self.qubits:
            raise ValueError(
                f"amplitude count {amps.size} does not match 2^{self.qubits}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized: |amplitudes| = {norm!r}")
        object.__setattr__(self, "amplitudes", _freeze(amps.copy()))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite operator on a qubit register."""

    qubits: int
    matrix: np.ndarray

    def __post_init__(self):
        dim = 2**self.qubits
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (dim, dim):
            raise ValueError(f"matrix shape {m.shape} does not match 2^{self.qubits}")
        if np.linalg.norm(m - m.conj().T) > NORM_TOL:
            raise ValueError("density matrix is not Hermitian within tolerance")
        if abs(np.trace(m).real - 1.0) > NORM_TOL or abs(np.trace(m).imag) > NORM_TOL:
            raise ValueError(f"density matrix trace is not 1: {np.trace(m)!r}")
        if hermitian_eigenvalues(m, NORM_TOL)[-1] < -NORM_TOL:
            raise ValueError("density matrix has a negative eigenvalue")
        object.__setattr__(self, "matrix", _freeze(m.copy()))


@dataclass(frozen=True)
class MeasurementOutcome:
    probability: float
    post_state: PureState


def basis_state(bits: str) -> PureState:
    """Computational basis vector for a 0/1 string, leftmost bit = qubit 1."""
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"basis label must be a nonempty string of 0/1, got {bits!r}")
    amps = np.zeros(2 ** len(bits), dtype=complex)
    amps[int(bits, 2)] = 1.0
    return PureState(len(bits), amps)


def named_state(name: str) -> PureState:
    """One of the reference states: 'ghz', 'phi' (both 3 qubits) or 'bell' (2)."""
    s2 = 1.0 / np.sqrt(2.0)
    if name == "ghz":
        amps = np.zeros(8, dtype=complex)
        amps[0b000] = amps[0b111] = s2
        return PureState(3, amps)
    if name == "phi":
        amps = np.zeros(8, dtype=complex)
        for idx in (0b000, 0b011, 0b101, 0b110):
            amps[idx] = 0.5
        return PureState(3, amps)
    if name == "bell":
        amps = np.zeros(4, dtype=complex)
        amps[0b00] = amps[0b11] = s2
        return PureState(2, amps)
    raise ValueError(f"unknown named state {name!r} (expected ghz, phi or bell)")


def apply(operator, state: PureState) -> PureState:
    """Apply a unitary matrix to the state, correcting tiny norm drift.

    Norm drift beyond 1e-8 means the operator was not unitary and raises.
    """
    m = np.asarray(operator, dtype=complex)
    dim = 2**state.qubits
    if m.shape != (dim, dim):
        raise ValueError(f"operator shape {m.shape} does not match 2^{state.qubits}")
    out = m @ state.amplitudes
    norm = np.linalg.norm(out)
    if abs(norm - 1.0) > DRIFT_TOL:
        raise ValueError(f"operator is not norm preserving (output norm {norm!r})")
    return PureState(state.qubits, out / norm)


def measure_qubit(state: PureState, k: int, outcome: int) -> MeasurementOutcome:
    """Project qubit k onto |outcome> and drop it from the register.

    Returns the outcome probability and the renormalized post-measurement
    state on the remaining qubits.  Outcomes with probability below 1e-12
    raise ImpossibleOutcomeError.
    """
    n = state.qubits
    if n < 2:
        raise ValueError("measurement removes a qubit, so the register needs at least 2")
    if not 1 <= k <= n:
        raise ValueError(f"qubit index {k} out of range 1..{n}")
    if outcome not in (0, 1):
        raise ValueError(f"outcome must be 0 or 1, got {outcome!r}")
    branch = state.amplitudes.reshape([2] * n).take(outcome, axis=k - 1).reshape(-1)
    probability = float(np.linalg.norm(branch) ** 2)
    if probability < PROB_FLOOR:
        raise ImpossibleOutcomeError(
            f"outcome {outcome} on qubit {k} has probability {probability:.3e}"
        )
    probability = min(max(probability, 0.0), 1.0)
    post = PureState(n - 1, branch / np.sqrt(probability))
    return MeasurementOutcome(probability, post)


def density(state: PureState) -> DensityMatrix:
    """Rank-one projector |psi><psi|."""
    return DensityMatrix(state.qubits, np.outer(state.amplitudes, state.amplitudes.conj()))


def partial_trace(dm: DensityMatrix, keep) -> DensityMatrix:
    """Reduced state on the kept qubits (ascending original order)."""
    n = dm.qubits
    kept = sorted(set(keep))
    if not kept:
        raise ValueError("keep set must be nonempty")
    if kept[0] < 1 or kept[-1] > n:
        raise ValueError(f"keep set {kept} not a subset of 1..{n}")
    letters = string.ascii_letters
    bra = [letters[i] for i in range(n)]
    ket = [letters[i] if (i + 1) not in kept else letters[n + i] for i in range(n)]
    out = [letters[i] for i in range(n) if (i + 1) in kept]
    out += [letters[n + i] for i in range(n) if (i + 1) in kept]
    subscript = "".join(bra) + "".join(ket) + "->" + "".join(out)
    reduced = np.einsum(subscript, dm.matrix.reshape([2] * (2 * n)))
    dim = 2 ** len(kept)
    return DensityMatrix(len(kept), reduced.reshape(dim, dim))


def apply_local(state: PureState, factors) -> PureState:
    """Apply a tensor product of single-qubit unitaries, factor i to qubit i."""
    factors = [np.asarray(f, dtype=complex) for f in factors]
    if len(factors) != state.qubits:
        raise ValueError(
            f"need {state.qubits} factors (one per qubit), got {len(factors)}"
        )
    for i, f in enumerate(factors, start=1):
        if f.shape != (2, 2):
            raise ValueError(f"factor {i} has shape {f.shape}, expected (2, 2)")
        if not is_unitary(f, NORM_TOL):
            raise ValueError(f"factor {i} is not unitary within tolerance")
    return apply(reduce(kron, factors), state)


def state_to_json(state: PureState) -> dict:
    """JSON form {"qubits": n, "amplitudes": [[re, im], ...]}."""
    return {
        "qubits": state.qubits,
        "amplitudes": [complex_to_json(z) for z in state.amplitudes],
    }


def state_from_json(data: dict) -> PureState:
    try:
        qubits = int(data["qubits"])
        amps = np.array([complex_from_json(p) for p in data["amplitudes"]], dtype=complex)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed state document: {exc}") from exc
    return PureState(qubits, amps)
