"""Brute-force dense state-vector engine.

Ground truth for everything else in the package: states are full complex
amplitude vectors over the computational basis, with particle 1 in the most
significant bit of the basis index.  Supports tensor products, particle
reordering, projective measurement in any GHZ basis, and single-qubit
measurements in the Z or X basis.

All amplitudes in scope are dyadic rationals times powers of 1/sqrt(2), so
double precision is exact to far below the 1e-10 tolerances used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .labels import GhzLabel, enumerate_basis

MAX_QUBITS = 24
PROB_FLOOR = 1e-14
_MATCH_TOL = 1e-9
_INV_SQRT2 = 1.0 / np.sqrt(2.0)


class ResourceLimitError(RuntimeError):
    """Raised when a dense computation would exceed the qubit cap."""


def _freeze(amps: np.ndarray) -> np.ndarray:
    amps = np.ascontiguousarray(amps, dtype=np.complex128)
    amps.flags.writeable = False
    return amps


@dataclass(frozen=True, eq=False)
class DenseState:
    """Normalized amplitude vector over 2^num_qubits computational states."""

    num_qubits: int
    amps: np.ndarray

    def __post_init__(self) -> None:
        if self.num_qubits < 1:
            raise ValueError("need at least one qubit")
        if self.num_qubits > MAX_QUBITS:
            raise ResourceLimitError(
                f"{self.num_qubits} qubits exceeds the {MAX_QUBITS}-qubit cap"
            )
        if self.amps.shape != (1 << self.num_qubits,):
            raise ValueError("amplitude vector has wrong length")
        object.__setattr__(self, "amps", _freeze(self.amps))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))


@dataclass(frozen=True, eq=False)
class MeasurementOutcome:
    """One branch of a projective GHZ-basis measurement.

    `relative_phase` is the phase of the residual state against the
    canonical embedding of its own matching label when that match is exact
    (residual_label is set), and 1 otherwise.
    """

    outcome: GhzLabel
    probability: float
    post_state: DenseState
    relative_phase: complex
    residual_label: Optional[GhzLabel]


def embed(label: GhzLabel) -> DenseState:
    """Dense vector of a canonical label: +-1/sqrt(2) at d and its partner."""
    amps = np.zeros(1 << label.m, dtype=np.complex128)
    amps[label.d] = _INV_SQRT2
    amps[label.partner] = label.sign * _INV_SQRT2
    return DenseState(label.m, amps)


def computational(bits: str) -> DenseState:
    """Dense vector of a single computational basis state |bits>."""
    amps = np.zeros(1 << len(bits), dtype=np.complex128)
    amps[int(bits, 2)] = 1.0
    return DenseState(len(bits), amps)


def tensor(states: Sequence[DenseState]) -> DenseState:
    """Tensor product; earlier states occupy more significant positions."""
    if not states:
        raise ValueError("tensor of an empty list")
    total = sum(s.num_qubits for s in states)
    if total > MAX_QUBITS:
        raise ResourceLimitError(
            f"{total} qubits exceeds the {MAX_QUBITS}-qubit cap"
        )
    amps = states[0].amps
    for s in states[1:]:
        amps = np.kron(amps, s.amps)
    return DenseState(total, amps)


def permute(state: DenseState, order: Sequence[int]) -> DenseState:
    """Reorder particles so position k holds original particle order[k-1].

    `order` lists the 1-based original particle numbers in their new
    left-to-right arrangement and must be a permutation of 1..N.
    """
    n = state.num_qubits
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {order!r}")
    axes = [p - 1 for p in order]
    amps = state.amps.reshape([2] * n).transpose(axes).reshape(-1)
    return DenseState(n, amps)


def match_label(state: DenseState, tol: float = _MATCH_TOL) -> Optional[tuple[GhzLabel, complex]]:
    """Identify `state` as phase * canonical GHZ label, if it is one exactly.

    Returns (label, phase) with |phase| = 1 such that
    state = phase * embed(label), or None when the state is not a balanced
    two-branch superposition of complementary bitstrings with a real +-1
    relative sign.
    """
    if state.num_qubits < 2:
        return None
    amps = state.amps
    k = int(np.argmax(np.abs(amps)))
    k2 = (1 << state.num_qubits) - k - 1
    a, b = amps[k], amps[k2]
    if abs(abs(a) - _INV_SQRT2) > tol or abs(abs(b) - _INV_SQRT2) > tol:
        return None
    support = np.zeros_like(amps)
    support[k], support[k2] = a, b
    if np.max(np.abs(amps - support)) > tol:
        return None
    ratio = b / a
    if abs(ratio - 1.0) <= tol:
        sign = +1
    elif abs(ratio + 1.0) <= tol:
        sign = -1
    else:
        return None
    lead = min(k, k2)
    label = GhzLabel(state.num_qubits, lead, sign)
    phase = (a if lead == k else b) / _INV_SQRT2
    return label, phase / abs(phase)


def measure_ghz(state: DenseState, subset: Sequence[int]) -> list[MeasurementOutcome]:
    """Project `subset` onto its GHZ basis; return all surviving branches.

    The subset (ordered, 1-based, distinct) must leave at least one particle
    unmeasured; the post state carries the remaining particles in ascending
    original order.  Outcomes are listed in basis enumeration order
    (d ascending, + before -) and branches below PROB_FLOOR are dropped.
    Branch projections are independent of each other (safe to evaluate in
    parallel); the returned order is fixed regardless.
    """
    n = state.num_qubits
    L = len(subset)
    chosen = set(subset)
    if len(chosen) != L or any(not 1 <= p <= n for p in subset):
        raise ValueError(f"subset must be distinct particles in 1..{n}")
    if not 2 <= L <= n - 1:
        raise ValueError(f"subset size {L} outside 2..{n - 1}")
    rest = [p for p in range(1, n + 1) if p not in chosen]
    axes = [p - 1 for p in list(subset) + rest]
    mat = state.amps.reshape([2] * n).transpose(axes).reshape(1 << L, -1)
    row_norms = np.einsum("ij,ij->i", mat, mat.conj()).real

    outcomes = []
    half = 1 << (L - 1)
    for d in range(half):
        dbar = (1 << L) - d - 1
        if row_norms[d] + row_norms[dbar] < PROB_FLOOR:
            continue
        for sign in (+1, -1):
            w = (mat[d] + sign * mat[dbar]) * _INV_SQRT2
            prob = float(np.vdot(w, w).real)
            if prob < PROB_FLOOR:
                continue
            post = DenseState(n - L, w / np.sqrt(prob))
            matched = match_label(post)
            if matched is None:
                label, phase = None, complex(1.0)
            else:
                label, phase = matched
            outcomes.append(
                MeasurementOutcome(GhzLabel(L, d, sign), prob, post, phase, label)
            )
    return outcomes


def ghz_overlaps(state: DenseState) -> list[tuple[GhzLabel, complex]]:
    """Amplitude of every canonical label on the full register.

    Expresses the whole state in the GHZ basis; squared magnitudes are the
    outcome probabilities of a full-register GHZ measurement.
    """
    amps = state.amps
    out = []
    for label in enumerate_basis(state.num_qubits):
        amp = (amps[label.d] + label.sign * amps[label.partner]) * _INV_SQRT2
        out.append((label, complex(amp)))
    return out


def measure_qubit(
    state: DenseState, particle: int, basis: str = "Z"
) -> list[tuple[int, float, DenseState]]:
    """Single-qubit measurement branches (bit, probability, collapsed state).

    The register keeps its size: the measured particle is left in the
    corresponding Z or X eigenstate, which is exactly the intercept-resend
    behaviour when a branch is sampled and kept.
    """
    n = state.num_qubits
    if not 1 <= particle <= n:
        raise ValueError(f"particle {particle} outside 1..{n}")
    if basis not in ("Z", "X"):
        raise ValueError(f"basis must be 'Z' or 'X', got {basis!r}")
    axis = particle - 1
    psi = state.amps.reshape([2] * n)
    psi = np.moveaxis(psi, axis, 0)
    if basis == "X":
        plus = (psi[0] + psi[1]) * _INV_SQRT2
        minus = (psi[0] - psi[1]) * _INV_SQRT2
        components = [plus, minus]
    else:
        components = [psi[0], psi[1]]

    branches = []
    for bit, comp in enumerate(components):
        prob = float(np.vdot(comp, comp).real)
        if prob < PROB_FLOOR:
            continue
        comp = comp / np.sqrt(prob)
        collapsed = np.zeros_like(psi)
        if basis == "Z":
            collapsed[bit] = comp
        else:
            collapsed[0] = comp * _INV_SQRT2
            collapsed[1] = (comp if bit == 0 else -comp) * _INV_SQRT2
        amps = np.moveaxis(collapsed, 0, axis).reshape(-1)
        branches.append((bit, prob, DenseState(n, amps)))
    return branches
