"""Closed-form prediction of entanglement-swapping outcomes.

Measuring the leading half of every state in a composite of half-symmetric
GHZ states projects those particles onto a joint GHZ basis and leaves the
trailing halves in a matching GHZ state.  For n input states the surviving
branches form 2^n equally weighted (measured, residual) label pairs:

  * the measured index runs over concatenations of per-state leading halves,
    one branch choice (plain or complemented) per state;
  * the residual index is the same concatenation built from trailing halves;
  * with an even number of minus-signed inputs each measured label pairs
    with the residual of the same superscript, with an odd number the
    superscripts swap;
  * each pair carries a +-1 coefficient, obtained here by probing the two
    computational-basis terms that feed the pair (no dense vector needed).

Everything is cross-checkable against the dense oracle via
`verify_against_oracle`.  All functions here are pure over immutable
values; verification sweeps may fan out across specs in parallel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from .labels import (
    CompositeSystem,
    GhzLabel,
    classify_halves,
    make_label,
    negate_bits,
)
from . import dense


class ClosedFormUnavailable(Exception):
    """The inputs fall outside the closed-form rules; use the oracle."""


@dataclass(frozen=True)
class SwapSpec:
    """A composite system plus the per-state count of leading particles to
    measure.  cut=None means the half cut (every state must be even-sized),
    which is the only cut the closed-form path accepts; other cuts are legal
    for oracle-only evaluation."""

    composite: CompositeSystem
    cut: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        states = self.composite.states
        if self.cut is None:
            if any(s.m % 2 for s in states):
                raise ValueError("default half cut requires even-sized states")
            object.__setattr__(self, "cut", tuple(s.m // 2 for s in states))
        else:
            object.__setattr__(self, "cut", tuple(self.cut))
            if len(self.cut) != len(states):
                raise ValueError("cut length must match the number of states")
            for l, s in zip(self.cut, states):
                if not 1 <= l <= s.m - 1:
                    raise ValueError(f"cut {l} invalid for a {s.m}-qubit state")
        if sum(self.cut) < 2:
            raise ValueError("joint measurement needs at least 2 particles")

    @property
    def is_half_cut(self) -> bool:
        return all(l * 2 == s.m for l, s in zip(self.cut, self.composite.states))

    def measured_particles(self) -> list[int]:
        return self.composite.leading_particles(self.cut)


@dataclass(frozen=True)
class SwapPair:
    """One surviving branch: joint measurement result, collapsed remainder,
    the +-1 coefficient it carries, and its probability."""

    measured: GhzLabel
    residual: GhzLabel
    coeff_sign: int
    probability: float


@dataclass(frozen=True)
class SwapPrediction:
    pairs: tuple[SwapPair, ...]

    def support(self) -> set[tuple[GhzLabel, GhzLabel]]:
        return {(p.measured, p.residual) for p in self.pairs}

    def all_matching(self) -> bool:
        """True when every measured label equals its residual label."""
        return all(p.measured == p.residual for p in self.pairs)


def _branch_bits(states: Sequence[GhzLabel], beta: Sequence[int]) -> tuple[str, str]:
    """Leading- and trailing-half concatenations for one branch vector."""
    front, back = [], []
    for s, b in zip(states, beta):
        half = s.m // 2
        first, second = s.bits[:half], s.bits[half:]
        if b:
            first, second = negate_bits(first), negate_bits(second)
        front.append(first)
        back.append(second)
    return "".join(front), "".join(back)


def _overlap_sign(label: GhzLabel, bits: str) -> int:
    """sqrt(2) <label|bits>: +1 on the canonical branch, sign on the
    complement, 0 otherwise."""
    if bits == label.bits:
        return 1
    if bits == negate_bits(label.bits):
        return label.sign
    return 0


def _pair_sign(
    states: Sequence[GhzLabel],
    beta: tuple[int, ...],
    measured: GhzLabel,
    residual: GhzLabel,
) -> int:
    """Coefficient of |measured>|residual> probed from the two
    computational-basis terms of the branch pair {beta, ~beta}."""
    neg_states = [h for h, s in enumerate(states) if s.sign < 0]
    amp = 0
    for b in (beta, tuple(1 - x for x in beta)):
        front, back = _branch_bits(states, b)
        term = (-1) ** sum(b[h] for h in neg_states)
        amp += term * _overlap_sign(measured, front) * _overlap_sign(residual, back)
    if amp == 0:
        raise AssertionError("probed pair is outside the branch support")
    return 1 if amp > 0 else -1


def predict_multi(spec: SwapSpec) -> SwapPrediction:
    """Closed-form outcome table for half-cut swapping of half-symmetric
    states.

    Raises ClosedFormUnavailable unless every state is half-symmetric and
    the cut is exactly half of each state.
    """
    states = spec.composite.states
    if len(states) < 2:
        raise ClosedFormUnavailable("need at least two states")
    if not spec.is_half_cut:
        raise ClosedFormUnavailable("closed form requires the half cut")
    if any(classify_halves(s) is None for s in states):
        raise ClosedFormUnavailable("closed form requires half-symmetric states")

    n = len(states)
    m_neg = sum(1 for s in states if s.sign < 0)
    measured_qubits = sum(s.m // 2 for s in states)
    prob = 0.5 ** n

    pairs = []
    for beta in product((0, 1), repeat=n):
        if beta[0] == 1:
            continue
        front, back = _branch_bits(states, beta)
        d_meas = int(front, 2)
        d_res = make_label(back, +1).d
        for s in (+1, -1):
            t = s if m_neg % 2 == 0 else -s
            measured = GhzLabel(measured_qubits, d_meas, s)
            residual = GhzLabel(measured_qubits, d_res, t)
            coeff = _pair_sign(states, beta, measured, residual)
            pairs.append(SwapPair(measured, residual, coeff, prob))
    pairs.sort(key=lambda p: (p.measured.d, 0 if p.measured.sign > 0 else 1))
    return SwapPrediction(tuple(pairs))


def predict_two_ghz(a: GhzLabel, b: GhzLabel) -> SwapPrediction:
    """Swap two half-symmetric GHZ states (sizes may differ)."""
    return predict_multi(SwapSpec(CompositeSystem((a, b))))


def predict_two_bell(a: GhzLabel, b: GhzLabel) -> SwapPrediction:
    """Swap two Bell states: four pairs of probability 1/4 each."""
    if a.m != 2 or b.m != 2:
        raise ValueError("both inputs must be Bell states (m=2)")
    return predict_two_ghz(a, b)


def swap_outcomes_match(a: GhzLabel, b: GhzLabel) -> bool:
    """Whether half-cut swapping of the two states always produces identical
    measured and residual labels.

    Holds exactly when both states are half-symmetric with the same half
    relation and the same sign; states with different relations or signs
    (or outside the class) produce differing labels in every branch.
    """
    ca, cb = classify_halves(a), classify_halves(b)
    if ca is None or cb is None:
        return False
    return ca.half_relation == cb.half_relation and a.sign == b.sign


def multi_swap_outcomes_match(states: Sequence[GhzLabel]) -> bool:
    """Whether half-cut swapping of n states pairs every measured label with
    an identical residual label.

    Requires every state half-symmetric, all with the same half relation,
    and an even count of minus-signed states.
    """
    if len(states) < 2:
        raise ValueError("need at least two states")
    classes = [classify_halves(s) for s in states]
    if any(c is None for c in classes):
        return False
    relations = {c.half_relation for c in classes}
    if len(relations) != 1:
        return False
    m_neg = sum(1 for s in states if s.sign < 0)
    return m_neg % 2 == 0


def oracle_swap_pairs(spec: SwapSpec) -> list[SwapPair]:
    """Ground-truth outcome table from the dense engine.

    Residual labels come from exact matching of each post state; a residual
    that is not a canonical GHZ state raises, since the closed-form support
    never produces one.
    """
    state = dense.tensor([dense.embed(s) for s in spec.composite.states])
    outcomes = dense.measure_ghz(state, spec.measured_particles())
    pairs = []
    for out in outcomes:
        if out.residual_label is None:
            raise ValueError(
                f"residual for {out.outcome} is not a canonical GHZ state"
            )
        phase = out.relative_phase.real
        pairs.append(
            SwapPair(
                out.outcome,
                out.residual_label,
                1 if phase > 0 else -1,
                out.probability,
            )
        )
    return pairs


@dataclass
class VerificationReport:
    """Comparison of a closed-form prediction against the dense oracle."""

    spec: SwapSpec
    checked: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_against_oracle(spec: SwapSpec, tol: float = 1e-10) -> VerificationReport:
    """Check support, pairing, probabilities and coefficient signs of the
    closed-form prediction against a dense measurement of the same spec."""
    if spec.composite.total_qubits > dense.MAX_QUBITS:
        raise dense.ResourceLimitError(
            f"{spec.composite.total_qubits} qubits exceeds the cap"
        )
    predicted = predict_multi(spec)
    actual = oracle_swap_pairs(spec)
    report = VerificationReport(spec)

    by_measured = {p.measured: p for p in predicted.pairs}
    actual_by_measured = {p.measured: p for p in actual}
    report.checked = len(by_measured)

    if set(by_measured) != set(actual_by_measured):
        missing = set(by_measured) - set(actual_by_measured)
        extra = set(actual_by_measured) - set(by_measured)
        report.mismatches.append(
            f"support differs: predicted-only={sorted(map(str, missing))} "
            f"oracle-only={sorted(map(str, extra))}"
        )
        return report

    for measured, pred in by_measured.items():
        got = actual_by_measured[measured]
        if pred.residual != got.residual:
            report.mismatches.append(
                f"{measured}: residual predicted {pred.residual}, oracle {got.residual}"
            )
        if abs(pred.probability - got.probability) > tol:
            report.mismatches.append(
                f"{measured}: probability predicted {pred.probability}, "
                f"oracle {got.probability}"
            )
        if pred.coeff_sign != got.coeff_sign:
            report.mismatches.append(
                f"{measured}: sign predicted {pred.coeff_sign:+d}, "
                f"oracle {got.coeff_sign:+d}"
            )
    return report
