"""Seeded simulations of three swap-based protocols.

Three sessions run end to end over an abstract channel: key distribution
(two parties cross-measure exchanged half-registers), private comparison
(a third party Bell-measures pairs encoding two secrets), and secret
sharing (one dealer GHZ-measures retained Bell halves).  The channel may
carry an intercept-resend eavesdropper that measures transiting particles
in the computational basis, and transmissions can be guarded by decoy Bell
pairs checked in a random Z/X basis.

Every measurement statistic is produced by the dense state-vector engine;
the closed-form swap rules are never consulted, so protocol runs double as
an independent end-to-end exercise of the oracle.  Sessions are
deterministic: one seeded generator drives all sampling, and a transcript
re-serializes byte-for-byte under the same seed.  Each session is
single-threaded; independent sessions can run in parallel.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .labels import GhzLabel, PHI_PLUS, negate_bits
from .dense import (
    DenseState,
    embed,
    ghz_overlaps,
    measure_ghz,
    measure_qubit,
    tensor,
)


@dataclass(frozen=True)
class InterceptMeasure:
    """Eavesdropper that measures each transiting particle in the
    computational basis with the given per-particle probability and forwards
    the collapsed particle."""

    probability: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.probability <= 1.0:
            raise ValueError("interception probability must be in [0, 1]")


@dataclass(frozen=True)
class DecoyConfig:
    """Decoy Bell pairs guarding a transmission.

    `count` pairs are sent per data state; each check measures both ends in
    one basis drawn uniformly from `bases`.  The default Z/X mix is what
    catches a computational-basis intercept-resend; a Z-only rule is blind
    to it.
    """

    count: int = 0
    bases: tuple[str, ...] = ("Z", "X")

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError("decoy count must be >= 0")
        if not self.bases or any(b not in ("Z", "X") for b in self.bases):
            raise ValueError("bases must be a nonempty subset of {'Z', 'X'}")


@dataclass(frozen=True)
class Channel:
    eavesdropper: Optional[InterceptMeasure] = None
    decoy: DecoyConfig = DecoyConfig(0)

    def describe(self) -> dict:
        eve = None
        if self.eavesdropper is not None:
            eve = {"probability": float(self.eavesdropper.probability)}
        return {
            "eavesdropper": eve,
            "decoy_count": int(self.decoy.count),
            "decoy_bases": list(self.decoy.bases),
        }


CLEAN = Channel()


@dataclass
class DecoyStats:
    checks: int = 0
    failures: int = 0

    @property
    def detected(self) -> bool:
        return self.failures > 0


def decoy_check(records: Sequence[dict]) -> DecoyStats:
    """Summarize decoy rounds recorded in a transcript segment."""
    stats = DecoyStats(checks=len(records))
    stats.failures = sum(1 for r in records if not r["pass"])
    return stats


@dataclass
class ProtocolTranscript:
    """Ordered record of one protocol run; serializes deterministically."""

    protocol: str
    seed: int
    parameters: dict
    channel: dict
    prepared: list
    transmissions: list
    measurements: list
    derived: dict
    checks: dict

    def to_dict(self) -> dict:
        return {
            "protocol": self.protocol,
            "seed": self.seed,
            "parameters": self.parameters,
            "channel": self.channel,
            "prepared": self.prepared,
            "transmissions": self.transmissions,
            "measurements": self.measurements,
            "derived": self.derived,
            "checks": self.checks,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _sample(rng: np.random.Generator, probs: Sequence[float]) -> int:
    r = rng.random()
    acc = 0.0
    for i, p in enumerate(probs):
        acc += p
        if r < acc:
            return i
    return len(probs) - 1


def _random_half_symmetric(rng: np.random.Generator, m: int) -> GhzLabel:
    """Uniform label over the half-symmetric family of even size m:
    relation, index bits and sign all uniform."""
    half = m // 2
    first = "0" + "".join(str(int(b)) for b in rng.integers(0, 2, size=half - 1))
    negated = bool(rng.integers(0, 2))
    second = negate_bits(first) if negated else first
    sign = +1 if rng.integers(0, 2) == 0 else -1
    return GhzLabel(m, int(first + second, 2), sign)


def _transmit(
    state: DenseState,
    particles: Sequence[int],
    channel: Channel,
    rng: np.random.Generator,
) -> tuple[DenseState, int]:
    """Pass particles through the channel, applying any eavesdropper."""
    eve = channel.eavesdropper
    intercepted = 0
    if eve is not None and eve.probability > 0:
        for p in particles:
            if rng.random() < eve.probability:
                branches = measure_qubit(state, p, "Z")
                k = _sample(rng, [b[1] for b in branches])
                state = branches[k][2]
                intercepted += 1
    return state, intercepted


def _decoy_round(channel: Channel, rng: np.random.Generator) -> dict:
    """One decoy check: half of a fresh Bell pair crosses the channel, then
    both ends measure in a shared randomly chosen basis and compare bits."""
    pair = embed(PHI_PLUS)
    pair, intercepted = _transmit(pair, [2], channel, rng)
    bases = channel.decoy.bases
    basis = bases[int(rng.integers(0, len(bases)))]
    branches = measure_qubit(pair, 1, basis)
    k = _sample(rng, [b[1] for b in branches])
    sender_bit, _, pair = branches[k]
    branches = measure_qubit(pair, 2, basis)
    k = _sample(rng, [b[1] for b in branches])
    receiver_bit = branches[k][0]
    return {
        "basis": basis,
        "sender_bit": int(sender_bit),
        "receiver_bit": int(receiver_bit),
        "intercepted": int(intercepted),
        "pass": bool(sender_bit == receiver_bit),
    }


def _run_decoys(count: int, channel: Channel, rng: np.random.Generator) -> list[dict]:
    return [_decoy_round(channel, rng) for _ in range(count)]


def _sample_ghz(
    state: DenseState, subset: Sequence[int], rng: np.random.Generator
):
    outcomes = measure_ghz(state, subset)
    k = _sample(rng, [o.probability for o in outcomes])
    return outcomes[k]


def _sample_full_ghz(state: DenseState, rng: np.random.Generator) -> GhzLabel:
    overlaps = ghz_overlaps(state)
    probs = [abs(a) ** 2 for _, a in overlaps]
    return overlaps[_sample(rng, probs)][0]


def _key_digests(label: GhzLabel) -> tuple[int, int]:
    """The two published key derivations from an outcome label: the XOR of
    its index bits and the index itself."""
    xor = bin(label.d).count("1") % 2
    return xor, label.d


def qkd_session(
    n: int, l: int, seed: int, channel: Channel = CLEAN
) -> ProtocolTranscript:
    """Key distribution: both parties prepare random half-symmetric states
    of 2l qubits, exchange the designated half-sequences, and cross-measure.

    Slots whose published preparations coincide yield keys (both derivations
    recorded); slots that differ become swap-consistency checks in which the
    receiving party's outcome is compared against the clean-channel pairing
    for the announced joint result.
    """
    if n < 1 or l < 1:
        raise ValueError("need n >= 1 and l >= 1")
    rng = np.random.default_rng(seed)
    alice_subset = list(range(1, l + 1)) + list(range(2 * l + 1, 3 * l + 1))

    prepared, transmissions, measurements = [], [], []
    decoy_records = []
    slots = []
    for h in range(n):
        prep_a = _random_half_symmetric(rng, 2 * l)
        prep_b = _random_half_symmetric(rng, 2 * l)
        joint = tensor([embed(prep_a), embed(prep_b)])

        a_sends = list(range(l + 1, 2 * l + 1))
        b_sends = list(range(2 * l + 1, 3 * l + 1))
        decoy_records.extend(_run_decoys(channel.decoy.count, channel, rng))
        state, hit_a = _transmit(joint, a_sends, channel, rng)
        decoy_records.extend(_run_decoys(channel.decoy.count, channel, rng))
        state, hit_b = _transmit(state, b_sends, channel, rng)

        out_a = _sample_ghz(state, alice_subset, rng)
        label_b = _sample_full_ghz(out_a.post_state, rng)

        prepared.append({"slot": h, "alice": prep_a.text(), "bob": prep_b.text()})
        transmissions.append(
            {
                "slot": h,
                "alice_to_bob": {"particles": a_sends, "intercepted": int(hit_a)},
                "bob_to_alice": {"particles": b_sends, "intercepted": int(hit_b)},
            }
        )
        measurements.append(
            {"slot": h, "alice": out_a.outcome.text(), "bob": label_b.text()}
        )
        slots.append((prep_a, prep_b, joint, out_a.outcome, label_b))

    key_slots, check_slots = [], []
    keys_a, keys_b = [], []
    swap_failures = 0
    for h, (prep_a, prep_b, joint, label_a, label_b) in enumerate(slots):
        if prep_a == prep_b:
            xor_a, int_a = _key_digests(label_a)
            xor_b, int_b = _key_digests(label_b)
            keys_a.append({"slot": h, "xor": xor_a, "integer": int_a})
            keys_b.append({"slot": h, "xor": xor_b, "integer": int_b})
            key_slots.append(h)
        else:
            clean = measure_ghz(joint, alice_subset)
            expected = next(
                (o.residual_label for o in clean if o.outcome == label_a), None
            )
            ok = expected is not None and label_b == expected
            if not ok:
                swap_failures += 1
            check_slots.append({"slot": h, "pass": bool(ok)})

    keys_match = all(
        a["xor"] == b["xor"] and a["integer"] == b["integer"]
        for a, b in zip(keys_a, keys_b)
    )
    decoys = decoy_check(decoy_records)
    detected = decoys.detected or swap_failures > 0

    return ProtocolTranscript(
        protocol="qkd",
        seed=seed,
        parameters={"n": n, "l": l},
        channel=channel.describe(),
        prepared=prepared,
        transmissions=transmissions,
        measurements=measurements,
        derived={
            "key_slots": key_slots,
            "keys_alice": keys_a,
            "keys_bob": keys_b,
            "keys_match": bool(keys_match),
        },
        checks={
            "decoy": {"checks": decoys.checks, "failures": decoys.failures},
            "decoy_rounds": decoy_records,
            "swap_checks": check_slots,
            "swap_failures": swap_failures,
            "detected": bool(detected),
        },
    )


def qpc_session(
    X: int,
    Y: int,
    n_bits: int,
    seed: int,
    channel: Channel = CLEAN,
    amplifier: Optional[int] = None,
) -> ProtocolTranscript:
    """Private comparison: both parties encode their value bitwise into Bell
    pairs (bit b -> index b, sign +), ship everything to a third party, and
    the third party Bell-measures firsts against firsts and seconds against
    seconds.  Equality holds iff every slot's two results coincide.

    `amplifier` optionally multiplies both inputs before encoding; any decoy
    failure aborts the comparison before measurement.
    """
    if n_bits < 1:
        raise ValueError("need n_bits >= 1")
    if not (0 <= X < 2**n_bits and 0 <= Y < 2**n_bits):
        raise ValueError("inputs out of range for the given bit width")
    params = {"x": X, "y": Y, "n_bits": n_bits, "amplifier": amplifier}
    if amplifier is not None:
        if amplifier < 1:
            raise ValueError("amplifier must be >= 1")
        X, Y = X * amplifier, Y * amplifier
        n_bits += int(amplifier).bit_length()

    rng = np.random.default_rng(seed)
    bits_x = format(X, f"0{n_bits}b")
    bits_y = format(Y, f"0{n_bits}b")

    decoy_records = []
    decoy_records.extend(_run_decoys(channel.decoy.count * n_bits, channel, rng))
    decoy_records.extend(_run_decoys(channel.decoy.count * n_bits, channel, rng))
    decoys = decoy_check(decoy_records)

    prepared, transmissions, measurements = [], [], []
    intercept_total = 0
    hits = []
    states = []
    for h in range(n_bits):
        prep_a = GhzLabel(2, int(bits_x[h]), +1)
        prep_b = GhzLabel(2, int(bits_y[h]), +1)
        prepared.append({"slot": h, "alice": prep_a.text(), "bob": prep_b.text()})
        joint = tensor([embed(prep_a), embed(prep_b)])
        joint, hit = _transmit(joint, [1, 2, 3, 4], channel, rng)
        hits.append(hit)
        states.append(joint)
        intercept_total += hit
    transmissions.append(
        {"to": "third_party", "slots": n_bits, "intercepted": int(intercept_total)}
    )

    if decoys.detected:
        verdict = "aborted"
    else:
        all_equal = True
        for h, joint in enumerate(states):
            first = _sample_ghz(joint, [1, 3], rng)
            second = _sample_full_ghz(first.post_state, rng)
            equal = first.outcome == second
            all_equal = all_equal and equal
            measurements.append(
                {
                    "slot": h,
                    "first": first.outcome.text(),
                    "second": second.text(),
                    "equal": bool(equal),
                }
            )
        verdict = "equal" if all_equal else "not_equal"

    return ProtocolTranscript(
        protocol="qpc",
        seed=seed,
        parameters=params,
        channel=channel.describe(),
        prepared=prepared,
        transmissions=transmissions,
        measurements=measurements,
        derived={"verdict": verdict},
        checks={
            "decoy": {"checks": decoys.checks, "failures": decoys.failures},
            "decoy_rounds": decoy_records,
            "detected": bool(decoys.detected),
        },
    )


def normalize_shared_bits(bits: str) -> str:
    """Collapse the two-branch ambiguity of shared measurement records:
    when the leading bit reads 1, every participant flips their bit."""
    return negate_bits(bits) if bits[0] == "1" else bits


def qss_session(
    n_parties: int,
    seed: int,
    channel: Channel = CLEAN,
    decoy_m: Optional[int] = None,
) -> ProtocolTranscript:
    """Secret sharing: the dealer keeps one half of each of n Bell pairs,
    hands the other halves to the n participants, and GHZ-measures the
    retained register.  The outcome index is the secret; the participants'
    single-particle bits, jointly normalized, reconstruct it.
    """
    if n_parties < 2:
        raise ValueError("need at least two participants")
    m = channel.decoy.count if decoy_m is None else decoy_m
    if m < 0:
        raise ValueError("decoy count must be >= 0")
    rng = np.random.default_rng(seed)
    n = n_parties

    decoy_records = []
    per_party_decoys = []
    state = tensor([embed(PHI_PLUS) for _ in range(n)])
    sent = []
    for h in range(n):
        rounds = _run_decoys(m, channel, rng)
        decoy_records.extend(rounds)
        per_party_decoys.append(
            {"party": h, "checks": len(rounds), "failures": sum(1 for r in rounds if not r["pass"])}
        )
        particle = 2 * h + 1
        state, hit = _transmit(state, [particle], channel, rng)
        sent.append({"party": h, "particle": particle, "intercepted": int(hit)})

    dealer_subset = [2 * h + 2 for h in range(n)]
    out = _sample_ghz(state, dealer_subset, rng)
    secret = out.outcome.d

    post = out.post_state
    bits = []
    for h in range(n):
        branches = measure_qubit(post, h + 1, "Z")
        k = _sample(rng, [b[1] for b in branches])
        bit, _, post = branches[k]
        bits.append(str(int(bit)))
    raw = "".join(bits)
    normalized = normalize_shared_bits(raw)
    reconstructed = int(normalized, 2)

    decoys = decoy_check(decoy_records)
    return ProtocolTranscript(
        protocol="qss",
        seed=seed,
        parameters={"parties": n, "decoy_per_party": m},
        channel=channel.describe(),
        prepared=[PHI_PLUS.text() for _ in range(n)],
        transmissions=sent,
        measurements=[{"dealer": out.outcome.text(), "participant_bits": raw}],
        derived={
            "secret": int(secret),
            "normalized_bits": normalized,
            "reconstructed": int(reconstructed),
            "success": bool(reconstructed == secret),
        },
        checks={
            "decoy": {"checks": decoys.checks, "failures": decoys.failures},
            "decoy_rounds": decoy_records,
            "per_party": per_party_decoys,
            "detected": bool(decoys.detected),
        },
    )
