"""Canonical labels for Bell and GHZ basis states.

An m-qubit GHZ basis state is a balanced superposition of one computational
bitstring and its bitwise complement:

    (1/sqrt(2)) * ( |B(d)> + sign * |B(2^m - d - 1)> )

where B(d) is the m-bit binary expansion of d with particle 1 in the most
significant position.  Restricting d to 0 .. 2^(m-1)-1 makes the leading bit
of B(d) zero, which fixes a unique canonical label (m, d, sign) per state.
The 2^m labels of a given m form a complete orthonormal basis; the m = 2
members are the four Bell states.

Everything here is an immutable value; all functions are pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

PLUS = +1
MINUS = -1

_LABEL_RE = re.compile(r"^(\d+):(\d+):([+-])$")
_BITS_RE = re.compile(r"^GHZ\(([01]+),\s*([+-])\)$")


def validate_bits(bits: str) -> str:
    """Check that `bits` is a nonempty string over {0,1} and return it."""
    if not bits or any(c not in "01" for c in bits):
        raise ValueError(f"not a bitstring: {bits!r}")
    return bits


def negate_bits(bits: str) -> str:
    """Bitwise logical negation of every position."""
    validate_bits(bits)
    return bits.translate(str.maketrans("01", "10"))


@dataclass(frozen=True)
class GhzLabel:
    """Canonical (qubit count, index, sign) label of a GHZ basis state.

    The labeled state is (1/sqrt(2)) (|B(d)> + sign |B(2^m-d-1)>).  Two labels
    are equal iff they denote the same state; distinct labels are orthogonal.
    """

    m: int
    d: int
    sign: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"need at least 2 qubits, got m={self.m}")
        if not 0 <= self.d < 2 ** (self.m - 1):
            raise ValueError(f"index {self.d} out of range for m={self.m}")
        if self.sign not in (PLUS, MINUS):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def bits(self) -> str:
        """m-bit expansion of d (leading bit 0 by canonicality)."""
        return format(self.d, f"0{self.m}b")

    @property
    def partner(self) -> int:
        """Index of the complementary branch, 2^m - d - 1."""
        return (1 << self.m) - self.d - 1

    def text(self) -> str:
        """Wire encoding, e.g. '4:6:+'."""
        return f"{self.m}:{self.d}:{'+' if self.sign > 0 else '-'}"

    def __str__(self) -> str:
        return self.text()


# The four Bell states as m=2 labels.
PHI_PLUS = GhzLabel(2, 0, PLUS)
PHI_MINUS = GhzLabel(2, 0, MINUS)
PSI_PLUS = GhzLabel(2, 1, PLUS)
PSI_MINUS = GhzLabel(2, 1, MINUS)


def make_label(bits: str, sign: int) -> GhzLabel:
    """Canonical label for (1/sqrt(2))(|bits> + sign |~bits>).

    If the leading bit is 1 the two branches are swapped into canonical
    order; for sign -1 this factors out a global -1, which is discarded.
    """
    validate_bits(bits)
    if len(bits) < 2:
        raise ValueError(f"need at least 2 qubits, got {len(bits)}")
    if bits[0] == "1":
        bits = negate_bits(bits)
    return GhzLabel(len(bits), int(bits, 2), sign)


def ghz_index(bits: str) -> int:
    """Index d encoded by a canonical (leading-0) bitstring."""
    validate_bits(bits)
    if bits[0] != "0":
        raise ValueError(f"not canonical (leading bit 1): {bits!r}")
    return int(bits, 2)


class HalfRelation(Enum):
    """How the two halves of an even-length canonical bitstring relate."""

    EQUAL = "equal"
    NEGATED = "negated"


@dataclass(frozen=True)
class HalfSymmetricLabel:
    """A GHZ label whose first bitstring half equals the second half
    (EQUAL) or its bitwise negation (NEGATED).

    Only these states admit closed-form swap predictions under the
    half-register measurement cut.  Every Bell state qualifies.
    """

    inner: GhzLabel
    half_relation: HalfRelation


def classify_halves(label: GhzLabel) -> Optional[HalfSymmetricLabel]:
    """Classify an even-size label by its half relation, or None.

    Returns None when the qubit count is odd or when neither relation
    holds.  The two relations are mutually exclusive.
    """
    if label.m % 2 != 0:
        return None
    half = label.m // 2
    first, second = label.bits[:half], label.bits[half:]
    if first == second:
        return HalfSymmetricLabel(label, HalfRelation.EQUAL)
    if first == negate_bits(second):
        return HalfSymmetricLabel(label, HalfRelation.NEGATED)
    return None


def enumerate_basis(m: int) -> list[GhzLabel]:
    """All 2^m canonical labels of m qubits: d ascending, + before -."""
    if m < 2:
        raise ValueError(f"need at least 2 qubits, got m={m}")
    return [GhzLabel(m, d, s) for d in range(2 ** (m - 1)) for s in (PLUS, MINUS)]


def enumerate_half_symmetric(m: int) -> list[GhzLabel]:
    """All labels of even size m whose halves are equal or negated."""
    if m < 2 or m % 2 != 0:
        raise ValueError(f"need an even qubit count >= 2, got m={m}")
    out = []
    for label in enumerate_basis(m):
        if classify_halves(label) is not None:
            out.append(label)
    return out


def parse_label(text: str) -> GhzLabel:
    """Parse 'm:d:+' / 'm:d:-' or bitstring form 'GHZ(0110,+)'."""
    text = text.strip()
    match = _LABEL_RE.match(text)
    if match:
        m, d, s = int(match.group(1)), int(match.group(2)), match.group(3)
        return GhzLabel(m, d, PLUS if s == "+" else MINUS)
    match = _BITS_RE.match(text)
    if match:
        return make_label(match.group(1), PLUS if match.group(2) == "+" else MINUS)
    raise ValueError(f"cannot parse state label: {text!r}")


@dataclass(frozen=True)
class CompositeSystem:
    """Ordered tuple of GHZ labels with a global 1-based particle numbering.

    Particles are numbered 1..M left to right across the states, so state h
    (0-based) owns the contiguous block starting at offset(h) + 1.
    """

    states: tuple[GhzLabel, ...]

    def __post_init__(self) -> None:
        if not self.states:
            raise ValueError("composite system needs at least one state")
        object.__setattr__(self, "states", tuple(self.states))

    @property
    def total_qubits(self) -> int:
        return sum(s.m for s in self.states)

    def offsets(self) -> list[int]:
        """Global index of the particle just before each state's block."""
        out, acc = [], 0
        for s in self.states:
            out.append(acc)
            acc += s.m
        return out

    @property
    def particle_map(self) -> dict[int, tuple[int, int]]:
        """Global particle -> (state index, 1-based position within state)."""
        mapping = {}
        g = 1
        for h, s in enumerate(self.states):
            for pos in range(1, s.m + 1):
                mapping[g] = (h, pos)
                g += 1
        return mapping

    def leading_particles(self, cut: tuple[int, ...]) -> list[int]:
        """Global indices of the first cut[h] particles of each state,
        in state order."""
        if len(cut) != len(self.states):
            raise ValueError("cut length must match the number of states")
        out = []
        for off, s, l in zip(self.offsets(), self.states, cut):
            if not 1 <= l <= s.m - 1:
                raise ValueError(f"cut {l} invalid for a {s.m}-qubit state")
            out.extend(range(off + 1, off + l + 1))
        return out
