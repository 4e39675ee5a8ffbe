"""Dense-engine ground truth: embeddings, tensor, permutation, measurement."""

import numpy as np
import pytest

import ghzswap as g
from ghzswap import (
    DenseState,
    GhzLabel,
    ResourceLimitError,
    embed,
    enumerate_basis,
    ghz_overlaps,
    match_label,
    measure_ghz,
    measure_qubit,
    permute,
    tensor,
)

RT2 = np.sqrt(2.0)


def random_state(rng, n):
    amps = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return DenseState(n, amps / np.linalg.norm(amps))


def test_embed_examples():
    assert np.allclose(embed(g.PHI_PLUS).amps, [1 / RT2, 0, 0, 1 / RT2])
    assert np.allclose(embed(g.PSI_MINUS).amps, [0, 1 / RT2, -1 / RT2, 0])
    amps = embed(GhzLabel(3, 0, 1)).amps
    assert np.allclose(amps[[0, 7]], [1 / RT2, 1 / RT2])
    assert np.count_nonzero(amps) == 2


def test_tensor_examples():
    two = tensor([embed(g.PHI_PLUS), embed(g.PHI_PLUS)])
    expected = np.zeros(16)
    expected[[0b0000, 0b0011, 0b1100, 0b1111]] = 0.5
    assert np.allclose(two.amps, expected)

    single = embed(GhzLabel(3, 2, -1))
    assert np.array_equal(tensor([single]).amps, single.amps)
    assert abs(two.norm - 1.0) < 1e-12
    with pytest.raises(ValueError):
        tensor([])


def test_permute_transposition():
    state = g.computational("0100")
    swapped = permute(state, (1, 3, 2, 4))
    assert np.allclose(swapped.amps, g.computational("0010").amps)
    assert np.array_equal(permute(state, (1, 2, 3, 4)).amps, state.amps)
    with pytest.raises(ValueError):
        permute(state, (1, 1, 2, 3))


def test_permute_regroups_two_bell_pairs():
    # moving particle 3 next to particle 1 turns pair (12)(34) support
    # {0000,0011,1100,1111} into {0000,0101,1010,1111}
    state = permute(tensor([embed(g.PHI_PLUS), embed(g.PHI_PLUS)]), (1, 3, 2, 4))
    expected = np.zeros(16)
    expected[[0b0000, 0b0101, 0b1010, 0b1111]] = 0.5
    assert np.allclose(state.amps, expected)


def test_permute_round_trip_is_exact():
    rng = np.random.default_rng(7)
    for _ in range(25):
        n = int(rng.integers(2, 9))
        state = random_state(rng, n)
        perm = list(rng.permutation(n) + 1)
        inverse = [0] * n
        for pos, p in enumerate(perm):
            inverse[p - 1] = pos + 1
        back = permute(permute(state, perm), inverse)
        assert np.array_equal(back.amps, state.amps)


def test_measure_same_bell_pair():
    state = tensor([embed(g.PHI_PLUS), embed(g.PHI_PLUS)])
    outs = measure_ghz(state, (1, 3))
    assert len(outs) == 4
    for out in outs:
        assert abs(out.probability - 0.25) < 1e-12
        assert out.residual_label == out.outcome


def test_measure_different_bell_pair():
    state = tensor([embed(g.PHI_PLUS), embed(g.PHI_MINUS)])
    outs = measure_ghz(state, (1, 3))
    pairing = {o.outcome: o.residual_label for o in outs}
    assert pairing == {
        g.PHI_PLUS: g.PHI_MINUS,
        g.PHI_MINUS: g.PHI_PLUS,
        g.PSI_PLUS: g.PSI_MINUS,
        g.PSI_MINUS: g.PSI_PLUS,
    }
    for o in outs:
        assert abs(o.probability - 0.25) < 1e-12


def test_measure_half_of_single_state():
    # measuring the leading half of one 4-qubit state leaves Bell residuals
    outs = measure_ghz(embed(GhzLabel(4, 6, 1)), (1, 2))
    got = [(o.outcome, o.probability, o.residual_label, o.relative_phase) for o in outs]
    assert len(got) == 2
    assert got[0][0] == g.PSI_PLUS and got[0][2] == g.PSI_PLUS
    assert got[1][0] == g.PSI_MINUS and got[1][2] == g.PSI_MINUS
    assert abs(got[0][1] - 0.5) < 1e-12 and abs(got[1][1] - 0.5) < 1e-12
    assert abs(got[0][3] - 1.0) < 1e-12
    assert abs(got[1][3] + 1.0) < 1e-12  # residual carries a -1 orientation
    assert abs(sum(o.probability for o in outs) - 1.0) < 1e-12


def test_measure_alternative_cut():
    # the joint measurement is not tied to leading halves: particles (1,4)
    # of two identical pairs also swap into identical Bell labels
    state = tensor([embed(g.PHI_PLUS), embed(g.PHI_PLUS)])
    outs = measure_ghz(state, (1, 4))
    assert len(outs) == 4
    for o in outs:
        assert abs(o.probability - 0.25) < 1e-12
        assert o.residual_label == o.outcome


def test_measure_subset_validation():
    state = tensor([embed(g.PHI_PLUS), embed(g.PHI_PLUS)])
    with pytest.raises(ValueError):
        measure_ghz(state, (1,))
    with pytest.raises(ValueError):
        measure_ghz(state, (1, 2, 3, 4))
    with pytest.raises(ValueError):
        measure_ghz(state, (1, 1, 2))
    with pytest.raises(ValueError):
        measure_ghz(state, (0, 2))


def test_probability_conservation_randomized():
    rng = np.random.default_rng(11)
    for _ in range(150):
        n = int(rng.integers(3, 13))
        state = random_state(rng, n)
        size = int(rng.integers(2, n))
        subset = list(rng.choice(n, size=size, replace=False) + 1)
        outs = measure_ghz(state, subset)
        assert abs(sum(o.probability for o in outs) - 1.0) < 1e-10
        for o in outs:
            assert abs(o.post_state.norm - 1.0) < 1e-10


def test_projector_orthogonality():
    # distinct branches, lifted back with their measured labels, are orthogonal
    rng = np.random.default_rng(3)
    state = random_state(rng, 6)
    outs = measure_ghz(state, (2, 4, 5))
    lifted = [
        np.sqrt(o.probability) * np.kron(embed(o.outcome).amps, o.post_state.amps)
        for o in outs
    ]
    for i in range(len(lifted)):
        for j in range(i + 1, len(lifted)):
            assert abs(np.vdot(lifted[i], lifted[j])) < 1e-10


def test_oracle_self_consistency_two_branches():
    # all-but-one subset of a single label reproduces its two-branch structure
    label = GhzLabel(4, 6, 1)
    outs = measure_ghz(embed(label), (1, 2, 3))
    assert len(outs) == 2
    assert {o.outcome.d for o in outs} == {int(label.bits[:3], 2)}
    assert all(abs(o.probability - 0.5) < 1e-12 for o in outs)


def test_match_label():
    for m in (2, 3, 4):
        for label in enumerate_basis(m):
            got = match_label(embed(label))
            assert got is not None
            assert got[0] == label and abs(got[1] - 1.0) < 1e-12
    # a phase factor is reported but does not change the label
    flipped = DenseState(2, -embed(g.PSI_PLUS).amps)
    label, phase = match_label(flipped)
    assert label == g.PSI_PLUS and abs(phase + 1.0) < 1e-12
    # unbalanced superposition is not a canonical label
    amps = np.array([0.8, 0, 0, 0.6], dtype=complex)
    assert match_label(DenseState(2, amps)) is None


def test_ghz_overlaps_full_register():
    state = embed(GhzLabel(3, 2, -1))
    probs = {lab: abs(a) ** 2 for lab, a in ghz_overlaps(state)}
    assert abs(probs[GhzLabel(3, 2, -1)] - 1.0) < 1e-12
    assert abs(sum(probs.values()) - 1.0) < 1e-12


def test_measure_qubit_z_and_x():
    pair = embed(g.PHI_PLUS)
    z = measure_qubit(pair, 1, "Z")
    assert [b for b, _, _ in z] == [0, 1]
    assert all(abs(p - 0.5) < 1e-12 for _, p, _ in z)
    # collapse keeps Z correlation of the pair
    bit, _, post = z[0]
    z2 = measure_qubit(post, 2, "Z")
    assert len(z2) == 1 and z2[0][0] == bit
    # X measurements on the pair are also perfectly correlated
    x = measure_qubit(pair, 1, "X")
    bit, _, post = x[1]
    x2 = measure_qubit(post, 2, "X")
    assert len(x2) == 1 and x2[0][0] == bit
    with pytest.raises(ValueError):
        measure_qubit(pair, 3, "Z")
    with pytest.raises(ValueError):
        measure_qubit(pair, 1, "Y")


def test_qubit_cap():
    with pytest.raises(ResourceLimitError):
        DenseState(25, np.zeros(2, dtype=complex))
    with pytest.raises(ResourceLimitError):
        tensor([embed(GhzLabel(13, 0, 1)), embed(GhzLabel(13, 0, 1))])
