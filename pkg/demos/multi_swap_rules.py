"""The parity rule for swapping many states at once.

Measuring the leading half of each of n half-symmetric GHZ states projects
those particles onto one joint GHZ basis and collapses the trailing halves
onto another GHZ state.  The support always has 2^n equally likely
(measured, residual) pairs.  Whether measured and residual labels coincide
is governed by two conditions:

  1. every input shares the same half relation (halves equal, or halves
     negated), and
  2. the number of minus-signed inputs is even.

This script sweeps small composites, prints the rule's verdicts next to
the oracle's, and shows a few instructive special cases.
"""

import itertools

from ghzswap import (
    CompositeSystem,
    GhzLabel,
    PHI_MINUS,
    PHI_PLUS,
    SwapSpec,
    enumerate_half_symmetric,
    make_label,
    multi_swap_outcomes_match,
    oracle_swap_pairs,
    predict_multi,
    verify_against_oracle,
)


def show(states, note=""):
    spec = SwapSpec(CompositeSystem(tuple(states)))
    rule = multi_swap_outcomes_match(states)
    actual = all(p.measured == p.residual for p in oracle_swap_pairs(spec))
    marker = "same" if actual else "diff"
    agree = "ok" if rule == actual else "RULE WRONG"
    labels = " ".join(s.text() for s in states)
    print(f"  [{marker}] {labels:42s} rule={rule!s:5s} {agree} {note}")


def main():
    print("copies of one Bell state: sign parity decides")
    for n in (2, 3, 4, 5):
        show([PHI_PLUS] * n, note=f"(n={n}, all +)")
        show([PHI_MINUS] * n, note=f"(n={n}, all -)")

    print("\nmixtures: an even number of minus signs keeps the match")
    show([PHI_PLUS, PHI_PLUS, PHI_MINUS, PHI_MINUS])
    show([PHI_PLUS, PHI_PLUS, PHI_PLUS, PHI_MINUS])

    print("\ndifferent indices are fine; different half relations are not")
    show([GhzLabel(4, 0, 1), GhzLabel(4, 5, 1)], note="(both halves-equal)")
    show([GhzLabel(4, 3, 1), GhzLabel(4, 6, 1)], note="(both halves-negated)")
    show([GhzLabel(4, 0, 1), GhzLabel(4, 3, 1)], note="(mixed relations)")

    print("\nsizes may differ too")
    show([GhzLabel(4, 5, 1), make_label("010010", 1)])

    print("\none full signed table, three minus-signed copies of phi-")
    pred = predict_multi(SwapSpec(CompositeSystem((PHI_MINUS,) * 3)))
    for p in pred.pairs:
        print(
            f"  measured {p.measured.text():>6}  residual {p.residual.text():>6}"
            f"  sign {p.coeff_sign:+d}  p={p.probability}"
        )

    print("\nexhaustive confirmation on every Bell triple:")
    failures = 0
    for states in itertools.product(enumerate_half_symmetric(2), repeat=3):
        report = verify_against_oracle(SwapSpec(CompositeSystem(states)))
        failures += 0 if report.ok else 1
    print(f"  64 triples verified against the oracle, {failures} failures")


if __name__ == "__main__":
    main()
