"""Doubly asymptotic pairs in vertex shifts, decided on the pair graph.

A pair of distinct points whose orbits converge in both time directions is
exactly an off-diagonal excursion between diagonal cycles of the product
graph.  The verdict "no doubly asymptotic pairs" is what upgrades plain
expansiveness to separation at infinitely many times.
"""

from fractions import Fraction

from expansive.analysis import (nonstandard_expansive_pair,
                                nonstandard_expansive_sft,
                                sft_doubly_asymptotic_exists)
from expansive.sequences import difference_set, metric_exact
from expansive.systems import Sft

HALF = Fraction(1, 2)

examples = {
    "full 2-shift": Sft.full_shift(2),
    "golden mean (forbid 2->2)": Sft(2, [(1, 1), (1, 2), (2, 1)]),
    "2-cycle (only 1->2->1)": Sft(2, [(1, 2), (2, 1)]),
    "4-cycle": Sft(4, [(1, 2), (2, 3), (3, 4), (4, 1)]),
}

for name, s in examples.items():
    res = sft_doubly_asymptotic_exists(s)
    verdict = nonstandard_expansive_sft(s, HALF)
    print(f"== {name} ==")
    print(f"  doubly asymptotic pair exists: {res.exists}")
    print(f"  separates infinitely for every pair (c=1/2): "
          f"{verdict.nonstandard_expansive}")
    if res.exists:
        x, y = res.witness
        print(f"  witness: {x}")
        print(f"           {y}")
        print(f"  difference set: {difference_set(x, y).to_json()['positions']}")
        print(f"  d(x, y) = {metric_exact(x, y)}, pairwise verdict: "
              f"{nonstandard_expansive_pair(x, y, HALF)}")
    print()
