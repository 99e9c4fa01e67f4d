"""Bi-infinite symbolic points, their exact metric, and separation sets.

Everything here is rational arithmetic: distances come out as exact
fractions, and the set of times at which a pair separates above a constant
is decided completely, not sampled.
"""

from fractions import Fraction

from expansive.analysis import separation_report, asymptotic_verdict
from expansive.sequences import (Alphabet, PatchedPeriodicSequence,
                                 difference_set, metric_exact, metric_window)

A = Alphabet(3)
ones = PatchedPeriodicSequence.constant(A, 1)
threes = PatchedPeriodicSequence.constant(A, 3)
spiked = ones.with_patch([2], 5)

print("== three points ==")
for name, x in (("ones", ones), ("threes", threes), ("spiked", spiked)):
    print(f"  {name}: {x}")

print("\n== exact distances ==")
print(f"d(ones, threes) = {metric_exact(ones, threes)}   (the maximum: 2*delta*3)")
print(f"d(ones, spiked) = {metric_exact(ones, spiked)}")
w = metric_window(ones, spiked, 10)
print(f"radius-10 window bracket: [{w.lower}, {w.upper}]")

print("\n== difference sets ==")
print(f"ones vs spiked: {difference_set(ones, spiked).to_json()}")
print(f"ones vs threes: {difference_set(ones, threes).to_json()}")

print("\n== separation report (c = 1/2) ==")
rep = separation_report(ones, spiked, Fraction(1, 2), 8)
for t in range(-8, 9):
    marker = "  <-- above" if rep.times[t] == "above" else ""
    print(f"  shift {t:+d}: d = {rep.distances[t]}{marker}")
v = rep.verdict
print(f"verdict: {'infinite' if v.infinite else f'finite, times {v.times}'}")

print("\n== asymptotic verdicts ==")
print(f"ones vs spiked: {asymptotic_verdict(ones, spiked).to_json()}")
mixed = PatchedPeriodicSequence(A, (2,), (), 0, (3,))
base = PatchedPeriodicSequence(A, (2,), (), 0, (1,))
print(f"shared past, different future: {asymptotic_verdict(base, mixed).to_json()}")
