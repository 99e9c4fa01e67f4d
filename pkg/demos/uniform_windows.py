"""Uniform separation windows: certifying that separation cannot stall.

A window step certificate at (epsilon, n, c) says: every admissible pair at
distance above epsilon must separate above c at some time strictly between n
and m.  Chaining steps yields a strictly monotone sequence of windows; a
refuter is a concrete pair whose entire separation set sits inside [-n, n],
defeating every m at once.
"""

from fractions import Fraction

from expansive.analysis import (SftLanguage, separation_times,
                                uniform_window_step, window_sequence)
from expansive.sequences import metric_exact, sequence_to_json
from expansive.systems import Sft

HALF = Fraction(1, 2)

print("== the 2-cycle shift: separation never stalls ==")
lang = SftLanguage(Sft(2, [(1, 2), (2, 1)]))
step = uniform_window_step(lang, HALF, 10, HALF, 20)
print(f"step from n=10: {step.kind}, m = {step.m}  ({step.note})")
seq = window_sequence(lang, HALF, HALF, 7, 30)
print(f"certified monotone window sequence: {seq.sequence}")

print("\n== the full 2-shift: refuted ==")
full = SftLanguage(Sft.full_shift(2))
cert = uniform_window_step(full, Fraction(1), 3, HALF, 8)
print(f"step at (epsilon=1, n=3): {cert.kind}")
x, y = cert.witness
print(f"witness pair: {sequence_to_json(x)}")
print(f"              {sequence_to_json(y)}")
print(f"d(x, y) = {metric_exact(x, y)} > 1, yet the full separation set is "
      f"{separation_times(x, y, HALF).times}")
print("every separation time lies inside [-3, 3], so no window works")

print("\n== vacuous certification ==")
vac = uniform_window_step(lang, Fraction(10), 3, HALF, 8)
print(f"epsilon above the metric diameter: {vac.kind}  ({vac.note})")
