"""Interval exchange orbits coded into the 3-symbol shift, exactly.

The exchange with breakpoints sqrt(2)/2 and sqrt(3)/2 has rationally
independent data, so its itineraries never fall into a periodic trap; all
arithmetic below is exact in the field generated by the two roots.
"""

from fractions import Fraction

from expansive.iet import (FieldElem, IetMap, check_commutation, is_regular,
                           itinerary)

t = IetMap.example()
print(f"breakpoints: a = {t.a}  (~{float(t.a):.6f})")
print(f"             b = {t.b}  (~{float(t.b):.6f})")
print(f"target order of the three intervals: {t.perm}")
print(f"rationally independent with 1: {t.is_rationally_independent()}")

x = FieldElem.rational(Fraction(1, 10))
print(f"\norbit of x = 1/10 (exact coordinates over 1, sqrt2, sqrt3, sqrt6):")
point = x
for k in range(5):
    print(f"  T^{k}(x) = {point}")
    point = t.apply(point)

print(f"\nregular out to 300 steps both ways: "
      f"{is_regular(t, x, 300).regular}")

it = itinerary(t, x, 30)
print(f"itinerary window, radius 30 (position 0 marked):")
w = "".join(str(s) for s in it.window)
print(f"  {w[:30]}|{w[30]}|{w[31:]}")
print(f"shift commutation at radius 100: {check_commutation(t, x, 100)}")

print("\n== a rational exchange for contrast ==")
rot = IetMap(FieldElem.rational(Fraction(1, 3)), FieldElem.rational(Fraction(2, 3)))
print(f"rotation by 1/3: independent = {rot.is_rationally_independent()}")
it = itinerary(rot, FieldElem.rational(Fraction(1, 6)), 3)
print(f"itinerary of 1/6 at radius 3: {''.join(str(s) for s in it.window)}")
print(f"breakpoint orbit detected: "
      f"{is_regular(rot, FieldElem.rational(Fraction(1, 3)), 5)}")
