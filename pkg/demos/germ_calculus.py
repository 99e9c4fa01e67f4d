"""Tour of the germ field: a computable home for infinitesimal reasoning.

A germ is a rational function of n compared by eventual dominance, so 1/n is
a genuine positive infinitesimal and n a genuine infinite element, while
every comparison stays exactly decidable.
"""

from fractions import Fraction

from expansive.germ import (Germ, classify, compare, infinitely_close,
                            lemma_transfer_check, parse_germ, standard_part)

n = Germ.variable()

print("== arithmetic ==")
g = (3 * n * n + 2) / (n + 1)
print(f"g = {g}")
print(f"g - 3n = {g - 3 * n}   (finite!)")
print(f"classify(g) = {classify(g).kind}, eventual sign {g.sign()}")

print("\n== order is eventual, not pointwise ==")
lhs, rhs = 2 * n + 5, 3 * n
print(f"{lhs}  vs  {rhs}: compare = {compare(lhs, rhs)}  (Less)")
print(f"at n=1 the left side is bigger ({lhs.evaluate(1)} > {rhs.evaluate(1)}),")
print(f"but beyond the crossover: {lhs.evaluate(10)} < {rhs.evaluate(10)}")

print("\n== standard parts ==")
h = (3 * n + 2) / (n + 1)
print(f"st({h}) = {standard_part(h)}")
print(f"st(1/(n^2+1)) = {standard_part(1 / (n * n + 1))}")
print(f"(n+1)/n infinitely close to 1?  {infinitely_close((n + 1) / n, Germ.from_fraction(1))}")

print("\n== parsing the literal syntax ==")
lit = parse_germ("(3n^2+2)/(n+1)")
print(f'parse_germ("(3n^2+2)/(n+1)") = {lit}')

print("\n== the perturbation lemma ==")
one, two = Germ.from_fraction(1), Germ.from_fraction(2)
res = lemma_transfer_check(one, two, one + 1 / n, two - 1 / n, Fraction(3, 4))
print("a=1, b=2 perturbed by +-1/n, threshold 3/4:")
print(f"  part 1 (germ distance > r forces |a-b| >= r): "
      f"triggered={res.part1_triggered}, verified={res.part1_verified}")
print(f"  part 2 (|a-b| > r forces st(germ distance) >= r): "
      f"triggered={res.part2_triggered}, verified={res.part2_verified}, "
      f"st = {res.st_distance}")
print(f"  summary: {res.summary}")
