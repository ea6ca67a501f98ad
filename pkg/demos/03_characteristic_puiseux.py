"""The characteristic Puiseux polynomial of a rational q-polymatroid.

Reproduces the worked example: the uniform q-matroid U_{2,3}(2), the
paving q-matroid induced by one plane of F_2^3, and their convex
combination, whose polynomial picks up a term with the fractional
exponent 1 - lam.  Both closed-form expressions (in terms of either
summand's polynomial alone) are checked against the direct sum over the
lattice.
"""

from fractions import Fraction

from qrank import (build_lattice, char_puiseux, convex_combination,
                   moebius, paving, paving_combo_char, uniform)
from qrank.constructions import paving_spec

lat = build_lattice(2, 3)
print("Moebius values on L(F_2^3):",
      {d: moebius(d, 2) for d in range(4)})

u = uniform(lat, 2)
chi1 = char_puiseux(u)
print(f"\nchi(U_2,3(2))  = {chi1}")

s = frozenset({lat.index_of_rows([(0, 1, 0), (0, 0, 1)])})
ms = paving(paving_spec(lat, 2, s))
chi2 = char_puiseux(ms)
print(f"chi(M_S)       = {chi2}   (S = one plane, a rank-1 circuit)")

for lam in (Fraction(1, 2), Fraction(1, 3)):
    combo = convex_combination([(lam, u), (1 - lam, ms)])
    chim = char_puiseux(combo)
    print(f"\nlam = {lam}:")
    print(f"  chi(combo)   = {chim}")
    via1 = paving_combo_char(chi1, (0, 1), 2, 2, lam, via=1)
    via2 = paving_combo_char(chi2, (0, 1), 2, 2, lam, via=2)
    print(f"  via chi(M_1) = {via1}   agrees: {via1 == chim}")
    print(f"  via chi(M_2) = {via2}   agrees: {via2 == chim}")
    print(f"  value at t=1 = {chim.eval_at_one()} (always 0: Moebius sums "
          "telescope)")
    print(f"  exponents run from {chim.min_exponent()} to "
          f"{chim.max_exponent()} = rank of the combination")
