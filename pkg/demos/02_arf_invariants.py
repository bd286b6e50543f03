"""Arf invariants: the characteristic-2 stand-in for the discriminant.

A non-degenerate form in dimension 2k gets a value in the field (or
infinity for a lone unpaired plane); only its class modulo the image of
x + x^2 survives a change of basis.
"""

import itertools

from char2conf import GF2Field, QuadraticForm, arf_invariant, spaces_isomorphic

f = GF2Field(2)

hyperbolic = QuadraticForm(f, [[0, 1], [0, 0]])
elliptic = QuadraticForm(f, [[1, 1], [0, f.arf_e()]])
print("hyperbolic plane: arf =", arf_invariant(hyperbolic),
      "class", f.arf_normalize(arf_invariant(hyperbolic)))
print("anisotropic plane: arf =", arf_invariant(elliptic),
      "class", f.arf_normalize(arf_invariant(elliptic)))

print("\nraw values drift under basis change, the class never does:")
seen = set()
for m in itertools.product(f.elements(), repeat=4):
    mat = ((m[0], m[1]), (m[2], m[3]))
    det = f.add(f.mul(m[0], m[3]), f.mul(m[1], m[2]))
    if det == 0:
        continue
    moved = elliptic.transform(mat)
    value = arf_invariant(moved)
    seen.add((value.value, f.arf_normalize(value)))
print("observed (value, class) pairs:", sorted(seen))

print("\ntwo planes are isometric exactly when the classes agree:")
for f1, f2 in [(hyperbolic, elliptic), (elliptic, elliptic)]:
    w = spaces_isomorphic(f1, f2)
    print("witness" if w is not None else "no witness",
      "for classes",
      f.arf_normalize(arf_invariant(f1)), "vs",
      f.arf_normalize(arf_invariant(f2)))

print("\nthe invariant adds over orthogonal sums:")
four = hyperbolic.direct_sum(elliptic)
print("hyperbolic + anisotropic in dim 4: class",
      f.arf_normalize(arf_invariant(four)))
