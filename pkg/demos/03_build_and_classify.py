"""Build one geometry per class cell and look at what changes.

A geometry is a six-dimensional non-degenerate form with three marked
projective points.  The Arf classes of the point marker P and the line
marker L pick one of nine classical plane names.
"""

import itertools

from char2conf import (
    GF2Field, arf_of, build_geometry, classify_geometry, quadric_points,
    replace_omega,
)

f = GF2Field(2)
classes = ["e", "inf", "0"]

print("class cell -> geometry name, hypercycle count over GF(4)")
for cp, cl in itertools.product(classes, classes):
    g = build_geometry(f, f.arf_of_class(cp), f.arf_of_class(cl))
    got = classify_geometry(g)
    print("  (%3s, %3s) -> %-18s %d hypercycles"
          % (cp, cl, got.name, len(quadric_points(g))))

print("\nmoving the reality marker Omega inside the marked span:")
g = build_geometry(f, f.arf_of_class("e"), f.arf_of_class("inf"))
print("start: Arf(P) =", arf_of(g, g.p), " Arf(L) =", arf_of(g, g.l),
      "->", classify_geometry(g).name)
for alpha, beta in [(1, 0), (2, 1), (3, 3)]:
    moved, pred_l, pred_p = replace_omega(g, alpha, beta)
    print("  (%d,%d): Arf(P) -> %s, Arf(L) -> %s  -> %s"
          % (alpha, beta, arf_of(moved, moved.p), arf_of(moved, moved.l),
             classify_geometry(moved).name))
print("the marker pinned at infinity never moves, so the geometry stays")
print("in its table column, but the finite partner drifts freely: these")
print("moves change coordinates, not the underlying incidence structure")
