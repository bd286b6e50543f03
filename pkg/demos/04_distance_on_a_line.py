"""Oriented distance between points of a line, on the smallest geometry.

The isometries fixing the frame and one line form a small group; its
index-2 oriented part acts simply transitively on each point stratum of
the line, so "the element carrying p to q" is a well-defined distance.
"""

import itertools

from char2conf import (
    Arf, GF2Field, build_geometry, classify_cycle, distance, line_group,
    oriented_distance, ort_plus, point_orbit, projective_reps,
)

f = GF2Field(1)
e = Arf.finite(f.arf_e())
g = build_geometry(f, e, e)
print("geometry: elliptic over GF(2)")

lines = [c for c in projective_reps(f, 6)
         if (lambda fl: fl.hypercycle and fl.line and fl.independent
             and not fl.ideal)(classify_cycle(g, c))]
print("independent non-ideal lines found:", len(lines))

ell = (1, 0, 0, 1, 0, 1)
grp = ort_plus(line_group(g, ell))
print("chosen line:", ell, "-> oriented group of order", grp.order)

orbit = point_orbit(g, ell, Arf.finite(0))
print("points on the line (ratio-0 stratum):",
      [p.rep for p in orbit])

print("\npairwise oriented distances (as group elements):")
for p1, p2 in itertools.product(orbit, orbit):
    gamma = oriented_distance(g, ell, p1, p2, group=grp)
    print("  %s -> %s : %s" % (p1.rep, p2.rep, gamma))

print("\nforgetting orientation folds inverse pairs together:")
classes = {distance(g, ell, p1, p2)
           for p1, p2 in itertools.product(orbit, orbit)}
print(len(classes), "distance classes on this line")
