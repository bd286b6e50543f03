"""A quick tour of GF(2^n) arithmetic as the package encodes it.

Field elements are plain ints holding polynomial bits; addition is XOR
and multiplication reduces by a fixed irreducible modulus.
"""

from char2conf import GF2Field

f = GF2Field(4)
print("working in GF(16), modulus bits", bin(f.modulus))

a, b = 5, 9
print("a = %d, b = %d" % (a, b))
print("a + b  =", f.add(a, b))
print("a * b  =", f.mul(a, b))
print("a / b  =", f.div(a, b))
print("a^-1   =", f.inv(a), " check:", f.mul(a, f.inv(a)))

print("\nsquaring is a bijection, so square roots are unique:")
r = f.sqrt(a)
print("sqrt(%d) = %d, and %d^2 = %d" % (a, r, r, f.mul(r, r)))

print("\nthe trace splits the field in half:")
for x in f.elements():
    if x and f.trace(x) == 1:
        print("first trace-1 element:", x)
        break

print("\nh(x) = x + x^2 hits exactly the trace-0 half:")
image = sorted({f.h(x) for x in f.elements()})
print("image of h:", image)
print("traces on the image:", sorted({f.trace(y) for y in image}))

print("\nsolving x^2 + x = a works exactly when trace(a) = 0:")
for a in (1, 2):
    roots = f.solve_quadratic(a)
    if roots is None:
        print("a = %d: no solution (trace %d)" % (a, f.trace(a)))
    else:
        print("a = %d: roots %s, differ by 1 as they must" % (a, roots))
