"""Isometry groups of lines and cycles, and distance along a line.

The stabilizer of an independent line inside a geometry comes in exactly
two shapes.  When the pairing restricted to the span of the marked
vectors and the line is non-degenerate, the stabilizer is the isometry
group of the complementary plane, an orthogonal group Ort(alpha).  When
the restricted pairing has a kernel (necessarily of dimension two), the
stabilizer is an elementary abelian group of order 2q whose elements are
labeled by pairs (a1, eps) in K+ x F2+.  Both carry a canonical F2-valued
homomorphism (the lambda scalar, respectively eps) whose kernel is the
index-2 subgroup used to orient distances.
"""

from dataclasses import dataclass

from . import linalg
from .confgeo import (
    GEOMETRY_DIM, ProjPoint, as_point, classify_cycle, projective_reps,
)
from .errors import (
    AmbiguousDistanceError, ContractViolationError, IdealLineError,
    NotConnectedError, NotDefinedError, NotIndependentError,
    PreconditionViolatedError, TooLargeError,
)
from .gf2field import Arf, CLASS_ZERO
from .quadspace import QuadraticForm, arf_invariant, enumerate_isometries

ORTHOGONAL = "orthogonal"
DEGENERATE_PAIR = "degenerate-pair"


class OrtGroup:
    """Plane isometry group, as matrices or as labeled pairs.

    Orthogonal kind: elements are 2x2 matrices preserving form2.
    Degenerate-pair kind: elements are (a1, eps) labels composing by
    componentwise addition, so every element is its own inverse.
    Groups built from a geometry also carry a 6x6 ambient matrix per
    element realizing the action on the full space.
    """

    def __init__(self, kind, field, alpha, elements, form2=None,
                 ambient=None):
        self.kind = kind
        self.field = field
        self.alpha = alpha
        self.elements = tuple(elements)
        self.form2 = form2
        self.ambient = dict(ambient) if ambient is not None else None

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def identity(self):
        if self.kind == ORTHOGONAL:
            return ((1, 0), (0, 1))
        return (0, 0)

    def mul(self, a, b):
        if self.kind == ORTHOGONAL:
            return linalg.mat_mul(self.field, a, b)
        return (a[0] ^ b[0], a[1] ^ b[1])

    def inv(self, a):
        if self.kind == ORTHOGONAL:
            m = linalg.mat_inv(self.field, a)
            if m is None:
                raise ContractViolationError("group element not invertible")
            return m
        return a

    def element_order(self, a):
        k, x = 1, a
        ident = self.identity()
        while x != ident:
            x = self.mul(x, a)
            k += 1
            if k > self.order:
                raise ContractViolationError("order exceeded group size")
        return k

    def fingerprint(self):
        hist = {}
        for a in self.elements:
            k = self.element_order(a)
            hist[k] = hist.get(k, 0) + 1
        return (self.order, tuple(sorted(hist.items())))

    def ambient_matrix(self, a):
        if self.ambient is None:
            raise NotDefinedError("group has no ambient realization")
        return self.ambient[a]

    def __repr__(self):
        return "OrtGroup(%s, order=%d, alpha=%s)" % (
            self.kind, self.order, self.alpha)


def ort_group(field, alpha):
    """The plane isometry group with the given Arf value.

    Finite values pick a canonical model: the x*y form for the trivial
    class and x^2 + xy + e*y^2 otherwise.  The infinite value gives
    the abstract degenerate-pair group of order 2q.
    """
    if alpha.is_infinity:
        pairs = sorted((a, e) for a in field.elements() for e in (0, 1))
        return OrtGroup(DEGENERATE_PAIR, field, alpha, pairs)
    if field.arf_normalize(alpha) == CLASS_ZERO:
        model = QuadraticForm(field, [[0, 1], [0, 0]])
    else:
        model = QuadraticForm(field, [[1, 1], [0, field.arf_e()]])
    group = enumerate_isometries(model)
    return OrtGroup(ORTHOGONAL, field, arf_invariant(model), group.elements,
                    form2=model)


def lambda_scalar(form, m):
    """Scalar lambda with M^T A M = A + lambda * Gram.

    A is the stored upper-triangular coefficient matrix of the form.
    The difference M^T A M + A vanishes on the diagonal for any
    isometry, so it is a multiple of the Gram matrix; the multiplier is
    solved from one nonzero Gram entry and verified everywhere.
    """
    f = form.field
    a = form.coeffs
    n = linalg.mat_add(linalg.mat_mul(f, linalg.transpose(m),
                                      linalg.mat_mul(f, a, m)), a)
    gram = form.gram()
    lam = None
    for i in range(form.dim):
        for j in range(form.dim):
            if gram[i][j]:
                lam = f.div(n[i][j], gram[i][j])
                break
        if lam is not None:
            break
    if lam is None:
        raise PreconditionViolatedError("pairing is identically zero")
    for i in range(form.dim):
        for j in range(form.dim):
            if n[i][j] != f.mul(lam, gram[i][j]):
                raise ContractViolationError(
                    "M^T A M + A is not a multiple of the pairing")
    return lam


def ort_plus(group):
    """Kernel of the canonical sign homomorphism; index exactly 2.

    Orthogonal kind keeps the elements with lambda scalar 0 and insists
    every lambda lies in {0, 1}.  Degenerate kind keeps the eps = 0
    labels, the K+ factor.
    """
    f = group.field
    if group.kind == DEGENERATE_PAIR:
        kept = [p for p in group.elements if p[1] == 0]
    else:
        kept = []
        for m in group.elements:
            lam = lambda_scalar(group.form2, m)
            if f.add(lam, f.mul(lam, lam)) != 0:
                raise ContractViolationError(
                    "lambda scalar %d violates x + x^2 = 0" % lam)
            if lam == 0:
                kept.append(m)
    if 2 * len(kept) != group.order:
        raise ContractViolationError("sign kernel must have index 2")
    ambient = None
    if group.ambient is not None:
        ambient = {x: group.ambient[x] for x in kept}
    return OrtGroup(group.kind, f, group.alpha, kept, form2=group.form2,
                    ambient=ambient)


def _lift_block(field, v0_cols, w_cols, small):
    """6x6 matrix acting as identity on v0_cols and as small on w_cols."""
    t = linalg.from_columns(list(v0_cols) + list(w_cols))
    t_inv = linalg.mat_inv(field, t)
    if t_inv is None:
        raise ContractViolationError("span plus complement is not a basis")
    k = len(v0_cols)
    d = k + len(w_cols)
    block = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    for i in range(len(w_cols)):
        for j in range(len(w_cols)):
            block[k + i][k + j] = small[i][j]
    return linalg.mat_mul(field, t,
                          linalg.mat_mul(field, tuple(map(tuple, block)),
                                         t_inv))


def line_group(g, ell):
    """Isometries of the geometry fixing Omega, P, L and ell exactly.

    The restriction of the pairing to the span of those four vectors
    decides the shape: non-degenerate gives the orthogonal group of the
    complementary plane, a two-dimensional kernel gives the
    degenerate-pair group of order 2q.
    """
    f = g.field
    ell = as_point(f, ell)
    flags = classify_cycle(g, ell)
    if not flags.line:
        raise PreconditionViolatedError("ell must pair to zero with L")
    if not flags.independent:
        raise NotIndependentError(
            "line group is defined for independent lines only")
    v0 = [g.omega.rep, g.p.rep, g.l.rep, ell.rep]
    restricted = g.form.restrict(v0)
    kernel_coords = linalg.nullspace(f, list(restricted.gram()))
    if not kernel_coords:
        return _orthogonal_line_group(g, v0)
    if len(kernel_coords) != 2:
        raise ContractViolationError(
            "restricted pairing kernel has dimension %d, expected 0 or 2"
            % len(kernel_coords))
    return _degenerate_line_group(g, v0, kernel_coords)


def _orthogonal_line_group(g, v0):
    f = g.field
    comp = g.form.perp(v0)
    if comp.dim != 2:
        raise ContractViolationError("complement of the line span must be"
                                     " a plane")
    w_form = g.form.restrict(comp.basis)
    iso = enumerate_isometries(w_form)
    ambient = {m: _lift_block(f, v0, comp.basis, m) for m in iso.elements}
    return OrtGroup(ORTHOGONAL, f, arf_invariant(w_form), iso.elements,
                    form2=w_form, ambient=ambient)


def _degenerate_line_group(g, v0, kernel_coords):
    f = g.field
    form = g.form

    def unlift(coords):
        v = linalg.zeros(GEOMETRY_DIM)
        for c, b in zip(coords, v0):
            if c:
                v = linalg.vec_add(v, linalg.vec_scale(f, c, b))
        return v

    k1, k2 = (unlift(c) for c in kernel_coords)
    # two independent kernel directions with nonzero Q; the zero set of
    # Q on the kernel plane is at most one direction
    directions = [k2] + [linalg.vec_add(k1, linalg.vec_scale(f, x, k2))
                         if x else k1 for x in f.elements()]
    anisotropic = [v for v in directions if form.q(v) != 0]
    if len(anisotropic) < 2:
        raise ContractViolationError(
            "the quadratic form vanishes on the kernel plane")
    e1, e2 = anisotropic[0], anisotropic[1]
    q1, q2 = form.q(e1), form.q(e2)
    gram = form.gram()
    row1 = linalg.mat_vec(f, gram, e1)
    row2 = linalg.mat_vec(f, gram, e2)
    solved = linalg.solve_affine(f, [row1, row2], [1, 0])
    if solved is None:
        raise ContractViolationError("no dual vector for e1")
    d1 = solved[0]
    row3 = linalg.mat_vec(f, gram, d1)
    solved = linalg.solve_affine(f, [row1, row2, row3], [0, 1, 0])
    if solved is None:
        raise ContractViolationError("no dual vector for e2")
    d2 = solved[0]

    t = linalg.from_columns(v0 + [d1, d2])
    t_inv = linalg.mat_inv(f, t)
    if t_inv is None:
        raise ContractViolationError("marked span plus duals is not a basis")
    pairs = sorted((a, e) for a in f.elements() for e in (0, 1))
    ambient = {}
    for a1, eps in pairs:
        a2 = f.div(eps ^ f.mul(a1, q1), q2)
        beta = f.sqrt(f.div(f.mul(f.mul(a1, a1), q1) ^ a1, q2))
        img1 = linalg.vec_add(d1, linalg.vec_add(
            linalg.vec_scale(f, a1, e1), linalg.vec_scale(f, beta, e2)))
        img2 = linalg.vec_add(d2, linalg.vec_add(
            linalg.vec_scale(f, beta, e1), linalg.vec_scale(f, a2, e2)))
        m = linalg.mat_mul(f, linalg.from_columns(v0 + [img1, img2]), t_inv)
        cols = v0 + [img1, img2]
        src = v0 + [d1, d2]
        for i in range(GEOMETRY_DIM):
            if form.q(cols[i]) != form.q(src[i]):
                raise ContractViolationError("label (%d,%d) is not an"
                                             " isometry" % (a1, eps))
            for j in range(i + 1, GEOMETRY_DIM):
                if form.b(cols[i], cols[j]) != form.b(src[i], src[j]):
                    raise ContractViolationError("label (%d,%d) is not an"
                                                 " isometry" % (a1, eps))
        ambient[(a1, eps)] = m
    return OrtGroup(DEGENERATE_PAIR, f, Arf.infinity(), pairs,
                    ambient=ambient)


def translation_invariant(g, ell):
    """Arf value controlling the translation group along a line.

    Projects Omega off the plane spanned by ell and P and returns the
    Arf value of the plane spanned by L and that projection.  Where an
    exact closed form exists (pairing of Omega with P zero, or the Arf
    value of the Omega-P plane finite nonzero) the projection result is
    checked against it.
    """
    f = g.field
    form = g.form
    ell = as_point(f, ell)
    flags = classify_cycle(g, ell)
    if not flags.hypercycle or not flags.line:
        raise PreconditionViolatedError(
            "translation invariant needs a line of the geometry")
    if form.b(g.p.rep, ell.rep) == 0:
        raise IdealLineError("line must not be ideal")
    if not flags.independent:
        raise NotIndependentError("line must be independent")
    omega, p, l = g.omega.rep, g.p.rep, g.l.rep
    lvec = linalg.vec_scale(f, f.inv(form.b(p, ell.rep)), ell.rep)
    t = form.b(omega, lvec)
    b1, b2 = form.b(omega, p), form.b(omega, l)
    q0, q1, q2 = form.q(omega), form.q(p), form.q(l)
    projected = omega
    if t:
        projected = linalg.vec_add(projected, linalg.vec_scale(f, t, p))
    if b1:
        projected = linalg.vec_add(projected, linalg.vec_scale(f, b1, lvec))
    if b2 == 0:
        return Arf.infinity()
    value = f.div(f.mul(q2, form.q(projected)), f.mul(b2, b2))
    base = f.div(f.mul(q2, q0), f.mul(b2, b2))
    if b1 == 0:
        closed = base ^ f.div(f.mul(f.mul(q2, q1), f.mul(t, t)),
                              f.mul(b2, b2))
        if closed != value:
            raise ContractViolationError("closed form disagrees with the"
                                         " projection route")
    elif q1 != 0:
        arf_p = f.div(f.mul(q1, q0), f.mul(b1, b1))
        closed = base ^ f.mul(f.div(base, arf_p),
                              f.h(f.div(f.mul(q1, t), b1)))
        if closed != value:
            raise ContractViolationError("closed form disagrees with the"
                                         " projection route")
    return Arf.finite(value)


def point_orbit(g, c, ratio):
    """Non-ideal independent points on the cycle c with a fixed ratio.

    The ratio is B(Omega,p) / B(L,p), unchanged under rescaling of p.
    The isometries fixing Omega, P, L and c are checked to act
    transitively on the returned set.
    """
    f = g.field
    c = as_point(f, c)
    if isinstance(ratio, Arf):
        if ratio.is_infinity:
            return []
        ratio = ratio.value
    f.check(ratio)
    if 6 * f.n > 24:
        raise TooLargeError("point enumeration capped at 2^24 vectors")
    omega, p, l = g.omega.rep, g.p.rep, g.l.rep
    members = []
    for rep in projective_reps(f, GEOMETRY_DIM):
        if g.form.q(rep) != 0 or g.form.b(p, rep) != 0:
            continue
        bl = g.form.b(l, rep)
        if bl == 0 or g.form.b(c.rep, rep) != 0:
            continue
        if f.div(g.form.b(omega, rep), bl) != ratio:
            continue
        if linalg.rank(f, [omega, p, l, c.rep, rep]) != 5:
            continue
        members.append(ProjPoint(f, rep))
    if members:
        group = enumerate_isometries(g.form, fixed=[omega, p, l, c.rep])
        seed = members[0]
        orbit = {ProjPoint(f, linalg.mat_vec(f, m, seed.rep))
                 for m in group.elements}
        if orbit != set(members):
            raise ContractViolationError(
                "cycle group is not transitive on the ratio set")
    return members


def _checked_line(g, ell):
    flags = classify_cycle(g, ell)
    if not (flags.hypercycle and flags.line and flags.real
            and flags.independent) or g.form.b(g.p.rep, ell.rep) == 0:
        raise PreconditionViolatedError(
            "distance needs a real, non-ideal, independent line")


def _checked_point(g, ell, pt):
    flags = classify_cycle(g, pt)
    if not (flags.hypercycle and flags.point and flags.real) \
            or g.form.b(g.l.rep, pt.rep) == 0 \
            or g.form.b(ell.rep, pt.rep) != 0:
        raise PreconditionViolatedError(
            "distance needs real non-ideal points on the line")


def _distance_group(g, ell):
    return ort_plus(line_group(g, ell))


def oriented_distance(g, ell, p1, p2, group=None):
    """The unique positively-oriented line isometry sending p1 to p2.

    Searches the index-2 subgroup of the line group for elements whose
    ambient action carries p1 to p2 projectively.  No such element
    raises NotConnected; several raise AmbiguousDistance.
    """
    f = g.field
    ell = as_point(f, ell)
    p1, p2 = as_point(f, p1), as_point(f, p2)
    _checked_line(g, ell)
    _checked_point(g, ell, p1)
    _checked_point(g, ell, p2)
    if group is None:
        group = _distance_group(g, ell)
    mappers = [x for x in group.elements
               if ProjPoint(f, linalg.mat_vec(
                   f, group.ambient_matrix(x), p1.rep)) == p2]
    if not mappers:
        raise NotConnectedError("no oriented isometry links the points")
    if len(mappers) > 1:
        raise AmbiguousDistanceError(
            "%d oriented isometries link the points" % len(mappers))
    return mappers[0]


@dataclass(frozen=True)
class DistanceClass:
    """Unordered pair {gamma, gamma^-1}; a singleton for involutions."""
    pair: tuple


def distance(g, ell, p1, p2):
    """Oriented distance up to group inversion."""
    group = _distance_group(g, as_point(g.field, ell))
    gamma = oriented_distance(g, ell, p1, p2, group=group)
    return DistanceClass(tuple(sorted({gamma, group.inv(gamma)})))
