"""Quadratic forms over GF(2^n) and their isometries.

A form is stored as an upper-triangular coefficient matrix: entry (i,i) is
the coefficient of x_i^2 and entry (i,j), i<j, the coefficient of x_i*x_j.
The derived bilinear form B(u,v) = Q(u+v)+Q(u)+Q(v) is alternating in
characteristic 2, so the Gram matrix has zero diagonal and loses the
squares; that is why the triangular storage matters.
"""

from dataclasses import dataclass

from . import linalg
from .errors import (
    ContractViolationError, DegenerateBilinearError, DegenerateFormError,
    DimMismatchError, FieldMismatchError, NotPartialIsometryError,
    TooLargeError,
)
from .gf2field import Arf, GF2Field

# enumerate_isometries refuses anything with n*dim above this
ISOMETRY_GUARD = 12


class Subspace:
    """A subspace given by a reduced-row-echelon basis (canonical form)."""

    def __init__(self, field, ambient_dim, vectors):
        self.field = field
        self.ambient_dim = ambient_dim
        rows, _ = linalg.rref(field, [tuple(v) for v in vectors])
        self.basis = tuple(rows)

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        v = tuple(v)
        for row in self.basis:
            lead = next(j for j in range(self.ambient_dim) if row[j])
            if v[lead]:
                v = linalg.vec_add(v, linalg.vec_scale(self.field, v[lead], row))
        return not any(v)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(dim=%d, basis=%r)" % (self.dim, self.basis)


class QuadraticForm:
    """Upper-triangular quadratic form over a GF2Field."""

    def __init__(self, field, coeffs):
        if not isinstance(field, GF2Field):
            raise TypeError("field must be a GF2Field")
        coeffs = tuple(tuple(field.check(x) for x in row) for row in coeffs)
        dim = len(coeffs)
        for i, row in enumerate(coeffs):
            if len(row) != dim:
                raise DimMismatchError("coefficient matrix is not square")
            for j in range(i):
                if row[j]:
                    raise DimMismatchError(
                        "coefficients below the diagonal must be zero")
        self.field = field
        self.dim = dim
        self.coeffs = coeffs
        self._gram = None

    def check_vec(self, v):
        v = tuple(self.field.check(x) for x in v)
        if len(v) != self.dim:
            raise DimMismatchError(
                "vector length %d != dim %d" % (len(v), self.dim))
        return v

    def q(self, v):
        """Q(v) = sum over i<=j of coeffs[i][j] v_i v_j."""
        v = self.check_vec(v)
        f = self.field
        acc = 0
        for i in range(self.dim):
            if not v[i]:
                continue
            for j in range(i, self.dim):
                c = self.coeffs[i][j]
                if c and v[j]:
                    acc ^= f.mul(f.mul(c, v[i]), v[j])
        return acc

    def gram(self):
        """Matrix of the derived bilinear form B(e_i, e_j)."""
        if self._gram is None:
            d = self.dim
            g = [[0] * d for _ in range(d)]
            for i in range(d):
                for j in range(i + 1, d):
                    g[i][j] = g[j][i] = self.coeffs[i][j]
            self._gram = tuple(tuple(r) for r in g)
        return self._gram

    def b(self, u, v):
        """B(u,v) = Q(u+v) + Q(u) + Q(v), evaluated via the Gram matrix."""
        u = self.check_vec(u)
        v = self.check_vec(v)
        return linalg.dot(self.field, u, linalg.mat_vec(self.field, self.gram(), v))

    def radical(self):
        """{v : B(v,.) = 0 and Q(v) = 0} as a Subspace.

        On the kernel of B the form satisfies Q(sum c_i k_i) =
        (sum c_i sqrt(Q(k_i)))^2, so the Q = 0 condition is one more
        linear constraint over the field.
        """
        f = self.field
        kernel = linalg.nullspace(f, list(self.gram()))
        if not kernel:
            return Subspace(f, self.dim, [])
        weights = [f.sqrt(self.q(k)) for k in kernel]
        coeff_rows = linalg.nullspace(f, [tuple(weights)])
        vectors = []
        for lam in coeff_rows:
            v = linalg.zeros(self.dim)
            for c, k in zip(lam, kernel):
                if c:
                    v = linalg.vec_add(v, linalg.vec_scale(f, c, k))
            vectors.append(v)
        return Subspace(f, self.dim, vectors)

    def restrict(self, basis):
        """The form pulled back to coordinates over the given vectors."""
        basis = [self.check_vec(v) for v in basis]
        k = len(basis)
        coeffs = [[0] * k for _ in range(k)]
        for i in range(k):
            coeffs[i][i] = self.q(basis[i])
            for j in range(i + 1, k):
                coeffs[i][j] = self.b(basis[i], basis[j])
        return QuadraticForm(self.field, coeffs)

    def transform(self, t):
        """The form v -> Q(T@v); columns of t are the new basis vectors."""
        cols = [linalg.mat_col(t, j) for j in range(len(t[0]))]
        return self.restrict(cols)

    def direct_sum(self, other):
        if self.field != other.field:
            raise FieldMismatchError("direct sum over different fields")
        d1, d2 = self.dim, other.dim
        coeffs = [[0] * (d1 + d2) for _ in range(d1 + d2)]
        for i in range(d1):
            for j in range(i, d1):
                coeffs[i][j] = self.coeffs[i][j]
        for i in range(d2):
            for j in range(i, d2):
                coeffs[d1 + i][d1 + j] = other.coeffs[i][j]
        return QuadraticForm(self.field, coeffs)

    def perp(self, vectors):
        """{w : B(w, v) = 0 for every given v} as a Subspace."""
        f = self.field
        rows = [linalg.mat_vec(f, self.gram(), self.check_vec(v))
                for v in vectors]
        if not rows:
            return Subspace(f, self.dim, linalg.identity(self.dim))
        return Subspace(f, self.dim, linalg.nullspace(f, rows))

    def __eq__(self, other):
        return (isinstance(other, QuadraticForm) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return "QuadraticForm(%r, %r)" % (self.field, self.coeffs)

    def to_json(self):
        return {"field": self.field.to_json(), "dim": self.dim,
                "coeffs": [list(row) for row in self.coeffs]}

    @classmethod
    def from_json(cls, doc):
        field = GF2Field.from_json(doc["field"])
        form = cls(field, doc["coeffs"])
        if form.dim != int(doc["dim"]):
            raise DimMismatchError("dim field disagrees with coeffs shape")
        return form


class IsomGroup:
    """A finite set of matrices closed under composition and inverse."""

    def __init__(self, field, elements):
        self.field = field
        self.elements = tuple(sorted(set(elements)))

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m):
        return m in set(self.elements)

    def identity(self):
        return linalg.identity(len(self.elements[0]))

    def mul(self, a, b):
        return linalg.mat_mul(self.field, a, b)

    def inv(self, m):
        out = linalg.mat_inv(self.field, m)
        if out is None:
            raise ContractViolationError("group element is singular")
        return out

    def element_order(self, m):
        ident = self.identity()
        k = 1
        acc = m
        while acc != ident:
            acc = self.mul(acc, m)
            k += 1
            if k > len(self.elements) + 1:
                raise ContractViolationError("element order exceeds group order")
        return k

    def fingerprint(self):
        """(order, sorted histogram of element orders): a cheap group invariant."""
        hist = {}
        for m in self.elements:
            o = self.element_order(m)
            hist[o] = hist.get(o, 0) + 1
        return (self.order, tuple(sorted(hist.items())))


def _isometry_search(src, dst, base, forced, find_all):
    """Backtracking search for matrices carrying src onto dst.

    base is an ordered basis of the source space; forced gives the images
    of its first entries.  Candidate images for the next basis vector are
    cut down by solving the linear B-pairing constraints first, then
    filtered by the Q value and independence.
    """
    field = src.field
    dim = dst.dim
    gram_dst = dst.gram()
    q_target = [src.q(v) for v in base]
    b_target = [[src.b(u, v) for v in base] for u in base]

    cols = list(forced)
    ech = linalg.Echelon(field)
    for c in cols:
        if not ech.add(c):
            raise NotPartialIsometryError("forced images are dependent")

    results = []

    def extend(k):
        if k == len(base):
            results.append(list(cols))
            return not find_all
        rows = [linalg.mat_vec(field, gram_dst, cols[j]) for j in range(k)]
        rhs = [b_target[j][k] for j in range(k)]
        if rows:
            solved = linalg.solve_affine(field, rows, rhs)
            if solved is None:
                return False
            particular, null_basis = solved
        else:
            particular, null_basis = linalg.zeros(dim), list(linalg.identity(dim))
        for v in linalg.affine_points(field, particular, null_basis):
            if dst.q(v) != q_target[k]:
                continue
            snap = ech.snapshot()
            if not ech.add(v):
                continue
            cols.append(v)
            stop = extend(k + 1)
            cols.pop()
            ech.restore(snap)
            if stop:
                return True
        return False

    extend(len(forced))
    return results


def _columns_to_matrix(field, base, cols):
    """Matrix M with M @ base[i] = cols[i]."""
    p = linalg.from_columns(base)
    p_inv = linalg.mat_inv(field, p)
    return linalg.mat_mul(field, linalg.from_columns(cols), p_inv)


def symplectic_basis(form):
    """Pairs (e_i, f_i) with B(e_i,f_i) = 1 and all other pairings zero."""
    f = form.field
    rest = list(linalg.identity(form.dim))
    pairs = []
    while rest:
        found = None
        for i in range(len(rest)):
            for j in range(i + 1, len(rest)):
                if form.b(rest[i], rest[j]):
                    found = (i, j)
                    break
            if found:
                break
        if found is None:
            raise DegenerateBilinearError(
                "bilinear form degenerate: no pairing left among %d vectors"
                % len(rest))
        i, j = found
        e = rest[i]
        v = linalg.vec_scale(f, f.inv(form.b(e, rest[j])), rest[j])
        del rest[j], rest[i]
        rest = [linalg.vec_add(g,
                               linalg.vec_add(
                                   linalg.vec_scale(f, form.b(g, v), e),
                                   linalg.vec_scale(f, form.b(g, e), v)))
                for g in rest]
        pairs.append((e, v))
    for a, (e1, f1) in enumerate(pairs):
        if form.b(e1, f1) != 1:
            raise ContractViolationError("symplectic pair not normalized")
        for e2, f2 in pairs[a + 1:]:
            if any((form.b(e1, e2), form.b(e1, f2),
                    form.b(f1, e2), form.b(f1, f2))):
                raise ContractViolationError("symplectic pairs not orthogonal")
    return pairs


def arf_invariant(form):
    """Arf invariant as an exact Arf value (finite element or infinity)."""
    gram = form.gram()
    if form.dim == 2 and not any(any(row) for row in gram):
        return Arf.infinity()
    if form.radical().dim > 0:
        raise DegenerateFormError("form has a nontrivial radical")
    if form.dim % 2:
        raise DegenerateBilinearError(
            "odd dimension: no symplectic decomposition")
    acc = 0
    for e, fv in symplectic_basis(form):
        acc ^= form.field.mul(form.q(e), form.q(fv))
    return Arf.finite(acc)


def spaces_isomorphic(f1, f2):
    """A matrix T with Q2(T@v) = Q1(v) for all v, or None."""
    if f1.field != f2.field:
        raise FieldMismatchError("forms live over different fields")
    if f1.dim != f2.dim:
        raise DimMismatchError("forms have different dimensions")
    base = list(linalg.identity(f1.dim))
    found = _isometry_search(f1, f2, base, [], find_all=False)
    if not found:
        return None
    return linalg.from_columns(found[0])


def enumerate_isometries(form, fixed=None):
    """Every invertible matrix preserving Q and fixing `fixed` pointwise."""
    field = form.field
    if field.n * form.dim > ISOMETRY_GUARD:
        raise TooLargeError(
            "n*dim = %d exceeds enumeration guard %d"
            % (field.n * form.dim, ISOMETRY_GUARD))
    anchors = linalg.independent_subset(
        field, [form.check_vec(v) for v in (fixed or [])])
    base = linalg.extend_to_basis(field, anchors, form.dim)
    sols = _isometry_search(form, form, base, anchors, find_all=True)
    mats = [_columns_to_matrix(field, base, cols) for cols in sols]
    return IsomGroup(field, mats)


def witt_extend(form, domain, images):
    """Extend the partial isometry domain[i] -> images[i] to the whole space.

    The partial map must be well defined and preserve Q and B; the
    extension is found by backtracking over basis completions.
    """
    if len(domain) != len(images):
        raise NotPartialIsometryError("domain and images differ in length")
    field = form.field
    domain = [form.check_vec(v) for v in domain]
    images = [form.check_vec(v) for v in images]
    dom_ind = []
    img_ind = []
    ech = linalg.Echelon(field)
    for d, im in zip(domain, images):
        if ech.add(d):
            dom_ind.append(d)
            img_ind.append(im)
        else:
            coords = linalg.coords_in(field, dom_ind, d)
            expect = linalg.zeros(form.dim)
            for c, im2 in zip(coords, img_ind):
                if c:
                    expect = linalg.vec_add(expect, linalg.vec_scale(field, c, im2))
            if expect != im:
                raise NotPartialIsometryError(
                    "map is not linear on dependent domain vectors")
    if len(linalg.independent_subset(field, img_ind)) != len(img_ind):
        raise NotPartialIsometryError("images of independent vectors collapse")
    for i in range(len(dom_ind)):
        if form.q(dom_ind[i]) != form.q(img_ind[i]):
            raise NotPartialIsometryError("Q not preserved by the partial map")
        for j in range(i + 1, len(dom_ind)):
            if form.b(dom_ind[i], dom_ind[j]) != form.b(img_ind[i], img_ind[j]):
                raise NotPartialIsometryError("B not preserved by the partial map")
    base = linalg.extend_to_basis(field, dom_ind, form.dim)
    found = _isometry_search(form, form, base, img_ind, find_all=False)
    if not found:
        raise ContractViolationError(
            "no Witt extension found; the extension theorem promises one "
            "whenever neither span meets the restricted radical")
    return _columns_to_matrix(field, base, found[0])
