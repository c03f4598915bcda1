"""Dense exact linear algebra over an abstract field.

Everything is canonical-form based: a subspace is stored as the reduced
row echelon form of any spanning set (zero rows dropped, pivots on the
leftmost possible columns), so two subspaces are equal iff their stored
matrices are equal entry for entry.
"""

from .errors import ContractViolation, DimensionMismatch


class Matrix:
    """Dense matrix with entries in a fixed field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, nrows, ncols, rows):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def from_rows(cls, field, rows, ncols=None):
        rows = [[field.coerce(x) for x in row] for row in rows]
        if rows:
            ncols = len(rows[0])
            for row in rows:
                if len(row) != ncols:
                    raise DimensionMismatch("ragged rows")
        elif ncols is None:
            raise DimensionMismatch("empty matrix needs an explicit width")
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, nrows, ncols, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    def copy(self):
        return Matrix(self.field, self.nrows, self.ncols,
                      [row[:] for row in self.rows])

    def transpose(self):
        rows = [[self.rows[i][j] for i in range(self.nrows)]
                for j in range(self.ncols)]
        return Matrix(self.field, self.ncols, self.nrows, rows)

    def mul(self, other):
        if self.ncols != other.nrows:
            raise DimensionMismatch("matrix product shape mismatch")
        f = self.field
        zero = f.zero
        out = []
        bt = other.transpose().rows
        for row in self.rows:
            new = []
            for col in bt:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = f.add(acc, f.mul(a, b))
                new.append(acc)
            out.append(new)
        return Matrix(f, self.nrows, other.ncols, out)

    def apply(self, vec):
        """Matrix times column vector, given and returned as a list."""
        if len(vec) != self.ncols:
            raise DimensionMismatch("vector length != ncols")
        f = self.field
        vec = [f.coerce(x) for x in vec]
        out = []
        for row in self.rows:
            acc = f.zero
            for a, b in zip(row, vec):
                if a and b:
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out

    def stack(self, other):
        if other.ncols != self.ncols:
            raise DimensionMismatch("stack width mismatch")
        return Matrix(self.field, self.nrows + other.nrows, self.ncols,
                      [row[:] for row in self.rows] +
                      [row[:] for row in other.rows])

    def kron(self, other):
        """Kronecker product; row (i,k) col (j,l) gets a_ij * b_kl."""
        f = self.field
        rows = []
        for arow in self.rows:
            for brow in other.rows:
                row = []
                for a in arow:
                    if a:
                        row.extend(f.mul(a, b) if b else f.zero for b in brow)
                    else:
                        row.extend([f.zero] * other.ncols)
                rows.append(row)
        return Matrix(f, self.nrows * other.nrows,
                      self.ncols * other.ncols, rows)

    def is_zero(self):
        return all(not x for row in self.rows for x in row)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.nrows, self.ncols,
                     tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        return "Matrix(%d x %d over %r)" % (self.nrows, self.ncols, self.field)


def rref(matrix):
    """Reduced row echelon form.

    Returns (Matrix, pivots): zero rows dropped, each pivot entry 1 with
    zeros above and below, pivots strictly increasing.  The result is the
    canonical representative of the row space.
    """
    if matrix.ncols >= 200 and matrix.nrows >= 8:
        # wide word-indexed matrices are mostly zero; reduce sparsely
        from .sparsela import Eliminator
        elim = Eliminator(matrix.field)
        for row in matrix.rows:
            elim.add({j: v for j, v in enumerate(row) if v})
        elim.finalize()
        zero = matrix.field.zero
        pivots = tuple(sorted(elim.pivot_rows))
        rows = []
        for piv in pivots:
            dense = [zero] * matrix.ncols
            for j, v in elim.pivot_rows[piv].items():
                dense[j] = v
            rows.append(dense)
        return Matrix(matrix.field, len(rows), matrix.ncols, rows), pivots
    f = matrix.field
    rows = [row[:] for row in matrix.rows]
    pivots = []
    prow = 0
    for col in range(matrix.ncols):
        sel = None
        for i in range(prow, len(rows)):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[prow], rows[sel] = rows[sel], rows[prow]
        inv = f.inv(rows[prow][col])
        if inv != f.one:
            rows[prow] = [f.mul(inv, x) for x in rows[prow]]
        for i in range(len(rows)):
            if i != prow and rows[i][col]:
                c = rows[i][col]
                src = rows[prow]
                dst = rows[i]
                for j in range(col, matrix.ncols):
                    if src[j]:
                        dst[j] = f.sub(dst[j], f.mul(c, src[j]))
        pivots.append(col)
        prow += 1
        if prow == len(rows):
            break
    rows = rows[:prow]
    return Matrix(f, prow, matrix.ncols, rows), tuple(pivots)


def rank(matrix):
    return rref(matrix)[0].nrows


class LinearMap:
    """Linear map stored as a (codomain x domain) matrix acting on columns."""

    __slots__ = ("field", "domain_dim", "codomain_dim", "matrix")

    def __init__(self, matrix):
        self.field = matrix.field
        self.matrix = matrix
        self.domain_dim = matrix.ncols
        self.codomain_dim = matrix.nrows

    @classmethod
    def from_rows(cls, field, rows, domain_dim=None):
        return cls(Matrix.from_rows(field, rows, ncols=domain_dim))

    @classmethod
    def identity(cls, field, n):
        return cls(Matrix.identity(field, n))

    @classmethod
    def zero(cls, field, codomain_dim, domain_dim):
        return cls(Matrix.zeros(field, codomain_dim, domain_dim))

    def apply(self, vec):
        return self.matrix.apply(vec)

    def compose(self, other):
        """self after other."""
        if other.codomain_dim != self.domain_dim:
            raise DimensionMismatch("composition shape mismatch")
        return LinearMap(self.matrix.mul(other.matrix))

    def rank(self):
        return rank(self.matrix)

    def is_zero(self):
        return self.matrix.is_zero()

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return "LinearMap(%d -> %d over %r)" % (
            self.domain_dim, self.codomain_dim, self.field)


class Subspace:
    """Subspace of a coordinate space, held in canonical RREF form."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field, ambient_dim, vectors):
        mat = Matrix.from_rows(field, vectors, ncols=ambient_dim)
        if mat.ncols != ambient_dim:
            raise DimensionMismatch("vector length != ambient dimension")
        red, piv = rref(mat)
        return cls(field, ambient_dim, red, piv)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim,
                   Matrix.from_rows(field, [], ncols=ambient_dim), ())

    @classmethod
    def full(cls, field, ambient_dim):
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim),
                   tuple(range(ambient_dim)))

    @property
    def dim(self):
        return self.basis.nrows

    def is_zero(self):
        return self.dim == 0

    def is_full(self):
        return self.dim == self.ambient_dim

    def coordinates_of(self, vec):
        """Coordinates of vec in the canonical basis, or None if outside."""
        f = self.field
        vec = [f.coerce(x) for x in vec]
        if len(vec) != self.ambient_dim:
            raise DimensionMismatch("vector length != ambient dimension")
        coords = [vec[p] for p in self.pivots]
        # residual check: vec - sum coords_i * basis_i must vanish
        for j in range(self.ambient_dim):
            acc = vec[j]
            for c, row in zip(coords, self.basis.rows):
                if c and row[j]:
                    acc = f.sub(acc, f.mul(c, row[j]))
            if acc:
                return None
        return coords

    def contains_vector(self, vec):
        return self.coordinates_of(vec) is not None

    def contains(self, other):
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("ambient mismatch")
        return all(self.contains_vector(row) for row in other.basis.rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.field == other.field
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(dim %d of %d over %r)" % (
            self.dim, self.ambient_dim, self.field)


def kernel(f):
    """Kernel of a LinearMap as a canonical Subspace of its domain."""
    red, pivots = rref(f.matrix)
    fld = f.field
    n = f.domain_dim
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    vectors = []
    for j in free:
        vec = [fld.zero] * n
        vec[j] = fld.one
        for i, p in enumerate(pivots):
            if red.rows[i][j]:
                vec[p] = fld.neg(red.rows[i][j])
        vectors.append(vec)
    return Subspace.from_vectors(fld, n, vectors)


def image(f):
    """Image of a LinearMap as a canonical Subspace of its codomain."""
    red, piv = rref(f.matrix.transpose())
    return Subspace(f.field, f.codomain_dim, red, piv)


def subspace_sum(a, b):
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise DimensionMismatch("subspace sum: ambient mismatch")
    red, piv = rref(a.basis.stack(b.basis))
    return Subspace(a.field, a.ambient_dim, red, piv)


def subspace_intersect(a, b):
    """Intersection, computed from the kernel of the stacked system."""
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise DimensionMismatch("subspace intersect: ambient mismatch")
    f = a.field
    da, db = a.dim, b.dim
    if da == 0 or db == 0:
        return Subspace.zero(f, a.ambient_dim)
    # columns: coefficients (lam, mu); kernel rows satisfy lam*A = mu*B
    rows = []
    for j in range(a.ambient_dim):
        row = [a.basis.rows[i][j] for i in range(da)]
        row += [f.neg(b.basis.rows[i][j]) for i in range(db)]
        rows.append(row)
    ker = kernel(LinearMap.from_rows(f, rows, domain_dim=da + db))
    vectors = []
    for coeffs in ker.basis.rows:
        vec = [f.zero] * a.ambient_dim
        for i in range(da):
            c = coeffs[i]
            if c:
                row = a.basis.rows[i]
                for j in range(a.ambient_dim):
                    if row[j]:
                        vec[j] = f.add(vec[j], f.mul(c, row[j]))
        vectors.append(vec)
    return Subspace.from_vectors(f, a.ambient_dim, vectors)


def homology_dim(a, b):
    """dim Ker(b) / Im(a) for composable maps with b after a.

    Raises ContractViolation unless b o a = 0.
    """
    if a.codomain_dim != b.domain_dim:
        raise DimensionMismatch("homology_dim: maps not composable")
    if not b.compose(a).is_zero():
        raise ContractViolation("homology_dim: composition b o a is nonzero")
    return b.domain_dim - b.rank() - a.rank()
