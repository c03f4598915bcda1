"""Sparse exact row reduction for wide, word-indexed coordinate spaces.

Rows are dicts {column index: nonzero scalar}.  The public dense module
is the reference implementation; this one exists because graded pieces
of tensor algebras are huge and mostly empty.
"""

from .errors import ContractViolation, DimensionMismatch


def row_axpy(field, target, c, source):
    """target += c * source, in place, dropping entries that cancel."""
    add, mul = field.add, field.mul
    for j, v in source.items():
        cur = target.get(j)
        if cur is None:
            target[j] = mul(c, v)
        else:
            s = add(cur, mul(c, v))
            if s:
                target[j] = s
            else:
                del target[j]


def row_scale(field, row, c):
    mul = field.mul
    for j in list(row):
        row[j] = mul(c, row[j])


class Eliminator:
    """Incremental Gaussian elimination with ascending column pivots.

    Feed rows with add(); finalize() back-substitutes so the stored rows
    become the unique RREF of everything fed in.
    """

    def __init__(self, field):
        self.field = field
        self.pivot_rows = {}  # pivot column -> row dict (entry 1 at pivot)
        self._finalized = False

    def reduce(self, row):
        """Eliminate all known pivots from row (row is consumed)."""
        field = self.field
        pivot_rows = self.pivot_rows
        neg = field.neg
        while True:
            hits = [j for j in row if j in pivot_rows]
            if not hits:
                return row
            for j in hits:
                c = row.get(j)
                if c:
                    row_axpy(field, row, neg(c), pivot_rows[j])
            # new fill-in may have introduced fresh pivot columns

    def add(self, row):
        """Reduce and store row; returns its pivot column or None."""
        if self._finalized:
            raise ContractViolation("eliminator already finalized")
        row = self.reduce(dict(row))
        if not row:
            return None
        piv = min(row)
        c = row[piv]
        if c != self.field.one:
            row_scale(self.field, row, self.field.inv(c))
        self.pivot_rows[piv] = row
        return piv

    @property
    def rank(self):
        return len(self.pivot_rows)

    def pivots(self):
        return sorted(self.pivot_rows)

    def finalize(self):
        """Back-substitute to full RREF (idempotent)."""
        if self._finalized:
            return
        field = self.field
        neg = field.neg
        for piv in sorted(self.pivot_rows, reverse=True):
            src = self.pivot_rows[piv]
            for other_piv, row in self.pivot_rows.items():
                if other_piv < piv:
                    c = row.get(piv)
                    if c:
                        row_axpy(field, row, neg(c), src)
        self._finalized = True


def sparse_rref(field, rows):
    """RREF of an iterable of dict rows; returns {pivot: row} fully reduced."""
    elim = Eliminator(field)
    for row in rows:
        elim.add(row)
    elim.finalize()
    return elim.pivot_rows


def subspace_rows(subspace):
    """Canonical basis of a dense Subspace as a list of sparse dict rows."""
    return [{j: v for j, v in enumerate(row) if v}
            for row in subspace.basis.rows]


def pivot_rows_to_subspace(field, ambient, pivot_rows):
    """Finalized RREF rows (dict {pivot: row}) as a canonical dense Subspace."""
    from .linalg import Matrix, Subspace
    pivots = sorted(pivot_rows)
    zero = field.zero
    rows = []
    for piv in pivots:
        dense = [zero] * ambient
        for j, v in pivot_rows[piv].items():
            dense[j] = v
        rows.append(dense)
    mat = Matrix(field, len(rows), ambient, rows)
    return Subspace(field, ambient, mat, tuple(pivots))


class SparseMatrix:
    """Column-major sparse matrix: cols[j] = {row index: scalar}."""

    __slots__ = ("field", "nrows", "ncols", "cols")

    def __init__(self, field, nrows, ncols, cols=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else [{} for _ in range(ncols)]

    def apply(self, vec):
        """Apply to a sparse vector dict, returning a new dict."""
        field = self.field
        out = {}
        cols = self.cols
        for j, c in vec.items():
            row_axpy(field, out, c, cols[j])
        return out

    def compose(self, other):
        """self after other (matrix product, column by column)."""
        if other.nrows != self.ncols:
            raise DimensionMismatch("sparse composition shape mismatch")
        out = [self.apply(col) for col in other.cols]
        return SparseMatrix(self.field, self.nrows, other.ncols, out)

    def is_zero(self):
        return all(not col for col in self.cols)

    def rank(self):
        elim = Eliminator(self.field)
        for col in self.cols:
            if col:
                elim.add(col)
        return elim.rank

    def transpose(self):
        out = SparseMatrix(self.field, self.ncols, self.nrows,
                           [{} for _ in range(self.nrows)])
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out.cols[i][j] = v
        return out

    def to_dense(self):
        from .linalg import Matrix
        mat = Matrix.zeros(self.field, self.nrows, self.ncols)
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                mat.rows[i][j] = v
        return mat

    @classmethod
    def from_dense(cls, matrix):
        out = cls(matrix.field, matrix.nrows, matrix.ncols)
        for i, row in enumerate(matrix.rows):
            for j, v in enumerate(row):
                if v:
                    out.cols[j][i] = v
        return out

    def __repr__(self):
        return "SparseMatrix(%d x %d over %r)" % (
            self.nrows, self.ncols, self.field)
