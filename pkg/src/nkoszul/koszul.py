"""Koszul N-complexes of homogeneous-algebra morphisms.

For a morphism f: B -> C, the chain complex K(f) lives on C (x) (B^!)*
and lowers the dual-side degree (first letter split off, pushed through
f, multiplied into C); the cochain complex L(f) lives on B^! (x) C and
raises it.  Both satisfy d^N = 0.

The dual-side component W_m = (B^!_m)* is the annihilator of the
degree-m relations of B^!; its natural basis is dual to the normal-word
classes of B^!, so all of its structure (dimensions, first-letter
splits, coproduct coefficients) reads off the dual algebra's engine.
"""

from collections import namedtuple

from .algebra import GradedElement, Morphism, circ
from .errors import ContractViolation, DimensionMismatch
from .linalg import Matrix, Subspace
from .sparsela import Eliminator, SparseMatrix, pivot_rows_to_subspace, row_axpy
from .words import index_word

DualComponent = namedtuple("DualComponent", ["m", "space"])

PositionInfo = namedtuple("PositionInfo",
                          ["label", "c_degree", "w_degree", "dim",
                           "c_dim", "w_dim"])


class DualSide:
    """Dual-side components W_m of an algebra, with first-letter splits."""

    def __init__(self, algebra):
        self.algebra = algebra
        self.bang = algebra.dual()
        self._splits = {}

    def dim(self, m):
        return self.bang.dim(m)

    def split_rows(self, m):
        """Per letter: for each W_m basis vector, its W_{m-1} component.

        Basis vectors of W_m are dual to normal-word classes of the dual
        algebra, so the first-letter component is the transposed
        left-multiplication matrix of the dual algebra.
        """
        rows = self._splits.get(m)
        if rows is None:
            g = self.algebra.dim_e
            wm = self.bang.dim(m)
            wm1 = self.bang.dim(m - 1)
            rows = [[{} for _ in range(wm)] for _ in range(g)]
            if wm and wm1:
                lm = self.bang.lmul(m)
                for letter in range(g):
                    cols = lm[letter]
                    target = rows[letter]
                    for v in range(wm1):
                        for u, c in cols[v].items():
                            target[u][v] = c
            self._splits[m] = rows
        return rows

    def ambient_rows(self, m):
        """Basis of W_m expanded in word coordinates (desk scale)."""
        g = self.algebra.dim_e
        wm = self.bang.dim(m)
        rows = [{} for _ in range(wm)]
        for widx in range(g ** m):
            vec = self.bang.word_class(index_word(widx, g, m))
            for u, c in vec.items():
                rows[u][widx] = c
        return rows


def dual_side(algebra):
    side = getattr(algebra, "_dual_side", None)
    if side is None:
        side = DualSide(algebra)
        algebra._dual_side = side
    return side


def dual_component(algebra, m):
    """W_m as a canonical subspace of E^(x)m (desk scale)."""
    if m < 0:
        raise DimensionMismatch("negative degree")
    field = algebra.field
    ambient = algebra.dim_e ** m
    elim = Eliminator(field)
    for row in dual_side(algebra).ambient_rows(m):
        elim.add(dict(row))
    elim.finalize()
    return DualComponent(m, pivot_rows_to_subspace(field, ambient,
                                                   elim.pivot_rows))


def _is_identity_matrix(matrix):
    if matrix.nrows != matrix.ncols:
        return False
    one, field = matrix.field.one, matrix.field
    for i, row in enumerate(matrix.rows):
        for j, v in enumerate(row):
            if (v != one) if i == j else bool(v):
                return False
    return True


class NComplexSlice:
    """Total-degree-n slice of K(f); position k holds C_{n-m} (x) W_m, m = n-k.

    Coordinates at a position: index = c_position * w_dim + w_position.
    Differentials go k -> k+1 (the dual-side degree drops by one).
    """

    def __init__(self, morphism, n):
        self.morphism = morphism
        self.source = morphism.source
        self.target = morphism.target
        self.n = n
        self.N = self.source.N
        self.side = dual_side(self.source)
        self._identity = (self.source is self.target
                          and _is_identity_matrix(morphism.matrix))
        self.positions = []
        for k in range(n + 1):
            m = n - k
            s = n - m
            c_dim = self.target.dim(s)
            w_dim = self.side.dim(m)
            self.positions.append(PositionInfo(m, s, m, c_dim * w_dim,
                                               c_dim, w_dim))
        self._gcache = {}
        self._mats = {}
        self._ranks = {}

    def position_dim(self, k):
        if 0 <= k < len(self.positions):
            return self.positions[k].dim
        return 0

    def _gcols(self, target_degree):
        """Right multiplication by f(x_letter): C_{s} -> C_{s+1}, per letter."""
        cols = self._gcache.get(target_degree)
        if cols is None:
            comp = self.target.component(target_degree)
            if self._identity:
                cols = comp.rmul_cols
            else:
                field = self.source.field
                fmat = self.morphism.matrix
                g = self.source.dim_e
                src_dim = self.target.dim(target_degree - 1)
                cols = []
                for letter in range(g):
                    col_l = [dict() for _ in range(src_dim)]
                    for j in range(self.target.dim_e):
                        c = fmat.rows[j][letter]
                        if c:
                            for src in range(src_dim):
                                row_axpy(field, col_l[src], c,
                                         comp.rmul_cols[j][src])
                    cols.append(col_l)
            self._gcache[target_degree] = cols
        return cols

    def apply_differential(self, k, vec):
        """Apply d at position k to a sparse vector, returning a new dict."""
        n = self.n
        m = n - k
        if m <= 0 or not vec:
            return {}
        src = self.positions[k]
        tgt = self.positions[k + 1]
        if src.dim == 0 or tgt.dim == 0:
            return {}
        field = self.source.field
        mul, add = field.mul, field.add
        g = self.source.dim_e
        splits = self.side.split_rows(m)
        gcols = self._gcols(src.c_degree + 1)
        w1 = tgt.w_dim
        out = {}
        for idx, coeff in vec.items():
            pos_c, u = divmod(idx, src.w_dim)
            for letter in range(g):
                srow = splits[letter][u]
                if not srow:
                    continue
                gcol = gcols[letter][pos_c]
                if not gcol:
                    continue
                for tc, cc in gcol.items():
                    base = tc * w1
                    cco = mul(coeff, cc)
                    for v, sv in srow.items():
                        tix = base + v
                        cur = out.get(tix)
                        if cur is None:
                            out[tix] = mul(cco, sv)
                        else:
                            s = add(cur, mul(cco, sv))
                            if s:
                                out[tix] = s
                            else:
                                del out[tix]
        return out

    def differential(self, k):
        """The map at position k as a sparse matrix (cached)."""
        mat = self._mats.get(k)
        if mat is None:
            src_dim = self.position_dim(k)
            tgt_dim = self.position_dim(k + 1)
            field = self.source.field
            cols = [self.apply_differential(k, {j: field.one})
                    for j in range(src_dim)]
            mat = SparseMatrix(field, tgt_dim, src_dim, cols)
            self._mats[k] = mat
        return mat

    def differential_linear_map(self, k):
        """Dense LinearMap view of the position-k differential (desk scale)."""
        from .linalg import LinearMap
        return LinearMap(self.differential(k).to_dense())

    def _tgcols(self, target_degree):
        """Transpose of _gcols: per letter, target position -> source column."""
        key = ("t", target_degree)
        cols = self._gcache.get(key)
        if cols is None:
            fwd = self._gcols(target_degree)
            tgt_dim = self.target.dim(target_degree)
            cols = []
            for col_l in fwd:
                tcol = [dict() for _ in range(tgt_dim)]
                for src, entries in enumerate(col_l):
                    for tgt, c in entries.items():
                        tcol[tgt][src] = c
                cols.append(tcol)
            self._gcache[key] = cols
        return cols

    def apply_transposed(self, k, vec):
        """Apply the transpose of the position-k map to a vector on k+1."""
        n = self.n
        m = n - k
        if m <= 0 or not vec:
            return {}
        src = self.positions[k]
        tgt = self.positions[k + 1]
        if src.dim == 0 or tgt.dim == 0:
            return {}
        field = self.source.field
        mul, add = field.mul, field.add
        g = self.source.dim_e
        lm = self.side.bang.lmul(m)
        tgcols = self._tgcols(src.c_degree + 1)
        w_m = src.w_dim
        out = {}
        for idx, coeff in vec.items():
            tc, v = divmod(idx, tgt.w_dim)
            for letter in range(g):
                lcol = lm[letter][v]
                if not lcol:
                    continue
                gcol = tgcols[letter][tc]
                if not gcol:
                    continue
                for pos_c, cc in gcol.items():
                    base = pos_c * w_m
                    cco = mul(coeff, cc)
                    for u, su in lcol.items():
                        tix = base + u
                        cur = out.get(tix)
                        if cur is None:
                            out[tix] = mul(cco, su)
                        else:
                            s = add(cur, mul(cco, su))
                            if s:
                                out[tix] = s
                            else:
                                del out[tix]
        return out

    def rank_power(self, k, e):
        """Rank of d^e out of position k (zero once the window leaves the slice)."""
        key = (k, e)
        r = self._ranks.get(key)
        if r is None:
            if k + e > self.n or self.position_dim(k) == 0:
                r = 0
            else:
                field = self.source.field
                elim = Eliminator(field)
                for j in range(self.position_dim(k)):
                    vec = {j: field.one}
                    for step in range(e):
                        vec = self.apply_differential(k + step, vec)
                        if not vec:
                            break
                    if vec:
                        elim.add(vec)
                r = elim.rank
            self._ranks[key] = r
        return r

    def verify_dN(self):
        """Exact check that every in-range N-fold composite vanishes.

        Windows containing a zero position factor through 0 and are
        skipped; otherwise the composite is driven from whichever end of
        the window is smaller (forward maps or their transposes).
        """
        field = self.source.field
        N = self.N
        for k in range(self.n - N + 1):
            dims = [self.position_dim(k + j) for j in range(N + 1)]
            if any(d == 0 for d in dims):
                continue
            if dims[0] <= dims[-1]:
                for j in range(dims[0]):
                    vec = {j: field.one}
                    for step in range(N):
                        vec = self.apply_differential(k + step, vec)
                        if not vec:
                            break
                    if vec:
                        raise ContractViolation(
                            "d^N != 0 at slice n=%d position %d column %d"
                            % (self.n, k, j))
            else:
                for j in range(dims[-1]):
                    vec = {j: field.one}
                    for step in range(N - 1, -1, -1):
                        vec = self.apply_transposed(k + step, vec)
                        if not vec:
                            break
                    if vec:
                        raise ContractViolation(
                            "d^N != 0 at slice n=%d position %d row %d"
                            % (self.n, k, j))
        return True

    def __repr__(self):
        return "NComplexSlice(n=%d, dims=%r)" % (
            self.n, [p.dim for p in self.positions])


def koszul_K(morphism, n):
    if n < 0:
        raise DimensionMismatch("negative total degree")
    return NComplexSlice(morphism, n)


class LComplexSlice:
    """One constant-(s-m) chain of L(f) on B^!_m (x) C_s, m ascending.

    Materialized for m <= bound and s <= bound; coordinates at a position:
    index = b_position * c_dim + c_position.
    """

    def __init__(self, morphism, delta, bound):
        self.morphism = morphism
        self.source = morphism.source
        self.target = morphism.target
        self.delta = delta
        self.bound = bound
        self.N = self.source.N
        self.side = dual_side(self.source)
        self.bang = self.side.bang
        self._identity = (self.source is self.target
                          and _is_identity_matrix(morphism.matrix))
        self.m_start = max(0, -delta)
        m_end = min(bound, bound - delta)
        self.positions = []
        for m in range(self.m_start, m_end + 1):
            s = m + delta
            b_dim = self.bang.dim(m)
            c_dim = self.target.dim(s)
            self.positions.append(PositionInfo(m, s, m, b_dim * c_dim,
                                               c_dim, b_dim))
        self._hcache = {}
        self._mats = {}

    def position_dim(self, k):
        if 0 <= k < len(self.positions):
            return self.positions[k].dim
        return 0

    def _hcols(self, target_degree):
        """Left multiplication by f(x_letter): C_s -> C_{s+1}, per letter."""
        cols = self._hcache.get(target_degree)
        if cols is None:
            lm = self.target.lmul(target_degree)
            if self._identity:
                cols = lm
            else:
                field = self.source.field
                fmat = self.morphism.matrix
                g = self.source.dim_e
                src_dim = self.target.dim(target_degree - 1)
                cols = []
                for letter in range(g):
                    col_l = [dict() for _ in range(src_dim)]
                    for j in range(self.target.dim_e):
                        c = fmat.rows[j][letter]
                        if c:
                            for src in range(src_dim):
                                row_axpy(field, col_l[src], c, lm[j][src])
                    cols.append(col_l)
            self._hcache[target_degree] = cols
        return cols

    def apply_differential(self, k, vec):
        if not vec or k + 1 >= len(self.positions):
            return {}
        src = self.positions[k]
        tgt = self.positions[k + 1]
        if src.dim == 0 or tgt.dim == 0:
            return {}
        field = self.source.field
        mul, add = field.mul, field.add
        g = self.source.dim_e
        blm = self.bang.lmul(src.w_degree + 1)
        hcols = self._hcols(src.c_degree + 1)
        tgt_c = tgt.c_dim
        out = {}
        for idx, coeff in vec.items():
            pos_b, pos_c = divmod(idx, src.c_dim)
            for letter in range(g):
                bcol = blm[letter][pos_b]
                if not bcol:
                    continue
                hcol = hcols[letter][pos_c]
                if not hcol:
                    continue
                for vb, cb in bcol.items():
                    base = vb * tgt_c
                    cbo = mul(coeff, cb)
                    for vc, cc in hcol.items():
                        tix = base + vc
                        cur = out.get(tix)
                        if cur is None:
                            out[tix] = mul(cbo, cc)
                        else:
                            s = add(cur, mul(cbo, cc))
                            if s:
                                out[tix] = s
                            else:
                                del out[tix]
        return out

    def differential(self, k):
        mat = self._mats.get(k)
        if mat is None:
            src_dim = self.position_dim(k)
            tgt_dim = self.position_dim(k + 1)
            field = self.source.field
            cols = [self.apply_differential(k, {j: field.one})
                    for j in range(src_dim)]
            mat = SparseMatrix(field, tgt_dim, src_dim, cols)
            self._mats[k] = mat
        return mat

    def _thcols(self, target_degree):
        """Transpose of _hcols: per letter, target position -> source column."""
        key = ("t", target_degree)
        cols = self._hcache.get(key)
        if cols is None:
            fwd = self._hcols(target_degree)
            tgt_dim = self.target.dim(target_degree)
            cols = []
            for col_l in fwd:
                tcol = [dict() for _ in range(tgt_dim)]
                for src, entries in enumerate(col_l):
                    for tgt, c in entries.items():
                        tcol[tgt][src] = c
                cols.append(tcol)
            self._hcache[key] = cols
        return cols

    def apply_transposed(self, k, vec):
        """Apply the transpose of the position-k map to a vector on k+1."""
        if not vec or k + 1 >= len(self.positions):
            return {}
        src = self.positions[k]
        tgt = self.positions[k + 1]
        if src.dim == 0 or tgt.dim == 0:
            return {}
        field = self.source.field
        mul, add = field.mul, field.add
        g = self.source.dim_e
        splits = self.side.split_rows(src.w_degree + 1)
        thcols = self._thcols(src.c_degree + 1)
        src_c = src.c_dim
        out = {}
        for idx, coeff in vec.items():
            vb, vc = divmod(idx, tgt.c_dim)
            for letter in range(g):
                brow = splits[letter][vb]
                if not brow:
                    continue
                hrow = thcols[letter][vc]
                if not hrow:
                    continue
                for pos_b, cb in brow.items():
                    base = pos_b * src_c
                    cbo = mul(coeff, cb)
                    for pos_c, cc in hrow.items():
                        tix = base + pos_c
                        cur = out.get(tix)
                        if cur is None:
                            out[tix] = mul(cbo, cc)
                        else:
                            s = add(cur, mul(cbo, cc))
                            if s:
                                out[tix] = s
                            else:
                                del out[tix]
        return out

    def rank_power(self, k, e):
        """Rank of d^e out of position k; maps leaving the window count as zero."""
        if k + e >= len(self.positions) or self.position_dim(k) == 0:
            return 0
        field = self.source.field
        elim = Eliminator(field)
        for j in range(self.position_dim(k)):
            vec = {j: field.one}
            for step in range(e):
                vec = self.apply_differential(k + step, vec)
                if not vec:
                    break
            if vec:
                elim.add(vec)
        return elim.rank

    def verify_dN(self):
        """d^N = 0 on every window whose N+1 positions are all materialized.

        Same strategy as the chain side: skip windows through a zero
        position, drive each survivor from its smaller end.
        """
        field = self.source.field
        N = self.N
        for k in range(len(self.positions) - N):
            dims = [self.position_dim(k + j) for j in range(N + 1)]
            if any(d == 0 for d in dims):
                continue
            if dims[0] <= dims[-1]:
                for j in range(dims[0]):
                    vec = {j: field.one}
                    for step in range(N):
                        vec = self.apply_differential(k + step, vec)
                        if not vec:
                            break
                    if vec:
                        raise ContractViolation(
                            "d^N != 0 on L chain delta=%d position %d column %d"
                            % (self.delta, k, j))
            else:
                for j in range(dims[-1]):
                    vec = {j: field.one}
                    for step in range(N - 1, -1, -1):
                        vec = self.apply_transposed(k + step, vec)
                        if not vec:
                            break
                    if vec:
                        raise ContractViolation(
                            "d^N != 0 on L chain delta=%d position %d row %d"
                            % (self.delta, k, j))
        return True

    def __repr__(self):
        return "LComplexSlice(delta=%d, dims=%r)" % (
            self.delta, [p.dim for p in self.positions])


def koszul_L(morphism, max_degree):
    """The cochain complex L(f), materialized up to the degree bound.

    Returns the family of constant-(s-m) chains with both the dual-side
    degree m and the coefficient degree s bounded by max_degree.
    """
    family = []
    for delta in range(-max_degree, max_degree + 1):
        sl = LComplexSlice(morphism, delta, max_degree)
        if any(p.dim for p in sl.positions):
            family.append(sl)
    return family


class HomologyReport:
    """Generalized homology dimensions, keyed by (p, position label)."""

    def __init__(self, entries):
        self.entries = dict(entries)

    def is_zero(self):
        return all(v == 0 for v in self.entries.values())

    def nonzero(self):
        return {key: v for key, v in self.entries.items() if v}

    def __getitem__(self, key):
        return self.entries[key]

    def __repr__(self):
        return "HomologyReport(%r)" % (self.entries,)


def generalized_homology(slice_, p):
    """dim Ker(d^p)/Im(d^{N-p}) at every position of a slice.

    Maps beyond either end of the slice are zero.
    """
    N = slice_.N
    if not 1 <= p <= N - 1:
        raise DimensionMismatch("p must satisfy 1 <= p <= N-1")
    entries = {}
    for k in range(len(slice_.positions)):
        info = slice_.positions[k]
        if info.dim == 0:
            entries[(p, info.label)] = 0
            continue
        rank_out = slice_.rank_power(k, p)
        k_in = k - (N - p)
        rank_in = slice_.rank_power(k_in, N - p) if k_in >= 0 else 0
        entries[(p, info.label)] = info.dim - rank_out - rank_in
    return HomologyReport(entries)


def slice_acyclic(slice_):
    """All generalized homologies vanish at all positions."""
    return all(generalized_homology(slice_, p).is_zero()
               for p in range(1, slice_.N))


def lemma2_check(morphism):
    """(K(f)^{N-1} acyclic, K(f)^N acyclic, f is an isomorphism)."""
    N = morphism.source.N
    a1 = slice_acyclic(koszul_K(morphism, N - 1))
    a2 = slice_acyclic(koszul_K(morphism, N))
    return (a1, a2, morphism.is_isomorphism())


class ContractedComplex:
    """Ordinary complex C_{p,r}: blocks A (x) W_{k(i)}, alternating d^p, d^{N-p}.

    k(2j) = jN + r and k(2j+1) = (j+1)N - p + r; the map into an odd
    degree is d^p, into an even degree d^{N-p}.  Blocks are materialized
    per total degree t <= n_max.
    """

    def __init__(self, algebra, p, r, i_max, n_max=None):
        N = algebra.N
        if not 0 <= r <= N - 2 or not r + 1 <= p <= N - 1:
            raise DimensionMismatch(
                "(p, r) = (%d, %d) outside 0 <= r <= N-2, r+1 <= p <= N-1"
                % (p, r))
        self.algebra = algebra
        self.p = p
        self.r = r
        self.i_max = i_max
        self.n_max = 2 * N + 2 if n_max is None else n_max
        self._slices = {}
        self._id = Morphism.identity(algebra)

    def k_index(self, i):
        j, odd = divmod(i, 2)
        N = self.algebra.N
        return j * N + self.r + ((N - self.p) if odd else 0)

    def step(self, i):
        """Exponent of d for the map from block i to block i-1."""
        return self.p if i % 2 == 0 else self.algebra.N - self.p

    def slice(self, t):
        sl = self._slices.get(t)
        if sl is None:
            sl = koszul_K(self._id, t)
            self._slices[t] = sl
        return sl

    def block_dim(self, i, t):
        k = self.k_index(i)
        if k > t:
            return 0
        return self.slice(t).position_dim(t - k)

    def rank_map(self, i, t):
        """Rank of the map block i -> block i-1 in total degree t."""
        if i < 1:
            return 0
        k = self.k_index(i)
        if k > t:
            return 0
        return self.slice(t).rank_power(t - k, self.step(i))

    def homology_dim(self, i, t):
        return (self.block_dim(i, t) - self.rank_map(i, t)
                - self.rank_map(i + 1, t))

    def h0_dims(self, t_max=None):
        t_max = self.n_max if t_max is None else t_max
        return [self.block_dim(0, t) - self.rank_map(1, t)
                for t in range(t_max + 1)]

    def expected_h0_dims(self, t_max=None):
        """Graded dims of sum_{0<=j<=N-p-1} E^(x)j (x) E^(x)r."""
        t_max = self.n_max if t_max is None else t_max
        g, N = self.algebra.dim_e, self.algebra.N
        out = []
        for t in range(t_max + 1):
            j = t - self.r
            out.append(g ** t if 0 <= j <= N - self.p - 1 else 0)
        return out

    def exact_at(self, i, t):
        return self.homology_dim(i, t) == 0

    def __repr__(self):
        return "ContractedComplex(p=%d, r=%d of %r)" % (
            self.p, self.r, self.algebra)


def contracted(algebra, p, r, i_max, n_max=None):
    return ContractedComplex(algebra, p, r, i_max, n_max)


KoszulVerdict = namedtuple("KoszulVerdict", ["koszul", "n_max", "witness"])


def koszulity_check(algebra, n_max):
    """Exactness of C_{N-1,0} at all degrees i > 0, total degree <= n_max.

    The verdict carries its window; a failure carries (i, t, dim).
    """
    N = algebra.N
    if n_max < N:
        raise DimensionMismatch("n_max must be at least N")
    cx = ContractedComplex(algebra, N - 1, 0, i_max=None, n_max=n_max)
    for t in range(n_max + 1):
        i = 1
        while cx.k_index(i) <= t:
            h = cx.homology_dim(i, t)
            if h:
                return KoszulVerdict(False, n_max, (i, t, h))
            i += 1
    return KoszulVerdict(True, n_max, None)


def verdict_string(verdict):
    if verdict.koszul:
        return "KoszulUpTo(%d)" % verdict.n_max
    i, t, h = verdict.witness
    return "NotKoszul(i=%d, degree=%d, dim=%d)" % (i, t, h)


# -- bar-complex Tor ------------------------------------------------------


def _compositions(total, parts):
    """All ways to write total as an ordered sum of `parts` integers >= 1."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class _BarBlock:
    """Basis of (A_+)^(x)i in one total degree: compositions x normal words."""

    def __init__(self, algebra, i, t):
        self.items = []          # (composition, position tuple)
        self.offsets = {}        # composition -> (offset, dims)
        off = 0
        for comp in _compositions(t, i):
            dims = tuple(algebra.dim(n) for n in comp)
            size = 1
            for d in dims:
                size *= d
            if size == 0:
                continue
            self.offsets[comp] = (off, dims)
            off += size
        self.dim = off

    def index(self, comp, poss):
        off, dims = self.offsets[comp]
        idx = 0
        for pos, d in zip(poss, dims):
            idx = idx * d + pos
        return off + idx

    def elements(self):
        for comp, (off, dims) in self.offsets.items():
            poss = [0] * len(dims)
            while True:
                yield comp, tuple(poss)
                for j in range(len(dims) - 1, -1, -1):
                    poss[j] += 1
                    if poss[j] < dims[j]:
                        break
                    poss[j] = 0
                else:
                    break
                continue


class _PairProducts:
    """Memoized products of normal-word basis classes."""

    def __init__(self, algebra):
        self.algebra = algebra
        self.cache = {}

    def product(self, m, pos_a, k, pos_b):
        key = (m, pos_a, k, pos_b)
        vec = self.cache.get(key)
        if vec is None:
            alg = self.algebra
            word = index_word(alg.component(k).normal_words[pos_b],
                              alg.dim_e, k)
            vec = {pos_a: alg.field.one}
            deg = m
            for letter in word:
                deg += 1
                comp = alg.component(deg)
                new = {}
                for src, c in vec.items():
                    row_axpy(alg.field, new, c, comp.rmul_cols[letter][src])
                vec = new
            self.cache[key] = vec
        return vec


def _bar_matrix(algebra, blocks, products, i, t):
    """Differential (A_+)^(x)i -> (A_+)^(x)(i-1) in total degree t."""
    field = algebra.field
    src = blocks[(i, t)]
    tgt = blocks[(i - 1, t)]
    cols = []
    for comp, poss in src.elements():
        col = {}
        sign = field.one
        for j in range(i - 1):
            merged = comp[:j] + (comp[j] + comp[j + 1],) + comp[j + 2:]
            if merged in tgt.offsets:
                prod = products.product(comp[j], poss[j],
                                        comp[j + 1], poss[j + 1])
                for pos_m, c in prod.items():
                    new_poss = poss[:j] + (pos_m,) + poss[j + 2:]
                    tix = tgt.index(merged, new_poss)
                    val = field.mul(sign, c)
                    cur = col.get(tix)
                    if cur is None:
                        col[tix] = val
                    else:
                        s = field.add(cur, val)
                        if s:
                            col[tix] = s
                        else:
                            del col[tix]
            sign = field.neg(sign)
        cols.append(col)
    return SparseMatrix(field, tgt.dim, src.dim, cols)


def tor_dims(algebra, i_max, n_max):
    """dim Tor_i(K, K) in each total degree, from the normalized bar complex.

    Returns {(i, t): dim} for 0 <= i <= i_max, 0 <= t <= n_max.
    """
    field = algebra.field
    blocks = {}
    for i in range(i_max + 2):
        for t in range(n_max + 1):
            blocks[(i, t)] = _BarBlock(algebra, i, t)
    products = _PairProducts(algebra)
    ranks = {}
    for i in range(1, i_max + 2):
        for t in range(n_max + 1):
            if blocks[(i, t)].dim == 0 or blocks[(i - 1, t)].dim == 0:
                ranks[(i, t)] = 0
                continue
            mat = _bar_matrix(algebra, blocks, products, i, t)
            ranks[(i, t)] = mat.rank()
    table = {}
    for i in range(i_max + 1):
        for t in range(n_max + 1):
            table[(i, t)] = (blocks[(i, t)].dim - ranks.get((i, t), 0)
                             - ranks.get((i + 1, t), 0))
    return table


def tor_pure_degree(i, N):
    """The only degree a pure Tor_i may occupy: jN for i=2j, jN+1 for i=2j+1."""
    j, odd = divmod(i, 2)
    return j * N + odd


def tor_purity(algebra, i_max, n_max):
    """(is_pure, table): every nonzero Tor_i sits in its pure degree."""
    table = tor_dims(algebra, i_max, n_max)
    N = algebra.N
    pure = all(t == tor_pure_degree(i, N)
               for (i, t), dim in table.items() if dim)
    return pure, table


# -- convolution of graded maps and the operators d_alpha -----------------


class KoszulElement:
    """xi_f: the degree-1 element of B^! o C attached to a morphism f."""

    def __init__(self, morphism):
        self.morphism = morphism
        bang = morphism.source.dual()
        self.product_algebra = circ(bang, morphism.target)
        field = morphism.source.field
        g, gp = morphism.source.dim_e, morphism.target.dim_e
        coords = [field.zero] * (g * gp)
        for letter in range(g):
            for j in range(gp):
                coords[letter * gp + j] = morphism.matrix.rows[j][letter]
        self.element = GradedElement(1, tuple(coords))

    def power_is_zero(self):
        """(xi_f)^N = 0 in the product algebra."""
        alg = self.product_algebra
        acc = self.element
        for _ in range(alg.N - 1):
            acc = alg.multiply(acc, self.element)
        return all(not c for c in acc.coords)


class GradedMap:
    """A degree-0 map (B^!)* -> C given by one matrix per degree."""

    def __init__(self, components):
        self.components = {m: mat for m, mat in components.items()
                           if not mat.is_zero()}

    def component(self, m):
        return self.components.get(m)

    def degrees(self):
        return sorted(self.components)

    def is_zero(self):
        return not self.components

    @classmethod
    def from_morphism(cls, morphism):
        return cls({1: morphism.matrix})


class ConvolutionContext:
    """Convolution algebra structure on degree-0 maps (B^!)* -> C."""

    def __init__(self, source, target):
        self.source = source
        self.target = target
        self.side = dual_side(source)
        self.bang = self.side.bang
        self.field = source.field
        self._bang_products = _PairProducts(self.bang)
        self._c_products = _PairProducts(target)

    def _multiply_c(self, k, vec_a, l, vec_b):
        """Product in C of sparse degree-k and degree-l vectors."""
        field = self.field
        out = {}
        for pb, cb in vec_b.items():
            for pa, ca in vec_a.items():
                prod = self._c_products.product(k, pa, l, pb)
                row_axpy(field, out, field.mul(ca, cb), prod)
        return out

    def convolve(self, alpha, beta, m_max):
        """alpha * beta up to degree m_max.

        The product weights the leading coproduct factor with beta and the
        trailing one with alpha; with that orientation the induced
        operators compose as d_alpha o d_beta = d_{alpha * beta}.
        """
        field = self.field
        out = {}
        for m in range(m_max + 1):
            wm = self.side.dim(m)
            cm = self.target.dim(m)
            if wm == 0:
                continue
            cols = [dict() for _ in range(wm)]
            for k in range(m + 1):
                l = m - k
                amat = beta.component(k)
                bmat = alpha.component(l)
                if amat is None or bmat is None:
                    continue
                wk, wl = self.side.dim(k), self.side.dim(l)
                for a in range(wk):
                    va = {i: amat.rows[i][a] for i in range(amat.nrows)
                          if amat.rows[i][a]}
                    if not va:
                        continue
                    for b in range(wl):
                        vb = {i: bmat.rows[i][b] for i in range(bmat.nrows)
                              if bmat.rows[i][b]}
                        if not vb:
                            continue
                        # coproduct coefficients: the (a,b) entry of Delta
                        # is the (a*b -> u) structure constant of the dual
                        pv = self._bang_products.product(k, a, l, b)
                        if not pv:
                            continue
                        cprod = self._multiply_c(k, va, l, vb)
                        if not cprod:
                            continue
                        for u, du in pv.items():
                            row_axpy(field, cols[u], du, cprod)
            mat = Matrix.zeros(field, cm, wm)
            for u, col in enumerate(cols):
                for i, v in col.items():
                    mat.rows[i][u] = v
            out[m] = mat
        return GradedMap(out)

    def convolution_power(self, alpha, e, m_max):
        acc = alpha
        for _ in range(e - 1):
            acc = self.convolve(alpha, acc, m_max)
        return acc

    def d_alpha_matrix(self, alpha, t):
        """The operator of alpha on the total-degree-t part of C (x) (B^!)*.

        Block from W_m to W_{m-k} sends c (x) u-hat to the sum over
        coproduct components of (c * alpha_k(a-hat)) (x) b-hat.
        """
        field = self.field
        dims = []
        offsets = []
        off = 0
        for m in range(t + 1):
            offsets.append(off)
            d = self.target.dim(t - m) * self.side.dim(m)
            dims.append(d)
            off += d
        total = off
        cols = [dict() for _ in range(total)]
        for m in range(t + 1):
            wm = self.side.dim(m)
            cs = self.target.dim(t - m)
            if wm == 0 or cs == 0:
                continue
            for k in alpha.degrees():
                if k > m:
                    continue
                mk = m - k
                wmk = self.side.dim(mk)
                ctk = self.target.dim(t - mk)
                if wmk == 0 or ctk == 0:
                    continue
                amat = alpha.component(k)
                for a in range(self.side.dim(k)):
                    va = {i: amat.rows[i][a] for i in range(amat.nrows)
                          if amat.rows[i][a]}
                    if not va:
                        continue
                    for b in range(wmk):
                        pv = self._bang_products.product(k, a, mk, b)
                        if not pv:
                            continue
                        # right multiplication by alpha_k(a-hat): C_{t-m} -> C_{t-mk}
                        for pos_c in range(cs):
                            rm = self._multiply_c(t - m, {pos_c: field.one},
                                                  k, va)
                            if not rm:
                                continue
                            for u, du in pv.items():
                                src = offsets[m] + pos_c * wm + u
                                for tc, cc in rm.items():
                                    tix = offsets[mk] + tc * wmk + b
                                    cur = cols[src].get(tix)
                                    val = field.mul(du, cc)
                                    if cur is None:
                                        cols[src][tix] = val
                                    else:
                                        s = field.add(cur, val)
                                        if s:
                                            cols[src][tix] = s
                                        else:
                                            del cols[src][tix]
        return SparseMatrix(field, total, total, cols)


def _sparse_equal(a, b):
    return (a.nrows == b.nrows and a.ncols == b.ncols
            and all(ca == cb for ca, cb in zip(a.cols, b.cols)))


def convolution_check(source, target, morphism, m_max, samples=20, seed=0):
    """Coherence of the convolution structure with the complex differentials.

    Verifies (a) alpha^{*N} = 0 up to degree m_max for the morphism-derived
    alpha, (b) d_alpha equals the K(f) differential on slices t <= m_max,
    and (c) d_alpha o d_beta = d_{alpha*beta} for random graded maps.
    """
    import random
    ctx = ConvolutionContext(source, target)
    N = source.N
    alpha = GradedMap.from_morphism(morphism)
    power = ctx.convolution_power(alpha, N, m_max)
    if not power.is_zero():
        return False
    for t in range(m_max + 1):
        dmat = ctx.d_alpha_matrix(alpha, t)
        if not _sparse_equal(dmat, _k_differential_total(morphism, t)):
            return False
    rng = random.Random(seed)
    for _ in range(samples):
        a = _random_graded_map(ctx, m_max, rng)
        b = _random_graded_map(ctx, m_max, rng)
        t = rng.randrange(m_max + 1)
        da = ctx.d_alpha_matrix(a, t)
        db = ctx.d_alpha_matrix(b, t)
        dab = ctx.d_alpha_matrix(ctx.convolve(a, b, t), t)
        if not _sparse_equal(da.compose(db), dab):
            return False
    return True


def _random_graded_map(ctx, m_max, rng):
    comps = {}
    field = ctx.field
    for m in range(m_max + 1):
        wm = ctx.side.dim(m)
        cm = ctx.target.dim(m)
        if wm == 0 or cm == 0:
            continue
        mat = Matrix.zeros(field, cm, wm)
        for i in range(cm):
            for j in range(wm):
                mat.rows[i][j] = field.coerce(rng.randint(-3, 3))
        comps[m] = mat
    return GradedMap(comps)


def _k_differential_total(morphism, t):
    """All K(f)^t differentials assembled as one endo-sized sparse matrix."""
    sl = koszul_K(morphism, t)
    side = dual_side(morphism.source)
    field = morphism.source.field
    dims = []
    offsets = []
    off = 0
    for m in range(t + 1):
        offsets.append(off)
        d = morphism.target.dim(t - m) * side.dim(m)
        dims.append(d)
        off += d
    total = off
    cols = [dict() for _ in range(total)]
    for m in range(1, t + 1):
        k = t - m  # position index in the slice
        mat = sl.differential(k)
        for j, col in enumerate(mat.cols):
            src = offsets[m] + j
            for i, v in col.items():
                cols[src][offsets[m - 1] + i] = v
    return SparseMatrix(field, total, total, cols)
