"""Words over a finite alphabet as coordinates of tensor powers.

A word of length n over an alphabet of size g is a tuple of letters in
range(g); it indexes a basis vector of the n-th tensor power of a
g-dimensional space via the base-g expansion (leftmost letter most
significant), so lexicographic word order matches index order.
"""

from .errors import DimensionMismatch
from .linalg import LinearMap, Matrix, Subspace, kernel, rref


def word_index(word, alphabet_size):
    """Index of a word (tuple of letters) in the length-len(word) basis."""
    idx = 0
    for letter in word:
        if not 0 <= letter < alphabet_size:
            raise DimensionMismatch(
                "letter %r outside alphabet of size %d" % (letter, alphabet_size))
        idx = idx * alphabet_size + letter
    return idx


def index_word(idx, alphabet_size, length):
    """Inverse of word_index for words of the given length."""
    if not 0 <= idx < alphabet_size ** length:
        raise DimensionMismatch("index %d out of range" % idx)
    letters = []
    for _ in range(length):
        idx, r = divmod(idx, alphabet_size)
        letters.append(r)
    return tuple(reversed(letters))


class WordBasis:
    """The basis of n-letter words over a fixed alphabet."""

    __slots__ = ("alphabet_size", "length", "size")

    def __init__(self, alphabet_size, length):
        self.alphabet_size = alphabet_size
        self.length = length
        self.size = alphabet_size ** length

    def index(self, word):
        if len(word) != self.length:
            raise DimensionMismatch("word length %d != %d" % (len(word), self.length))
        return word_index(word, self.alphabet_size)

    def word(self, idx):
        return index_word(idx, self.alphabet_size, self.length)

    def words(self):
        for i in range(self.size):
            yield self.word(i)

    def label(self, idx, names):
        word = self.word(idx)
        if not word:
            return "1"
        return ".".join(names[letter] for letter in word)


def interleave_index(sep_index, n_blocks, dim_a, dim_b):
    """Separated index (word over A then word over B) -> interleaved index.

    The separated basis vector e_u (x) e_v of A^(x)n (x) B^(x)n maps to the
    basis vector of (A (x) B)^(x)n whose k-th factor is a_{u_k} (x) b_{v_k};
    the shuffle moves positions, never values.
    """
    u_index, v_index = divmod(sep_index, dim_b ** n_blocks)
    u = index_word(u_index, dim_a, n_blocks)
    v = index_word(v_index, dim_b, n_blocks)
    pair_dim = dim_a * dim_b
    idx = 0
    for a, b in zip(u, v):
        idx = idx * pair_dim + (a * dim_b + b)
    return idx


def interleaving_permutation(n_blocks, dim_a, dim_b):
    """List P with P[separated index] = interleaved index."""
    total = (dim_a * dim_b) ** n_blocks
    perm = [0] * total
    for s in range(total):
        perm[s] = interleave_index(s, n_blocks, dim_a, dim_b)
    return perm


def shuffle_map(field, n_blocks, dim_a, dim_b):
    """The deinterleaving isomorphism (A (x) B)^(x)n -> A^(x)n (x) B^(x)n.

    Sends the k-th pair factor a (x) b to the k-th slot of each side; its
    matrix is the permutation with entry 1 at (separated, interleaved).
    """
    perm = interleaving_permutation(n_blocks, dim_a, dim_b)
    total = len(perm)
    mat = Matrix.zeros(field, total, total)
    for sep, inter in enumerate(perm):
        mat.rows[sep][inter] = field.one
    return LinearMap(mat)


def interleave_subspace(subspace, n_blocks, dim_a, dim_b):
    """Reinterpret a subspace of A^(x)n (x) B^(x)n inside (A (x) B)^(x)n."""
    expected = (dim_a ** n_blocks) * (dim_b ** n_blocks)
    if subspace.ambient_dim != expected:
        raise DimensionMismatch("subspace not in the separated tensor space")
    perm = interleaving_permutation(n_blocks, dim_a, dim_b)
    field = subspace.field
    total = len(perm)
    vectors = []
    for row in subspace.basis.rows:
        vec = [field.zero] * total
        for sep, c in enumerate(row):
            if c:
                vec[perm[sep]] = c
        vectors.append(vec)
    return Subspace.from_vectors(field, total, vectors)


def annihilator(subspace):
    """The subspace of the dual space pairing to zero with the input.

    Coordinates of the dual space are taken in the dual basis, so the
    annihilator of a subspace of words is again a subspace of words.
    """
    return kernel(LinearMap(subspace.basis))


def tensor_subspace(a, b):
    """S (x) T inside the tensor product of the ambient spaces.

    The Kronecker product of two RREF bases is again an RREF basis (pivot
    of row (i,k) sits at column (p_i, q_k), and pivot columns stay unit),
    so the canonical form needs no further reduction.
    """
    if a.field != b.field:
        raise DimensionMismatch("tensor_subspace: field mismatch")
    ambient = a.ambient_dim * b.ambient_dim
    basis = a.basis.kron(b.basis)
    pivots = tuple(p * b.ambient_dim + q for p in a.pivots for q in b.pivots)
    out = Subspace(a.field, ambient, basis, pivots)
    return out


def block_embed(relations, dim_e, left, right):
    """E^(x)left (x) R (x) E^(x)right as a subspace of E^(x)(left+N+right)."""
    field = relations.field
    sub = relations
    if right:
        sub = tensor_subspace(sub, Subspace.full(field, dim_e ** right))
    if left:
        sub = tensor_subspace(Subspace.full(field, dim_e ** left), sub)
    return sub
