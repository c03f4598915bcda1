"""Lexicographic reduction operators on tensor degrees of a free algebra.

A subspace R of E^(x)n determines an idempotent S on E^(x)n that fixes
words outside the leading-word set of R and rewrites each leading word
into strictly lexicographically smaller ones, with Ker S = R.  Pivoting
here runs over DESCENDING lex word order (pivot = greatest word of each
relation) -- the opposite of the linear-algebra default -- because
rewrites must decrease words.
"""

from collections import namedtuple

from .errors import ContractViolation, DimensionMismatch
from .linalg import LinearMap, Matrix, Subspace, kernel, rref
from .words import block_embed, index_word, word_index


class ReductionOperator:
    """Idempotent rewrite operator attached to a relation subspace."""

    def __init__(self, n, operator, leading_words, relations):
        self.n = n
        self.S = operator
        self.leading_words = leading_words
        self.relations = relations

    def apply(self, vector):
        return self.S.apply(vector)

    def image_words(self):
        """The words fixed by S; they span Im(S)."""
        lead = set(self.leading_words)
        return [w for w in range(self.S.domain_dim) if w not in lead]

    def __repr__(self):
        return "ReductionOperator(n=%d, leading=%r)" % (
            self.n, list(self.leading_words))


def _descending_rref(relations):
    """RREF with pivots at the greatest word of each relation."""
    field = relations.field
    amb = relations.ambient_dim
    flipped = [list(reversed(list(row))) for row in relations.basis.rows]
    reduced, pivots = rref(Matrix.from_rows(field, flipped, ncols=amb))
    rows = [list(reversed(list(row))) for row in reduced.rows]
    leads = [amb - 1 - p for p in pivots]
    return rows, leads


def reduction_operator(relations, word_length):
    """Build S from R, then verify idempotence, descent and Ker S = R."""
    field = relations.field
    amb = relations.ambient_dim
    rows, leads = _descending_rref(relations)
    mat = Matrix.identity(field, amb)
    for row, lead in zip(rows, leads):
        for w, c in enumerate(row):
            mat.rows[w][lead] = field.neg(c) if w != lead else field.zero
    op = LinearMap(mat)
    lead_set = set(leads)
    for a in range(amb):
        col = [mat.rows[i][a] for i in range(amb)]
        if a in lead_set:
            if any(col[w] for w in range(a, amb)):
                raise ContractViolation("rewrite of word %d does not descend" % a)
        else:
            if any(col[w] for w in range(amb) if w != a) or col[a] != field.one:
                raise ContractViolation("word %d should be fixed" % a)
    if op.compose(op).matrix != mat:
        raise ContractViolation("operator is not idempotent")
    if kernel(op) != relations:
        raise ContractViolation("kernel differs from the relation space")
    return ReductionOperator(word_length, op, sorted(lead_set), relations)


Lemma3Result = namedtuple("Lemma3Result", ["equal", "conclusion"])


def lemma3_check(relations, r, dim_e):
    """Decide R (x) E^r = E^r (x) R; equality forces R = 0 or R = E^(x)n.

    Returns (equal, conclusion) with conclusion one of "Zero", "Full",
    "NotEqual".  Equality with 0 < dim R < full raises, since that would
    contradict the dichotomy.
    """
    if r < 1:
        raise DimensionMismatch("r must be at least 1")
    amb = relations.ambient_dim
    left = block_embed(relations, dim_e, 0, r)
    right = block_embed(relations, dim_e, r, 0)
    if left != right:
        return Lemma3Result(False, "NotEqual")
    if relations.dim == 0:
        return Lemma3Result(True, "Zero")
    if relations.dim == amb:
        return Lemma3Result(True, "Full")
    raise ContractViolation(
        "commuting relation space of intermediate dimension %d" % relations.dim)


def monomial_rotation_closure(words, r, alphabet_size):
    """Close a set of words under left-truncation by r letters plus any suffix.

    If the span of the word set commutes with E^(x)r, every word reachable
    this way must also lie in it, so closure = all words certifies that
    the monomial equality case forces fullness.
    """
    if r < 1:
        raise DimensionMismatch("r must be at least 1")
    closure = set(tuple(w) for w in words)
    suffixes = [index_word(i, alphabet_size, r) for i in range(alphabet_size ** r)]
    frontier = list(closure)
    while frontier:
        word = frontier.pop()
        stem = word[r:]
        for s in suffixes:
            new = stem + s
            if new not in closure:
                closure.add(new)
                frontier.append(new)
    return closure


def monomial_subspace(field, dim_e, n, words):
    """Span of unit vectors at the given words inside E^(x)n."""
    amb = dim_e ** n
    rows = []
    for w in words:
        row = [0] * amb
        row[word_index(tuple(w), dim_e)] = 1
        rows.append(row)
    return Subspace.from_vectors(field, amb, rows)
