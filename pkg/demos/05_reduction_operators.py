"""
Reduction operators and two-sided stability
===========================================

A relation space R in degree N defines a rewrite operator S: it fixes
every word that is not the leading word of a relation, and rewrites each
leading word into strictly smaller ones.  S is idempotent, its kernel is
exactly R, and tensoring with the identity reduces longer words.
"""

from nkoszul import (QQ, Subspace, WordBasis, lemma3_check,
                     monomial_rotation_closure, reduction_operator,
                     symmetric_algebra)

poly = symmetric_algebra(2, gen_names=["x", "y"])
basis = WordBasis(2, 2)
names = poly.gen_names

op = reduction_operator(poly.relations, 2)
print("leading words:", [basis.label(w, names) for w in op.leading_words])
print("fixed words  :", [basis.label(w, names) for w in op.image_words()])
print()

# Rewriting y.x: the relation x.y - y.x sends it to x.y.
vec = [QQ.zero] * 4
vec[basis.index((1, 0))] = QQ.one
out = op.apply(vec)
terms = ["%s %s" % (c, basis.label(w, names))
         for w, c in enumerate(out) if c]
print("S(y.x) =", " + ".join(terms))
print()

# Idempotence and the kernel property hold by construction and are
# re-verified every time an operator is built.
twice = op.apply(out)
print("S(S(y.x)) equals S(y.x):", twice == out)
print()

# A relation space that commutes with one extra tensor slot is forced to
# be 0 or everything.  Monomial examples show the dichotomy directly:
# the rotation closure of a proper set of words always escapes it.
full = Subspace.full(QQ, 4)
zero = Subspace.zero(QQ, 4)
print("R = 0        :", lemma3_check(zero, 1, 2))
print("R = all words:", lemma3_check(full, 1, 2))
print("R = span(x.y):", lemma3_check(
    Subspace.from_vectors(QQ, 4, [[0, 1, 0, 0]]), 1, 2))
print()

closure = monomial_rotation_closure([(0, 1)], 1, 2)
print("rotation closure of {x.y}:",
      sorted(".".join(names[letter] for letter in word)
             for word in closure))
