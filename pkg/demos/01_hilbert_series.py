"""
Hilbert series of homogeneous algebras
======================================

An algebra here is a quotient of the free (tensor) algebra on a finite
set of generators by the two-sided ideal generated by a space of
homogeneous relations, all of one degree N.  The first thing to ask of
such an algebra is the dimension of each graded component.
"""

from pathlib import Path

from nkoszul import (free_algebra, full_relations_algebra, parse_definition,
                     symmetric_algebra)

HERE = Path(__file__).parent

# Build a few algebras directly.
poly = symmetric_algebra(2, gen_names=["x", "y"])
free = free_algebra(2, 3)
trunc = full_relations_algebra(1, 3, gen_names=["d"])

print("polynomials K[x,y]      ", poly.hilbert_dims(8))
print("free on 2 generators    ", free.hilbert_dims(8))
print("truncated at d^3        ", trunc.hilbert_dims(8))

# The same data can come from a definition file.
cubic = parse_definition((HERE / "definitions" / "cubic.alg").read_text(),
                         source="cubic.alg").to_algebra()
print("one cubic relation      ", cubic.hilbert_dims(8))

# A single relation in degree 3 removes one word in degree 3, and the
# deficit propagates: dim A_n = 2 dim A_{n-1} - dim A_{n-3} while the
# ideal stays "generic" in low degrees.
for n in range(3, 9):
    predicted = 2 * cubic.dim(n - 1) - cubic.dim(n - 3)
    print("degree %d: dim %3d, generic recursion gives %3d"
          % (n, cubic.dim(n), predicted))

# The command line prints the same numbers:
#   nkoszul hilbert demos/definitions/cubic.alg --nmax 8
